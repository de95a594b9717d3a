#ifndef CANONFORM_REPORT_HPP
#define CANONFORM_REPORT_HPP

#include <canonform/canonical.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace canonform {

struct MatrixFile {
    FieldDescriptor field;
    std::size_t n;
    DenseMatrix matrix;
};

// Grammar: comments run from '#' to end of line, blank lines are ignored;
// first content line "field rational" or "field gf <p>", second "rows <n>",
// then n lines of n whitespace-separated scalars. With an override the
// entries are reparsed in the overriding field.
MatrixFile parse_matrix_file(const std::string& text,
                             const std::optional<FieldDescriptor>& field_override = {});

// Inverse of parse_matrix_file, canonical spelling (no comments).
std::string format_matrix_file(const MatrixFile& file);

enum class Command { Smith, Jordan, Rational, CharPoly, MinPoly, Similar, Verify };
enum class ReportFormat { Text, Json };

struct CommandOptions {
    ReportFormat format = ReportFormat::Text;
    bool with_transform = false;
    bool with_witness = false;
    bool verify = true; // self-check certificates before emitting
    std::optional<FieldDescriptor> field_override;
    // verify command only: externally supplied certificate
    std::optional<std::string> certificate_form_text;
    std::optional<std::string> certificate_transform_text;
};

struct Report {
    std::string command;
    FieldDescriptor field;
    std::size_t n;
    std::string digest; // fnv-1a 64 over the raw input bytes
    nlohmann::ordered_json result;
    std::string text; // rendered text payload
    int exit_code = 0;
};

// input_texts are raw matrix file contents: one entry, two for Similar.
// CharPolyDoesNotSplit is turned into an error report with exit code 2;
// parse errors and internal certificate failures propagate as exceptions.
Report run_command(Command command, const std::vector<std::string>& input_texts,
                   const CommandOptions& options);

std::string emit_report(const Report& report, ReportFormat format);

const char* command_name(Command command);

// JSON renderings shared with the report payloads.
nlohmann::ordered_json scalar_json(const Scalar& s);
nlohmann::ordered_json polynomial_json(const Polynomial& f); // ascending coeff strings
nlohmann::ordered_json matrix_json(const DenseMatrix& A);
nlohmann::ordered_json polymatrix_json(const PolyMatrix& M);

std::string fnv1a_digest(const std::string& bytes);

} // namespace canonform

#endif
