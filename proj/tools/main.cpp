#include <canonform/report.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace canonform;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// "rational" or "gf<p>", e.g. gf7
FieldDescriptor parse_field_flag(const std::string& value) {
    if (value == "rational" || value == "q") return FieldDescriptor::rationals();
    if (value.rfind("gf", 0) == 0) {
        const std::string digits = value.substr(2);
        if (!digits.empty() && digits.size() <= 10 &&
            digits.find_first_not_of("0123456789") == std::string::npos) {
            return FieldDescriptor::gf(std::stoull(digits));
        }
    }
    throw ParseError("bad --field value '" + value + "', expected rational or gf<p>");
}

struct SubcommandState {
    std::vector<std::string> files;
    std::string field_flag;
    std::string format_flag = "text";
    bool with_transform = false;
    bool with_witness = false;
    bool verify = true;
    std::string cert_form_path;
    std::string cert_transform_path;
};

void add_common_flags(CLI::App* sub, SubcommandState& state) {
    sub->add_option("--field", state.field_flag,
                    "Override the file's field: rational or gf<p> (e.g. gf7)");
    sub->add_option("--format", state.format_flag, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--verify,!--no-verify", state.verify,
                  "Self-check certificates before emitting (default on)");
}

int run(Command command, const SubcommandState& state) {
    CommandOptions options;
    options.format = state.format_flag == "json" ? ReportFormat::Json : ReportFormat::Text;
    options.with_transform = state.with_transform;
    options.with_witness = state.with_witness;
    options.verify = state.verify;
    if (!state.field_flag.empty()) options.field_override = parse_field_flag(state.field_flag);
    if (!state.cert_form_path.empty()) {
        options.certificate_form_text = read_file(state.cert_form_path);
    }
    if (!state.cert_transform_path.empty()) {
        options.certificate_transform_text = read_file(state.cert_transform_path);
    }

    std::vector<std::string> inputs;
    for (const std::string& path : state.files) inputs.push_back(read_file(path));

    const Report report = run_command(command, inputs, options);
    std::cout << emit_report(report, options.format);
    return report.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Smith, Jordan and rational canonical forms with checkable certificates"};
    app.require_subcommand(1);

    struct Entry {
        Command command;
        CLI::App* sub;
        SubcommandState state;
    };
    std::vector<Entry> entries;
    entries.reserve(7);

    const auto add = [&](Command command, const char* name, const char* desc,
                         std::size_t n_files) -> Entry& {
        entries.push_back({command, app.add_subcommand(name, desc), {}});
        Entry& e = entries.back();
        e.sub->add_option("files", e.state.files, "Matrix file(s)")
            ->expected(static_cast<int>(n_files))
            ->required();
        add_common_flags(e.sub, e.state);
        return e;
    };

    Entry& smith = add(Command::Smith, "smith",
                       "Smith normal form of the characteristic matrix", 1);
    smith.sub->add_flag("--with-transform", smith.state.with_transform,
                        "Include D, P, Q, Qinv in the report");
    Entry& jordan = add(Command::Jordan, "jordan", "Jordan form with similarity transform", 1);
    jordan.sub->add_flag("--with-transform", jordan.state.with_transform,
                         "Include the transform in the report");
    Entry& rational =
        add(Command::Rational, "rational", "Rational canonical form with transform", 1);
    rational.sub->add_flag("--with-transform", rational.state.with_transform,
                           "Include the transform in the report");
    add(Command::CharPoly, "charpoly", "Characteristic polynomial", 1);
    add(Command::MinPoly, "minpoly", "Minimal polynomial", 1);
    Entry& sim = add(Command::Similar, "similar", "Decide similarity of two matrices", 2);
    sim.sub->add_flag("--with-witness", sim.state.with_witness,
                      "Compute and verify an explicit conjugating witness");
    Entry& verify = add(Command::Verify, "verify",
                        "Verify recomputed or externally supplied certificates", 1);
    verify.sub->add_option("--form", verify.state.cert_form_path,
                           "Certificate form matrix file");
    verify.sub->add_option("--transform", verify.state.cert_transform_path,
                           "Certificate transform matrix file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 3;
    }

    try {
        for (const Entry& e : entries) {
            if (e.sub->parsed()) return run(e.command, e.state);
        }
        return 3;
    } catch (const canonform::CertificateInvalid& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const canonform::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
