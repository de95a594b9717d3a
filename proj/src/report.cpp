#include <canonform/report.hpp>

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <vector>

namespace canonform {

namespace {

struct Token {
    std::string text;
    std::size_t line, column; // 1-based
};

// Comment-stripped whitespace tokens, grouped by line.
std::vector<std::vector<Token>> tokenize_lines(const std::string& text) {
    std::vector<std::vector<Token>> lines;
    std::size_t line_no = 0;
    std::istringstream stream(text);
    std::string raw;
    while (std::getline(stream, raw)) {
        ++line_no;
        std::vector<Token> tokens;
        std::size_t i = 0;
        while (i < raw.size()) {
            if (raw[i] == '#') break;
            if (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r') {
                ++i;
                continue;
            }
            const std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r' &&
                   raw[i] != '#') {
                ++i;
            }
            tokens.push_back({raw.substr(start, i - start), line_no, start + 1});
        }
        if (!tokens.empty()) lines.push_back(std::move(tokens));
    }
    return lines;
}

std::size_t parse_size(const Token& token) {
    if (token.text.empty() || token.text.size() > 10 ||
        !std::all_of(token.text.begin(), token.text.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError("expected a number, got '" + token.text + "'", token.line, token.column);
    }
    return static_cast<std::size_t>(std::stoull(token.text));
}

} // namespace

MatrixFile parse_matrix_file(const std::string& text,
                             const std::optional<FieldDescriptor>& field_override) {
    const auto lines = tokenize_lines(text);
    if (lines.size() < 2) throw ParseError("expected 'field' and 'rows' header lines");

    const auto& field_line = lines[0];
    if (field_line[0].text != "field") {
        throw ParseError("expected 'field' header", field_line[0].line, field_line[0].column);
    }
    FieldDescriptor declared = FieldDescriptor::rationals();
    if (field_line.size() == 2 && field_line[1].text == "rational") {
        // declared above
    } else if (field_line.size() == 3 && field_line[1].text == "gf") {
        declared = FieldDescriptor::gf(parse_size(field_line[2]));
    } else {
        throw ParseError("expected 'field rational' or 'field gf <p>'", field_line[0].line,
                         field_line[0].column);
    }
    const FieldDescriptor field = field_override.value_or(declared);

    const auto& rows_line = lines[1];
    if (rows_line.size() != 2 || rows_line[0].text != "rows") {
        throw ParseError("expected 'rows <n>'", rows_line[0].line, rows_line[0].column);
    }
    const std::size_t n = parse_size(rows_line[1]);
    if (n == 0) throw ParseError("rows must be positive", rows_line[1].line, rows_line[1].column);

    if (lines.size() - 2 != n) {
        throw DimensionError("expected " + std::to_string(n) + " entry rows, got " +
                             std::to_string(lines.size() - 2));
    }
    DenseMatrix matrix = DenseMatrix::zero(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = lines[2 + i];
        if (row.size() != n) {
            throw DimensionError("row " + std::to_string(i + 1) + " has " +
                                 std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(n) + " (line " + std::to_string(row[0].line) +
                                 ")");
        }
        for (std::size_t j = 0; j < n; ++j) {
            try {
                matrix(i, j) = parse_scalar(row[j].text, field);
            } catch (const ParseError&) {
                throw ParseError("bad scalar '" + row[j].text + "'", row[j].line, row[j].column);
            } catch (const DivisionByZero& e) {
                throw ParseError(e.what(), row[j].line, row[j].column);
            }
        }
    }
    return MatrixFile{field, n, std::move(matrix)};
}

std::string format_matrix_file(const MatrixFile& file) {
    std::string out = "field ";
    if (file.field.is_rationals()) {
        out += "rational";
    } else {
        out += "gf " + std::to_string(file.field.modulus());
    }
    out += "\nrows " + std::to_string(file.n) + "\n";
    for (std::size_t i = 0; i < file.n; ++i) {
        for (std::size_t j = 0; j < file.n; ++j) {
            if (j > 0) out += ' ';
            out += file.matrix(i, j).str();
        }
        out += '\n';
    }
    return out;
}

const char* command_name(Command command) {
    switch (command) {
    case Command::Smith: return "smith";
    case Command::Jordan: return "jordan";
    case Command::Rational: return "rational";
    case Command::CharPoly: return "charpoly";
    case Command::MinPoly: return "minpoly";
    case Command::Similar: return "similar";
    case Command::Verify: return "verify";
    }
    return "?";
}

nlohmann::ordered_json scalar_json(const Scalar& s) { return s.str(); }

nlohmann::ordered_json polynomial_json(const Polynomial& f) {
    auto arr = nlohmann::ordered_json::array();
    for (const Scalar& c : f.coeffs()) arr.push_back(c.str());
    return arr;
}

nlohmann::ordered_json matrix_json(const DenseMatrix& A) {
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < A.rows(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < A.cols(); ++j) row.push_back(A(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::ordered_json polymatrix_json(const PolyMatrix& M) {
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(polynomial_json(M(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (std::size_t i = 16; i-- > 0;) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

namespace {

std::string matrix_grid(const DenseMatrix& A, const std::string& indent = "  ") {
    std::vector<std::size_t> widths(A.cols(), 0);
    for (std::size_t j = 0; j < A.cols(); ++j) {
        for (std::size_t i = 0; i < A.rows(); ++i) {
            widths[j] = std::max(widths[j], A(i, j).str().size());
        }
    }
    std::string out;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        out += indent + "[";
        for (std::size_t j = 0; j < A.cols(); ++j) {
            const std::string cell = A(i, j).str();
            out += ' ' + std::string(widths[j] - cell.size(), ' ') + cell;
        }
        out += " ]\n";
    }
    return out;
}

std::string polymatrix_grid(const PolyMatrix& M, const std::string& indent = "  ") {
    std::vector<std::size_t> widths(M.cols(), 0);
    for (std::size_t j = 0; j < M.cols(); ++j) {
        for (std::size_t i = 0; i < M.rows(); ++i) {
            widths[j] = std::max(widths[j], to_string(M(i, j)).size());
        }
    }
    std::string out;
    for (std::size_t i = 0; i < M.rows(); ++i) {
        out += indent + "[";
        for (std::size_t j = 0; j < M.cols(); ++j) {
            const std::string cell = to_string(M(i, j));
            out += ' ' + std::string(widths[j] - cell.size(), ' ') + cell;
        }
        out += " ]\n";
    }
    return out;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

Report make_report(Command command, const FieldDescriptor& field, std::size_t n,
                   const std::vector<std::string>& input_texts) {
    std::string bytes;
    for (const std::string& t : input_texts) bytes += t;
    return Report{command_name(command), field, n, fnv1a_digest(bytes),
                  nlohmann::ordered_json::object(), "", 0};
}

Report does_not_split_report(Command command, const FieldDescriptor& field, std::size_t n,
                             const std::vector<std::string>& input_texts,
                             const CharPolyDoesNotSplit& error) {
    Report report = make_report(command, field, n, input_texts);
    report.result["error"] = "does_not_split";
    report.result["remainder"] = polynomial_json(error.remainder());
    report.result["remainder_pretty"] = to_string(error.remainder());
    report.text = "error: " + std::string(error.what()) + "\n";
    report.exit_code = 2;
    return report;
}

void run_smith(Report& report, const DenseMatrix& A, const CommandOptions& options) {
    const SmithDecomposition S = smith_normal_form(char_matrix(A));
    bool verified = false;
    if (options.verify) {
        verified = verify_smith_identity(A, S) && is_unimodular(S.P) && is_unimodular(S.Q);
        if (!verified) throw CertificateInvalid("smith decomposition failed self-check");
    }

    auto diag = nlohmann::ordered_json::array();
    for (const Polynomial& d : S.diag) diag.push_back(polynomial_json(d));
    auto factors = nlohmann::ordered_json::array();
    std::string factors_text;
    for (const Polynomial& d : S.diag) {
        if (d.degree() >= 1) {
            factors.push_back(polynomial_json(d));
            factors_text += "  " + to_string(d) + "\n";
        }
    }
    report.result["diag"] = std::move(diag);
    report.result["invariant_factors"] = std::move(factors);
    if (options.with_transform) {
        report.result["D"] = polymatrix_json(S.D);
        report.result["P"] = polymatrix_json(S.P);
        report.result["Q"] = polymatrix_json(S.Q);
        report.result["Qinv"] = polymatrix_json(S.Qinv);
    }
    report.result["verified"] = verified;

    report.text += "diag:\n";
    for (const Polynomial& d : S.diag) report.text += "  " + to_string(d) + "\n";
    report.text += "invariant factors:\n" + factors_text;
    if (options.with_transform) {
        report.text += "D:\n" + polymatrix_grid(S.D);
        report.text += "P:\n" + polymatrix_grid(S.P);
        report.text += "Q:\n" + polymatrix_grid(S.Q);
        report.text += "Qinv:\n" + polymatrix_grid(S.Qinv);
    }
    report.text += "verified: " + bool_str(verified) + "\n";
}

void run_form(Report& report, const DenseMatrix& A, FormKind kind,
              const CommandOptions& options) {
    const CanonicalResult result = kind == FormKind::Jordan ? jordan_form(A) : rational_form(A);
    bool verified = false;
    if (options.verify) {
        verified = verify_similarity(A, result);
        if (!verified) throw CertificateInvalid("canonical form failed self-check");
    }

    auto blocks = nlohmann::ordered_json::array();
    std::string blocks_text;
    if (kind == FormKind::Jordan) {
        for (const ElementaryDivisor& b : result.jordan_blocks) {
            blocks.push_back({{"eigenvalue", b.eigenvalue.str()}, {"size", b.exponent}});
            blocks_text +=
                "  eigenvalue " + b.eigenvalue.str() + "  size " + std::to_string(b.exponent) +
                "\n";
        }
    } else {
        for (const Polynomial& g : result.rational_blocks) {
            blocks.push_back(polynomial_json(g));
            blocks_text += "  " + to_string(g) + "\n";
        }
    }
    report.result["blocks"] = std::move(blocks);
    report.result["form"] = matrix_json(result.form);
    if (options.with_transform) report.result["transform"] = matrix_json(result.transform);
    report.result["verified"] = verified;

    report.text += "blocks:\n" + blocks_text;
    report.text += "form:\n" + matrix_grid(result.form);
    if (options.with_transform) report.text += "transform:\n" + matrix_grid(result.transform);
    report.text += "verified: " + bool_str(verified) + "\n";
}

void run_poly(Report& report, const DenseMatrix& A, bool minimal, const CommandOptions& options) {
    const Polynomial f = minimal ? min_poly(A) : char_poly(A);
    bool verified = false;
    if (options.verify) {
        verified = eval(f, A).is_zero();
        if (!verified) throw CertificateInvalid("polynomial does not annihilate the matrix");
    }
    report.result["polynomial"] = polynomial_json(f);
    report.result["pretty"] = to_string(f);
    report.result["verified"] = verified;
    report.text += "polynomial: " + to_string(f) + "\n";
    report.text += "verified: " + bool_str(verified) + "\n";
}

void run_similar(Report& report, const DenseMatrix& A, const DenseMatrix& B,
                 const CommandOptions& options) {
    const SimilarityCertificate cert = similar(A, B, options.with_witness);

    auto left = nlohmann::ordered_json::array();
    auto right = nlohmann::ordered_json::array();
    std::string left_text, right_text;
    for (const Polynomial& d : cert.invariants_left.factors) {
        left.push_back(polynomial_json(d));
        left_text += "  " + to_string(d) + "\n";
    }
    for (const Polynomial& d : cert.invariants_right.factors) {
        right.push_back(polynomial_json(d));
        right_text += "  " + to_string(d) + "\n";
    }
    report.result["similar"] = cert.similar;
    report.result["invariants_left"] = std::move(left);
    report.result["invariants_right"] = std::move(right);
    report.text += "similar: " + bool_str(cert.similar) + "\n";
    report.text += "invariant factors (left):\n" + left_text;
    report.text += "invariant factors (right):\n" + right_text;
    if (cert.witness) {
        report.result["witness"] = matrix_json(*cert.witness);
        report.result["verified"] = true; // similar() verifies the witness it returns
        report.text += "witness:\n" + matrix_grid(*cert.witness);
        report.text += "verified: true\n";
    }
}

void run_verify(Report& report, const DenseMatrix& A, const CommandOptions& options) {
    if (options.certificate_form_text || options.certificate_transform_text) {
        if (!options.certificate_form_text || !options.certificate_transform_text) {
            throw ParseError("certificate check needs both a form and a transform file");
        }
        const MatrixFile form_file =
            parse_matrix_file(*options.certificate_form_text, options.field_override);
        const MatrixFile transform_file =
            parse_matrix_file(*options.certificate_transform_text, options.field_override);
        require_same_field(A.field(), form_file.field);
        require_same_field(A.field(), transform_file.field);

        bool valid = false;
        std::string kind = "unknown";
        if (const auto blocks = detect_form_blocks(form_file.matrix)) {
            kind = blocks->kind == FormKind::Jordan ? "jordan" : "rational";
            const CanonicalResult candidate{blocks->kind, form_file.matrix,
                                            transform_file.matrix, blocks->jordan_blocks,
                                            blocks->rational_blocks, {}};
            valid = verify_similarity(A, candidate);
        }
        report.result["kind"] = kind;
        report.result["certificate_valid"] = valid;
        report.text += "kind: " + kind + "\n";
        report.text += "certificate valid: " + bool_str(valid) + "\n";
        if (!valid) report.exit_code = 4;
        return;
    }

    // self-check mode: recompute everything checkable for this matrix
    const SmithDecomposition S = smith_normal_form(char_matrix(A));
    const bool smith_ok = verify_smith_identity(A, S);
    const bool p_ok = is_unimodular(S.P);
    const bool q_ok = is_unimodular(S.Q);
    const bool rational_ok = verify_similarity(A, rational_form(A));

    bool splits = true;
    bool jordan_ok = true;
    Polynomial remainder = Polynomial::one(A.field());
    try {
        jordan_ok = verify_similarity(A, jordan_form(A));
    } catch (const CharPolyDoesNotSplit& e) {
        splits = false;
        jordan_ok = true; // nothing to verify
        remainder = e.remainder();
    }

    report.result["smith_identity"] = smith_ok;
    report.result["unimodular_P"] = p_ok;
    report.result["unimodular_Q"] = q_ok;
    report.result["rational_certificate"] = rational_ok;
    report.result["charpoly_splits"] = splits;
    if (splits) {
        report.result["jordan_certificate"] = jordan_ok;
    } else {
        report.result["nonsplit_remainder"] = polynomial_json(remainder);
    }

    report.text += "smith identity: " + bool_str(smith_ok) + "\n";
    report.text += "unimodular P: " + bool_str(p_ok) + "\n";
    report.text += "unimodular Q: " + bool_str(q_ok) + "\n";
    report.text += "rational certificate: " + bool_str(rational_ok) + "\n";
    report.text += "charpoly splits: " + bool_str(splits) + "\n";
    if (splits) {
        report.text += "jordan certificate: " + bool_str(jordan_ok) + "\n";
    } else {
        report.text += "nonsplit remainder: " + to_string(remainder) + "\n";
    }
    if (!(smith_ok && p_ok && q_ok && rational_ok && jordan_ok)) report.exit_code = 4;
}

} // namespace

Report run_command(Command command, const std::vector<std::string>& input_texts,
                   const CommandOptions& options) {
    const std::size_t expected_inputs = command == Command::Similar ? 2 : 1;
    if (input_texts.size() != expected_inputs) {
        throw ParseError(std::string(command_name(command)) + " takes " +
                         std::to_string(expected_inputs) + " matrix file(s)");
    }

    const MatrixFile first = parse_matrix_file(input_texts[0], options.field_override);
    Report report = make_report(command, first.field, first.n, input_texts);

    try {
        switch (command) {
        case Command::Smith:
            run_smith(report, first.matrix, options);
            break;
        case Command::Jordan:
            run_form(report, first.matrix, FormKind::Jordan, options);
            break;
        case Command::Rational:
            run_form(report, first.matrix, FormKind::Rational, options);
            break;
        case Command::CharPoly:
            run_poly(report, first.matrix, false, options);
            break;
        case Command::MinPoly:
            run_poly(report, first.matrix, true, options);
            break;
        case Command::Similar: {
            const MatrixFile second = parse_matrix_file(input_texts[1], options.field_override);
            run_similar(report, first.matrix, second.matrix, options);
            break;
        }
        case Command::Verify:
            run_verify(report, first.matrix, options);
            break;
        }
    } catch (const CharPolyDoesNotSplit& e) {
        return does_not_split_report(command, first.field, first.n, input_texts, e);
    }
    return report;
}

std::string emit_report(const Report& report, ReportFormat format) {
    if (format == ReportFormat::Json) {
        nlohmann::ordered_json doc;
        doc["command"] = report.command;
        doc["field"] = report.field.name();
        doc["n"] = report.n;
        doc["digest"] = report.digest;
        doc["result"] = report.result;
        return doc.dump(2) + "\n";
    }
    std::string out;
    out += "command: " + report.command + "\n";
    out += "field: " + report.field.name() + "\n";
    out += "n: " + std::to_string(report.n) + "\n";
    out += "digest: " + report.digest + "\n";
    out += report.text;
    return out;
}

} // namespace canonform
