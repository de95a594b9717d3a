#include <canonform/report.hpp>

#include "../support/testutil.hpp"

#include <doctest.h>

using namespace canonform;
using testing::mat;
using testing::poly;
using testing::sc;

namespace {
const FieldDescriptor Q = FieldDescriptor::rationals();
const FieldDescriptor F7 = FieldDescriptor::gf(7);

const char* kShear =
    "# 2x2 shear\n"
    "field rational\n"
    "rows 2\n"
    "1 1\n"
    "0 1\n";
const char* kRot =
    "field rational\n"
    "rows 2\n"
    "0 1\n"
    "-1 0\n";
} // namespace

TEST_CASE("matrix file parsing") {
    const MatrixFile f = parse_matrix_file("field rational\nrows 2\n3 1\n0 3\n");
    CHECK(f.field == Q);
    CHECK(f.n == 2);
    CHECK(f.matrix == mat(Q, {{3, 1}, {0, 3}}));

    const MatrixFile g = parse_matrix_file("field gf 7\nrows 1\n10\n");
    CHECK(g.field == F7);
    CHECK(g.matrix(0, 0) == sc(F7, 3));

    // comments and blank lines are ignored anywhere
    const MatrixFile h = parse_matrix_file(
        "# header comment\n\nfield gf 5\n\nrows 2  # two rows\n1 2\n\n# mid\n3 4\n\n");
    CHECK(h.field == FieldDescriptor::gf(5));
    CHECK(h.matrix(1, 1) == sc(FieldDescriptor::gf(5), 4));

    CHECK_THROWS_AS(parse_matrix_file("field gf 6\nrows 1\n0\n"), NotPrime);
    CHECK_THROWS_AS(parse_matrix_file("field real\nrows 1\n0\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix_file("rows 1\nfield rational\n0\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix_file("field rational\nrows 0\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix_file("field rational\nrows 2\n1 2\n3\n"), DimensionError);
    CHECK_THROWS_AS(parse_matrix_file("field rational\nrows 2\n1 2\n"), DimensionError);
    CHECK_THROWS_AS(parse_matrix_file("field rational\nrows 2\n1 2\n3 4\n5 6\n"),
                    DimensionError);
    CHECK_THROWS_AS(parse_matrix_file("field rational\nrows 1\nx\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix_file("field rational\nrows 1\n1/0\n"), ParseError);

    try {
        parse_matrix_file("field rational\nrows 2\n1 2\n3 oops\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
        CHECK(e.column() == 3);
    }

    // field override reinterprets the entries
    const MatrixFile o = parse_matrix_file(kRot, FieldDescriptor::gf(2));
    CHECK(o.field == FieldDescriptor::gf(2));
    CHECK(o.matrix(1, 0) == sc(FieldDescriptor::gf(2), 1));
}

TEST_CASE("matrix file round-trip") {
    for (const char* text : {kShear, kRot, "field gf 7\nrows 2\n1/2 6\n0 10\n"}) {
        const MatrixFile once = parse_matrix_file(text);
        const std::string emitted = format_matrix_file(once);
        const MatrixFile twice = parse_matrix_file(emitted);
        CHECK(twice.matrix == once.matrix);
        CHECK(format_matrix_file(twice) == emitted); // byte-stable from then on
    }
}

TEST_CASE("json renderings") {
    CHECK(polynomial_json(poly(Q, {9, -6, 1})).dump() == R"(["9","-6","1"])");
    CHECK(scalar_json(testing::frac(-3, 2)).dump() == R"("-3/2")");
    CHECK(polynomial_json(Polynomial::zero(Q)).dump() == "[]");

    // coefficients round-trip through the scalar grammar
    const Polynomial f = poly(Q, {9, -6, 1});
    for (const auto& c : polynomial_json(f)) {
        (void)parse_scalar(c.get<std::string>(), Q);
    }
}

TEST_CASE("jordan command") {
    CommandOptions options;
    options.format = ReportFormat::Json;
    const Report r = run_command(Command::Jordan, {kShear}, options);
    CHECK(r.exit_code == 0);
    CHECK(r.command == "jordan");
    CHECK(r.n == 2);
    CHECK(r.result["blocks"].size() == 1);
    CHECK(r.result["blocks"][0]["eigenvalue"] == "1");
    CHECK(r.result["blocks"][0]["size"] == 2);
    CHECK(r.result["verified"] == true);

    // deterministic output across runs
    const std::string a = emit_report(run_command(Command::Jordan, {kShear}, options),
                                      ReportFormat::Json);
    const std::string b = emit_report(run_command(Command::Jordan, {kShear}, options),
                                      ReportFormat::Json);
    CHECK(a == b);
    CHECK(a.rfind("{\n  \"command\": \"jordan\",\n  \"field\": \"rational\",\n  \"n\": 2,", 0) ==
          0);
}

TEST_CASE("does-not-split report") {
    CommandOptions options;
    const Report r = run_command(Command::Jordan, {kRot}, options);
    CHECK(r.exit_code == 2);
    CHECK(r.result["error"] == "does_not_split");
    CHECK(r.result["remainder_pretty"] == "l^2 + 1");
    CHECK(emit_report(r, ReportFormat::Text).find("l^2 + 1") != std::string::npos);

    // the same matrix splits over gf(2)
    CommandOptions gf2;
    gf2.field_override = FieldDescriptor::gf(2);
    const Report r2 = run_command(Command::Jordan, {kRot}, gf2);
    CHECK(r2.exit_code == 0);
    CHECK(r2.result["blocks"][0]["eigenvalue"] == "1");
    CHECK(r2.result["blocks"][0]["size"] == 2);
}

TEST_CASE("smith and polynomial commands") {
    CommandOptions options;
    options.with_transform = true;
    const char* text = "field rational\nrows 2\n3 1\n0 3\n";
    const Report r = run_command(Command::Smith, {text}, options);
    CHECK(r.exit_code == 0);
    CHECK(r.result["diag"].size() == 2);
    CHECK(r.result["diag"][0].dump() == R"(["1"])");
    CHECK(r.result["diag"][1].dump() == R"(["9","-6","1"])");
    CHECK(r.result["invariant_factors"].size() == 1);
    CHECK(r.result.contains("P"));
    CHECK(r.result["verified"] == true);

    const Report cp = run_command(Command::CharPoly, {text}, CommandOptions{});
    CHECK(cp.result["pretty"] == "l^2 - 6*l + 9");
    const Report mp = run_command(Command::MinPoly, {text}, CommandOptions{});
    CHECK(mp.result["polynomial"].dump() == R"(["9","-6","1"])");
}

TEST_CASE("similar command") {
    const char* a = "field rational\nrows 2\n1 1\n0 1\n";
    const char* b = "field rational\nrows 2\n0 1\n-1 2\n"; // conjugate of a
    CommandOptions options;
    options.with_witness = true;
    const Report r = run_command(Command::Similar, {a, b}, options);
    CHECK(r.exit_code == 0);
    CHECK(r.result["similar"] == true);
    CHECK(r.result.contains("witness"));
    CHECK(r.result["verified"] == true);

    const char* c = "field rational\nrows 2\n0 0\n0 0\n";
    const char* d = "field rational\nrows 2\n0 1\n0 0\n";
    const Report r2 = run_command(Command::Similar, {c, d}, CommandOptions{});
    CHECK(r2.exit_code == 0);
    CHECK(r2.result["similar"] == false);
    CHECK(!r2.result.contains("witness"));
}

TEST_CASE("verify command") {
    const Report self = run_command(Command::Verify, {kShear}, CommandOptions{});
    CHECK(self.exit_code == 0);
    CHECK(self.result["smith_identity"] == true);
    CHECK(self.result["unimodular_P"] == true);
    CHECK(self.result["unimodular_Q"] == true);
    CHECK(self.result["rational_certificate"] == true);
    CHECK(self.result["charpoly_splits"] == true);
    CHECK(self.result["jordan_certificate"] == true);

    const Report nonsplit = run_command(Command::Verify, {kRot}, CommandOptions{});
    CHECK(nonsplit.exit_code == 0);
    CHECK(nonsplit.result["charpoly_splits"] == false);
    CHECK(nonsplit.result["nonsplit_remainder"].dump() == R"(["1","0","1"])");

    // externally supplied certificate: shear is its own jordan form with S = I
    CommandOptions good;
    good.certificate_form_text = std::string(kShear);
    good.certificate_transform_text = "field rational\nrows 2\n1 0\n0 1\n";
    const Report ok = run_command(Command::Verify, {kShear}, good);
    CHECK(ok.exit_code == 0);
    CHECK(ok.result["kind"] == "jordan");
    CHECK(ok.result["certificate_valid"] == true);

    CommandOptions bad = good;
    bad.certificate_transform_text = "field rational\nrows 2\n1 1\n1 1\n";
    const Report nope = run_command(Command::Verify, {kShear}, bad);
    CHECK(nope.exit_code == 4);
    CHECK(nope.result["certificate_valid"] == false);
}

TEST_CASE("digest is stable and input-sensitive") {
    CHECK(fnv1a_digest("") == "cbf29ce484222325");
    const Report r1 = run_command(Command::CharPoly, {kShear}, CommandOptions{});
    const Report r2 = run_command(Command::CharPoly, {kShear}, CommandOptions{});
    const Report r3 = run_command(Command::CharPoly, {kRot}, CommandOptions{});
    CHECK(r1.digest == r2.digest);
    CHECK(r1.digest != r3.digest);
}
