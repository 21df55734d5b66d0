#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "spinorss/commands.hpp"
#include "spinorss/curvature_io.hpp"
#include "spinorss/errors.hpp"

#include <nlohmann/json.hpp>

using namespace spinorss;

TEST_SUITE_BEGIN("io");

namespace {

std::string data_path(const std::string& name) {
    return std::string(SPINORSS_TEST_DATA_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_cli(const std::string& args, std::string* output = nullptr) {
    const std::string cmd = std::string(SPINORSS_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    if (output) *output = out;
    return WEXITSTATUS(status);
}

} // namespace

TEST_CASE("parsing a numeric type-D vacuum document") {
    const ParsedInput in = parse_input(read_file(data_path("type_d_vacuum.json")));
    CHECK(in.set.weyl.psi[2] == Polynomial(1));
    CHECK(in.set.ricci.is_zero());
    CHECK(in.set.scalar.lambda.is_zero());
    CHECK(in.assumptions.nonzero.empty());
}

TEST_CASE("parsing the symbolic matched type-D family") {
    const ParsedInput in = parse_input(read_file(data_path("type_d_lambda_matched.json")));
    CHECK(in.set.weyl.psi[2] ==
          Polynomial::symbol(in.set.table, *in.set.table->find("psi2")));
    CHECK(in.set.scalar.lambda ==
          in.set.weyl.psi[2].scaled(GaussianRational(BigRational(-1, 2))));
    CHECK(in.assumptions.nonzero.size() == 2);
    const ClassificationReport r = classify_case(in.set, in.assumptions, in.petrov_hint);
    CHECK(r.petrov == PetrovType::D);
    CHECK(r.verdicts.semisymmetric.holds_identically());
}

TEST_CASE("hermiticity violations and bad documents are rejected") {
    CHECK_THROWS_AS((void)parse_input(read_file(data_path("hermiticity_error.json"))),
                    HermiticityError);
    CHECK_THROWS_AS((void)parse_input("{"), ParseError);
    CHECK_THROWS_AS((void)parse_input("{\"lambda\":\"0\"}"), ParseError);
    CHECK_THROWS_AS((void)parse_input(
                        R"({"lambda":"0","psi":["0","0","0","0","0"],
                            "phi":[["0","0","0"],["0","0","0"],["0","0","0"]],
                            "unknown_field":1})"),
                    ParseError);
    // symbolic lambda must be self-conjugate
    CHECK_THROWS_AS((void)parse_input(
                        R"({"lambda":"z","psi":["0","0","0","0","0"],
                            "phi":[["0","0","0"],["0","0","0"],["0","0","0"]],
                            "symbols":[{"name":"z","kind":"complex"}]})"),
                    ConjugationMismatch);
    // undeclared symbol
    CHECK_THROWS_AS((void)parse_input(
                        R"({"lambda":"0","psi":["0","0","q","0","0"],
                            "phi":[["0","0","0"],["0","0","0"],["0","0","0"]]})"),
                    ParseError);
    // the imaginary unit cannot be declared as a symbol
    CHECK_THROWS_AS((void)parse_input(
                        R"({"lambda":"0","psi":["0","0","0","0","0"],
                            "phi":[["0","0","0"],["0","0","0"],["0","0","0"]],
                            "symbols":[{"name":"i","kind":"real"}]})"),
                    ParseError);
}

TEST_CASE("format(parse(x)) re-parses to an identical curvature set") {
    for (const char* name : {"type_d_vacuum.json", "type_d_lambda_matched.json",
                             "type_o_generic_phi.json", "type_i_vacuum.json"}) {
        const ParsedInput a = parse_input(read_file(data_path(name)));
        const ParsedInput b = parse_input(format_input(a));
        for (int n = 0; n < 5; ++n) CHECK(a.set.weyl.psi[n].str() == b.set.weyl.psi[n].str());
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK(a.set.ricci.phi[i][j].str() == b.set.ricci.phi[i][j].str());
        CHECK(a.set.scalar.lambda.str() == b.set.scalar.lambda.str());
        CHECK(a.assumptions.nonzero.size() == b.assumptions.nonzero.size());
        CHECK(a.petrov_hint == b.petrov_hint);
    }
}

TEST_CASE("machine report re-evaluates to identical verdicts") {
    const std::string text = read_file(data_path("type_o_generic_phi.json"));
    const ParsedInput in = parse_input(text);
    const ClassificationReport r1 = classify_case(in.set, in.assumptions, in.petrov_hint);
    const std::string report = classification_report_json(r1, in);
    const auto j = nlohmann::json::parse(report);
    // the embedded input re-parses and re-evaluates to the same verdicts
    const ParsedInput in2 = parse_input(j["input"].dump());
    const ClassificationReport r2 = classify_case(in2.set, in2.assumptions, in2.petrov_hint);
    const std::string report2 = classification_report_json(r2, in2);
    CHECK(report == report2);
}

TEST_CASE("cli: classify") {
    std::string out;
    CHECK(run_cli("classify " + data_path("type_d_lambda_matched.json"), &out) == 0);
    CHECK(out.find("petrov type:  D") != std::string::npos);
    CHECK(out.find("semi-symmetric:             holds") != std::string::npos);
    CHECK(run_cli("classify " + data_path("hermiticity_error.json"), &out) == 2);
    CHECK(run_cli("classify /nonexistent.json", &out) == 2);
    CHECK(run_cli("classify --machine " + data_path("type_d_vacuum.json"), &out) == 0);
    CHECK(nlohmann::json::parse(out)["petrov"] == "D");
}

TEST_CASE("cli: verify-identities") {
    std::string out;
    CHECK(run_cli("verify-identities", &out) == 0);
    CHECK(out.find("FAIL") == std::string::npos);
    CHECK(out.find("all claims hold") != std::string::npos);
}

TEST_CASE("cli: table with and without a golden file") {
    std::string out;
    CHECK(run_cli("table", &out) == 0);
    CHECK(out.find("Segre type") != std::string::npos);
    const std::string golden = std::string(SPINORSS_GOLDEN_DIR) + "/appendix_a.txt";
    CHECK(run_cli("table --golden " + golden, &out) == 0);
    // a wrong golden file trips exit 1
    const std::string bogus = data_path("type_d_vacuum.json");
    CHECK(run_cli("table --golden " + bogus, &out) == 1);
}

TEST_CASE("cli: kernel") {
    std::string out;
    CHECK(run_cli("kernel --petrov D", &out) == 0);
    CHECK(out.find("kernel dimension: 1") != std::string::npos);
    CHECK(out.find("Phi11'") != std::string::npos);
    CHECK(run_cli("kernel --petrov I --which S1", &out) == 0);
    CHECK(out.find("kernel dimension: 0") != std::string::npos);
    CHECK(run_cli("kernel --petrov X", &out) == 2);
}

TEST_SUITE_END();
