#include "symgen/cli/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>

using symgen::cli::dispatch;
using json = nlohmann::json;

namespace {

json parse_out(const symgen::cli::CliResult& r) { return json::parse(r.out); }

std::string temp_file(const std::string& name, const std::string& content) {
    const std::string path = "symgen_cli_test_" + name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("identity check reports an exact match") {
    const auto r = dispatch({"symm", "identity-check", "--which", "d-classes", "--max-weight", "20"});
    CHECK(r.exit_code == 0);
    const auto j = parse_out(r);
    CHECK(j["status"] == "exact-match");
    CHECK(j["max_weight"] == 20);
    CHECK(j["config"]["bound"] == 30);
}

TEST_CASE("mzv eval") {
    const auto ok = dispatch({"mzv", "eval", "--index", "(2,3)", "--error", "1e-8"});
    REQUIRE(ok.exit_code == 0);
    const auto j = parse_out(ok);
    CHECK(j["admissible"] == true);
    CHECK(std::abs(j["value"].get<double>() - 0.22881039760335375977) <= j["error_bound"].get<double>() + 1e-16);
    CHECK(j["error_bound"].get<double>() <= 1e-8);

    const auto bad = dispatch({"mzv", "eval", "--index", "(1)"});
    CHECK(bad.exit_code == 1);
    CHECK(parse_out(bad)["code"] == "divergent");
}

TEST_CASE("series tables are csv by default") {
    const auto r = dispatch({"series", "--which", "THH", "--bound", "12"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("degree,dim\n0,1\n", 0) == 0);
    int lines = 0;
    for (char c : r.out) lines += c == '\n';
    CHECK(lines == 14);

    const auto so = dispatch({"series", "--which", "sOmega", "--bound", "10"});
    CHECK(so.out == "degree,dim\n0,1\n1,1\n2,0\n3,0\n4,0\n5,1\n6,1\n7,0\n8,0\n9,1\n10,1\n");
}

TEST_CASE("tor csv") {
    const auto r = dispatch({"tor", "--algebra", "exterior:5,9", "--bound", "24"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("s,t,total,dim\n0,0,0,1\n1,5,6,1\n1,9,10,1\n2,10,12,1\n", 0) == 0);
    const auto j = parse_out(dispatch({"tor", "--algebra", "exterior:5,9", "--bound", "24", "--format", "json"}));
    CHECK(j["d_squared_zero"] == true);
    CHECK(j["rows"].size() > 4);

    const auto truncated = dispatch({"tor", "--algebra", "squarezero:3,8", "--bound", "6", "--total", "12"});
    CHECK(truncated.exit_code == 1);
    CHECK(parse_out(truncated)["code"] == "truncation");
    const auto marked = dispatch({"tor", "--algebra", "squarezero:3,8", "--bound", "6", "--total", "12", "--mark-unknown"});
    CHECK(marked.exit_code == 0);
    CHECK(marked.out.find("unknown") != std::string::npos);
}

TEST_CASE("genus subcommands") {
    auto j = parse_out(dispatch({"genus", "compute", "--manifold", "CP2", "--series", "L"}));
    CHECK(j["value"] == "1");
    j = parse_out(dispatch({"genus", "compute", "--manifold", "CP2", "--series", "Todd"}));
    CHECK(j["value"] == "1");
    j = parse_out(dispatch({"genus", "deform", "--manifold", "CP1", "--series", "A-hat", "--t", "1:1/3,3:0"}));
    CHECK(j["value"] == "2/3");
    j = parse_out(dispatch({"genus", "exponential", "--n", "3", "--series", "Todd"}));
    CHECK(j["via_exponential"] == j["via_characteristic"]);
    j = parse_out(dispatch({"genus", "primitivity", "--manifold", "CP2", "--other", "CP1", "--k", "3"}));
    CHECK(j["primitive"] == true);

    const auto file = temp_file("cp1.json",
                                R"({"name":"P1","dim_c":1,"generators":[{"sym":"x","deg":2,"nilpotency":2}],)"
                                R"("total_chern":"1 + 2*x","volume_monomial":"x"})");
    j = parse_out(dispatch({"genus", "compute", "--manifold-file", file, "--series", "Todd"}));
    CHECK(j["value"] == "1");
    std::remove(file.c_str());

    const auto bad = dispatch({"genus", "compute", "--manifold", "K3"});
    CHECK(bad.exit_code == 1);
    CHECK(parse_out(bad)["code"] == "unknown-manifold");
}

TEST_CASE("coaction counit") {
    const auto j = parse_out(dispatch({"coaction", "--manifold", "CP2", "--class", "x[1]", "--bound", "8"}));
    CHECK(j["counit"] == "x[1]");
    CHECK(j["coassociative"] == true);
}

TEST_CASE("usage errors exit 2 with json") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {},
             {"frobnicate"},
             {"mzv", "eval", "--index", "(2)", "--frob"},
             {"--bound", "0", "series", "--which", "THH"},
             {"--error", "-1", "mzv", "eval", "--index", "(2)"},
             {"--format", "xml", "series", "--which", "THH"},
             {"--model", "sideways", "series", "--which", "THH"}}) {
        const auto r = dispatch(args);
        CHECK(r.exit_code == 2);
        CHECK(parse_out(r)["code"] == "usage");
    }
    CHECK(dispatch({"--help"}).exit_code == 0);
}

TEST_CASE("config file precedence and validation") {
    const auto good = temp_file("good.json", R"({"bound": 6, "format": "json"})");
    auto j = parse_out(dispatch({"--config", good, "series", "--which", "sOmega"}));
    CHECK(j["config"]["bound"] == 6);
    CHECK(j["rows"].size() == 7);
    j = parse_out(dispatch({"--config", good, "--bound", "8", "series", "--which", "sOmega"}));
    CHECK(j["config"]["bound"] == 8);
    std::remove(good.c_str());

    const auto malformed = temp_file("bad.json", "{\"bound\": ");
    CHECK(dispatch({"--config", malformed, "series", "--which", "THH"}).exit_code == 2);
    std::remove(malformed.c_str());
    const auto unknown = temp_file("unknown.json", R"({"colour": true})");
    CHECK(dispatch({"--config", unknown, "series", "--which", "THH"}).exit_code == 2);
    std::remove(unknown.c_str());
}

TEST_CASE("acceptance with a low bound skips instead of failing") {
    const auto r = dispatch({"--bound", "4", "acceptance"});
    CHECK(r.exit_code == 0);
    const auto j = parse_out(r);
    CHECK(j["failed"] == 0);
    CHECK(j["skipped"].get<int>() > 0);
    CHECK(j["rows"].size() == 13);
    CHECK(!r.err.empty());
}

TEST_CASE("output is deterministic") {
    const std::vector<std::vector<std::string>> commands{
        {"qsymm", "product", "--a", "M(1,2)", "--b", "M(2)"},
        {"qsymm", "hilbert", "--profile", "odd3", "--flavor", "lie", "--bound", "16"},
        {"symm", "primitives", "--weight", "6", "--space", "BUmodSO"},
        {"mzv", "stuffle", "--a", "M(2)", "--b", "M(3)"},
        {"genus", "gamma", "--order", "4"},
        {"--bound", "4", "acceptance"}};
    for (const auto& c : commands) {
        const auto a = dispatch(c), b = dispatch(c);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("output file") {
    const std::string path = "symgen_cli_test_out.csv";
    const auto r = dispatch({"--output", path, "series", "--which", "sOmega", "--bound", "2"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content == "degree,dim\n0,1\n1,1\n2,0\n");
    std::remove(path.c_str());
    CHECK(dispatch({"--output", "/nonexistent/dir/x", "series", "--which", "THH"}).exit_code == 1);
}
