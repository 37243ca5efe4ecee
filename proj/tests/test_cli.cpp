// test_cli.cpp — End-to-end runs of the command-line tool

#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string output; // stdout and stderr interleaved
};

std::string env(const char* name) {
    const char* v = std::getenv(name);
    REQUIRE_MESSAGE(v != nullptr, name << " must be set by the test driver");
    return v;
}

Run run(const std::string& args) {
    const std::string cmd = "'" + env("TDPT_CLI") + "' " + args + " 2>&1";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    while (fgets(buf.data(), static_cast<int>(buf.size()), p)) r.output += buf.data();
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

fs::path scratch(const std::string& name) {
    const fs::path d = fs::temp_directory_path() / ("tdpt_cli_" + name);
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

nlohmann::json default_config() {
    std::ifstream in(fs::path(env("TDPT_SOURCE_DIR")) / "configs" / "default.json");
    return nlohmann::json::parse(in);
}

fs::path write_config(const fs::path& dir, const nlohmann::json& j) {
    const fs::path p = dir / "config.json";
    std::ofstream(p) << j.dump(2);
    return p;
}

std::string first_line(const fs::path& p) {
    std::ifstream in(p);
    std::string line;
    std::getline(in, line);
    return line;
}

} // namespace

TEST_CASE("invalid constants are rejected with the violated constraint") {
    const fs::path d = scratch("q3");
    auto j = default_config();
    j["scenario"]["q3"] = 1.2;
    const Run r = run("evolve --config '" + write_config(d, j).string() + "' --out '" + d.string() + "'");
    CHECK(r.code == 2);
    CHECK(r.output.find("|q3| < 1") != std::string::npos);
    CHECK_FALSE(fs::exists(d / "evolve.csv"));
}

TEST_CASE("usage errors") {
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("evolve --profile medium").code == 2);
    CHECK(run("--help").code == 0);
    CHECK(run("evolve --config /nonexistent/config.json").code == 2);
}

TEST_CASE("evolve is deterministic") {
    const fs::path a = scratch("evolve_a"), b = scratch("evolve_b");
    const Run ra = run("evolve --out '" + a.string() + "'");
    const Run rb = run("evolve --out '" + b.string() + "'");
    REQUIRE(ra.code == 0);
    REQUIRE(rb.code == 0);
    CHECK(first_line(a / "evolve.csv") ==
          "t,gamma3,gamma4,beta1,beta2,beta3,beta4,f_plus,f_minus,energy,dyson_residual");
    const std::string sa = slurp(a / "evolve.csv");
    CHECK(sa == slurp(b / "evolve.csv"));
    // header plus one row per grid sample
    CHECK(std::count(sa.begin(), sa.end(), '\n') == 201);
}

TEST_CASE("spectrum, modes and oracle outputs") {
    const fs::path d = scratch("outputs");
    auto j = default_config();
    j["oracle"]["cutoff"] = 6;
    j["grid"]["samples"] = 5;
    j["output"]["dir"] = d.string();
    const std::string cfg = "--config '" + write_config(d, j).string() + "'";

    const Run s = run("spectrum " + cfg);
    CHECK(s.code == 0);
    CHECK(first_line(d / "spectrum.csv") == "model,n,m,re_energy,im_energy");
    CHECK(s.output.find("exceptional") != std::string::npos);

    CHECK(run("modes " + cfg).code == 0);
    CHECK(first_line(d / "modes.csv") == "x,y,t,re_psi,im_psi");

    CHECK(run("oracle " + cfg).code == 0);
    CHECK(first_line(d / "oracle.csv") == "t,dyson_residual,quasi_hermiticity,min_metric_eigenvalue");
    const std::string o = slurp(d / "oracle.csv");
    CHECK(std::count(o.begin(), o.end(), '\n') == 6);
}

TEST_CASE("validate reports every criterion and an exit code that matches") {
    const fs::path d = scratch("validate");
    const Run r = run("validate --out '" + d.string() + "'");
    const std::regex line(R"(^(PASS|FAIL)\s+(\d+) )");
    int pass = 0, fail = 0;
    std::istringstream in(r.output);
    for (std::string l; std::getline(in, l);) {
        std::smatch m;
        if (std::regex_search(l, m, line)) (m[1] == "PASS" ? pass : fail)++;
    }
    CHECK(pass + fail == 13);
    CHECK(r.code == (fail == 0 ? 0 : 1));
    REQUIRE(fs::exists(d / "validation.json"));
    const auto report = nlohmann::json::parse(slurp(d / "validation.json"));
    REQUIRE(report.size() == 13);
    const auto passed =
        std::count_if(report.begin(), report.end(), [](const auto& e) { return e["pass"].template get<bool>(); });
    CHECK(passed == pass);
}
