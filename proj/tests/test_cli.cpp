#include "confstab/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

using namespace confstab;
namespace fs = std::filesystem;

namespace {

const fs::path kGolden = CONFSTAB_GOLDEN_DIR;

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

fs::path scratch_dir() {
    fs::path d = fs::temp_directory_path() / "confstab_cli_test";
    fs::create_directories(d);
    return d;
}

// "@@x" is a scratch file, "@x" a fixture next to the goldens.
std::vector<std::string> expand(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> args;
    for (std::string a; is >> a;) {
        if (a.rfind("@@", 0) == 0)
            a = (scratch_dir() / a.substr(2)).string();
        else if (a.rfind("@", 0) == 0)
            a = (kGolden / a.substr(1)).string();
        args.push_back(a);
    }
    return args;
}

}  // namespace

TEST_CASE("golden transcripts") {
    bool update = std::getenv("CONFSTAB_UPDATE_GOLDEN") != nullptr;
    std::ifstream manifest(kGolden / "cases.tsv");
    REQUIRE(manifest);
    int cases = 0;
    for (std::string line; std::getline(manifest, line);) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        std::string name, code_s, args;
        std::getline(is, name, '\t');
        std::getline(is, code_s, '\t');
        std::getline(is, args);
        CAPTURE(name);
        Run r = run(expand(args));
        CHECK(r.code == std::stoi(code_s));
        fs::path golden = kGolden / (name + ".out");
        if (update) std::ofstream(golden, std::ios::binary) << r.out;
        CHECK(r.out == slurp(golden));
        ++cases;
    }
    CHECK(cases >= 30);
}

TEST_CASE("quoted examples") {
    auto r = run({"branch", "--lambda", "3,2,1", "--n", "7"});
    CHECK(r.code == 0);
    CHECK(r.out == "4,2,1\t1\n3,3,1\t1\n3,2,2\t1\n3,2,1,1\t1\n");
    r = run({"betti", "--manifold", "torus.desc", "--n", "4", "--i", "4"});
    CHECK(r.out == "4\n");
    r = run({"chartable", "--n", "1"});
    CHECK(r.out == "lambda\t1\n1\t1\n");
}

TEST_CASE("deterministic output") {
    std::vector<std::string> args{"e2", "--manifold", "torus.desc", "--n", "3"};
    CHECK(run(args).out == run(args).out);
    std::vector<std::string> props{"properties", "--seed", "99", "--count", "6", "--n-max", "6"};
    auto a = run(props);
    CHECK(a.code == 0);
    CHECK(a.out.rfind("seed\t99\n", 0) == 0);
    CHECK(a.out == run(props).out);
}

TEST_CASE("pretty format aligns columns") {
    auto r = run({"chartable", "--n", "3", "--format", "pretty"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find('\t') == std::string::npos);
    CHECK(r.out.find("2,1     2      0    -1\n") != std::string::npos);
    CHECK(run({"chartable", "--n", "3", "--format", "xml"}).code == 2);
}

TEST_CASE("verification failure writes a witness") {
    fs::path w = scratch_dir() / "zero.json";
    fs::remove(w);
    auto r = run({"stable", "--lambda", "1", "--n-max", "4", "--zero-maps", "--witness", w.string()});
    CHECK(r.code == 1);
    CHECK(r.err.find(w.string()) != std::string::npos);
    REQUIRE(fs::exists(w));
    auto j = nlohmann::json::parse(slurp(w));
    CHECK(!j.empty());
}

TEST_CASE("usage and input errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"betti", "--manifold", "torus.desc", "--n", "2"}).code == 0);
    CHECK(run({"color-betti", "--manifold", "torus.desc", "--n", "2", "--i", "1"}).code == 2);
    CHECK(run({"arnold", "--m", "0", "--d", "2"}).code == 2);
    CHECK(run({"ranges", "--m", "1/0", "--ell", "0"}).code == 2);
    CHECK(run({"monotone", "--lambda", "1"}).code == 2);
    auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("ranges-for") != std::string::npos);
}

TEST_CASE("budget overrun is an input error") {
    setenv("CONFSTAB_BUDGET", "10", 1);
    auto r = run({"e2", "--manifold", "torus.desc", "--n", "3", "--explicit"});
    unsetenv("CONFSTAB_BUDGET");
    CHECK(r.code == 2);
    CHECK(r.err.find("budget") != std::string::npos);
}
