#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "josnim/cli.hpp"
#include "josnim/closed_form.hpp"

using namespace josnim;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("query subcommands") {
    auto r = run_cli({"grundy", "2", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "oracle=3 closed=3\n");

    r = run_cli({"grundy", "--no-oracle", "1000000", "999"});
    CHECK(r.code == 0);
    CHECK(r.out == "closed=" + std::to_string(grundy_closed({1000000, 999})) + "\n");

    r = run_cli({"fs", "3", "7"});
    CHECK(r.code == 0);
    CHECK(r.out == "simulated=1 closed=1 recursive=1\n");

    r = run_cli({"josephus", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "2 4 1 5 3\n");

    r = run_cli({"classify", "2", "3"});
    CHECK(r.out == "s=3 A(k=1,j=3)\n");

    r = run_cli({"moves", "2", "3"});
    CHECK(r.out == "(2,3) W=-4 bound=-2\np2 1 -> (2,2) W=-2\np2 2 -> (2,1) W=0\np2 3 -> (2,0) W=2\n");

    r = run_cli({"best-move", "2", "3"});
    CHECK(r.out == "p2 2 (winning)\n");
    r = run_cli({"best-move", "2", "1"});
    CHECK(r.out == "p2 1 (no winning move)\n");

    r = run_cli({"sets", "1", "--xmax", "3", "--ymax", "2"});
    CHECK(r.out == "(0,1) s=1 A(k=0,j=1)\n(1,1) s=1 B(k=0,j=1)\n(2,0) s=1 N(n=0,m=0)\n(3,1) s=1 N(n=0,m=1)\n");
}

TEST_CASE("usage and domain errors exit 2") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"grundy", "1"}).code == 2);
    CHECK(run_cli({"grundy", "a", "b"}).code == 2);
    CHECK(run_cli({"verify", "--suite", "nope"}).code == 2);

    auto r = run_cli({"fs", "7", "3"});
    CHECK(r.code == 2);
    CHECK(r.err.find("s <= v-1") != std::string::npos);
    CHECK(run_cli({"josephus", "0"}).code == 2);
    CHECK(run_cli({"best-move", "0", "0"}).code == 2);
    CHECK(run_cli({"selfplay", "--games", "3"}).code == 2);  // --seed is required
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("json output schema") {
    auto r = run_cli({"--json", "grundy", "2", "3"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "grundy");
    CHECK(j["inputs"]["x"] == 2);
    CHECK(j["inputs"]["y"] == 3);
    CHECK(j["results"]["oracle"] == 3);
    CHECK(j["results"]["closed"] == 3);
    CHECK(j["report"].is_null());

    j = nlohmann::json::parse(run_cli({"--json", "fs", "3", "5"}).out);
    CHECK(j["results"]["simulated"] == 4);
    CHECK(j["results"]["agree"] == true);

    j = nlohmann::json::parse(run_cli({"--json", "classify", "5", "4"}).out);
    CHECK(j["results"] == nlohmann::json{{"s", 4}, {"family", "B"}, {"k", 2}, {"j", 4}});

    j = nlohmann::json::parse(run_cli({"--json", "josephus", "7"}).out);
    CHECK(j["results"]["order"] == nlohmann::json{2, 4, 6, 1, 5, 3, 7});
}

TEST_CASE("verify subcommand") {
    auto r = run_cli({"verify", "--suite", "grundy", "--xmax", "10", "--ymax", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("[PASS] grundy_equivalence  x=[0,10]  y=[0,10]  cases=121", 0) == 0);

    r = run_cli({"--json", "verify", "--suite", "all", "--xmax", "20", "--ymax", "20", "--vmax", "64", "--smax", "6"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "verify");
    CHECK(j["results"]["passed"] == true);
    CHECK(j["report"].size() == 6);
    for (const auto& rep : j["report"]) CHECK(rep["passed"] == true);
}

TEST_CASE("csv export") {
    const auto path = std::filesystem::temp_directory_path() / "josnim_export_test.csv";
    auto r = run_cli({"export", "--xmax", "3", "--ymax", "2", "--out", path.string()});
    REQUIRE(r.code == 0);
    std::ifstream file(path);
    std::vector<std::string> lines;
    for (std::string line; std::getline(file, line);) lines.push_back(line);
    std::filesystem::remove(path);
    REQUIRE(lines.size() == 1 + 4 * 3);
    CHECK(lines[0] == "x,y,grundy,family,s,param1,param2");
    CHECK(lines[1] == "0,0,0,N,0,0,0");
    CHECK(lines[2] == "0,1,1,A,1,0,1");
    CHECK(lines[9] == "2,2,2,A,2,1,2");
    CHECK(lines[10] == "3,0,0,N,0,2,0");
    CHECK(lines[12] == "3,2,2,B,2,1,2");

    r = run_cli({"export", "--xmax", "1", "--ymax", "1", "--format", "json"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "export");
    CHECK(j["results"].size() == 4);
    CHECK(j["results"][1]["grundy"] == 1);
}

TEST_CASE("play and selfplay subcommands") {
    const auto path = std::filesystem::temp_directory_path() / "josnim_transcript_test.json";
    auto r = run_cli({"play", "--x", "4", "--y", "0", "--transcript", path.string()}, "p1 2\n");
    CHECK(r.code == 0);
    CHECK(r.out.find("engine wins") != std::string::npos);
    std::ifstream file(path);
    const auto t = nlohmann::json::parse(file);
    std::filesystem::remove(path);
    CHECK(t["winner"] == "engine");
    CHECK(t["moves"].size() == 2);
    CHECK(t["moves"][1]["move"] == "p1 1");

    r = run_cli({"play", "--x", "2", "--y", "3", "--engine-first"}, "p2 1\n");
    CHECK(r.out.find("engine plays p2 2 -> (2,1) W=0") != std::string::npos);

    r = run_cli({"selfplay", "--games", "25", "--max", "16", "--seed", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "engine won 25/25\n");
}
