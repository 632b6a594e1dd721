#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "penney/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = penney::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    const Run r = run(args);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

std::string frac(const json& f) {
    const std::string num = f["num"].is_string() ? f["num"].get<std::string>() : std::to_string(f["num"].get<long>());
    const std::string den = f["den"].is_string() ? f["den"].get<std::string>() : std::to_string(f["den"].get<long>());
    return den == "1" ? num : num + "/" + den;
}

}  // namespace

TEST_CASE("analyze reports the HTH vs HHT game") {
    const json doc = run_json({"analyze", "HTH", "HHT"});
    CHECK(doc["schema"] == "penney/1");
    CHECK(doc["command"]["name"] == "analyze");
    CHECK(doc["command"]["version"] == penney::cli::kVersion);
    const json& p = doc["payload"];
    CHECK(frac(p["win_s2"]) == "2/3");
    CHECK(p["win_s2"]["approx"] == "0.666667");
    CHECK(frac(p["expected_flips"]) == "6");
    std::vector<std::string> row;
    for (const auto& t : p["absorption_times"]) row.push_back(frac(t["time"]));
    CHECK(row == std::vector<std::string>{"2", "0", "0", "6", "2", "4", "4", "6"});
}

TEST_CASE("analyze text and json carry the same exact values") {
    const Run text = run({"analyze", "HTT", "HHT"});
    REQUIRE(text.code == 0);
    const json p = run_json({"analyze", "HTT", "HHT"})["payload"];
    CHECK(text.out.find("Pr(HHT first) = " + frac(p["win_s2"])) != std::string::npos);
    CHECK(text.out.find("Pr(HTT first) = " + frac(p["win_s1"])) != std::string::npos);
    CHECK(text.out.find("expected flips = " + frac(p["expected_flips"])) != std::string::npos);
    for (const auto& t : p["absorption_times"])
        CHECK(text.out.find("  " + t["state"].get<std::string>() + "  " + frac(t["time"]) + "\n") != std::string::npos);
}

TEST_CASE("analyze on a two-flip game and with a bias") {
    CHECK(frac(run_json({"analyze", "HH", "TH"})["payload"]["win_s2"]) == "3/4");
    const json dec = run_json({"analyze", "HHT", "THH", "--bias", "0.4"})["payload"];
    const json fr = run_json({"analyze", "HHT", "THH", "--bias", "2/5"})["payload"];
    CHECK(dec == fr);
    CHECK(frac(dec["p_heads"]) == "2/5");
}

TEST_CASE("analyze csv") {
    const Run r = run({"analyze", "HHH", "THH", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("field,num,den,approx\n", 0) == 0);
    CHECK(r.out.find("win_s1,1,8,0.125000\n") != std::string::npos);
    CHECK(r.out.find("expected_flips,7,1,7.000000\n") != std::string::npos);
}

TEST_CASE("usage and invalid-game errors exit with 2") {
    Run r = run({"analyze", "HHT", "HHT"});
    CHECK(r.code == 2);
    CHECK(r.err.find("patterns must differ") != std::string::npos);
    CHECK(run({"analyze", "HHT", "HT"}).code == 2);
    CHECK(run({"analyze", "HXT", "HHT"}).code == 2);
    CHECK(run({"analyze", "HHT"}).code == 2);
    CHECK(run({"analyze", "HHT", "THH", "--bias", "1.5"}).code == 2);
    CHECK(run({"analyze", "HHT", "THH", "--bias", "nope"}).code == 2);
    CHECK(run({"analyze", "HHT", "THH", "--format", "xml"}).code == 2);
    CHECK(run({"respond", "HT"}).code == 2);
    CHECK(run({"tables", "other"}).code == 2);
    CHECK(run({"verify", "everything"}).code == 2);
    CHECK(run({"simulate", "HHH", "THH", "--trials", "0"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("help and version exit cleanly") {
    CHECK(run({"--help"}).code == 0);
    const Run v = run({"--version"});
    CHECK(v.code == 0);
    CHECK(v.out.find(penney::cli::kVersion) != std::string::npos);
}

TEST_CASE("pattern length cap follows PENNEY_MAX_L") {
    CHECK(run({"analyze", "HHHHHHHHHHH", "THHHHHHHHHH"}).code == 2);
    ::setenv("PENNEY_MAX_L", "2", 1);
    CHECK(run({"analyze", "HHH", "THH"}).code == 2);
    CHECK(run({"analyze", "HH", "TH"}).code == 0);
    ::unsetenv("PENNEY_MAX_L");
    CHECK(run({"analyze", "HHH", "THH"}).code == 0);
}

TEST_CASE("tables") {
    const json gl = run_json({"tables", "game-length"})["payload"];
    std::vector<std::string> lengths;
    for (const auto& e : gl["entries"]) lengths.push_back(frac(e["expected_flips"]));
    CHECK(lengths == std::vector<std::string>{"7", "13/2", "6", "16/3", "16/3", "6", "13/2", "7"});

    const json ab = run_json({"tables", "absorption"})["payload"];
    REQUIRE(ab["rows"].size() == 8);
    CHECK(ab["rows"][0]["s1"] == "HHH");
    CHECK(ab["rows"][0]["s2"] == "THH");
    std::vector<std::string> first;
    for (const auto& t : ab["rows"][0]["times"]) first.push_back(frac(t));
    CHECK(first == std::vector<std::string>{"0", "6", "4", "6", "0", "6", "4", "6"});
    // Mirror symmetry: row i at column j equals row 7-i at column 7-j.
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            CHECK(ab["rows"][i]["times"][j] == ab["rows"][7 - i]["times"][7 - j]);

    const Run text = run({"tables", "absorption"});
    CHECK(text.out.find("(HTT,HHT)   2     0     3⅓    0     2     2⅔    3⅓    5⅓") != std::string::npos);
    const Run csv = run({"tables", "absorption", "--format", "csv"});
    CHECK(csv.out.find("HTT,HHT,2,0,10/3,0,2,8/3,10/3,16/3\n") != std::string::npos);
}

TEST_CASE("respond") {
    const json hhh = run_json({"respond", "HHH"})["payload"];
    CHECK(hhh["penney_response"] == "THH");
    CHECK(hhh["best_response"] == "THH");
    CHECK(frac(hhh["penney_win_probability"]) == "7/8");
    CHECK(hhh["agrees"] == true);
    const json ttt = run_json({"respond", "TTT"})["payload"];
    CHECK(ttt["penney_response"] == "HTT");
    CHECK(frac(ttt["penney_win_probability"]) == "7/8");
    CHECK(run({"respond", "HHH"}).out.find("THH, wins with 7/8") != std::string::npos);
}

TEST_CASE("verify suites") {
    const Run opt = run({"verify", "optimality", "--format", "json"});
    CHECK(opt.code == 0);
    const json o = json::parse(opt.out)["payload"];
    CHECK(o["passed"] == true);
    CHECK(o["suites"]["optimality"]["rows"].size() == 8);

    const json nt = run_json({"verify", "nontransitivity"})["payload"]["suites"]["nontransitivity"];
    CHECK(nt["cycle"] == json::array({"HHT", "THH", "TTH", "HTT"}));

    const json orc = run_json({"verify", "oracle"})["payload"]["suites"]["oracle"];
    CHECK(orc["contained"] == 56);
    CHECK(orc["total"] == 56);

    CHECK(run({"verify", "all"}).code == 0);
    CHECK(run({"verify", "oracle", "--horizon", "40", "--format", "csv"}).out == "suite,passed\noracle,true\n");
}

TEST_CASE("simulate is byte-for-byte reproducible") {
    const std::vector<std::string> args{"simulate", "HHH", "THH", "--trials", "20000", "--seed", "42", "--format", "json"};
    const Run a = run(args);
    const Run b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const json p = json::parse(a.out)["payload"];
    CHECK(p["simulation"]["trials"] == 20000);
    CHECK(frac(p["exact"]["win_s1"]) == "1/8");
    CHECK(std::abs(p["z"]["win_s1"].get<double>()) <= 4.0);
    CHECK(run({"simulate", "HHH", "THH", "--trials", "5000"}).out.find("exact 1/8") != std::string::npos);
}

TEST_CASE("overall") {
    const json p = run_json({"overall"})["payload"];
    CHECK(p["expected_flips"]["num"] == 149);
    CHECK(p["expected_flips"]["den"] == 24);
    CHECK(p["expected_flips"]["approx"] == "6.208333");
    CHECK(run_json({"overall", "--digits", "4"})["payload"]["expected_flips"]["approx"] == "6.2083");
    CHECK(run({"overall", "--digits", "4"}).out.find("149/24 ~ 6.2083") != std::string::npos);
}

TEST_CASE("json output re-renders to identical bytes") {
    const std::vector<std::vector<std::string>> invocations{
        {"analyze", "HTH", "HHT"},          {"analyze", "HTHT", "THTH", "--bias", "3/7"},
        {"tables", "absorption"},           {"tables", "game-length"},
        {"respond", "THT"},                 {"verify", "all"},
        {"simulate", "HTT", "HHT", "--trials", "1000"}, {"overall"},
    };
    for (auto args : invocations) {
        args.push_back("--format");
        args.push_back("json");
        const Run r = run(args);
        CAPTURE(args.front());
        REQUIRE(r.code == 0);
        CHECK(json::parse(r.out).dump(2) + "\n" == r.out);
    }
}
