#include "doctest.h"

#include "cli.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = blanchfield::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_CASE("alexander") {
    CHECK(run({"alexander", "trefoil"}).out == "t - 1 + t^-1\n");
    CHECK(run({"alexander", "unknot"}).out == "1\n");
    const Run r = run({"alexander", "--json", "figure-eight"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["command"] == "alexander");
    CHECK(doc["result"]["alexander"] == "-t + 3 - t^-1");
    CHECK(doc.contains("input"));
    CHECK(doc["diagnostics"].is_array());
}

TEST_CASE("pairing") {
    CHECK(run({"pairing", "trefoil", "--v", "1,0", "--w", "1,0"}).out == "(-t)/(t^2 - t + 1)\n");
    CHECK(run({"pairing", "unknot"}).out == "[]\n");
    const Run r = run({"pairing", "trefoil-fibred"});
    CHECK(r.out ==
          "[(-t)/(t^2 - t + 1), (1)/(t^2 - t + 1)]\n"
          "[(t - 1)/(t^2 - t + 1), (-t)/(t^2 - t + 1)]\n");
    const Run bad = run({"pairing", "trefoil", "--v", "1", "--w", "1,0"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("length") != std::string::npos);
    CHECK(run({"pairing", "trefoil", "--v", "1,0"}).code == 2);
    const Run dual = run({"pairing", "--json", "trefoil-dual-surface", "--v", "1,0", "--w", "1,0"});
    CHECK(nlohmann::json::parse(dual.out)["result"]["value"] == "(-t)/(t^2 - t + 1)");
}

TEST_CASE("mk") {
    const Run r = run({"mk", "trefoil"});
    CHECK(r.code == 0);
    CHECK(r.out.find("M_K: [[-1, -t], [-t^-1, t - 2 + t^-1]]") != std::string::npos);
    CHECK(r.out.find("det: -t + 1 - t^-1") != std::string::npos);
    CHECK(run({"mk", "unknot"}).out.find("M_K: []") != std::string::npos);
    CHECK(run({"mk", "trefoil-fibred"}).code == 2);
    const auto doc = nlohmann::json::parse(run({"mk", "--json", "figure-eight"}).out);
    CHECK(doc["result"]["mk"][0][0] == "1");
    CHECK(doc["result"]["det"] == "t - 3 + t^-1");
}

TEST_CASE("signature") {
    CHECK(run({"signature", "trefoil", "--z", "theta:3.14159"}).out == "-2\n");
    CHECK(run({"signature", "trefoil", "--z", "-1+0i"}).out == "-2\n");
    CHECK(run({"signature", "trefoil", "--z", "theta:3.14159", "--check-mk"}).out == "-2 -2 OK\n");
    const Run samples = run({"signature", "unknot", "--samples", "5"});
    CHECK(samples.code == 0);
    std::istringstream lines(samples.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        ++count;
        CHECK(line.substr(line.size() - 2) == "\t0");
    }
    CHECK(count == 5);
    // Indeterminate points are marked, not failures.
    const Run jump = run({"signature", "trefoil", "--z", "0.5+0.8660254037844386i"});
    CHECK(jump.code == 0);
    CHECK(jump.out == "?\n");
    CHECK(run({"signature", "trefoil", "--z", "2"}).code == 2);
    CHECK(run({"signature", "trefoil", "--z", "1"}).code == 2);
    CHECK(run({"signature", "trefoil", "--z", "theta:abc"}).code == 2);
    CHECK(run({"signature", "trefoil-fibred", "--z", "-1"}).code == 2);
}

TEST_CASE("verify") {
    const Run r = run({"verify", "trefoil", "--trials", "100", "--seed", "7"});
    CHECK(r.code == 0);
    for (const char* name : {"well-definedness", "sesquilinearity", "hermitian", "nonsingularity", "consistency"})
        CHECK(r.out.find(std::string(name) + ": PASS") != std::string::npos);
    CHECK(r.out.find("kearton-ill-defined: WITNESS FOUND") != std::string::npos);
    const Run unknot = run({"verify", "unknot"});
    CHECK(unknot.code == 0);
    CHECK(unknot.out.find("well-definedness: PASS (vacuous)") != std::string::npos);
    const Run a = run({"verify", "--random", "2", "3", "--seed", "1"});
    const Run b = run({"verify", "--random", "2", "3", "--seed", "1"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("== random-3") != std::string::npos);
    const auto doc = nlohmann::json::parse(run({"verify", "--json", "trefoil-fibred"}).out);
    CHECK(doc["result"]["passed"] == true);
    CHECK(run({"verify"}).code == 2);
}

TEST_CASE("entries from files and input errors") {
    const std::string good = write_temp("blanchfield_cli_good.txt", "name: t\nkind: seifert\nA: [[-1,1],[0,-1]]\n");
    CHECK(run({"alexander", good}).out == "t - 1 + t^-1\n");
    const std::string skew = write_temp("blanchfield_cli_skew.txt",
                                        "name: bad\nkind: fibred\nP: [[1,-1],[1,0]]\nJ: [[0,1],[1,0]]\n");
    const Run inv = run({"alexander", skew});
    CHECK(inv.code == 2);
    CHECK(inv.err.find("J skew-symmetric") != std::string::npos);
    const std::string syntax = write_temp("blanchfield_cli_syntax.txt", "name: bad\nkind: seifert\nA: [[1,2],[3,x]]\n");
    const Run parse = run({"alexander", syntax});
    CHECK(parse.code == 2);
    CHECK(parse.err.find("parse error at 3:14") != std::string::npos);
    CHECK(run({"alexander", "no-such-entry"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
