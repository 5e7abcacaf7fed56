#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "spslab/cli.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = spslab::cli::run(args, in, out, err);
    return CliResult{code, out.str(), err.str()};
}

const char* e5_doc = R"({
  "kind": "closure_space",
  "points": ["1", "2", "3", "4"],
  "closed_sets": [[], ["1", "2"], ["3", "4"], ["1", "2", "3", "4"]]
})";

const char* e4_doc = R"({
  "kind": "closure_space",
  "points": ["1", "2", "3"],
  "closed_sets": [[], ["1"], ["2"], ["1", "2", "3"]]
})";

}  // namespace

TEST_CASE("validate accepts the fixture") {
    CliResult r = run_cli({"validate"}, e5_doc);
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["valid"] == true);
}

TEST_CASE("validate reports violations and exits nonzero") {
    CliResult r = run_cli({"validate"}, R"({"kind": "closure_space", "points": ["1", "2", "3"],
        "closed_sets": [[], ["1", "2"], ["2", "3"], ["1", "2", "3"]]})");
    CHECK(r.code == 1);
    json out = json::parse(r.out);
    CHECK(out["valid"] == false);
    CHECK(out["errors"].size() == 1);
}

TEST_CASE("validate reports axiom violations for systems") {
    const char* doc = R"({"kind": "sps", "states": ["p"],
        "lattice": {"elements": ["0", "a", "b", "I"],
                    "leq": [["0", "a"], ["0", "b"], ["a", "I"], ["b", "I"]]},
        "xi": {"p": ["I"]}})";
    CliResult r = run_cli({"validate"}, doc);
    CHECK(r.code == 1);
    json out = json::parse(r.out);
    CHECK(out["valid"] == false);
    REQUIRE(out["errors"].size() == 1);
    CHECK(out["errors"][0]["kind"] == "OrderAxiomBackward");
    CHECK(out["errors"][0]["witnesses"].size() == 4);
}

TEST_CASE("convert produces the associated system") {
    CliResult r = run_cli({"convert"}, e5_doc);
    CHECK(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["kind"] == "sps");
    CHECK(doc["lattice"]["elements"].size() == 4);
    // canonical element order is lexicographic: "{1,2,3,4}" sorts before "{1,2}"
    CHECK(doc["xi"]["1"] == json::array({"{1,2,3,4}", "{1,2}"}));

    // and back again: the system maps to its space of extents
    CliResult back = run_cli({"convert"}, r.out);
    CHECK(back.code == 0);
    json space = json::parse(back.out);
    CHECK(space["kind"] == "closure_space");
    CHECK(space["points"] == json::array({"1", "2", "3", "4"}));
    CHECK(space["closed_sets"].size() == 4);
}

TEST_CASE("classical lists complements") {
    CliResult r = run_cli({"classical"}, e5_doc);
    CHECK(r.code == 0);
    json out = json::parse(r.out);
    REQUIRE(out["classical_elements"].size() == 4);
    bool found = false;
    for (const auto& entry : out["classical_elements"])
        if (entry["element"] == "{1,2}" && entry["complement"] == "{3,4}") found = true;
    CHECK(found);
    CHECK(out["pure_nonclassical"] == false);

    CliResult r4 = run_cli({"classical"}, e4_doc);
    CHECK(json::parse(r4.out)["pure_nonclassical"] == true);
}

TEST_CASE("components prints the partition") {
    CliResult r = run_cli({"components"}, e5_doc);
    CHECK(r.code == 0);
    json out = json::parse(r.out);
    CHECK(out["components"] == json::array({json::array({"1", "2"}), json::array({"3", "4"})}));
    CHECK(out["connected"] == false);
}

TEST_CASE("decompose summarizes parts and skeleton") {
    CliResult r = run_cli({"decompose"}, e5_doc);
    CHECK(r.code == 0);
    json out = json::parse(r.out);
    CHECK(out["checks_passed"] == true);
    CHECK(out["parts"].size() == 2);
    CHECK(out["skeleton"]["lattice"]["elements"].size() == 4);
    CHECK(out["labels"] == json::array({"{1,2}", "{3,4}"}));
}

TEST_CASE("classical-part emits a valid system and the dimension check") {
    CliResult r = run_cli({"classical-part"}, e4_doc);
    CHECK(r.code == 0);
    json out = json::parse(r.out);
    CHECK(out["weakly_zero_dimensional"] == true);
    CHECK(out["classical_part"]["lattice"]["elements"].size() == 2);
}

TEST_CASE("enumerate streams one document per line") {
    CliResult r = run_cli({"enumerate", "--n", "2"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        json doc = json::parse(line);
        CHECK(doc["kind"] == "closure_space");
        ++count;
    }
    CHECK(count == 4);
}

TEST_CASE("check-theorems exits cleanly on small instances") {
    CliResult r = run_cli({"check-theorems", "--max-n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("check-theorems pairs its exit code with the verdict") {
    // sampling may legitimately hit counterexample spaces; either way the
    // exit code must match the printed verdict
    CliResult r = run_cli({"check-theorems", "--max-n", "1", "--samples", "60", "--seed", "7"});
    if (r.code == 0)
        CHECK(r.out.find("all checks passed") != std::string::npos);
    else {
        CHECK(r.code == 2);
        CHECK(r.out.find("counterexamples found") != std::string::npos);
    }
}

TEST_CASE("decompose surfaces skeleton counterexamples with exit code 2") {
    // components {0,2}, {1}, {3}; cl({1} ∪ {3}) cuts {0,2}
    const char* doc = R"({"kind": "closure_space", "points": ["0", "1", "2", "3"],
        "closed_sets": [[], ["0"], ["1"], ["0", "1"], ["0", "2"], ["0", "1", "2"],
                        ["3"], ["0", "1", "3"], ["0", "1", "2", "3"]]})";
    CliResult r = run_cli({"decompose"}, doc);
    CHECK(r.code == 2);
    json out = json::parse(r.out);
    CHECK(out["checks_passed"] == false);
    REQUIRE(out["failures"].size() == 1);
    std::string failure = out["failures"][0];
    CHECK(failure.find("not well defined") != std::string::npos);
}

TEST_CASE("check-theorems writes replayable certificates") {
    // seed 1 deterministically samples spaces that defeat the skeleton step
    auto dir = std::filesystem::temp_directory_path() / "spslab_cert_test";
    std::filesystem::remove_all(dir);
    CliResult r = run_cli({"check-theorems", "--max-n", "1", "--samples", "20", "--seed", "1",
                           "--certificates", dir.string()});
    CHECK(r.code == 2);
    REQUIRE(std::filesystem::exists(dir));
    int count = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        std::ifstream in(entry.path());
        std::stringstream text;
        text << in.rdbuf();
        CliResult replay = run_cli({"validate"}, text.str());
        CHECK(replay.code == 0);  // the certificate is a well-formed instance
        ++count;
    }
    CHECK(count > 0);
    std::filesystem::remove_all(dir);
}

TEST_CASE("export-dot renders either kind") {
    CliResult space = run_cli({"export-dot"}, e5_doc);
    CHECK(space.code == 0);
    CHECK(space.out.find("graph components") != std::string::npos);

    CliResult sps = run_cli({"convert"}, e5_doc);
    CliResult hasse = run_cli({"export-dot"}, sps.out);
    CHECK(hasse.code == 0);
    CHECK(hasse.out.find("digraph") != std::string::npos);
}

TEST_CASE("usage errors exit with code 3") {
    CHECK(run_cli({"no-such-command"}).code == 3);
    CHECK(run_cli({}).code == 3);
    CHECK(run_cli({"enumerate"}).code == 3);  // --n is required
}

TEST_CASE("malformed input exits with code 1") {
    CHECK(run_cli({"components"}, "{").code == 1);
    CHECK(run_cli({"decompose"}, R"({"kind": "closure_space", "points": ["0"],
        "closed_sets": []})").code == 1);
}
