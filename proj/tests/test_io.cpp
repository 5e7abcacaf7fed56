#include <doctest.h>

#include "fixtures.hpp"
#include "spslab/io.hpp"

using namespace spslab;

namespace {

const char* e5_doc = R"({
  "kind": "closure_space",
  "points": ["1", "2", "3", "4"],
  "closed_sets": [[], ["1", "2"], ["3", "4"], ["1", "2", "3", "4"]]
})";

const char* g_e2_doc = R"({
  "kind": "sps",
  "states": ["0", "1"],
  "lattice": {
    "elements": ["{}", "{0}", "{1}", "{0,1}"],
    "leq": [["{}", "{0}"], ["{}", "{1}"], ["{0}", "{0,1}"], ["{1}", "{0,1}"]]
  },
  "xi": {"0": ["{0}", "{0,1}"], "1": ["{1}", "{0,1}"]}
})";

}  // namespace

TEST_CASE("parsing closure-space documents") {
    StructureDocument doc = parse_document(e5_doc);
    REQUIRE(doc.is_closure_space());
    CHECK(doc.closure_space() == fixtures::e5());
}

TEST_CASE("parsing sps documents") {
    StructureDocument doc = parse_document(g_e2_doc);
    REQUIRE(!doc.is_closure_space());
    CHECK(doc.sps().state_count() == 2);
    CHECK(doc.sps().lattice().size() == 4);
}

TEST_CASE("parse diagnostics") {
    CHECK_THROWS_AS(parse_document("not json"), SyntaxError);
    CHECK_THROWS_AS(parse_document(R"({"kind": "mystery"})"), SyntaxError);
    CHECK_THROWS_AS(parse_document(R"({"points": ["0"]})"), SyntaxError);
    CHECK_THROWS_AS(
        parse_document(R"({"kind": "closure_space", "points": ["0"], "closed_sets": [["9"]]})"),
        UnknownPointError);
    // empty set missing from the family
    CHECK_THROWS_AS(
        parse_document(R"({"kind": "closure_space", "points": ["0"], "closed_sets": [["0"]]})"),
        MissingEmptySetError);
    // xi entry for an unknown state
    CHECK_THROWS_AS(parse_document(R"({"kind": "sps", "states": ["p"],
        "lattice": {"elements": ["0", "I"], "leq": [["0", "I"]]},
        "xi": {"p": ["I"], "q": ["I"]}})"),
                    SyntaxError);
    // xi value outside the lattice
    CHECK_THROWS_AS(parse_document(R"({"kind": "sps", "states": ["p"],
        "lattice": {"elements": ["0", "I"], "leq": [["0", "I"]]},
        "xi": {"p": ["missing"]}})"),
                    UnknownElementError);
    // a system violating the axioms is rejected at parse time
    CHECK_THROWS_AS(parse_document(R"({"kind": "sps", "states": ["p"],
        "lattice": {"elements": ["0", "I"], "leq": [["0", "I"]]},
        "xi": {"p": ["0", "I"]}})"),
                    SpsAxiomError);
}

TEST_CASE("canonical serialization is idempotent") {
    for (const char* text : {e5_doc, g_e2_doc}) {
        std::string first = serialize(canonicalize(parse_document(text)));
        std::string second = serialize(canonicalize(parse_document(first)));
        CHECK(first == second);
    }
}

TEST_CASE("canonicalization sorts points and remaps subsets") {
    StructureDocument doc = parse_document(R"({
        "kind": "closure_space",
        "points": ["b", "a"],
        "closed_sets": [[], ["b"], ["b", "a"]]
    })");
    StructureDocument canon = canonicalize(doc);
    CHECK(canon.closure_space().points() == std::vector<std::string>{"a", "b"});
    CHECK(canon.closure_space().is_closed(0b10));  // {b} after reindexing
    CHECK(!canon.closure_space().is_closed(0b01));
}

TEST_CASE("metadata round trip") {
    StructureDocument doc = parse_document(R"({
        "kind": "closure_space",
        "points": ["0"],
        "closed_sets": [[], ["0"]],
        "meta": {"name": "point", "description": "one-point space"}
    })");
    CHECK(doc.name == "point");
    std::string text = serialize(canonicalize(doc));
    StructureDocument again = parse_document(text);
    CHECK(again.name == "point");
    CHECK(again.description == "one-point space");
}

TEST_CASE("dot exports") {
    std::string hasse = to_dot_hasse(fixtures::m2());
    CHECK(hasse.find("digraph") != std::string::npos);
    CHECK(hasse.find("\"0\" -> \"a\"") != std::string::npos);
    CHECK(hasse.find("rankdir=BT") != std::string::npos);

    std::string comp = to_dot_components(fixtures::e5());
    CHECK(comp.find("cluster_0") != std::string::npos);
    CHECK(comp.find("cluster_1") != std::string::npos);
    CHECK(comp.find("\"3\"") != std::string::npos);
}
