#include <doctest.h>

#include <algorithm>
#include <optional>

#include "fixtures.hpp"
#include "spslab/lattice.hpp"

using namespace spslab;

namespace {

// Independent order-theoretic oracle: the greatest element of the set of
// common lower bounds, found by full enumeration.
std::optional<std::size_t> brute_meet(const FiniteLattice& lat, std::size_t a, std::size_t b) {
    std::vector<std::size_t> lower;
    for (std::size_t z = 0; z < lat.size(); ++z)
        if (lat.leq(z, a) && lat.leq(z, b)) lower.push_back(z);
    for (std::size_t m : lower) {
        bool greatest = true;
        for (std::size_t z : lower)
            if (!lat.leq(z, m)) greatest = false;
        if (greatest) return m;
    }
    return std::nullopt;
}

std::optional<std::size_t> brute_join(const FiniteLattice& lat, std::size_t a, std::size_t b) {
    std::vector<std::size_t> upper;
    for (std::size_t z = 0; z < lat.size(); ++z)
        if (lat.leq(a, z) && lat.leq(b, z)) upper.push_back(z);
    for (std::size_t j : upper) {
        bool least = true;
        for (std::size_t z : upper)
            if (!lat.leq(j, z)) least = false;
        if (least) return j;
    }
    return std::nullopt;
}

// The closed-set lattice of E4: same diamond shape as M2, labeled by subsets.
FiniteLattice e4_lattice() {
    return FiniteLattice::build({"{}", "{1}", "{2}", "{1,2,3}"},
                                {{"{}", "{1}"}, {"{}", "{2}"}, {"{1}", "{1,2,3}"}, {"{2}", "{1,2,3}"}});
}

FiniteLattice e5_lattice() {
    return FiniteLattice::build(
        {"{}", "{1,2}", "{3,4}", "{1,2,3,4}"},
        {{"{}", "{1,2}"}, {"{}", "{3,4}"}, {"{1,2}", "{1,2,3,4}"}, {"{3,4}", "{1,2,3,4}"}});
}

}  // namespace

TEST_CASE("three-element chain") {
    FiniteLattice lat = fixtures::chain3();
    CHECK(lat.size() == 3);
    CHECK(lat.name(lat.bottom()) == "0");
    CHECK(lat.name(lat.top()) == "I");
    CHECK(lat.leq(lat.index_of("0"), lat.index_of("I")));
    CHECK(!lat.leq(lat.index_of("I"), lat.index_of("a")));
}

TEST_CASE("antisymmetry violations are cycles") {
    CHECK_THROWS_AS(FiniteLattice::build({"x", "y"}, {{"x", "y"}, {"y", "x"}}), CycleError);
}

TEST_CASE("diamond meets and joins") {
    FiniteLattice lat = fixtures::m2();
    std::size_t a = lat.index_of("a"), b = lat.index_of("b");
    CHECK(lat.meet(a, b) == lat.bottom());
    CHECK(lat.join(a, b) == lat.top());
    CHECK(lat.meet(a, lat.top()) == a);
}

TEST_CASE("empty-family conventions") {
    FiniteLattice lat = fixtures::m2();
    CHECK(lat.meet({}) == lat.top());
    CHECK(lat.join({}) == lat.bottom());
}

TEST_CASE("meets and joins in the E4 closed-set lattice") {
    FiniteLattice lat = e4_lattice();
    std::size_t s1 = lat.index_of("{1}"), s2 = lat.index_of("{2}");
    // oracle first, frozen value second
    CHECK(brute_meet(lat, s1, s2) == lat.meet(s1, s2));
    CHECK(lat.name(lat.meet(s1, s2)) == "{}");
    CHECK(brute_join(lat, s1, s2) == lat.join(s1, s2));
    CHECK(lat.name(lat.join(s1, s2)) == "{1,2,3}");
}

TEST_CASE("segments") {
    FiniteLattice m2 = fixtures::m2();
    CHECK(m2.segment(m2.top()) == m2);

    FiniteLattice seg = m2.segment(m2.index_of("a"));
    CHECK(seg.elements() == std::vector<std::string>{"0", "a"});
    CHECK(seg.name(seg.top()) == "a");

    FiniteLattice e5 = e5_lattice();
    FiniteLattice seg5 = e5.segment(e5.index_of("{1,2}"));
    CHECK(seg5.elements() == std::vector<std::string>{"{}", "{1,2}"});
}

TEST_CASE("atoms") {
    FiniteLattice m2 = fixtures::m2();
    CHECK(m2.is_atom(m2.index_of("a")));
    CHECK(!m2.is_atom(m2.top()));
    CHECK(!m2.is_atom(m2.bottom()));

    FiniteLattice e5 = e5_lattice();
    CHECK(e5.is_atom(e5.index_of("{1,2}")));
}

TEST_CASE("hasse edges") {
    FiniteLattice chain = fixtures::chain3();
    auto edges = chain.hasse_edges();
    REQUIRE(edges.size() == 2);
    CHECK(chain.name(edges[0].first) == "0");
    CHECK(chain.name(edges[0].second) == "a");
    CHECK(chain.name(edges[1].first) == "a");
    CHECK(chain.name(edges[1].second) == "I");

    CHECK(fixtures::m2().hasse_edges().size() == 4);
    // E2's closed-set lattice is the Boolean square
    FiniteLattice e2 = FiniteLattice::build(
        {"{}", "{0}", "{1}", "{0,1}"},
        {{"{}", "{0}"}, {"{}", "{1}"}, {"{0}", "{0,1}"}, {"{1}", "{0,1}"}});
    CHECK(e2.hasse_edges().size() == 4);
}

TEST_CASE("hasse transitive closure equals the strict order") {
    for (const FiniteLattice& lat : {fixtures::m2(), fixtures::chain3(), e5_lattice()}) {
        auto edges = lat.hasse_edges();
        std::vector<std::vector<bool>> reach(lat.size(), std::vector<bool>(lat.size(), false));
        for (auto [x, y] : edges) reach[x][y] = true;
        for (std::size_t k = 0; k < lat.size(); ++k)
            for (std::size_t i = 0; i < lat.size(); ++i)
                for (std::size_t j = 0; j < lat.size(); ++j)
                    if (reach[i][k] && reach[k][j]) reach[i][j] = true;
        for (std::size_t i = 0; i < lat.size(); ++i)
            for (std::size_t j = 0; j < lat.size(); ++j)
                CHECK(reach[i][j] == (i != j && lat.leq(i, j)));
    }
}

TEST_CASE("pairwise meets and joins are bounds everywhere") {
    for (const FiniteLattice& lat : {fixtures::m2(), fixtures::chain3(), e4_lattice()}) {
        for (std::size_t a = 0; a < lat.size(); ++a) {
            for (std::size_t b = 0; b < lat.size(); ++b) {
                CHECK(lat.meet(a, b) == brute_meet(lat, a, b));
                CHECK(lat.join(a, b) == brute_join(lat, a, b));
                CHECK(lat.leq(lat.bottom(), a));
                CHECK(lat.leq(a, lat.top()));
            }
        }
    }
}

TEST_CASE("posets without meets or joins are rejected") {
    // two incomparable elements: no common bound at all
    CHECK_THROWS_AS(FiniteLattice::build({"x", "y"}, {}), NotALatticeError);
    // bottom exists but {a, b} has two minimal upper bounds
    CHECK_THROWS_AS(FiniteLattice::build({"0", "a", "b", "x", "y"},
                                         {{"0", "a"},
                                          {"0", "b"},
                                          {"a", "x"},
                                          {"b", "x"},
                                          {"a", "y"},
                                          {"b", "y"}}),
                    NotALatticeError);
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(FiniteLattice::build({}, {}), EmptyLatticeError);
    CHECK_THROWS_AS(FiniteLattice::build({"a"}, {{"a", "zzz"}}), UnknownElementError);
    CHECK_THROWS_AS(FiniteLattice::build({"a", "a"}, {}), Error);
    FiniteLattice lat = fixtures::chain3();
    CHECK_THROWS_AS(lat.index_of("nope"), UnknownElementError);
    CHECK_THROWS_AS(lat.meet(0, 99), UnknownElementError);
}

TEST_CASE("downsets are ascending and ordered by construction order") {
    FiniteLattice m2 = fixtures::m2();
    auto down = m2.downset(m2.index_of("a"));
    CHECK(down == std::vector<std::size_t>{m2.index_of("0"), m2.index_of("a")});
    CHECK(m2.downset(m2.top()).size() == 4);
}
