#include "spslab/checks.hpp"

#include <algorithm>

#include "spslab/bridge.hpp"
#include "spslab/classical.hpp"
#include "spslab/decompose.hpp"
#include "spslab/oracle.hpp"

namespace spslab {

namespace {

void fail(TheoremRunReport& report, const ClosureSpace& cs, std::string check, std::string detail) {
    report.counterexamples.push_back(Counterexample{cs, std::move(check), std::move(detail)});
}

void count(TheoremRunReport& report, const std::string& check) { ++report.checks_run[check]; }

}  // namespace

void check_space(const ClosureSpace& cs, TheoremRunReport& report) {
    ++report.spaces_checked;
    const StatePropertySystem sps = to_sps(cs);
    const FiniteLattice& lat = sps.lattice();
    const std::size_t n = lat.size();

    count(report, "round_trip");
    for (const std::string& m : check_round_trips(cs, sps)) fail(report, cs, "round_trip", m);

    // Super-selection lemma: the definitional condition, extent-of-join =
    // union-of-extents, and union-of-extents being an extent are equivalent.
    count(report, "ssr_lemma");
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            bool definitional = naive_ssr(sps, a, b);
            bool extent_union = sps.cartan(lat.join(a, b)) == (sps.cartan(a) | sps.cartan(b));
            bool union_closed = sps.property_with_extent(sps.cartan(a) | sps.cartan(b)).has_value();
            if (definitional != extent_union || extent_union != union_closed ||
                definitional != is_ssr(sps, a, b))
                fail(report, cs, "ssr_lemma",
                     "conditions disagree on ('" + lat.name(a) + "', '" + lat.name(b) + "')");
        }
    }

    count(report, "classical_iff_clopen");
    {
        std::vector<std::size_t> cls = classical_elements(sps);
        for (std::size_t a = 0; a < n; ++a) {
            bool fast = is_classical(sps, a);
            bool brute = naive_classical(sps, a);
            bool clopen = cs.is_clopen(sps.cartan(a));
            bool listed = std::find(cls.begin(), cls.end(), a) != cls.end();
            if (fast != brute || fast != clopen || listed != fast)
                fail(report, cs, "classical_iff_clopen",
                     "classicality routes disagree on '" + lat.name(a) + "'");
        }
    }

    count(report, "complement_identities");
    for (std::size_t a = 0; a < n; ++a) {
        if (!is_classical(sps, a)) continue;
        std::size_t ac = complement(sps, a);
        if (complement(sps, ac) != a)
            fail(report, cs, "complement_identities",
                 "complement is not an involution at '" + lat.name(a) + "'");
        if (sps.cartan(ac) != (sps.all_states() & ~sps.cartan(a)))
            fail(report, cs, "complement_identities",
                 "complement extent is not the set complement at '" + lat.name(a) + "'");
        for (std::size_t p = 0; p < sps.state_count(); ++p)
            if (sps.is_actual(a, p) == sps.is_actual(ac, p))
                fail(report, cs, "complement_identities",
                     "exactly one of a property and its complement must be actual; fails at '" +
                         lat.name(a) + "', state '" + sps.states()[p] + "'");
        for (std::size_t b = 0; b < n; ++b) {
            if (!is_classical(sps, b) || !lat.leq(a, b)) continue;
            if (!lat.leq(complement(sps, b), ac))
                fail(report, cs, "complement_identities",
                     "complement does not reverse order on ('" + lat.name(a) + "', '" +
                         lat.name(b) + "')");
        }
    }

    count(report, "pure_nonclassical_iff_connected");
    if (is_pure_nonclassical(sps) != cs.is_connected())
        fail(report, cs, "pure_nonclassical_iff_connected",
             "pure nonclassicality disagrees with connectedness");

    if (cs.universe_size() <= exhaustive_cap) {
        count(report, "components_oracle");
        if (cs.components() != naive_components(cs))
            fail(report, cs, "components_oracle",
                 "component partition disagrees with the brute-force oracle");
    }

    count(report, "decomposition");
    try {
        Decomposition dec = decompose(sps);
        for (const std::string& m : verify_decomposition(sps, dec))
            fail(report, cs, "decomposition", m);
    } catch (const Error& e) {
        fail(report, cs, "decomposition", e.what());
    }

    count(report, "classical_part");
    try {
        StatePropertySystem part = classical_part(sps);
        std::vector<std::vector<std::size_t>> part_xi(part.state_count());
        for (std::size_t p = 0; p < part.state_count(); ++p) part_xi[p] = part.xi(p);
        if (!StatePropertySystem::validate(part.states(), part.lattice(), part_xi).empty())
            fail(report, cs, "classical_part", "classical part fails axiom validation");
        if (!to_closure_space(part).is_weakly_zero_dimensional())
            fail(report, cs, "classical_part",
                 "classical part closure space is not weakly zero-dimensional");
    } catch (const Error& e) {
        fail(report, cs, "classical_part", e.what());
    }
}

TheoremRunReport run_theorem_checks(std::size_t max_n, std::size_t samples, std::uint64_t seed) {
    TheoremRunReport report;
    for (std::size_t n = 1; n <= max_n; ++n) {
        ClosureSpaceEnumerator cursor(n);
        while (auto cs = cursor.next()) check_space(*cs, report);
    }
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        ClosureSpace cs = sample_closure_space(4 + i % 2, rng);
        check_space(cs, report);
    }
    return report;
}

}  // namespace spslab
