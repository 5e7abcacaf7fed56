#include "spslab/bridge.hpp"

#include <algorithm>
#include <unordered_map>

namespace spslab {

ClosureSpace to_closure_space(const StatePropertySystem& sps) {
    std::vector<Mask> closed;
    closed.reserve(sps.lattice().size());
    for (std::size_t e = 0; e < sps.lattice().size(); ++e) closed.push_back(sps.cartan(e));
    return ClosureSpace::build(sps.states(), std::move(closed));
}

StatePropertySystem to_sps(const ClosureSpace& cs) {
    const std::vector<Mask>& family = cs.closed_sets();
    std::vector<std::string> names;
    names.reserve(family.size());
    for (Mask f : family) names.push_back(cs.format(f));

    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = 0; j < family.size(); ++j)
            if (i != j && mask_subset(family[i], family[j])) pairs.emplace_back(names[i], names[j]);
    FiniteLattice lattice = FiniteLattice::build(std::move(names), pairs);

    std::vector<std::vector<std::size_t>> xi(cs.universe_size());
    for (std::size_t p = 0; p < cs.universe_size(); ++p)
        for (std::size_t e = 0; e < family.size(); ++e)
            if (family[e] >> p & 1) xi[p].push_back(e);
    return StatePropertySystem::build(cs.points(), std::move(lattice), xi);
}

std::vector<std::string> check_closure_round_trip(const ClosureSpace& cs) {
    std::vector<std::string> mismatches;
    ClosureSpace round = to_closure_space(to_sps(cs));
    if (round.points() != cs.points()) mismatches.push_back("round trip changed the universe");
    if (round.closed_sets() != cs.closed_sets()) {
        for (Mask f : cs.closed_sets())
            if (!round.is_closed(f))
                mismatches.push_back("closed set " + cs.format(f) + " lost in round trip");
        for (Mask f : round.closed_sets())
            if (!cs.is_closed(f))
                mismatches.push_back("closed set " + cs.format(f) + " gained in round trip");
    }
    return mismatches;
}

std::vector<std::string> check_sps_round_trip(const StatePropertySystem& sps) {
    std::vector<std::string> mismatches;
    StatePropertySystem round = to_sps(to_closure_space(sps));
    const FiniteLattice& lat = sps.lattice();

    if (round.states() != sps.states()) {
        mismatches.push_back("round trip changed the state set");
        return mismatches;
    }
    if (round.lattice().size() != lat.size()) {
        mismatches.push_back("extent map is not a bijection onto the round-trip lattice (" +
                             std::to_string(lat.size()) + " properties vs " +
                             std::to_string(round.lattice().size()) + " closed sets)");
        return mismatches;
    }

    // a ↦ κ(a) as an element map into the round-trip lattice.
    std::vector<std::size_t> image(lat.size());
    for (std::size_t a = 0; a < lat.size(); ++a) {
        auto target = round.property_with_extent(sps.cartan(a));
        if (!target) {
            mismatches.push_back("extent of '" + lat.name(a) + "' is not a round-trip property");
            return mismatches;
        }
        image[a] = *target;
    }

    for (std::size_t a = 0; a < lat.size(); ++a)
        for (std::size_t b = 0; b < lat.size(); ++b)
            if (lat.leq(a, b) != round.lattice().leq(image[a], image[b]))
                mismatches.push_back("extent map does not preserve order on ('" + lat.name(a) +
                                     "', '" + lat.name(b) + "')");

    for (std::size_t p = 0; p < sps.state_count(); ++p) {
        std::vector<std::size_t> transported;
        for (std::size_t a : sps.xi(p)) transported.push_back(image[a]);
        std::sort(transported.begin(), transported.end());
        if (transported != round.xi(p))
            mismatches.push_back("actuality set of state '" + sps.states()[p] +
                                 "' is not preserved by the extent map");
    }
    return mismatches;
}

std::vector<std::string> check_round_trips(const ClosureSpace& cs, const StatePropertySystem& sps) {
    std::vector<std::string> all = check_closure_round_trip(cs);
    std::vector<std::string> second = check_sps_round_trip(sps);
    all.insert(all.end(), second.begin(), second.end());
    return all;
}

}  // namespace spslab
