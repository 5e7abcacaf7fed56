#include "spslab/oracle.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace spslab {

namespace {

std::vector<std::string> digit_points(std::size_t n) {
    std::vector<std::string> points;
    points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) points.push_back(std::to_string(i));
    return points;
}

bool intersection_closed(const std::vector<Mask>& family) {
    std::unordered_set<Mask> lookup(family.begin(), family.end());
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (!lookup.count(family[i] & family[j])) return false;
    return true;
}

}  // namespace

ClosureSpaceEnumerator::ClosureSpaceEnumerator(std::size_t n) : n_(n) {
    if (n < 1) throw TooLargeError("enumeration needs at least one point");
    if (n > exhaustive_cap)
        throw TooLargeError("exhaustive enumeration is capped at " +
                            std::to_string(exhaustive_cap) + " points");
}

std::optional<ClosureSpace> ClosureSpaceEnumerator::next() {
    const Mask universe = full_mask(n_);
    // Candidates select among the proper nonempty subsets 1 .. universe-1.
    const std::uint64_t candidates = std::uint64_t{1} << (universe - 1);
    while (!done_) {
        const std::uint64_t selection = candidate_;
        std::vector<Mask> family{0, universe};
        for (Mask m = 1; m < universe; ++m)
            if (selection >> (m - 1) & 1) family.push_back(m);

        if (candidate_ + 1 == candidates) done_ = true;
        ++candidate_;

        if (intersection_closed(family)) {
            ++index_;
            return ClosureSpace::build(digit_points(n_), std::move(family));
        }
    }
    return std::nullopt;
}

std::vector<ClosureSpace> enumerate_closure_spaces(std::size_t n) {
    ClosureSpaceEnumerator cursor(n);
    std::vector<ClosureSpace> out;
    while (auto cs = cursor.next()) out.push_back(std::move(*cs));
    return out;
}

ClosureSpace sample_closure_space(std::size_t n, std::mt19937_64& rng) {
    if (n < 1 || n > max_universe_size) throw TooLargeError("unsupported sample size");
    const Mask universe = full_mask(n);
    std::uniform_int_distribution<std::size_t> count_dist(0, 2 * n);
    std::uniform_int_distribution<Mask> subset_dist(0, universe);

    std::unordered_set<Mask> family{0, universe};
    const std::size_t generators = count_dist(rng);
    for (std::size_t i = 0; i < generators; ++i) family.insert(subset_dist(rng));

    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Mask> snapshot(family.begin(), family.end());
        for (std::size_t i = 0; i < snapshot.size(); ++i)
            for (std::size_t j = i + 1; j < snapshot.size(); ++j)
                if (family.insert(snapshot[i] & snapshot[j]).second) grew = true;
    }
    return ClosureSpace::build(digit_points(n), std::vector<Mask>(family.begin(), family.end()));
}

std::vector<Mask> naive_components(const ClosureSpace& cs) {
    const std::size_t n = cs.universe_size();
    if (n > exhaustive_cap)
        throw TooLargeError("the brute-force component oracle is capped at " +
                            std::to_string(exhaustive_cap) + " points");

    std::vector<Mask> connected;
    for (Mask a = 0; a <= cs.universe(); ++a)
        if (cs.is_connected_subset(a)) connected.push_back(a);

    std::vector<Mask> out;
    for (std::size_t x = 0; x < n; ++x) {
        Mask component = 0;
        for (Mask a : connected)
            if (a >> x & 1) component |= a;
        if (std::find(out.begin(), out.end(), component) == out.end()) out.push_back(component);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool naive_ssr(const StatePropertySystem& sps, std::size_t a, std::size_t b) {
    std::size_t joined = sps.lattice().join(a, b);
    for (std::size_t p = 0; p < sps.state_count(); ++p)
        if (sps.is_actual(joined, p) && !sps.is_actual(a, p) && !sps.is_actual(b, p)) return false;
    return true;
}

std::optional<std::size_t> naive_complement_search(const StatePropertySystem& sps, std::size_t a) {
    const FiniteLattice& lat = sps.lattice();
    for (std::size_t b = 0; b < lat.size(); ++b) {
        if (lat.join(a, b) == lat.top() && lat.meet(a, b) == lat.bottom() && naive_ssr(sps, a, b))
            return b;
    }
    return std::nullopt;
}

bool naive_classical(const StatePropertySystem& sps, std::size_t a) {
    return naive_complement_search(sps, a).has_value();
}

}  // namespace spslab
