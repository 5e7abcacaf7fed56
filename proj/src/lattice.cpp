#include "spslab/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace spslab {

FiniteLattice FiniteLattice::build(std::vector<std::string> elements,
                                   const std::vector<std::pair<std::string, std::string>>& leq_pairs) {
    if (elements.empty()) throw EmptyLatticeError("lattice must have at least one element");

    const std::size_t n = elements.size();
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) {
        if (!index.emplace(elements[i], i).second)
            throw Error("duplicate lattice element '" + elements[i] + "'");
    }

    // Reflexive closure, then transitive closure over input-indexed rows.
    std::vector<Bits> up(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i) up[i].set(i);
    for (const auto& [lo, hi] : leq_pairs) {
        auto il = index.find(lo);
        auto ih = index.find(hi);
        if (il == index.end()) throw UnknownElementError("unknown lattice element '" + lo + "'");
        if (ih == index.end()) throw UnknownElementError("unknown lattice element '" + hi + "'");
        up[il->second].set(ih->second);
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (up[i].test(k)) up[i] |= up[k];

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (up[a].test(b) && up[b].test(a))
                throw CycleError("antisymmetry violated: '" + elements[a] + "' and '" + elements[b] +
                                 "' are mutually below each other");

    std::vector<Bits> down(n, Bits(n));
    for (std::size_t a = 0; a < n; ++a)
        up[a].for_each([&](std::size_t b) { down[b].set(a); });

    // Linear extension: sort by down-set size. a < b implies |down(a)| < |down(b)|.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> down_count(n);
    for (std::size_t e = 0; e < n; ++e) down_count[e] = down[e].count();
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return down_count[a] != down_count[b] ? down_count[a] < down_count[b] : a < b;
    });

    FiniteLattice lat;
    lat.names_ = std::move(elements);
    lat.index_ = std::move(index);
    lat.elem_at_rank_ = order;
    lat.rank_of_.resize(n);
    for (std::size_t r = 0; r < n; ++r) lat.rank_of_[order[r]] = r;

    lat.below_.assign(n, Bits(n));
    lat.above_.assign(n, Bits(n));
    for (std::size_t e = 0; e < n; ++e) {
        down[e].for_each([&](std::size_t x) { lat.below_[e].set(lat.rank_of_[x]); });
        up[e].for_each([&](std::size_t x) { lat.above_[e].set(lat.rank_of_[x]); });
    }

    // Every pair needs a greatest lower bound and a least upper bound. The
    // extreme-rank member of the bound set is the only candidate.
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            Bits lower = lat.below_[a] & lat.below_[b];
            int r = lower.highest();
            if (r < 0 || !lower.is_subset_of(lat.below_[lat.elem_at_rank_[r]]))
                throw NotALatticeError("elements '" + lat.names_[a] + "' and '" + lat.names_[b] +
                                       "' have no meet");
            Bits upper = lat.above_[a] & lat.above_[b];
            r = upper.lowest();
            if (r < 0 || !upper.is_subset_of(lat.above_[lat.elem_at_rank_[r]]))
                throw NotALatticeError("elements '" + lat.names_[a] + "' and '" + lat.names_[b] +
                                       "' have no join");
        }
    }

    lat.bottom_ = lat.elem_at_rank_[0];
    lat.top_ = lat.elem_at_rank_[n - 1];
    if (lat.above_[lat.bottom_].count() != n || lat.below_[lat.top_].count() != n)
        throw NotALatticeError("lattice has no global bottom or top");
    return lat;
}

std::size_t FiniteLattice::index_of(const std::string& element) const {
    auto it = index_.find(element);
    if (it == index_.end()) throw UnknownElementError("unknown lattice element '" + element + "'");
    return it->second;
}

void FiniteLattice::check_element(std::size_t e) const {
    if (e >= names_.size())
        throw UnknownElementError("lattice element index " + std::to_string(e) + " out of range");
}

bool FiniteLattice::leq(std::size_t a, std::size_t b) const {
    check_element(a);
    check_element(b);
    return below_[b].test(rank_of_[a]);
}

std::size_t FiniteLattice::meet(std::size_t a, std::size_t b) const {
    check_element(a);
    check_element(b);
    Bits lower = below_[a] & below_[b];
    return elem_at_rank_[static_cast<std::size_t>(lower.highest())];
}

std::size_t FiniteLattice::join(std::size_t a, std::size_t b) const {
    check_element(a);
    check_element(b);
    Bits upper = above_[a] & above_[b];
    return elem_at_rank_[static_cast<std::size_t>(upper.lowest())];
}

std::size_t FiniteLattice::meet(std::span<const std::size_t> elems) const {
    std::size_t acc = top_;
    for (std::size_t e : elems) acc = meet(acc, e);
    return acc;
}

std::size_t FiniteLattice::join(std::span<const std::size_t> elems) const {
    std::size_t acc = bottom_;
    for (std::size_t e : elems) acc = join(acc, e);
    return acc;
}

std::vector<std::size_t> FiniteLattice::downset(std::size_t a) const {
    check_element(a);
    std::vector<std::size_t> out;
    below_[a].for_each([&](std::size_t r) { out.push_back(elem_at_rank_[r]); });
    std::sort(out.begin(), out.end());
    return out;
}

FiniteLattice FiniteLattice::segment(std::size_t a) const {
    std::vector<std::size_t> elems = downset(a);
    std::vector<std::string> names;
    names.reserve(elems.size());
    for (std::size_t e : elems) names.push_back(names_[e]);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t x : elems)
        for (std::size_t y : elems)
            if (x != y && leq(x, y)) pairs.emplace_back(names_[x], names_[y]);
    return build(std::move(names), pairs);
}

bool FiniteLattice::is_atom(std::size_t a) const {
    check_element(a);
    return a != bottom_ && below_[a].count() == 2;
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteLattice::hasse_edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    const std::size_t n = size();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (x == y || !leq(x, y)) continue;
            Bits between = above_[x] & below_[y];
            if (between.count() == 2) edges.emplace_back(x, y);
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

bool FiniteLattice::operator==(const FiniteLattice& o) const {
    if (names_ != o.names_) return false;
    for (std::size_t a = 0; a < size(); ++a)
        for (std::size_t b = 0; b < size(); ++b)
            if (leq(a, b) != o.leq(a, b)) return false;
    return true;
}

}  // namespace spslab
