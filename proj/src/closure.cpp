#include "spslab/closure.hpp"

#include <algorithm>

namespace spslab {

ClosureSpace ClosureSpace::build(std::vector<std::string> points, std::vector<Mask> closed_sets) {
    if (points.empty()) throw Error("closure space universe must be nonempty");
    if (points.size() > max_universe_size)
        throw Error("universe exceeds the supported maximum of " +
                    std::to_string(max_universe_size) + " points");

    ClosureSpace cs;
    cs.points_ = std::move(points);
    for (std::size_t i = 0; i < cs.points_.size(); ++i) {
        if (!cs.index_.emplace(cs.points_[i], i).second)
            throw Error("duplicate point '" + cs.points_[i] + "'");
    }

    const Mask universe = cs.universe();
    for (Mask f : closed_sets) {
        if (!mask_subset(f, universe))
            throw UnknownPointError("closed set refers to points outside the universe");
        if (cs.closed_lookup_.insert(f).second) cs.closed_.push_back(f);
    }
    if (!cs.closed_lookup_.count(0)) throw MissingEmptySetError("the empty set must be closed");
    if (cs.closed_lookup_.insert(universe).second) {
        cs.closed_.push_back(universe);
        cs.universe_added_ = true;
    }
    std::sort(cs.closed_.begin(), cs.closed_.end());

    for (std::size_t i = 0; i < cs.closed_.size(); ++i) {
        for (std::size_t j = i + 1; j < cs.closed_.size(); ++j) {
            if (!cs.closed_lookup_.count(cs.closed_[i] & cs.closed_[j]))
                throw NotIntersectionClosedError("family is not intersection-closed: witness pair " +
                                                 cs.format(cs.closed_[i]) + ", " +
                                                 cs.format(cs.closed_[j]));
        }
    }
    return cs;
}

std::size_t ClosureSpace::point_index(const std::string& point) const {
    auto it = index_.find(point);
    if (it == index_.end()) throw UnknownPointError("unknown point '" + point + "'");
    return it->second;
}

void ClosureSpace::check_mask(Mask a) const {
    if (!mask_subset(a, universe()))
        throw UnknownPointError("subset refers to points outside the universe");
}

Mask ClosureSpace::closure(Mask a) const {
    check_mask(a);
    Mask acc = universe();
    for (Mask f : closed_)
        if (mask_subset(a, f)) acc &= f;
    return acc;
}

bool ClosureSpace::is_clopen(Mask a) const {
    check_mask(a);
    return is_closed(a) && is_closed(universe() & ~a);
}

ClosureSpace ClosureSpace::subspace(Mask a) const {
    check_mask(a);
    if (a == 0) throw EmptySubspaceError("subspace universe must be nonempty");

    std::vector<std::size_t> member = mask_members(a);
    std::vector<std::string> sub_points;
    sub_points.reserve(member.size());
    for (std::size_t p : member) sub_points.push_back(points_[p]);

    std::vector<Mask> traces;
    std::unordered_set<Mask> seen;
    for (Mask f : closed_) {
        Mask trace = 0;
        for (std::size_t k = 0; k < member.size(); ++k)
            if (f >> member[k] & 1) trace |= Mask{1} << k;
        if (seen.insert(trace).second) traces.push_back(trace);
    }
    return build(std::move(sub_points), std::move(traces));
}

bool ClosureSpace::is_connected() const {
    const Mask universe_mask = universe();
    for (Mask f : closed_)
        if (f != 0 && f != universe_mask && is_closed(universe_mask & ~f)) return false;
    return true;
}

bool ClosureSpace::is_connected_subset(Mask a) const {
    check_mask(a);
    if (mask_size(a) <= 1) return true;
    std::unordered_set<Mask> traces;
    for (Mask f : closed_) traces.insert(f & a);
    for (Mask t : traces)
        if (t != 0 && t != a && traces.count(a & ~t)) return false;
    return true;
}

// Quasi-component refinement: split the region by its clopen traces, then
// recurse into each block. Connected sets are never split by clopen sets, so
// every component lies inside one block; each recursion strictly refines.
void ClosureSpace::components_within(Mask region, std::vector<Mask>& out) const {
    if (region == 0) return;
    if (mask_size(region) == 1) {
        out.push_back(region);
        return;
    }

    std::unordered_set<Mask> traces;
    for (Mask f : closed_) traces.insert(f & region);
    std::vector<Mask> clopen_traces;
    for (Mask t : traces)
        if (t != 0 && t != region && traces.count(region & ~t)) clopen_traces.push_back(t);
    if (clopen_traces.empty()) {
        out.push_back(region);  // no proper clopen trace: the region is connected
        return;
    }

    std::vector<Mask> blocks{region};
    for (Mask u : clopen_traces) {
        std::vector<Mask> next;
        for (Mask b : blocks) {
            if (Mask in = b & u) next.push_back(in);
            if (Mask rest = b & ~u) next.push_back(rest);
        }
        blocks.swap(next);
    }
    for (Mask b : blocks) components_within(b, out);
}

std::vector<Mask> ClosureSpace::components() const {
    std::vector<Mask> out;
    components_within(universe(), out);
    std::sort(out.begin(), out.end());
    return out;
}

Mask ClosureSpace::component_of(std::size_t point) const {
    if (point >= points_.size())
        throw UnknownPointError("point index " + std::to_string(point) + " out of range");
    for (Mask block : components())
        if (block >> point & 1) return block;
    throw Error("internal: components do not cover the universe");
}

bool ClosureSpace::is_totally_disconnected() const {
    for (Mask block : components())
        if (mask_size(block) > 1) return false;
    return true;
}

bool ClosureSpace::is_weakly_zero_dimensional() const {
    std::vector<Mask> clopens;
    for (Mask f : closed_)
        if (is_clopen(f)) clopens.push_back(f);
    // The clopen family is the maximal candidate base: a clopen base exists
    // iff every closed set is the intersection of its clopen supersets.
    for (Mask f : closed_) {
        Mask acc = universe();
        for (Mask u : clopens)
            if (mask_subset(f, u)) acc &= u;
        if (acc != f) return false;
    }
    return true;
}

}  // namespace spslab
