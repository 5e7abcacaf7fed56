#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "spslab/errors.hpp"
#include "spslab/subset.hpp"

namespace spslab {

/// A finite closure space: a universe of named points plus a family of
/// closed subsets containing the empty set and (by the empty-intersection
/// convention) the universe, closed under intersections.
///
/// Need not be a topology: no closure under unions is assumed.
/// Immutable after construction.
class ClosureSpace {
public:
    /// Validates and normalizes the family. The universe is added when
    /// absent (reported via universe_added()); a missing empty set or a
    /// missing pairwise intersection is an error.
    ///
    /// Throws MissingEmptySetError, NotIntersectionClosedError (with the
    /// witness pair), UnknownPointError, Error (empty or oversized universe,
    /// duplicate point names).
    static ClosureSpace build(std::vector<std::string> points, std::vector<Mask> closed_sets);

    std::size_t universe_size() const { return points_.size(); }
    Mask universe() const { return full_mask(points_.size()); }
    const std::vector<std::string>& points() const { return points_; }
    std::size_t point_index(const std::string& point) const;
    /// Closed sets, ascending by mask value.
    const std::vector<Mask>& closed_sets() const { return closed_; }
    bool is_closed(Mask a) const { return closed_lookup_.count(a) != 0; }
    /// True when the universe was added during normalization.
    bool universe_added() const { return universe_added_; }

    /// Smallest closed superset of A.
    Mask closure(Mask a) const;
    /// Both A and its complement are closed.
    bool is_clopen(Mask a) const;
    /// The induced space on A: universe A, closed family {F ∩ A}.
    ClosureSpace subspace(Mask a) const;
    /// No clopen sets besides the empty set and the universe.
    bool is_connected() const;
    /// The empty set and singletons are connected by convention; otherwise
    /// connectivity of the induced subspace.
    bool is_connected_subset(Mask a) const;
    /// Maximal connected subset containing the point. Always closed.
    Mask component_of(std::size_t point) const;
    /// The partition of the universe into connection components, ascending
    /// by mask value.
    std::vector<Mask> components() const;
    bool is_totally_disconnected() const;
    /// Every closed set is an intersection of clopen sets.
    bool is_weakly_zero_dimensional() const;

    std::string format(Mask a) const { return format_mask(a, points_); }
    bool operator==(const ClosureSpace& o) const {
        return points_ == o.points_ && closed_ == o.closed_;
    }

private:
    ClosureSpace() = default;
    void check_mask(Mask a) const;
    void components_within(Mask region, std::vector<Mask>& out) const;

    std::vector<std::string> points_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<Mask> closed_;
    std::unordered_set<Mask> closed_lookup_;
    bool universe_added_ = false;
};

}  // namespace spslab
