#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spslab/bits.hpp"
#include "spslab/errors.hpp"

namespace spslab {

/// A finite bounded lattice. Elements keep their construction order; the
/// order relation is stored densely after reflexive-transitive closure, so
/// order queries and meets/joins are cheap. Finiteness plus the validated
/// existence of all pairwise meets and joins makes the lattice complete.
///
/// Immutable after construction.
class FiniteLattice {
public:
    /// Builds the lattice whose order is the reflexive-transitive closure of
    /// `leq_pairs`. Validates antisymmetry and the existence of every
    /// pairwise meet and join.
    ///
    /// Throws EmptyLatticeError, UnknownElementError, CycleError,
    /// NotALatticeError.
    static FiniteLattice build(std::vector<std::string> elements,
                               const std::vector<std::pair<std::string, std::string>>& leq_pairs);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& elements() const { return names_; }
    const std::string& name(std::size_t e) const { return names_[e]; }
    std::size_t index_of(const std::string& element) const;

    bool leq(std::size_t a, std::size_t b) const;
    std::size_t bottom() const { return bottom_; }
    std::size_t top() const { return top_; }

    std::size_t meet(std::size_t a, std::size_t b) const;
    std::size_t join(std::size_t a, std::size_t b) const;
    /// Meet of a family of elements; the empty family yields top.
    std::size_t meet(std::span<const std::size_t> elems) const;
    /// Join of a family of elements; the empty family yields bottom.
    std::size_t join(std::span<const std::size_t> elems) const;

    /// Elements of the interval [bottom, a], ascending by element index.
    std::vector<std::size_t> downset(std::size_t a) const;
    /// The interval [bottom, a] as a lattice of its own; element names are
    /// preserved, top becomes a.
    FiniteLattice segment(std::size_t a) const;
    bool is_atom(std::size_t a) const;
    /// Covering pairs (x, y): x < y with nothing strictly between. The
    /// transitive reduction of the order.
    std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;

    /// Same element list and same order relation.
    bool operator==(const FiniteLattice& o) const;

private:
    FiniteLattice() = default;
    void check_element(std::size_t e) const;

    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
    // Rows are indexed by topological rank so the meet (join) of a pair is
    // the highest (lowest) surviving rank after intersecting rows.
    std::vector<Bits> below_;  // below_[e] = ranks of {x : x <= e}
    std::vector<Bits> above_;  // above_[e] = ranks of {x : e <= x}
    std::vector<std::size_t> rank_of_;
    std::vector<std::size_t> elem_at_rank_;
    std::size_t bottom_ = 0;
    std::size_t top_ = 0;
};

}  // namespace spslab
