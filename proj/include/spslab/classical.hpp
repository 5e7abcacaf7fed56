#pragma once

#include <cstddef>
#include <vector>

#include "spslab/lattice.hpp"
#include "spslab/sps.hpp"

namespace spslab {

/// a and b are separated by a super selection rule: any state making a ∨ b
/// actual makes a or b actual. Equivalently, the extent of the join is the
/// union of the extents.
bool is_ssr(const StatePropertySystem& sps, std::size_t a, std::size_t b);

/// a has a complement a^c with a ∨ a^c = top, a ∧ a^c = bottom, a ssr a^c.
/// Computed via the clopen criterion: the complement of κ(a) is itself an
/// extent. The definitional search lives in the oracle module.
bool is_classical(const StatePropertySystem& sps, std::size_t a);

/// The unique complement of a classical property. Throws NotClassicalError.
std::size_t complement(const StatePropertySystem& sps, std::size_t a);

/// All classical properties, ascending by element index. Always contains
/// bottom and top.
std::vector<std::size_t> classical_elements(const StatePropertySystem& sps);

/// Only bottom and top are classical.
bool is_pure_nonclassical(const StatePropertySystem& sps);

/// The meet-closure of the classical properties. Meets agree with the
/// ambient lattice; joins are recomputed within the carrier and may differ
/// from the ambient joins.
struct ClassicalLattice {
    std::vector<std::size_t> carrier;  // ambient element indices, ascending
    FiniteLattice lattice;             // induced order on the carrier

    /// Every element is the join (within the carrier) of the atoms below it.
    bool is_atomistic() const;
};

ClassicalLattice classical_property_lattice(const StatePropertySystem& sps);

/// The classical part: same states, the classical property lattice, and the
/// actuality sets restricted to it.
StatePropertySystem classical_part(const StatePropertySystem& sps);

}  // namespace spslab
