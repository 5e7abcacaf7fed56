#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "spslab/sps.hpp"

namespace spslab {

/// States are equivalent when they share a connection component of the
/// associated closure space. Returns the blocks, ascending by mask value.
std::vector<Mask> state_equivalence(const StatePropertySystem& sps);

/// The unique property whose extent is exactly the block. Components are
/// closed sets, so the property exists whenever the block really is a
/// component; NoSuchPropertyError flags the violation otherwise.
std::size_t component_label(const StatePropertySystem& sps, Mask block);

/// The sub-system over the interval [bottom, a]: states are the extent of a,
/// the lattice is the segment, actuality sets are restricted. Requires
/// a != bottom (the segment of bottom has no states).
StatePropertySystem segment_sub_sps(const StatePropertySystem& sps, std::size_t a);

/// One sub-system per equivalence block, in block order. Each has the block
/// as states and the segment below the block's label as lattice.
std::vector<StatePropertySystem> nonclassical_parts(const StatePropertySystem& sps);

/// The system on the blocks themselves: the lattice is generated by joining
/// the block labels over every subset of blocks, and a block makes a
/// property actual when its states do. Well-definedness (independence of the
/// representative state) is verified; SkeletonAxiomViolationError is raised
/// with a witness if it ever fails, or if the constructed triple fails
/// validation. TooManyComponentsError beyond max_components.
StatePropertySystem classical_skeleton(const StatePropertySystem& sps,
                                       std::size_t max_components = 16);

/// Every quantum segment (an interval [bottom, a] whose sub-system has no
/// proper classical properties) is trivial, i.e. has exactly two elements.
bool is_totally_classical(const StatePropertySystem& sps);

struct Decomposition {
    std::vector<Mask> blocks;            // partition of the states
    std::vector<std::size_t> labels;     // property with extent = block, per block
    std::vector<StatePropertySystem> parts;
    std::vector<std::size_t> skeleton_carrier;  // ambient elements of the skeleton lattice
    StatePropertySystem skeleton;
    std::vector<std::string> notes;      // e.g. distinct label subsets with equal joins
};

/// The full decomposition bundle.
Decomposition decompose(const StatePropertySystem& sps, std::size_t max_components = 16);

/// Re-derives every property the bundle promises: blocks partition the
/// states and match the closure-space components, labels have the blocks as
/// extents, every part is a valid pure nonclassical system, the skeleton is
/// a valid totally classical system over a totally disconnected space, its
/// actuality map is well defined, and each label is an atom of the skeleton
/// lattice. Returns failure descriptions; empty means the bundle checks out.
std::vector<std::string> verify_decomposition(const StatePropertySystem& sps,
                                              const Decomposition& dec);

}  // namespace spslab
