#pragma once

#include <string>
#include <vector>

#include "spslab/closure.hpp"
#include "spslab/sps.hpp"

namespace spslab {

/// The closure space associated with a state property system: universe is the
/// state set, closed sets are the property extents.
ClosureSpace to_closure_space(const StatePropertySystem& sps);

/// The state property system associated with a closure space: states are the
/// points, the lattice is the closed-set family ordered by inclusion, and a
/// point makes a closed set actual exactly when it belongs to it. Lattice
/// element names are the canonical serializations of the subsets.
StatePropertySystem to_sps(const ClosureSpace& cs);

/// Checks that converting the space to a system and back reproduces it
/// exactly. Returns mismatch descriptions; empty means identical.
std::vector<std::string> check_closure_round_trip(const ClosureSpace& cs);

/// Checks that converting the system to a space and back yields an isomorphic
/// system: identical states, the extent map as a lattice isomorphism, and the
/// actuality sets transported accordingly. Returns mismatch descriptions.
std::vector<std::string> check_sps_round_trip(const StatePropertySystem& sps);

/// Both round-trip checks combined.
std::vector<std::string> check_round_trips(const ClosureSpace& cs, const StatePropertySystem& sps);

}  // namespace spslab
