#pragma once

// The five canonical closure spaces and small lattices used across the test
// suites. Masks are little-endian in the point order given.

#include "spslab/bridge.hpp"
#include "spslab/closure.hpp"
#include "spslab/lattice.hpp"
#include "spslab/sps.hpp"

namespace fixtures {

using spslab::ClosureSpace;
using spslab::FiniteLattice;
using spslab::Mask;
using spslab::StatePropertySystem;

// ({0,1}, {∅, X}) indiscrete
inline ClosureSpace e1() { return ClosureSpace::build({"0", "1"}, {0b00, 0b11}); }

// ({0,1}, {∅, {0}, {1}, X}) discrete
inline ClosureSpace e2() { return ClosureSpace::build({"0", "1"}, {0b00, 0b01, 0b10, 0b11}); }

// ({0,1}, {∅, {1}, X})
inline ClosureSpace e3() { return ClosureSpace::build({"0", "1"}, {0b00, 0b10, 0b11}); }

// ({1,2,3}, {∅, {1}, {2}, X}) intersection-closed but not a topology
inline ClosureSpace e4() {
    return ClosureSpace::build({"1", "2", "3"}, {0b000, 0b001, 0b010, 0b111});
}

// ({1,2,3,4}, {∅, {1,2}, {3,4}, X}) two components
inline ClosureSpace e5() {
    return ClosureSpace::build({"1", "2", "3", "4"}, {0b0000, 0b0011, 0b1100, 0b1111});
}

// Smallest space on which the skeleton construction fails: the components
// are {0,2}, {1}, {3}, but cl({1} ∪ {3}) = {0,1,3} picks up the point 0
// without the rest of its component, so restricting actuality to the
// generated lattice depends on the representative state.
inline ClosureSpace skeleton_counterexample() {
    return ClosureSpace::build(
        {"0", "1", "2", "3"},
        {0b0000, 0b0001, 0b0010, 0b0011, 0b0101, 0b0111, 0b1000, 0b1011, 0b1111});
}

// diamond: 0 < a, b < I
inline FiniteLattice m2() {
    return FiniteLattice::build({"0", "a", "b", "I"},
                                {{"0", "a"}, {"0", "b"}, {"a", "I"}, {"b", "I"}});
}

inline FiniteLattice chain3() {
    return FiniteLattice::build({"0", "a", "I"}, {{"0", "a"}, {"a", "I"}});
}

inline StatePropertySystem g(const ClosureSpace& cs) { return spslab::to_sps(cs); }

}  // namespace fixtures
