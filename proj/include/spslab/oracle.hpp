#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "spslab/closure.hpp"
#include "spslab/sps.hpp"

namespace spslab {

/// Largest universe for which exhaustive enumeration and the brute-force
/// component oracle are allowed.
inline constexpr std::size_t exhaustive_cap = 4;

/// Deterministic, duplicate-free, complete enumeration of every
/// intersection-closed family containing the empty set and the universe on
/// an n-point universe (points named "0", "1", ...). Candidate families are
/// visited in ascending numeric order, so the stream is reproducible.
class ClosureSpaceEnumerator {
public:
    explicit ClosureSpaceEnumerator(std::size_t n);  // throws TooLargeError

    std::optional<ClosureSpace> next();
    std::size_t n() const { return n_; }
    /// Number of spaces emitted so far.
    std::size_t index() const { return index_; }

private:
    std::size_t n_;
    std::uint64_t candidate_ = 0;
    bool done_ = false;
    std::size_t index_ = 0;
};

std::vector<ClosureSpace> enumerate_closure_spaces(std::size_t n);

/// A random closure space: a handful of generator subsets closed under
/// pairwise intersections, plus the empty set and the universe.
/// Deterministic given the generator state.
ClosureSpace sample_closure_space(std::size_t n, std::mt19937_64& rng);

/// Literal evaluation of the component definition: the component of x is the
/// union of all connected subsets containing x, over all 2^|X| subsets.
/// Throws TooLargeError above the exhaustive cap.
std::vector<Mask> naive_components(const ClosureSpace& cs);

/// Definitional super-selection check as a per-state loop.
bool naive_ssr(const StatePropertySystem& sps, std::size_t a, std::size_t b);

/// Definitional classicality: search the whole lattice for a complement
/// witness (join = top, meet = bottom, separated by a super selection rule).
std::optional<std::size_t> naive_complement_search(const StatePropertySystem& sps, std::size_t a);
bool naive_classical(const StatePropertySystem& sps, std::size_t a);

}  // namespace spslab
