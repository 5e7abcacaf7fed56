#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace spslab {

// Subsets of an indexed universe (points or states) as bit-masks.
// Universes are capped at 64 members; families are kept small enough that
// this covers every supported workload.
using Mask = std::uint64_t;

inline constexpr std::size_t max_universe_size = 64;

constexpr Mask full_mask(std::size_t n) {
    return n == 0 ? 0 : ~Mask{0} >> (64 - n);
}

constexpr bool mask_subset(Mask a, Mask b) { return (a & ~b) == 0; }

constexpr int mask_size(Mask a) { return std::popcount(a); }

inline std::vector<std::size_t> mask_members(Mask m) {
    std::vector<std::size_t> out;
    while (m) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

inline std::string format_mask(Mask m, const std::vector<std::string>& names) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i : mask_members(m)) {
        if (!first) out += ",";
        out += names[i];
        first = false;
    }
    out += "}";
    return out;
}

}  // namespace spslab
