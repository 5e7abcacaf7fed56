#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spslab/closure.hpp"

namespace spslab {

/// One theorem failure on one instance, with the instance kept for replay.
struct Counterexample {
    ClosureSpace space;
    std::string check;
    std::string detail;
};

struct TheoremRunReport {
    std::size_t spaces_checked = 0;
    std::map<std::string, std::size_t> checks_run;  // per-check instance counts
    std::vector<Counterexample> counterexamples;
    bool ok() const { return counterexamples.empty(); }
};

/// Runs every theorem check on one closure space (through its associated
/// state property system where needed), appending failures and counters.
void check_space(const ClosureSpace& cs, TheoremRunReport& report);

/// Exhaustively checks every space with 1..max_n points, then `samples`
/// seeded random spaces with 4 and 5 points (alternating).
TheoremRunReport run_theorem_checks(std::size_t max_n, std::size_t samples, std::uint64_t seed);

}  // namespace spslab
