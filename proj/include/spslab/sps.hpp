#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "spslab/errors.hpp"
#include "spslab/lattice.hpp"
#include "spslab/subset.hpp"

namespace spslab {

/// Axiom violations found while validating a state property system. One
/// entry per violated axiom kind, carrying the full list of witnesses.
enum class AxiomViolationKind {
    BottomActual,        // the bottom property is actual in some state
    NotMeetClosed,       // some actuality set is not closed under meets
    OrderAxiomForward,   // a <= b but the actuality implication fails
    OrderAxiomBackward,  // the actuality implication holds but a <= b fails
};

struct AxiomViolation {
    AxiomViolationKind kind;
    std::vector<std::string> witnesses;
};

using AxiomReport = std::vector<AxiomViolation>;

std::string axiom_violation_kind_name(AxiomViolationKind kind);
std::string describe(const AxiomReport& report);

class SpsAxiomError : public Error {
public:
    explicit SpsAxiomError(AxiomReport report)
        : Error("state property system axioms violated: " + describe(report)),
          report_(std::move(report)) {}
    const AxiomReport& report() const { return report_; }

private:
    AxiomReport report_;
};

/// A state property system: states, a finite bounded property lattice, and
/// the per-state set of actual properties. Construction validates the
/// defining axioms:
///   - bottom is never actual;
///   - each actuality set is closed under meets, the empty meet included
///     (so top is always actual);
///   - the lattice order coincides with actuality-set entailment.
///
/// The extent map (Cartan map) of every property is materialized at
/// construction, so instances are immutable and safe to share.
class StatePropertySystem {
public:
    /// xi[i] lists the lattice elements actual in state i (any order,
    /// duplicates ignored). Throws SpsAxiomError with the full violation
    /// report, or Error/UnknownElementError for structural defects.
    static StatePropertySystem build(std::vector<std::string> states, FiniteLattice lattice,
                                     const std::vector<std::vector<std::size_t>>& xi);

    /// The axiom report for a candidate triple; empty means valid.
    /// Structural defects (wrong xi arity, bad indices, no states) throw.
    static AxiomReport validate(const std::vector<std::string>& states, const FiniteLattice& lattice,
                                const std::vector<std::vector<std::size_t>>& xi);

    const std::vector<std::string>& states() const { return states_; }
    std::size_t state_count() const { return states_.size(); }
    std::size_t state_index(const std::string& state) const;
    const FiniteLattice& lattice() const { return lattice_; }

    /// a ∈ ξ(p)
    bool is_actual(std::size_t element, std::size_t state) const;
    /// ξ(p) as ascending element indices.
    std::vector<std::size_t> xi(std::size_t state) const;
    /// κ(a): the states in which the property is actual.
    Mask cartan(std::size_t element) const;
    /// The property whose extent is exactly `states`, if any. κ is injective
    /// on valid systems, so the answer is unique.
    std::optional<std::size_t> property_with_extent(Mask states) const;

    Mask all_states() const { return full_mask(states_.size()); }
    std::string format_states(Mask m) const { return format_mask(m, states_); }

private:
    StatePropertySystem(std::vector<std::string> states, FiniteLattice lattice,
                        std::vector<Mask> kappa);

    std::vector<std::string> states_;
    std::unordered_map<std::string, std::size_t> state_index_;
    FiniteLattice lattice_;
    std::vector<Mask> kappa_;  // per element
    std::unordered_map<Mask, std::size_t> extent_index_;
};

}  // namespace spslab
