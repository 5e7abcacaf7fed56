#include "spslab/sps.hpp"

#include <algorithm>

namespace spslab {

std::string axiom_violation_kind_name(AxiomViolationKind kind) {
    switch (kind) {
        case AxiomViolationKind::BottomActual: return "BottomActual";
        case AxiomViolationKind::NotMeetClosed: return "NotMeetClosed";
        case AxiomViolationKind::OrderAxiomForward: return "OrderAxiomForward";
        case AxiomViolationKind::OrderAxiomBackward: return "OrderAxiomBackward";
    }
    return "?";
}

std::string describe(const AxiomReport& report) {
    std::string out;
    for (const auto& v : report) {
        if (!out.empty()) out += "; ";
        out += axiom_violation_kind_name(v.kind) + "[";
        for (std::size_t i = 0; i < v.witnesses.size(); ++i) {
            if (i) out += ", ";
            out += v.witnesses[i];
        }
        out += "]";
    }
    return out;
}

namespace {

// Structural checks shared by validate() and build(). Returns kappa.
std::vector<Mask> extents_of(const std::vector<std::string>& states, const FiniteLattice& lattice,
                             const std::vector<std::vector<std::size_t>>& xi) {
    if (states.empty()) throw Error("state property system must have at least one state");
    if (states.size() > max_universe_size)
        throw Error("state set exceeds the supported maximum of " +
                    std::to_string(max_universe_size) + " states");
    if (xi.size() != states.size())
        throw Error("xi must assign a property set to every state");
    {
        std::unordered_map<std::string, std::size_t> seen;
        for (std::size_t i = 0; i < states.size(); ++i)
            if (!seen.emplace(states[i], i).second) throw Error("duplicate state '" + states[i] + "'");
    }
    std::vector<Mask> kappa(lattice.size(), 0);
    for (std::size_t p = 0; p < states.size(); ++p) {
        for (std::size_t e : xi[p]) {
            if (e >= lattice.size())
                throw UnknownElementError("xi refers to lattice element index " + std::to_string(e) +
                                          " out of range");
            kappa[e] |= Mask{1} << p;
        }
    }
    return kappa;
}

}  // namespace

AxiomReport StatePropertySystem::validate(const std::vector<std::string>& states,
                                          const FiniteLattice& lattice,
                                          const std::vector<std::vector<std::size_t>>& xi) {
    std::vector<Mask> kappa = extents_of(states, lattice, xi);
    AxiomReport report;

    AxiomViolation bottom_actual{AxiomViolationKind::BottomActual, {}};
    for (std::size_t p = 0; p < states.size(); ++p)
        if (kappa[lattice.bottom()] >> p & 1) bottom_actual.witnesses.push_back(states[p]);

    AxiomViolation not_meet_closed{AxiomViolationKind::NotMeetClosed, {}};
    for (std::size_t p = 0; p < states.size(); ++p) {
        const Mask here = Mask{1} << p;
        if (!(kappa[lattice.top()] & here))
            not_meet_closed.witnesses.push_back(states[p] + ": top (the empty meet) is not actual");
        for (std::size_t a = 0; a < lattice.size(); ++a) {
            if (!(kappa[a] & here)) continue;
            for (std::size_t b = a + 1; b < lattice.size(); ++b) {
                if (!(kappa[b] & here)) continue;
                std::size_t m = lattice.meet(a, b);
                if (!(kappa[m] & here))
                    not_meet_closed.witnesses.push_back(states[p] + ": " + lattice.name(a) + " ∧ " +
                                                        lattice.name(b) + " = " + lattice.name(m) +
                                                        " is not actual");
            }
        }
    }

    AxiomViolation forward{AxiomViolationKind::OrderAxiomForward, {}};
    AxiomViolation backward{AxiomViolationKind::OrderAxiomBackward, {}};
    for (std::size_t a = 0; a < lattice.size(); ++a) {
        for (std::size_t b = 0; b < lattice.size(); ++b) {
            if (a == b) continue;
            const bool entails = mask_subset(kappa[a], kappa[b]);
            if (lattice.leq(a, b) && !entails) {
                Mask counter = kappa[a] & ~kappa[b];
                std::size_t r = mask_members(counter).front();
                forward.witnesses.push_back("(" + lattice.name(a) + ", " + lattice.name(b) + ", " +
                                            states[r] + ")");
            } else if (!lattice.leq(a, b) && entails) {
                backward.witnesses.push_back("(" + lattice.name(a) + ", " + lattice.name(b) + ")");
            }
        }
    }

    for (auto* v : {&bottom_actual, &not_meet_closed, &forward, &backward})
        if (!v->witnesses.empty()) report.push_back(std::move(*v));
    return report;
}

StatePropertySystem::StatePropertySystem(std::vector<std::string> states, FiniteLattice lattice,
                                         std::vector<Mask> kappa)
    : states_(std::move(states)), lattice_(std::move(lattice)), kappa_(std::move(kappa)) {
    for (std::size_t i = 0; i < states_.size(); ++i) state_index_.emplace(states_[i], i);
    for (std::size_t e = 0; e < kappa_.size(); ++e) extent_index_.emplace(kappa_[e], e);
}

StatePropertySystem StatePropertySystem::build(std::vector<std::string> states, FiniteLattice lattice,
                                               const std::vector<std::vector<std::size_t>>& xi) {
    AxiomReport report = validate(states, lattice, xi);
    if (!report.empty()) throw SpsAxiomError(std::move(report));
    std::vector<Mask> kappa = extents_of(states, lattice, xi);
    return StatePropertySystem(std::move(states), std::move(lattice), std::move(kappa));
}

std::size_t StatePropertySystem::state_index(const std::string& state) const {
    auto it = state_index_.find(state);
    if (it == state_index_.end()) throw Error("unknown state '" + state + "'");
    return it->second;
}

bool StatePropertySystem::is_actual(std::size_t element, std::size_t state) const {
    return cartan(element) >> state & 1;
}

std::vector<std::size_t> StatePropertySystem::xi(std::size_t state) const {
    if (state >= states_.size())
        throw Error("state index " + std::to_string(state) + " out of range");
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < kappa_.size(); ++e)
        if (kappa_[e] >> state & 1) out.push_back(e);
    return out;
}

Mask StatePropertySystem::cartan(std::size_t element) const {
    if (element >= kappa_.size())
        throw UnknownElementError("lattice element index " + std::to_string(element) +
                                  " out of range");
    return kappa_[element];
}

std::optional<std::size_t> StatePropertySystem::property_with_extent(Mask states) const {
    auto it = extent_index_.find(states);
    if (it == extent_index_.end()) return std::nullopt;
    return it->second;
}

}  // namespace spslab
