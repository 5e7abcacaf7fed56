#include "spslab/classical.hpp"

#include <algorithm>
#include <set>

namespace spslab {

bool is_ssr(const StatePropertySystem& sps, std::size_t a, std::size_t b) {
    Mask joint = sps.cartan(sps.lattice().join(a, b));
    return mask_subset(joint, sps.cartan(a) | sps.cartan(b));
}

bool is_classical(const StatePropertySystem& sps, std::size_t a) {
    Mask co = sps.all_states() & ~sps.cartan(a);
    return sps.property_with_extent(co).has_value();
}

std::size_t complement(const StatePropertySystem& sps, std::size_t a) {
    Mask co = sps.all_states() & ~sps.cartan(a);
    auto e = sps.property_with_extent(co);
    if (!e)
        throw NotClassicalError("property '" + sps.lattice().name(a) + "' is not classical");
    return *e;
}

std::vector<std::size_t> classical_elements(const StatePropertySystem& sps) {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < sps.lattice().size(); ++a)
        if (is_classical(sps, a)) out.push_back(a);
    return out;
}

bool is_pure_nonclassical(const StatePropertySystem& sps) {
    std::vector<std::size_t> cls = classical_elements(sps);
    std::vector<std::size_t> trivial{sps.lattice().bottom(), sps.lattice().top()};
    std::sort(trivial.begin(), trivial.end());
    return cls == trivial;
}

namespace {

FiniteLattice induced_lattice(const FiniteLattice& ambient, const std::vector<std::size_t>& carrier) {
    std::vector<std::string> names;
    names.reserve(carrier.size());
    for (std::size_t e : carrier) names.push_back(ambient.name(e));
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t x : carrier)
        for (std::size_t y : carrier)
            if (x != y && ambient.leq(x, y)) pairs.emplace_back(ambient.name(x), ambient.name(y));
    return FiniteLattice::build(std::move(names), pairs);
}

}  // namespace

ClassicalLattice classical_property_lattice(const StatePropertySystem& sps) {
    const FiniteLattice& lat = sps.lattice();
    std::set<std::size_t> carrier;
    for (std::size_t a : classical_elements(sps)) carrier.insert(a);

    // Pairwise meet closure to fixpoint; in a finite lattice this equals
    // closure under arbitrary meets.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::size_t> snapshot(carrier.begin(), carrier.end());
        for (std::size_t x : snapshot)
            for (std::size_t y : snapshot)
                if (carrier.insert(lat.meet(x, y)).second) grew = true;
    }

    std::vector<std::size_t> sorted(carrier.begin(), carrier.end());
    FiniteLattice induced = induced_lattice(lat, sorted);
    return ClassicalLattice{std::move(sorted), std::move(induced)};
}

bool ClassicalLattice::is_atomistic() const {
    std::vector<std::size_t> atoms;
    for (std::size_t e = 0; e < lattice.size(); ++e)
        if (lattice.is_atom(e)) atoms.push_back(e);
    for (std::size_t e = 0; e < lattice.size(); ++e) {
        std::vector<std::size_t> below;
        for (std::size_t a : atoms)
            if (lattice.leq(a, e)) below.push_back(a);
        if (lattice.join(below) != e) return false;
    }
    return true;
}

StatePropertySystem classical_part(const StatePropertySystem& sps) {
    ClassicalLattice cl = classical_property_lattice(sps);
    std::vector<std::vector<std::size_t>> xi(sps.state_count());
    for (std::size_t p = 0; p < sps.state_count(); ++p) {
        for (std::size_t k = 0; k < cl.carrier.size(); ++k)
            if (sps.is_actual(cl.carrier[k], p)) xi[p].push_back(k);
    }
    return StatePropertySystem::build(sps.states(), std::move(cl.lattice), xi);
}

}  // namespace spslab
