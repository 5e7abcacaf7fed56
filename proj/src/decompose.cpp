#include "spslab/decompose.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "spslab/bridge.hpp"
#include "spslab/classical.hpp"

namespace spslab {

std::vector<Mask> state_equivalence(const StatePropertySystem& sps) {
    return to_closure_space(sps).components();
}

std::size_t component_label(const StatePropertySystem& sps, Mask block) {
    auto e = sps.property_with_extent(block);
    if (!e)
        throw NoSuchPropertyError("no property has extent " + sps.format_states(block) +
                                  "; the block is not the extent of any property");
    return *e;
}

StatePropertySystem segment_sub_sps(const StatePropertySystem& sps, std::size_t a) {
    const FiniteLattice& lat = sps.lattice();
    if (a == lat.bottom()) throw Error("segment below bottom has no states");

    std::vector<std::size_t> seg_elems = lat.downset(a);
    FiniteLattice seg = lat.segment(a);

    std::vector<std::size_t> member = mask_members(sps.cartan(a));
    std::vector<std::string> states;
    states.reserve(member.size());
    for (std::size_t p : member) states.push_back(sps.states()[p]);

    std::vector<std::vector<std::size_t>> xi(member.size());
    for (std::size_t i = 0; i < member.size(); ++i)
        for (std::size_t k = 0; k < seg_elems.size(); ++k)
            if (sps.is_actual(seg_elems[k], member[i])) xi[i].push_back(k);
    return StatePropertySystem::build(std::move(states), std::move(seg), xi);
}

std::vector<StatePropertySystem> nonclassical_parts(const StatePropertySystem& sps) {
    std::vector<StatePropertySystem> parts;
    for (Mask block : state_equivalence(sps))
        parts.push_back(segment_sub_sps(sps, component_label(sps, block)));
    return parts;
}

namespace {

struct SkeletonData {
    std::vector<Mask> blocks;
    std::vector<std::size_t> labels;
    std::vector<std::size_t> carrier;  // ambient elements, ascending
    StatePropertySystem skeleton;
    std::vector<std::string> notes;
};

SkeletonData build_skeleton(const StatePropertySystem& sps, std::size_t max_components) {
    const FiniteLattice& lat = sps.lattice();
    std::vector<Mask> blocks = state_equivalence(sps);
    if (blocks.size() > max_components)
        throw TooManyComponentsError("decomposition has " + std::to_string(blocks.size()) +
                                     " components, above the cap of " +
                                     std::to_string(max_components));

    std::vector<std::size_t> labels;
    labels.reserve(blocks.size());
    for (Mask block : blocks) labels.push_back(component_label(sps, block));

    // All joins of label subsets; equal joins from distinct subsets collapse
    // to one lattice element and are recorded.
    std::map<std::size_t, std::vector<Mask>> join_sources;
    for (Mask subset = 0; subset < (Mask{1} << blocks.size()); ++subset) {
        std::vector<std::size_t> chosen;
        for (std::size_t i = 0; i < blocks.size(); ++i)
            if (subset >> i & 1) chosen.push_back(labels[i]);
        join_sources[lat.join(chosen)].push_back(subset);
    }

    std::vector<std::string> notes;
    std::vector<std::size_t> carrier;
    for (const auto& [elem, sources] : join_sources) {
        carrier.push_back(elem);
        if (sources.size() > 1)
            notes.push_back("label subsets collapse: " + std::to_string(sources.size()) +
                            " subsets share the join '" + lat.name(elem) + "'");
    }

    std::vector<std::string> block_names;
    block_names.reserve(blocks.size());
    for (Mask block : blocks) block_names.push_back(sps.format_states(block));

    std::vector<std::string> elem_names;
    elem_names.reserve(carrier.size());
    for (std::size_t e : carrier) elem_names.push_back(lat.name(e));
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t x : carrier)
        for (std::size_t y : carrier)
            if (x != y && lat.leq(x, y)) pairs.emplace_back(lat.name(x), lat.name(y));
    FiniteLattice skeleton_lattice = FiniteLattice::build(elem_names, pairs);

    // eta(block) = xi(p) restricted to the carrier, for p in the block; must
    // not depend on the representative.
    std::vector<std::vector<std::size_t>> eta(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        std::vector<std::size_t> members = mask_members(blocks[b]);
        bool first = true;
        for (std::size_t p : members) {
            std::vector<std::size_t> restricted;
            for (std::size_t k = 0; k < carrier.size(); ++k)
                if (sps.is_actual(carrier[k], p)) restricted.push_back(k);
            if (first) {
                eta[b] = std::move(restricted);
                first = false;
            } else if (restricted != eta[b]) {
                throw SkeletonAxiomViolationError(
                    "skeleton actuality map is not well defined: states '" +
                    sps.states()[members.front()] + "' and '" + sps.states()[p] +
                    "' in block " + block_names[b] + " restrict differently");
            }
        }
    }

    try {
        StatePropertySystem skeleton =
            StatePropertySystem::build(std::move(block_names), std::move(skeleton_lattice), eta);
        return SkeletonData{std::move(blocks), std::move(labels), std::move(carrier),
                            std::move(skeleton), std::move(notes)};
    } catch (const SpsAxiomError& e) {
        throw SkeletonAxiomViolationError(std::string("skeleton fails validation: ") + e.what());
    }
}

}  // namespace

StatePropertySystem classical_skeleton(const StatePropertySystem& sps, std::size_t max_components) {
    return build_skeleton(sps, max_components).skeleton;
}

bool is_totally_classical(const StatePropertySystem& sps) {
    const FiniteLattice& lat = sps.lattice();
    for (std::size_t a = 0; a < lat.size(); ++a) {
        if (a == lat.bottom()) continue;  // the segment of bottom is trivial
        if (is_pure_nonclassical(segment_sub_sps(sps, a)) && lat.downset(a).size() != 2)
            return false;
    }
    return true;
}

Decomposition decompose(const StatePropertySystem& sps, std::size_t max_components) {
    SkeletonData data = build_skeleton(sps, max_components);
    std::vector<StatePropertySystem> parts;
    parts.reserve(data.blocks.size());
    for (std::size_t b = 0; b < data.blocks.size(); ++b)
        parts.push_back(segment_sub_sps(sps, data.labels[b]));
    return Decomposition{std::move(data.blocks), std::move(data.labels), std::move(parts),
                         std::move(data.carrier), std::move(data.skeleton), std::move(data.notes)};
}

std::vector<std::string> verify_decomposition(const StatePropertySystem& sps,
                                              const Decomposition& dec) {
    std::vector<std::string> failures;
    const FiniteLattice& lat = sps.lattice();

    if (dec.blocks != state_equivalence(sps))
        failures.push_back("blocks do not match the closure-space components");

    Mask covered = 0;
    for (Mask block : dec.blocks) {
        if (block == 0) failures.push_back("empty block");
        if (covered & block) failures.push_back("blocks overlap");
        covered |= block;
    }
    if (covered != sps.all_states()) failures.push_back("blocks do not cover the states");

    for (std::size_t b = 0; b < dec.blocks.size(); ++b)
        if (sps.cartan(dec.labels[b]) != dec.blocks[b])
            failures.push_back("label of block " + sps.format_states(dec.blocks[b]) +
                               " has a different extent");

    for (std::size_t b = 0; b < dec.parts.size(); ++b) {
        const StatePropertySystem& part = dec.parts[b];
        std::vector<std::vector<std::size_t>> part_xi(part.state_count());
        for (std::size_t p = 0; p < part.state_count(); ++p) part_xi[p] = part.xi(p);
        if (!StatePropertySystem::validate(part.states(), part.lattice(), part_xi).empty())
            failures.push_back("part " + std::to_string(b) + " fails axiom validation");
        if (!is_pure_nonclassical(part))
            failures.push_back("part " + std::to_string(b) + " is not pure nonclassical");
    }

    {
        const StatePropertySystem& sk = dec.skeleton;
        std::vector<std::vector<std::size_t>> sk_xi(sk.state_count());
        for (std::size_t p = 0; p < sk.state_count(); ++p) sk_xi[p] = sk.xi(p);
        if (!StatePropertySystem::validate(sk.states(), sk.lattice(), sk_xi).empty())
            failures.push_back("skeleton fails axiom validation");
        if (!is_totally_classical(sk)) failures.push_back("skeleton is not totally classical");
        if (!to_closure_space(sk).is_totally_disconnected())
            failures.push_back("skeleton closure space is not totally disconnected");

        for (std::size_t b = 0; b < dec.labels.size(); ++b) {
            try {
                std::size_t in_skeleton = sk.lattice().index_of(lat.name(dec.labels[b]));
                if (!sk.lattice().is_atom(in_skeleton))
                    failures.push_back("label '" + lat.name(dec.labels[b]) +
                                       "' is not an atom of the skeleton lattice");
            } catch (const UnknownElementError&) {
                failures.push_back("label '" + lat.name(dec.labels[b]) +
                                   "' is missing from the skeleton lattice");
            }
        }

        // Well-definedness across every representative.
        for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
            std::vector<std::size_t> members = mask_members(dec.blocks[b]);
            std::vector<std::vector<std::size_t>> restrictions;
            for (std::size_t p : members) {
                std::vector<std::size_t> r;
                for (std::size_t k = 0; k < dec.skeleton_carrier.size(); ++k)
                    if (sps.is_actual(dec.skeleton_carrier[k], p)) r.push_back(k);
                restrictions.push_back(std::move(r));
            }
            for (std::size_t i = 1; i < restrictions.size(); ++i)
                if (restrictions[i] != restrictions[0]) {
                    failures.push_back("skeleton actuality map depends on the representative in block " +
                                       sps.format_states(dec.blocks[b]));
                    break;
                }
        }
    }
    return failures;
}

}  // namespace spslab
