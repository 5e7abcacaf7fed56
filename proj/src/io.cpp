#include "spslab/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "spslab/bits.hpp"

namespace spslab {

using nlohmann::json;

namespace {

const json* find_meta(const json& root) {
    auto it = root.find("meta");
    return it == root.end() ? nullptr : &*it;
}

std::vector<std::string> string_list(const json& arr, const std::string& field) {
    if (!arr.is_array()) throw SyntaxError(field + " must be an array of strings");
    std::vector<std::string> out;
    out.reserve(arr.size());
    for (const auto& item : arr) {
        if (!item.is_string()) throw SyntaxError(field + " must contain only strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

Mask subset_mask(const json& arr, const std::string& field,
                 const std::unordered_map<std::string, std::size_t>& point_index) {
    Mask m = 0;
    for (const std::string& name : string_list(arr, field)) {
        auto it = point_index.find(name);
        if (it == point_index.end())
            throw UnknownPointError(field + ": unknown point '" + name + "'");
        m |= Mask{1} << it->second;
    }
    return m;
}

ClosureSpace parse_closure_space(const json& root) {
    if (!root.contains("points")) throw SyntaxError("closure_space document needs 'points'");
    if (!root.contains("closed_sets")) throw SyntaxError("closure_space document needs 'closed_sets'");
    std::vector<std::string> points = string_list(root["points"], "points");

    std::unordered_map<std::string, std::size_t> point_index;
    for (std::size_t i = 0; i < points.size(); ++i) point_index.emplace(points[i], i);

    const json& sets = root["closed_sets"];
    if (!sets.is_array()) throw SyntaxError("closed_sets must be an array of subsets");
    std::vector<Mask> closed;
    closed.reserve(sets.size());
    for (std::size_t k = 0; k < sets.size(); ++k)
        closed.push_back(subset_mask(sets[k], "closed_sets[" + std::to_string(k) + "]", point_index));
    return ClosureSpace::build(std::move(points), std::move(closed));
}

StatePropertySystem parse_sps(const json& root) {
    for (const char* field : {"states", "lattice", "xi"})
        if (!root.contains(field)) throw SyntaxError(std::string("sps document needs '") + field + "'");
    std::vector<std::string> states = string_list(root["states"], "states");

    const json& lat = root["lattice"];
    if (!lat.is_object() || !lat.contains("elements") || !lat.contains("leq"))
        throw SyntaxError("lattice must be an object with 'elements' and 'leq'");
    std::vector<std::string> elements = string_list(lat["elements"], "lattice.elements");
    if (!lat["leq"].is_array()) throw SyntaxError("lattice.leq must be an array of pairs");
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& pair : lat["leq"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
            throw SyntaxError("lattice.leq entries must be [element, element] pairs");
        pairs.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
    FiniteLattice lattice = FiniteLattice::build(std::move(elements), pairs);

    const json& xi_obj = root["xi"];
    if (!xi_obj.is_object()) throw SyntaxError("xi must map each state to an array of elements");
    std::vector<std::vector<std::size_t>> xi(states.size());
    std::unordered_map<std::string, std::size_t> state_index;
    for (std::size_t i = 0; i < states.size(); ++i) state_index.emplace(states[i], i);
    for (const auto& [state, value] : xi_obj.items()) {
        auto it = state_index.find(state);
        if (it == state_index.end()) throw SyntaxError("xi: unknown state '" + state + "'");
        for (const std::string& name : string_list(value, "xi['" + state + "']"))
            xi[it->second].push_back(lattice.index_of(name));
    }
    for (std::size_t i = 0; i < states.size(); ++i)
        if (!xi_obj.contains(states[i]))
            throw SyntaxError("xi: missing entry for state '" + states[i] + "'");
    return StatePropertySystem::build(std::move(states), std::move(lattice), xi);
}

json subset_names(Mask m, const std::vector<std::string>& names) {
    json arr = json::array();
    for (std::size_t i : mask_members(m)) arr.push_back(names[i]);
    return arr;
}

}  // namespace

StructureDocument parse_document(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SyntaxError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object() || !root.contains("kind") || !root["kind"].is_string())
        throw SyntaxError("document must be an object with a string 'kind'");

    const std::string kind = root["kind"].get<std::string>();
    auto payload = [&]() -> std::variant<ClosureSpace, StatePropertySystem> {
        if (kind == "closure_space") return parse_closure_space(root);
        if (kind == "sps") return parse_sps(root);
        throw SyntaxError("unknown kind '" + kind + "' (expected 'closure_space' or 'sps')");
    }();
    StructureDocument doc{std::move(payload), std::nullopt, std::nullopt};

    if (const json* meta = find_meta(root)) {
        if (!meta->is_object()) throw SyntaxError("meta must be an object");
        if (meta->contains("name")) doc.name = (*meta)["name"].get<std::string>();
        if (meta->contains("description")) doc.description = (*meta)["description"].get<std::string>();
    }
    return doc;
}

StructureDocument load_document(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
}

namespace {

ClosureSpace canonical_space(const ClosureSpace& cs) {
    std::vector<std::string> points = cs.points();
    std::sort(points.begin(), points.end());
    std::vector<std::size_t> new_index(cs.universe_size());
    for (std::size_t i = 0; i < points.size(); ++i) new_index[cs.point_index(points[i])] = i;

    std::vector<Mask> closed;
    closed.reserve(cs.closed_sets().size());
    for (Mask f : cs.closed_sets()) {
        Mask m = 0;
        for (std::size_t p : mask_members(f)) m |= Mask{1} << new_index[p];
        closed.push_back(m);
    }
    return ClosureSpace::build(std::move(points), std::move(closed));
}

StatePropertySystem canonical_sps(const StatePropertySystem& sps) {
    std::vector<std::string> states = sps.states();
    std::sort(states.begin(), states.end());

    std::vector<std::string> elements = sps.lattice().elements();
    std::sort(elements.begin(), elements.end());
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& [x, y] : sps.lattice().hasse_edges())
        pairs.emplace_back(sps.lattice().name(x), sps.lattice().name(y));
    FiniteLattice lattice = FiniteLattice::build(std::move(elements), pairs);

    std::vector<std::vector<std::size_t>> xi(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
        std::size_t old_state = sps.state_index(states[i]);
        for (std::size_t e : sps.xi(old_state))
            xi[i].push_back(lattice.index_of(sps.lattice().name(e)));
    }
    return StatePropertySystem::build(std::move(states), std::move(lattice), xi);
}

}  // namespace

StructureDocument canonicalize(const StructureDocument& doc) {
    StructureDocument out = doc;
    if (doc.is_closure_space())
        out.payload = canonical_space(doc.closure_space());
    else
        out.payload = canonical_sps(doc.sps());
    return out;
}

json to_json(const StructureDocument& doc) {
    json root;
    if (doc.is_closure_space()) {
        const ClosureSpace& cs = doc.closure_space();
        root["kind"] = "closure_space";
        root["points"] = cs.points();
        json sets = json::array();
        for (Mask f : cs.closed_sets()) sets.push_back(subset_names(f, cs.points()));
        root["closed_sets"] = std::move(sets);
    } else {
        const StatePropertySystem& sps = doc.sps();
        root["kind"] = "sps";
        root["states"] = sps.states();
        json lattice;
        lattice["elements"] = sps.lattice().elements();
        json leq = json::array();
        for (const auto& [x, y] : sps.lattice().hasse_edges())
            leq.push_back(json::array({sps.lattice().name(x), sps.lattice().name(y)}));
        lattice["leq"] = std::move(leq);
        root["lattice"] = std::move(lattice);
        json xi;
        for (std::size_t p = 0; p < sps.state_count(); ++p) {
            json actual = json::array();
            for (std::size_t e : sps.xi(p)) actual.push_back(sps.lattice().name(e));
            xi[sps.states()[p]] = std::move(actual);
        }
        root["xi"] = std::move(xi);
    }
    if (doc.name || doc.description) {
        json meta;
        if (doc.name) meta["name"] = *doc.name;
        if (doc.description) meta["description"] = *doc.description;
        root["meta"] = std::move(meta);
    }
    return root;
}

std::string serialize(const StructureDocument& doc) { return to_json(doc).dump(2) + "\n"; }

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string to_dot_hasse(const FiniteLattice& lattice, const std::string& graph_name) {
    std::ostringstream out;
    out << "digraph " << graph_name << " {\n  rankdir=BT;\n  node [shape=box];\n";
    for (const std::string& name : lattice.elements()) out << "  " << dot_quote(name) << ";\n";
    for (const auto& [x, y] : lattice.hasse_edges())
        out << "  " << dot_quote(lattice.name(x)) << " -> " << dot_quote(lattice.name(y)) << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_dot_components(const ClosureSpace& cs) {
    static const char* palette[] = {"lightblue",  "lightpink",  "lightgreen", "lightyellow",
                                    "lightsalmon", "lightcyan",  "plum",       "khaki",
                                    "palegreen",  "lavender",   "mistyrose",  "wheat"};
    std::ostringstream out;
    out << "graph components {\n  node [style=filled];\n";
    std::vector<Mask> blocks = cs.components();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        out << "  subgraph cluster_" << b << " {\n    label=" << dot_quote(cs.format(blocks[b]))
            << ";\n";
        for (std::size_t p : mask_members(blocks[b]))
            out << "    " << dot_quote(cs.points()[p]) << " [fillcolor=" << palette[b % 12]
                << "];\n";
        out << "  }\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace spslab
