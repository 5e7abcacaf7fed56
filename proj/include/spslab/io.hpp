#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "spslab/closure.hpp"
#include "spslab/lattice.hpp"
#include "spslab/sps.hpp"

namespace spslab {

/// A parsed structure file: either a closure space or a state property
/// system, plus optional metadata. Canonical documents round-trip bit-exactly
/// through parse → canonicalize → serialize.
struct StructureDocument {
    std::variant<ClosureSpace, StatePropertySystem> payload;
    std::optional<std::string> name;
    std::optional<std::string> description;

    bool is_closure_space() const { return std::holds_alternative<ClosureSpace>(payload); }
    const ClosureSpace& closure_space() const { return std::get<ClosureSpace>(payload); }
    const StatePropertySystem& sps() const { return std::get<StatePropertySystem>(payload); }
};

/// Parses and validates a document. Throws SyntaxError for malformed JSON or
/// schema problems (with field context) and the module-level errors for
/// structures that fail validation.
StructureDocument parse_document(const std::string& text);
StructureDocument load_document(const std::filesystem::path& path);

/// Rebuilds the payload in canonical form: points, states, and lattice
/// elements sorted lexicographically; subsets as sorted point lists; the
/// lattice order serialized as its covering pairs.
StructureDocument canonicalize(const StructureDocument& doc);

/// JSON form of the document as it stands (canonicalize first for the
/// canonical text).
nlohmann::json to_json(const StructureDocument& doc);

/// Canonical text: JSON with two-space indentation and a trailing newline.
std::string serialize(const StructureDocument& doc);

/// Hasse diagram of a lattice, bottom-up.
std::string to_dot_hasse(const FiniteLattice& lattice, const std::string& graph_name = "hasse");

/// Points grouped and colored by connection component.
std::string to_dot_components(const ClosureSpace& cs);

}  // namespace spslab
