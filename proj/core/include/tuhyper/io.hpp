#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "tuhyper/hypergraph.hpp"
#include "tuhyper/matrix.hpp"

namespace tuhyper {

using Json = nlohmann::json;

// {"vertices": [...], "edges": [[...], ...], "edge_names": [...]?}
[[nodiscard]] Json to_json(const Hypergraph& g);
[[nodiscard]] Hypergraph hypergraph_from_json(const Json& j);

// {"vertices": [...], "arcs": [{"plus": [...], "minus": [...]}, ...], "arc_names": [...]?}
[[nodiscard]] Json to_json(const MixedHypergraph& d);
[[nodiscard]] MixedHypergraph mixed_from_json(const Json& j);

// Array of integer rows.
[[nodiscard]] Json to_json(const IntMatrix& m);
[[nodiscard]] IntMatrix matrix_from_json(const Json& j);

// Selection as vertex names and edge ids.
[[nodiscard]] Json to_json(const SubSelection& sel, const Symbols& sym);
[[nodiscard]] SubSelection selection_from_json(const Json& j, const Symbols& sym);

using Instance = std::variant<Hypergraph, MixedHypergraph>;

// Dispatches on "edges" vs "arcs"; a bare {"matrix": ...} document becomes a mixed hypergraph.
[[nodiscard]] Instance instance_from_json(const Json& j);
[[nodiscard]] Json read_json_file(const std::filesystem::path& path);
[[nodiscard]] Instance load_instance(const std::filesystem::path& path);

}  // namespace tuhyper
