#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "tgg/autgroup.hpp"
#include "tgg/drg.hpp"
#include "tgg/geometry.hpp"

namespace tgg::io {

using nlohmann::json;

/// Standard graph6 encoding, vertex order as stored (no trailing newline).
std::string to_graph6(const Graph& g);
/// Throws std::invalid_argument on malformed input.
Graph from_graph6(std::string_view text);

/// "p edge N M" then sorted 1-based "e u v" lines.
std::string to_dimacs(const Graph& g);

/// {"n": N, "edges": [[u, v], ...], "labels": [...]}
json graph_to_json(const Graph& g);
/// Labels are not restored.
Graph graph_from_json(const json& j);

/// {"v": v, "b": b, "blocks": [[points], ...]}
json design_to_json(const Design& d);
Design design_from_json(const json& j);
/// One row per block, one 0/1 column per point.
std::string incidence_csv(const Design& d);

json field_to_json(const Field& f);
json subspace_to_json(const Subspace& s);
json point_to_json(const ProjectivePoint& p);
json semilinear_to_json(const SemilinearMap& m);
SemilinearMap semilinear_from_json(const FieldPtr& field, const json& j);
json intersection_array_to_json(const IntersectionArray& a);
json not_drg_to_json(const NotDRG& w);
json certificate_to_json(const IsoCertificate& c);
json parameters_to_json(const DesignParameters& p);

/// Gram matrix from a JSON list of rows of integer encodings.
Matrix matrix_from_json(const FieldPtr& field, const json& j);

/// Writes through a temporary file in the same directory and renames it.
void write_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace tgg::io
