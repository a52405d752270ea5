#pragma once

#include "pach/coloring_construction.hpp"
#include "pach/exact_geometry.hpp"
#include "pach/extraction.hpp"
#include "pach/f2_cochains.hpp"
#include "pach/pl_intersection.hpp"
#include "pach/witness.hpp"

#include <nlohmann/json.hpp>

namespace pach {

using json = nlohmann::json;

/// Version tag of the PLMap file format.
inline constexpr int kPLMapFormatVersion = 1;

// Rationals are written as "num/den" strings; points as [x, y]; faces as
// lists of [part, index] pairs. Readers throw std::invalid_argument on
// malformed input.

json point_to_json(const Point& p);
Point point_from_json(const json& j);

json face_to_json(const Face& f);
Face face_from_json(const json& j);

json cochain_to_json(const JoinComplex& complex, const F2Cochain& a);
/// Checks the (d, n, k) header against the complex.
F2Cochain cochain_from_json(const JoinComplex& complex, const json& j);

json configuration_to_json(const PointConfiguration& config);
PointConfiguration configuration_from_json(const json& j);

json plmap_to_json(const PLMap& map);
PLMap plmap_from_json(const json& j);

json coloring_to_json(const TwoColoring& coloring);
TwoColoring coloring_from_json(const json& j);

json graph_to_json(const TripartiteGraph& g);
TripartiteGraph graph_from_json(const json& j);

json hypergraph_to_json(const PartiteHypergraph& h);
PartiteHypergraph hypergraph_from_json(const json& j);

json witness_to_json(const PachWitness& w);

}  // namespace pach
