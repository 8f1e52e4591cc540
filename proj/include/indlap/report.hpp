#pragma once

#include <json.hpp>

#include "indlap/bounds.hpp"
#include "indlap/graph.hpp"
#include "indlap/homology.hpp"

namespace indlap {

/// {theorem, parameters, bounds[], actuals[], slacks[], slack, holds, tolerance, scale,
///  worst_index}
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const BettiVector& b);

/// Tolerance constants reported alongside every analysis.
nlohmann::json tolerance_constants();

/// Full analysis of I(G) for dimensions 0..max_dim: f-vector, spectra, lower-bound reports,
/// Betti count bounds, exact Betti numbers, connectivity and its spectral lower bound.
nlohmann::json analyze(const Graph& g, const WeightFunction& w, int max_dim);

}  // namespace indlap
