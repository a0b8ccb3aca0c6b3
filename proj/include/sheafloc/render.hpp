#pragma once

#include "sheafloc/graded_dims.hpp"
#include "sheafloc/moduli.hpp"
#include "sheafloc/weights.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sheafloc {

using Json = nlohmann::ordered_json;

/// "1 + 2t + 2t^2 + 2t^3 + t^4"; unit coefficients are dropped except in
/// degree 0, and the zero space renders as "0".
std::string to_polynomial_string(const GradedDims& g);

/// {"0": 1, "1": 2, ...} over the support, degrees ascending. Dimensions are
/// JSON numbers when they fit in 64 bits and decimal strings otherwise.
Json to_json(const GradedDims& g);

/// Inverse of to_json(GradedDims). Throws std::invalid_argument on bad input.
GradedDims graded_dims_from_json(const Json& j);

/// "degree,dimension" header then one row per degree 0..top, zeros included.
std::string to_csv(const GradedDims& g);

/// One "weight × multiplicity" line per entry, weights ascending.
std::string to_text(const WeightMultiset& ms);

/// [{"weight": w, "multiplicity": m}, ...], weights ascending.
Json to_json(const WeightMultiset& ms);

/// Part list, largest first.
Json to_json(const Partition& p);

/// {"lprime", "c2", "l_window", "components": [{"l", "alpha", "beta",
/// "shift", "poincare"}], "total"}.
Json betti_report_json(const ChernInvariants& chern, const LWindow& window,
                       const std::vector<ComponentContribution>& contributions, const GradedDims& total);

Json to_json(const SplittingType& s);

/// Serialized form shared by every JSON-emitting command.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace sheafloc
