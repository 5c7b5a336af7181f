#pragma once

// JSON encodings:
//   polynomial     {"coeffs": [c0, c1, ...]}        trailing zeros stripped
//   rational       {"num": n, "den": d}
//   braid word     {"n": n, "letters": [i1, i2, ...]}
//   matrix         {"n":..., "N" or "K":..., "dim":..., "entries": [[row, col, value], ...]}
//                  entries sorted by (col, row)
//   distribution   {"K":..., "a":..., "b":..., "dist": {"c": polynomial, ...}}
//
// Integers that do not fit in 64 bits are written as decimal strings; the
// readers accept either form.

#include <string>
#include <vector>

#include "json.hpp"

#include "bowling/braid.hpp"
#include "bowling/cabled.hpp"
#include "bowling/matrix.hpp"
#include "bowling/report.hpp"

namespace bowling {

using Json = nlohmann::ordered_json;

Json to_json(const QPoly& p);
Json to_json(const QScalar& x);
Json to_json(const BraidWord& w);

QPoly poly_from_json(const Json& j);
QScalar scalar_from_json(const Json& j);
BraidWord word_from_json(const Json& j);

/// `bound_key` is "N" for the multi-ball representation and "K" for cables.
Json matrix_to_json(const PolyMatrix& m, int n, const std::string& bound_key, int bound);
Json matrix_to_json(const RationalMatrix& m, int n, const std::string& bound_key, int bound);

Json fall_to_json(int K, int a, int b, const FallDistribution& dist);

Json reports_to_json(const std::string& suite, const std::vector<CheckReport>& reports);

}  // namespace bowling
