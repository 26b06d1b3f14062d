#ifndef NILPAIR_JSON_IO_HPP
#define NILPAIR_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "nilpair/classifier.hpp"
#include "nilpair/lie_algebra.hpp"
#include "nilpair/matrix.hpp"

namespace nilpair {

/// Algebra file format:
///   { "dim": n,
///     "brackets": [ { "i": int, "j": int, "coeffs": { "k": "p/q", ... } }, ... ],
///     "label": optional string }
/// Indices 1-based, i < j, rationals as "p" or "p/q" strings.
nlohmann::json algebra_to_json(const LieAlgebra& L);

/// Strict loader: rejects i >= j, out-of-range indices, duplicate (i, j)
/// entries and malformed rationals. Throws std::invalid_argument.
LieAlgebra algebra_from_json(const nlohmann::json& doc);

LieAlgebra load_algebra_file(const std::string& path);

nlohmann::json classification_to_json(const classifier::ClassificationReport& report);
nlohmann::json verify_to_json(const classifier::VerifyReport& report);

/// Debug dump of a boundary matrix: rows, cols, sparse entries as "p/q".
nlohmann::json matrix_to_json(const RationalMatrix& m);

}  // namespace nilpair

#endif
