#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "orbitcalc/lie_algebra.hpp"

namespace orbitcalc::io {

/// Algebra spec document:
///
///   { "label": str, "dim": int,
///     "structure_constants": [[i, j, k, value], ...],
///     "defining_rep": [ [[re, im], ...], ... ] }
///
/// Each defining_rep entry is one n x n matrix flattened row-major into n*n
/// [re, im] pairs.  Structure constants are sparse and complete: both
/// [i,j,k,c] and [j,i,k,-c] must be listed.  Unknown fields are rejected.
LieAlgebra algebra_from_json(const nlohmann::json& doc);
LieAlgebra load_algebra(const std::filesystem::path& path);

nlohmann::json algebra_to_json(const LieAlgebra& a);

}  // namespace orbitcalc::io
