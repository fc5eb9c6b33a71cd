#pragma once

#include <string>

#include "json.hpp"

#include "degflag/bruhat.hpp"
#include "degflag/degflag.hpp"
#include "degflag/perm.hpp"
#include "degflag/quiver_bs.hpp"

namespace degflag {

// Permutations serialize as 1-based one-line integer arrays.
nlohmann::json to_json(const Permutation& w);
Permutation permutation_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PoincarePolynomial& poly);  // {"coeffs": [...]}

// Subspaces carry their field and ambient dimension next to the basis matrix.
nlohmann::json to_json(const Subspace& u);

// Flag points are arrays of subspace matrices; the field and ambient
// dimension ride along once.
nlohmann::json to_json(const DegFlagPoint& pt);
nlohmann::json to_json(const SchubertFlagPoint& fl);

// Quiver collections map vertex labels "a_i_j" to subspace matrices.
nlohmann::json to_json(const Quiver& q, const RnPoint& pt);
nlohmann::json to_json(const Quiver& q, const BnPoint& pt);

std::string vertex_label(QuiverVertex v);

}  // namespace degflag
