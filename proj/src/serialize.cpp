#include "degflag/serialize.hpp"

namespace degflag {

namespace {

nlohmann::json matrix_json(const GFMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(static_cast<int>(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

nlohmann::json to_json(const Permutation& w) { return nlohmann::json(w.one_line()); }

Permutation permutation_from_json(const nlohmann::json& j) {
  return Permutation(j.get<std::vector<int>>());
}

nlohmann::json to_json(const PoincarePolynomial& poly) {
  return nlohmann::json{{"coeffs", poly.coeffs}};
}

nlohmann::json to_json(const Subspace& u) {
  return nlohmann::json{{"p", u.p()},
                        {"ambient_dim", u.ambient()},
                        {"matrix", matrix_json(u.basis())}};
}

namespace {

nlohmann::json flag_json(const std::vector<Subspace>& spaces) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Subspace& s : spaces) arr.push_back(matrix_json(s.basis()));
  nlohmann::json out;
  if (!spaces.empty()) {
    out["p"] = spaces.front().p();
    out["ambient_dim"] = spaces.front().ambient();
  }
  out["subspaces"] = std::move(arr);
  return out;
}

}  // namespace

nlohmann::json to_json(const DegFlagPoint& pt) { return flag_json(pt.spaces); }
nlohmann::json to_json(const SchubertFlagPoint& fl) { return flag_json(fl.spaces); }

std::string vertex_label(QuiverVertex v) {
  return "a_" + std::to_string(v.i) + "_" + std::to_string(v.j);
}

nlohmann::json to_json(const Quiver& q, const RnPoint& pt) {
  nlohmann::json out;
  for (int k = 1; k <= q.vertex_count(); ++k)
    out[vertex_label(q.beta(k))] = matrix_json(pt.z[static_cast<std::size_t>(k - 1)].basis());
  return out;
}

nlohmann::json to_json(const Quiver& q, const BnPoint& pt) {
  nlohmann::json out;
  for (int k = 1; k <= q.vertex_count(); ++k)
    out[vertex_label(q.beta(k))] = matrix_json(pt.u[static_cast<std::size_t>(k - 1)].basis());
  return out;
}

}  // namespace degflag
