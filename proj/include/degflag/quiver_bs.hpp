#pragma once

#include <functional>
#include <vector>

#include "degflag/degflag.hpp"
#include "degflag/gf_linalg.hpp"

namespace degflag {

// Vertex a_{i,j} of the decorated quiver: 1 <= i <= j <= n inside, with the
// rim allowing i = 0 or j = n+1.  Column i+j-1, row j-i+1.
struct QuiverVertex {
  int i = 0;
  int j = 0;
  int column() const { return i + j - 1; }
  int row() const { return j - i + 1; }
  bool operator==(const QuiverVertex& other) const = default;
};

// a_{i-1,j} and a_{i,j+1}: both strictly earlier in the vertex ordering, on
// the neighbouring columns.
QuiverVertex vertex_minus(QuiverVertex v);
QuiverVertex vertex_plus(QuiverVertex v);

// The quiver on N = n(n+1)/2 vertices with its total order beta_1..beta_N
// (rows top to bottom, left to right within a row), extended over the 2n+1
// rim vertices at indices 0, -1, ..., -2n.
class Quiver {
public:
  explicit Quiver(int n);

  int n() const { return n_; }
  int vertex_count() const { return big_n_; }  // N

  bool is_decorated(QuiverVertex v) const { return v.i == 0 || v.j == n_ + 1; }
  bool in_quiver(QuiverVertex v) const;

  // beta_k for -2n <= k <= N.
  QuiverVertex beta(int k) const;
  // Extended index of a vertex; inverse of beta().
  int index_of(QuiverVertex v) const;

  // (beta_k : ell): the largest extended index s <= k whose vertex lies on
  // column ell.  Defined for 0 <= ell <= 2n thanks to the rim.
  int lookup(int k, int ell) const;

  // Oriented edges of the plain quiver and of the decorated one.
  std::vector<std::pair<QuiverVertex, QuiverVertex>> edges() const;
  std::vector<std::pair<QuiverVertex, QuiverVertex>> decorated_edges() const;

  // Columns of beta_1..beta_N; the reduced word for sigma_n.
  std::vector<int> reduced_word() const;

private:
  int n_;
  int big_n_;
  std::vector<QuiverVertex> order_;            // order_[k-1] = beta_k
  std::vector<std::vector<int>> by_column_;    // ascending extended indices
};

std::vector<int> reduced_word_sigma(int n);

// For 1 <= k <= N and 1 <= t <= 2n-2, either (beta_k : t+1) = (beta_k : t)^+
// or (beta_k : t+1)^- = (beta_k : t).  Checked exhaustively; requires n <= 8.
bool lemma_check(int n);

// The coordinate subspace <f_1..f_{i-1}, f_j..f_{n+1}> of V attached to a
// quiver vertex (with f_0 = 0, so i = 1 gives <f_j..f_{n+1}>).
Subspace quiver_coordinate_space(QuiverVertex v, int n, int p);

// A point of the resolution: z[k-1] = Z_{beta_k} ⊆ V, with the rim reading
// Z = 0 on the left and Z = V on the right.
struct RnPoint {
  std::vector<Subspace> z;
  bool operator==(const RnPoint& other) const = default;
  bool operator<(const RnPoint& other) const { return z < other.z; }
};

// A point of the subspace model of the Bott-Samelson variety:
// u[k-1] = U_{beta_k} ⊆ W, with the rim forced to the standard flag.
struct BnPoint {
  std::vector<Subspace> u;
  bool operator==(const BnPoint& other) const = default;
  bool operator<(const BnPoint& other) const { return u < other.u; }
};

// Enumerations proceed in beta order, so every step ranges over the fiber
// over the already-fixed predecessors.  Bounds: n <= 3, p in {2, 3}.
void for_each_rn_point(int n, int p, const std::function<void(const RnPoint&)>& fn);
std::vector<RnPoint> enumerate_rn(int n, int p);
void for_each_bn_point(int n, int p, const std::function<void(const BnPoint&)>& fn);
std::vector<BnPoint> enumerate_bn(int n, int p);

// Every truncation step extends each valid prefix to exactly p+1 points.
bool rn_tower_check(int n, int p);

// The four defining conditions of the subspace model, checked directly.
bool validate_bn(const Quiver& q, const BnPoint& pt, int p);

// Componentwise preimage U_{beta_k} = pi_{j_k}^{-1}(Z_{beta_k}).
BnPoint zeta_quiver(const Quiver& q, const RnPoint& pt, int p);
// Reads off the diagonal (Z_{a_{k,k}})_k.
DegFlagPoint pn_project(const Quiver& q, const RnPoint& pt);
// Reads (U_{(beta_N : 2k-1)})_k, the chain at the end of the word.
SchubertFlagPoint rho_of_psi(const Quiver& q, const BnPoint& pt);

// The complete flags U^{beta_k}_t = U_{(beta_k : t)} for k = 0..N; flag k is
// returned as its 2n-1 proper subspaces.
std::vector<std::vector<Subspace>> psi_flags(const Quiver& q, const BnPoint& pt, int p);
// Each psi flag is complete and consecutive flags agree away from position
// ell_{k+1}, i.e. they are in relative position ell_{k+1}.
bool psi_relative_position_check(const Quiver& q, const BnPoint& pt, int p);

}  // namespace degflag
