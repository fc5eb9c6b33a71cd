#pragma once

#include <functional>
#include <vector>

#include "degflag/bruhat.hpp"
#include "degflag/gf_linalg.hpp"
#include "degflag/perm.hpp"

namespace degflag {

// V is F_p^{n+1} with basis f_1..f_{n+1}; W is F_p^{2n} with basis e_1..e_2n.

// Projection of V along the line spanned by f_k: kills f_k, fixes the rest.
LinearMap projection_map(int k, int n, int p);
// pr_{j-1} ∘ ... ∘ pr_{i+1} ∘ pr_i; kills f_i..f_{j-1}.  Requires i < j.
LinearMap projection_range(int i, int j, int n, int p);

// The surjection U_{n+i} -> V: e_k -> 0 for k <= i-1, e_k -> f_k for
// i <= k <= n+1, e_k -> f_{k-n-1} for n+2 <= k <= n+i.  The domain carries
// the coordinates of U_{n+i} = <e_1..e_{n+i}>, so the matrix is
// (n+1) x (n+i).  Kernel is <e_1..e_{i-1}>.
LinearMap pi_map(int n, int i, int p);

// A point of the degenerate flag variety: V_l in Gr_{d_l}(V) with
// pr_{d_l, d_{l+1}}(V_l) ⊆ V_{l+1}.
struct DegFlagPoint {
  std::vector<Subspace> spaces;
  bool operator==(const DegFlagPoint& other) const = default;
  bool operator<(const DegFlagPoint& other) const { return spaces < other.spaces; }
};

// A point of SL_{2n}/P: a nested chain W_1 ⊆ ... ⊆ W_s in W with
// dim W_i = 2d_i - 1.
struct SchubertFlagPoint {
  std::vector<Subspace> spaces;
  bool operator==(const SchubertFlagPoint& other) const = default;
  bool operator<(const SchubertFlagPoint& other) const { return spaces < other.spaces; }
};

bool is_degflag_point(const DegFlagPoint& pt, const DimensionVector& dv, int p);

// The i-th component embedding Gr_i(V) -> Gr_{2i-1}(W): preimage under pi_i,
// zero-padded from U_{n+i} into W.
Subspace zeta_component(const Subspace& vi, int n, int i);
// W_l = pi_{d_l}^{-1}(V_l) for every component.
SchubertFlagPoint zeta(const DegFlagPoint& pt, const DimensionVector& dv);

// All F_p points, deterministic order.  Bounds: n <= 4 at p = 2, n <= 3 at
// p = 3.
void for_each_degflag_point(const DimensionVector& dv, int p,
                            const std::function<void(const DegFlagPoint&)>& fn);
std::vector<DegFlagPoint> enumerate_degflag(const DimensionVector& dv, int p);
long long count_degflag(const DimensionVector& dv, int p, int threads = 1);

// Membership in Y_n: nested chain, dim W_i = 2d_i - 1, and
// <e_1..e_{d_i-1}> ⊆ W_i ⊆ <e_1..e_{n+d_i}> for every i.
bool yn_membership(const SchubertFlagPoint& fl, const DimensionVector& dv);

// The rank conditions cutting out X_sigma:
// dim(W_i ∩ <e_1..e_k>) >= #{l <= 2d_i - 1 : sigma(l) <= k} for all i, k.
bool schubert_conditions(const SchubertFlagPoint& fl, const Permutation& sigma,
                         const DimensionVector& dv);

// All F_p points of Y_n, enumerated through quotient coordinates.
void for_each_yn_point(const DimensionVector& dv, int p,
                       const std::function<void(const SchubertFlagPoint&)>& fn);
std::vector<SchubertFlagPoint> enumerate_yn(const DimensionVector& dv, int p);

// All chains in SL_{2n}/P(F_p) satisfying the rank conditions of sigma;
// an enumeration of X_sigma(F_p) independent of the Y_n description.
std::vector<SchubertFlagPoint> enumerate_schubert_points(const Permutation& sigma,
                                                         const DimensionVector& dv,
                                                         int p);

// Component torus action on the copy of V carrying V^(i): f_k scales by
// lambda_k for k >= i and by lambda_{n+1+k} for k <= i-1.
TorusElement flag_component_torus(const TorusElement& lambda, int n, int i);
DegFlagPoint torus_act_flag(const TorusElement& lambda, const DegFlagPoint& pt,
                            const DimensionVector& dv);
SchubertFlagPoint torus_act_chain(const TorusElement& lambda,
                                  const SchubertFlagPoint& fl);
// zeta(lambda . pt) == lambda . zeta(pt) over all points; the torus factors
// are exhausted when (p-1)^{2n} is small and sampled deterministically
// otherwise.
bool torus_equivariance_check(const DimensionVector& dv, int p);

// Collections of coordinate index sets S_l ⊆ {1..n+1}, |S_l| = d_l, with
// (S_l \ [d_l, d_{l+1}-1]) ⊆ S_{l+1}; these are the torus fixed points.
std::vector<std::vector<std::vector<int>>> coordinate_collections(const DimensionVector& dv);
long long fixed_points_count(const DimensionVector& dv);

// --- symplectic structure (n = 2m-1) ---

// The form on V obtained by transporting the symplectic form of W through
// pi_m: b_V[x, y] = b_W[v, w] for any pi_m-preimages v, w.  Well defined
// because ker pi_m pairs to zero with all of U_{n+m}.
BilinearForm symplectic_form_V(int m, int p);

// b_V[pi_{m-i}(v), g_i . pi_{m+i}(w)] = b_W[v, w] on all basis pairs of
// U_{n+m-i} x U_{n+m+i}, for 0 <= i <= m-1, where g_i negates the
// coordinates of f_m..f_{m+i-1}.  The i = 0 case says pi_m is a map of
// symplectic spaces; the twist by g_i is forced for i >= 1 (no untwisted
// skew form satisfies both i = 0 and i = 1 at odd p).  Requires odd p.
bool metric_preserving_check(int m, int p);

// perp_W(zeta_{m-i}(U)) == zeta_{m+i}(g_i . perp_V(U)) for all U in
// Gr_{m-i}(V), with the same twist g_i.
bool zeta_perp_check(int m, int p);

// iota on the flag side: component l becomes the b_V-orthogonal complement
// of component s+1-l, twisted by g_i on the pair of columns it connects.
// This is the restriction of the chain-side involution through the
// embedding: zeta(iota_flag(pt)) = iota_chain(zeta(pt)) pointwise.
// Requires n odd and dv type C symmetric.
DegFlagPoint iota_flag(const DegFlagPoint& pt, const DimensionVector& dv,
                       const BilinearForm& form_v);
// iota on the chain side, with the b_W-orthogonal complement.
SchubertFlagPoint iota_chain(const SchubertFlagPoint& fl, const DimensionVector& dv,
                             const BilinearForm& form_w);

// The iota-fixed points of the degenerate flag variety.
std::vector<DegFlagPoint> symplectic_fixed(const DimensionVector& dv, int p);

// Coordinate collections fixed by iota; the symplectic torus fixed points.
long long iota_fixed_coordinate_count(const DimensionVector& dv);

}  // namespace degflag
