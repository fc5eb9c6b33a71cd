#include "degflag/degflag.hpp"

#include <algorithm>
#include <random>
#include <thread>

namespace degflag {

LinearMap projection_map(int k, int n, int p) {
  if (k < 1 || k > n + 1) throw std::invalid_argument("projection index out of range");
  GFMatrix m = GFMatrix::identity(p, n + 1);
  m.set(k - 1, k - 1, 0);
  return LinearMap(std::move(m));
}

LinearMap projection_range(int i, int j, int n, int p) {
  if (!(1 <= i && i < j && j <= n + 1))
    throw std::invalid_argument("projection range requires 1 <= i < j <= n+1");
  LinearMap acc = projection_map(i, n, p);
  for (int k = i + 1; k <= j - 1; ++k) acc = projection_map(k, n, p).after(acc);
  return acc;
}

LinearMap pi_map(int n, int i, int p) {
  if (i < 1 || i > n) throw std::invalid_argument("pi_map requires 1 <= i <= n");
  GFMatrix m(p, n + 1, n + i);
  for (int k = i; k <= n + 1; ++k) m.set(k - 1, k - 1, 1);
  for (int k = n + 2; k <= n + i; ++k) m.set(k - n - 2, k - 1, 1);
  return LinearMap(std::move(m));
}

bool is_degflag_point(const DegFlagPoint& pt, const DimensionVector& dv, int p) {
  const int n = dv.n();
  if (static_cast<int>(pt.spaces.size()) != dv.count()) return false;
  for (int l = 0; l < dv.count(); ++l) {
    const Subspace& s = pt.spaces[static_cast<std::size_t>(l)];
    if (s.p() != p || s.ambient() != n + 1 || s.dim() != dv.dims()[static_cast<std::size_t>(l)])
      return false;
  }
  for (int l = 0; l + 1 < dv.count(); ++l) {
    const LinearMap pr = projection_range(dv.dims()[static_cast<std::size_t>(l)],
                                          dv.dims()[static_cast<std::size_t>(l + 1)], n, p);
    if (!pt.spaces[static_cast<std::size_t>(l + 1)].contains(
            pr.image(pt.spaces[static_cast<std::size_t>(l)])))
      return false;
  }
  return true;
}

Subspace zeta_component(const Subspace& vi, int n, int i) {
  const LinearMap pi = pi_map(n, i, vi.p());
  return pi.preimage(vi).embedded(2 * n);
}

SchubertFlagPoint zeta(const DegFlagPoint& pt, const DimensionVector& dv) {
  SchubertFlagPoint out;
  out.spaces.reserve(pt.spaces.size());
  for (int l = 0; l < dv.count(); ++l)
    out.spaces.push_back(zeta_component(pt.spaces[static_cast<std::size_t>(l)], dv.n(),
                                        dv.dims()[static_cast<std::size_t>(l)]));
  return out;
}

namespace {

void check_flag_bounds(const DimensionVector& dv, int p) {
  const int max_n = (p == 2) ? 4 : (p == 3) ? 3 : 0;
  if (dv.n() > max_n)
    throw bound_error("flag variety enumeration capped at n <= 4 for p = 2, n <= 3 for p = 3");
}

}  // namespace

void for_each_degflag_point(const DimensionVector& dv, int p,
                            const std::function<void(const DegFlagPoint&)>& fn) {
  check_flag_bounds(dv, p);
  const int n = dv.n();
  const Subspace ambient = Subspace::full(p, n + 1);
  std::vector<Subspace> cur;
  cur.reserve(static_cast<std::size_t>(dv.count()));

  std::function<void(int)> rec = [&](int level) {
    if (level == dv.count()) {
      fn(DegFlagPoint{cur});
      return;
    }
    Subspace lower = (level == 0)
        ? Subspace::zero(p, n + 1)
        : projection_range(dv.dims()[static_cast<std::size_t>(level - 1)],
                           dv.dims()[static_cast<std::size_t>(level)], n, p)
              .image(cur.back());
    for_each_between(lower, ambient, dv.dims()[static_cast<std::size_t>(level)],
                     [&](const Subspace& u) {
                       cur.push_back(u);
                       rec(level + 1);
                       cur.pop_back();
                     });
  };
  rec(0);
}

std::vector<DegFlagPoint> enumerate_degflag(const DimensionVector& dv, int p) {
  std::vector<DegFlagPoint> out;
  for_each_degflag_point(dv, p, [&](const DegFlagPoint& pt) { out.push_back(pt); });
  return out;
}

long long count_degflag(const DimensionVector& dv, int p, int threads) {
  check_flag_bounds(dv, p);
  const int n = dv.n();
  threads = std::max(1, threads);

  // Shared tail recursion below the first component.
  auto count_tail = [&](const Subspace& first) {
    long long count = 0;
    std::vector<Subspace> cur{first};
    std::function<void(int)> rec = [&](int level) {
      if (level == dv.count()) {
        ++count;
        return;
      }
      const Subspace lower =
          projection_range(dv.dims()[static_cast<std::size_t>(level - 1)],
                           dv.dims()[static_cast<std::size_t>(level)], n, p)
              .image(cur.back());
      for_each_between(lower, Subspace::full(p, n + 1),
                       dv.dims()[static_cast<std::size_t>(level)], [&](const Subspace& u) {
                         cur.push_back(u);
                         rec(level + 1);
                         cur.pop_back();
                       });
    };
    rec(1);
    return count;
  };

  const std::vector<Subspace> first_level =
      grassmannian(dv.dims()[0], n + 1, p);
  if (threads == 1) {
    long long total = 0;
    for (const Subspace& first : first_level) total += count_tail(first);
    return total;
  }
  std::vector<long long> partial(static_cast<std::size_t>(threads), 0);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t]() {
      for (std::size_t i = static_cast<std::size_t>(t); i < first_level.size();
           i += static_cast<std::size_t>(threads))
        partial[static_cast<std::size_t>(t)] += count_tail(first_level[i]);
    });
  for (auto& th : pool) th.join();
  long long total = 0;
  for (long long c : partial) total += c;
  return total;
}

bool yn_membership(const SchubertFlagPoint& fl, const DimensionVector& dv) {
  const int n = dv.n();
  if (static_cast<int>(fl.spaces.size()) != dv.count()) return false;
  const int p = fl.spaces[0].p();
  for (int i = 0; i < dv.count(); ++i) {
    const Subspace& w = fl.spaces[static_cast<std::size_t>(i)];
    const int di = dv.dims()[static_cast<std::size_t>(i)];
    if (w.ambient() != 2 * n || w.dim() != 2 * di - 1) return false;
    std::vector<int> low, high;
    for (int k = 1; k <= di - 1; ++k) low.push_back(k);
    for (int k = 1; k <= n + di; ++k) high.push_back(k);
    if (!w.contains(Subspace::coordinate(p, 2 * n, low))) return false;
    if (!Subspace::coordinate(p, 2 * n, high).contains(w)) return false;
    if (i > 0 && !w.contains(fl.spaces[static_cast<std::size_t>(i - 1)])) return false;
  }
  return true;
}

bool schubert_conditions(const SchubertFlagPoint& fl, const Permutation& sigma,
                         const DimensionVector& dv) {
  const int n = dv.n();
  if (sigma.size() != 2 * n || static_cast<int>(fl.spaces.size()) != dv.count())
    throw std::invalid_argument("schubert_conditions dimension mismatch");
  const RankMatrix rm(sigma);
  for (int i = 0; i < dv.count(); ++i) {
    const Subspace& w = fl.spaces[static_cast<std::size_t>(i)];
    if (w.ambient() != 2 * n) throw std::invalid_argument("chain component ambient mismatch");
    const std::vector<int> profile = flag_profile(w);
    const int row = 2 * dv.dims()[static_cast<std::size_t>(i)] - 1;
    for (int k = 1; k <= 2 * n; ++k)
      if (profile[static_cast<std::size_t>(k - 1)] < rm.at(row, k)) return false;
  }
  return true;
}

void for_each_yn_point(const DimensionVector& dv, int p,
                       const std::function<void(const SchubertFlagPoint&)>& fn) {
  check_flag_bounds(dv, p);
  const int n = dv.n();
  std::vector<Subspace> cur;

  std::function<void(int)> rec = [&](int level) {
    if (level == dv.count()) {
      fn(SchubertFlagPoint{cur});
      return;
    }
    const int dl = dv.dims()[static_cast<std::size_t>(level)];
    std::vector<int> low, high;
    for (int k = 1; k <= dl - 1; ++k) low.push_back(k);
    for (int k = 1; k <= n + dl; ++k) high.push_back(k);
    Subspace lower = Subspace::coordinate(p, 2 * n, low);
    if (level > 0) lower = sum(lower, cur.back());
    const Subspace upper = Subspace::coordinate(p, 2 * n, high);
    for_each_between(lower, upper, 2 * dl - 1, [&](const Subspace& w) {
      cur.push_back(w);
      rec(level + 1);
      cur.pop_back();
    });
  };
  rec(0);
}

std::vector<SchubertFlagPoint> enumerate_yn(const DimensionVector& dv, int p) {
  std::vector<SchubertFlagPoint> out;
  for_each_yn_point(dv, p, [&](const SchubertFlagPoint& fl) { out.push_back(fl); });
  return out;
}

std::vector<SchubertFlagPoint> enumerate_schubert_points(const Permutation& sigma,
                                                         const DimensionVector& dv,
                                                         int p) {
  check_flag_bounds(dv, p);
  const int n = dv.n();
  if (sigma.size() != 2 * n)
    throw std::invalid_argument("sigma degree does not match dimension vector");
  const RankMatrix rm(sigma);
  const Subspace ambient = Subspace::full(p, 2 * n);

  std::vector<SchubertFlagPoint> out;
  std::vector<Subspace> cur;
  std::function<void(int)> rec = [&](int level) {
    if (level == dv.count()) {
      out.push_back(SchubertFlagPoint{cur});
      return;
    }
    const int dl = dv.dims()[static_cast<std::size_t>(level)];
    const int row = 2 * dl - 1;
    const Subspace lower = (level == 0) ? Subspace::zero(p, 2 * n) : cur.back();
    for_each_between(lower, ambient, 2 * dl - 1, [&](const Subspace& w) {
      const std::vector<int> profile = flag_profile(w);
      for (int k = 1; k <= 2 * n; ++k)
        if (profile[static_cast<std::size_t>(k - 1)] < rm.at(row, k)) return;
      cur.push_back(w);
      rec(level + 1);
      cur.pop_back();
    });
  };
  rec(0);
  return out;
}

TorusElement flag_component_torus(const TorusElement& lambda, int n, int i) {
  std::vector<int> mu(static_cast<std::size_t>(n + 1));
  for (int k = 1; k <= n + 1; ++k)
    mu[static_cast<std::size_t>(k - 1)] = (k <= i - 1) ? lambda.entry(n + 1 + k) : lambda.entry(k);
  return TorusElement(lambda.p(), std::move(mu));
}

DegFlagPoint torus_act_flag(const TorusElement& lambda, const DegFlagPoint& pt,
                            const DimensionVector& dv) {
  DegFlagPoint out;
  out.spaces.reserve(pt.spaces.size());
  for (int l = 0; l < dv.count(); ++l)
    out.spaces.push_back(flag_component_torus(lambda, dv.n(), dv.dims()[static_cast<std::size_t>(l)])
                             .act(pt.spaces[static_cast<std::size_t>(l)]));
  return out;
}

SchubertFlagPoint torus_act_chain(const TorusElement& lambda,
                                  const SchubertFlagPoint& fl) {
  SchubertFlagPoint out;
  out.spaces.reserve(fl.spaces.size());
  for (const Subspace& w : fl.spaces) out.spaces.push_back(lambda.act(w));
  return out;
}

bool torus_equivariance_check(const DimensionVector& dv, int p) {
  const int n = dv.n();
  std::vector<TorusElement> torus;
  double total = 1;
  for (int i = 0; i < 2 * n; ++i) total *= p - 1;
  if (total <= 4096) {
    std::vector<int> digits(static_cast<std::size_t>(2 * n), 1);
    while (true) {
      torus.emplace_back(p, digits);
      int i = 2 * n - 1;
      while (i >= 0 && digits[static_cast<std::size_t>(i)] == p - 1) {
        digits[static_cast<std::size_t>(i)] = 1;
        --i;
      }
      if (i < 0) break;
      ++digits[static_cast<std::size_t>(i)];
    }
  } else {
    std::mt19937 rng(20240801);
    std::uniform_int_distribution<int> unit(1, p - 1);
    for (int s = 0; s < 32; ++s) {
      std::vector<int> digits(static_cast<std::size_t>(2 * n));
      for (auto& d : digits) d = unit(rng);
      torus.emplace_back(p, std::move(digits));
    }
  }

  bool ok = true;
  for_each_degflag_point(dv, p, [&](const DegFlagPoint& pt) {
    if (!ok) return;
    const SchubertFlagPoint zpt = zeta(pt, dv);
    for (const TorusElement& lambda : torus) {
      if (!(zeta(torus_act_flag(lambda, pt, dv), dv) == torus_act_chain(lambda, zpt))) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

namespace {

void coordinate_rec(const DimensionVector& dv, int level,
                    std::vector<std::vector<int>>& cur,
                    std::vector<std::vector<std::vector<int>>>& out) {
  const int n = dv.n();
  if (level == dv.count()) {
    out.push_back(cur);
    return;
  }
  const int dl = dv.dims()[static_cast<std::size_t>(level)];
  // Indices that must survive into this level's set.
  std::vector<int> required;
  if (level > 0) {
    const int dprev = dv.dims()[static_cast<std::size_t>(level - 1)];
    for (int idx : cur.back())
      if (idx < dprev || idx > dl - 1) required.push_back(idx);
  }
  if (static_cast<int>(required.size()) > dl) return;
  std::vector<int> optional;
  for (int idx = 1; idx <= n + 1; ++idx)
    if (std::find(required.begin(), required.end(), idx) == required.end())
      optional.push_back(idx);
  for_each_combination(static_cast<int>(optional.size()),
                       dl - static_cast<int>(required.size()),
                       [&](const std::vector<int>& pick) {
                         std::vector<int> set = required;
                         for (int i : pick) set.push_back(optional[static_cast<std::size_t>(i)]);
                         std::sort(set.begin(), set.end());
                         cur.push_back(std::move(set));
                         coordinate_rec(dv, level + 1, cur, out);
                         cur.pop_back();
                       });
}

}  // namespace

std::vector<std::vector<std::vector<int>>> coordinate_collections(const DimensionVector& dv) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> cur;
  coordinate_rec(dv, 0, cur, out);
  return out;
}

long long fixed_points_count(const DimensionVector& dv) {
  return static_cast<long long>(coordinate_collections(dv).size());
}

BilinearForm symplectic_form_V(int m, int p) {
  if (m < 1) throw std::invalid_argument("symplectic_form_V requires m >= 1");
  const int n = 2 * m - 1;
  const BilinearForm bw = BilinearForm::symplectic_E(n, p);
  // Basis section of pi_m: f_j <- e_{n+1+j} for j <= m-1, f_j <- e_j for
  // j >= m.
  std::vector<int> section(static_cast<std::size_t>(n + 1));
  for (int j = 1; j <= n + 1; ++j)
    section[static_cast<std::size_t>(j - 1)] = (j <= m - 1) ? n + 1 + j : j;
  // Transport is well defined only if ker pi_m pairs to zero with U_{n+m}.
  for (int t = 1; t <= m - 1; ++t)
    for (int c = 1; c <= n + m; ++c)
      if (bw.eval_basis(t, c) != 0)
        throw std::logic_error("kernel of pi_m does not pair to zero");
  GFMatrix e(p, n + 1, n + 1);
  for (int a = 1; a <= n + 1; ++a)
    for (int b = 1; b <= n + 1; ++b)
      e.set(a - 1, b - 1, bw.eval_basis(section[static_cast<std::size_t>(a - 1)],
                                        section[static_cast<std::size_t>(b - 1)]));
  return BilinearForm(std::move(e));
}

namespace {

// The sign twist pairing the columns m-i and m+i of the projection chain:
// negate the coordinates of f_m..f_{m+i-1}.  Transporting the symplectic
// form of W through pi_{m-i} and pi_{m+i} yields the twist of b_V by this
// map, not b_V itself; the twist is what makes the orthogonality relations
// between the two sides hold at odd characteristic.
Subspace column_sign_twist(const Subspace& u, int m, int i) {
  if (i == 0 || u.p() == 2) return u;
  GFMatrix b = u.basis();
  for (int r = 0; r < b.rows(); ++r)
    for (int c = m - 1; c < m - 1 + i; ++c)
      b.set(r, c, (u.p() - b.at(r, c)) % u.p());
  return Subspace::row_space(b);
}

std::vector<std::uint8_t> vector_sign_twist(std::vector<std::uint8_t> v, int m, int i, int p) {
  for (int c = m - 1; c < m - 1 + i; ++c)
    v[static_cast<std::size_t>(c)] = static_cast<std::uint8_t>((p - v[static_cast<std::size_t>(c)]) % p);
  return v;
}

}  // namespace

bool metric_preserving_check(int m, int p) {
  if (p % 2 == 0) throw std::invalid_argument("metric check requires odd characteristic");
  const int n = 2 * m - 1;
  const BilinearForm bw = BilinearForm::symplectic_E(n, p);
  const BilinearForm bv = symplectic_form_V(m, p);
  for (int i = 0; i <= m - 1; ++i) {
    const LinearMap lo = pi_map(n, m - i, p);
    const LinearMap hi = pi_map(n, m + i, p);
    for (int a = 1; a <= n + m - i; ++a)
      for (int b = 1; b <= n + m + i; ++b) {
        std::vector<std::uint8_t> ea(static_cast<std::size_t>(lo.domain_dim()), 0);
        ea[static_cast<std::size_t>(a - 1)] = 1;
        std::vector<std::uint8_t> eb(static_cast<std::size_t>(hi.domain_dim()), 0);
        eb[static_cast<std::size_t>(b - 1)] = 1;
        const int lhs = bv.eval(lo.apply(ea), vector_sign_twist(hi.apply(eb), m, i, p));
        if (lhs != bw.eval_basis(a, b)) return false;
      }
  }
  return true;
}

bool zeta_perp_check(int m, int p) {
  const int n = 2 * m - 1;
  const BilinearForm bw = BilinearForm::symplectic_E(n, p);
  const BilinearForm bv = symplectic_form_V(m, p);
  for (int i = 0; i <= m - 1; ++i) {
    bool ok = true;
    for_each_subspace(m - i, n + 1, p, [&](const Subspace& u) {
      if (!ok) return;
      const Subspace lhs = bw.perp(zeta_component(u, n, m - i));
      const Subspace rhs = zeta_component(column_sign_twist(bv.perp(u), m, i), n, m + i);
      if (!(lhs == rhs)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

namespace {

void check_type_c(const DimensionVector& dv) {
  if (dv.n() % 2 == 0)
    throw std::invalid_argument("symplectic structure requires n = 2m-1 odd");
  if (!dv.type_c_symmetric())
    throw std::invalid_argument("dimension vector must be preserved by d -> n+1-d");
}

}  // namespace

DegFlagPoint iota_flag(const DegFlagPoint& pt, const DimensionVector& dv,
                       const BilinearForm& form_v) {
  check_type_c(dv);
  const int s = dv.count();
  const int m = (dv.n() + 1) / 2;
  DegFlagPoint out;
  out.spaces.reserve(pt.spaces.size());
  for (int l = 0; l < s; ++l) {
    const int target_dim = dv.dims()[static_cast<std::size_t>(l)];
    const Subspace& src = pt.spaces[static_cast<std::size_t>(s - 1 - l)];
    if (target_dim >= m)
      out.spaces.push_back(column_sign_twist(form_v.perp(src), m, target_dim - m));
    else
      out.spaces.push_back(form_v.perp(column_sign_twist(src, m, m - target_dim)));
  }
  return out;
}

SchubertFlagPoint iota_chain(const SchubertFlagPoint& fl, const DimensionVector& dv,
                             const BilinearForm& form_w) {
  check_type_c(dv);
  const int s = dv.count();
  SchubertFlagPoint out;
  out.spaces.reserve(fl.spaces.size());
  for (int l = 0; l < s; ++l)
    out.spaces.push_back(form_w.perp(fl.spaces[static_cast<std::size_t>(s - 1 - l)]));
  return out;
}

std::vector<DegFlagPoint> symplectic_fixed(const DimensionVector& dv, int p) {
  check_type_c(dv);
  const int m = (dv.n() + 1) / 2;
  const BilinearForm bv = symplectic_form_V(m, p);
  std::vector<DegFlagPoint> out;
  for_each_degflag_point(dv, p, [&](const DegFlagPoint& pt) {
    if (iota_flag(pt, dv, bv) == pt) out.push_back(pt);
  });
  return out;
}

long long iota_fixed_coordinate_count(const DimensionVector& dv) {
  check_type_c(dv);
  const int n = dv.n();
  const int m = (n + 1) / 2;
  // Pairing partner of each basis index under b_V; computed at p = 3, the
  // pattern is characteristic independent.
  const BilinearForm bv = symplectic_form_V(m, 3);
  std::vector<int> partner(static_cast<std::size_t>(n + 1), 0);
  for (int a = 1; a <= n + 1; ++a)
    for (int b = 1; b <= n + 1; ++b)
      if (bv.eval_basis(a, b) != 0) partner[static_cast<std::size_t>(a - 1)] = b;

  const int s = dv.count();
  long long count = 0;
  for (const auto& collection : coordinate_collections(dv)) {
    bool fixed = true;
    for (int l = 0; l < s && fixed; ++l) {
      // perp of a coordinate set S is the complement of S's partner set.
      const auto& src = collection[static_cast<std::size_t>(s - 1 - l)];
      std::vector<bool> excluded(static_cast<std::size_t>(n + 1), false);
      for (int idx : src) excluded[static_cast<std::size_t>(partner[static_cast<std::size_t>(idx - 1)] - 1)] = true;
      std::vector<int> perp_set;
      for (int idx = 1; idx <= n + 1; ++idx)
        if (!excluded[static_cast<std::size_t>(idx - 1)]) perp_set.push_back(idx);
      if (perp_set != collection[static_cast<std::size_t>(l)]) fixed = false;
    }
    if (fixed) ++count;
  }
  return count;
}

}  // namespace degflag
