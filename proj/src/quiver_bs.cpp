#include "degflag/quiver_bs.hpp"

#include <algorithm>

namespace degflag {

QuiverVertex vertex_minus(QuiverVertex v) { return {v.i - 1, v.j}; }
QuiverVertex vertex_plus(QuiverVertex v) { return {v.i, v.j + 1}; }

Quiver::Quiver(int n) : n_(n), big_n_(n * (n + 1) / 2) {
  if (n < 1 || n > 16) throw std::invalid_argument("quiver rank out of range");
  order_.reserve(static_cast<std::size_t>(big_n_));
  QuiverVertex v{1, n};
  for (int k = 1; k <= big_n_; ++k) {
    order_.push_back(v);
    v = (v.j < n) ? QuiverVertex{v.i + 1, v.j + 1} : QuiverVertex{1, n - v.i};
  }
  by_column_.assign(static_cast<std::size_t>(2 * n + 1), {});
  for (int k = -2 * n_; k <= big_n_; ++k)
    by_column_[static_cast<std::size_t>(beta(k).column())].push_back(k);
}

bool Quiver::in_quiver(QuiverVertex v) const {
  return 1 <= v.i && v.i <= v.j && v.j <= n_;
}

QuiverVertex Quiver::beta(int k) const {
  if (k >= 1 && k <= big_n_) return order_[static_cast<std::size_t>(k - 1)];
  if (k <= 0 && k >= -n_) return {0, 1 - k};          // left rim, column -k
  if (k < -n_ && k >= -2 * n_) return {-k - n_, n_ + 1};  // right rim, column -k
  throw std::invalid_argument("beta index out of range");
}

int Quiver::index_of(QuiverVertex v) const {
  if (v.i == 0) {
    if (v.j < 1 || v.j > n_ + 1) throw std::invalid_argument("vertex outside quiver");
    return 1 - v.j;
  }
  if (v.j == n_ + 1) {
    if (v.i < 1 || v.i > n_) throw std::invalid_argument("vertex outside quiver");
    return -v.i - n_;
  }
  if (!in_quiver(v)) throw std::invalid_argument("vertex outside quiver");
  // Vertices above row r = j-i+1 count (n-r) + (n-r-1) + ... + 1 slots; v is
  // the i-th entry of its row.
  const int r = v.row();
  const int above = (n_ - r) * (n_ - r + 1) / 2;
  return above + v.i;
}

int Quiver::lookup(int k, int ell) const {
  if (ell < 0 || ell > 2 * n_) throw std::invalid_argument("column index out of range");
  if (k < -2 * n_ || k > big_n_) throw std::invalid_argument("beta index out of range");
  const std::vector<int>& col = by_column_[static_cast<std::size_t>(ell)];
  int best = col.front();  // the rim vertex on this column, index <= 0
  for (int s : col) {
    if (s > k) break;
    best = s;
  }
  if (best > k) throw std::logic_error("no vertex available on column");
  return best;
}

std::vector<std::pair<QuiverVertex, QuiverVertex>> Quiver::edges() const {
  std::vector<std::pair<QuiverVertex, QuiverVertex>> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i; j <= n_; ++j) {
      if (i < j) out.push_back({{i, j}, {i + 1, j}});
      if (j < n_) out.push_back({{i, j}, {i, j + 1}});
    }
  return out;
}

std::vector<std::pair<QuiverVertex, QuiverVertex>> Quiver::decorated_edges() const {
  std::vector<std::pair<QuiverVertex, QuiverVertex>> out = edges();
  for (int i = 1; i <= n_; ++i) {
    out.push_back({{0, i}, {1, i}});
    out.push_back({{i, n_}, {i, n_ + 1}});
  }
  return out;
}

std::vector<int> Quiver::reduced_word() const {
  std::vector<int> out;
  out.reserve(order_.size());
  for (const QuiverVertex& v : order_) out.push_back(v.column());
  return out;
}

std::vector<int> reduced_word_sigma(int n) { return Quiver(n).reduced_word(); }

bool lemma_check(int n) {
  if (n > 8) throw bound_error("lemma check capped at n <= 8");
  const Quiver q(n);
  for (int k = 1; k <= q.vertex_count(); ++k) {
    for (int t = 1; t <= 2 * n - 2; ++t) {
      const QuiverVertex at_t = q.beta(q.lookup(k, t));
      const QuiverVertex at_t1 = q.beta(q.lookup(k, t + 1));
      if (!(at_t1 == vertex_plus(at_t)) && !(vertex_minus(at_t1) == at_t)) return false;
    }
  }
  return true;
}

Subspace quiver_coordinate_space(QuiverVertex v, int n, int p) {
  if (v.i < 1 || v.i > v.j || v.j > n)
    throw std::invalid_argument("coordinate space defined on quiver vertices only");
  std::vector<int> coords;
  for (int k = 1; k <= v.i - 1; ++k) coords.push_back(k);
  for (int k = v.j; k <= n + 1; ++k) coords.push_back(k);
  return Subspace::coordinate(p, n + 1, coords);
}

namespace {

void check_quiver_bounds(int n, int p) {
  if (p != 2 && p != 3) throw bound_error("resolution enumeration supports p in {2, 3}");
  if (n > 3) throw bound_error("resolution enumeration capped at n <= 3");
  if (n < 1) throw std::invalid_argument("n must be positive");
}

// Value of Z at an extended index: rim left = 0, rim right = V.
Subspace rn_value(const Quiver& q, const std::vector<Subspace>& z, QuiverVertex v,
                  int p) {
  if (v.i == 0) return Subspace::zero(p, q.n() + 1);
  if (v.j == q.n() + 1) return Subspace::full(p, q.n() + 1);
  return z[static_cast<std::size_t>(q.index_of(v) - 1)];
}

// Value of U at an extended index: the rim is the standard flag F_t with t
// the column of the vertex.
Subspace bn_value(const Quiver& q, const std::vector<Subspace>& u, QuiverVertex v,
                  int p) {
  if (!q.in_quiver(v)) {
    std::vector<int> coords;
    for (int k = 1; k <= v.column(); ++k) coords.push_back(k);
    return Subspace::coordinate(p, 2 * q.n(), coords);
  }
  return u[static_cast<std::size_t>(q.index_of(v) - 1)];
}

void rn_rec(const Quiver& q, int p, int k, std::vector<Subspace>& z,
            const std::function<void(const RnPoint&)>& fn) {
  if (k > q.vertex_count()) {
    fn(RnPoint{z});
    return;
  }
  const QuiverVertex v = q.beta(k);
  const Subspace lower = rn_value(q, z, vertex_minus(v), p);
  const Subspace succ = rn_value(q, z, vertex_plus(v), p);
  const Subspace upper = intersect(quiver_coordinate_space(v, q.n(), p),
                                   projection_map(v.j, q.n(), p).preimage(succ));
  for_each_between(lower, upper, v.i, [&](const Subspace& s) {
    z.push_back(s);
    rn_rec(q, p, k + 1, z, fn);
    z.pop_back();
  });
}

void bn_rec(const Quiver& q, int p, int k, std::vector<Subspace>& u,
            const std::function<void(const BnPoint&)>& fn) {
  if (k > q.vertex_count()) {
    fn(BnPoint{u});
    return;
  }
  const QuiverVertex v = q.beta(k);
  const Subspace lower = bn_value(q, u, vertex_minus(v), p);
  std::vector<int> ambient_coords;
  for (int c = 1; c <= q.n() + v.i; ++c) ambient_coords.push_back(c);
  const Subspace upper = intersect(bn_value(q, u, vertex_plus(v), p),
                                   Subspace::coordinate(p, 2 * q.n(), ambient_coords));
  for_each_between(lower, upper, v.column(), [&](const Subspace& s) {
    u.push_back(s);
    bn_rec(q, p, k + 1, u, fn);
    u.pop_back();
  });
}

}  // namespace

void for_each_rn_point(int n, int p, const std::function<void(const RnPoint&)>& fn) {
  check_quiver_bounds(n, p);
  const Quiver q(n);
  std::vector<Subspace> z;
  z.reserve(static_cast<std::size_t>(q.vertex_count()));
  rn_rec(q, p, 1, z, fn);
}

std::vector<RnPoint> enumerate_rn(int n, int p) {
  std::vector<RnPoint> out;
  for_each_rn_point(n, p, [&](const RnPoint& pt) { out.push_back(pt); });
  return out;
}

void for_each_bn_point(int n, int p, const std::function<void(const BnPoint&)>& fn) {
  check_quiver_bounds(n, p);
  const Quiver q(n);
  std::vector<Subspace> u;
  u.reserve(static_cast<std::size_t>(q.vertex_count()));
  bn_rec(q, p, 1, u, fn);
}

std::vector<BnPoint> enumerate_bn(int n, int p) {
  std::vector<BnPoint> out;
  for_each_bn_point(n, p, [&](const BnPoint& pt) { out.push_back(pt); });
  return out;
}

bool rn_tower_check(int n, int p) {
  check_quiver_bounds(n, p);
  const Quiver q(n);
  bool ok = true;

  // Count the children of every valid prefix directly.
  std::function<void(int, std::vector<Subspace>&)> rec = [&](int k, std::vector<Subspace>& z) {
    if (!ok || k > q.vertex_count()) return;
    const QuiverVertex v = q.beta(k);
    const Subspace lower = rn_value(q, z, vertex_minus(v), p);
    const Subspace succ = rn_value(q, z, vertex_plus(v), p);
    const Subspace upper = intersect(quiver_coordinate_space(v, q.n(), p),
                                     projection_map(v.j, q.n(), p).preimage(succ));
    int children = 0;
    for_each_between(lower, upper, v.i, [&](const Subspace& s) {
      ++children;
      z.push_back(s);
      rec(k + 1, z);
      z.pop_back();
    });
    if (children != p + 1) ok = false;
  };
  std::vector<Subspace> z;
  rec(1, z);
  return ok;
}

bool validate_bn(const Quiver& q, const BnPoint& pt, int p) {
  const int n = q.n();
  if (static_cast<int>(pt.u.size()) != q.vertex_count()) return false;
  for (int k = 1; k <= q.vertex_count(); ++k) {
    const QuiverVertex v = q.beta(k);
    const Subspace& u = pt.u[static_cast<std::size_t>(k - 1)];
    if (u.ambient() != 2 * n || u.dim() != v.column()) return false;
    std::vector<int> coords;
    for (int c = 1; c <= n + v.i; ++c) coords.push_back(c);
    if (!Subspace::coordinate(p, 2 * n, coords).contains(u)) return false;
    if (!u.contains(bn_value(q, pt.u, vertex_minus(v), p))) return false;
    if (!bn_value(q, pt.u, vertex_plus(v), p).contains(u)) return false;
  }
  return true;
}

BnPoint zeta_quiver(const Quiver& q, const RnPoint& pt, int p) {
  const int n = q.n();
  BnPoint out;
  out.u.reserve(pt.z.size());
  for (int k = 1; k <= q.vertex_count(); ++k) {
    const QuiverVertex v = q.beta(k);
    out.u.push_back(pi_map(n, v.j, p)
                        .preimage(pt.z[static_cast<std::size_t>(k - 1)])
                        .embedded(2 * n));
  }
  return out;
}

DegFlagPoint pn_project(const Quiver& q, const RnPoint& pt) {
  DegFlagPoint out;
  out.spaces.reserve(static_cast<std::size_t>(q.n()));
  for (int k = 1; k <= q.n(); ++k)
    out.spaces.push_back(pt.z[static_cast<std::size_t>(q.index_of({k, k}) - 1)]);
  return out;
}

SchubertFlagPoint rho_of_psi(const Quiver& q, const BnPoint& pt) {
  SchubertFlagPoint out;
  out.spaces.reserve(static_cast<std::size_t>(q.n()));
  for (int k = 1; k <= q.n(); ++k) {
    const int s = q.lookup(q.vertex_count(), 2 * k - 1);
    if (s < 1) throw std::logic_error("diagonal lookup landed on the rim");
    out.spaces.push_back(pt.u[static_cast<std::size_t>(s - 1)]);
  }
  return out;
}

std::vector<std::vector<Subspace>> psi_flags(const Quiver& q, const BnPoint& pt, int p) {
  const int n = q.n();
  std::vector<std::vector<Subspace>> flags;
  flags.reserve(static_cast<std::size_t>(q.vertex_count() + 1));
  for (int k = 0; k <= q.vertex_count(); ++k) {
    std::vector<Subspace> flag;
    flag.reserve(static_cast<std::size_t>(2 * n - 1));
    for (int t = 1; t <= 2 * n - 1; ++t)
      flag.push_back(bn_value(q, pt.u, q.beta(q.lookup(k, t)), p));
    flags.push_back(std::move(flag));
  }
  return flags;
}

bool psi_relative_position_check(const Quiver& q, const BnPoint& pt, int p) {
  const int n = q.n();
  const auto flags = psi_flags(q, pt, p);
  for (const auto& flag : flags) {
    for (int t = 1; t <= 2 * n - 1; ++t) {
      if (flag[static_cast<std::size_t>(t - 1)].dim() != t) return false;
      if (t > 1 && !flag[static_cast<std::size_t>(t - 1)].contains(flag[static_cast<std::size_t>(t - 2)]))
        return false;
    }
  }
  // Flag 0 is the standard flag.
  for (int t = 1; t <= 2 * n - 1; ++t) {
    std::vector<int> coords;
    for (int c = 1; c <= t; ++c) coords.push_back(c);
    if (!(flags[0][static_cast<std::size_t>(t - 1)] ==
          Subspace::coordinate(p, 2 * n, coords)))
      return false;
  }
  const std::vector<int> word = q.reduced_word();
  for (int k = 0; k + 1 <= q.vertex_count(); ++k) {
    const int ell = word[static_cast<std::size_t>(k)];
    for (int t = 1; t <= 2 * n - 1; ++t) {
      if (t == ell) continue;
      if (!(flags[static_cast<std::size_t>(k + 1)][static_cast<std::size_t>(t - 1)] ==
            flags[static_cast<std::size_t>(k)][static_cast<std::size_t>(t - 1)]))
        return false;
    }
  }
  return true;
}

}  // namespace degflag
