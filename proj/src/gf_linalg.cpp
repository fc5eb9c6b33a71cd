#include "degflag/gf_linalg.hpp"

#include <algorithm>
#include <array>

namespace degflag {

bool is_supported_prime(int p) {
  return p == 2 || p == 3 || p == 5 || p == 7 || p == 11 || p == 13;
}

void require_supported_prime(int p) {
  if (!is_supported_prime(p))
    throw std::invalid_argument("field characteristic must be a prime in {2,3,5,7,11,13}");
}

int fp_inv(int p, int a) {
  a = ((a % p) + p) % p;
  if (a == 0) throw std::invalid_argument("zero is not invertible");
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  throw std::logic_error("no inverse found; p not prime?");
}

GFMatrix::GFMatrix(int p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols),
      a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
  require_supported_prime(p);
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
}

GFMatrix GFMatrix::identity(int p, int m) {
  GFMatrix out(p, m, m);
  for (int i = 0; i < m; ++i) out.set(i, i, 1);
  return out;
}

GFMatrix GFMatrix::times(const GFMatrix& rhs) const {
  if (cols_ != rhs.rows_ || p_ != rhs.p_)
    throw std::invalid_argument("matrix product shape or field mismatch");
  GFMatrix out(p_, rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const int aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        const int v = (out.at(i, j) + aik * rhs.at(k, j)) % p_;
        out.set(i, j, v);
      }
    }
  return out;
}

GFMatrix GFMatrix::transposed() const {
  GFMatrix out(p_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  return out;
}

std::vector<std::uint8_t> GFMatrix::row(int r) const {
  std::vector<std::uint8_t> out(static_cast<std::size_t>(cols_));
  for (int c = 0; c < cols_; ++c) out[static_cast<std::size_t>(c)] = at(r, c);
  return out;
}

std::vector<int> rref_in_place(GFMatrix& m) {
  const int p = m.p();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pivot_row = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c) != 0) {
        pivot_row = i;
        break;
      }
    if (pivot_row < 0) continue;
    if (pivot_row != r)
      for (int j = 0; j < m.cols(); ++j) {
        const int tmp = m.at(r, j);
        m.set(r, j, m.at(pivot_row, j));
        m.set(pivot_row, j, tmp);
      }
    const int inv = fp_inv(p, m.at(r, c));
    for (int j = 0; j < m.cols(); ++j) m.set(r, j, m.at(r, j) * inv % p);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const int f = m.at(i, c);
      if (f == 0) continue;
      for (int j = 0; j < m.cols(); ++j)
        m.set(i, j, (m.at(i, j) + (p - f) * m.at(r, j)) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

GFMatrix kernel_basis(const GFMatrix& m) {
  GFMatrix red = m;
  const std::vector<int> pivots = rref_in_place(red);
  const int p = m.p();
  const int dom = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(dom), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  GFMatrix out(p, dom - static_cast<int>(pivots.size()), dom);
  int out_row = 0;
  for (int f = 0; f < dom; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    out.set(out_row, f, 1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      out.set(out_row, pivots[r], (p - red.at(static_cast<int>(r), f)) % p);
    ++out_row;
  }
  rref_in_place(out);  // canonicalize
  return out;
}

Subspace Subspace::row_space(const GFMatrix& rows) {
  GFMatrix red = rows;
  const std::vector<int> pivots = rref_in_place(red);
  GFMatrix basis(rows.p(), static_cast<int>(pivots.size()), rows.cols());
  for (int r = 0; r < basis.rows(); ++r)
    for (int c = 0; c < rows.cols(); ++c) basis.set(r, c, red.at(r, c));
  return Subspace(std::move(basis), pivots);
}

Subspace Subspace::zero(int p, int ambient) {
  return Subspace(GFMatrix(p, 0, ambient), {});
}

Subspace Subspace::full(int p, int ambient) {
  std::vector<int> pivots(static_cast<std::size_t>(ambient));
  for (int i = 0; i < ambient; ++i) pivots[static_cast<std::size_t>(i)] = i;
  return Subspace(GFMatrix::identity(p, ambient), std::move(pivots));
}

Subspace Subspace::coordinate(int p, int ambient, const std::vector<int>& coords) {
  GFMatrix m(p, static_cast<int>(coords.size()), ambient);
  int r = 0;
  for (int c : coords) {
    if (c < 1 || c > ambient) throw std::invalid_argument("coordinate index out of range");
    m.set(r++, c - 1, 1);
  }
  return row_space(m);
}

namespace {

// Reduces v against a reduced-row-echelon basis; v is modified in place.
void reduce_against(std::vector<std::uint8_t>& v, const GFMatrix& basis,
                    const std::vector<int>& pivots) {
  const int p = basis.p();
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const int c = pivots[r];
    const int f = v[static_cast<std::size_t>(c)];
    if (f == 0) continue;
    for (int j = 0; j < basis.cols(); ++j)
      v[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(
          (v[static_cast<std::size_t>(j)] + (p - f) * basis.at(static_cast<int>(r), j)) % p);
  }
}

bool is_zero(const std::vector<std::uint8_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint8_t x) { return x == 0; });
}

}  // namespace

bool Subspace::contains_vector(const std::vector<std::uint8_t>& v) const {
  if (static_cast<int>(v.size()) != ambient())
    throw std::invalid_argument("vector length does not match ambient dimension");
  std::vector<std::uint8_t> w = v;
  reduce_against(w, basis_, pivots_);
  return is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient() != other.ambient() || p() != other.p())
    throw std::invalid_argument("subspace ambient mismatch");
  for (int r = 0; r < other.dim(); ++r)
    if (!contains_vector(other.basis_.row(r))) return false;
  return true;
}

Subspace Subspace::embedded(int bigger_ambient) const {
  if (bigger_ambient < ambient())
    throw std::invalid_argument("cannot embed into a smaller ambient space");
  GFMatrix m(p(), dim(), bigger_ambient);
  for (int r = 0; r < dim(); ++r)
    for (int c = 0; c < ambient(); ++c) m.set(r, c, basis_.at(r, c));
  return Subspace(std::move(m), pivots_);
}

bool Subspace::operator<(const Subspace& other) const {
  if (ambient() != other.ambient()) return ambient() < other.ambient();
  if (dim() != other.dim()) return dim() < other.dim();
  if (pivots_ != other.pivots_) return pivots_ < other.pivots_;
  for (int r = 0; r < dim(); ++r)
    for (int c = 0; c < ambient(); ++c)
      if (basis_.at(r, c) != other.basis_.at(r, c))
        return basis_.at(r, c) < other.basis_.at(r, c);
  return false;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient() || a.p() != b.p())
    throw std::invalid_argument("subspace sum requires matching ambient space");
  GFMatrix stacked(a.p(), a.dim() + b.dim(), a.ambient());
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.ambient(); ++c) stacked.set(r, c, a.basis().at(r, c));
  for (int r = 0; r < b.dim(); ++r)
    for (int c = 0; c < a.ambient(); ++c) stacked.set(a.dim() + r, c, b.basis().at(r, c));
  return Subspace::row_space(stacked);
}

Subspace annihilator(const Subspace& u) {
  return Subspace::row_space(kernel_basis(u.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  return annihilator(sum(annihilator(a), annihilator(b)));
}

std::vector<int> flag_profile(const Subspace& u) {
  const int p = u.p();
  const int m = u.ambient();
  // Echelon by rightmost pivot: distinct trailing coordinates per row.
  std::vector<std::vector<std::uint8_t>> by_rpivot(static_cast<std::size_t>(m));
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  for (int r = 0; r < u.dim(); ++r) {
    std::vector<std::uint8_t> cur = u.basis().row(r);
    while (true) {
      int c = m - 1;
      while (c >= 0 && cur[static_cast<std::size_t>(c)] == 0) --c;
      if (c < 0) throw std::logic_error("dependent row in canonical basis");
      if (!used[static_cast<std::size_t>(c)]) {
        used[static_cast<std::size_t>(c)] = true;
        by_rpivot[static_cast<std::size_t>(c)] = cur;
        break;
      }
      const int f = cur[static_cast<std::size_t>(c)] *
                    fp_inv(p, by_rpivot[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)]) % p;
      for (int j = 0; j < m; ++j)
        cur[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(
            (cur[static_cast<std::size_t>(j)] +
             (p - f) * by_rpivot[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)]) % p);
    }
  }
  std::vector<int> cumulative(static_cast<std::size_t>(m), 0);
  int acc = 0;
  for (int k = 0; k < m; ++k) {
    if (used[static_cast<std::size_t>(k)]) ++acc;
    cumulative[static_cast<std::size_t>(k)] = acc;
  }
  return cumulative;
}

std::vector<std::uint8_t> LinearMap::apply(const std::vector<std::uint8_t>& x) const {
  if (static_cast<int>(x.size()) != domain_dim())
    throw std::invalid_argument("vector length does not match map domain");
  std::vector<std::uint8_t> y(static_cast<std::size_t>(codomain_dim()), 0);
  for (int i = 0; i < codomain_dim(); ++i) {
    int acc = 0;
    for (int j = 0; j < domain_dim(); ++j)
      acc = (acc + m_.at(i, j) * x[static_cast<std::size_t>(j)]) % p();
    y[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(acc);
  }
  return y;
}

Subspace LinearMap::image(const Subspace& u) const {
  if (u.ambient() != domain_dim())
    throw std::invalid_argument("subspace does not live in the map domain");
  return Subspace::row_space(u.basis().times(m_.transposed()));
}

Subspace LinearMap::preimage(const Subspace& u) const {
  if (u.ambient() != codomain_dim())
    throw std::invalid_argument("subspace does not live in the map codomain");
  const Subspace ann = annihilator(u);
  if (ann.dim() == 0) return Subspace::full(p(), domain_dim());
  return Subspace::row_space(kernel_basis(ann.basis().times(m_)));
}

Subspace LinearMap::kernel() const {
  return Subspace::row_space(kernel_basis(m_));
}

LinearMap LinearMap::after(const LinearMap& inner) const {
  return LinearMap(m_.times(inner.matrix()));
}

BilinearForm BilinearForm::symplectic_E(int n, int p) {
  GFMatrix e(p, 2 * n, 2 * n);
  for (int k = 1; k <= n; ++k) {
    e.set(k - 1, 2 * n - k, 1);          // J block: b(e_k, e_{2n+1-k}) = 1
    e.set(2 * n - k, k - 1, p - 1);      // -J block
  }
  return BilinearForm(std::move(e));
}

int BilinearForm::eval(const std::vector<std::uint8_t>& v,
                       const std::vector<std::uint8_t>& w) const {
  if (static_cast<int>(v.size()) != dim() || static_cast<int>(w.size()) != dim())
    throw std::invalid_argument("form argument length mismatch");
  int acc = 0;
  for (int i = 0; i < dim(); ++i) {
    if (v[static_cast<std::size_t>(i)] == 0) continue;
    int rowacc = 0;
    for (int j = 0; j < dim(); ++j)
      rowacc = (rowacc + e_.at(i, j) * w[static_cast<std::size_t>(j)]) % p();
    acc = (acc + v[static_cast<std::size_t>(i)] * rowacc) % p();
  }
  return acc;
}

bool BilinearForm::nondegenerate() const {
  GFMatrix copy = e_;
  return static_cast<int>(rref_in_place(copy).size()) == dim();
}

bool BilinearForm::skew_symmetric() const {
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if ((e_.at(i, j) + e_.at(j, i)) % p() != 0) return false;
  return true;
}

bool BilinearForm::alternating() const {
  if (!skew_symmetric()) return false;
  for (int i = 0; i < dim(); ++i)
    if (e_.at(i, i) != 0) return false;
  return true;
}

Subspace BilinearForm::perp(const Subspace& u) const {
  if (u.ambient() != dim())
    throw std::invalid_argument("subspace does not live in the form space");
  if (!nondegenerate()) throw std::invalid_argument("perp requires a nondegenerate form");
  if (u.dim() == 0) return Subspace::full(p(), dim());
  return Subspace::row_space(kernel_basis(u.basis().times(e_)));
}

TorusElement::TorusElement(int p, std::vector<int> entries) : p_(p) {
  require_supported_prime(p);
  scale_.reserve(entries.size());
  for (int e : entries) {
    const int r = ((e % p) + p) % p;
    if (r == 0) throw std::invalid_argument("torus entries must be invertible");
    scale_.push_back(static_cast<std::uint8_t>(r));
  }
}

Subspace TorusElement::act(const Subspace& u) const {
  if (u.ambient() != dim())
    throw std::invalid_argument("torus element dimension mismatch");
  GFMatrix m = u.basis();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      m.set(r, c, m.at(r, c) * scale_[static_cast<std::size_t>(c)] % p_);
  return Subspace::row_space(m);
}

TorusElement TorusElement::times(const TorusElement& other) const {
  if (dim() != other.dim() || p_ != other.p_)
    throw std::invalid_argument("torus element mismatch");
  std::vector<int> entries(static_cast<std::size_t>(dim()));
  for (int k = 1; k <= dim(); ++k)
    entries[static_cast<std::size_t>(k - 1)] = entry(k) * other.entry(k) % p_;
  return TorusElement(p_, std::move(entries));
}

void for_each_combination(int m, int k,
                          const std::function<void(const std::vector<int>&)>& fn) {
  if (k < 0 || k > m) return;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    fn(pick);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

namespace {

void check_grassmann_bounds(int k, int m, int p) {
  require_supported_prime(p);
  if (k < 0 || k > m || m < 0)
    throw std::invalid_argument("grassmannian requires 0 <= k <= m");
  const int max_m = (p == 2) ? 8 : (p == 3) ? 6 : 4;
  if (m > max_m)
    throw bound_error("grassmannian enumeration capped at m <= " + std::to_string(max_m) +
                      " for p = " + std::to_string(p));
}

}  // namespace

void for_each_subspace(int k, int m, int p,
                       const std::function<void(const Subspace&)>& fn) {
  check_grassmann_bounds(k, m, p);
  for_each_combination(m, k, [&](const std::vector<int>& pivots) {
    std::vector<bool> is_pivot(static_cast<std::size_t>(m), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    // Free slots: to the right of the row pivot, in non-pivot columns.
    std::vector<std::pair<int, int>> free_slots;
    for (int r = 0; r < k; ++r)
      for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < m; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free_slots.emplace_back(r, c);

    GFMatrix mat(p, k, m);
    for (int r = 0; r < k; ++r) mat.set(r, pivots[static_cast<std::size_t>(r)], 1);
    std::vector<int> digits(free_slots.size(), 0);
    while (true) {
      for (std::size_t s = 0; s < free_slots.size(); ++s)
        mat.set(free_slots[s].first, free_slots[s].second, digits[s]);
      fn(Subspace(mat, pivots));
      // Advance the odometer; the first slot is most significant so the
      // stream is lexicographic in row-major entry order.
      std::size_t s = free_slots.size();
      while (s > 0) {
        --s;
        if (++digits[s] < p) break;
        digits[s] = 0;
        if (s == 0) return;  // this pivot pattern exhausted
      }
      if (free_slots.empty()) return;
    }
  });
}

std::vector<Subspace> grassmannian(int k, int m, int p) {
  std::vector<Subspace> out;
  for_each_subspace(k, m, p, [&](const Subspace& s) { out.push_back(s); });
  return out;
}

void for_each_between(const Subspace& lower, const Subspace& upper, int k,
                      const std::function<void(const Subspace&)>& fn) {
  if (lower.ambient() != upper.ambient() || lower.p() != upper.p())
    throw std::invalid_argument("sandwich requires matching ambient space");
  if (k < lower.dim() || k > upper.dim()) return;
  if (!upper.contains(lower)) return;

  const int p = lower.p();
  const int m = lower.ambient();
  // Complement of lower inside upper: reduce the rows of upper against lower
  // plus the complement rows collected so far.
  GFMatrix acc(p, upper.dim(), m);
  for (int r = 0; r < lower.dim(); ++r)
    for (int c = 0; c < m; ++c) acc.set(r, c, lower.basis().at(r, c));
  int acc_rows = lower.dim();
  std::vector<std::vector<std::uint8_t>> complement;
  for (int r = 0; r < upper.dim(); ++r) {
    GFMatrix probe(p, acc_rows + 1, m);
    for (int i = 0; i < acc_rows; ++i)
      for (int c = 0; c < m; ++c) probe.set(i, c, acc.at(i, c));
    for (int c = 0; c < m; ++c) probe.set(acc_rows, c, upper.basis().at(r, c));
    if (static_cast<int>(rref_in_place(probe).size()) == acc_rows + 1) {
      complement.push_back(upper.basis().row(r));
      acc = probe;
      ++acc_rows;
    }
  }
  const int c_dim = static_cast<int>(complement.size());

  GFMatrix cmat(p, c_dim, m);
  for (int r = 0; r < c_dim; ++r)
    for (int c = 0; c < m; ++c) cmat.set(r, c, complement[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);

  for_each_subspace(k - lower.dim(), c_dim, p, [&](const Subspace& coeff) {
    const GFMatrix lifted = coeff.basis().times(cmat);
    GFMatrix stacked(p, lower.dim() + lifted.rows(), m);
    for (int r = 0; r < lower.dim(); ++r)
      for (int c = 0; c < m; ++c) stacked.set(r, c, lower.basis().at(r, c));
    for (int r = 0; r < lifted.rows(); ++r)
      for (int c = 0; c < m; ++c) stacked.set(lower.dim() + r, c, lifted.at(r, c));
    fn(Subspace::row_space(stacked));
  });
}

std::vector<Subspace> subspaces_between(const Subspace& lower,
                                        const Subspace& upper, int k) {
  std::vector<Subspace> out;
  for_each_between(lower, upper, k, [&](const Subspace& s) { out.push_back(s); });
  return out;
}

}  // namespace degflag
