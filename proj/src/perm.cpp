#include "degflag/perm.hpp"

#include <algorithm>
#include <utility>

namespace degflag {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  const int m = static_cast<int>(w_.size());
  if (m < 1 || m > kMaxDegree)
    throw std::invalid_argument("permutation degree must be in [1, " +
                                std::to_string(kMaxDegree) + "]");
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (int v : w_) {
    if (v < 1 || v > m || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("one-line notation is not a bijection of {1..m}");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> w(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(w));
}

Permutation Permutation::simple_transposition(int m, int k) {
  if (k < 1 || k >= m)
    throw std::invalid_argument("simple transposition index out of range");
  Permutation id = identity(m);
  std::vector<int> w = id.w_;
  std::swap(w[static_cast<std::size_t>(k - 1)], w[static_cast<std::size_t>(k)]);
  return Permutation(std::move(w));
}

int Permutation::length() const {
  const int m = size();
  int inv = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (w_[static_cast<std::size_t>(i)] > w_[static_cast<std::size_t>(j)]) ++inv;
  return inv;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (w_[static_cast<std::size_t>(i)] != i + 1) return false;
  return true;
}

bool Permutation::descent_at(int k) const {
  if (k < 1 || k >= size()) throw std::invalid_argument("descent position out of range");
  return w_[static_cast<std::size_t>(k - 1)] > w_[static_cast<std::size_t>(k)];
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("cannot compose permutations of different degree");
  std::vector<int> w(static_cast<std::size_t>(u.size()));
  for (int i = 1; i <= u.size(); ++i)
    w[static_cast<std::size_t>(i - 1)] = u(v(i));
  return Permutation(std::move(w));
}

Permutation inverse(const Permutation& u) {
  std::vector<int> w(static_cast<std::size_t>(u.size()));
  for (int i = 1; i <= u.size(); ++i)
    w[static_cast<std::size_t>(u(i) - 1)] = i;
  return Permutation(std::move(w));
}

Permutation iota_involution(const Permutation& tau) {
  const int m = tau.size();
  if (m % 2 != 0)
    throw std::invalid_argument("iota is defined on even-degree symmetric groups");
  std::vector<int> w(static_cast<std::size_t>(m));
  for (int r = 1; r <= m; ++r)
    w[static_cast<std::size_t>(r - 1)] = m + 1 - tau(m + 1 - r);
  return Permutation(std::move(w));
}

std::pair<Permutation, bool> word_to_perm(const std::vector<int>& word, int m) {
  std::vector<int> w(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  for (int letter : word) {
    if (letter < 1 || letter >= m)
      throw std::invalid_argument("word letter out of range [1, m-1]");
    // Right multiplication by s_k swaps the entries at positions k, k+1.
    std::swap(w[static_cast<std::size_t>(letter - 1)], w[static_cast<std::size_t>(letter)]);
  }
  Permutation prod(std::move(w));
  const bool reduced = static_cast<int>(word.size()) == prod.length();
  return {std::move(prod), reduced};
}

DimensionVector::DimensionVector(int n, std::vector<int> dims)
    : n_(n), d_(std::move(dims)) {
  if (n < 1 || 2 * n > kMaxDegree)
    throw std::invalid_argument("dimension vector rank out of range");
  if (d_.empty()) throw std::invalid_argument("dimension vector must be nonempty");
  int prev = 0;
  for (int di : d_) {
    if (di <= prev || di > n)
      throw std::invalid_argument("dimension vector must be strictly increasing in [1, n]");
    prev = di;
  }
}

DimensionVector DimensionVector::complete(int n) {
  std::vector<int> d(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = i + 1;
  return DimensionVector(n, std::move(d));
}

bool DimensionVector::is_complete() const { return count() == n_; }

std::vector<int> DimensionVector::descent_positions() const {
  std::vector<int> out;
  out.reserve(d_.size());
  for (int di : d_) out.push_back(2 * di - 1);
  return out;
}

std::vector<int> DimensionVector::ascent_positions() const {
  std::vector<bool> descent(static_cast<std::size_t>(2 * n_), false);
  for (int pos : descent_positions()) descent[static_cast<std::size_t>(pos - 1)] = true;
  std::vector<int> out;
  for (int k = 1; k <= 2 * n_ - 1; ++k)
    if (!descent[static_cast<std::size_t>(k - 1)]) out.push_back(k);
  return out;
}

std::vector<std::pair<int, int>> DimensionVector::generators() const {
  std::vector<std::pair<int, int>> out;
  for (int k : ascent_positions()) out.emplace_back(k, k + 1);
  return out;
}

std::vector<int> DimensionVector::run_lengths() const {
  std::vector<int> out;
  int prev = 0;  // runs split after each position 2d_i - 1
  for (int di : d_) {
    out.push_back(2 * di - 1 - prev);
    prev = 2 * di - 1;
  }
  out.push_back(2 * n_ - prev);
  return out;
}

bool DimensionVector::type_c_symmetric() const {
  std::vector<int> mirrored;
  mirrored.reserve(d_.size());
  for (auto it = d_.rbegin(); it != d_.rend(); ++it) mirrored.push_back(n_ + 1 - *it);
  return mirrored == d_;
}

Permutation sigma_n(int n) {
  if (n < 1 || 2 * n > kMaxDegree)
    throw std::invalid_argument("sigma_n requires 1 <= n <= " + std::to_string(kMaxDegree / 2));
  std::vector<int> w(static_cast<std::size_t>(2 * n));
  for (int k = 1; k <= n; ++k) w[static_cast<std::size_t>(2 * k - 1)] = k;
  for (int k = 0; k <= n - 1; ++k) w[static_cast<std::size_t>(2 * k)] = n + 1 + k;
  return Permutation(std::move(w));
}

Permutation sigma_d(const DimensionVector& dv) {
  const int n = dv.n();
  std::vector<int> d = dv.dims();
  d.insert(d.begin(), 0);
  d.push_back(n + 1);
  std::vector<int> w(static_cast<std::size_t>(2 * n), 0);
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    for (int k = std::max(1, 2 * d[i]); k <= std::min(2 * n, d[i] + d[i + 1] - 1); ++k)
      w[static_cast<std::size_t>(k - 1)] = k - d[i];
    for (int k = std::max(1, d[i] + d[i + 1]); k <= std::min(2 * n, 2 * d[i + 1] - 1); ++k)
      w[static_cast<std::size_t>(k - 1)] = n + 1 + k - d[i + 1];
  }
  return Permutation(std::move(w));
}

bool is_minimal_rep(const Permutation& tau, const DimensionVector& dv) {
  if (tau.size() != 2 * dv.n())
    throw std::invalid_argument("permutation degree does not match dimension vector");
  for (int k : dv.ascent_positions())
    if (tau.descent_at(k)) return false;
  return true;
}

}  // namespace degflag
