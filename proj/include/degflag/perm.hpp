#pragma once

#include <vector>

#include "degflag/common.hpp"

namespace degflag {

// A permutation of {1,...,m} stored in one-line notation.  Values are 1-based
// everywhere, both in the API and in the stored vector, so the stored vector
// is exactly the external one-line notation.
class Permutation {
public:
  // one_line[i] is the image of i+1; must be a bijection of {1,...,m}.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int m);
  // The simple transposition s_k = (k, k+1) in Sym_m, 1 <= k <= m-1.
  static Permutation simple_transposition(int m, int k);

  int size() const { return static_cast<int>(w_.size()); }
  // Image of r, 1 <= r <= size().
  int operator()(int r) const { return w_[static_cast<std::size_t>(r - 1)]; }
  const std::vector<int>& one_line() const { return w_; }

  // Number of inversion pairs i < j with w(i) > w(j).
  int length() const;
  bool is_identity() const;
  // True when w(k) > w(k+1), for 1 <= k <= size()-1.
  bool descent_at(int k) const;

  bool operator==(const Permutation& other) const { return w_ == other.w_; }
  bool operator<(const Permutation& other) const { return w_ < other.w_; }

private:
  std::vector<int> w_;
};

// (u * v)(i) = u(v(i)); the right factor acts first.  This is the convention
// under which the word s_n (s_{n-1} s_{n+1}) ... multiplies out to sigma_n.
Permutation compose(const Permutation& u, const Permutation& v);
Permutation inverse(const Permutation& u);

// The involution tau -> iota(tau) with iota(tau)(r) = 2n+1 - tau(2n+1-r).
// Requires even size.
Permutation iota_involution(const Permutation& tau);

// Product s_{w1} s_{w2} ... s_{wk} of simple transpositions in Sym_m, applied
// with the composition convention above.  Second component is true when the
// word is reduced, i.e. its length equals the length of the product.
std::pair<Permutation, bool> word_to_perm(const std::vector<int>& word, int m);

// A strictly increasing dimension vector 1 <= d_1 < ... < d_s <= n.  Encodes
// the parabolic data: descent positions {2d_i - 1}, the complementary ascent
// set K inside [1, 2n-1], and the generator pairs J = {(k, k+1) | k in K}.
class DimensionVector {
public:
  DimensionVector(int n, std::vector<int> dims);
  static DimensionVector complete(int n);

  int n() const { return n_; }
  const std::vector<int>& dims() const { return d_; }
  int count() const { return static_cast<int>(d_.size()); }
  bool is_complete() const;

  // Positions 2d_i - 1 where a one-line descent is permitted.
  std::vector<int> descent_positions() const;
  // K: positions k in [1, 2n-1] where minimal representatives must ascend.
  std::vector<int> ascent_positions() const;
  // J: the adjacent transpositions (k, k+1) for k in K.
  std::vector<std::pair<int, int>> generators() const;
  // Lengths of the maximal ascending runs [1..2d_1-1], [2d_1..2d_2-1], ...,
  // [2d_s..2n]; they sum to 2n.
  std::vector<int> run_lengths() const;

  // True when {d_i} is preserved by d -> n+1-d (the type C condition, with
  // n = 2m-1 this is d -> 2m-d).
  bool type_c_symmetric() const;

  bool operator==(const DimensionVector& other) const {
    return n_ == other.n_ && d_ == other.d_;
  }

private:
  int n_;
  std::vector<int> d_;
};

// sigma_n in Sym_{2n}: sigma_n(2k) = k, sigma_n(2k+1) = n+1+k.
Permutation sigma_n(int n);

// The minimal-length representative of the coset sigma_n W_J, computed from
// the closed two-case formula with the conventions d_0 = 0, d_{s+1} = n+1.
Permutation sigma_d(const DimensionVector& dv);

// True iff tau ascends at every position of K(dv), i.e. tau is the minimal
// length representative of its coset tau W_J.
bool is_minimal_rep(const Permutation& tau, const DimensionVector& dv);

}  // namespace degflag
