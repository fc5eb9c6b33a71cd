#pragma once

#include <functional>
#include <vector>

#include "degflag/perm.hpp"

namespace degflag {

// The rank matrix r(i,j) = #{l <= i : w(l) <= j} of a permutation, 1-based.
// Dominance of rank matrices is the Ehresmann criterion for Bruhat order.
class RankMatrix {
public:
  explicit RankMatrix(const Permutation& w);

  int size() const { return m_; }
  int at(int i, int j) const {
    return r_[static_cast<std::size_t>((i - 1) * m_ + (j - 1))];
  }
  // True when this >= other entrywise.
  bool dominates(const RankMatrix& other) const;

private:
  int m_;
  std::vector<int> r_;
};

// u <= v in Bruhat order iff the rank matrix of u dominates that of v.
bool bruhat_leq(const Permutation& u, const Permutation& v);

// Coefficient c_m = number of counted elements of length m.  Not assumed
// palindromic: the varieties whose cell counts these polynomials record are
// singular in general.
struct PoincarePolynomial {
  std::vector<long long> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  long long eval(long long q) const;
  long long cardinality() const { return eval(1); }
  bool operator==(const PoincarePolynomial& other) const = default;
};

// Streams all minimal coset representatives for Sym_{2n}/W_J in lexicographic
// one-line order.  Requires 2n <= 12.
void for_each_minimal_rep(const DimensionVector& dv,
                          const std::function<void(const Permutation&)>& fn);
std::vector<Permutation> enumerate_quotient(const DimensionVector& dv);

// Coefficients count minimal representatives tau <= sigma by length.
// sigma itself must be a minimal representative.  threads > 1 splits the
// enumeration by first-run choice; the result is independent of threads.
PoincarePolynomial interval_poincare(const Permutation& sigma,
                                     const DimensionVector& dv,
                                     int threads = 1);

// h_n for n = 1..max_n: the size of the Bruhat interval below sigma_n in the
// complete quotient.  Requires max_n <= 5.
std::vector<long long> genocchi_numbers(int max_n);

// #{tau minimal : tau <= sigma, iota(tau) = tau}.  Requires sigma iota-fixed
// and dv preserved by d -> n+1-d.
long long iota_fixed_count(const Permutation& sigma, const DimensionVector& dv);

}  // namespace degflag
