#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "degflag/common.hpp"

namespace degflag {

// Supported prime fields.  Point-count polynomials only need confirmation at
// two primes, so nothing larger is provided.
bool is_supported_prime(int p);
void require_supported_prime(int p);

int fp_inv(int p, int a);

// Dense row-major matrix of residues mod p.
class GFMatrix {
public:
  GFMatrix(int p, int rows, int cols);
  static GFMatrix identity(int p, int m);

  int p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::uint8_t at(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
              static_cast<std::size_t>(c)];
  }
  void set(int r, int c, int value) {
    a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
       static_cast<std::size_t>(c)] = static_cast<std::uint8_t>(((value % p_) + p_) % p_);
  }

  GFMatrix times(const GFMatrix& rhs) const;
  GFMatrix transposed() const;
  std::vector<std::uint8_t> row(int r) const;

  bool operator==(const GFMatrix& other) const = default;

private:
  int p_, rows_, cols_;
  std::vector<std::uint8_t> a_;
};

// Reduces m to reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref_in_place(GFMatrix& m);

// Rows span {x : m x = 0}; the result is in reduced row echelon form.
GFMatrix kernel_basis(const GFMatrix& m);

// A subspace of F_p^m in canonical form: the basis is the unique reduced
// row echelon matrix with strictly increasing pivot columns, so equality of
// subspaces is equality of representations.
class Subspace {
public:
  static Subspace row_space(const GFMatrix& rows);
  static Subspace zero(int p, int ambient);
  static Subspace full(int p, int ambient);
  // Span of the standard basis vectors indexed by coords (1-based).
  static Subspace coordinate(int p, int ambient, const std::vector<int>& coords);

  int p() const { return basis_.p(); }
  int ambient() const { return basis_.cols(); }
  int dim() const { return basis_.rows(); }
  const GFMatrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains_vector(const std::vector<std::uint8_t>& v) const;
  // True when other is contained in this subspace.
  bool contains(const Subspace& other) const;

  // Zero-pads each basis row on the right; canonical form is preserved.
  Subspace embedded(int bigger_ambient) const;

  bool operator==(const Subspace& other) const = default;
  bool operator<(const Subspace& other) const;

private:
  friend void for_each_subspace(int, int, int,
                                const std::function<void(const Subspace&)>&);
  Subspace(GFMatrix rref, std::vector<int> pivots)
      : basis_(std::move(rref)), pivots_(std::move(pivots)) {}

  GFMatrix basis_;
  std::vector<int> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
// {x : <x, u> = 0 for all u in U} under the standard dot pairing.
Subspace annihilator(const Subspace& u);

// cumulative[k-1] = dim(U ∩ <e_1..e_k>) for k = 1..ambient, computed from a
// rightmost-pivot echelon form of the basis.
std::vector<int> flag_profile(const Subspace& u);

// A linear map F_p^domain -> F_p^codomain given by its matrix; y = M x.
class LinearMap {
public:
  explicit LinearMap(GFMatrix m) : m_(std::move(m)) {}
  static LinearMap identity(int p, int m) { return LinearMap(GFMatrix::identity(p, m)); }

  int p() const { return m_.p(); }
  int domain_dim() const { return m_.cols(); }
  int codomain_dim() const { return m_.rows(); }
  const GFMatrix& matrix() const { return m_; }

  std::vector<std::uint8_t> apply(const std::vector<std::uint8_t>& x) const;
  Subspace image(const Subspace& u) const;
  Subspace preimage(const Subspace& u) const;
  Subspace kernel() const;
  // (this ∘ inner): inner acts first.
  LinearMap after(const LinearMap& inner) const;

private:
  GFMatrix m_;
};

// Bilinear form b[v, w] = v^T E w on F_p^m.
class BilinearForm {
public:
  explicit BilinearForm(GFMatrix e) : e_(std::move(e)) {
    if (e_.rows() != e_.cols()) throw std::invalid_argument("form matrix must be square");
  }
  // The block matrix [[0, J], [-J, 0]] with J the n x n antidiagonal of ones.
  static BilinearForm symplectic_E(int n, int p);

  int p() const { return e_.p(); }
  int dim() const { return e_.rows(); }
  const GFMatrix& matrix() const { return e_; }

  int eval(const std::vector<std::uint8_t>& v, const std::vector<std::uint8_t>& w) const;
  int eval_basis(int k, int l) const { return e_.at(k - 1, l - 1); }

  bool nondegenerate() const;
  bool skew_symmetric() const;  // E^T = -E
  bool alternating() const;     // b(v, v) = 0; at p = 2 this is the real condition

  // {w : b(u, w) = 0 for all u in U}.  Requires a nondegenerate form.
  Subspace perp(const Subspace& u) const;

private:
  GFMatrix e_;
};

// Diagonal torus element: invertible scalars acting by rescaling coordinates.
class TorusElement {
public:
  TorusElement(int p, std::vector<int> entries);
  int p() const { return p_; }
  int dim() const { return static_cast<int>(scale_.size()); }
  int entry(int k) const { return scale_[static_cast<std::size_t>(k - 1)]; }
  Subspace act(const Subspace& u) const;
  TorusElement times(const TorusElement& other) const;

private:
  int p_;
  std::vector<std::uint8_t> scale_;
};

// Streams every k-dimensional subspace of F_p^m exactly once, ordered
// lexicographically by (pivot column set, free entries read row-major).
// Bounds: m <= 8 at p = 2, m <= 6 at p = 3, m <= 4 otherwise.
void for_each_subspace(int k, int m, int p,
                       const std::function<void(const Subspace&)>& fn);
std::vector<Subspace> grassmannian(int k, int m, int p);

// Streams the k-dimensional subspaces U with lower ⊆ U ⊆ upper, by lifting a
// Grassmannian stream of the quotient upper/lower.  Empty when the sandwich
// is infeasible.
void for_each_between(const Subspace& lower, const Subspace& upper, int k,
                      const std::function<void(const Subspace&)>& fn);
std::vector<Subspace> subspaces_between(const Subspace& lower,
                                        const Subspace& upper, int k);

void for_each_combination(int m, int k,
                          const std::function<void(const std::vector<int>&)>& fn);

}  // namespace degflag
