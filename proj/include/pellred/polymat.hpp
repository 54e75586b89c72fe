#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pellred/poly.hpp"

namespace pellred {

/// Square matrix over Q[x], row-major. dim >= 1.
class PolyMatrix {
 public:
  explicit PolyMatrix(std::size_t dim);
  explicit PolyMatrix(std::vector<std::vector<RatPoly>> rows);

  static PolyMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }

  const RatPoly& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  RatPoly& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }

  std::vector<RatPoly> column(std::size_t col) const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<RatPoly> entries_;
};

/// Throws DimensionMismatch for unequal dimensions.
PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);
inline PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  return mat_mul(a, b);
}

/// a^n by repeated squaring; a^0 is the identity.
PolyMatrix mat_pow(const PolyMatrix& a, unsigned long n);

/// Exact determinant. Cofactor expansion up to dim 3, Bareiss above.
RatPoly det(const PolyMatrix& a);

/// Fraction-free Bareiss elimination with row pivoting. Every division is
/// exact in Q[x].
RatPoly det_bareiss(const PolyMatrix& a);

/// Laplace expansion along the first row. O(dim!), used as an oracle.
RatPoly det_cofactor(const PolyMatrix& a);

/// R-twisted circulant: entry (i, j) = sols[(i - j) mod m], multiplied by R
/// when j > i (0-indexed). Requires m = sols.size() >= 2.
PolyMatrix build_circulant(std::span<const RatPoly> sols, const IntPoly& R);

/// Coefficients of det(t*I - a) in t, ascending, each a polynomial in x.
/// Computed by evaluating at t = 0..dim and interpolating.
std::vector<RatPoly> char_poly(const PolyMatrix& a);

nlohmann::json to_json(const PolyMatrix& a);

}  // namespace pellred
