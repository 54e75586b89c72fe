#pragma once

#include <utility>

#include "pellred/polymat.hpp"
#include "pellred/poly.hpp"

namespace pellred {

/// (N_n, D_n) with (z + sqrt(alpha))^n = N_n + D_n sqrt(alpha), after z and
/// alpha have been substituted as polynomials in x.
struct RedeiPair {
  unsigned long n = 0;
  IntPoly alpha;
  IntPoly z;
  IntPoly N;
  IntPoly D;

  friend bool operator==(const RedeiPair&, const RedeiPair&) = default;
};

/// [[z, alpha], [1, z]]
PolyMatrix redei_matrix_of(const IntPoly& alpha, const IntPoly& z);

/// Second-order recurrence with characteristic polynomial
/// t^2 - 2z t + (z^2 - alpha). Default production path.
RedeiPair redei_recurrence(const IntPoly& alpha, const IntPoly& z, unsigned long n);

/// First column of [[z, alpha], [1, z]]^n.
RedeiPair redei_matrix(const IntPoly& alpha, const IntPoly& z, unsigned long n);

/// Binomial sums: N_n = sum C(n,2k) alpha^k z^(n-2k),
/// D_n = sum C(n,2k+1) alpha^k z^(n-2k-1).
RedeiPair redei_closed_form(const IntPoly& alpha, const IntPoly& z, unsigned long n);

/// N^2 - alpha D^2 == (z^2 - alpha)^n.
bool norm_identity_holds(const RedeiPair& p);

/// Applies the inverse of [[z, alpha], [1, z]] to (N, D). Throws
/// InexactDivision if z^2 - alpha is zero or does not divide the result.
std::pair<RatPoly, RatPoly> redei_backward_step(const IntPoly& alpha, const IntPoly& z,
                                                const RatPoly& N, const RatPoly& D);

}  // namespace pellred
