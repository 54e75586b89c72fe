#pragma once

#include <optional>
#include <vector>

#include "pellred/polymat.hpp"
#include "pellred/poly.hpp"

namespace pellred {

/// Coefficients of (z + alpha^(1/m))^n on the basis 1, alpha^(1/m), ...,
/// alpha^((m-1)/m).
struct GenRedeiVec {
  unsigned long m = 2;
  unsigned long n = 0;
  IntPoly z;
  IntPoly alpha;
  std::vector<IntPoly> A;

  friend bool operator==(const GenRedeiVec&, const GenRedeiVec&) = default;
};

/// m x m matrix with z on the diagonal, 1 on the subdiagonal and alpha in
/// the top-right corner. Multiplication by z + alpha^(1/m) in that basis.
PolyMatrix gen_redei_matrix(const IntPoly& z, const IntPoly& alpha, unsigned long m);

/// First column of gen_redei_matrix(z, alpha, m)^n. Requires m >= 2.
GenRedeiVec gen_redei(const IntPoly& z, const IntPoly& alpha, unsigned long m,
                      unsigned long n);

/// Expands (z + y)^n and reduces y^m to alpha. Independent of the matrix path.
GenRedeiVec gen_redei_oracle(const IntPoly& z, const IntPoly& alpha, unsigned long m,
                             unsigned long n);

/// v -> M v: A'(0) = z A(0) + alpha A(m-1), A'(i) = z A(i) + A(i-1).
GenRedeiVec gen_redei_step(const GenRedeiVec& v);

struct PellMSolution {
  unsigned long m = 2;
  unsigned long n = 0;
  IntPoly R;
  std::vector<RatPoly> sols;
  bool integral = false;
  /// ((-1)^(m-1) r)^(n/m)
  Rational normalizer{1};
};

/// z = f, alpha = R = (-f)^m + r. The circulant of A_n has determinant
/// ((-1)^(m-1) r)^n; each A_n^(i) is divided by its m-th root power.
/// Throws ZeroR, IrrationalNormalizer, PreconditionViolated (m < 2).
PellMSolution solve_m(const IntPoly& f, long r, unsigned long m, unsigned long n);

/// r == -1 (any n), r == 1 and m | n, or |r| == m with m prime and m | n.
/// Throws ZeroR.
bool classify_m(long r, unsigned long m, unsigned long n);

/// det(build_circulant(sols, R)) == 1.
bool verify_m(const PellMSolution& sol);

struct ProbeViolation {
  long r;
  unsigned long n;
  unsigned long component;
  Integer modulus;
};

struct ProbeReport {
  unsigned long m;
  unsigned long n_max;
  std::optional<ProbeViolation> violation;

  bool ok() const { return !violation.has_value(); }
};

/// For r = m and r = -m, checks that m^floor(n/m) divides every coefficient
/// of every A_n^(i), n <= n_max. Throws NotPrime.
ProbeReport divisibility_probe(const IntPoly& f, unsigned long m, unsigned long n_max);

}  // namespace pellred
