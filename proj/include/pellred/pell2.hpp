#pragma once

#include <optional>
#include <utility>

#include "pellred/poly.hpp"
#include "pellred/redei.hpp"

namespace pellred {

/// P^2 - D Q^2 = 1 with D = f^2 + d.
struct PellProblem {
  IntPoly f;
  long d = 0;
  IntPoly D;

  /// Throws ZeroD when d == 0.
  static PellProblem make(IntPoly f, long d);
};

struct PellSolution {
  RatPoly P;
  RatPoly Q;
  unsigned long n = 0;
  bool integral = false;
  /// The scalar divided out of (N_n, D_n), i.e. (-d)^(n/2).
  Rational normalizer{1};
};

enum class IntegralityTag { AllN, EvenN, None };

std::string_view tag_name(IntegralityTag tag);

struct IntegralityClass {
  IntegralityTag tag;
  long d;

  /// Whether solve(f, d, n) is predicted to land in Z[x]. n = 0 is the
  /// trivial solution (1, 0) and is integral for every d.
  bool predicts_integral(unsigned long n) const;
};

/// d == -1: every n. d in {1, 2, -2}: even n. Otherwise none.
/// Throws ZeroD.
IntegralityClass classify(long d);

/// (-d)^(n/2) when rational. Throws OddIndexUndefined otherwise.
Rational pell_normalizer(long d, unsigned long n);

/// (N_n, D_n) of alpha = f^2 + d, z = f, divided by (-d)^(n/2).
/// Odd n requires -d to be a perfect square (d = -1, -4, ...).
PellSolution solve(const PellProblem& problem, unsigned long n);

bool verify(const RatPoly& P, const RatPoly& Q, const IntPoly& D);

/// One descent step: from a pair of norm (-d)^n to a pair of norm
/// (-d)^(n-1) with strictly smaller degrees,
///   P' = (-f P + (f^2 + d) Q) / d,   Q' = (P - f Q) / d.
/// Requires deg f = m >= 1, deg P = n m, deg Q = (n - 1) m and positive
/// leading coefficients on f, P and Q. Throws PreconditionViolated.
std::pair<RatPoly, RatPoly> descend(const RatPoly& P, const RatPoly& Q, const IntPoly& f,
                                    long d, unsigned long n);

enum class DescentRoute {
  Auto,
  /// Rescale to norm (-d)^n and descend one step at a time.
  Rescale,
  /// Stay at norm 1 and descend two steps at a time, multiplying by -d.
  EvenStep,
};

/// Returns n when (P, Q) is, up to signs, the normalized Redei pair of index
/// n for D = f^2 + d, by descending to (1, 0). Absent when the chain leaves
/// Z[x] or the degrees do not fit. Throws NotASolution if P^2 - D Q^2 != 1.
std::optional<unsigned long> identify_solution(const IntPoly& P, const IntPoly& Q,
                                               const IntPoly& f, long d,
                                               DescentRoute route = DescentRoute::Auto);

/// When f + 1 = g^2 in Z[x], (N_n, D_n) for alpha = f, z = g solve
/// P^2 - f Q^2 = 1 in Z[x]. Absent otherwise.
std::optional<PellSolution> solve_square_shift(const IntPoly& f, unsigned long n);

/// Nathanson's explicit recurrences for D = x^2 + d, d in {1, -1, 2, -2}.
/// Throws UnsupportedD.
std::pair<RatPoly, RatPoly> nathanson(long d, unsigned long n);

}  // namespace pellred
