#include "pellred/pell2.hpp"

namespace pellred {

namespace {

void require_nonzero(long d) {
  if (d == 0) throw Error(ErrorKind::ZeroD, "d must be nonzero");
}

template <class T>
Poly<T> with_positive_lead(const Poly<T>& p) {
  return !p.is_zero() && sgn(p.leading()) < 0 ? -p : p;
}

template <class T>
bool lead_positive(const Poly<T>& p) {
  return !p.is_zero() && sgn(p.leading()) > 0;
}

// The descent map without any precondition checks.
std::pair<RatPoly, RatPoly> descent_map(const RatPoly& P, const RatPoly& Q, const RatPoly& f,
                                        const RatPoly& alpha, const Rational& inv_d) {
  return {(alpha * Q - f * P).scaled(inv_d), (P - f * Q).scaled(inv_d)};
}

// L * p as an integer polynomial, where L is a common denominator.
IntPoly times_denominator(const RatPoly& p, const Integer& L) {
  return div_exact_int(p.scaled(Rational(L)));
}

bool is_unit_pair(const RatPoly& P, const RatPoly& Q) {
  return Q.is_zero() && (P == RatPoly(1) || P == RatPoly(-1));
}

}  // namespace

PellProblem PellProblem::make(IntPoly f, long d) {
  require_nonzero(d);
  IntPoly D = f * f + IntPoly(d);
  return {std::move(f), d, std::move(D)};
}

std::string_view tag_name(IntegralityTag tag) {
  switch (tag) {
    case IntegralityTag::AllN: return "ALL_N";
    case IntegralityTag::EvenN: return "EVEN_N";
    case IntegralityTag::None: return "NONE";
  }
  return "NONE";
}

bool IntegralityClass::predicts_integral(unsigned long n) const {
  if (n == 0) return true;
  switch (tag) {
    case IntegralityTag::AllN: return true;
    case IntegralityTag::EvenN: return n % 2 == 0;
    case IntegralityTag::None: return false;
  }
  return false;
}

IntegralityClass classify(long d) {
  require_nonzero(d);
  if (d == -1) return {IntegralityTag::AllN, d};
  if (d == 1 || d == 2 || d == -2) return {IntegralityTag::EvenN, d};
  return {IntegralityTag::None, d};
}

Rational pell_normalizer(long d, unsigned long n) {
  require_nonzero(d);
  auto c = rational_power(Integer(-d), n, 2);
  if (!c)
    throw Error(ErrorKind::OddIndexUndefined,
                "(-d)^(n/2) is irrational for d = " + std::to_string(d) +
                    ", n = " + std::to_string(n));
  return *c;
}

PellSolution solve(const PellProblem& problem, unsigned long n) {
  const Rational c = pell_normalizer(problem.d, n);
  const RedeiPair pair = redei_recurrence(problem.D, problem.f, n);
  const Rational inv = 1 / c;
  PellSolution sol{scale(pair.N, inv), scale(pair.D, inv), n, false, c};
  sol.integral = is_integral(sol.P) && is_integral(sol.Q);
  return sol;
}

bool verify(const RatPoly& P, const RatPoly& Q, const IntPoly& D) {
  // Clear denominators: (LP)^2 - D (LQ)^2 == L^2 runs over Z.
  Integer L(1);
  for (const RatPoly* p : {&P, &Q})
    for (const auto& c : p->coeffs()) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den_mpz_t());
  const IntPoly LP = times_denominator(P, L), LQ = times_denominator(Q, L);
  return LP * LP - D * LQ * LQ == IntPoly(L * L);
}

std::pair<RatPoly, RatPoly> descend(const RatPoly& P, const RatPoly& Q, const IntPoly& f,
                                    long d, unsigned long n) {
  require_nonzero(d);
  auto violated = [](const std::string& why) {
    return Error(ErrorKind::PreconditionViolated, "descent: " + why);
  };
  if (n == 0) throw violated("index must be positive");
  if (f.degree() < Degree(1)) throw violated("deg f must be at least 1");
  const std::size_t m = f.degree().value();
  if (P.degree() != Degree(n * m) || Q.degree() != Degree((n - 1) * m))
    throw violated("degrees must be n*deg f and (n-1)*deg f");
  if (!lead_positive(f) || !lead_positive(P) || !lead_positive(Q))
    throw violated("leading coefficients must be positive");

  const IntPoly alpha = f * f + IntPoly(d);
  Integer norm;
  mpz_pow_ui(norm.get_mpz_t(), Integer(-d).get_mpz_t(), n);
  if (P * P - to_rat(alpha) * Q * Q != RatPoly(Rational(norm)))
    throw violated("P^2 - (f^2+d) Q^2 must equal (-d)^" + std::to_string(n));

  return descent_map(P, Q, to_rat(f), to_rat(alpha), Rational(1) / d);
}

namespace {

std::optional<unsigned long> identify_by_rescaling(RatPoly P, RatPoly Q, const IntPoly& f,
                                                   long d, unsigned long n) {
  const Rational c = pell_normalizer(d, n);
  P = with_positive_lead(P.scaled(c));
  Q = with_positive_lead(Q.scaled(c));
  for (unsigned long k = n; k >= 1; --k) {
    try {
      std::tie(P, Q) = descend(P, Q, f, d, k);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::PreconditionViolated) return std::nullopt;
      throw;
    }
    if (!is_integral(P) || !is_integral(Q)) return std::nullopt;
    P = with_positive_lead(P);
    Q = with_positive_lead(Q);
  }
  if (!is_unit_pair(P, Q)) return std::nullopt;
  return n;
}

std::optional<unsigned long> identify_by_even_steps(RatPoly P, RatPoly Q, const IntPoly& f,
                                                    long d, unsigned long n) {
  const RatPoly fr = to_rat(f);
  const RatPoly alpha = to_rat(f * f + IntPoly(d));
  const Rational inv_d = Rational(1) / d;
  const Rational minus_d(-d);
  const std::size_t m = f.degree().value();
  unsigned long k = n;
  while (k >= 2) {
    P = with_positive_lead(P);
    Q = with_positive_lead(Q);
    for (int half = 0; half < 2; ++half) {
      const Degree dp = P.degree(), dq = Q.degree();
      std::tie(P, Q) = descent_map(P, Q, fr, alpha, inv_d);
      if (!(P.degree() < dp && Q.degree() < dq)) return std::nullopt;
      P = with_positive_lead(P);
      Q = with_positive_lead(Q);
    }
    P = P.scaled(minus_d);
    Q = Q.scaled(minus_d);
    k -= 2;
    if (!is_integral(P) || !is_integral(Q)) return std::nullopt;
    if (P.degree() != Degree(k * m)) return std::nullopt;
  }
  if (k != 0 || !is_unit_pair(P, Q)) return std::nullopt;
  return n;
}

}  // namespace

std::optional<unsigned long> identify_solution(const IntPoly& P, const IntPoly& Q,
                                               const IntPoly& f, long d, DescentRoute route) {
  const PellProblem problem = PellProblem::make(f, d);
  const RatPoly pr = to_rat(P), qr = to_rat(Q);
  if (!verify(pr, qr, problem.D))
    throw Error(ErrorKind::NotASolution,
                "(" + to_string(P) + ", " + to_string(Q) + ") does not solve P^2 - (" +
                    to_string(problem.D) + ") Q^2 = 1");
  if (is_unit_pair(pr, qr)) return 0;
  if (f.degree() < Degree(1)) return std::nullopt;

  const std::size_t m = f.degree().value();
  const std::size_t deg_p = P.degree().value();
  if (deg_p % m != 0) return std::nullopt;
  const unsigned long n = deg_p / m;
  if (n == 0 || Q.degree() != Degree((n - 1) * m)) return std::nullopt;

  const IntPoly f_pos = with_positive_lead(f);
  if (route == DescentRoute::Auto)
    route = rational_power(Integer(-d), n, 2) ? DescentRoute::Rescale : DescentRoute::EvenStep;
  if (route == DescentRoute::Rescale) {
    if (!rational_power(Integer(-d), n, 2)) return std::nullopt;
    return identify_by_rescaling(pr, qr, f_pos, d, n);
  }
  return identify_by_even_steps(pr, qr, f_pos, d, n);
}

std::optional<PellSolution> solve_square_shift(const IntPoly& f, unsigned long n) {
  auto g = poly_sqrt(f + IntPoly(1));
  if (!g) return std::nullopt;
  const RedeiPair pair = redei_recurrence(f, *g, n);
  return PellSolution{to_rat(pair.N), to_rat(pair.D), n, true, Rational(1)};
}

std::pair<RatPoly, RatPoly> nathanson(long d, unsigned long n) {
  if (d != 1 && d != -1 && d != 2 && d != -2)
    throw Error(ErrorKind::UnsupportedD,
                "explicit recurrences exist only for d in {1, -1, 2, -2}, got " +
                    std::to_string(d));
  const RatPoly x = RatPoly::x();
  RatPoly a(1), b;
  if (d == -1) {
    const RatPoly x2m1 = x * x - RatPoly(1);
    for (unsigned long k = 0; k < n; ++k) {
      RatPoly a_next = x * a + x2m1 * b;
      RatPoly b_next = a + x * b;
      a = std::move(a_next);
      b = std::move(b_next);
    }
    return {a, b};
  }
  const Rational two_over_d = Rational(2) / d;
  const RatPoly diag = (x * x).scaled(two_over_d) + RatPoly(1);
  const RatPoly upper = (x * (x * x + RatPoly(Rational(d)))).scaled(two_over_d);
  const RatPoly lower = x.scaled(two_over_d);
  for (unsigned long k = 0; k < n; ++k) {
    RatPoly a_next = diag * a + upper * b;
    RatPoly b_next = lower * a + diag * b;
    a = std::move(a_next);
    b = std::move(b_next);
  }
  return {a, b};
}

}  // namespace pellred
