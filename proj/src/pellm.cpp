#include "pellred/pellm.hpp"

#include <cstdlib>

namespace pellred {

namespace {

void require_degree(unsigned long m) {
  if (m < 2)
    throw Error(ErrorKind::PreconditionViolated,
                "degree m must be at least 2, got " + std::to_string(m));
}

void require_nonzero_r(long r) {
  if (r == 0) throw Error(ErrorKind::ZeroR, "r must be nonzero");
}

// (-f)^m + r
IntPoly twisted_alpha(const IntPoly& f, long r, unsigned long m) {
  return (-f).pow(m) + IntPoly(r);
}

}  // namespace

PolyMatrix gen_redei_matrix(const IntPoly& z, const IntPoly& alpha, unsigned long m) {
  require_degree(m);
  PolyMatrix M(m);
  const RatPoly zr = to_rat(z);
  for (std::size_t i = 0; i < m; ++i) M(i, i) = zr;
  for (std::size_t i = 1; i < m; ++i) M(i, i - 1) = RatPoly(1);
  M(0, m - 1) = to_rat(alpha);
  return M;
}

GenRedeiVec gen_redei(const IntPoly& z, const IntPoly& alpha, unsigned long m,
                      unsigned long n) {
  const PolyMatrix power = mat_pow(gen_redei_matrix(z, alpha, m), n);
  GenRedeiVec out{m, n, z, alpha, {}};
  for (const RatPoly& entry : power.column(0)) out.A.push_back(div_exact_int(entry));
  return out;
}

GenRedeiVec gen_redei_oracle(const IntPoly& z, const IntPoly& alpha, unsigned long m,
                             unsigned long n) {
  require_degree(m);
  GenRedeiVec out{m, n, z, alpha, std::vector<IntPoly>(m)};
  // C(n,k) z^(n-k) y^k with y^k = alpha^(k / m) y^(k mod m).
  std::vector<IntPoly> z_pow{IntPoly(1)};
  for (unsigned long j = 1; j <= n; ++j) z_pow.push_back(z_pow.back() * z);
  IntPoly alpha_pow(1);
  for (unsigned long k = 0; k <= n; ++k) {
    if (k != 0 && k % m == 0) alpha_pow = alpha_pow * alpha;
    out.A[k % m] += (z_pow[n - k] * alpha_pow).scaled(binomial(n, k));
  }
  return out;
}

GenRedeiVec gen_redei_step(const GenRedeiVec& v) {
  GenRedeiVec next{v.m, v.n + 1, v.z, v.alpha, std::vector<IntPoly>(v.m)};
  next.A[0] = v.z * v.A[0] + v.alpha * v.A[v.m - 1];
  for (std::size_t i = 1; i < v.m; ++i) next.A[i] = v.z * v.A[i] + v.A[i - 1];
  return next;
}

PellMSolution solve_m(const IntPoly& f, long r, unsigned long m, unsigned long n) {
  require_nonzero_r(r);
  require_degree(m);
  const Integer base = m % 2 == 1 ? Integer(r) : Integer(-r);
  auto c = rational_power(base, n, m);
  if (!c)
    throw Error(ErrorKind::IrrationalNormalizer,
                "(" + base.get_str() + ")^(" + std::to_string(n) + "/" + std::to_string(m) +
                    ") is not rational");
  const IntPoly alpha = twisted_alpha(f, r, m);
  const GenRedeiVec vec = gen_redei(f, alpha, m, n);
  PellMSolution sol{m, n, alpha, {}, true, *c};
  const Rational inv = 1 / *c;
  for (const IntPoly& a : vec.A) {
    sol.sols.push_back(scale(a, inv));
    sol.integral = sol.integral && is_integral(sol.sols.back());
  }
  return sol;
}

bool classify_m(long r, unsigned long m, unsigned long n) {
  require_nonzero_r(r);
  if (r == -1) return true;
  const bool divisible = m != 0 && n % m == 0;
  if (r == 1) return divisible;
  return static_cast<unsigned long>(std::labs(r)) == m && is_prime(m) && divisible;
}

bool verify_m(const PellMSolution& sol) {
  if (sol.sols.size() != sol.m || sol.m < 2) return false;
  return det(build_circulant(sol.sols, sol.R)) == RatPoly(1);
}

ProbeReport divisibility_probe(const IntPoly& f, unsigned long m, unsigned long n_max) {
  if (!is_prime(m))
    throw Error(ErrorKind::NotPrime, std::to_string(m) + " is not prime");
  ProbeReport report{m, n_max, std::nullopt};
  const long ml = static_cast<long>(m);
  for (long r : {ml, -ml}) {
    const IntPoly alpha = twisted_alpha(f, r, m);
    GenRedeiVec v{m, 0, f, alpha, std::vector<IntPoly>(m)};
    v.A[0] = IntPoly(1);
    Integer modulus(1);
    for (unsigned long n = 0; n <= n_max; ++n) {
      if (n != 0) {
        v = gen_redei_step(v);
        if (n % m == 0) modulus *= Integer(ml);
      }
      for (unsigned long i = 0; i < m; ++i)
        if (!coeffs_divisible_by(v.A[i], modulus)) {
          report.violation = ProbeViolation{r, n, i, modulus};
          return report;
        }
    }
  }
  return report;
}

}  // namespace pellred
