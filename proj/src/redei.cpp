#include "pellred/redei.hpp"

namespace pellred {

PolyMatrix redei_matrix_of(const IntPoly& alpha, const IntPoly& z) {
  const RatPoly zr = to_rat(z);
  return PolyMatrix({{zr, to_rat(alpha)}, {RatPoly(1), zr}});
}

RedeiPair redei_recurrence(const IntPoly& alpha, const IntPoly& z, unsigned long n) {
  RedeiPair out{n, alpha, z, IntPoly(1), IntPoly()};
  if (n == 0) return out;
  const IntPoly trace = z.scaled(Integer(2));
  const IntPoly norm = z * z - alpha;
  IntPoly n_prev(1), n_cur = z;
  IntPoly d_prev, d_cur(1);
  for (unsigned long k = 2; k <= n; ++k) {
    IntPoly n_next = trace * n_cur - norm * n_prev;
    IntPoly d_next = trace * d_cur - norm * d_prev;
    n_prev = std::move(n_cur);
    n_cur = std::move(n_next);
    d_prev = std::move(d_cur);
    d_cur = std::move(d_next);
  }
  out.N = std::move(n_cur);
  out.D = std::move(d_cur);
  return out;
}

RedeiPair redei_matrix(const IntPoly& alpha, const IntPoly& z, unsigned long n) {
  const PolyMatrix power = mat_pow(redei_matrix_of(alpha, z), n);
  return {n, alpha, z, div_exact_int(power(0, 0)), div_exact_int(power(1, 0))};
}

RedeiPair redei_closed_form(const IntPoly& alpha, const IntPoly& z, unsigned long n) {
  // z_pow[j] = z^j, alpha^k accumulated alongside k.
  std::vector<IntPoly> z_pow{IntPoly(1)};
  for (unsigned long j = 1; j <= n; ++j) z_pow.push_back(z_pow.back() * z);
  IntPoly N, D;
  IntPoly alpha_k(1);
  for (unsigned long k = 0; 2 * k <= n; ++k) {
    N += (alpha_k * z_pow[n - 2 * k]).scaled(binomial(n, 2 * k));
    if (2 * k + 1 <= n) D += (alpha_k * z_pow[n - 2 * k - 1]).scaled(binomial(n, 2 * k + 1));
    alpha_k = alpha_k * alpha;
  }
  return {n, alpha, z, std::move(N), std::move(D)};
}

bool norm_identity_holds(const RedeiPair& p) {
  return p.N * p.N - p.alpha * p.D * p.D == (p.z * p.z - p.alpha).pow(p.n);
}

std::pair<RatPoly, RatPoly> redei_backward_step(const IntPoly& alpha, const IntPoly& z,
                                                const RatPoly& N, const RatPoly& D) {
  const RatPoly zr = to_rat(z);
  const RatPoly ar = to_rat(alpha);
  const RatPoly norm = zr * zr - ar;
  return {div_exact(zr * N - ar * D, norm), div_exact(zr * D - N, norm)};
}

}  // namespace pellred
