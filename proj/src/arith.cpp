#include "pellred/arith.hpp"

#include <numeric>

namespace pellred {

std::optional<Integer> exact_root(const Integer& value, unsigned long k) {
  if (k == 0) return std::nullopt;
  if (k == 1) return value;
  if (sgn(value) < 0 && k % 2 == 0) return std::nullopt;
  Integer root;
  if (mpz_root(root.get_mpz_t(), value.get_mpz_t(), k) == 0) return std::nullopt;
  return root;
}

std::optional<Rational> rational_power(const Integer& base, unsigned long num,
                                       unsigned long den) {
  if (den == 0) return std::nullopt;
  if (num == 0) return Rational(1);
  const unsigned long g = std::gcd(num, den);
  num /= g;
  den /= g;
  auto root = exact_root(base, den);
  if (!root) return std::nullopt;
  Integer power;
  mpz_pow_ui(power.get_mpz_t(), root->get_mpz_t(), num);
  return Rational(power);
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

}  // namespace pellred
