#pragma once

#include <gmpxx.h>

#include <optional>

namespace pellred {

using Integer = mpz_class;
using Rational = mpq_class;

/// Real k-th root of `value` if it is an exact integer. Negative values only
/// have a real root for odd k.
std::optional<Integer> exact_root(const Integer& value, unsigned long k);

/// base^(num/den) when it is a real rational number, otherwise absent.
/// For even reduced denominators the positive root is taken.
std::optional<Rational> rational_power(const Integer& base, unsigned long num,
                                       unsigned long den);

Integer binomial(unsigned long n, unsigned long k);

bool is_prime(unsigned long n);

}  // namespace pellred
