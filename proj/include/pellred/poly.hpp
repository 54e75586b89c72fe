#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pellred/arith.hpp"
#include "pellred/error.hpp"

namespace pellred {

namespace detail {
/// Rational products this long clear denominators and multiply over Z.
inline constexpr std::size_t kClearDenominatorsMinLength = 3;
std::vector<Rational> rational_mul(const std::vector<Rational>& a, const std::vector<Rational>& b);
}  // namespace detail

/// Degree of a univariate polynomial. The zero polynomial has degree
/// negative infinity, which orders below every finite degree and absorbs
/// addition. There is no conversion to a signed integer.
class Degree {
 public:
  constexpr explicit Degree(std::size_t value) : finite_(true), value_(value) {}

  static constexpr Degree neg_inf() { return Degree(); }

  constexpr bool is_neg_inf() const { return !finite_; }

  std::size_t value() const {
    if (!finite_) throw std::logic_error("degree of the zero polynomial");
    return value_;
  }

  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (a.finite_ != b.finite_)
      return a.finite_ ? std::strong_ordering::greater
                       : std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator==(Degree a, Degree b) {
    return (a <=> b) == 0;
  }

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return Degree();
    return Degree(a.value_ + b.value_);
  }

 private:
  constexpr Degree() = default;

  bool finite_ = false;
  std::size_t value_ = 0;
};

std::string to_string(Degree d);

/// Dense univariate polynomial, coefficients ascending by exponent.
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector. Rational coefficients are kept in lowest terms.
template <class T>
class Poly {
  static_assert(std::is_same_v<T, Integer> || std::is_same_v<T, Rational>);

 public:
  using coeff_type = T;

  Poly() = default;
  Poly(const T& constant) : coeffs_{constant} { normalize(); }
  Poly(long constant) : coeffs_{T(constant)} { normalize(); }
  Poly(std::initializer_list<T> coeffs) : coeffs_(coeffs) { normalize(); }
  explicit Poly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }

  static Poly monomial(const T& c, std::size_t exponent) {
    std::vector<T> v(exponent + 1);
    v[exponent] = c;
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(T(1), 1); }

  const std::vector<T>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Degree degree() const {
    return is_zero() ? Degree::neg_inf() : Degree(coeffs_.size() - 1);
  }
  /// Coefficient of x^k; zero beyond the degree.
  T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }
  /// Precondition: nonzero.
  const T& leading() const { return coeffs_.back(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    if constexpr (std::is_same_v<T, Rational>)
      if (std::min(a.coeffs_.size(), b.coeffs_.size()) >= detail::kClearDenominatorsMinLength)
        return Poly(detail::rational_mul(a.coeffs_, b.coeffs_));
    return mul_schoolbook(a, b);
  }

  // Schoolbook product.
  static Poly mul_schoolbook(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if constexpr (std::is_same_v<T, Integer>)
          mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
        else
          out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Poly(std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  Poly scaled(const T& c) const {
    if (c == 0) return Poly();
    Poly r = *this;
    for (auto& v : r.coeffs_) v *= c;
    return r;
  }

  Poly pow(unsigned long e) const {
    Poly result(T(1));
    Poly base = *this;
    while (e != 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e != 0) base = base * base;
    }
    return result;
  }

  T eval(const T& point) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * point + *it;
    return acc;
  }

 private:
  void normalize() {
    if constexpr (std::is_same_v<T, Rational>)
      for (auto& c : coeffs_) c.canonicalize();
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

RatPoly to_rat(const IntPoly& p);
bool is_integral(const RatPoly& p);

/// Every coefficient times c, in lowest terms.
RatPoly scale(const IntPoly& p, const Rational& c);
RatPoly scale(const RatPoly& p, const Rational& c);

/// The integer polynomial equal to p. Throws NotIntegral otherwise.
IntPoly div_exact_int(const RatPoly& p);

/// outer(inner(x)) by Horner's rule over the polynomial ring.
template <class T>
Poly<T> compose(const Poly<T>& outer, const Poly<T>& inner) {
  Poly<T> acc;
  const auto& c = outer.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + Poly<T>(*it);
  return acc;
}

/// Quotient and remainder of Euclidean division in Q[x]. Throws
/// InexactDivision when the divisor is zero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

/// a / b, which must divide exactly. Throws InexactDivision otherwise.
RatPoly div_exact(const RatPoly& a, const RatPoly& b);

/// True iff every coefficient of p is a multiple of k.
bool coeffs_divisible_by(const IntPoly& p, const Integer& k);

/// g in Z[x] with g*g == p and positive leading coefficient, if one exists.
std::optional<IntPoly> poly_sqrt(const IntPoly& p);

/// Parses the polynomial text grammar
///   poly  := term (('+'|'-') term)*
///   term  := coeff | coeff? 'x' ('^' uint)?
///   coeff := '-'? uint
/// A leading '-' may also stand alone before 'x' ("-x^2+1"). Blanks between
/// tokens are skipped. Throws ParseError with a byte position.
IntPoly parse_poly(std::string_view text);

/// Canonical text: descending powers, explicit signs, coefficient 1 and
/// exponent 1 omitted, "0" for the zero polynomial. Non-integer rational
/// coefficients are printed parenthesized, e.g. "(2/3)x^2-(1/3)".
std::string to_string(const IntPoly& p);
std::string to_string(const RatPoly& p);

/// {"coeffs": [...ascending decimal strings], "den": [...]} with "den"
/// present only when some denominator differs from 1.
nlohmann::json to_json(const IntPoly& p);
nlohmann::json to_json(const RatPoly& p);
RatPoly rat_poly_from_json(const nlohmann::json& j);
IntPoly int_poly_from_json(const nlohmann::json& j);

}  // namespace pellred
