#include "pellred/poly.hpp"

#include <cctype>

namespace pellred {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroD: return "ZeroD";
    case ErrorKind::OddIndexUndefined: return "OddIndexUndefined";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotASolution: return "NotASolution";
    case ErrorKind::UnsupportedD: return "UnsupportedD";
    case ErrorKind::IrrationalNormalizer: return "IrrationalNormalizer";
    case ErrorKind::ZeroR: return "ZeroR";
    case ErrorKind::NotPrime: return "NotPrime";
  }
  return "Error";
}

std::string to_string(Degree d) {
  return d.is_neg_inf() ? std::string("-inf") : std::to_string(d.value());
}

namespace detail {

namespace {

// Integer numerators of L * v for the least common denominator L.
std::vector<Integer> clear_denominators(const std::vector<Rational>& v, Integer& L) {
  L = 1;
  for (const auto& c : v) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_divexact(out[i].get_mpz_t(), L.get_mpz_t(), v[i].get_den_mpz_t());
    out[i] *= v[i].get_num();
  }
  return out;
}

}  // namespace

std::vector<Rational> rational_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Integer la, lb;
  const std::vector<Integer> ia = clear_denominators(a, la), ib = clear_denominators(b, lb);
  const std::vector<Integer> prod = (IntPoly(ia) * IntPoly(ib)).coeffs();
  const Integer den = la * lb;
  std::vector<Rational> out(prod.size());
  for (std::size_t i = 0; i < prod.size(); ++i) {
    out[i] = Rational(prod[i], den);
    out[i].canonicalize();
  }
  return out;
}

}  // namespace detail

RatPoly to_rat(const IntPoly& p) {
  std::vector<Rational> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return RatPoly(std::move(v));
}

bool is_integral(const RatPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

RatPoly scale(const IntPoly& p, const Rational& c) { return scale(to_rat(p), c); }

RatPoly scale(const RatPoly& p, const Rational& c) {
  Rational factor = c;
  factor.canonicalize();
  return p.scaled(factor);
}

IntPoly div_exact_int(const RatPoly& p) {
  std::vector<Integer> v;
  v.reserve(p.coeffs().size());
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const Rational& c = p.coeffs()[k];
    if (c.get_den() != 1)
      throw Error(ErrorKind::NotIntegral,
                  "coefficient of x^" + std::to_string(k) + " is " +
                      c.get_str() + ", not an integer");
    v.push_back(c.get_num());
  }
  return IntPoly(std::move(v));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::InexactDivision, "division by zero polynomial");
  if (a.degree() < b.degree()) return {RatPoly(), a};
  const std::size_t db = b.degree().value();
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(rem.size() - db);
  const Rational& lead = b.leading();
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    Rational q = rem[i] / lead;
    quot[i - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeffs()[j];
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly div_exact(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero())
    throw Error(ErrorKind::InexactDivision,
                "remainder " + to_string(r) + " is nonzero");
  return q;
}

bool coeffs_divisible_by(const IntPoly& p, const Integer& k) {
  if (k == 0) return p.is_zero();
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [&](const Integer& c) {
    return mpz_divisible_p(c.get_mpz_t(), k.get_mpz_t()) != 0;
  });
}

std::optional<IntPoly> poly_sqrt(const IntPoly& p) {
  if (p.is_zero()) return IntPoly();
  const std::size_t deg = p.degree().value();
  if (deg % 2 != 0) return std::nullopt;
  auto lead_root = exact_root(p.leading(), 2);
  if (!lead_root) return std::nullopt;

  // Top-down: the coefficient of x^(half+i) in g^2 is 2*g[half]*g[i] plus
  // products of coefficients already fixed.
  const std::size_t half = deg / 2;
  std::vector<Integer> g(half + 1);
  g[half] = *lead_root;
  const Integer twice_lead = 2 * g[half];
  for (std::size_t i = half; i-- > 0;) {
    Integer rest = p.coeff(half + i);
    for (std::size_t j = i + 1; j < half; ++j) {
      const std::size_t l = half + i - j;
      if (l > i && l < half) rest -= g[j] * g[l];
    }
    if (!mpz_divisible_p(rest.get_mpz_t(), twice_lead.get_mpz_t())) return std::nullopt;
    g[i] = rest / twice_lead;
  }
  IntPoly root(std::move(g));
  if (root * root != p) return std::nullopt;
  return root;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  IntPoly parse() {
    skip_blanks();
    if (at_end()) throw ParseError(pos_, "empty polynomial");
    std::vector<Integer> acc;
    bool first = true;
    while (true) {
      int sign = 1;
      if (!first) {
        const char op = text_[pos_];
        if (op != '+' && op != '-')
          throw ParseError(pos_, std::string("unexpected '") + op + "'");
        if (op == '-') sign = -1;
        ++pos_;
        skip_blanks();
      }
      parse_term(sign, acc);
      first = false;
      skip_blanks();
      if (at_end()) break;
    }
    return IntPoly(std::move(acc));
  }

 private:
  static constexpr unsigned long kMaxExponent = 1u << 20;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_blanks() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::optional<std::string> digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) return std::nullopt;
    return std::string(text_.substr(start, pos_ - start));
  }

  void parse_term(int sign, std::vector<Integer>& acc) {
    const std::size_t start = pos_;
    if (peek() == '-') {
      sign = -sign;
      ++pos_;
      skip_blanks();
    }
    Integer coeff(1);
    auto num = digits();
    if (num) coeff = Integer(*num, 10);
    skip_blanks();
    std::size_t exponent = 0;
    if (peek() == 'x') {
      ++pos_;
      exponent = 1;
      skip_blanks();
      if (peek() == '^') {
        ++pos_;
        skip_blanks();
        const std::size_t exp_pos = pos_;
        auto e = digits();
        if (!e) throw ParseError(pos_, "expected exponent");
        if (e->size() > 7 || std::stoul(*e) > kMaxExponent)
          throw ParseError(exp_pos, "exponent too large");
        exponent = std::stoul(*e);
      }
    } else if (!num) {
      throw ParseError(start, "expected a term");
    }
    if (acc.size() <= exponent) acc.resize(exponent + 1);
    acc[exponent] += sign < 0 ? Integer(-coeff) : coeff;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

template <class T>
std::string coeff_text(const T& magnitude);

template <>
std::string coeff_text(const Integer& magnitude) {
  return magnitude.get_str();
}

template <>
std::string coeff_text(const Rational& magnitude) {
  if (magnitude.get_den() == 1) return magnitude.get_num().get_str();
  return "(" + magnitude.get_str() + ")";
}

template <class T>
std::string format_poly(const Poly<T>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    const bool negative = sgn(c[k]) < 0;
    if (negative)
      out += '-';
    else if (!out.empty())
      out += '+';
    const T magnitude = abs(c[k]);
    if (k == 0 || magnitude != 1) out += coeff_text(magnitude);
    if (k >= 1) out += 'x';
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out;
}

}  // namespace

IntPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

std::string to_string(const IntPoly& p) { return format_poly(p); }
std::string to_string(const RatPoly& p) { return format_poly(p); }

nlohmann::json to_json(const IntPoly& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return {{"coeffs", coeffs}};
}

nlohmann::json to_json(const RatPoly& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  nlohmann::json dens = nlohmann::json::array();
  for (const auto& c : p.coeffs()) {
    coeffs.push_back(c.get_num().get_str());
    dens.push_back(c.get_den().get_str());
  }
  nlohmann::json j = {{"coeffs", coeffs}};
  if (!is_integral(p)) j["den"] = dens;
  return j;
}

namespace {

Integer integer_from_json(const nlohmann::json& v) {
  if (v.is_string()) {
    Integer out;
    if (out.set_str(v.get<std::string>(), 10) != 0)
      throw ParseError(0, "invalid integer string '" + v.get<std::string>() + "'");
    return out;
  }
  if (v.is_number_integer()) return Integer(v.get<long>());
  throw ParseError(0, "coefficient must be a decimal string");
}

}  // namespace

RatPoly rat_poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw ParseError(0, "polynomial JSON needs a \"coeffs\" array");
  const auto& coeffs = j["coeffs"];
  const nlohmann::json* dens = nullptr;
  if (j.contains("den")) {
    dens = &j["den"];
    if (!dens->is_array() || dens->size() != coeffs.size())
      throw ParseError(0, "\"den\" must match \"coeffs\" in length");
  }
  std::vector<Rational> v;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Integer den = dens ? integer_from_json((*dens)[i]) : Integer(1);
    if (den == 0) throw ParseError(0, "zero denominator");
    v.emplace_back(integer_from_json(coeffs[i]), den);
  }
  return RatPoly(std::move(v));
}

IntPoly int_poly_from_json(const nlohmann::json& j) {
  return div_exact_int(rat_poly_from_json(j));
}

}  // namespace pellred
