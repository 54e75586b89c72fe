#include "pellred/polymat.hpp"

#include <utility>

namespace pellred {

PolyMatrix::PolyMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw Error(ErrorKind::DimensionMismatch, "matrix dimension must be positive");
}

PolyMatrix::PolyMatrix(std::vector<std::vector<RatPoly>> rows) : PolyMatrix(rows.size()) {
  for (std::size_t i = 0; i < dim_; ++i) {
    if (rows[i].size() != dim_)
      throw Error(ErrorKind::DimensionMismatch, "matrix rows must have length " +
                                                    std::to_string(dim_));
    for (std::size_t j = 0; j < dim_; ++j) (*this)(i, j) = std::move(rows[i][j]);
  }
}

PolyMatrix PolyMatrix::identity(std::size_t dim) {
  PolyMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = RatPoly(1);
  return m;
}

std::vector<RatPoly> PolyMatrix::column(std::size_t col) const {
  std::vector<RatPoly> out;
  out.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out.push_back((*this)(i, col));
  return out;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.dim() != b.dim())
    throw Error(ErrorKind::DimensionMismatch,
                "cannot multiply " + std::to_string(a.dim()) + "x" + std::to_string(a.dim()) +
                    " by " + std::to_string(b.dim()) + "x" + std::to_string(b.dim()));
  const std::size_t n = a.dim();
  PolyMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

PolyMatrix mat_pow(const PolyMatrix& a, unsigned long n) {
  PolyMatrix result = PolyMatrix::identity(a.dim());
  PolyMatrix base = a;
  while (n != 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n != 0) base = base * base;
  }
  return result;
}

RatPoly det(const PolyMatrix& a) {
  return a.dim() <= 3 ? det_cofactor(a) : det_bareiss(a);
}

RatPoly det_bareiss(const PolyMatrix& a) {
  const std::size_t n = a.dim();
  PolyMatrix m = a;
  RatPoly prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return RatPoly();
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = div_exact(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      m(i, k) = RatPoly();
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

namespace {

RatPoly cofactor_expand(const PolyMatrix& a, std::vector<std::size_t>& cols,
                        std::size_t row) {
  const std::size_t n = a.dim();
  if (row == n) return RatPoly(1);
  RatPoly acc;
  std::size_t position = 0;
  for (std::size_t idx = 0; idx < cols.size(); ++idx) {
    const std::size_t c = cols[idx];
    if (!a(row, c).is_zero()) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(idx));
      RatPoly minor = cofactor_expand(a, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(idx), c);
      RatPoly term = a(row, c) * minor;
      if (position % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    ++position;
  }
  return acc;
}

}  // namespace

RatPoly det_cofactor(const PolyMatrix& a) {
  std::vector<std::size_t> cols(a.dim());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return cofactor_expand(a, cols, 0);
}

PolyMatrix build_circulant(std::span<const RatPoly> sols, const IntPoly& R) {
  const std::size_t m = sols.size();
  if (m < 2)
    throw Error(ErrorKind::DimensionMismatch, "circulant needs at least 2 entries");
  const RatPoly twist = to_rat(R);
  PolyMatrix out(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const RatPoly& s = sols[(i + m - j) % m];
      out(i, j) = j > i ? s * twist : s;
    }
  return out;
}

std::vector<RatPoly> char_poly(const PolyMatrix& a) {
  const std::size_t n = a.dim();
  // det(t*I - a) has degree n in t; sample at t = 0..n.
  std::vector<RatPoly> samples;
  samples.reserve(n + 1);
  for (std::size_t t = 0; t <= n; ++t) {
    PolyMatrix shifted(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        shifted(i, j) = i == j ? RatPoly(Rational(static_cast<long>(t))) - a(i, j) : -a(i, j);
    samples.push_back(det(shifted));
  }

  // Lagrange: coefficient of t^k is sum_j samples[j] * basis_j[k].
  std::vector<RatPoly> out(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    RatPoly basis(1);
    Rational denom(1);
    for (std::size_t k = 0; k <= n; ++k) {
      if (k == j) continue;
      basis *= RatPoly{Rational(-static_cast<long>(k)), Rational(1)};
      denom *= Rational(static_cast<long>(j) - static_cast<long>(k));
    }
    basis = basis.scaled(Rational(1) / denom);
    for (std::size_t k = 0; k <= n; ++k)
      out[k] += samples[j].scaled(basis.coeff(k));
  }
  return out;
}

nlohmann::json to_json(const PolyMatrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(to_json(a(i, j)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace pellred
