#include "dskit/poly.hpp"

#include <algorithm>
#include <sstream>

#include "dskit/error.hpp"

namespace dskit {

namespace {

const Integer& zero_integer() {
  static const Integer zero = 0;
  return zero;
}

}  // namespace

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.resize(1);
}

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  if (coeffs_.empty()) coeffs_.resize(1);
}

IntPoly IntPoly::monomial(std::size_t k, std::size_t degree_bound) {
  if (k > degree_bound) throw DomainError("monomial x^" + std::to_string(k) + " exceeds degree bound");
  IntPoly p(degree_bound);
  p.coeffs_[k] = 1;
  return p;
}

IntPoly IntPoly::constant(Integer c) { return IntPoly(std::vector<Integer>{std::move(c)}); }

IntPoly IntPoly::binomial_power(std::size_t n, const Integer& shift) {
  // (x + s)^n = sum_k C(n,k) s^(n-k) x^k
  IntPoly p(n);
  Integer power = 1;
  for (std::size_t j = 0; j <= n; ++j) {
    std::size_t k = n - j;
    p.coeffs_[k] = binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)) * power;
    power *= shift;
  }
  return p;
}

int IntPoly::degree() const {
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

const Integer& IntPoly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : zero_integer();
}

IntPoly IntPoly::with_degree_bound(std::size_t degree_bound) const {
  if (degree() > static_cast<int>(degree_bound)) {
    throw DomainError("polynomial of degree " + std::to_string(degree()) +
                      " does not fit degree bound " + std::to_string(degree_bound));
  }
  std::vector<Integer> c(degree_bound + 1);
  for (std::size_t i = 0; i < c.size() && i < coeffs_.size(); ++i) c[i] = coeffs_[i];
  return IntPoly(std::move(c));
}

Integer IntPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

IntPoly IntPoly::compose_affine(const Integer& a, const Integer& b) const {
  // Horner in polynomial arithmetic: acc = acc * (a x + b) + c_i
  const std::size_t d = degree_bound();
  std::vector<Integer> acc(d + 1);
  std::size_t len = 0;  // number of meaningful entries in acc
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    std::vector<Integer> next(d + 1);
    for (std::size_t k = 0; k < len; ++k) {
      next[k] += acc[k] * b;
      next[k + 1] += acc[k] * a;
    }
    next[0] += coeffs_[i];
    acc = std::move(next);
    len = std::min(len + 1, d + 1);
  }
  return IntPoly(std::move(acc));
}

IntPoly IntPoly::reversed() const {
  std::vector<Integer> c(coeffs_.rbegin(), coeffs_.rend());
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
  IntPoly r(lhs.degree_bound() + rhs.degree_bound());
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      r.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return r;
}

bool operator==(const IntPoly& lhs, const IntPoly& rhs) {
  const std::size_t n = std::max(lhs.coeffs_.size(), rhs.coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (lhs.coefficient(i) != rhs.coefficient(i)) return false;
  }
  return true;
}

std::string IntPoly::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) out << mag;
    if (i >= 1) out << 'x';
    if (i >= 2) out << '^' << i;
    first = false;
  }
  if (first) out << '0';
  return out.str();
}

IntPoly delta_expand(const DeltaCoeffs& c) {
  const std::size_t d = c.degree_bound();
  IntPoly result(d);
  // (x+1)^i x^(d-i) = sum_j C(i,j) x^(j + d - i)
  std::vector<Integer> out(d + 1);
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
    if (c.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j <= i; ++j) {
      out[j + d - i] += c.coeffs[i] * binomial(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j));
    }
  }
  return IntPoly(std::move(out));
}

DeltaCoeffs monomial_to_delta(const IntPoly& p) {
  const std::size_t d = p.degree_bound();
  DeltaCoeffs c{std::vector<Integer>(d + 1)};
  for (std::size_t k = 0; k <= d; ++k) {
    const Integer& pk = p.coefficient(k);
    if (pk == 0) continue;
    const auto rest = static_cast<std::int64_t>(d - k);
    for (std::int64_t i = 0; i <= rest; ++i) {
      c.coeffs[static_cast<std::size_t>(i)] += pk * sign_pow(rest - i) * binomial(rest, i);
    }
  }
  return c;
}

}  // namespace dskit
