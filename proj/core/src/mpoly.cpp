#include "dskit/poly.hpp"

#include <sstream>

#include "dskit/error.hpp"

namespace dskit {

namespace {

void require_same_arity(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) {
    throw DomainError("exponent arity mismatch: " + exponent_to_string(a) + " vs " + exponent_to_string(b));
  }
}

}  // namespace

bool exponent_leq(const Exponent& b, const Exponent& a) {
  require_same_arity(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] > a[i]) return false;
  }
  return true;
}

int exponent_total(const Exponent& b) {
  int total = 0;
  for (int v : b) total += v;
  return total;
}

Exponent exponent_sub(const Exponent& a, const Exponent& b) {
  require_same_arity(a, b);
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Exponent exponent_add(const Exponent& a, const Exponent& b) {
  require_same_arity(a, b);
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Integer multi_binomial(const Exponent& a, const Exponent& b) {
  require_same_arity(a, b);
  Integer r = 1;
  for (std::size_t i = 0; i < a.size(); ++i) r *= binomial(a[i], b[i]);
  return r;
}

void for_each_exponent_below(const Exponent& a, const std::function<void(const Exponent&)>& visit) {
  for (int v : a) {
    if (v < 0) throw DomainError("negative exponent bound " + exponent_to_string(a));
  }
  Exponent b(a.size(), 0);
  while (true) {
    visit(b);
    // odometer, last coordinate fastest -> lexicographic order
    std::size_t i = b.size();
    while (i > 0) {
      --i;
      if (b[i] < a[i]) {
        ++b[i];
        break;
      }
      b[i] = 0;
      if (i == 0) return;
    }
    if (b.empty()) return;
  }
}

std::size_t exponent_lattice_size(const Exponent& a) {
  std::size_t n = 1;
  for (int v : a) n *= static_cast<std::size_t>(v + 1);
  return n;
}

std::string exponent_to_string(const Exponent& b) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < b.size(); ++i) out << (i ? "," : "") << b[i];
  out << ')';
  return out.str();
}

MPoly::MPoly(Exponent bound) : bound_(std::move(bound)) {
  for (int v : bound_) {
    if (v < 0) throw DomainError("negative degree bound " + exponent_to_string(bound_));
  }
}

Integer MPoly::coefficient(const Exponent& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Integer(0) : it->second;
}

void MPoly::add_term(const Exponent& b, const Integer& c) {
  if (!exponent_leq(b, bound_)) {
    throw DomainError("exponent " + exponent_to_string(b) + " exceeds bound " + exponent_to_string(bound_));
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
  require_same_arity(bound_, rhs.bound_);
  for (std::size_t i = 0; i < bound_.size(); ++i) bound_[i] = std::max(bound_[i], rhs.bound_[i]);
  for (const auto& [b, c] : rhs.terms_) add_term(b, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
  require_same_arity(bound_, rhs.bound_);
  for (std::size_t i = 0; i < bound_.size(); ++i) bound_[i] = std::max(bound_[i], rhs.bound_[i]);
  for (const auto& [b, c] : rhs.terms_) add_term(b, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) c *= scalar;
  return *this;
}

MPoly operator*(const MPoly& lhs, const MPoly& rhs) {
  MPoly r(exponent_add(lhs.bound_, rhs.bound_));
  for (const auto& [b1, c1] : lhs.terms_) {
    for (const auto& [b2, c2] : rhs.terms_) r.add_term(exponent_add(b1, b2), c1 * c2);
  }
  return r;
}

bool operator==(const MPoly& lhs, const MPoly& rhs) {
  return lhs.bound_.size() == rhs.bound_.size() && lhs.terms_ == rhs.terms_;
}

IntPoly MPoly::specialize() const {
  IntPoly r(static_cast<std::size_t>(exponent_total(bound_)));
  for (const auto& [b, c] : terms_) {
    r += IntPoly::monomial(static_cast<std::size_t>(exponent_total(b)), r.degree_bound()) * c;
  }
  return r;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [b, c] = *it;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool constant = exponent_total(b) == 0;
    if (mag != 1 || constant) out << mag;
    bool need_sep = mag != 1;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i] == 0) continue;
      if (need_sep) out << '*';
      out << 'x' << (i + 1);
      if (b[i] > 1) out << '^' << b[i];
      need_sep = true;
    }
    first = false;
  }
  return out.str();
}

MPoly mdelta_expand(const MDeltaCoeffs& c) {
  MPoly result(c.bound);
  for (const auto& [b, coeff] : c.coeffs) {
    if (!exponent_leq(b, c.bound)) {
      throw DomainError("delta key " + exponent_to_string(b) + " exceeds bound " + exponent_to_string(c.bound));
    }
    if (coeff == 0) continue;
    // x^b (x+1)^(a-b) = sum_{e <= a-b} C(a-b, e) x^(b+e)
    const Exponent rest = exponent_sub(c.bound, b);
    for_each_exponent_below(rest, [&](const Exponent& e) {
      result.add_term(exponent_add(b, e), coeff * multi_binomial(rest, e));
    });
  }
  return result;
}

MDeltaCoeffs mmonomial_to_delta(const MPoly& p) {
  MDeltaCoeffs out{p.bound(), {}};
  const Exponent& a = p.bound();
  for (const auto& [b, coeff] : p.terms()) {
    // x^b = sum_{b <= b' <= a} (-1)^(|b'|-|b|) C(a-b, a-b') x^b' (x+1)^(a-b')
    const Exponent rest = exponent_sub(a, b);
    for_each_exponent_below(rest, [&](const Exponent& e) {
      Exponent bp = exponent_add(b, e);
      Integer term = coeff * sign_pow(exponent_total(e)) * multi_binomial(rest, exponent_sub(a, bp));
      auto [it, inserted] = out.coeffs.try_emplace(bp, term);
      if (!inserted) it->second += term;
    });
  }
  std::erase_if(out.coeffs, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace dskit
