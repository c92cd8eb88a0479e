#include "dskit/report.hpp"

#include <algorithm>
#include <set>

namespace dskit {

bool RelationReport::holds() const {
  return std::all_of(residuals.begin(), residuals.end(), [](const Residual& r) { return r.lhs == r.rhs; });
}

std::vector<std::string> RelationReport::failing_terms() const {
  std::vector<std::string> out;
  for (const auto& r : residuals) {
    if (r.lhs != r.rhs) out.push_back(r.term);
  }
  return out;
}

const Residual* RelationReport::find(const std::string& term) const {
  auto it = std::find_if(residuals.begin(), residuals.end(), [&](const Residual& r) { return r.term == term; });
  return it == residuals.end() ? nullptr : &*it;
}

void RelationReport::add(std::string term, Integer lhs, Integer rhs) {
  residuals.push_back(Residual{std::move(term), std::move(lhs), std::move(rhs)});
}

void RelationReport::add_polynomial(const std::string& prefix, const IntPoly& lhs, const IntPoly& rhs) {
  const std::size_t n = std::max(lhs.degree_bound(), rhs.degree_bound());
  for (std::size_t k = 0; k <= n; ++k) {
    add(prefix + "x^" + std::to_string(k), lhs.coefficient(k), rhs.coefficient(k));
  }
}

void RelationReport::add_polynomial(const std::string& prefix, const MPoly& lhs, const MPoly& rhs) {
  Exponent bound = lhs.bound();
  for (std::size_t i = 0; i < bound.size() && i < rhs.bound().size(); ++i) {
    bound[i] = std::max(bound[i], rhs.bound()[i]);
  }
  for_each_exponent_below(bound, [&](const Exponent& b) {
    add(prefix + "x^" + exponent_to_string(b), lhs.coefficient(b), rhs.coefficient(b));
  });
}

}  // namespace dskit
