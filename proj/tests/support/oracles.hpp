#pragma once

// Slow, direct implementations used only to cross-check the library. None of
// them go through dskit's face lattice, polynomial classes or basis changes.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Set = std::vector<std::int64_t>;  // sorted vertex ids
using Faces = std::set<Set>;

inline Faces closure(const std::vector<Set>& facets) {
  Faces out{Set{}};
  for (auto f : facets) {
    std::sort(f.begin(), f.end());
    const std::size_t n = f.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      Set s;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) s.push_back(f[i]);
      }
      out.insert(s);
    }
  }
  return out;
}

inline std::size_t d_of(const Faces& faces) {
  std::size_t d = 0;
  for (const auto& f : faces) d = std::max(d, f.size());
  return d;
}

inline bool subset(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline std::vector<Int> f_vector(const Faces& faces) {
  std::vector<Int> f(d_of(faces) + 1);
  for (const auto& s : faces) f[s.size()] += 1;
  return f;
}

inline Int reduced_euler(const Faces& faces) {
  Int chi = 0;
  for (const auto& s : faces) chi += (s.size() % 2 == 1) ? 1 : -1;
  return chi;
}

inline Faces link(const Faces& faces, const Set& f) {
  Faces out;
  for (const auto& g : faces) {
    if (!subset(f, g)) continue;
    Set rest;
    std::set_difference(g.begin(), g.end(), f.begin(), f.end(), std::back_inserter(rest));
    out.insert(rest);
  }
  return out;
}

inline int sgn(long long e) { return (e % 2 + 2) % 2 == 0 ? 1 : -1; }

inline long long multiplicity(const Faces& faces, const Set& f) {
  const auto d = static_cast<long long>(d_of(faces));
  long long m = 0;
  for (const auto& g : faces) {
    if (subset(f, g)) m += sgn(d - static_cast<long long>(g.size()));
  }
  return m;
}

// ---------------------------------------------------------------------------
// Dense univariate polynomials as plain coefficient vectors.

using Poly = std::vector<Int>;

inline Poly trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline Poly add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

inline Poly scale(Poly p, const Int& c) {
  for (auto& x : p) x *= c;
  return p;
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline Poly pow(const Poly& p, std::size_t n) {
  Poly out{1};
  for (std::size_t i = 0; i < n; ++i) out = mul(out, p);
  return out;
}

inline const Poly& x() {
  static const Poly p{0, 1};
  return p;
}
inline const Poly& x_plus_1() {
  static const Poly p{1, 1};
  return p;
}
inline const Poly& one_minus_x() {
  static const Poly p{1, -1};
  return p;
}

/// sum_i c_i (x+1)^i x^(d-i) by repeated multiplication.
inline Poly delta_expand(const std::vector<Int>& c) {
  const std::size_t d = c.size() - 1;
  Poly out;
  for (std::size_t i = 0; i <= d; ++i) out = add(out, scale(mul(pow(x_plus_1(), i), pow(x(), d - i)), c[i]));
  return out;
}

/// h-vector from sum_F x^|F| (1-x)^(d-|F|), expanded directly.
inline std::vector<Int> h_vector(const Faces& faces) {
  const std::size_t d = d_of(faces);
  Poly h;
  for (const auto& s : faces) h = add(h, mul(pow(x(), s.size()), pow(one_minus_x(), d - s.size())));
  h.resize(d + 1);
  return h;
}

inline bool poly_equal(const Poly& a, const Poly& b) { return trim(a) == trim(b); }

// ---------------------------------------------------------------------------
// Multivariate polynomials as exponent -> coefficient maps.

using Exp = std::vector<int>;
using MPoly = std::map<Exp, Int>;

inline MPoly mtrim(MPoly p) {
  for (auto it = p.begin(); it != p.end();) it = (it->second == 0) ? p.erase(it) : std::next(it);
  return p;
}

inline MPoly madd(const MPoly& a, const MPoly& b) {
  MPoly out = a;
  for (const auto& [e, c] : b) out[e] += c;
  return mtrim(out);
}

inline MPoly mmul(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exp e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  return mtrim(out);
}

/// prod_i (x_i + shift)^e_i, or prod_i x_i^e_i when shift is zero.
inline MPoly mpow_linear(const Exp& e, long long shift, long long sign_x = 1) {
  MPoly out{{Exp(e.size(), 0), 1}};
  for (std::size_t i = 0; i < e.size(); ++i) {
    Exp unit(e.size(), 0);
    unit[i] = 1;
    MPoly lin{{unit, sign_x}};
    if (shift != 0) lin[Exp(e.size(), 0)] = shift;
    for (int k = 0; k < e[i]; ++k) out = mmul(out, lin);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reduced Betti numbers by dense Gaussian elimination over the rationals or GF(p).

inline std::size_t dense_rank(std::vector<std::vector<Rat>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rat factor = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::size_t dense_rank_mod(std::vector<std::vector<long long>> m, long long p) {
  auto inv = [p](long long a) {
    long long r = 1, e = p - 2;
    a %= p;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (auto& row : m) {
    for (auto& v : row) v = ((v % p) + p) % p;
  }
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const long long iv = inv(m[rank][c]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const long long factor = m[r][c] * iv % p;
      for (std::size_t k = c; k < cols; ++k) m[r][k] = ((m[r][k] - factor * m[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Reduced Betti numbers beta~_{-1}, beta~_0, ...; prime 0 means rationals.
inline std::vector<std::size_t> reduced_betti(const Faces& faces, long long prime = 0) {
  const std::size_t d = d_of(faces);
  std::vector<std::vector<Set>> by_size(d + 1);
  for (const auto& s : faces) by_size[s.size()].push_back(s);
  // rank of the boundary map from size k to size k-1, k = 1..d
  std::vector<std::size_t> rank(d + 2, 0);
  for (std::size_t k = 1; k <= d; ++k) {
    const auto& lower = by_size[k - 1];
    std::map<Set, std::size_t> index;
    for (std::size_t i = 0; i < lower.size(); ++i) index[lower[i]] = i;
    if (prime == 0) {
      std::vector<std::vector<Rat>> m(lower.size(), std::vector<Rat>(by_size[k].size()));
      for (std::size_t j = 0; j < by_size[k].size(); ++j) {
        const auto& s = by_size[k][j];
        for (std::size_t t = 0; t < s.size(); ++t) {
          Set face = s;
          face.erase(face.begin() + static_cast<long>(t));
          m[index.at(face)][j] = (t % 2 == 0) ? 1 : -1;
        }
      }
      rank[k] = dense_rank(m);
    } else {
      std::vector<std::vector<long long>> m(lower.size(), std::vector<long long>(by_size[k].size()));
      for (std::size_t j = 0; j < by_size[k].size(); ++j) {
        const auto& s = by_size[k][j];
        for (std::size_t t = 0; t < s.size(); ++t) {
          Set face = s;
          face.erase(face.begin() + static_cast<long>(t));
          m[index.at(face)][j] = (t % 2 == 0) ? 1 : -1;
        }
      }
      rank[k] = dense_rank_mod(m, prime);
    }
  }
  std::vector<std::size_t> betti(d + 1);
  for (std::size_t k = 0; k <= d; ++k) betti[k] = by_size[k].size() - rank[k] - rank[k + 1];
  return betti;
}

}  // namespace oracle
