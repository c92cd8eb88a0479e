#include "dskit/homology.hpp"

#include <algorithm>
#include <utility>

#include "dskit/enumeration.hpp"

namespace dskit {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t r = 1;
  base %= mod;
  while (exp) {
    if (exp & 1U) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1U;
  }
  return r;
}

// Sparse column: (row, coefficient) sorted by row.
template <class Coeff>
using Column = std::vector<std::pair<std::uint32_t, Coeff>>;

// Over Q with integer entries: col <- piv_low * col - col_low * pivot,
// then divide by the content so entries stay small.
struct RationalOps {
  using Coeff = Integer;

  static Coeff from_sign(int s) { return Coeff(s); }

  static void eliminate(Column<Coeff>& col, const Column<Coeff>& pivot) {
    const Coeff a = pivot.back().second;
    const Coeff b = col.back().second;
    Column<Coeff> out;
    out.reserve(col.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < col.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < col.size() && col[i].first < pivot[j].first)) {
        out.emplace_back(col[i].first, a * col[i].second);
        ++i;
      } else if (i == col.size() || pivot[j].first < col[i].first) {
        out.emplace_back(pivot[j].first, -b * pivot[j].second);
        ++j;
      } else {
        Coeff v = a * col[i].second - b * pivot[j].second;
        if (v != 0) out.emplace_back(col[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    Coeff g = 0;
    for (const auto& e : out) g = gcd(g, e.second);
    if (g > 1) {
      for (auto& e : out) e.second /= g;
    }
    col = std::move(out);
  }
};

struct ModularOps {
  using Coeff = std::uint64_t;
  std::uint64_t p;

  Coeff from_sign(int s) const { return s > 0 ? 1 : p - 1; }

  void eliminate(Column<Coeff>& col, const Column<Coeff>& pivot) const {
    // col <- col - (col_low / piv_low) * pivot
    const Coeff factor = col.back().second * pow_mod(pivot.back().second, p - 2, p) % p;
    Column<Coeff> out;
    out.reserve(col.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < col.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < col.size() && col[i].first < pivot[j].first)) {
        out.push_back(col[i++]);
      } else if (i == col.size() || pivot[j].first < col[i].first) {
        out.emplace_back(pivot[j].first, (p - factor * pivot[j].second % p) % p);
        ++j;
      } else {
        Coeff v = (col[i].second + p - factor * pivot[j].second % p) % p;
        if (v != 0) out.emplace_back(col[i].first, v);
        ++i;
        ++j;
      }
    }
    col = std::move(out);
  }
};

template <class Ops>
std::size_t column_rank(const Complex& complex, std::size_t k, const Ops& ops) {
  using Coeff = typename Ops::Coeff;
  const auto& cols = complex.faces_of_size(k);
  const auto& rows = complex.faces_of_size(k - 1);
  if (cols.empty() || rows.empty()) return 0;

  std::unordered_map<Face, std::uint32_t, FaceHash> row_index;
  row_index.reserve(rows.size());
  for (std::uint32_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r], r);

  std::vector<Column<Coeff>> reduced;
  reduced.reserve(cols.size());
  std::unordered_map<std::uint32_t, std::size_t> pivot_of_row;
  for (const auto& face : cols) {
    // boundary [v_0 .. v_k] = sum_j (-1)^j [.. v_j omitted ..], ascending ids
    Column<Coeff> col;
    const auto idx = face.indices();
    for (std::size_t j = 0; j < idx.size(); ++j) {
      col.emplace_back(row_index.at(face.without(idx[j])), ops.from_sign(j % 2 == 0 ? 1 : -1));
    }
    std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    while (!col.empty()) {
      auto it = pivot_of_row.find(col.back().first);
      if (it == pivot_of_row.end()) break;
      ops.eliminate(col, reduced[it->second]);
    }
    if (!col.empty()) {
      pivot_of_row.emplace(col.back().first, reduced.size());
      reduced.push_back(std::move(col));
    }
  }
  return reduced.size();
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p)) throw ValidationError("field characteristic " + std::to_string(p) + " is not prime");
  return FieldSpec(p);
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || text.empty() || v > 0xFFFFFFFFUL) {
    throw ValidationError("field must be 'q' or a prime, got '" + text + "'");
  }
  return prime(static_cast<std::uint32_t>(v));
}

std::size_t BettiTable::operator()(int i) const {
  if (i < -1 || i > top_index()) return 0;
  return values[static_cast<std::size_t>(i + 1)];
}

Integer BettiTable::euler_characteristic() const {
  Integer chi = 0;
  for (int i = -1; i <= top_index(); ++i) chi += sign_pow(i) * Integer((*this)(i));
  return chi;
}

std::size_t boundary_rank(const Complex& complex, std::size_t k, FieldSpec field) {
  if (k == 0 || k > complex.d()) return 0;
  if (field.is_rational()) return column_rank(complex, k, RationalOps{});
  return column_rank(complex, k, ModularOps{field.characteristic()});
}

BettiTable reduced_betti(const Complex& complex, FieldSpec field) {
  const std::size_t d = complex.d();
  // ranks[k] = rank of the map out of faces of cardinality k
  std::vector<std::size_t> ranks(d + 2, 0);
  for (std::size_t k = 1; k <= d; ++k) ranks[k] = boundary_rank(complex, k, field);
  BettiTable table;
  table.values.resize(d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    // beta~_{k-1} = |C_k| - rank(out of C_k) - rank(into C_k)
    table.values[k] = complex.faces_of_size(k).size() - ranks[k] - ranks[k + 1];
  }
  return table;
}

const BettiTable& LinkHomology::at(const Face& face) {
  auto it = cache_.find(face);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(face, reduced_betti(link(complex_, face), field_)).first->second;
}

bool LinkHomology::is_sphere_or_ball(const Face& face) {
  const BettiTable& b = at(face);
  const int top = static_cast<int>(complex_.d()) - 1 - static_cast<int>(face.size());
  for (int i = -1; i <= b.top_index(); ++i) {
    if (i == top) {
      if (b(i) > 1) return false;
    } else if (b(i) != 0) {
      return false;
    }
  }
  return true;
}

bool LinkHomology::is_sphere(const Face& face) {
  const int top = static_cast<int>(complex_.d()) - 1 - static_cast<int>(face.size());
  return at(face)(top) == 1;
}

ManifoldVerdict is_homology_manifold(const Complex& complex, FieldSpec field) {
  LinkHomology links(complex, field);
  ManifoldVerdict verdict;
  for (std::size_t i = 1; i < complex.faces().size(); ++i) {
    const Face& f = complex.faces()[i];
    if (!links.is_sphere_or_ball(f)) {
      verdict.is_manifold = false;
      verdict.witness = f;
      verdict.witness_betti = links.at(f);
      return verdict;
    }
  }
  return verdict;
}

std::vector<Face> boundary_faces_homological(const Complex& complex, FieldSpec field) {
  LinkHomology links(complex, field);
  std::vector<Face> out{complex.faces().front()};
  for (std::size_t i = 1; i < complex.faces().size(); ++i) {
    const Face& f = complex.faces()[i];
    if (!links.is_sphere_or_ball(f)) {
      throw PreconditionError("complex is not a homology manifold over " + field.to_string(),
                              complex.labels_of(f));
    }
    if (!links.is_sphere(f)) out.push_back(f);
  }
  return out;
}

}  // namespace dskit
