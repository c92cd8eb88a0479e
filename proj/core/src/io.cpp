#include "dskit/io.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace dskit::io {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

std::vector<long long> parse_numbers(const std::string& line, std::size_t line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    long long v = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, v);
    if (ec != std::errc() || ptr != line.data() + j) {
      throw ParseError("expected an integer, got '" + line.substr(i, j - i) + "'", line_no);
    }
    out.push_back(v);
    i = j;
  }
  return out;
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("report JSON: missing '") + key + "'", 0);
  return obj.at(key);
}

std::vector<Integer> integers_from_json(const json& arr) {
  if (!arr.is_array()) throw ParseError("report JSON: expected an array", 0);
  std::vector<Integer> out;
  for (const auto& v : arr) out.push_back(integer_from_json(v));
  return out;
}

}  // namespace

Complex read_cplx(std::istream& in, std::size_t max_faces) {
  std::vector<std::vector<VertexId>> facets;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto numbers = parse_numbers(t, line_no);
    std::vector<VertexId> facet;
    for (long long v : numbers) {
      if (v <= 0) throw ParseError("vertex ids must be positive, got " + std::to_string(v), line_no);
      facet.push_back(v);
    }
    std::vector<VertexId> sorted = facet;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ParseError("repeated vertex id in facet", line_no);
    }
    facets.push_back(std::move(facet));
  }
  return Complex::from_facets(facets, max_faces);
}

Complex read_cplx_string(const std::string& text, std::size_t max_faces) {
  std::istringstream in(text);
  return read_cplx(in, max_faces);
}

void write_cplx(std::ostream& out, const Complex& complex) {
  for (const auto& facet : complex.facet_labels()) {
    for (std::size_t i = 0; i < facet.size(); ++i) out << (i ? " " : "") << facet[i];
    out << '\n';
  }
}

std::string write_cplx_string(const Complex& complex) {
  std::ostringstream out;
  write_cplx(out, complex);
  return out.str();
}

ColorMap read_colors(std::istream& in) {
  ColorMap colors;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto numbers = parse_numbers(t, line_no);
    if (numbers.size() != 2) throw ParseError("expected 'vertex color'", line_no);
    if (numbers[0] <= 0) throw ParseError("vertex ids must be positive", line_no);
    if (numbers[1] <= 0 || numbers[1] > std::numeric_limits<int>::max()) {
      throw ParseError("colors must be positive", line_no);
    }
    if (!colors.emplace(numbers[0], static_cast<int>(numbers[1])).second) {
      throw ParseError("vertex " + std::to_string(numbers[0]) + " colored twice", line_no);
    }
  }
  return colors;
}

void write_colors(std::ostream& out, const ColorMap& colors) {
  for (const auto& [v, c] : colors) out << v << ' ' << c << '\n';
}

json to_json(const Integer& value) { return to_decimal(value); }

json to_json(const std::vector<Integer>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(to_decimal(v));
  return arr;
}

Integer integer_from_json(const json& value) {
  if (value.is_string()) return parse_decimal(value.get<std::string>());
  if (value.is_number_integer()) return Integer(value.get<long long>());
  throw ParseError("expected an integer or decimal string", 0);
}

json report_to_json(const RelationReport& report) {
  json residuals = json::array();
  for (const auto& r : report.residuals) {
    residuals.push_back({{"term", r.term},
                         {"lhs", to_decimal(r.lhs)},
                         {"rhs", to_decimal(r.rhs)},
                         {"diff", to_decimal(r.difference())}});
  }
  json out = {{"relation", report.relation},
              {"holds", report.holds()},
              {"d", report.d},
              {"chi_reduced", to_decimal(report.chi_reduced)},
              {"m_empty", to_decimal(report.m_empty)},
              {"residuals", residuals}};
  auto coefficients = [](const IntPoly& p) { return to_json(std::vector<Integer>(p.coefficients().begin(), p.coefficients().end())); };
  out["lhs"] = report.lhs_poly ? coefficients(*report.lhs_poly) : json(nullptr);
  out["rhs"] = report.rhs_poly ? coefficients(*report.rhs_poly) : json(nullptr);
  return out;
}

RelationReport report_from_json(const json& value) {
  RelationReport r;
  try {
    r.relation = field(value, "relation").get<std::string>();
    r.d = field(value, "d").get<std::size_t>();
    r.chi_reduced = integer_from_json(field(value, "chi_reduced"));
    r.m_empty = integer_from_json(field(value, "m_empty"));
    for (const auto& item : field(value, "residuals")) {
      Residual res{field(item, "term").get<std::string>(), integer_from_json(field(item, "lhs")),
                   integer_from_json(field(item, "rhs"))};
      if (item.contains("diff") && integer_from_json(item.at("diff")) != res.difference()) {
        throw ParseError("report JSON: residual '" + res.term + "' has an inconsistent diff", 0);
      }
      r.residuals.push_back(std::move(res));
    }
    if (value.contains("lhs") && !value.at("lhs").is_null()) r.lhs_poly = IntPoly(integers_from_json(value.at("lhs")));
    if (value.contains("rhs") && !value.at("rhs").is_null()) r.rhs_poly = IntPoly(integers_from_json(value.at("rhs")));
    if (value.contains("holds") && value.at("holds").get<bool>() != r.holds()) {
      throw ParseError("report JSON: 'holds' disagrees with the residuals", 0);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what(), 0);
  }
  return r;
}

json face_to_json(const Complex& complex, const Face& face) { return complex.labels_of(face); }

json enumeration_to_json(const MultiplicityTable& table) {
  const Complex& complex = table.complex();
  FVector f = f_vector(complex);
  json m = json::array();
  for (std::size_t i = 0; i < complex.num_faces(); ++i) {
    m.push_back({{"face", face_to_json(complex, complex.faces()[i])}, {"m", std::to_string(table.at_index(i))}});
  }
  return {{"f", to_json(f.entries)},
          {"h", to_json(h_vector(f).entries)},
          {"m", m},
          {"chi", to_decimal(euler(f))},
          {"chi_reduced", to_decimal(reduced_euler(f))}};
}

json classification_to_json(const Complex& complex, const Classification& c) {
  auto witness = [&](const std::optional<Face>& w) { return w ? face_to_json(complex, *w) : json(nullptr); };
  json out = {{"reciprocal", c.reciprocal},
              {"semi_eulerian", c.semi_eulerian},
              {"eulerian", c.eulerian},
              {"field", c.field.to_string()},
              {"witnesses",
               {{"reciprocal", witness(c.reciprocal_witness)},
                {"semi_eulerian", witness(c.semi_eulerian_witness)},
                {"eulerian", witness(c.eulerian_witness)},
                {"homology_manifold", witness(c.manifold_witness)}}}};
  out["homology_manifold"] = c.homology_manifold ? json(*c.homology_manifold) : json(nullptr);
  return out;
}

json betti_to_json(const BettiTable& betti, FieldSpec field) {
  return {{"field", field.to_string()}, {"first_index", -1}, {"reduced_betti", betti.values}};
}

json manifold_to_json(const Complex& complex, const ManifoldVerdict& verdict, FieldSpec field) {
  json out = {{"homology_manifold", verdict.is_manifold}, {"field", field.to_string()}};
  out["witness"] = verdict.witness ? face_to_json(complex, *verdict.witness) : json(nullptr);
  out["witness_betti"] = verdict.witness_betti ? json(verdict.witness_betti->values) : json(nullptr);
  json boundary = json::array();
  if (verdict.is_manifold) {
    auto faces = boundary_faces_homological(complex, field);
    for (const auto& face : faces) boundary.push_back(face_to_json(complex, face));
    out["boundary_is_subcomplex"] = is_downward_closed(faces);
  } else {
    out["boundary_is_subcomplex"] = nullptr;
  }
  out["boundary_faces"] = boundary;
  return out;
}

json flag_to_json(const FlagVector& f, const FlagVector& h) {
  json arr = json::array();
  for (const auto& [b, value] : f.values) {
    arr.push_back({{"b", b}, {"f", to_decimal(value)}, {"h", to_decimal(h.at(b))}});
  }
  return arr;
}

}  // namespace dskit::io
