#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dskit/dskit.hpp"

namespace dskit::cli {

namespace {

namespace fs = std::filesystem;
using io::json;

struct Options {
  std::string file;
  bool json = false;
  std::string field = "q";
  std::string colors;
  std::size_t max_faces = 0;
  std::string output;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string join(const std::vector<Integer>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? " " : "") + to_decimal(values[i]);
  return s;
}

std::string ids_to_string(const std::vector<VertexId>& ids) {
  std::string s = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + std::to_string(ids[i]);
  return s + "}";
}

std::size_t face_cap(const Options& o) { return o.max_faces ? o.max_faces : default_max_faces(); }

Complex load_complex(const std::string& path, std::size_t max_faces, std::istream& in) {
  if (path.empty() || path == "-") return io::read_cplx(in, max_faces);
  std::ifstream file(path);
  if (!file) throw ValidationError("cannot open '" + path + "'");
  return io::read_cplx(file, max_faces);
}

ColorMap load_colors(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ValidationError("cannot open '" + path + "'");
  return io::read_colors(file);
}

std::optional<Coloring> load_coloring(const Options& o, const Complex& complex) {
  if (o.colors.empty()) return std::nullopt;
  return validate_balanced(complex, load_colors(o.colors));
}

// Writes to -o FILE when given, otherwise to the output stream.
void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.output);
  if (!file) throw ValidationError("cannot write '" + o.output + "'");
  file << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void add_common(CLI::App* cmd, Options& o, bool with_field = false, bool with_colors = false) {
  cmd->add_option("file", o.file, "Input .cplx file (default: stdin)");
  cmd->add_flag("--json", o.json, "Machine-readable JSON output");
  cmd->add_option("--max-faces", o.max_faces, "Face cap (default: $DSKIT_MAX_FACES or 2^24)");
  cmd->add_option("-o,--output", o.output, "Write output to FILE");
  if (with_field) cmd->add_option("--field", o.field, "Homology coefficients: q or a prime");
  if (with_colors) cmd->add_option("--colors", o.colors, "Vertex coloring sidecar file");
}

// ---------------------------------------------------------------------------

int cmd_f_vector(const Options& o, Streams s) {
  Complex c = load_complex(o.file, face_cap(o), s.in);
  FVector f = f_vector(c);
  emit(o, s.out, o.json ? dump({{"f", io::to_json(f.entries)}}) : join(f.entries) + "\n");
  return kOk;
}

int cmd_h_vector(const Options& o, Streams s) {
  Complex c = load_complex(o.file, face_cap(o), s.in);
  HVector h = h_vector(f_vector(c));
  emit(o, s.out, o.json ? dump({{"h", io::to_json(h.entries)}}) : join(h.entries) + "\n");
  return kOk;
}

int cmd_multiplicities(const Options& o, Streams s) {
  Complex c = load_complex(o.file, face_cap(o), s.in);
  MultiplicityTable table(c);
  if (o.json) {
    emit(o, s.out, dump(io::enumeration_to_json(table)));
    return kOk;
  }
  std::ostringstream text;
  text << "# face m eps\n";
  for (std::size_t i = 0; i < c.num_faces(); ++i) {
    text << describe_face(c, c.faces()[i]) << ' ' << table.at_index(i) << ' ' << table.epsilon_at_index(i) << '\n';
  }
  emit(o, s.out, text.str());
  return kOk;
}

int cmd_interior(const Options& o, bool homological, Streams s) {
  Complex c = load_complex(o.file, face_cap(o), s.in);
  FVector f = f_vector(c);
  std::vector<Face> boundary;
  if (homological) {
    boundary = boundary_faces_homological(c, FieldSpec::parse(o.field));
  } else {
    boundary = boundary_faces(MultiplicityTable(c));
  }
  FVector fb;
  fb.entries.assign(c.d() + 1, 0);
  for (const auto& face : boundary) fb.entries[face.size()] += 1;
  InteriorFVector interior;
  for (std::size_t i = 1; i <= c.d(); ++i) interior.entries.push_back(f.entries[i] - fb.entries[i]);
  const bool closed = is_downward_closed(boundary);

  if (o.json) {
    json faces = json::array();
    for (const auto& face : boundary) faces.push_back(io::face_to_json(c, face));
    emit(o, s.out,
         dump({{"source", homological ? "homology" : "multiplicity"},
               {"interior", io::to_json(interior.entries)},
               {"boundary", io::to_json(fb.entries)},
               {"boundary_faces", faces},
               {"boundary_is_subcomplex", closed}}));
    return kOk;
  }
  std::ostringstream text;
  text << "interior " << join(interior.entries) << '\n';
  text << "boundary " << join(fb.entries) << '\n';
  text << "boundary_is_subcomplex " << (closed ? "yes" : "no") << '\n';
  emit(o, s.out, text.str());
  return kOk;
}

int cmd_classify(const Options& o, bool skip_manifold, Streams s) {
  Complex c = load_complex(o.file, face_cap(o), s.in);
  Classification cl = classify(c, FieldSpec::parse(o.field), !skip_manifold);
  if (o.json) {
    emit(o, s.out, dump(io::classification_to_json(c, cl)));
    return kOk;
  }
  auto line = [&](const char* name, bool value, const std::optional<Face>& witness) {
    std::string l = std::string(name) + (value ? " yes" : " no");
    if (!value && witness) l += " witness " + describe_face(c, *witness);
    return l + "\n";
  };
  std::string text = line("reciprocal", cl.reciprocal, cl.reciprocal_witness) +
                     line("semi_eulerian", cl.semi_eulerian, cl.semi_eulerian_witness) +
                     line("eulerian", cl.eulerian, cl.eulerian_witness);
  if (cl.homology_manifold) text += line("homology_manifold", *cl.homology_manifold, cl.manifold_witness);
  emit(o, s.out, text);
  return kOk;
}

int cmd_betti(const Options& o, bool manifold, Streams s) {
  Complex c = load_complex(o.file, face_cap(o), s.in);
  FieldSpec field = FieldSpec::parse(o.field);
  BettiTable betti = reduced_betti(c, field);
  std::optional<ManifoldVerdict> verdict;
  if (manifold) verdict = is_homology_manifold(c, field);
  if (o.json) {
    json j = io::betti_to_json(betti, field);
    if (verdict) j["manifold"] = io::manifold_to_json(c, *verdict, field);
    emit(o, s.out, dump(j));
    return kOk;
  }
  std::ostringstream text;
  text << "reduced_betti";
  for (auto b : betti.values) text << ' ' << b;
  text << '\n';
  if (verdict) {
    text << "homology_manifold " << (verdict->is_manifold ? "yes" : "no");
    if (verdict->witness) {
      text << " witness " << describe_face(c, *verdict->witness) << " link_betti";
      for (auto b : verdict->witness_betti->values) text << ' ' << b;
    }
    text << '\n';
  }
  emit(o, s.out, text.str());
  return kOk;
}

std::string describe_outcome(const RelationOutcome& o) {
  if (!o.applicable()) return o.relation + " skipped: " + o.skipped_reason + "\n";
  const RelationReport& r = *o.report;
  if (r.holds()) return r.relation + " holds (" + std::to_string(r.residuals.size()) + " terms)\n";
  std::string s = r.relation + " FAILS";
  for (const auto& res : r.residuals) {
    if (res.lhs != res.rhs) s += "\n  " + res.term + ": lhs " + to_decimal(res.lhs) + ", rhs " + to_decimal(res.rhs);
  }
  return s + "\n";
}

json outcome_to_json(const RelationOutcome& o) {
  if (o.applicable()) return io::report_to_json(*o.report);
  json j = {{"relation", o.relation}, {"skipped", o.skipped_reason}};
  j["witness"] = o.witness ? json(*o.witness) : json(nullptr);
  return j;
}

int cmd_verify(const Options& o, const std::string& relation, Streams s) {
  Complex c = load_complex(o.file, face_cap(o), s.in);
  FieldSpec field = FieldSpec::parse(o.field);
  auto coloring = load_coloring(o, c);
  std::vector<RelationOutcome> outcomes;
  if (relation == "all") {
    outcomes = verify_all(c, field, coloring);
  } else {
    outcomes.push_back(RelationOutcome{relation, run_relation(relation, c, field, coloring), "", std::nullopt});
  }
  if (o.json) {
    json arr = json::array();
    for (const auto& oc : outcomes) arr.push_back(outcome_to_json(oc));
    emit(o, s.out, dump(arr));
  } else {
    std::string text;
    for (const auto& oc : outcomes) text += describe_outcome(oc);
    emit(o, s.out, text);
  }
  return all_hold(outcomes) ? kOk : kRelationFails;
}

int cmd_flag(const Options& o, Streams s) {
  if (o.colors.empty()) throw CLI::RequiredError("--colors");
  Complex c = load_complex(o.file, face_cap(o), s.in);
  Coloring coloring = *load_coloring(o, c);
  FlagVector f = flag_f(c, coloring);
  FlagVector h = flag_h(f);
  if (o.json) {
    emit(o, s.out, dump({{"type", coloring.type()}, {"flag", io::flag_to_json(f, h)}}));
    return kOk;
  }
  std::ostringstream text;
  text << "type " << exponent_to_string(coloring.type()) << '\n';
  for (const auto& [b, value] : f.values) {
    text << "b=" << exponent_to_string(b) << " f=" << to_decimal(value) << " h=" << to_decimal(h.at(b)) << '\n';
  }
  emit(o, s.out, text.str());
  return kOk;
}

int cmd_hilbert(const Options& o, Streams s) {
  Complex c = load_complex(o.file, face_cap(o), s.in);
  auto coloring = load_coloring(o, c);
  std::ostringstream text;
  if (!coloring) {
    HilbertSeries series = hilbert_series(c);
    std::vector<Integer> num(series.numerator.coefficients().begin(), series.numerator.coefficients().end());
    if (o.json) {
      emit(o, s.out, dump({{"numerator", io::to_json(num)}, {"denominator_exponent", series.denominator_exponent}}));
      return kOk;
    }
    text << "numerator " << join(num) << '\n';
    text << "denominator (1-t)^" << series.denominator_exponent << '\n';
  } else {
    ColoredHilbertSeries series = hilbert_series(c, *coloring);
    if (o.json) {
      json terms = json::array();
      for (const auto& [b, value] : series.numerator.terms()) terms.push_back({{"b", b}, {"c", to_decimal(value)}});
      emit(o, s.out, dump({{"numerator", terms}, {"denominator_exponents", series.denominator_exponents}}));
      return kOk;
    }
    for (const auto& [b, value] : series.numerator.terms()) {
      text << "numerator b=" << exponent_to_string(b) << ' ' << to_decimal(value) << '\n';
    }
    text << "denominator (1-w)^" << exponent_to_string(series.denominator_exponents) << '\n';
  }
  emit(o, s.out, text.str());
  return kOk;
}

int cmd_gen(const Options& o, const std::string& family, const std::vector<std::string>& params,
            const std::string& input, const std::string& colors_out, Streams s) {
  std::optional<Complex> source;
  if (family == "barycentric-subdivision") source = load_complex(input, face_cap(o), s.in);
  auto g = gen::generate(family, params, source);
  emit(o, s.out, io::write_cplx_string(g.complex));
  if (!colors_out.empty()) {
    if (!g.colors) throw ValidationError("family '" + family + "' has no canonical coloring");
    std::ofstream file(colors_out);
    if (!file) throw ValidationError("cannot write '" + colors_out + "'");
    io::write_colors(file, *g.colors);
  }
  return kOk;
}

struct BatchRow {
  std::string name;
  std::string status;  // ok, FAIL, error
  std::size_t d = 0;
  std::size_t faces = 0;
  std::size_t applicable = 0;
  std::size_t held = 0;
  std::vector<std::string> failing;
  int code = kOk;
  json detail;
};

BatchRow batch_one(const fs::path& path, FieldSpec field, std::size_t max_faces) {
  BatchRow row;
  row.name = path.filename().string();
  try {
    std::ifstream file(path);
    if (!file) throw ValidationError("cannot open file");
    Complex c = io::read_cplx(file, max_faces);
    row.d = c.d();
    row.faces = c.num_faces();
    std::optional<Coloring> coloring;
    fs::path sidecar = path;
    sidecar.replace_extension(".colors");
    if (fs::exists(sidecar)) coloring = validate_balanced(c, load_colors(sidecar.string()));
    auto outcomes = verify_all(c, field, coloring);
    row.detail = json::array();
    for (const auto& oc : outcomes) {
      row.detail.push_back(outcome_to_json(oc));
      if (!oc.applicable()) continue;
      ++row.applicable;
      if (oc.report->holds()) {
        ++row.held;
      } else {
        row.failing.push_back(oc.relation);
      }
    }
    row.status = row.failing.empty() ? "ok" : "FAIL";
    row.code = row.failing.empty() ? kOk : kRelationFails;
  } catch (const ParseError& e) {
    row.status = "error";
    row.code = kParse;
    row.detail = {{"error", e.what()}};
  } catch (const Error& e) {
    row.status = "error";
    row.code = dynamic_cast<const PreconditionError*>(&e) || dynamic_cast<const ColoringError*>(&e) ? kPrecondition
                                                                                                    : kUsage;
    row.detail = {{"error", e.what()}};
  }
  return row;
}

int cmd_batch(const Options& o, const std::string& dir, Streams s) {
  if (!fs::is_directory(dir)) throw ValidationError("'" + dir + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".cplx") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  FieldSpec field = FieldSpec::parse(o.field);
  const std::size_t cap = face_cap(o);

  std::vector<std::future<BatchRow>> jobs;
  for (const auto& f : files) jobs.push_back(std::async(std::launch::async, batch_one, f, field, cap));
  std::vector<BatchRow> rows;
  for (auto& j : jobs) rows.push_back(j.get());

  int code = kOk;
  for (const auto& r : rows) {
    if (r.code == kOk) continue;
    if (code == kOk || r.code > code) code = r.code;
  }

  if (o.json) {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"file", r.name},
                     {"status", r.status},
                     {"d", r.d},
                     {"faces", r.faces},
                     {"applicable", r.applicable},
                     {"held", r.held},
                     {"failing", r.failing},
                     {"results", r.detail}});
    }
    emit(o, s.out, dump(arr));
    return code;
  }
  std::size_t width = 4;
  for (const auto& r : rows) width = std::max(width, r.name.size());
  std::ostringstream text;
  auto pad = [](std::string v, std::size_t w) {
    v.resize(std::max(v.size(), w), ' ');
    return v;
  };
  text << pad("file", width) << "  " << pad("d", 3) << pad("faces", 8) << pad("held", 8) << "status\n";
  for (const auto& r : rows) {
    text << pad(r.name, width) << "  " << pad(std::to_string(r.d), 3) << pad(std::to_string(r.faces), 8)
         << pad(std::to_string(r.held) + "/" + std::to_string(r.applicable), 8) << r.status;
    for (const auto& f : r.failing) text << ' ' << f;
    if (r.status == "error") text << ' ' << r.detail.value("error", "");
    text << '\n';
  }
  emit(o, s.out, text.str());
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Face numbers, multiplicities and Dehn-Sommerville relations of simplicial complexes", "dskit"};
  app.require_subcommand(1);

  Options o;
  bool homological = false, skip_manifold = false, manifold = false;
  std::string relation = "all", family, input, colors_out, dir;
  std::vector<std::string> params;

  auto* f_cmd = app.add_subcommand("f-vector", "Print (f_-1, ..., f_{d-1})");
  add_common(f_cmd, o);
  auto* h_cmd = app.add_subcommand("h-vector", "Print (h_0, ..., h_d)");
  add_common(h_cmd, o);
  auto* m_cmd = app.add_subcommand("multiplicities", "Print m_F and eps_F for every face");
  add_common(m_cmd, o);
  auto* i_cmd = app.add_subcommand("interior", "Interior and boundary face numbers of a reciprocal complex");
  add_common(i_cmd, o, true);
  i_cmd->add_flag("--homological", homological, "Split by link homology instead of multiplicities");
  auto* c_cmd = app.add_subcommand("classify", "Reciprocal / semi-Eulerian / Eulerian / homology manifold");
  add_common(c_cmd, o, true);
  c_cmd->add_flag("--no-manifold", skip_manifold, "Skip the homology manifold test");
  auto* b_cmd = app.add_subcommand("betti", "Reduced Betti numbers, beta~_-1 first");
  add_common(b_cmd, o, true);
  b_cmd->add_flag("--manifold", manifold, "Also test for a homology manifold");
  auto* v_cmd = app.add_subcommand("verify", "Check Dehn-Sommerville type relations");
  add_common(v_cmd, o, true, true);
  std::vector<std::string> choices = relation_ids();
  choices.push_back("all");
  v_cmd->add_option("--relation", relation, "Relation id or 'all'")->check(CLI::IsMember(choices));
  auto* fl_cmd = app.add_subcommand("flag", "Flag f- and h-numbers of a balanced complex");
  add_common(fl_cmd, o, false, true);
  auto* hi_cmd = app.add_subcommand("hilbert", "Hilbert series of the Stanley-Reisner ring");
  add_common(hi_cmd, o, false, true);
  auto* g_cmd = app.add_subcommand("gen", "Generate a complex");
  g_cmd->add_option("family", family, "Family name")->required()->check(CLI::IsMember(gen::families()));
  g_cmd->add_option("params", params, "Family parameters");
  g_cmd->add_option("-o,--output", o.output, "Write the .cplx to FILE");
  g_cmd->add_option("--colors-out", colors_out, "Write the canonical coloring to FILE");
  g_cmd->add_option("--input", input, "Input complex for barycentric-subdivision (default: stdin)");
  g_cmd->add_option("--max-faces", o.max_faces, "Face cap");
  auto* ba_cmd = app.add_subcommand("batch", "Run every relation over the .cplx files in a directory");
  ba_cmd->add_option("dir", dir, "Directory")->required();
  ba_cmd->add_flag("--json", o.json, "Machine-readable JSON output");
  ba_cmd->add_option("--field", o.field, "Homology coefficients: q or a prime");
  ba_cmd->add_option("--max-faces", o.max_faces, "Face cap");
  ba_cmd->add_option("-o,--output", o.output, "Write output to FILE");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  Streams s{in, out, err};
  try {
    if (*f_cmd) return cmd_f_vector(o, s);
    if (*h_cmd) return cmd_h_vector(o, s);
    if (*m_cmd) return cmd_multiplicities(o, s);
    if (*i_cmd) return cmd_interior(o, homological, s);
    if (*c_cmd) return cmd_classify(o, skip_manifold, s);
    if (*b_cmd) return cmd_betti(o, manifold, s);
    if (*v_cmd) return cmd_verify(o, relation, s);
    if (*fl_cmd) return cmd_flag(o, s);
    if (*hi_cmd) return cmd_hilbert(o, s);
    if (*g_cmd) return cmd_gen(o, family, params, input, colors_out, s);
    if (*ba_cmd) return cmd_batch(o, dir, s);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    if (e.witness()) err << "witness: " << ids_to_string(*e.witness()) << '\n';
    return kPrecondition;
  } catch (const ColoringError& e) {
    err << "error: " << e.what() << '\n';
    err << "witness: " << ids_to_string(e.witness()) << '\n';
    return kPrecondition;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace dskit::cli
