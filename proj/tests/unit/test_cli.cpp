#include <catch2/catch.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "helpers.hpp"

namespace fs = std::filesystem;
using dskit::io::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = dskit::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string generated(std::vector<std::string> args) {
  args.insert(args.begin(), "gen");
  auto r = run(args);
  REQUIRE(r.code == 0);
  return r.out;
}

// fresh scratch directory per test case
fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("dskit_cli_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("gen composes with compute commands", "[cli]") {
  auto oct = generated({"cross-polytope-boundary", "3"});
  CHECK(run({"f-vector"}, oct).out == "1 6 12 8\n");
  CHECK(run({"h-vector"}, oct).out == "1 3 3 1\n");
  // the simplicial cylinder needs six vertices
  CHECK(run({"f-vector"}, generated({"cylinder"})).out == "1 6 12 6\n");
  CHECK(run({"hilbert"}, oct).out == "numerator 1 3 3 1\ndenominator (1-t)^3\n");
}

TEST_CASE("reciprocity JSON for the octahedron", "[cli]") {
  auto r = run({"verify", "--relation", "reciprocity", "--json"}, generated({"cross-polytope-boundary", "3"}));
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["relation"] == "reciprocity");
  CHECK(j[0]["rhs"] == json({"1", "6", "12", "8"}));
  CHECK(dskit::io::report_from_json(j[0]).holds());
}

TEST_CASE("precondition failures exit 4 with a witness", "[cli]") {
  auto r = run({"verify", "--relation", "ds-f"}, generated({"glued-triangles"}));
  CHECK(r.code == dskit::cli::kPrecondition);
  CHECK(r.err.find("witness: {1,2}") != std::string::npos);

  auto semi = run({"verify", "--relation", "semi-eulerian-h"}, generated({"double-banana-minus-triangle"}));
  CHECK(semi.code == dskit::cli::kPrecondition);
  CHECK(semi.err.find("witness: {") != std::string::npos);

  // verify all reports the skip instead
  auto all = run({"verify", "--relation", "all"}, generated({"glued-triangles"}));
  CHECK(all.code == 0);
  CHECK(all.out.find("ds-f skipped") != std::string::npos);
  CHECK(all.out.find("reciprocity holds") != std::string::npos);
}

TEST_CASE("usage and parse errors", "[cli]") {
  CHECK(run({}).code == dskit::cli::kUsage);
  CHECK(run({"frobnicate"}).code == dskit::cli::kUsage);
  CHECK(run({"f-vector", "--bogus"}, "1 2\n").code == dskit::cli::kUsage);
  CHECK(run({"verify", "--relation", "nope"}, "1 2\n").code == dskit::cli::kUsage);
  CHECK(run({"gen", "no-such-family"}).code == dskit::cli::kUsage);
  CHECK(run({"f-vector", "/nonexistent/file.cplx"}).code == dskit::cli::kUsage);
  CHECK(run({"betti", "--field", "4"}, "1 2\n").code == dskit::cli::kUsage);

  auto bad = run({"f-vector"}, "1 2 3\n1 two\n");
  CHECK(bad.code == dskit::cli::kParse);
  CHECK(bad.err.find("line 2") != std::string::npos);

  CHECK(run({"f-vector", "--max-faces", "10"}, "1 2 3 4 5\n").code == dskit::cli::kResourceLimit);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("classification and homology output", "[cli]") {
  auto banana = generated({"double-banana"});
  auto cl = run({"classify"}, banana);
  CHECK(cl.code == 0);
  CHECK(cl.out.find("eulerian yes") != std::string::npos);
  CHECK(cl.out.find("homology_manifold no witness {1}") != std::string::npos);

  auto b = run({"betti", "--manifold"}, banana);
  CHECK(b.out.find("link_betti 0 1 2") != std::string::npos);

  auto cyl = generated({"cylinder"});
  auto mult = run({"interior"}, cyl);
  auto hom = run({"interior", "--homological"}, cyl);
  CHECK(mult.out == "interior 0 6 6\nboundary 1 6 6 0\nboundary_is_subcomplex yes\n");
  CHECK(hom.out == mult.out);

  auto m = run({"multiplicities"}, "1 2\n");
  CHECK(m.out.rfind("# face m eps\n", 0) == 0);
  for (const char* line : {"{} 0 1\n", "{1} 0 -1\n", "{2} 0 -1\n", "{1,2} 1 0\n"}) CHECK(m.out.find(line) != std::string::npos);

  auto j = json::parse(run({"classify", "--json"}, cyl).out);
  CHECK(j["reciprocal"] == true);
}

TEST_CASE("colored commands", "[cli]") {
  auto dir = scratch("colors");
  auto cplx = dir / "oct.cplx", colors = dir / "oct.colors";
  CHECK(run({"gen", "cross-polytope-boundary", "3", "-o", cplx.string(), "--colors-out", colors.string()}).code == 0);
  auto flag = run({"flag", cplx.string(), "--colors", colors.string()});
  CHECK(flag.code == 0);
  CHECK(flag.out.find("type (1,1,1)") == 0);
  CHECK(flag.out.find("b=(1,1,1) f=8 h=1") != std::string::npos);
  CHECK(run({"flag", cplx.string()}).code == dskit::cli::kUsage);

  auto v = run({"verify", "--relation", "all", cplx.string(), "--colors", colors.string()});
  CHECK(v.code == 0);
  CHECK(v.out.find("skipped") == std::string::npos);

  // a vertex without a color
  write_file(dir / "partial.colors", "1 1\n2 1\n");
  auto bad = run({"flag", cplx.string(), "--colors", (dir / "partial.colors").string()});
  CHECK(bad.code == dskit::cli::kPrecondition);
  CHECK(bad.err.find("witness: {3}") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("batch over a directory", "[cli]") {
  auto dir = scratch("batch");
  write_file(dir / "b_oct.cplx", generated({"cross-polytope-boundary", "3"}));
  write_file(dir / "a_glued.cplx", generated({"glued-triangles"}));
  write_file(dir / "notes.txt", "ignored\n");
  auto r = run({"batch", dir.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("a_glued.cplx") < r.out.find("b_oct.cplx"));

  auto j = json::parse(run({"batch", dir.string(), "--json"}).out);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["file"] == "a_glued.cplx");
  CHECK(j[1]["status"] == "ok");

  write_file(dir / "c_broken.cplx", "1 x\n");
  CHECK(run({"batch", dir.string()}).code == dskit::cli::kParse);
  fs::remove_all(dir);
}
