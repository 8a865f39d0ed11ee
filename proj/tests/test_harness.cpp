#include <doctest.h>

#include <filesystem>

#include "dmm/errors.hpp"
#include "dmm/milne.hpp"
#include "dmm/oracle.hpp"
#include "dmm/poly_text.hpp"
#include "dmm/report_io.hpp"
#include "dmm/system_file.hpp"
#include "dmm/validation.hpp"

using namespace dmm;
namespace fs = std::filesystem;

namespace {

std::vector<std::string> bivariate_corpus() {
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(DMM_CORPUS_DIR)) {
    if (e.path().extension() != ".sys") continue;
    SystemFile s = load_system(e.path().string());
    if (s.nvars() == 2 && s.polys.size() == 2) out.push_back(e.path().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("system file parsing") {
  SystemFile s = parse_system("name: demo\n# comment\nvars: x y\nd: 4 # declared\ntau: 7\n1:2,0;1:0,2;-2:0,0\n\n1:1,0;-1:0,1\n");
  CHECK(s.name == "demo");
  CHECK(s.nvars() == 2);
  REQUIRE(s.polys.size() == 2);
  CHECK(s.degree() == 4);
  CHECK(s.bitsize() == 7);
  CHECK(s.polys[1] == parse_poly("1:1,0;-1:0,1"));

  SystemFile t = parse_system("vars: x y\n3:2,0;-1:0,0\n1:0,1\n");
  CHECK(t.degree() == 2);
  CHECK(t.bitsize() == 3);
  CHECK(t.name.empty());
}

TEST_CASE("system file round trip") {
  for (const auto& path : bivariate_corpus()) {
    CAPTURE(path);
    SystemFile a = load_system(path);
    SystemFile b = parse_system(serialize_system(a));
    CHECK(a.name == b.name);
    CHECK(a.vars == b.vars);
    CHECK(a.polys == b.polys);
    CHECK(a.degree() == b.degree());
    CHECK(a.bitsize() == b.bitsize());
  }
}

TEST_CASE("system file errors carry line numbers") {
  auto message = [](const std::string& text) {
    try {
      parse_system(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("1:1,0\n").find("line 1") != std::string::npos);
  CHECK(message("vars: x y\n1:1,0\n1:1,0,0\n").find("line 3") != std::string::npos);
  CHECK(message("vars: x y\nd: two\n").find("line 2") != std::string::npos);
  CHECK(message("vars: x y\nvars: x y\n") != "no error");
  CHECK_THROWS_AS(load_system("/nonexistent/none.sys"), ParseError);
}

TEST_CASE("oracle examples") {
  RootOracle2D cl(parse_poly("1:2,0;1:0,2;-2:0,0"), parse_poly("1:1,0;-1:0,1"));
  REQUIRE(cl.roots().size() == 2);
  OracleRoot r0 = cl.roots()[0], r1 = cl.roots()[1];
  CHECK(cl.compare(r0, 0, -1) == 0);
  CHECK(cl.compare(r0, 1, -1) == 0);
  CHECK(cl.compare(r1, 0, 1) == 0);
  CHECK(cl.compare(r1, 1, 1) == 0);

  RootOracle2D one(parse_poly("1:1,0;-1:0,0"), parse_poly("1:0,1;-1:0,0"));
  REQUIRE(one.roots().size() == 1);
  CHECK(one.roots()[0].x.exact_point == Rational(1));

  CHECK(oracle_roots_2d(parse_poly("1:2,0;1:0,2;1:0,0"), parse_poly("1:1,0;-1:0,1")).empty());

  RootOracle2D irr(parse_poly("1:2,0;1:0,2;-4:0,0"), parse_poly("1:1,1;-1:0,0"));
  REQUIRE(irr.roots().size() == 4);
  for (auto r : irr.roots()) {
    irr.refine(r, frac(1, 1 << 20));
    CHECK(r.x.hi - r.x.lo <= frac(1, 1 << 20));
    CHECK(r.y.hi - r.y.lo <= frac(1, 1 << 20));
  }
  CHECK_THROWS_AS(RootOracle2D(parse_poly("1:1,0;-1:0,1"), parse_poly("2:1,0;-2:0,1")), PositiveDimensional);
}

TEST_CASE("oracle and Milne isolator agree on the corpus") {
  for (const auto& path : bivariate_corpus()) {
    CAPTURE(path);
    SystemFile s = load_system(path);
    RootOracle2D oracle(s.polys[0], s.polys[1]);
    IsolationResult res = isolate(s.polys[0], s.polys[1]);
    CHECK(static_cast<std::size_t>(res.initial_count) == oracle.roots().size());
    REQUIRE(res.boxes.size() == oracle.roots().size());
    for (std::size_t i = 0; i < res.boxes.size(); ++i) {
      const IsolationBox& b = res.boxes[i];
      int hits = 0;
      for (auto r : oracle.roots())
        hits += oracle.compare(r, 0, b.x_lo) >= 0 && oracle.compare(r, 0, b.x_hi) < 0 &&
                oracle.compare(r, 1, b.y_lo) >= 0 && oracle.compare(r, 1, b.y_hi) < 0;
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("bounds hold on every corpus system") {
  for (const auto& path : bivariate_corpus()) {
    CAPTURE(path);
    ValidationReport rep = validate_bounds(load_system(path));
    CHECK(rep.failures() == 0);
    for (const auto& row : rep.rows) {
      CAPTURE(row.bound);
      CHECK(row.verdict != Verdict::fail);
      if (rep.toric_roots > 0 && row.bound.find("coord") != std::string::npos) CHECK(row.verdict == Verdict::pass);
    }
  }
}

TEST_CASE("validation on the Canny system") {
  ValidationReport rep = validate_bounds(load_system(std::string(DMM_CORPUS_DIR) + "/canny_5.sys"));
  CHECK(rep.real_roots == 2);
  CHECK(rep.toric_roots == 1);
  bool saw_dense = false;
  for (const auto& row : rep.rows) {
    if (row.bound != "dense_coord_lower") continue;
    saw_dense = true;
    CHECK(row.verdict == Verdict::pass);
    CHECK(row.measured_log2 == doctest::Approx(-10.0));
  }
  CHECK(saw_dense);
}

TEST_CASE("JSON reports") {
  SystemFile s = load_system(std::string(DMM_CORPUS_DIR) + "/circle_line.sys");
  auto iso = to_json(isolate(s.polys[0], s.polys[1]));
  REQUIRE(iso["boxes"].size() == 2);
  CHECK(iso["boxes"][0]["count"] == 1);
  CHECK(iso["boxes"][0]["x"].size() == 2);
  CHECK(iso["stats"].contains("oracle_calls"));
  CHECK(iso["stats"].contains("bound_value"));

  auto roots = to_json(oracle_roots_2d(s.polys[0], s.polys[1]));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0]["x"] == "-1");
  CHECK(roots[1]["y"] == "1");

  auto rep = to_json(validate_bounds(s));
  CHECK(rep["failures"] == 0);
  CHECK(rep["rows"].size() > 5);
  auto parsed = nlohmann::ordered_json::parse(rep.dump());
  CHECK(parsed == rep);
  CHECK(fixed3(-10) == "-10.000");
}

TEST_CASE("reports are deterministic") {
  SystemFile s = load_system(std::string(DMM_CORPUS_DIR) + "/conic_pair.sys");
  CHECK(to_json(validate_bounds(s)).dump() == to_json(validate_bounds(s)).dump());
  CHECK(to_json(isolate(s.polys[0], s.polys[1])).dump() == to_json(isolate(s.polys[0], s.polys[1])).dump());
}
