#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "mms/errors.hpp"
#include "mms/io.hpp"

using namespace mms;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/mms_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("space round trip") {
  TempFile f("space.json");
  auto sp = MetricSpace::grid(2, {3, 3}, 0.5);
  io::save_space(*sp, f.path);
  auto back = io::load_space(f.path);
  REQUIRE(back->size() == sp->size());
  for (int i = 0; i < sp->size(); ++i) {
    CHECK(back->weight(i) == sp->weight(i));
    for (int j = 0; j < sp->size(); ++j) CHECK(back->dist(i, j) == sp->dist(i, j));
  }
  CHECK(back->has_coords());
}

TEST_CASE("measure round trip and mismatch") {
  TempFile f("measure.json");
  auto sp = MetricSpace::grid(1, {4}, 0.5);
  const Measure m(sp, {0.25, 1, 0, 0.5});
  io::save_measure(m, f.path, "space.json");
  CHECK(approx_equal(io::load_measure(f.path, sp), m));
  auto small = MetricSpace::grid(1, {3}, 0.5);
  CHECK_THROWS_AS(io::load_measure(f.path, small), MismatchError);
}

TEST_CASE("parse errors carry the ParseError type") {
  TempFile f("broken.json");
  io::write_text(f.path, "{ not json");
  CHECK_THROWS_AS(io::load_space(f.path), ParseError);
  CHECK_THROWS_AS(io::load_space("/nonexistent/file.json"), ParseError);
  io::write_text(f.path, "{\"weight\": [1,1]}");
  CHECK_THROWS_AS(io::load_space(f.path), ParseError);
  // Invalid metric content is a parse-level failure too.
  io::write_text(f.path, R"({"dist": [[0,1],[2,0]], "weight": [1,1]})");
  CHECK_THROWS_AS(io::load_space(f.path), ParseError);
}

TEST_CASE("point function and curve round trips") {
  auto sp = MetricSpace::grid(1, {5}, 0.2);
  {
    TempFile f("fn.json");
    PointFunction fn{{1, 2, 3, 4, 5}};
    io::save_point_function(fn, f.path);
    const PointFunction back = io::load_point_function(f.path, *sp);
    CHECK(back.values == fn.values);
  }
  {
    TempFile f("curve.json");
    const HFunction h(2.0);
    std::vector<double> phi(5, 0.0);
    phi[1] = 1.0;
    const Curve c = translation_curve(sp, phi, 0, +1, 2, h);
    io::save_curve(c, f.path);
    const Curve back = io::load_curve(f.path, sp);
    REQUIRE(back.steps() == c.steps());
    CHECK(back.lip_cert == c.lip_cert);
    for (int k = 0; k < c.steps(); ++k) {
      CHECK(back.times[k] == c.times[k]);
      CHECK(approx_equal(back.states[k], c.states[k]));
    }
  }
}

TEST_CASE("result json is deterministic") {
  DmResult r;
  r.epsilon = 0.25;
  r.matched_mass = 1.5;
  r.plan.entries = {{0, 1, 0.75}};
  const std::string a = io::dm_result_json(r, true);
  const std::string b = io::dm_result_json(r, true);
  CHECK(a == b);
  CHECK(a.find("\"epsilon\"") != std::string::npos);
  CHECK(io::w1_result_json(0.5).find("0.5") != std::string::npos);
}

TEST_CASE("gradient field and csv writers") {
  TempFile f("field.json");
  GradientField field;
  field.values = {0, 1, 2};
  field.excluded = {1, 0, 0};
  field.rho = 0.2;
  field.scales = {0.1, 0.2};
  io::save_gradient_field(field, f.path);
  const std::string text = slurp(f.path);
  CHECK(text.find("\"excluded\": [\n    0\n  ]") != std::string::npos);

  TempFile csv("cmp.csv");
  CompareReport rep;
  rep.points = {{3, 1.0, 1.5, 0.5}};
  io::save_compare_csv(rep, csv.path);
  CHECK(slurp(csv.path) == "point,g_est,fd_grad,abs_err\n3,1,1.5,0.5\n");
}
