#include "mms/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mms/errors.hpp"

namespace mms::io {

namespace {

using json = nlohmann::ordered_json;

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return j;
}

std::vector<double> as_vector(const json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) throw ParseError(what + " must contain numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

void write_text(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot write " + path);
    out << content;
    if (!out) throw ParseError("short write to " + path);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw ParseError("cannot finalize " + path);
  }
}

SpacePtr load_space(const std::string& path) {
  const json j = parse_file(path);
  if (!j.contains("dist") || !j.contains("weight")) {
    throw ParseError(path + ": space file needs dist and weight");
  }
  if (!j["dist"].is_array()) throw ParseError(path + ": dist must be a matrix");
  std::vector<std::vector<double>> dist;
  for (const auto& row : j["dist"]) dist.push_back(as_vector(row, "dist row"));
  std::vector<double> weight = as_vector(j["weight"], "weight");
  std::vector<std::vector<double>> coords;
  if (j.contains("coords")) {
    for (const auto& row : j["coords"]) coords.push_back(as_vector(row, "coords row"));
  }
  try {
    return MetricSpace::from_matrix(dist, std::move(weight), std::move(coords));
  } catch (const std::invalid_argument& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_space(const MetricSpace& space, const std::string& path) {
  json j;
  json dist = json::array();
  for (int i = 0; i < space.size(); ++i) {
    json row = json::array();
    for (int k = 0; k < space.size(); ++k) row.push_back(space.dist(i, k));
    dist.push_back(std::move(row));
  }
  j["dist"] = std::move(dist);
  j["weight"] = space.weights();
  if (space.has_coords()) {
    json coords = json::array();
    for (int i = 0; i < space.size(); ++i) {
      json row = json::array();
      for (int a = 0; a < space.coord_dim(); ++a) row.push_back(space.coord(i, a));
      coords.push_back(std::move(row));
    }
    j["coords"] = std::move(coords);
  }
  write_text(path, j.dump(2) + "\n");
}

Measure load_measure(const std::string& path, const SpacePtr& space) {
  const json j = parse_file(path);
  if (!j.contains("density")) throw ParseError(path + ": measure file needs density");
  std::vector<double> phi = as_vector(j["density"], "density");
  if (static_cast<int>(phi.size()) != space->size()) {
    throw MismatchError(path + ": density length " + std::to_string(phi.size()) +
                        " does not match space size " + std::to_string(space->size()));
  }
  try {
    return Measure(space, std::move(phi));
  } catch (const std::invalid_argument& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_measure(const Measure& m, const std::string& path, const std::string& space_path) {
  json j;
  j["density"] = m.densities();
  if (!space_path.empty()) j["space"] = space_path;
  write_text(path, j.dump(2) + "\n");
}

PointFunction load_point_function(const std::string& path, const MetricSpace& space) {
  const json j = parse_file(path);
  if (!j.contains("values")) throw ParseError(path + ": function file needs values");
  PointFunction f;
  f.values = as_vector(j["values"], "values");
  if (static_cast<int>(f.values.size()) != space.size()) {
    throw MismatchError(path + ": values length does not match space size");
  }
  return f;
}

void save_point_function(const PointFunction& f, const std::string& path) {
  json j;
  j["values"] = f.values;
  write_text(path, j.dump(2) + "\n");
}

Curve load_curve(const std::string& path, const SpacePtr& space) {
  const json j = parse_file(path);
  if (!j.contains("times") || !j.contains("densities")) {
    throw ParseError(path + ": curve file needs times and densities");
  }
  Curve c;
  c.times = as_vector(j["times"], "times");
  for (const auto& row : j["densities"]) {
    std::vector<double> phi = as_vector(row, "densities row");
    if (static_cast<int>(phi.size()) != space->size()) {
      throw MismatchError(path + ": state length does not match space size");
    }
    c.states.emplace_back(space, std::move(phi));
  }
  if (c.states.size() != c.times.size()) {
    throw ParseError(path + ": times and densities lengths differ");
  }
  c.lip_cert = j.value("lip_cert", 0.0);
  c.rectifiable = c.lip_cert <= 1.0 + 1e-6;
  return c;
}

void save_curve(const Curve& curve, const std::string& path) {
  json j;
  j["times"] = curve.times;
  json rows = json::array();
  for (const auto& s : curve.states) rows.push_back(s.densities());
  j["densities"] = std::move(rows);
  j["lip_cert"] = curve.lip_cert;
  write_text(path, j.dump(2) + "\n");
}

void save_gradient_field(const GradientField& field, const std::string& path) {
  json j;
  j["values"] = field.values;
  j["rho"] = field.rho;
  j["scales"] = field.scales;
  json excluded = json::array();
  for (int i = 0; i < static_cast<int>(field.excluded.size()); ++i) {
    if (field.excluded[i]) excluded.push_back(i);
  }
  j["excluded"] = std::move(excluded);
  write_text(path, j.dump(2) + "\n");
}

void save_compare_csv(const CompareReport& report, const std::string& path) {
  std::ostringstream os;
  os << "point,g_est,fd_grad,abs_err\n";
  os.precision(17);
  for (const auto& p : report.points) {
    os << p.point << ',' << p.g_est << ',' << p.fd_grad << ',' << p.abs_err << '\n';
  }
  write_text(path, os.str());
}

std::string dm_result_json(const DmResult& result, bool include_plan) {
  json j;
  j["epsilon"] = result.epsilon;
  j["matched_mass"] = result.matched_mass;
  if (include_plan) {
    json plan = json::array();
    for (const auto& e : result.plan.entries) {
      plan.push_back(json::array({e.src, e.dst, e.mass}));
    }
    j["plan"] = std::move(plan);
  }
  return j.dump(2) + "\n";
}

std::string norm_result_json(const PartitionNorm& result, bool include_partition) {
  json j;
  j["norm"] = result.norm;
  if (include_partition) {
    json blocks = json::array();
    for (const auto& b : result.partition) blocks.push_back(b);
    j["partition"] = std::move(blocks);
  }
  return j.dump(2) + "\n";
}

std::string w1_result_json(double value) {
  json j;
  j["w1"] = value;
  return j.dump(2) + "\n";
}

std::string curve_verdict_json(const Curve& curve) {
  json j;
  j["lip_cert"] = curve.lip_cert;
  j["rectifiable"] = curve.rectifiable;
  j["mass_drift"] = mass_drift(curve);
  j["states"] = curve.steps();
  return j.dump(2) + "\n";
}

std::string report_json(const std::vector<SuiteReport>& reports) {
  json all = json::array();
  int failed = 0;
  for (const auto& r : reports) {
    json j;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["instances"] = r.instances;
    json checks = json::array();
    for (const auto& c : r.checks) {
      json cj;
      cj["name"] = c.name;
      cj["pass"] = c.pass;
      cj["detail"] = c.detail;
      checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["failed"] = r.failed();
    failed += r.failed();
    all.push_back(std::move(j));
  }
  json top;
  top["suites"] = std::move(all);
  top["failed"] = failed;
  return top.dump(2) + "\n";
}

}  // namespace mms::io
