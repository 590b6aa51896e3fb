// mms: build spaces, compute transport distances, generate and validate
// curves, estimate gradient fields and run the verification suites.
//
// Exit codes: 0 ok, 1 verification failure, 2 parse/config error,
// 3 semantic mismatch (wrong space, unequal masses, ...).

#include <cstdlib>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mms/curve.hpp"
#include "mms/errors.hpp"
#include "mms/functional.hpp"
#include "mms/gradient.hpp"
#include "mms/io.hpp"
#include "mms/metric.hpp"
#include "mms/parallel.hpp"
#include "mms/verify.hpp"
#include "mms/wasserstein.hpp"

namespace {

int log_level() {
  static const int level = [] {
    const char* env = std::getenv("MMS_LOG");
    if (!env) return 2;
    const std::string v(env);
    if (v == "debug") return 0;
    if (v == "info") return 1;
    if (v == "warn") return 2;
    return 3;
  }();
  return level;
}

void log_info(const std::string& msg) {
  if (log_level() <= 1) std::cerr << "[mms] " << msg << "\n";
}

struct SpaceArgs {
  std::string space_path;
  std::string grid_spec;

  mms::SpacePtr resolve() const {
    if (!grid_spec.empty()) {
      // "dim,e1[xe2[xe3]],delta", e.g. "2,64x64,0.03125"
      std::istringstream is(grid_spec);
      std::string dim_s, ext_s, delta_s;
      if (!std::getline(is, dim_s, ',') || !std::getline(is, ext_s, ',') ||
          !std::getline(is, delta_s)) {
        throw mms::ParseError("--grid expects dim,extents,delta");
      }
      int dim = 0;
      double delta = 0.0;
      std::vector<int> extents;
      try {
        dim = std::stoi(dim_s);
        delta = std::stod(delta_s);
        std::istringstream es(ext_s);
        std::string tok;
        while (std::getline(es, tok, 'x')) extents.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw mms::ParseError("--grid expects numeric dim,extents,delta");
      }
      try {
        return mms::MetricSpace::grid(dim, extents, delta);
      } catch (const std::invalid_argument& e) {
        throw mms::ParseError(std::string("--grid: ") + e.what());
      }
    }
    if (space_path.empty()) throw mms::ParseError("need --space FILE or --grid SPEC");
    return mms::io::load_space(space_path);
  }
};

void add_space_options(CLI::App* cmd, SpaceArgs& args) {
  cmd->add_option("--space", args.space_path, "space JSON file");
  cmd->add_option("--grid", args.grid_spec, "grid spec dim,e1[xe2[xe3]],delta");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    mms::io::write_text(out_path, text);
    log_info("wrote " + out_path);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mass-transport metrics on finite metric measure spaces"};
  app.require_subcommand(1);

  int jobs = mms::default_jobs();
  app.add_option("--jobs", jobs, "worker threads (results are identical for any count)");

  // ---- dm ----
  auto* dm_cmd = app.add_subcommand("dm", "transport distance between two measures");
  SpaceArgs dm_space;
  add_space_options(dm_cmd, dm_space);
  std::string dm_a, dm_b, dm_out;
  double dm_h_exp = 2.0;
  bool dm_plan = false;
  dm_cmd->add_option("--a", dm_a, "first measure JSON")->required();
  dm_cmd->add_option("--b", dm_b, "second measure JSON")->required();
  dm_cmd->add_option("--h-exp", dm_h_exp, "mass penalty exponent (> 1)");
  dm_cmd->add_flag("--plan", dm_plan, "include the optimal plan in the output");
  dm_cmd->add_option("--out", dm_out, "write result JSON here instead of stdout");

  // ---- w1 ----
  auto* w1_cmd = app.add_subcommand("w1", "Wasserstein-1 distance (equal masses)");
  SpaceArgs w1_space;
  add_space_options(w1_cmd, w1_space);
  std::string w1_a, w1_b, w1_out;
  w1_cmd->add_option("--a", w1_a, "first measure JSON")->required();
  w1_cmd->add_option("--b", w1_b, "second measure JSON")->required();
  w1_cmd->add_option("--out", w1_out, "write result JSON here instead of stdout");

  // ---- curve ----
  auto* curve_cmd = app.add_subcommand("curve", "generate or validate curves of measures");
  curve_cmd->require_subcommand(1);

  auto* gen_cmd = curve_cmd->add_subcommand("gen", "generate a curve");
  SpaceArgs gen_space;
  add_space_options(gen_cmd, gen_space);
  std::string gen_kind, gen_measure, gen_measure_b, gen_out;
  int gen_axis = 0, gen_direction = 1, gen_steps = 1, gen_center = 0;
  double gen_radius = 0.0, gen_h_exp = 2.0;
  bool gen_validate = false;
  gen_cmd->add_option("--kind", gen_kind, "translation | dilation | mixture")->required();
  gen_cmd->add_option("--measure", gen_measure, "density to move (translation/mixture)");
  gen_cmd->add_option("--measure-b", gen_measure_b, "mixture endpoint");
  gen_cmd->add_option("--axis", gen_axis, "translation axis");
  gen_cmd->add_option("--direction", gen_direction, "+1 or -1");
  gen_cmd->add_option("--steps", gen_steps, "number of steps");
  gen_cmd->add_option("--center", gen_center, "dilation center point index");
  gen_cmd->add_option("--radius", gen_radius, "dilation start radius");
  gen_cmd->add_option("--h-exp", gen_h_exp, "mass penalty exponent (> 1)");
  gen_cmd->add_flag("--validate", gen_validate, "measure the constant via the metric");
  gen_cmd->add_option("--out", gen_out, "write the curve JSON here");

  auto* val_cmd = curve_cmd->add_subcommand("validate", "measure a curve's constant");
  SpaceArgs val_space;
  add_space_options(val_cmd, val_space);
  std::string val_curve, val_out;
  double val_h_exp = 2.0;
  val_cmd->add_option("--curve", val_curve, "curve JSON")->required();
  val_cmd->add_option("--h-exp", val_h_exp, "mass penalty exponent (> 1)");
  val_cmd->add_option("--out", val_out, "write the verdict JSON here instead of stdout");

  // ---- grad ----
  auto* grad_cmd = app.add_subcommand("grad", "gradient field and classical comparison");
  SpaceArgs grad_space;
  add_space_options(grad_cmd, grad_space);
  std::string grad_f, grad_out, grad_csv;
  double grad_p = 2.0, grad_rho = 0.0, grad_h_exp = 2.0;
  std::string grad_scales = "1,2,4";
  bool grad_raw = false;
  grad_cmd->add_option("--f", grad_f, "point function JSON")->required();
  grad_cmd->add_option("--p", grad_p, "integrability exponent");
  grad_cmd->add_option("--rho", grad_rho, "probe ball radius (default 2 * spacing)");
  grad_cmd->add_option("--scales", grad_scales, "evaluation offsets in units of spacing");
  grad_cmd->add_flag("--raw-scales", grad_raw, "report the raw sup instead of the extrapolation");
  grad_cmd->add_option("--h-exp", grad_h_exp, "mass penalty exponent (> 1)");
  grad_cmd->add_option("--out", grad_out, "write the field JSON here");
  grad_cmd->add_option("--csv", grad_csv, "write the per-point comparison CSV here");

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand("verify", "run the property suites");
  std::string verify_suite = "all", verify_out;
  int verify_n = 50;
  std::uint64_t verify_seed = 0;
  double verify_h_exp = 2.0;
  verify_cmd->add_option("--suite", verify_suite, "metric | norms | gradients | all");
  verify_cmd->add_option("--n", verify_n, "instances per check");
  verify_cmd->add_option("--seed", verify_seed, "random seed");
  verify_cmd->add_option("--h-exp", verify_h_exp, "mass penalty exponent (> 1)");
  verify_cmd->add_option("--out", verify_out, "write the report JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*dm_cmd) {
      const mms::SpacePtr sp = dm_space.resolve();
      const mms::Measure a = mms::io::load_measure(dm_a, sp);
      const mms::Measure b = mms::io::load_measure(dm_b, sp);
      const mms::HFunction h(dm_h_exp);
      const mms::DmResult res = mms::dm_detailed(a, b, h);
      log_info("dm = " + std::to_string(res.epsilon));
      emit(mms::io::dm_result_json(res, dm_plan), dm_out);
    } else if (*w1_cmd) {
      const mms::SpacePtr sp = w1_space.resolve();
      const mms::Measure a = mms::io::load_measure(w1_a, sp);
      const mms::Measure b = mms::io::load_measure(w1_b, sp);
      emit(mms::io::w1_result_json(mms::w1(a, b)), w1_out);
    } else if (*gen_cmd) {
      const mms::SpacePtr sp = gen_space.resolve();
      const mms::HFunction h(gen_h_exp);
      mms::Curve curve;
      if (gen_kind == "translation") {
        if (gen_measure.empty()) throw mms::ParseError("translation needs --measure");
        const mms::Measure m = mms::io::load_measure(gen_measure, sp);
        curve = mms::translation_curve(sp, m.densities(), gen_axis, gen_direction, gen_steps,
                                       h, gen_validate);
      } else if (gen_kind == "dilation") {
        curve = mms::dilation_curve(sp, gen_center, gen_radius, gen_steps, h, gen_validate);
      } else if (gen_kind == "mixture") {
        if (gen_measure.empty() || gen_measure_b.empty()) {
          throw mms::ParseError("mixture needs --measure and --measure-b");
        }
        const mms::Measure a = mms::io::load_measure(gen_measure, sp);
        const mms::Measure b = mms::io::load_measure(gen_measure_b, sp);
        auto states = mms::mixture_path(a, b, gen_steps);
        std::vector<double> times(states.size());
        for (std::size_t k = 0; k < times.size(); ++k) {
          times[k] = static_cast<double>(k) / gen_steps;
        }
        if (gen_validate) {
          mms::ValidateOptions vopts;
          vopts.jobs = jobs;
          curve = mms::validate_curve(std::move(states), std::move(times), h, vopts);
        } else {
          // No certificate measured; mixtures are typically not rectifiable.
          curve.states = std::move(states);
          curve.times = std::move(times);
          curve.lip_cert = std::numeric_limits<double>::infinity();
          curve.rectifiable = false;
        }
      } else {
        throw mms::ParseError("unknown curve kind: " + gen_kind);
      }
      std::cout << mms::io::curve_verdict_json(curve);
      if (!gen_out.empty()) {
        mms::io::save_curve(curve, gen_out);
        log_info("wrote " + gen_out);
      }
    } else if (*val_cmd) {
      const mms::SpacePtr sp = val_space.resolve();
      const mms::Curve loaded = mms::io::load_curve(val_curve, sp);
      mms::ValidateOptions vopts;
      vopts.jobs = jobs;
      const mms::Curve measured =
          mms::validate_curve(loaded.states, loaded.times, mms::HFunction(val_h_exp), vopts);
      emit(mms::io::curve_verdict_json(measured), val_out);
    } else if (*grad_cmd) {
      const mms::SpacePtr sp = grad_space.resolve();
      if (!sp->grid_info()) {
        throw mms::ParseError("grad requires a grid space (--grid)");
      }
      const mms::PointFunction f = mms::io::load_point_function(grad_f, *sp);
      mms::GradientFieldOptions opts;
      opts.rho = grad_rho;
      opts.jobs = jobs;
      opts.richardson = !grad_raw;
      {
        std::istringstream is(grad_scales);
        std::string tok;
        while (std::getline(is, tok, ',')) {
          try {
            opts.scales.push_back(std::stod(tok) * sp->grid_info()->delta);
          } catch (const std::exception&) {
            throw mms::ParseError("--scales expects comma-separated numbers");
          }
        }
      }
      const mms::HFunction h(grad_h_exp);
      const mms::CompareReport rep = mms::euclidean_compare(sp, f, grad_p, h, opts);
      log_info("sobolev estimate " + std::to_string(rep.sobolev_estimated) +
               " vs classical " + std::to_string(rep.sobolev_classical));
      if (!grad_csv.empty()) {
        mms::io::save_compare_csv(rep, grad_csv);
        log_info("wrote " + grad_csv);
      }
      if (!grad_out.empty()) {
        mms::io::save_gradient_field(mms::gradient_field(sp, f, h, opts), grad_out);
        log_info("wrote " + grad_out);
      }
      std::ostringstream verdict;
      verdict.precision(17);
      verdict << "{\n  \"sobolev_estimated\": " << rep.sobolev_estimated
              << ",\n  \"sobolev_classical\": " << rep.sobolev_classical
              << ",\n  \"norm_rel_error\": " << rep.norm_rel_error
              << ",\n  \"max_abs_err\": " << rep.max_abs_err << "\n}\n";
      std::cout << verdict.str();
    } else if (*verify_cmd) {
      mms::VerifyConfig cfg;
      cfg.instances = verify_n;
      cfg.seed = verify_seed;
      cfg.h_exponent = verify_h_exp;
      std::vector<mms::SuiteReport> reports;
      if (verify_suite == "metric") {
        reports.push_back(mms::verify_metric(cfg));
      } else if (verify_suite == "norms") {
        reports.push_back(mms::verify_norms(cfg));
      } else if (verify_suite == "gradients") {
        reports.push_back(mms::verify_gradients(cfg));
      } else if (verify_suite == "all") {
        reports = mms::verify_all(cfg);
      } else {
        throw mms::ParseError("unknown suite: " + verify_suite);
      }
      int failed = 0;
      for (const auto& r : reports) {
        failed += r.failed();
        for (const auto& c : r.checks) {
          std::cerr << (c.pass ? "pass " : "FAIL ") << r.suite << "/" << c.name << ": "
                    << c.detail << "\n";
        }
      }
      emit(mms::io::report_json(reports), verify_out);
      if (failed > 0) return 1;
    }
  } catch (const mms::MismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const mms::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
