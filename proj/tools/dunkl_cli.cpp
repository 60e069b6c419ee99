#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dunkl/constants.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/field_catalog.hpp"
#include "dunkl/fields.hpp"
#include "dunkl/kernels.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/rearrange.hpp"
#include "dunkl/root_system.hpp"
#include "dunkl/verify.hpp"

namespace {

using dunkl::RootSystem;
using dunkl::ScalarField;
using nlohmann::json;

Eigen::VectorXd parse_vector(const std::string& text, int dim) {
  std::vector<double> vals;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) vals.push_back(std::stod(tok));
  if (static_cast<int>(vals.size()) != dim)
    throw dunkl::Error(dunkl::ErrorCode::Validation,
                       "expected " + std::to_string(dim) + " comma-separated coordinates");
  Eigen::VectorXd x(dim);
  for (int i = 0; i < dim; ++i) x[i] = vals[i];
  return x;
}

ScalarField find_field(const RootSystem& rs, const std::string& name, unsigned long seed) {
  for (const ScalarField& f : dunkl::default_test_family(rs, seed))
    if (f.name == name) return f;
  for (const dunkl::Chamber& ch : dunkl::enumerate_chambers(rs))
    for (const ScalarField& f : dunkl::chamber_test_family(rs, ch, seed, 3))
      if (f.name == name) return f;
  throw dunkl::Error(dunkl::ErrorCode::Validation, "unknown field name: " + name);
}

void emit(const json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out_path);
    os << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical harness for rational Dunkl analysis: weighted quadrature, "
               "heat semigroup, sharp constants, rearrangement, and inequality checks"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string rs_spec, out_path, field_name = "gaussian", csv_prefix, cells_path;
  unsigned long seed = 42;
  int threads = 1;
  double tol_scale = 1.0;
  app.add_option("--rs", rs_spec, "root system: a1:k=1, a1xN:k=..., a2:k=..., b2:k=...,"
                                  " i2m:m=5,k=..., or a JSON file path")
      ->required();
  app.add_option("--out", out_path, "write the JSON report to this file (default stdout)");
  app.add_option("--seed", seed, "seed for the deterministic test-field family");

  auto* c_const = app.add_subcommand("constants", "closed-form constants report");
  double p_exp = 2.0;
  c_const->add_option("--p", p_exp, "Lebesgue exponent for the Weyl constant");

  auto* c_quad = app.add_subcommand("quad", "weighted L^p norm of a named test field");
  double quad_p = 2.0, quad_tol = 1e-8;
  c_quad->add_option("--field", field_name, "field name from the seeded family");
  c_quad->add_option("--p", quad_p, "exponent (inf for the sup norm not supported here)");
  c_quad->add_option("--tol", quad_tol, "relative quadrature tolerance");
  c_quad->add_option("--dump-cells", cells_path, "write the refinement cells as CSV");

  auto* c_heat = app.add_subcommand("heat", "apply the heat semigroup at a point");
  double heat_t = 0.5;
  std::string heat_x = "0";
  c_heat->add_option("--field", field_name, "field name from the seeded family");
  c_heat->add_option("--t", heat_t, "time parameter (t >= 0)");
  c_heat->add_option("--x", heat_x, "evaluation point, comma-separated");

  auto* c_tr = app.add_subcommand("transform", "Dunkl transform of a named field");
  std::string tr_xi = "0";
  c_tr->add_option("--field", field_name, "field name from the seeded family");
  c_tr->add_option("--xi", tr_xi, "frequency point, comma-separated");

  auto* c_besov = app.add_subcommand("besov", "heat-semigroup Besov norm (grid supremum)");
  double besov_s = -0.5, besov_lo = 1e-3, besov_hi = 1e3;
  int besov_n = 61;
  c_besov->add_option("--field", field_name, "field name from the seeded family");
  c_besov->add_option("--s", besov_s, "smoothness parameter (s < 0)");
  c_besov->add_option("--tmin", besov_lo, "smallest grid time");
  c_besov->add_option("--tmax", besov_hi, "largest grid time");
  c_besov->add_option("--tpoints", besov_n, "grid size");

  auto* c_re = app.add_subcommand("rearrange", "decreasing rearrangement of a chamber field");
  double re_p = 2.0;
  int re_levels = 200;
  c_re->add_option("--field", field_name, "field name (chamber family names end in -chI)");
  c_re->add_option("--p", re_p, "norm exponent reported for field and rearrangement");
  c_re->add_option("--levels", re_levels, "size of the level grid");

  auto* c_ver = app.add_subcommand("verify", "run the inequality/identity check suite");
  std::string suite = "all";
  bool timing = false;
  int refine = 1, probe = 200;
  c_ver->add_option("--suite", suite, "'all' or comma-separated check names");
  c_ver->add_option("--threads", threads, "worker threads (results identical for any count)");
  c_ver->add_option("--tol-scale", tol_scale, "multiplies every check tolerance");
  c_ver->add_option("--refine", refine, "multiplies grid densities (stability probes)");
  c_ver->add_option("--probe-fields", probe, "fields in the conjecture probe");
  c_ver->add_option("--csv", csv_prefix, "write one CSV table per check to PREFIX<name>.csv");
  c_ver->add_flag("--timing", timing, "include wall time in the report");

  for (auto* sc : app.get_subcommands({})) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::cout << app.help();
      return 0;
    }
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    RootSystem rs = dunkl::parse_root_system_spec(rs_spec);
    if (c_const->parsed()) {
      const dunkl::ConstantsReport rep = dunkl::constants_report(rs, p_exp);
      json j = dunkl::constants_to_json(rep);
      j["p"] = p_exp;
      j["root_system"] = json::parse(dunkl::root_system_to_json(rs));
      emit(j, out_path);
    } else if (c_quad->parsed()) {
      const ScalarField f = find_field(rs, field_name, seed);
      auto integrand = [&](const Eigen::VectorXd& x) {
        return std::pow(std::abs(f.value(x)), quad_p);
      };
      std::vector<dunkl::CellRecord> cells;
      const dunkl::IntegralResult r =
          dunkl::integrate_field(rs, f, integrand, dunkl::WeightedDomain::full_space(),
                                 quad_tol, quad_p, cells_path.empty() ? nullptr : &cells);
      if (!cells_path.empty()) {
        std::ofstream os(cells_path);
        os << "lo,hi,contribution\n";
        for (const auto& c : cells) {
          for (int i = 0; i < c.lo.size(); ++i) os << (i ? " " : "") << c.lo[i];
          os << ",";
          for (int i = 0; i < c.hi.size(); ++i) os << (i ? " " : "") << c.hi[i];
          char buf[40];
          std::snprintf(buf, sizeof(buf), ",%.17g\n", c.contribution);
          os << buf;
        }
      }
      emit(json{{"field", f.name},
                {"p", quad_p},
                {"lp_norm", std::pow(std::max(r.value, 0.0), 1.0 / quad_p)},
                {"integral", r.value},
                {"error_estimate", r.error_estimate},
                {"cells_used", r.cells_used}},
           out_path);
    } else if (c_heat->parsed()) {
      const ScalarField f = find_field(rs, field_name, seed);
      const Eigen::VectorXd x = parse_vector(heat_x, rs.dimension);
      emit(json{{"field", f.name},
                {"t", heat_t},
                {"value", dunkl::heat_apply(rs, f, heat_t, x)}},
           out_path);
    } else if (c_tr->parsed()) {
      const ScalarField f = find_field(rs, field_name, seed);
      const Eigen::VectorXd xi = parse_vector(tr_xi, rs.dimension);
      const std::complex<double> v = dunkl::dunkl_transform(rs, f, xi);
      emit(json{{"field", f.name}, {"real", v.real()}, {"imag", v.imag()}}, out_path);
    } else if (c_besov->parsed()) {
      const ScalarField f = find_field(rs, field_name, seed);
      const double b =
          dunkl::besov_norm(rs, f, besov_s, dunkl::log_grid(besov_lo, besov_hi, besov_n));
      emit(json{{"field", f.name}, {"s", besov_s}, {"besov_norm", b}}, out_path);
    } else if (c_re->parsed()) {
      const ScalarField f = find_field(rs, field_name, seed);
      const auto chambers = dunkl::enumerate_chambers(rs);
      const auto grid = dunkl::default_level_grid(rs, f, re_levels);
      const dunkl::RadialProfile prof =
          dunkl::decreasing_rearrangement(rs, f, chambers.front().sign, grid);
      const double rend = dunkl::profile_support_radius(prof, 2.0);
      emit(json{{"field", f.name},
                {"p", re_p},
                {"field_lp", dunkl::lp_norm(rs, f, re_p, dunkl::WeightedDomain::full_space())},
                {"rearranged_lp", dunkl::profile_lp_norm(rs, prof, re_p, rend * 1.2)},
                {"support_radius", rend}},
           out_path);
    } else if (c_ver->parsed()) {
      dunkl::SuiteConfig cfg;
      cfg.seed = seed;
      cfg.threads = threads;
      cfg.tol_scale = tol_scale;
      cfg.refine_factor = refine;
      cfg.probe_fields = probe;
      cfg.include_timing = timing;
      std::vector<std::string> names;
      if (suite != "all") {
        std::stringstream ss(suite);
        std::string tok;
        while (std::getline(ss, tok, ',')) names.push_back(tok);
      }
      const dunkl::Report rep = dunkl::run_suite(rs, cfg, names);
      for (const dunkl::CheckResult& r : rep.results)
        std::fprintf(stderr, "%-20s %s\n", r.name.c_str(),
                     dunkl::check_status_name(r.status));
      if (!csv_prefix.empty())
        for (const dunkl::CheckResult& r : rep.results) {
          std::ofstream os(csv_prefix + r.name + ".csv");
          os << dunkl::check_result_csv(r);
        }
      emit(dunkl::report_to_json(rep), out_path);
      return rep.all_passed() ? 0 : 1;
    }
  } catch (const dunkl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
