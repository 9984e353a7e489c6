// robust-wald: MDPDE fitting, robust Wald-type tests, power tables,
// influence diagnostics, and chi-square inflation reports.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "robustwald/dataset.hpp"
#include "robustwald/models.hpp"
#include "robustwald/robustness.hpp"

using json = nlohmann::ordered_json;
using namespace rw;

namespace {

#ifndef ROBUST_WALD_VERSION
#define ROBUST_WALD_VERSION "0.0.0"
#endif

struct CommonConfig {
  std::string model_name;
  std::vector<std::string> beta_raw;
  double alpha = 0.05;
  double sigma_known = 1.0;
  std::string design_path;
  std::string data_path;
  std::string theta0_raw;
  int coord = -1;
  double coord_value = 0.0;
  std::string l_path;
  std::string l0_raw;
  std::string output_path;
  std::string format = "json";
  int round_digits = -1;
  long long seed = 0;
  bool quadrature = false;  // force the quadrature path for J/K/xi
};

std::vector<double> parse_list(const std::string& raw, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(raw);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(cell, &pos));
      if (pos != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw UsageError("cannot parse " + what + " entry '" + cell + "'");
    }
  }
  if (out.empty()) throw UsageError(what + " list is empty");
  return out;
}

std::vector<double> betas_of(const CommonConfig& cfg) {
  std::vector<double> betas;
  for (const std::string& raw : cfg.beta_raw) {
    for (double b : parse_list(raw, "--beta")) {
      if (b < 0.0) throw UsageError("--beta must be nonnegative");
      betas.push_back(b);
    }
  }
  if (betas.empty()) throw UsageError("at least one --beta required");
  return betas;
}

std::shared_ptr<ParametricModel> load_model(const CommonConfig& cfg,
                                            Matrix* design_out = nullptr) {
  if (cfg.model_name == "linreg") {
    if (cfg.design_path.empty()) {
      throw UsageError("linreg requires --design <csv>");
    }
    const Matrix design = read_csv(cfg.design_path).as_matrix();
    if (design_out != nullptr) *design_out = design;
    return make_model("linreg", cfg.sigma_known, &design);
  }
  return make_model(cfg.model_name, cfg.sigma_known);
}

std::vector<Vector> load_observations(const CommonConfig& cfg,
                                      const ParametricModel& model) {
  if (cfg.data_path.empty()) throw UsageError("--data <csv> required");
  const Dataset ds = read_csv(cfg.data_path);
  if (static_cast<int>(ds.columns.size()) != model.obs_dim()) {
    throw DataError("data has " + std::to_string(ds.columns.size()) +
                    " columns, model " + model.name() + " expects " +
                    std::to_string(model.obs_dim()));
  }
  return ds.rows;
}

Vector parse_theta0(const CommonConfig& cfg, const ParametricModel& model) {
  if (cfg.theta0_raw.empty()) throw UsageError("--theta0 required");
  Vector th = parse_list(cfg.theta0_raw, "--theta0");
  if (static_cast<int>(th.size()) != model.param_dim()) {
    throw UsageError("--theta0 needs " + std::to_string(model.param_dim()) +
                     " entries for model " + model.name());
  }
  return th;
}

// Returns nullopt when no restriction flags were given (simple null).
std::optional<Restriction> parse_restriction(const CommonConfig& cfg,
                                             const ParametricModel& model) {
  const int p = model.param_dim();
  if (cfg.coord >= 0) {
    if (cfg.coord >= p) throw UsageError("--coord out of range");
    return coordinate_restriction(cfg.coord, cfg.coord_value, p);
  }
  if (!cfg.l_path.empty()) {
    Matrix l = read_csv(cfg.l_path).as_matrix();
    if (static_cast<int>(l.rows()) == p - 1 && model.name() == "linreg") {
      // Constraints on the regression coefficients: pad a zero row for sigma.
      Matrix full(p, l.cols());
      for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(p); ++i)
        for (std::size_t j = 0; j < l.cols(); ++j) full(i, j) = l(i, j);
      l = full;
    }
    if (static_cast<int>(l.rows()) != p) {
      throw UsageError("--L must have one row per model parameter");
    }
    Vector l0(l.cols(), 0.0);
    if (!cfg.l0_raw.empty()) {
      l0 = parse_list(cfg.l0_raw, "--l0");
      if (l0.size() != l.cols()) {
        throw UsageError("--l0 length must match the columns of --L");
      }
    }
    return linear_restriction(l, l0);
  }
  return std::nullopt;
}

double round_to(double v, int digits) {
  if (digits < 0) return v;
  const double s = std::pow(10.0, digits);
  return std::round(v * s) / s;
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json config_json(const CommonConfig& cfg, const std::string& command) {
  json j;
  j["command"] = command;
  j["model"] = cfg.model_name;
  j["beta"] = cfg.beta_raw;
  j["alpha"] = cfg.alpha;
  j["sigma_known"] = cfg.sigma_known;
  j["design"] = cfg.design_path;
  j["data"] = cfg.data_path;
  j["theta0"] = cfg.theta0_raw;
  j["coord"] = cfg.coord;
  j["coord_value"] = cfg.coord_value;
  j["L"] = cfg.l_path;
  j["l0"] = cfg.l0_raw;
  j["format"] = cfg.format;
  j["round"] = cfg.round_digits;
  j["seed"] = cfg.seed;
  j["quadrature"] = cfg.quadrature;
  return j;
}

json envelope(const CommonConfig& cfg, const std::string& command) {
  json j;
  j["tool"] = "robust-wald";
  j["version"] = ROBUST_WALD_VERSION;
  j["config"] = config_json(cfg, command);
  return j;
}

void emit(const CommonConfig& cfg, const std::string& text) {
  if (cfg.output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output_path);
  if (!out) throw DataError("cannot open output file " + cfg.output_path);
  out << text;
}

void emit_json(const CommonConfig& cfg, const json& j) {
  emit(cfg, j.dump(2) + "\n");
}

// ---------------------------------------------------------------------------

int cmd_fit(const CommonConfig& cfg) {
  auto model = load_model(cfg);
  const auto data = load_observations(cfg, *model);
  json out = envelope(cfg, "fit");
  json results = json::array();
  FitOptions opts;
  opts.use_closed_forms = !cfg.quadrature;
  for (double beta : betas_of(cfg)) {
    const MdpdeFit f = fit(model, data, beta, std::nullopt, opts);
    json r;
    r["beta"] = beta;
    r["n"] = f.n;
    r["theta_hat"] = f.theta_hat;
    Vector se(f.theta_hat.size());
    for (std::size_t i = 0; i < se.size(); ++i) {
      se[i] = std::sqrt(f.sigma(i, i) / f.n);
    }
    r["standard_errors"] = se;
    r["sigma"] = to_json(f.sigma);
    r["objective_value"] = f.objective_value;
    results.push_back(r);
  }
  out["results"] = results;
  emit_json(cfg, out);
  return 0;
}

int cmd_test(const CommonConfig& cfg) {
  auto model = load_model(cfg);
  const auto data = load_observations(cfg, *model);
  const auto restriction = parse_restriction(cfg, *model);
  std::optional<Vector> theta0;
  if (!restriction) theta0 = parse_theta0(cfg, *model);
  json out = envelope(cfg, "test");
  json results = json::array();
  FitOptions opts;
  opts.use_closed_forms = !cfg.quadrature;
  for (double beta : betas_of(cfg)) {
    const MdpdeFit f = fit(model, data, beta, std::nullopt, opts);
    const WaldResult w = restriction
                             ? composite_wald(f, *restriction, cfg.alpha)
                             : simple_wald(f, *theta0, cfg.alpha,
                                           opts.use_closed_forms);
    json r;
    r["beta"] = beta;
    r["statistic"] = w.statistic;
    r["df"] = w.df;
    r["p_value"] = w.p_value;
    r["critical_value"] = w.critical_value;
    r["alpha"] = w.alpha;
    r["reject"] = w.reject;
    r["theta_hat"] = f.theta_hat;
    results.push_back(r);
  }
  out["results"] = results;
  emit_json(cfg, out);
  return 0;
}

int cmd_power_table(const CommonConfig& cfg, const std::string& d_raw,
                    const std::string& direction_raw) {
  auto model = load_model(cfg);
  const Vector theta0 = parse_theta0(cfg, *model);
  const auto restriction = parse_restriction(cfg, *model);
  const std::vector<double> ds = parse_list(d_raw, "--d");
  const std::vector<double> betas = betas_of(cfg);

  Vector direction(model->param_dim(), 0.0);
  if (!direction_raw.empty()) {
    direction = parse_list(direction_raw, "--direction");
    if (static_cast<int>(direction.size()) != model->param_dim()) {
      throw UsageError("--direction needs one entry per model parameter");
    }
  } else if (model->param_dim() == 1) {
    direction[0] = 1.0;
  } else if (cfg.coord >= 0) {
    direction[cfg.coord] = 1.0;
  } else {
    throw UsageError("--direction required for multi-parameter models");
  }

  std::vector<Vector> rows;
  for (double d : ds) {
    Vector row{d};
    for (double beta : betas) {
      ContiguousSpec spec;
      Vector dv(direction.size());
      for (std::size_t i = 0; i < dv.size(); ++i) dv[i] = d * direction[i];
      spec.d = dv;
      const double p = contiguous_power(
          *model, theta0, restriction ? &*restriction : nullptr, beta, spec,
          cfg.alpha, !cfg.quadrature);
      row.push_back(round_to(p, cfg.round_digits));
    }
    rows.push_back(row);
  }

  if (cfg.format == "csv") {
    std::ostringstream os;
    std::vector<std::string> header{"d"};
    for (double beta : betas) {
      std::ostringstream b;
      b << "beta=" << beta;
      header.push_back(b.str());
    }
    write_csv(os, header, rows, cfg.round_digits);
    emit(cfg, os.str());
    return 0;
  }
  json out = envelope(cfg, "power-table");
  out["d"] = ds;
  out["beta"] = betas;
  json table = json::array();
  for (const Vector& row : rows) {
    table.push_back(std::vector<double>(row.begin() + 1, row.end()));
  }
  out["power"] = table;
  emit_json(cfg, out);
  return 0;
}

int cmd_influence(const CommonConfig& cfg, const std::string& d_raw) {
  auto model = load_model(cfg);
  const Vector theta0 = parse_theta0(cfg, *model);
  const auto restriction = parse_restriction(cfg, *model);
  std::optional<Vector> d;
  if (!d_raw.empty()) {
    d = parse_list(d_raw, "--d");
    if (static_cast<int>(d->size()) != model->param_dim()) {
      throw UsageError("--d needs one entry per model parameter");
    }
  }

  std::vector<Vector> rows;
  const std::vector<double> betas = betas_of(cfg);
  for (double beta : betas) {
    const NullContext ctx =
        make_null_context(model, theta0, beta, !cfg.quadrature);
    const InfluenceReport rep = influence_grid(
        ctx, restriction ? &*restriction : nullptr, d ? &*d : nullptr,
        cfg.alpha);
    for (std::size_t i = 0; i < rep.grid.size(); ++i) {
      Vector row{beta};
      for (double c : rep.grid[i]) row.push_back(c);
      row.push_back(rep.if_norm[i]);
      row.push_back(rep.if2[i]);
      row.push_back(rep.pif_values[i]);
      rows.push_back(row);
    }
  }

  std::vector<std::string> header{"beta"};
  if (model->obs_dim() == 1) {
    header.push_back("x");
  } else {
    header.push_back("x1");
    header.push_back("x2");
  }
  header.insert(header.end(), {"if_norm", "if2", "pif"});

  if (cfg.format == "csv") {
    std::ostringstream os;
    write_csv(os, header, rows, cfg.round_digits);
    emit(cfg, os.str());
    return 0;
  }
  json out = envelope(cfg, "influence");
  out["columns"] = header;
  json data = json::array();
  for (const Vector& row : rows) data.push_back(row);
  out["rows"] = data;
  emit_json(cfg, out);
  return 0;
}

int cmd_csif(const CommonConfig& cfg, double epsilon, const std::string& point_raw) {
  auto model = load_model(cfg);
  const Vector theta0 = parse_theta0(cfg, *model);
  const auto restriction = parse_restriction(cfg, *model);
  if (point_raw.empty()) throw UsageError("--point required");
  const Vector point = parse_list(point_raw, "--point");
  if (static_cast<int>(point.size()) != model->obs_dim()) {
    throw UsageError("--point needs one entry per observation coordinate");
  }

  json out = envelope(cfg, "csif");
  json results = json::array();
  for (double beta : betas_of(cfg)) {
    const ContaminatedTruth truth{theta0, epsilon, point};
    const Restriction* r = restriction ? &*restriction : nullptr;
    const CsifReport rep = csif(*model, theta0, beta, truth, r);
    const double slope = csif_slope(*model, theta0, beta, point, r);
    const double slope_fd = csif_slope_fd(*model, theta0, beta, point, r);
    json j;
    j["beta"] = beta;
    j["epsilon"] = epsilon;
    j["point"] = point;
    j["eigenvalues"] = rep.eigenvalues;
    j["c_bar_trace"] = rep.c_bar_trace;
    j["c_bar_eigen"] = rep.c_bar_eigen;
    j["tau"] = rep.tau;
    j["slope_analytic"] = slope;
    j["slope_fd"] = slope_fd;
    j["slope_residual"] = std::abs(slope - slope_fd);
    results.push_back(j);
  }
  out["results"] = results;
  emit_json(cfg, out);
  return 0;
}

void add_common(CLI::App* cmd, CommonConfig& cfg, bool needs_model = true) {
  auto* m = cmd->add_option("--model", cfg.model_name,
                            "normal-loc|normal|weibull-shape|bivariate-normal|linreg");
  if (needs_model) m->required();
  cmd->add_option("--beta", cfg.beta_raw, "tuning parameter(s), comma separated");
  cmd->add_option("--alpha", cfg.alpha, "test level");
  cmd->add_option("--sigma-known", cfg.sigma_known,
                  "known scale for normal-loc");
  cmd->add_option("--design", cfg.design_path, "design matrix CSV (linreg)");
  cmd->add_option("--theta0", cfg.theta0_raw, "null parameter vector");
  cmd->add_option("--coord", cfg.coord,
                  "restrict theta[coord] = --coord-value (composite null)");
  cmd->add_option("--coord-value", cfg.coord_value, "value for --coord");
  cmd->add_option("--L", cfg.l_path, "restriction matrix CSV (L^T theta = l0)");
  cmd->add_option("--l0", cfg.l0_raw, "restriction constants");
  cmd->add_option("--output", cfg.output_path, "output path (default stdout)");
  cmd->add_option("--format", cfg.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--round", cfg.round_digits, "round output values");
  cmd->add_option("--seed", cfg.seed, "random seed (recorded in reports)");
  cmd->add_flag("--quadrature", cfg.quadrature,
                "force the quadrature path for J/K/xi");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust Wald-type tests via minimum density power divergence"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ROBUST_WALD_VERSION);

  CommonConfig cfg;
  std::string d_raw, direction_raw, point_raw;
  double epsilon = 0.0;

  CLI::App* c_fit = app.add_subcommand("fit", "fit the MDPDE");
  add_common(c_fit, cfg);
  c_fit->add_option("--data", cfg.data_path, "observation CSV")->required();

  CLI::App* c_test = app.add_subcommand("test", "Wald-type test");
  add_common(c_test, cfg);
  c_test->add_option("--data", cfg.data_path, "observation CSV")->required();

  CLI::App* c_power = app.add_subcommand("power-table",
                                         "contiguous power over a (d, beta) grid");
  add_common(c_power, cfg);
  c_power->add_option("--d", d_raw, "contiguous shift magnitudes")->required();
  c_power->add_option("--direction", direction_raw,
                      "parameter-space unit direction");

  CLI::App* c_infl = app.add_subcommand("influence",
                                        "influence curves on the default grid");
  add_common(c_infl, cfg);
  c_infl->add_option("--d", d_raw, "direction for the power influence function");

  CLI::App* c_csif = app.add_subcommand("csif", "chi-square inflation report");
  add_common(c_csif, cfg);
  c_csif->add_option("--epsilon", epsilon, "contamination mass");
  c_csif->add_option("--point", point_raw, "contamination point")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (c_fit->parsed()) return cmd_fit(cfg);
    if (c_test->parsed()) return cmd_test(cfg);
    if (c_power->parsed()) return cmd_power_table(cfg, d_raw, direction_raw);
    if (c_infl->parsed()) return cmd_influence(cfg, d_raw);
    if (c_csif->parsed()) return cmd_csif(cfg, epsilon, point_raw);
    throw UsageError("no command given");
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
