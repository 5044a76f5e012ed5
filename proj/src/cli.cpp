#include "weaknorm/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "weaknorm/io.hpp"
#include "weaknorm/norms.hpp"
#include "weaknorm/random_functions.hpp"
#include "weaknorm/sharpness.hpp"

namespace weaknorm::cli {

namespace {

constexpr const char* kDivergenceRule =
    "diverged when the sup grows by more than 10% at each of two successive "
    "3-decade widenings of the t range, or when int_0^t du/w(u) does not converge";
constexpr const char* kOrientation =
    "K = H/G = ||f_k||_w / ||f_k||*_w (Marcinkiewicz over weak norm of the extremal "
    "family); the reciprocal G/H would be <= 1";

void emit(std::ostream& out, const nlohmann::ordered_json& j) { out << j.dump(2) << '\n'; }

void csv_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
  out << '\n';
}

std::string bool_cell(bool b) { return b ? "true" : "false"; }

std::vector<std::string> kappa_cells(const KappaReport& r) {
  return {format_number(r.kappa), format_number(r.G), format_number(r.H), format_number(r.K),
          r.closed_form_K ? format_number(*r.closed_form_K) : ""};
}

const std::vector<std::string> kNormHeader = {
    "weak_norm",    "marcinkiewicz_norm", "gamma_value",   "ratio",         "lower_ok",
    "upper_ok",     "argmax_t_weak",      "argmax_t_marc", "gamma_diverged", "tail_warning"};

std::vector<std::string> norm_cells(const NormReport& r) {
  return {format_number(r.weak_norm),     format_number(r.marcinkiewicz_norm),
          format_number(r.gamma_value),   format_number(r.ratio),
          bool_cell(r.lower_ok),          bool_cell(r.upper_ok),
          format_number(r.argmax_t_weak), format_number(r.argmax_t_marc),
          bool_cell(r.gamma_diverged),    bool_cell(r.tail_warning)};
}

int run_gamma(const RunConfig& config, const Weight& w, std::ostream& out) {
  const GammaEstimate est = gamma(w, {}, config.tol);
  if (config.output == OutputFormat::csv) {
    csv_row(out, {"weight", "value", "argmax_t", "grid_size", "quadrature_tolerance", "diverged"});
    csv_row(out, {w.spec(), format_number(est.value), format_number(est.argmax_t),
                  std::to_string(est.grid_size), format_number(est.quadrature_tolerance),
                  bool_cell(est.diverged)});
  } else {
    nlohmann::ordered_json j;
    j["weight"] = to_json(w);
    j.update(to_json(est));
    j["divergence_rule"] = kDivergenceRule;
    emit(out, j);
  }
  return kExitOk;
}

int run_norms(const RunConfig& config, const Weight& w, std::ostream& out) {
  if (!config.input_path) throw InputError("norms: --input is required");
  const StepFunction f = read_step_function(*config.input_path, config.normalize);
  const NormReport report = verify_bilateral(f, w, gamma(w, {}, config.tol));
  if (config.output == OutputFormat::csv) {
    csv_row(out, kNormHeader);
    csv_row(out, norm_cells(report));
  } else {
    nlohmann::ordered_json j;
    j["weight"] = to_json(w);
    j["pieces"] = f.size();
    j.update(to_json(report));
    emit(out, j);
  }
  return exit_code_for(report);
}

bool kappa_report_ok(const KappaReport& r) {
  return r.G <= r.H + kInequalitySlack && r.K >= 1.0 - kInequalitySlack;
}

int run_sharpness(const RunConfig& config, const Weight& w, std::ostream& out) {
  if (!config.kappa) throw InputError("sharpness: --kappa is required");
  const KappaReport report = K_kappa(w, *config.kappa);
  if (config.output == OutputFormat::csv) {
    csv_row(out, {"kappa", "G", "H", "K", "closed_form_K"});
    csv_row(out, kappa_cells(report));
  } else {
    nlohmann::ordered_json j;
    j["weight"] = to_json(w);
    j["monotone"] = w.monotone();
    j.update(to_json(report));
    j["orientation"] = kOrientation;
    emit(out, j);
  }
  return kappa_report_ok(report) ? kExitOk : kExitCheckFailed;
}

int run_theta(const RunConfig& config, const Weight& w, std::ostream& out) {
  const ThetaSweep sweep =
      theta_upper_bound(w, config.kappa_min, config.kappa_max, config.kappa_steps);
  if (config.output == OutputFormat::csv) {
    csv_row(out, {"kappa", "G", "H", "K", "closed_form_K"});
    for (const auto& row : sweep.rows) csv_row(out, kappa_cells(row));
  } else {
    nlohmann::ordered_json j;
    j["weight"] = to_json(w);
    j["monotone"] = w.monotone();
    j["kappa_min"] = json_number(config.kappa_min);
    j["kappa_max"] = json_number(config.kappa_max);
    j["kappa_steps"] = config.kappa_steps;
    j.update(to_json(sweep));
    j["orientation"] = kOrientation;
    emit(out, j);
  }
  bool ok = sweep.value >= 1.0 - kInequalitySlack;
  for (const auto& row : sweep.rows) ok = ok && kappa_report_ok(row);
  return ok ? kExitOk : kExitCheckFailed;
}

int run_verify(const RunConfig& config, const Weight& w, std::ostream& out, std::ostream& err) {
  if (config.trials < 1) throw InputError("verify: --trials must be >= 1");
  const GammaEstimate est = gamma(w, {}, config.tol);
  std::mt19937_64 rng(config.seed);
  int failures = 0;
  double max_ratio = 0.0;
  auto reports = nlohmann::ordered_json::array();
  if (config.output == OutputFormat::csv) {
    std::vector<std::string> header = {"trial", "pieces"};
    header.insert(header.end(), kNormHeader.begin(), kNormHeader.end());
    csv_row(out, header);
  }
  for (int trial = 0; trial < config.trials; ++trial) {
    const StepFunction f = random_step_function(rng);
    const NormReport report = verify_bilateral(f, w, est);
    if (exit_code_for(report) != kExitOk) ++failures;
    max_ratio = std::max(max_ratio, report.ratio);
    if (config.output == OutputFormat::csv) {
      std::vector<std::string> cells = {std::to_string(trial), std::to_string(f.size())};
      const auto rest = norm_cells(report);
      cells.insert(cells.end(), rest.begin(), rest.end());
      csv_row(out, cells);
    } else {
      nlohmann::ordered_json j;
      j["trial"] = trial;
      j["pieces"] = f.size();
      j.update(to_json(report));
      reports.push_back(std::move(j));
    }
  }
  const int passed = config.trials - failures;
  std::ostringstream summary;
  summary << "verify " << w.spec() << ": " << (failures == 0 ? "PASS" : "FAIL") << ' ' << passed
          << '/' << config.trials << " (max ratio " << format_number(max_ratio) << ", gamma "
          << format_number(est.value) << ")";
  if (config.output == OutputFormat::csv) {
    out << "# " << summary.str() << '\n';
  } else {
    nlohmann::ordered_json j;
    j["weight"] = to_json(w);
    j["trials"] = config.trials;
    j["seed"] = config.seed;
    j["gamma"] = to_json(est);
    j["reports"] = std::move(reports);
    j["summary"] = {{"passed", passed},
                    {"failed", failures},
                    {"max_ratio", json_number(max_ratio)},
                    {"line", summary.str()}};
    emit(out, j);
  }
  err << summary.str() << '\n';
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int exit_code_for(const NormReport& report) {
  return report.lower_ok && report.upper_ok ? kExitOk : kExitCheckFailed;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    // The sharpness functionals only look at (0, 1) and accept weights that
    // dip near s = 1; everything else needs a non-decreasing weight.
    const bool relaxed = config.command == Command::sharpness || config.command == Command::theta;
    const Weight w = parse_weight_spec(
        config.weight_spec, relaxed ? Admissibility::allow_kink : Admissibility::require_monotone);
    switch (config.command) {
      case Command::gamma: return run_gamma(config, w, out);
      case Command::norms: return run_norms(config, w, out);
      case Command::sharpness: return run_sharpness(config, w, out);
      case Command::theta: return run_theta(config, w, out);
      case Command::verify: return run_verify(config, w, out, err);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weak-Lorentz and Marcinkiewicz norms, the Calderon constant gamma(w) and "
               "sharpness of the lower constant"};
  app.require_subcommand(1);
  RunConfig config;
  std::string output = "json";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--weight", config.weight_spec,
                    "weight spec: power:p=P | powerlog:p=P,q=Q | powerloglog:p=P,q=Q,r=R")
        ->required();
    sub->add_option("--output", output, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--tol", config.tol, "quadrature tolerance for gamma")
        ->check(CLI::PositiveNumber);
  };

  const std::map<std::string, Command> commands = {{"gamma", Command::gamma},
                                                   {"norms", Command::norms},
                                                   {"sharpness", Command::sharpness},
                                                   {"theta", Command::theta},
                                                   {"verify", Command::verify}};
  auto* gamma_cmd = app.add_subcommand("gamma", "estimate gamma(w)");
  add_common(gamma_cmd);

  auto* norms_cmd = app.add_subcommand("norms", "norms and bilateral check for a step function");
  add_common(norms_cmd);
  norms_cmd->add_option("--input", config.input_path, "CSV (value,mass) or JSON step function")
      ->required();
  norms_cmd->add_flag("--normalize", config.normalize, "rescale masses to total 1");

  auto* sharp_cmd = app.add_subcommand("sharpness", "G, H and K for one kappa");
  add_common(sharp_cmd);
  sharp_cmd->add_option("--kappa", config.kappa, "kappa > 0")->required();

  auto* theta_cmd = app.add_subcommand("theta", "upper bound for the lower constant via a kappa sweep");
  add_common(theta_cmd);
  theta_cmd->add_option("--kappa-min", config.kappa_min, "smallest kappa");
  theta_cmd->add_option("--kappa-max", config.kappa_max, "largest kappa");
  theta_cmd->add_option("--kappa-steps", config.kappa_steps, "geometric grid size");

  auto* verify_cmd = app.add_subcommand("verify", "bilateral inequality on seeded random functions");
  add_common(verify_cmd);
  verify_cmd->add_option("--trials", config.trials, "number of random functions");
  verify_cmd->add_option("--seed", config.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  for (const auto& [name, command] : commands) {
    if (app.got_subcommand(name)) config.command = command;
  }
  config.output = output == "csv" ? OutputFormat::csv : OutputFormat::json;
  return run(config, out, err);
}

}  // namespace weaknorm::cli
