#include "weaknorm/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace weaknorm {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::optional<double> to_double(std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) return std::nullopt;
  return v;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return parts;
}

StepFunction make_step_function(std::vector<Piece> pieces, bool normalize) {
  if (pieces.empty()) throw InputError("step function: no pieces in input");
  try {
    StepFunction f(std::move(pieces));
    return normalize ? f.normalized() : f;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

StepFunction parse_json_pieces(std::string_view text, bool normalize) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("step function JSON: ") + e.what());
  }
  if (!doc.is_array()) throw InputError("step function JSON: expected an array");
  std::vector<Piece> pieces;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("value") || !item.contains("mass") ||
        !item["value"].is_number() || !item["mass"].is_number()) {
      throw InputError("step function JSON: each entry needs numeric 'value' and 'mass'");
    }
    pieces.push_back({item["value"].get<double>(), item["mass"].get<double>()});
  }
  return make_step_function(std::move(pieces), normalize);
}

StepFunction parse_csv_pieces(std::string_view text, bool normalize) {
  std::vector<Piece> pieces;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string row = trim(line);
    if (row.empty() || row.front() == '#') continue;
    const auto cells = split(row, ',');
    const auto value = cells.size() == 2 ? to_double(cells[0]) : std::nullopt;
    const auto mass = cells.size() == 2 ? to_double(cells[1]) : std::nullopt;
    if (!value || !mass) {
      // One non-numeric row before any data is a header.
      if (pieces.empty() && !header_seen && cells.size() == 2) {
        header_seen = true;
        continue;
      }
      throw InputError("step function CSV line " + std::to_string(line_no) +
                       ": expected 'value,mass'");
    }
    pieces.push_back({*value, *mass});
  }
  return make_step_function(std::move(pieces), normalize);
}

}  // namespace

Weight parse_weight_spec(std::string_view spec, Admissibility admissibility) {
  const auto colon = spec.find(':');
  const std::string family = trim(spec.substr(0, colon));
  std::map<std::string, double> params;
  if (colon != std::string_view::npos) {
    for (const auto& item : split(spec.substr(colon + 1), ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw InputError("weight spec: expected key=value, got '" + item + "'");
      const std::string key = trim(item.substr(0, eq));
      const auto value = to_double(item.substr(eq + 1));
      if (!value) throw InputError("weight spec: bad number for '" + key + "'");
      if (!params.emplace(key, *value).second) throw InputError("weight spec: duplicate key '" + key + "'");
    }
  }
  auto take = [&](const char* key) {
    const auto it = params.find(key);
    if (it == params.end()) throw InputError("weight spec '" + std::string(spec) + "': missing " + key);
    const double v = it->second;
    params.erase(it);
    return v;
  };

  try {
    std::optional<Weight> w;
    if (family == "power") {
      w = make_power_weight(take("p"));
    } else if (family == "powerlog") {
      const double p = take("p");
      w = make_power_log_weight(p, take("q"), admissibility);
    } else if (family == "powerloglog") {
      const double p = take("p");
      const double q = take("q");
      w = make_power_log_log_weight(p, q, take("r"), admissibility);
    } else {
      throw InputError("weight spec: unknown family '" + family +
                       "' (expected power, powerlog or powerloglog)");
    }
    if (!params.empty()) {
      throw InputError("weight spec: unexpected key '" + params.begin()->first + "'");
    }
    return *w;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

StepFunction parse_step_function(std::string_view text, bool normalize) {
  const std::string head = trim(text.substr(0, std::min<std::size_t>(text.size(), 64)));
  if (!head.empty() && head.front() == '[') return parse_json_pieces(text, normalize);
  return parse_csv_pieces(text, normalize);
}

StepFunction read_step_function(const std::filesystem::path& path, bool normalize) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open input file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_step_function(buffer.str(), normalize);
}

double round_sig9(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return std::strtod(buf, nullptr);
}

nlohmann::ordered_json json_number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round_sig9(x);
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

nlohmann::ordered_json to_json(const Weight& w) {
  nlohmann::ordered_json j;
  j["family"] = to_string(w.family());
  if (w.family() == WeightFamily::custom) {
    j["label"] = w.label();
    return j;
  }
  j["p"] = json_number(w.p());
  j["q"] = w.q() ? json_number(*w.q()) : nlohmann::ordered_json(nullptr);
  j["r"] = w.r() ? json_number(*w.r()) : nlohmann::ordered_json(nullptr);
  return j;
}

nlohmann::ordered_json to_json(const GammaEstimate& estimate) {
  nlohmann::ordered_json j;
  j["value"] = json_number(estimate.value);
  j["argmax_t"] = json_number(estimate.argmax_t);
  j["grid_size"] = estimate.grid_size;
  j["quadrature_tolerance"] = json_number(estimate.quadrature_tolerance);
  j["diverged"] = estimate.diverged;
  return j;
}

nlohmann::ordered_json to_json(const NormReport& report) {
  nlohmann::ordered_json j;
  j["weak_norm"] = json_number(report.weak_norm);
  j["marcinkiewicz_norm"] = json_number(report.marcinkiewicz_norm);
  j["gamma_value"] = json_number(report.gamma_value);
  j["ratio"] = json_number(report.ratio);
  j["lower_ok"] = report.lower_ok;
  j["upper_ok"] = report.upper_ok;
  j["argmax_t_weak"] = json_number(report.argmax_t_weak);
  j["argmax_t_marc"] = json_number(report.argmax_t_marc);
  j["gamma_diverged"] = report.gamma_diverged;
  j["tail_warning"] = report.tail_warning;
  return j;
}

nlohmann::ordered_json to_json(const KappaReport& report) {
  nlohmann::ordered_json j;
  j["kappa"] = json_number(report.kappa);
  j["G"] = json_number(report.G);
  j["H"] = json_number(report.H);
  j["K"] = json_number(report.K);
  j["closed_form_K"] = report.closed_form_K ? json_number(*report.closed_form_K)
                                            : nlohmann::ordered_json(nullptr);
  j["argmax_t_G"] = json_number(report.argmax_t_G);
  j["argmax_t_H"] = json_number(report.argmax_t_H);
  return j;
}

nlohmann::ordered_json to_json(const ThetaSweep& sweep) {
  nlohmann::ordered_json j;
  j["value"] = json_number(sweep.value);
  j["kappa_at_min"] = json_number(sweep.kappa_at_min);
  j["boundary"] = sweep.boundary;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : sweep.rows) rows.push_back(to_json(row));
  j["rows"] = std::move(rows);
  return j;
}

}  // namespace weaknorm
