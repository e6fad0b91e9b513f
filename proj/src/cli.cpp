#include "efimov/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "efimov/errors.hpp"
#include "efimov/kernels.hpp"
#include "efimov/solver.hpp"
#include "efimov/twobody.hpp"
#include "efimov/universality.hpp"

namespace efimov::cli {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Round-trip decimal representation.
std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!trim(item).empty()) out.push_back(parse_number(item));
  }
  return out;
}

// Every option is captured as raw text so that config-file values can fill the gaps
// left on the command line before any conversion happens.
struct RawOptions {
  std::map<std::string, std::string> values;
  std::map<std::string, std::vector<CLI::Option*>> options;
  std::string config_path;

  void add(CLI::App* app, const std::string& key, const std::string& help) {
    options[key].push_back(app->add_option("--" + key, values[key], help));
  }

  void merge_config() {
    if (config_path.empty()) return;
    std::ifstream in(config_path);
    if (!in) throw DomainError("cannot read config file " + config_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    for (const auto& [key, value] : parse_config(buffer.str())) {
      auto it = options.find(key);
      if (it == options.end()) throw DomainError("unknown config key '" + key + "'");
      std::size_t given = 0;
      for (const CLI::Option* opt : it->second) given += opt->count();
      if (given == 0) values[key] = value;
    }
  }

  bool has(const std::string& key) const {
    auto it = values.find(key);
    return it != values.end() && !trim(it->second).empty();
  }
  double number(const std::string& key) const { return parse_number(values.at(key)); }
  double number_or(const std::string& key, double fallback) const {
    return has(key) ? number(key) : fallback;
  }
  std::size_t count_or(const std::string& key, std::size_t fallback) const {
    if (!has(key)) return fallback;
    const double v = number(key);
    if (!(v >= 0.0) || v != std::floor(v)) throw DomainError("--" + key + " must be a non-negative integer");
    return static_cast<std::size_t>(v);
  }
  std::string text_or(const std::string& key, const std::string& fallback) const {
    return has(key) ? trim(values.at(key)) : fallback;
  }
};

struct ResolvedModel {
  kernels::KernelSpec spec;
  json params;
};

ResolvedModel resolve_model(const RawOptions& raw) {
  const bool lambda = raw.has("lambda");
  const bool beta = raw.has("beta");
  const bool inv_a = raw.has("inv-a");
  const bool r0 = raw.has("r0");
  const bool R0 = raw.has("R0");
  std::optional<double> cutoff;
  if (raw.has("cutoff")) cutoff = raw.number("cutoff");

  auto finite = [&](twobody::PotentialParams p, json extra) {
    const auto ere = twobody::map_potential_to_ere(p);
    json params = {{"model", "finite_range"},
                   {"lambda", p.coupling},
                   {"beta", p.range},
                   {"inv_a", ere.inv_a},
                   {"r0", ere.r0},
                   {"R0", ere.R0}};
    params.update(extra);
    if (cutoff) params["cutoff"] = *cutoff;
    return ResolvedModel{kernels::KernelSpec::finite_range(p, cutoff), params};
  };

  if (lambda && beta && !inv_a && !r0 && !R0)
    return finite({raw.number("lambda"), raw.number("beta")}, json::object());
  if (inv_a && beta && !lambda && !r0 && !R0) {
    twobody::EreParams ere;
    ere.inv_a = raw.number("inv-a");
    return finite(twobody::map_ere_to_potential(ere, raw.number("beta")), json::object());
  }
  if (inv_a && r0 && !lambda && !beta && !R0) {
    twobody::EreParams ere;
    ere.inv_a = raw.number("inv-a");
    const double b = twobody::map_ere_to_range(ere.inv_a, raw.number("r0"));
    return finite(twobody::map_ere_to_potential(ere, b), json::object());
  }
  if (inv_a && R0 && !lambda && !beta && !r0) {
    json params = {{"model", "short_range"}, {"inv_a", raw.number("inv-a")}, {"R0", raw.number("R0")}};
    if (cutoff) params["cutoff"] = *cutoff;
    return ResolvedModel{kernels::KernelSpec::short_range(raw.number("inv-a"), raw.number("R0"), cutoff),
                         params};
  }
  throw DomainError(
      "give exactly one parameter set: --lambda/--beta, --inv-a/--beta, --inv-a/--r0 or --inv-a/--R0");
}

// Writes to --output when given, stdout otherwise.
void emit(const RawOptions& raw, std::ostream& out, const std::string& payload) {
  if (!raw.has("output")) {
    out << payload;
    return;
  }
  std::ofstream file(raw.text_or("output", ""), std::ios::binary);
  if (!file) throw DomainError("cannot write " + raw.text_or("output", ""));
  file << payload;
}

std::string output_format(const RawOptions& raw) {
  const std::string format = raw.text_or("format", "csv");
  if (format != "csv" && format != "json") throw DomainError("--format must be csv or json");
  return format;
}

void write_file(const std::string& path, const std::string& payload) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot write " + path);
  file << payload;
}

int cmd_twobody(const RawOptions& raw, std::ostream& out) {
  const ResolvedModel model = resolve_model(raw);
  const auto* fr = std::get_if<kernels::FiniteRange>(&model.spec.model());
  if (fr == nullptr) throw DomainError("twobody needs a Yamaguchi parameter set, not --inv-a/--R0");
  const twobody::PotentialParams& p = fr->params;
  const auto ere = twobody::map_potential_to_ere(p);

  std::optional<twobody::DimerState> dimer;
  if (ere.inv_a > 0.0) dimer = twobody::dimer_binding(p);

  const double kmax = raw.number_or("kmax", 2.0 * p.range);
  const std::size_t kpoints = std::max<std::size_t>(raw.count_or("kpoints", 21), 2);

  std::ostringstream os;
  json doc;
  const std::string format = output_format(raw);
  json table = json::array();
  std::ostringstream csv;
  csv << "k,k_cot_delta,ere_quadratic,ere_quartic\n";
  for (std::size_t i = 0; i < kpoints; ++i) {
    const double k = kmax * static_cast<double>(i) / static_cast<double>(kpoints - 1);
    const double kcd = twobody::k_cot_delta(k, p);
    const double quad = twobody::ere_quadratic(k * k, ere);
    const double quart = twobody::ere_quartic(k * k, ere, p);
    csv << num(k) << ',' << num(kcd) << ',' << num(quad) << ',' << num(quart) << '\n';
    table.push_back({{"k", k}, {"k_cot_delta", kcd}, {"ere_quadratic", quad}, {"ere_quartic", quart}});
  }

  if (format == "json") {
    json report = {{"shape", twobody::shape_coefficient(p)}, {"R0_limit", -ere.r0 / 2.0}};
    if (dimer) {
      report["kappa_d"] = dimer->kappa_d;
      report["dimer_energy"] = dimer->energy;
    } else {
      report["kappa_d"] = nullptr;
    }
    doc = {{"params", model.params}, {"report", report}, {"table", table}};
    os << doc.dump(2) << '\n';
  } else {
    os << "lambda=" << num(p.coupling) << '\n'
       << "beta=" << num(p.range) << '\n'
       << "inv_a=" << num(ere.inv_a) << '\n'
       << "r0=" << num(ere.r0) << '\n'
       << "R0=" << num(ere.R0) << '\n'
       << "R0_limit=" << num(-ere.r0 / 2.0) << '\n'
       << "shape=" << num(twobody::shape_coefficient(p)) << '\n';
    if (dimer)
      os << "kappa_d=" << num(dimer->kappa_d) << '\n' << "dimer_energy=" << num(dimer->energy) << '\n';
    else
      os << "kappa_d=none\n";
    os << csv.str();
  }
  emit(raw, out, os.str());
  return kOk;
}

solver::AlphaRange search_range(const RawOptions& raw, const kernels::KernelSpec& spec) {
  double scale = 1.0;
  double lower_fraction = 1e-6;
  double upper_factor = 10.0;
  if (const auto* fr = std::get_if<kernels::FiniteRange>(&spec.model())) {
    scale = fr->params.range;
  } else if (const auto* sr = std::get_if<kernels::ShortRange>(&spec.model())) {
    if (sr->ere.R0 != 0.0) {
      scale = 1.0 / std::abs(sr->ere.R0);
    } else {
      scale = *spec.cutoff();
      lower_fraction = 1e-4;
      upper_factor = 1.0;
    }
  }
  if (spec.cutoff() && !std::get_if<kernels::ShortRange>(&spec.model()))
    upper_factor = std::min(upper_factor, *spec.cutoff() / scale);
  solver::AlphaRange range;
  range.min = raw.has("alpha-min") ? raw.number("alpha-min")
                                   : std::max(lower_fraction * scale, spec.threshold() * (1.0 + 1e-6));
  range.max = raw.number_or("alpha-max", upper_factor * scale);
  return range;
}

int cmd_spectrum(const RawOptions& raw, std::ostream& out, std::ostream& err) {
  const ResolvedModel model = resolve_model(raw);
  const std::string format = output_format(raw);
  const solver::AlphaRange range = search_range(raw, model.spec);
  const std::size_t nodes = raw.count_or("nodes", 300);
  const std::size_t max_levels = raw.count_or("max-levels", 8);

  solver::MomentumMesh mesh = raw.has("scale")
                                  ? solver::build_mesh(nodes, raw.number("scale"),
                                                       solver::default_cutoff(model.spec, range.max))
                                  : solver::default_mesh(model.spec, range, nodes);
  solver::TrimerSpectrum spectrum;
  if (range.max > range.min) spectrum = solver::find_levels(model.spec, mesh, range, max_levels);

  std::ostringstream os;
  if (format == "json") {
    json doc = {{"params", model.params},
                {"mesh", {{"nodes", mesh.size()}, {"scale", mesh.scale}, {"cutoff", mesh.cutoff}}},
                {"levels", universality::to_json(spectrum)},
                {"report",
                 {{"alpha_min", range.min},
                  {"alpha_max", range.max},
                  {"threshold", model.spec.threshold()},
                  {"levels", spectrum.size()}}}};
    os << doc.dump(2) << '\n';
  } else {
    os << "level,alpha,energy,eta_residual\n";
    for (std::size_t n = 0; n < spectrum.size(); ++n) {
      const auto& l = spectrum.levels[n];
      os << n << ',' << num(l.alpha) << ',' << num(l.energy) << ',' << num(l.eta_residual) << '\n';
    }
  }
  emit(raw, out, os.str());
  err << "levels=" << spectrum.size() << '\n';
  return kOk;
}

std::string levels_csv(const solver::TrimerSpectrum& spectrum, const std::string& prefix_header = "",
                       const std::string& prefix_value = "") {
  std::ostringstream os;
  if (!prefix_header.empty()) os << prefix_header << ',';
  os << "level,alpha,energy,eta_residual\n";
  for (std::size_t n = 0; n < spectrum.size(); ++n) {
    const auto& l = spectrum.levels[n];
    if (!prefix_value.empty()) os << prefix_value << ',';
    os << n << ',' << num(l.alpha) << ',' << num(l.energy) << ',' << num(l.eta_residual) << '\n';
  }
  return os.str();
}

std::string path_in(const RawOptions& raw, const std::string& name) {
  std::string dir = raw.text_or("output-dir", ".");
  if (!dir.empty() && dir.back() != '/') dir += '/';
  return dir + name;
}

const char* verdict(bool ok) { return ok ? "pass" : "fail"; }

int cmd_ratios(const RawOptions& raw, std::ostream& out) {
  const double inv_a = raw.number_or("inv-a", 0.0);
  const double R0 = raw.number_or("R0", 1.0);
  universality::MeshOptions options{raw.count_or("nodes", 300), raw.count_or("max-levels", 4)};
  const auto check = universality::ratio_check(inv_a, R0, options);

  json doc = {{"params", {{"model", "short_range"}, {"inv_a", inv_a}, {"R0", R0}}},
              {"mesh", {{"nodes", options.nodes}}},
              {"levels", universality::to_json(check.spectrum)},
              {"report", universality::to_json(check)}};
  write_file(path_in(raw, "universality_ratios.json"), doc.dump(2) + "\n");
  write_file(path_in(raw, "universality_ratios_levels.csv"), levels_csv(check.spectrum));
  std::ostringstream csv;
  csv << "pair,ratio,target,deviation\n";
  const double target = universality::energy_ratio_target();
  for (std::size_t n = 0; n < check.ratios.size(); ++n)
    csv << n << ',' << num(check.ratios[n]) << ',' << num(target) << ','
        << num(std::abs(check.ratios[n] / target - 1.0)) << '\n';
  write_file(path_in(raw, "universality_ratios.csv"), csv.str());

  out << "s0=" << num(universality::efimov_s0()) << '\n' << "ratio_target=" << num(target) << '\n';
  for (std::size_t n = 0; n < check.ratios.size(); ++n) {
    out << "E" << n << "/E" << n + 1 << "=" << num(check.ratios[n]);
    out << (n == 0 ? " (ground pair, not tested)\n" : "\n");
  }
  out << "excited ratios within 2%: " << verdict(check.passed) << '\n';
  return check.passed ? kOk : kUniversalityFailed;
}

int cmd_cutoff(const RawOptions& raw, std::ostream& out) {
  const auto cutoffs = parse_list(raw.text_or("lambdas", "1e3,2e3,2.2694e4"));
  universality::MeshOptions options{raw.count_or("nodes", 300), raw.count_or("max-levels", 4)};
  const auto study = universality::cutoff_study(cutoffs, options);

  json levels = json::array();
  std::ostringstream lcsv;
  lcsv << "cutoff,level,alpha,energy,eta_residual\n";
  for (const auto& row : study.rows) {
    for (std::size_t n = 0; n < row.spectrum.size(); ++n) {
      const auto& l = row.spectrum.levels[n];
      levels.push_back({{"cutoff", row.cutoff}, {"level", n}, {"alpha", l.alpha}, {"energy", l.energy},
                        {"eta_residual", l.eta_residual}});
      lcsv << num(row.cutoff) << ',' << n << ',' << num(l.alpha) << ',' << num(l.energy) << ','
           << num(l.eta_residual) << '\n';
    }
  }
  json doc = {{"params", {{"model", "short_range"}, {"inv_a", 0.0}, {"R0", 0.0}, {"cutoffs", cutoffs}}},
              {"mesh", {{"nodes", options.nodes}, {"scale_over_cutoff", 1e-3}}},
              {"levels", levels},
              {"report", universality::to_json(study)}};
  write_file(path_in(raw, "universality_cutoff.json"), doc.dump(2) + "\n");
  write_file(path_in(raw, "universality_cutoff_levels.csv"), lcsv.str());
  std::ostringstream pcsv;
  pcsv << "cutoff_a,cutoff_b,factor,kind,metric,passed\n";
  for (const auto& p : study.pairs) {
    pcsv << num(p.cutoff_a) << ',' << num(p.cutoff_b) << ',' << num(p.factor) << ','
         << (p.kind == universality::PairKind::LogPeriodic ? "log_periodic" : "doubling") << ','
         << num(p.metric) << ',' << (p.passed ? 1 : 0) << '\n';
  }
  write_file(path_in(raw, "universality_cutoff_pairs.csv"), pcsv.str());

  for (const auto& p : study.pairs) {
    if (p.kind == universality::PairKind::LogPeriodic) {
      out << "log-periodicity " << num(p.cutoff_a) << " -> " << num(p.cutoff_b)
          << ": deviation " << num(p.metric) << " " << verdict(p.passed) << '\n';
    } else {
      // A doubled cutoff must not reproduce the spectrum.
      out << "doubling " << num(p.cutoff_a) << " -> " << num(p.cutoff_b) << ": spectrum "
          << (p.passed ? "not reproduced (expected)" : "reproduced (unexpected)") << ", alpha0 shift "
          << num(p.metric) << " " << verdict(p.passed) << '\n';
    }
  }
  out << "level ratios within 2% of " << num(universality::momentum_ratio_target()) << ": "
      << verdict(study.ratios_passed) << '\n';
  return study.passed() ? kOk : kUniversalityFailed;
}

int cmd_beta(const RawOptions& raw, std::ostream& out) {
  const auto betas = parse_list(raw.text_or("list", "1e2,1e3,1e4"));
  twobody::EreParams ere;
  ere.inv_a = raw.number_or("inv-a", 0.0);
  const double cutoff = raw.number_or("cutoff", 10.0);
  const std::size_t level = raw.count_or("level", 0);
  universality::MeshOptions options{raw.count_or("nodes", 300), level + 1};
  const auto table = universality::beta_convergence(ere, betas, level, cutoff, options);

  json levels = json::array();
  std::ostringstream csv;
  csv << "beta,feasible,coupling,R0,R0_limit,alpha_finite,alpha_short,deviation,notice\n";
  for (const auto& r : table.rows) {
    csv << num(r.beta) << ',' << (r.feasible ? 1 : 0) << ',' << num(r.coupling) << ',' << num(r.R0) << ','
        << num(r.R0_limit) << ',' << num(r.alpha_finite) << ',' << num(r.alpha_short) << ','
        << num(r.deviation) << ',' << r.notice << '\n';
    if (r.feasible && r.notice.empty()) {
      levels.push_back({{"beta", r.beta}, {"level", level}, {"alpha_finite", r.alpha_finite},
                        {"alpha_short", r.alpha_short}});
    }
    if (!r.notice.empty()) out << "beta=" << num(r.beta) << ": " << r.notice << '\n';
  }
  json doc = {{"params", {{"inv_a", ere.inv_a}, {"cutoff", cutoff}, {"level", level}, {"betas", betas}}},
              {"mesh", {{"nodes", options.nodes}, {"scale", 1e-3 * cutoff}, {"cutoff", cutoff}}},
              {"levels", levels},
              {"report", universality::to_json(table)}};
  write_file(path_in(raw, "universality_beta.json"), doc.dump(2) + "\n");
  write_file(path_in(raw, "universality_beta.csv"), csv.str());

  for (const auto& r : table.rows)
    if (r.feasible && r.notice.empty()) out << "beta=" << num(r.beta) << " deviation=" << num(r.deviation) << '\n';
  out << "deviation decreases monotonically in beta: " << verdict(table.monotone) << '\n';
  return table.monotone ? kOk : kUniversalityFailed;
}

}  // namespace

double parse_number(const std::string& text) {
  std::string s = trim(text);
  if (s.empty()) throw DomainError("empty number");
  double factor = 1.0;
  if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
    factor = std::numbers::pi;
    s = trim(s.substr(0, s.size() - 2));
    if (!s.empty() && s.back() == '*') s = trim(s.substr(0, s.size() - 1));
    if (s.empty() || s == "+") return factor;
    if (s == "-") return -factor;
  }
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    throw DomainError("not a number: '" + text + "'");
  }
  if (used != s.size()) throw DomainError("not a number: '" + text + "'");
  return value * factor;
}

std::map<std::string, std::string> parse_config(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw DomainError("config line " + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw DomainError("config line " + std::to_string(lineno) + ": empty key");
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Efimov trimers from Yamaguchi separable potentials"};
  app.require_subcommand(1);

  RawOptions raw;
  auto add_model = [&raw](CLI::App* sub) {
    raw.add(sub, "lambda", "Yamaguchi coupling (accepts e.g. 8pi)");
    raw.add(sub, "beta", "form factor range");
    raw.add(sub, "inv-a", "inverse scattering length 1/a");
    raw.add(sub, "r0", "effective range");
    raw.add(sub, "R0", "range correction of the zero-range model");
    raw.add(sub, "cutoff", "momentum cutoff");
  };
  auto add_config = [&raw](CLI::App* sub) {
    sub->add_option("--config", raw.config_path, "key=value config file; flags override it");
  };

  CLI::App* twobody_cmd = app.add_subcommand("twobody", "two-body mapping, dimer and k cot(delta) table");
  add_model(twobody_cmd);
  add_config(twobody_cmd);
  raw.add(twobody_cmd, "kmax", "largest k in the table (default 2 beta)");
  raw.add(twobody_cmd, "kpoints", "table rows (default 21)");
  raw.add(twobody_cmd, "output", "output file (default stdout)");
  raw.add(twobody_cmd, "format", "csv or json");

  CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "trimer binding momenta");
  add_model(spectrum_cmd);
  add_config(spectrum_cmd);
  raw.add(spectrum_cmd, "nodes", "mesh size (default 300)");
  raw.add(spectrum_cmd, "scale", "mesh map scale");
  raw.add(spectrum_cmd, "alpha-min", "smallest trial binding momentum");
  raw.add(spectrum_cmd, "alpha-max", "largest trial binding momentum");
  raw.add(spectrum_cmd, "max-levels", "level limit (default 8)");
  raw.add(spectrum_cmd, "output", "output file (default stdout)");
  raw.add(spectrum_cmd, "format", "csv or json");

  CLI::App* uni_cmd = app.add_subcommand("universality", "universality checks");
  uni_cmd->require_subcommand(1);
  CLI::App* ratios_cmd = uni_cmd->add_subcommand("ratios", "energy ratios of the range-corrected model");
  CLI::App* cutoff_cmd = uni_cmd->add_subcommand("cutoff", "cutoff dependence at R0 = 0");
  CLI::App* beta_cmd = uni_cmd->add_subcommand("beta", "finite-range to zero-range convergence");
  for (CLI::App* sub : {ratios_cmd, cutoff_cmd, beta_cmd}) {
    add_config(sub);
    raw.add(sub, "nodes", "mesh size (default 300)");
    raw.add(sub, "output-dir", "directory for report files (default .)");
  }
  raw.add(ratios_cmd, "inv-a", "inverse scattering length (default 0)");
  raw.add(ratios_cmd, "R0", "range correction (default 1)");
  raw.add(ratios_cmd, "max-levels", "level limit (default 4)");
  raw.add(cutoff_cmd, "lambdas", "comma-separated cutoffs");
  raw.add(cutoff_cmd, "max-levels", "level limit (default 4)");
  raw.add(beta_cmd, "list", "comma-separated beta values");
  raw.add(beta_cmd, "inv-a", "inverse scattering length (default 0)");
  raw.add(beta_cmd, "cutoff", "shared momentum cutoff (default 10)");
  raw.add(beta_cmd, "level", "level index compared (default 0)");

  std::vector<const char*> argv;
  argv.push_back("efimov");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    raw.merge_config();
    if (twobody_cmd->parsed()) return cmd_twobody(raw, out);
    if (spectrum_cmd->parsed()) return cmd_spectrum(raw, out, err);
    try {
      if (ratios_cmd->parsed()) return cmd_ratios(raw, out);
      if (cutoff_cmd->parsed()) return cmd_cutoff(raw, out);
      if (beta_cmd->parsed()) return cmd_beta(raw, out);
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kUniversalityFailed;
    }
  } catch (const ThresholdViolation& e) {
    err << "threshold violation: " << e.what() << '\n';
    return kThreshold;
  } catch (const InfeasibleRangeError& e) {
    err << "infeasible parameters: " << e.what() << '\n';
    return kInfeasible;
  } catch (const NoDimerError& e) {
    err << "infeasible parameters: " << e.what() << '\n';
    return kInfeasible;
  } catch (const DomainError& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kInfeasible;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace efimov::cli
