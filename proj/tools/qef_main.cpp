// Command-line front end: evaluate two-qubit states, print the
// characteristic constants, and emit sweep/figure datasets as CSV.

#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qef/qef.hpp"

namespace {

using nlohmann::json;

std::string fmt(double v) { return qef::csv_value(v); }

void print_kv(std::ostream& out, const std::vector<std::pair<std::string, std::optional<double>>>& kv,
              bool as_json) {
  if (as_json) {
    json obj;
    for (const auto& [key, value] : kv) {
      if (value) obj[key] = *value; else obj[key] = nullptr;
    }
    out << obj.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : kv) {
    out << key << '=' << (value ? fmt(*value) : "") << '\n';
  }
}

std::vector<std::complex<double>> parse_amplitudes(const std::string& text) {
  std::vector<double> parts;
  size_t begin = 0;
  while (begin <= text.size()) {
    const size_t comma = text.find(',', begin);
    const std::string cell = text.substr(begin, comma - begin);
    try {
      size_t used = 0;
      parts.push_back(std::stod(cell, &used));
      if (used != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw qef::ParseError("amplitude token '" + cell + "' is not a number");
    }
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  if (parts.size() != 8) {
    throw qef::ParseError("expected 8 comma-separated reals (re,im per amplitude), got " +
                          std::to_string(parts.size()));
  }
  return {{parts[0], parts[1]}, {parts[2], parts[3]}, {parts[4], parts[5]}, {parts[6], parts[7]}};
}

void run_constants(bool as_json) {
  const auto tf = qef::solve_tau_f<double>();
  const double c_f = tf.c_f.value;
  const double tau_e = qef::entanglement_temperature(-1.0);
  const double consistency =
      std::abs(qef::thermal_concurrence<double>({-1.0, tf.tau_f}) - c_f);
  print_kv(std::cout,
           {{"c_f", c_f},
            {"c_f_residual", tf.c_f.residual},
            {"c_f_iterations", static_cast<double>(tf.c_f.iterations)},
            {"tau_e", tau_e},
            {"tau_f", tf.tau_f},
            {"tau_f_residual", consistency},
            {"tau_f_over_tau_e", tf.tau_f_over_tau_e}},
           as_json);
}

void run_pure_eval(const std::string& amps_text, bool normalize, bool as_json) {
  const auto amps = parse_amplitudes(amps_text);
  const auto psi = qef::make_pure_state(amps[0], amps[1], amps[2], amps[3], normalize);
  const double c = qef::concurrence(psi);
  const auto [l1, l2] = qef::reduced_eigenvalues(psi);
  const auto rel = qef::relative_fluctuation(c);
  print_kv(std::cout,
           {{"C", c},
            {"E", qef::entanglement(c)},
            {"dE", qef::fluctuation(c)},
            {"relE", rel ? std::optional<double>(*rel) : std::nullopt},
            {"lambda1", l1},
            {"lambda2", l2}},
           as_json);
}

void run_rho_concurrence(const std::string& path, bool as_json) {
  const auto rho = qef::load_density_matrix_file(path);
  const auto spectrum = qef::wootters_spectrum(rho);
  const double c = spectrum.concurrence;
  const auto rel = qef::relative_fluctuation(c);
  print_kv(std::cout,
           {{"C", c},
            {"sqrt_lambda1", spectrum.sqrt_eigenvalues[0]},
            {"sqrt_lambda2", spectrum.sqrt_eigenvalues[1]},
            {"sqrt_lambda3", spectrum.sqrt_eigenvalues[2]},
            {"sqrt_lambda4", spectrum.sqrt_eigenvalues[3]},
            {"E", qef::entanglement(c)},
            {"dE", qef::fluctuation(c)},
            {"relE", rel ? std::optional<double>(*rel) : std::nullopt}},
           as_json);
}

// Shared by dimer and fig: route the table to stdout or a file.
void emit(const qef::FigureTable& table, const std::string& out_path) {
  if (out_path.empty()) {
    qef::write_csv(std::cout, table);
  } else {
    qef::write_csv_file(out_path, table);
  }
}

void run_dimer(double j, std::vector<double> taus, const qef::SweepSpec& spec,
               bool explicit_grid, const std::string& out_path) {
  const double te = qef::entanglement_temperature(j);
  if (taus.empty()) {
    qef::SweepSpec s = spec;
    if (!explicit_grid) {
      s.start = 0.05 * te;
      s.stop = 1.2 * te;
    }
    taus = qef::linspace(s);
  }
  qef::FigureTable table;
  table.header = {"tau", "t_over_te", "C", "E", "dE", "relE", "hw_dev"};
  for (const auto& pt : qef::thermal_sweep(j, std::span<const double>(taus))) {
    // Cross-check the closed form against the Hill-Wootters route; the flag
    // column records any deviation beyond 1e-9.
    const double c_hw = qef::concurrence(qef::thermal_state<double>({j, pt.tau}));
    const double flag = std::abs(c_hw - pt.c) > 1e-9 ? 1.0 : 0.0;
    table.rows.push_back({pt.tau, pt.tau_over_te, pt.c, pt.e, pt.delta_e,
                          pt.rel ? std::optional<double>(*pt.rel) : std::nullopt, flag});
  }
  emit(table, out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit entanglement entropy and its rms fluctuations"};
  app.require_subcommand(1);

  bool as_json = false;

  auto* constants = app.add_subcommand(
      "constants", "Print c_f, tau_e, tau_f and tau_f/tau_e with solver residuals");
  constants->add_flag("--json", as_json, "emit a JSON object instead of key=value lines");

  std::string amps_text;
  bool normalize = false;
  auto* pure = app.add_subcommand(
      "pure-eval", "Evaluate C, E, dE, relE for a pure state given as eight "
                   "comma-separated reals (re,im per amplitude, basis |00>,|01>,|10>,|11>)");
  pure->add_option("amplitudes", amps_text, "a_re,a_im,b_re,b_im,c_re,c_im,d_re,d_im")
      ->required();
  pure->add_flag("--normalize", normalize, "rescale the amplitudes to unit norm");
  pure->add_flag("--json", as_json, "emit a JSON object instead of key=value lines");

  std::string rho_path;
  auto* rho = app.add_subcommand(
      "rho-concurrence", "Hill-Wootters concurrence and fluctuation measures for a "
                         "density matrix stored as JSON {\"rho\": 4x4 [re,im] pairs}");
  rho->add_option("file", rho_path, "density-matrix JSON file")->required();
  rho->add_flag("--json", as_json, "emit a JSON object instead of key=value lines");

  double j = -1.0;
  std::vector<double> taus;
  qef::SweepSpec dimer_spec{0.0, 1.0, 41};
  std::string out_path;
  auto* dimer = app.add_subcommand(
      "dimer", "Thermal sweep of the Heisenberg dimer: C, E, dE, relE per temperature "
               "plus a Hill-Wootters cross-check flag");
  dimer->add_option("--j", j, "exchange coupling (j < 0 is antiferromagnetic)")->required();
  dimer->add_option("--tau", taus, "explicit temperature list (k_B T in units of the coupling)");
  auto* dimer_start = dimer->add_option("--start", dimer_spec.start, "sweep start temperature");
  auto* dimer_stop = dimer->add_option("--stop", dimer_spec.stop, "sweep stop temperature");
  dimer->add_option("--points", dimer_spec.points, "sweep point count")->default_val(41);
  dimer->add_option("--out", out_path, "write CSV here instead of stdout");

  int which = 0;
  qef::SweepSpec fig_spec;
  auto* fig = app.add_subcommand(
      "fig", "Emit the dataset behind one figure as CSV: 1 = E,dE vs C; 2 = relE vs C; "
             "3 = E,dE vs tau/tau_e; 4 = relE vs tau/tau_e");
  fig->add_option("which", which, "figure index, 1-4")->required();
  auto* fig_start = fig->add_option("--start", fig_spec.start, "sweep start");
  auto* fig_stop = fig->add_option("--stop", fig_spec.stop, "sweep stop");
  auto* fig_points = fig->add_option("--points", fig_spec.points, "sweep point count");
  fig->add_option("--out", out_path, "output CSV path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (constants->parsed()) {
      run_constants(as_json);
    } else if (pure->parsed()) {
      run_pure_eval(amps_text, normalize, as_json);
    } else if (rho->parsed()) {
      run_rho_concurrence(rho_path, as_json);
    } else if (dimer->parsed()) {
      const bool explicit_grid = dimer_start->count() > 0 || dimer_stop->count() > 0;
      run_dimer(j, taus, dimer_spec, explicit_grid, out_path);
    } else if (fig->parsed()) {
      qef::SweepSpec spec = qef::default_figure_spec(which);
      if (fig_start->count()) spec.start = fig_spec.start;
      if (fig_stop->count()) spec.stop = fig_spec.stop;
      if (fig_points->count()) spec.points = fig_spec.points;
      emit(qef::figure_table(which, spec), out_path);
    }
  } catch (const qef::Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
