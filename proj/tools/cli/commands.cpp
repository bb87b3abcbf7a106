#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "radscat/criterion.hpp"
#include "radscat/errors.hpp"
#include "radscat/kernels.hpp"
#include "radscat/oracles/grid_scan.hpp"
#include "radscat/oracles/sine_transform.hpp"
#include "radscat/quadrature.hpp"
#include "radscat/resonance.hpp"
#include "radscat/spectral.hpp"
#include "radscat/verification.hpp"

namespace radscat::cli {

namespace {

using nlohmann::json;

std::string complex_text(Complex z) {
  return "(" + format_number(z.real()) + ", " + format_number(z.imag()) + ")";
}

KRegion read_region(const json& sec) {
  const json& r = sec.contains("region") ? sec.at("region") : json::object();
  if (!r.is_object()) throw ConfigError("'region' must be an object");
  return {get_number(r, "re_min", 0.0), get_number(r, "re_max", 6.0), get_number(r, "im_min", -2.0),
          get_number(r, "im_max", 0.0)};
}

ResonanceOptions read_resonance_options(const json& sec, const RunConfig& cfg) {
  ResonanceOptions opt;
  opt.cell_size = get_number(sec, "cell_size", opt.cell_size);
  opt.max_states = get_count(sec, "max_states", opt.max_states);
  opt.root_tolerance = cfg.tolerances.at("root");
  return opt;
}

ResonanceSearch search(const RunConfig& cfg, const json& sec) {
  try {
    return find_resonances(cfg.potential, cfg.scale, read_region(sec), read_resonance_options(sec, cfg));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

EnergyGrid read_energy_grid(const json& sec) {
  EnergyGrid g;
  g.re_min = get_number(sec, "re_min", g.re_min);
  g.re_max = get_number(sec, "re_max", g.re_max);
  g.im_min = get_number(sec, "im_min", g.im_min);
  g.im_max = get_number(sec, "im_max", g.im_max);
  g.n_re = static_cast<int>(get_count(sec, "n_re", static_cast<std::size_t>(g.n_re)));
  g.n_im = static_cast<int>(get_count(sec, "n_im", static_cast<std::size_t>(g.n_im)));
  g.real_axis_band = get_number(sec, "real_axis_band", g.real_axis_band);
  return g;
}

Family read_family(const json& sec, const std::string& fallback) {
  try {
    return parse_family(get_string(sec, "family", fallback));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

// psi(r) = exp(-(r - c)^2 / 2w^2) cos(carrier r), cut to zero beyond 8 widths.
RadialSamples gaussian_bump(double center, double width, double carrier, double r_max, std::size_t n) {
  RadialSamples s{r_max, std::vector<Complex>(n)};
  for (std::size_t j = 0; j < n; ++j) {
    const double r = s.radius(j);
    const double x = (r - center) / width;
    if (std::abs(x) <= 8.0) s.values[j] = std::exp(-0.5 * x * x) * std::cos(carrier * r);
  }
  return s;
}

double radial_norm(const RadialSamples& s) {
  const auto w = simpson_weights(s.values.size(), s.spacing());
  std::vector<double> t(s.values.size());
  for (std::size_t j = 0; j < t.size(); ++j) t[j] = w[j] * std::norm(s.values[j]);
  return pairwise_sum(std::span<const double>(t));
}

double energy_norm(const std::vector<Complex>& coeffs, double de) {
  const auto w = simpson_weights(coeffs.size(), de);
  std::vector<double> t(coeffs.size());
  for (std::size_t j = 0; j < t.size(); ++j) t[j] = w[j] * std::norm(coeffs[j]);
  return pairwise_sum(std::span<const double>(t));
}

void add_check(Table& t, const std::string& name, double measured, double tolerance) {
  t.rows.push_back({name, measured, tolerance, measured <= tolerance});
}

}  // namespace

Table cmd_smatrix(const RunConfig& cfg) {
  const json& sec = cfg.section("smatrix");
  const double k_min = get_number(sec, "k_min", 0.05);
  const double k_max = get_number(sec, "k_max", 10.0);
  const std::size_t n = get_count(sec, "points", 1000);
  if (!(k_min > 0.0) || !(k_max > k_min) || n < 2)
    throw ConfigError("smatrix needs 0 < k_min < k_max and points >= 2");

  std::vector<Complex> ks;
  for (double k : linspace(k_min, k_max, n)) ks.emplace_back(k, 0.0);
  const auto jp = kernels::jost_grid(cfg.potential, cfg.scale, ks);

  Table t{.command = "smatrix", .columns = {"k", "E", "re_S", "im_S", "abs_S", "arg_S"}};
  for (const auto& j : jp) {
    if (!(std::abs(j.plus) > 1e-14 * std::abs(j.minus)))
      throw PoleError("J+ vanishes at k = " + format_number(j.k.real()));
    const Complex s = j.minus / j.plus;
    const double k = j.k.real();
    t.rows.push_back({k, k * k / cfg.scale.kappa(), s.real(), s.imag(), std::abs(s), std::arg(s)});
  }
  return t;
}

Table cmd_resonances(const RunConfig& cfg) {
  const ResonanceSearch res = search(cfg, cfg.section("resonances"));
  Table t{.command = "resonances", .columns = {"n", "re_k", "im_k", "E_n", "Gamma_n", "re_N2", "im_N2"}};
  for (std::size_t n = 0; n < res.states.size(); ++n) {
    const GamowState& st = res.states[n];
    t.rows.push_back({static_cast<long long>(n + 1), st.k.real(), st.k.imag(), st.energy, st.width,
                      st.norm_sq.real(), st.norm_sq.imag()});
    if (!st.residue_verified)
      t.warnings.push_back("pole " + std::to_string(n + 1) +
                           ": contour and derivative residues disagree; N^2 from the derivative formula");
  }
  for (Complex z : res.axis_zeros)
    t.warnings.push_back("zero of J+ on the imaginary axis (antibound or bound state) at k = " + complex_text(z));
  for (Complex z : res.other_zeros)
    t.warnings.push_back("zero of J+ outside the fourth quadrant at k = " + complex_text(z));
  if (res.truncated) t.warnings.push_back("more poles than max_states; table truncated");
  t.notes.push_back("winding=" + std::to_string(res.winding) + " refined=" + std::to_string(res.refined) +
                    " contour=[" + format_number(res.contour.re_min) + "," + format_number(res.contour.re_max) +
                    "]x[" + format_number(res.contour.im_min) + "," + format_number(res.contour.im_max) + "]");
  return t;
}

Table cmd_eigenfunction(const RunConfig& cfg) {
  const json& sec = cfg.section("eigenfunction");
  const std::string family = get_string(sec, "family", "standing_wave");
  const double b = cfg.potential.outer_radius();
  const double r_min = get_number(sec, "r_min", 0.0);
  const double r_max = get_number(sec, "r_max", 5.0 * b);
  const std::size_t n = get_count(sec, "points", 201);
  if (!(r_min >= 0.0) || !(r_max > r_min) || n < 2)
    throw ConfigError("eigenfunction needs 0 <= r_min < r_max and points >= 2");
  const auto radii = linspace(r_min, r_max, n);

  Table t{.command = "eigenfunction", .columns = {"r", "re_psi", "im_psi"}};
  if (family == "gamow") {
    const std::size_t index = get_count(sec, "pole_index", 1);
    const bool growing = get_bool(sec, "growing", false);
    const json& rsec = sec.contains("region") ? sec : cfg.section("resonances");
    const ResonanceSearch res = search(cfg, rsec);
    if (index < 1 || index > res.states.size())
      throw ConfigError("pole_index " + std::to_string(index) + " out of range (found " +
                        std::to_string(res.states.size()) + " poles)");
    const GamowState& decaying = res.states[index - 1];
    const GamowState st = growing ? growing_partner(decaying) : decaying;
    for (double r : radii) {
      const Complex u = gamow_eigenfunction(st, r);
      t.rows.push_back({r, u.real(), u.imag()});
    }
    t.notes.push_back(to_string(st.kind) + " state at k = " + complex_text(st.k) +
                      ", norm^2 = " + complex_text(st.norm_sq));
    return t;
  }

  Family fam;
  try {
    fam = parse_family(family);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (!sec.contains("energy")) throw ConfigError("eigenfunction needs 'energy' for a continuum family");
  const double energy = get_number(sec, "energy", 0.0);
  if (!(energy > 0.0)) throw ConfigError("energy must be positive");
  const ContinuumState state = continuum_state(fam, cfg.potential, cfg.scale, energy);
  for (double r : radii) {
    const Complex u = state(r);
    t.rows.push_back({r, u.real(), u.imag()});
  }
  t.notes.push_back(std::string(to_string(fam)) + " at E = " + format_number(energy) +
                    ", k = " + format_number(state.k()) + ", factor = " + complex_text(state.factor()));
  return t;
}

Table cmd_criterion(const RunConfig& cfg) {
  const json& sec = cfg.section("criterion");
  const EnergyGrid grid = read_energy_grid(sec);
  std::vector<std::string> names = {"rho", "rho_plus", "jost_plus", "standing_wave", "in", "out"};
  if (sec.contains("functions")) {
    if (!sec.at("functions").is_array()) throw ConfigError("'functions' must be an array of names");
    names.clear();
    for (const auto& v : sec.at("functions")) {
      if (!v.is_string()) throw ConfigError("'functions' must be an array of names");
      names.push_back(v.get<std::string>());
    }
  }
  const double rel = cfg.tolerances.at("criterion");

  Table t{.command = "criterion",
          .columns = {"label", "max_deviation", "threshold", "max_modulus", "classification", "samples",
                      "non_finite", "re_min", "re_max", "im_min", "im_max", "n_re", "n_im"}};
  for (const std::string& name : names) {
    EnergyFunction f;
    if (name == "rho") f = standing_measure_function(cfg.potential, cfg.scale);
    else if (name == "rho_plus" || name == "rho_minus") f = lippmann_measure_function(cfg.scale);
    else if (name == "jost_plus") f = jost_plus_function(cfg.potential, cfg.scale);
    else if (name == "jost_minus") f = jost_minus_function(cfg.potential, cfg.scale);
    else {
      try {
        f = eigensolution_factor(parse_family(name), cfg.potential, cfg.scale);
      } catch (const std::invalid_argument&) {
        throw ConfigError("unknown criterion function '" + name + "'");
      }
    }
    CriterionReport rep;
    try {
      rep = check_symmetry(name, f, grid, rel);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    if (rep.non_finite > 0)
      t.warnings.push_back(name + ": " + std::to_string(rep.non_finite) + " non-finite samples excluded");
    t.rows.push_back({rep.label, rep.max_deviation, rep.threshold, rep.max_modulus, to_string(rep.classification),
                      static_cast<long long>(rep.samples), static_cast<long long>(rep.non_finite), grid.re_min,
                      grid.re_max, grid.im_min, grid.im_max, grid.n_re, grid.n_im});
  }
  return t;
}

Table cmd_transform(const RunConfig& cfg) {
  const json& sec = cfg.section("transform");
  const Family fam = read_family(sec, "standing_wave");
  const json& st = sec.contains("state") ? sec.at("state") : json::object();
  const double b = cfg.potential.outer_radius();
  const double center = get_number(st, "center", 5.0 * b);
  const double width = get_number(st, "width", 1.0);
  const double carrier = get_number(st, "carrier", 4.0);
  const double r_max = get_number(sec, "r_max", 10.0 * b);
  const std::size_t nr = get_count(sec, "radial_points", 4001);
  const double e_min = get_number(sec, "e_min", 0.005);
  const double e_max = get_number(sec, "e_max", 80.005);
  const std::size_t ne = get_count(sec, "energy_points", 8001);
  if (!(width > 0.0) || !(r_max > 0.0) || !(e_min > 0.0) || !(e_max > e_min) || ne < 2)
    throw ConfigError("transform needs width > 0, r_max > 0, 0 < e_min < e_max, energy_points >= 2");

  const RadialSamples psi = gaussian_bump(center, width, carrier, r_max, nr);
  const auto energies = linspace(e_min, e_max, ne);
  TransformResult res;
  try {
    res = energy_transform(fam, cfg.potential, cfg.scale, psi, energies);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  Table t{.command = "transform", .columns = {"E", "re_psi_hat", "im_psi_hat", "abs2_psi_hat"}};
  for (std::size_t i = 0; i < energies.size(); ++i)
    t.rows.push_back({energies[i], res.coefficients[i].real(), res.coefficients[i].imag(),
                      std::norm(res.coefficients[i])});
  if (res.undersampled)
    t.warnings.push_back("psi has fewer than 12 samples per wavelength at the top energy (k dr = " +
                         format_number(res.phase_step) + ")");
  const double nr2 = radial_norm(psi);
  t.notes.push_back("integral |psi|^2 dr = " + format_number(nr2));
  if (ne % 2 == 1) {
    const double ne2 = energy_norm(res.coefficients, energies[1] - energies[0]);
    t.notes.push_back("integral |psi_hat|^2 dE = " + format_number(ne2) +
                      ", relative difference = " + format_number(std::abs(ne2 - nr2) / nr2));
  }
  return t;
}

Table cmd_verify(const RunConfig& cfg) {
  const json& sec = cfg.section("verify");
  const Potential& pot = cfg.potential;
  const PhysicalScale& scale = cfg.scale;
  const auto& tol = cfg.tolerances;
  const double b = pot.outer_radius();
  Table t{.command = "verify", .columns = {"check", "measured", "tolerance", "pass"}};

  {  // |S| = 1 on the physical line
    std::vector<Complex> ks;
    for (double k : linspace(0.05, get_number(sec, "k_max", 10.0), 1000)) ks.emplace_back(k, 0.0);
    double worst = 0.0;
    for (const auto& j : kernels::jost_grid(pot, scale, ks))
      worst = std::max(worst, std::abs(std::abs(j.minus / j.plus) - 1.0));
    add_check(t, "unitarity", worst, tol.at("unitarity"));
  }
  {  // <r|E+> = S(E) <r|E->
    double worst = 0.0;
    for (double e : linspace(0.5, 20.0, 50)) {
      const ContinuumState in = continuum_state(Family::in, pot, scale, e);
      const ContinuumState out = continuum_state(Family::out, pot, scale, e);
      const Complex s = s_matrix(pot, scale, in.solution().k()).s;
      for (double r : linspace(0.0, 3.0 * b, 50))
        worst = std::max(worst, std::abs(in(r) - s * out(r)) / std::max(1.0, std::abs(in(r))));
    }
    add_check(t, "proportionality", worst, tol.at("proportionality"));
  }
  {  // criterion classifications
    const EnergyGrid grid;
    const double rel = tol.at("criterion");
    const bool free = pot.is_free();
    for (Family fam : {Family::standing_wave, Family::in, Family::out}) {
      const CriterionReport rep = classify_eigensolution(fam, pot, scale, grid, rel);
      const bool expect_norm = fam == Family::standing_wave || free;
      const bool ok = (rep.classification == Classification::normalization) == expect_norm;
      t.rows.push_back({"criterion_" + std::string(to_string(fam)) + "_" + to_string(rep.classification),
                        rep.max_deviation, rep.threshold, ok});
    }
  }

  const json& rsec = cfg.section("resonances");
  const ResonanceSearch res = search(cfg, rsec);
  add_check(t, "winding_minus_refined", std::abs(res.winding - res.refined), 0.0);
  if (get_bool(sec, "oracle", true)) {
    const int n = static_cast<int>(get_count(sec, "oracle_grid", 400));
    const auto scan = oracles::grid_scan_zeros([&](Complex k) { return jost(pot, scale, k).plus; },
                                               res.contour, n);
    std::vector<Complex> found;
    for (const auto& st : res.states) found.push_back(st.k);
    for (Complex z : res.axis_zeros) found.push_back(z);
    for (Complex z : res.other_zeros) found.push_back(z);
    double worst = scan.zeros.size() == found.size() ? 0.0 : std::numeric_limits<double>::infinity();
    for (Complex z : scan.zeros) {
      double best = std::numeric_limits<double>::infinity();
      for (Complex f : found) best = std::min(best, std::abs(f - z));
      worst = std::max(worst, best);
    }
    add_check(t, "resonances_vs_grid_scan", worst, tol.at("oracle"));
  }
  if (!res.states.empty()) {
    const GamowState& st = res.states.front();
    const double nearest = res.states.size() > 1 ? std::abs(res.states[1].k - st.k)
                                                 : std::numeric_limits<double>::infinity();
    double gap = std::numeric_limits<double>::infinity();
    Complex m2{};
    try {
      gap = residue_norm(pot, scale, st.k, nearest).relative_gap;
    } catch (const ResidueError&) {
    }
    add_check(t, "residue_contour_vs_derivative", gap, tol.at("residue"));
    try {
      m2 = residue_norm(pot, scale, -std::conj(st.k), nearest).norm_sq;
      add_check(t, "partner_norm_conjugate", std::abs(m2 - std::conj(st.norm_sq)) / std::abs(st.norm_sq),
                tol.at("partner"));
    } catch (const ResidueError&) {
      add_check(t, "partner_norm_conjugate", std::numeric_limits<double>::infinity(), tol.at("partner"));
    }
    double tail = 0.0;
    for (double r : linspace(b, 5.0 * b, 101)) {
      const Complex ratio = st.norm * st.solution.value(r) / (st.j3 * std::exp(kI * st.k * r));
      tail = std::max(tail, std::abs(ratio - st.norm) / std::abs(st.norm));
    }
    add_check(t, "gamow_tail", tail, tol.at("tail"));
    double jump = 0.0;
    for (std::size_t l = 1; l < pot.layer_count(); ++l) {
      const double edge = pot.left_edge(l);
      const double left = std::nextafter(edge, 0.0);
      const double scale_uv = std::max(std::abs(gamow_eigenfunction(st, edge)),
                                       std::abs(gamow_eigenfunction_derivative(st, edge)));
      jump = std::max({jump,
                       std::abs(gamow_eigenfunction(st, left) - gamow_eigenfunction(st, edge)) / scale_uv,
                       std::abs(gamow_eigenfunction_derivative(st, left) -
                                gamow_eigenfunction_derivative(st, edge)) / scale_uv});
    }
    add_check(t, "gamow_continuity", jump, tol.at("continuity"));
  }

  if (get_bool(sec, "smeared", true)) {
    const GaussianSpec g{get_number(sec, "smeared_center", 15.0), get_number(sec, "smeared_width", 1.5)};
    const double r_max = get_number(sec, "smeared_r_max", 20.0 * b);
    const QuadSpec quad{get_count(sec, "smeared_energy_points", 601), get_count(sec, "smeared_radial_points", 2001),
                        tol.at("smeared")};
    for (Family fam : {Family::standing_wave, Family::in, Family::out}) {
      const auto rep = smeared_delta_check(fam, pot, scale, g, r_max, quad);
      add_check(t, "smeared_delta_" + std::string(to_string(fam)), rep.relative_error,
                pot.is_free() ? tol.at("smeared_free") : tol.at("smeared"));
      if (!rep.converged) t.warnings.push_back("smeared check for " + std::string(to_string(fam)) + " did not converge");
    }
    if (pot.is_free()) {
      const double exact = oracles::free_smeared_lhs(scale, g, r_max, quad.n_energy);
      const auto rep = smeared_delta_check(Family::standing_wave, pot, scale, g, r_max, quad);
      add_check(t, "smeared_delta_vs_sine_transform", std::abs(rep.lhs - exact) / exact, tol.at("smeared_free"));
    }
  }

  if (get_bool(sec, "parseval", true) && pot.is_nonnegative()) {
    const double r_max = get_number(sec, "parseval_r_max", 10.0 * b);
    const RadialSamples psi = gaussian_bump(0.5 * r_max, 1.0, 4.0, r_max, 4001);
    const auto energies = linspace(0.005, 80.005, 8001);
    const double nr2 = radial_norm(psi);
    for (Family fam : {Family::standing_wave, Family::in, Family::out}) {
      const auto res_t = energy_transform(fam, pot, scale, psi, energies);
      const double ne2 = energy_norm(res_t.coefficients, energies[1] - energies[0]);
      add_check(t, "parseval_" + std::string(to_string(fam)), std::abs(ne2 - nr2) / nr2, tol.at("parseval"));
    }
  }
  return t;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"radscat: scattering, resonances and eigenfunctions for piecewise-constant radial potentials"};
  app.fallthrough();
  app.require_subcommand(1);
  std::string config_path, out_path, format_name = "csv";
  std::vector<std::string> tolerance_overrides;
  app.add_option("--config", config_path, "JSON configuration file")->required();
  app.add_option("--out", out_path, "write output here instead of stdout");
  app.add_option("--format", format_name, "csv or record")->check(CLI::IsMember({"csv", "record"}));
  app.add_option("--tolerance", tolerance_overrides, "override a named tolerance, NAME=VALUE");

  using Command = Table (*)(const RunConfig&);
  const std::vector<std::pair<std::string, std::pair<std::string, Command>>> commands = {
      {"smatrix", {"S(k) on a real k grid", cmd_smatrix}},
      {"resonances", {"zeros of J+ (Gamow poles) in a k rectangle", cmd_resonances}},
      {"eigenfunction", {"continuum or Gamow eigenfunction on an r grid", cmd_eigenfunction}},
      {"criterion", {"conjugation-symmetry criterion on a complex E grid", cmd_criterion}},
      {"verify", {"run the verification suite", cmd_verify}},
      {"transform", {"energy representation of a Gaussian bump", cmd_transform}},
  };
  for (const auto& [name, info] : commands) app.add_subcommand(name, info.first);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "radscat: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    const RunConfig cfg = load_config(config_path, tolerance_overrides);
    const Format format = parse_format(format_name);
    Command cmd = nullptr;
    for (const auto& [name, info] : commands)
      if (app.got_subcommand(name)) cmd = info.second;

    const Table table = cmd(cfg);
    for (const auto& w : table.warnings) err << "radscat: warning: " << w << '\n';
    if (out_path.empty()) {
      write_table(out, table, cfg, format);
    } else {
      std::ofstream file(out_path);
      if (!file) throw ConfigError("cannot write '" + out_path + "'");
      write_table(file, table, cfg, format);
    }
    if (table.command == "verify") {
      bool all = true;
      for (const auto& row : table.rows) all = all && row.back().get<bool>();
      if (!all) {
        err << "radscat: verification failed\n";
        return kNumericalFailure;
      }
    }
    return kSuccess;
  } catch (const ConfigError& e) {
    err << "radscat: config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const NumericalError& e) {
    err << "radscat: numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const std::invalid_argument& e) {
    err << "radscat: invalid input: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "radscat: numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  }
}

}  // namespace radscat::cli
