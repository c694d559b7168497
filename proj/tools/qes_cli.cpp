// qes_cli: tables, cross-method suites and single solves from the command line.
//
// Exit status: 0 success, 2 tolerance failure, 3 solver failure, 4 invalid parameters.

#include <boost/version.hpp>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qes/json_io.hpp"
#include "qes/runner.hpp"
#include "qes/transforms.hpp"

namespace {

using qes::json;
using qes::real_t;

constexpr int kOk = 0;
constexpr int kTolerance = 2;
constexpr int kSolver = 3;
constexpr int kInvalid = 4;

struct Report {
  json result;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  bool passed = true;
};

struct Common {
  std::string format = "json";
  std::string out;
  double tol = -1;  // command default when negative
  double step_tol = 1e-12;
  double energy_tol = 1e-9;
  bool timestamp = true;
};

std::string num(real_t x) { return qes::csv_number(x); }

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

json provenance(const std::string& command, const json& params, const Common& c, double tol) {
  json p = {{"program", "qes_cli"},
            {"version", "1.0.0"},
            {"command", command},
            {"parameters", params},
            {"tolerances", {{"pass", tol}, {"step", c.step_tol}, {"energy", c.energy_tol}}},
            {"precision", sizeof(real_t) == sizeof(double) ? "double" : "long double"},
            {"libraries",
             {{"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                            std::to_string(EIGEN_MINOR_VERSION)},
              {"boost", BOOST_LIB_VERSION}}},
            {"threads", qes::worker_count()}};
  if (c.timestamp) p["timestamp"] = utc_now();
  return p;
}

void print_table(std::ostream& os, const Report& r) {
  std::vector<std::size_t> width(r.header.size(), 0);
  for (std::size_t i = 0; i < r.header.size(); ++i) width[i] = r.header[i].size();
  for (const auto& row : r.rows)
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      os << (i ? "  " : "");
      os << std::string(width[i] - cells[i].size(), ' ') << cells[i];
    }
    os << "\n";
  };
  line(r.header);
  for (const auto& row : r.rows) line(row);
  os << (r.passed ? "PASS" : "FAIL") << "\n";
}

void emit(const Report& r, const std::string& command, const json& params, const Common& c, double tol) {
  std::ostringstream os;
  if (c.format == "json") {
    json doc = {{"provenance", provenance(command, params, c, tol)}, {"result", r.result}, {"passed", r.passed}};
    os << doc.dump(2) << "\n";
  } else if (c.format == "csv") {
    for (std::size_t i = 0; i < r.header.size(); ++i) os << (i ? "," : "") << r.header[i];
    os << "\n";
    for (const auto& row : r.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
      os << "\n";
    }
  } else {
    print_table(os, r);
  }
  if (c.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(c.out);
    qes::require(static_cast<bool>(f), qes::ErrorKind::InvalidParameter, "cannot open " + c.out);
    f << os.str();
  }
}

qes::ShootingConfig shooting(const Common& c) {
  qes::ShootingConfig cfg;
  cfg.step_tolerance = c.step_tol;
  cfg.energy_tolerance = c.energy_tol;
  return cfg;
}

double pick(double tol, double fallback) { return tol < 0 ? fallback : tol; }

json vec(const std::vector<real_t>& v) { return qes::detail::nums(v); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-exactly solvable spectra: tables, cross-method checks and direct solves"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--format", common.format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--out", common.out, "write output to this file instead of stdout");
  app.add_option("--tol", common.tol, "pass/fail tolerance (command-specific default)");
  app.add_option("--step-tol", common.step_tol, "ODE local error target");
  app.add_option("--energy-tol", common.energy_tol, "eigenvalue tolerance");
  app.add_flag("!--no-timestamp", common.timestamp, "omit the timestamp from the provenance block");

  double delta = 0.2, alpha = 0.31, l = 0.54, epsilon = -0.5, gamma = -1, m_param = 2, c_shift = 0, energy = 0;
  int J = 3, levels = 5, p = 0, q = 1, M = 1, n_max = 6;
  std::string family = "sextic", bc, branch;
  bool no_ode = false;
  std::vector<double> eps_list{0, 0.2, -0.2}, q_list{0, 1, 2};
  std::vector<int> m_list{0, 1, 2, 3}, p_list{0, 1}, qi_list{0, 1};
  double x_min = 0.05, x_max = 4;
  int n_points = 80;

  auto* t1 = app.add_subcommand("table1", "Hermitian radial vs PT partner spectrum");
  t1->add_option("--delta", delta);
  t1->add_option("--alpha", alpha);
  t1->add_option("--l", l);
  t1->add_option("--levels", levels);

  auto* t2 = app.add_subcommand("table2", "QES-point Hermitian spectrum vs PT spectrum with the QES levels removed");
  t2->add_option("--delta", delta);
  t2->add_option("--J", J);
  t2->add_option("--l", l);
  t2->add_option("--levels", levels);

  auto* cc = app.add_subcommand("crosscheck", "BAE / Fock / Bender-Dunne / ODE agreement over a grid");
  cc->add_option("--family", family)->check(CLI::IsMember({"sextic", "hyperbolic"}));
  cc->add_option("--epsilon", eps_list)->delimiter(',');
  cc->add_option("--q", q_list, "q values (sextic) ")->delimiter(',');
  cc->add_option("--qa", qi_list, "q_alpha values (hyperbolic)")->delimiter(',');
  cc->add_option("--p", p_list, "p_alpha values (hyperbolic)")->delimiter(',');
  cc->add_option("--M", m_list)->delimiter(',');
  cc->add_flag("--no-ode", no_ode, "algebraic methods only");

  auto* sp = app.add_subcommand("spectrum", "direct ODE eigenvalues of one potential");
  sp->add_option("--family", family)->check(CLI::IsMember({"sextic", "hyperbolic"}));
  sp->add_option("--delta", delta);
  sp->add_option("--alpha", alpha);
  sp->add_option("--l", l);
  sp->add_option("--C", c_shift, "additive constant (sextic) or shift (hyperbolic)");
  sp->add_option("--A", alpha, "hyperbolic A");
  sp->add_option("--B", delta, "hyperbolic B");
  sp->add_option("--Cpole", l, "hyperbolic C");
  sp->add_option("--gamma", gamma);
  sp->add_option("--M", m_param);
  sp->add_option("--bc", bc);
  sp->add_option("--levels", levels);

  auto* bae = app.add_subcommand("bae", "Bethe roots and energies of one model sector");
  bae->add_option("--family", family)->check(CLI::IsMember({"sextic", "hyperbolic"}));
  bae->add_option("--epsilon", epsilon);
  bae->add_option("--q", q);
  bae->add_option("--p", p);
  bae->add_option("--M", M);
  bae->add_option("--branch", branch);

  auto* bd = app.add_subcommand("bender-dunne", "polynomial table and QES roots");
  bd->add_option("--delta", delta);
  bd->add_option("--l", l);
  bd->add_option("--C", c_shift);
  bd->add_option("--J", J);
  bd->add_option("--nmax", n_max);

  auto* su = app.add_subcommand("susy", "superpotential identities and partner spectra");
  su->add_option("--M", m_param);
  su->add_option("--gamma", gamma);
  su->add_option("--levels", levels);

  auto* cr = app.add_subcommand("crum", "remove the QES levels of the QES-point potential");
  cr->add_option("--delta", delta);
  cr->add_option("--J", J);
  cr->add_option("--l", l);

  auto* wf = app.add_subcommand("wavefunction", "sample a shooting eigenfunction");
  wf->add_option("--family", family)->check(CLI::IsMember({"sextic", "hyperbolic"}));
  wf->add_option("--delta", delta);
  wf->add_option("--alpha", alpha);
  wf->add_option("--l", l);
  wf->add_option("--C", c_shift);
  wf->add_option("--A", alpha, "hyperbolic A");
  wf->add_option("--B", delta, "hyperbolic B");
  wf->add_option("--Cpole", l, "hyperbolic C");
  wf->add_option("--gamma", gamma);
  wf->add_option("--M", m_param);
  wf->add_option("--bc", bc);
  wf->add_option("--energy", energy)->required();
  wf->add_option("--xmin", x_min);
  wf->add_option("--xmax", x_max);
  wf->add_option("--points", n_points);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    Report r;
    json params;
    std::string command;
    double tol = 0;
    const auto cfg = shooting(common);

    if (*t1) {
      command = "table1";
      tol = pick(common.tol, 2e-6);
      params = {{"delta", delta}, {"alpha", alpha}, {"l", l}, {"levels", levels}};
      const auto t = qes::run_table1(delta, alpha, l, levels, cfg);
      r.header = {"n", "hermitian", "pt", "difference", "hermitian_residual", "pt_residual"};
      json rows = json::array();
      for (const auto& row : t.rows) {
        r.rows.push_back({std::to_string(row.n), num(row.hermitian), num(row.pt), num(row.difference),
                          num(row.hermitian_residual), num(row.pt_residual)});
        rows.push_back({{"n", row.n},
                        {"hermitian", double(row.hermitian)},
                        {"pt", double(row.pt)},
                        {"difference", double(row.difference)},
                        {"hermitian_residual", double(row.hermitian_residual)},
                        {"pt_residual", double(row.pt_residual)}});
      }
      r.passed = t.max_difference <= tol;
      r.result = {{"hermitian_spec", t.hermitian}, {"pt_spec", t.pt}, {"rows", rows},
                  {"max_difference", double(t.max_difference)}};
    } else if (*t2) {
      command = "table2";
      tol = pick(common.tol, 2e-6);
      params = {{"delta", delta}, {"J", J}, {"l", l}, {"levels", levels}};
      const auto t = qes::run_table2(delta, J, l, levels, cfg);
      r.header = {"n", "hermitian", "hermitian_residual", "pt", "pt_residual", "pt_minus_hermitian_n_plus_J"};
      json rows = json::array();
      for (std::size_t n = 0; n < t.hermitian_levels.size(); ++n) {
        const auto& h = t.hermitian_levels[n];
        const bool has_pt = n < t.pt_levels.size();
        r.rows.push_back({std::to_string(n), num(h.energy), num(h.residual),
                          has_pt ? num(t.pt_levels[n].energy) : "", has_pt ? num(t.pt_levels[n].residual) : "",
                          has_pt ? num(t.offset_differences[n]) : ""});
        json row = {{"n", n}, {"hermitian", double(h.energy)}, {"hermitian_residual", double(h.residual)}};
        if (has_pt) {
          row["pt"] = double(t.pt_levels[n].energy);
          row["pt_residual"] = double(t.pt_levels[n].residual);
          row["pt_minus_hermitian_n_plus_J"] = double(t.offset_differences[n]);
        }
        rows.push_back(row);
      }
      r.passed = t.max_offset_difference <= tol;
      r.result = {{"hermitian_spec", t.hermitian}, {"pt_spec", t.pt}, {"J", J}, {"rows", rows},
                  {"max_offset_difference", double(t.max_offset_difference)}};
    } else if (*cc) {
      command = "crosscheck";
      qes::CrosscheckTolerances ct;
      if (common.tol >= 0) ct.algebraic = common.tol;
      tol = ct.algebraic;
      json cells = json::array();
      if (family == "sextic") {
        params = {{"family", family}, {"epsilon", eps_list}, {"q", q_list}, {"M", m_list}, {"ode", !no_ode}};
        const auto res = qes::crosscheck_sextic({std::vector<real_t>(eps_list.begin(), eps_list.end()),
                                                 std::vector<real_t>(q_list.begin(), q_list.end()), m_list},
                                                !no_ode, ct, cfg);
        r.header = {"epsilon", "q", "M", "algebraic_deviation", "ode_deviation", "passed", "error"};
        for (const auto& c : res) {
          r.passed = r.passed && c.passed;
          r.rows.push_back({num(c.model.epsilon), num(c.model.q), std::to_string(c.model.m_roots),
                            num(c.algebraic_deviation), num(c.ode_deviation), c.passed ? "1" : "0", c.error});
          cells.push_back({{"model", c.model},
                           {"fock", vec(c.fock)},
                           {"bae_p1", vec(c.bae_p1)},
                           {"bae_p2", vec(c.bae_p2)},
                           {"bender_dunne", vec(c.bender_dunne)},
                           {"ode_hermitian", vec(c.ode_hermitian)},
                           {"ode_pt", vec(c.ode_pt)},
                           {"algebraic_deviation", double(c.algebraic_deviation)},
                           {"ode_deviation", double(c.ode_deviation)},
                           {"counts_ok", c.counts_ok},
                           {"passed", c.passed},
                           {"error", c.error}});
          if (c.error_kind && r.passed == false && !c.error.empty() && !qes::Error(*c.error_kind, "").is_parameter_error())
            r.result["solver_failure"] = true;
        }
      } else {
        params = {{"family", family}, {"epsilon", eps_list}, {"p_alpha", p_list}, {"q_alpha", qi_list},
                  {"M", m_list},       {"ode", !no_ode}};
        const auto res = qes::crosscheck_hyperbolic(
            {std::vector<real_t>(eps_list.begin(), eps_list.end()), p_list, qi_list, m_list}, !no_ode, ct, cfg);
        r.header = {"epsilon", "p_alpha", "q_alpha", "M", "algebraic_deviation", "ode_deviation", "passed", "error"};
        for (const auto& c : res) {
          r.passed = r.passed && c.passed;
          r.rows.push_back({num(c.alpha.epsilon), std::to_string(c.alpha.p), std::to_string(c.alpha.q),
                            std::to_string(c.alpha.m_roots), num(c.algebraic_deviation), num(c.ode_deviation),
                            c.passed ? "1" : "0", c.error});
          cells.push_back({{"alpha", c.alpha},
                           {"beta", c.beta},
                           {"fock", vec(c.fock)},
                           {"bae_alpha", vec(c.bae_alpha)},
                           {"bae_beta", vec(c.bae_beta)},
                           {"ode_qes", vec(c.ode_qes)},
                           {"ode_levels", vec(c.ode_levels)},
                           {"algebraic_deviation", double(c.algebraic_deviation)},
                           {"ode_deviation", double(c.ode_deviation)},
                           {"ode_checked", c.ode_checked},
                           {"counts_ok", c.counts_ok},
                           {"passed", c.passed},
                           {"error", c.error}});
          if (c.error_kind && !c.error.empty() && !qes::Error(*c.error_kind, "").is_parameter_error())
            r.result["solver_failure"] = true;
        }
      }
      r.result["cells"] = cells;
      r.result["algebraic_tolerance"] = double(ct.algebraic);
      r.result["ode_tolerance"] = double(ct.ode);
    } else if (*sp) {
      command = "spectrum";
      qes::ShootingConfig c = cfg;
      c.max_levels = levels;
      qes::Spectrum s;
      if (family == "sextic") {
        qes::SexticSpec spec{delta, alpha, l, c_shift, bc == "PTContour" ? qes::SexticBC::PTContour
                                                                         : qes::SexticBC::HermitianRadial};
        params = {{"spec", spec}, {"levels", levels}};
        s = spec.bc == qes::SexticBC::PTContour ? qes::pt_eigenvalues(spec, {}, c) : qes::radial_eigenvalues(spec, c);
      } else {
        qes::HyperbolicSpec spec{alpha, delta, l, gamma, c_shift, qes::natural_bc(delta)};
        if (!bc.empty()) spec.bc = json(bc).get<qes::HyperbolicBC>();
        params = {{"spec", spec}, {"M", m_param}, {"levels", levels}};
        s = qes::hyperbolic_eigenvalues(spec, m_param, c);
      }
      r.header = {"index", "energy", "residual"};
      for (const auto& lv : s.levels) r.rows.push_back({std::to_string(lv.index), num(lv.energy), num(lv.residual)});
      r.result = s;
    } else if (*bae) {
      command = "bae";
      std::vector<qes::BetheSolution> sols;
      if (family == "sextic") {
        qes::SexticModelSpec m{epsilon, static_cast<real_t>(q), M,
                               branch == "P1" ? qes::SexticBranch::P1 : qes::SexticBranch::P2};
        params = {{"model", m}};
        sols = qes::solve_sextic_bae(m);
      } else {
        qes::HyperbolicModelSpec m{epsilon, 1, p, q, M,
                                   branch == "Beta" ? qes::HyperbolicBranch::Beta : qes::HyperbolicBranch::Alpha};
        params = {{"model", m}};
        sols = qes::solve_hyperbolic_bae(m);
      }
      r.header = {"index", "energy", "residual"};
      json out = json::array();
      for (std::size_t i = 0; i < sols.size(); ++i) {
        r.rows.push_back({std::to_string(i), num(sols[i].energy), num(sols[i].residual)});
        out.push_back(sols[i]);
      }
      r.result = {{"solutions", out}};
    } else if (*bd) {
      command = "bender-dunne";
      qes::SexticSpec spec{delta, qes::qes_alpha(J, l), l, c_shift, qes::SexticBC::HermitianRadial};
      params = {{"spec", spec}, {"J", J}, {"nmax", n_max}};
      const auto seq = qes::bd_sequence(spec, std::max(n_max, J));
      const auto roots = qes::qes_roots(spec, J);
      r.header = {"index", "root"};
      for (std::size_t i = 0; i < roots.roots.size(); ++i) r.rows.push_back({std::to_string(i), num(roots.roots[i])});
      r.result = {{"sequence", seq}, {"roots", vec(roots.roots)}, {"all_real", roots.all_real}};
    } else if (*su) {
      command = "susy";
      tol = pick(common.tol, 1e-7);
      params = {{"M", m_param}, {"gamma", gamma}, {"levels", levels}};
      std::vector<real_t> grid;
      for (int i = 0; i <= 400; ++i) grid.push_back(-5 + real_t(i) / 40);
      const auto id = qes::susy_partner_check(m_param, gamma, grid);
      const auto iso = qes::susy_isospectrality_report(m_param, gamma, levels, cfg);
      r.header = {"n", "zero_mode_side", "partner_side"};
      for (std::size_t i = 0; i < iso.zero_mode_side.size(); ++i)
        r.rows.push_back({std::to_string(i), num(iso.zero_mode_side[i]),
                          i == 0 ? "" : num(iso.partner_side[i - 1])});
      r.passed = std::abs(iso.zero_mode_energy) <= tol && iso.max_level_difference <= tol &&
                 id.zero_mode_side_deviation <= 1e-9 && id.partner_side_deviation <= 1e-9;
      r.result = {{"identities", id}, {"isospectrality", iso}};
    } else if (*cr) {
      command = "crum";
      tol = pick(common.tol, 1e-6);
      params = {{"delta", delta}, {"J", J}, {"l", l}};
      std::vector<real_t> grid;
      for (int i = 0; i <= 280; ++i) grid.push_back(real_t(0.2) + real_t(i) / 100);
      const auto res = qes::crum_transform(delta, J, l, grid);
      r.header = {"x", "transformed", "target"};
      for (std::size_t i = 0; i < grid.size(); i += 20)
        r.rows.push_back({num(grid[i]), num(res.transformed[i]), num(res.target_values[i])});
      r.passed = res.max_deviation <= tol;
      r.result = res;
    } else if (*wf) {
      command = "wavefunction";
      std::vector<real_t> xs;
      for (int i = 0; i < n_points; ++i) xs.push_back(x_min + (x_max - x_min) * i / std::max(1, n_points - 1));
      std::vector<std::pair<real_t, real_t>> samples;
      if (family == "sextic") {
        qes::SexticSpec spec{delta, alpha, l, c_shift, qes::SexticBC::HermitianRadial};
        params = {{"spec", spec}, {"energy", energy}};
        samples = qes::radial_wavefunction(spec, energy, xs, cfg);
      } else {
        qes::HyperbolicSpec spec{alpha, delta, l, gamma, c_shift, qes::natural_bc(delta)};
        if (!bc.empty()) spec.bc = json(bc).get<qes::HyperbolicBC>();
        params = {{"spec", spec}, {"M", m_param}, {"energy", energy}};
        samples = qes::hyperbolic_wavefunction(spec, m_param, energy, xs, cfg);
      }
      r.header = {"x", "psi"};
      for (const auto& [x, v] : samples) r.rows.push_back({num(x), num(v)});
      r.result = qes::wavefunction_json(samples);
    }

    emit(r, command, params, common, tol);
    if (r.result.contains("solver_failure")) return kSolver;
    return r.passed ? kOk : kTolerance;
  } catch (const qes::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_parameter_error() ? kInvalid : kSolver;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
}
