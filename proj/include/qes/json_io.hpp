#ifndef QES_JSON_IO_HPP
#define QES_JSON_IO_HPP

#include <array>
#include <cstdio>
#include <initializer_list>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qes/bender_dunne.hpp"
#include "qes/bethe_gaudin.hpp"
#include "qes/fock_oracle.hpp"
#include "qes/model_core.hpp"
#include "qes/schrodinger.hpp"
#include "qes/transforms.hpp"

namespace qes {

using json = nlohmann::json;

namespace detail {

template <class E, std::size_t N>
void enum_to_json(json& j, E e, const std::array<std::pair<E, const char*>, N>& names) {
  for (const auto& [v, n] : names)
    if (v == e) {
      j = n;
      return;
    }
  throw Error(ErrorKind::InvalidParameter, "unnamed enum value");
}

template <class E, std::size_t N>
void enum_from_json(const json& j, E& e, const std::array<std::pair<E, const char*>, N>& names) {
  require(j.is_string(), ErrorKind::InvalidParameter, "expected an enum name");
  for (const auto& [v, n] : names)
    if (j.get<std::string>() == n) {
      e = v;
      return;
    }
  throw Error(ErrorKind::InvalidParameter, "unknown name '" + j.get<std::string>() + "'");
}

inline constexpr std::array<std::pair<SexticBC, const char*>, 2> sextic_bc_names{
    {{SexticBC::HermitianRadial, "HermitianRadial"}, {SexticBC::PTContour, "PTContour"}}};
inline constexpr std::array<std::pair<HyperbolicBC, const char*>, 4> hyperbolic_bc_names{
    {{HyperbolicBC::RealLineEven, "RealLineEven"},
     {HyperbolicBC::RealLineOdd, "RealLineOdd"},
     {HyperbolicBC::HalfLine, "HalfLine"},
     {HyperbolicBC::PTShifted, "PTShifted"}}};
inline constexpr std::array<std::pair<SexticBranch, const char*>, 2> sextic_branch_names{
    {{SexticBranch::P1, "P1"}, {SexticBranch::P2, "P2"}}};
inline constexpr std::array<std::pair<HyperbolicBranch, const char*>, 2> hyperbolic_branch_names{
    {{HyperbolicBranch::Alpha, "Alpha"}, {HyperbolicBranch::Beta, "Beta"}}};
inline constexpr std::array<std::pair<Method, const char*>, 4> method_names{
    {{Method::BAE, "BAE"}, {Method::Fock, "Fock"}, {Method::BenderDunne, "BenderDunne"}, {Method::ODE, "ODE"}}};

}  // namespace detail

// Unknown names are rejected rather than mapped to a default.
inline void to_json(json& j, SexticBC e) { detail::enum_to_json(j, e, detail::sextic_bc_names); }
inline void from_json(const json& j, SexticBC& e) { detail::enum_from_json(j, e, detail::sextic_bc_names); }
inline void to_json(json& j, HyperbolicBC e) { detail::enum_to_json(j, e, detail::hyperbolic_bc_names); }
inline void from_json(const json& j, HyperbolicBC& e) { detail::enum_from_json(j, e, detail::hyperbolic_bc_names); }
inline void to_json(json& j, SexticBranch e) { detail::enum_to_json(j, e, detail::sextic_branch_names); }
inline void from_json(const json& j, SexticBranch& e) { detail::enum_from_json(j, e, detail::sextic_branch_names); }
inline void to_json(json& j, HyperbolicBranch e) { detail::enum_to_json(j, e, detail::hyperbolic_branch_names); }
inline void from_json(const json& j, HyperbolicBranch& e) {
  detail::enum_from_json(j, e, detail::hyperbolic_branch_names);
}
inline void to_json(json& j, Method e) { detail::enum_to_json(j, e, detail::method_names); }
inline void from_json(const json& j, Method& e) { detail::enum_from_json(j, e, detail::method_names); }

namespace detail {

inline double num(real_t x) { return static_cast<double>(x); }

inline json nums(const std::vector<real_t>& xs) {
  json a = json::array();
  for (real_t x : xs) a.push_back(num(x));
  return a;
}

inline void check_keys(const json& j, std::initializer_list<const char*> allowed) {
  require(j.is_object(), ErrorKind::InvalidParameter, "expected a JSON object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& item : j.items())
    require(ok.count(item.key()) > 0, ErrorKind::InvalidParameter, "unknown key '" + item.key() + "'");
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

}  // namespace detail

inline void to_json(json& j, const SexticSpec& s) {
  j = {{"delta", detail::num(s.delta)},
       {"alpha", detail::num(s.alpha)},
       {"l", detail::num(s.l)},
       {"c_shift", detail::num(s.c_shift)},
       {"bc", s.bc}};
}
inline void from_json(const json& j, SexticSpec& s) {
  detail::check_keys(j, {"delta", "alpha", "l", "c_shift", "bc"});
  s.delta = detail::get_or<double>(j, "delta", 0);
  s.alpha = detail::get_or<double>(j, "alpha", 0);
  s.l = detail::get_or<double>(j, "l", 0);
  s.c_shift = detail::get_or<double>(j, "c_shift", 0);
  s.bc = detail::get_or(j, "bc", SexticBC::HermitianRadial);
}

inline void to_json(json& j, const HyperbolicSpec& s) {
  j = {{"a_lin", detail::num(s.a_lin)}, {"b_pole", detail::num(s.b_pole)}, {"c_pole", detail::num(s.c_pole)},
       {"gamma", detail::num(s.gamma)}, {"shift", detail::num(s.shift)},   {"bc", s.bc}};
}
inline void from_json(const json& j, HyperbolicSpec& s) {
  detail::check_keys(j, {"a_lin", "b_pole", "c_pole", "gamma", "shift", "bc"});
  s.a_lin = detail::get_or<double>(j, "a_lin", 0);
  s.b_pole = detail::get_or<double>(j, "b_pole", 0);
  s.c_pole = detail::get_or<double>(j, "c_pole", 0);
  s.gamma = detail::get_or<double>(j, "gamma", 0);
  s.shift = detail::get_or<double>(j, "shift", 0);
  s.bc = detail::get_or(j, "bc", HyperbolicBC::HalfLine);
}

inline void to_json(json& j, const SexticModelSpec& m) {
  j = {{"epsilon", detail::num(m.epsilon)}, {"q", detail::num(m.q)}, {"m_roots", m.m_roots}, {"branch", m.branch}};
}
inline void from_json(const json& j, SexticModelSpec& m) {
  detail::check_keys(j, {"epsilon", "q", "m_roots", "branch"});
  m.epsilon = detail::get_or<double>(j, "epsilon", 0);
  m.q = detail::get_or<double>(j, "q", 0);
  m.m_roots = detail::get_or(j, "m_roots", 0);
  m.branch = detail::get_or(j, "branch", SexticBranch::P2);
}

inline void to_json(json& j, const HyperbolicModelSpec& m) {
  j = {{"epsilon", detail::num(m.epsilon)}, {"g", detail::num(m.g)}, {"p_alpha", m.p},
       {"q_alpha", m.q},                    {"m_roots", m.m_roots},  {"branch", m.branch}};
}
inline void from_json(const json& j, HyperbolicModelSpec& m) {
  detail::check_keys(j, {"epsilon", "g", "p_alpha", "q_alpha", "m_roots", "branch"});
  m.epsilon = detail::get_or<double>(j, "epsilon", 0);
  m.g = detail::get_or<double>(j, "g", 1);
  m.p = detail::get_or(j, "p_alpha", 0);
  m.q = detail::get_or(j, "q_alpha", 0);
  m.m_roots = detail::get_or(j, "m_roots", 0);
  m.branch = detail::get_or(j, "branch", HyperbolicBranch::Alpha);
}

inline void to_json(json& j, const GenericBAESpec& m) {
  j = {{"a_lin", detail::num(m.a_lin)},
       {"b_res", detail::num(m.b_res)},
       {"c_res", detail::num(m.c_res)},
       {"gamma", detail::num(m.gamma)},
       {"m_roots", m.m_roots}};
}
inline void from_json(const json& j, GenericBAESpec& m) {
  detail::check_keys(j, {"a_lin", "b_res", "c_res", "gamma", "m_roots"});
  m.a_lin = detail::get_or<double>(j, "a_lin", 1);
  m.b_res = detail::get_or<double>(j, "b_res", 0);
  m.c_res = detail::get_or<double>(j, "c_res", 0);
  m.gamma = detail::get_or<double>(j, "gamma", 1);
  m.m_roots = detail::get_or(j, "m_roots", 0);
}

inline void to_json(json& j, const ShootingConfig& c) {
  j = {{"x_inner", detail::num(c.x_inner)},
       {"x_match", detail::num(c.x_match)},
       {"x_outer", detail::num(c.x_outer)},
       {"step_tolerance", detail::num(c.step_tolerance)},
       {"energy_bracket", {detail::num(c.energy_bracket.first), detail::num(c.energy_bracket.second)}},
       {"max_levels", c.max_levels},
       {"energy_tolerance", detail::num(c.energy_tolerance)},
       {"scan_step", detail::num(c.scan_step)}};
}

inline void to_json(json& j, const ContourSpec& c) {
  j = {{"ray_angles", {detail::num(c.ray_angles.first), detail::num(c.ray_angles.second)}},
       {"ray_radius", detail::num(c.ray_radius)},
       {"arc_radius", detail::num(c.arc_radius)}};
}

inline void to_json(json& j, const Spectrum& s) {
  json levels = json::array();
  for (const auto& l : s.levels)
    levels.push_back({{"index", l.index}, {"energy", detail::num(l.energy)}, {"residual", detail::num(l.residual)}});
  j = {{"levels", levels}, {"method", s.method}, {"diagnostics", s.diagnostics}};
}

inline void to_json(json& j, const BetheSolution& s) {
  json roots = json::array();
  for (auto r : s.roots) roots.push_back({detail::num(r.real()), detail::num(r.imag())});
  json model;
  std::visit([&](const auto& m) { model = m; }, s.model);
  j = {{"model", model},
       {"roots", roots},
       {"energy", detail::num(s.energy)},
       {"residual", detail::num(s.residual)}};
}

inline void to_json(json& j, const SectorMatrix& m) {
  j = {{"diagonal", detail::nums(m.diagonal)}, {"off_diagonal", detail::nums(m.off_diagonal)}};
}

inline void to_json(json& j, const FockSector3& s) {
  j = {{"n_total", s.n_total}, {"k_diff", s.k_diff}, {"basis", s.basis}};
}

inline void to_json(json& j, const FockSector4& s) { j = {{"charges", s.charges}, {"basis", s.basis}}; }

inline void to_json(json& j, const BDPolySequence& s) {
  json rows = json::array();
  for (const auto& c : s.coeffs) rows.push_back(detail::nums(c));
  j = {{"spec", s.spec}, {"coeffs", rows}};
}

inline void to_json(json& j, const CrumResult& c) {
  j = {{"base", c.base},
       {"target", c.target},
       {"removed_energies", detail::nums(c.removed_energies)},
       {"grid", detail::nums(c.grid)},
       {"transformed", detail::nums(c.transformed)},
       {"target_values", detail::nums(c.target_values)},
       {"max_deviation", detail::num(c.max_deviation)},
       {"min_abs_wronskian", detail::num(c.min_abs_wronskian)}};
}

inline void to_json(json& j, const SusyPartnerReport& r) {
  j = {{"zero_mode_residual", detail::num(r.zero_mode_residual)},
       {"zero_mode_side_max_deviation", detail::num(r.zero_mode_side_deviation)},
       {"partner_side_max_deviation", detail::num(r.partner_side_deviation)},
       {"worst_x", detail::num(r.worst_x)}};
}

inline void to_json(json& j, const SusyIsospectralityReport& r) {
  j = {{"zero_mode_side", detail::nums(r.zero_mode_side)},
       {"partner_side", detail::nums(r.partner_side)},
       {"zero_mode_energy", detail::num(r.zero_mode_energy)},
       {"zero_mode_residual", detail::num(r.zero_mode_residual)},
       {"max_level_difference", detail::num(r.max_level_difference)}};
}

/// Decimal with 12 significant digits.
inline std::string csv_number(real_t x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", static_cast<double>(x));
  return buf;
}

inline void write_csv(std::ostream& os, const Spectrum& s) {
  os << "index,energy,residual\n";
  for (const auto& l : s.levels) os << l.index << "," << csv_number(l.energy) << "," << csv_number(l.residual) << "\n";
}

/// (x, psi) samples for plotting.
inline void write_wavefunction_csv(std::ostream& os, const std::vector<std::pair<real_t, real_t>>& samples) {
  os << "x,psi\n";
  for (const auto& [x, p] : samples) os << csv_number(x) << "," << csv_number(p) << "\n";
}

inline json wavefunction_json(const std::vector<std::pair<real_t, real_t>>& samples) {
  json xs = json::array(), ps = json::array();
  for (const auto& [x, p] : samples) {
    xs.push_back(detail::num(x));
    ps.push_back(detail::num(p));
  }
  return {{"x", xs}, {"psi", ps}};
}

}  // namespace qes

#endif
