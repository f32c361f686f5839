#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <future>
#include <limits>

#include <spdlog/spdlog.h>

#include "hadamard/hadamard.hpp"
#include "table.hpp"

namespace binodal {

using nlohmann::json;
using namespace hadamard;

namespace {

void warn(CommandResult& r, const std::string& msg) {
  spdlog::warn("{}", msg);
  r.warnings.push_back(msg);
}

void emit(CommandResult& r, const RunConfig& cfg, const Table& t, const std::string& stem) {
  r.outputs.push_back(write_table(t, cfg.out, stem, cfg.format));
  spdlog::debug("wrote {} ({} rows)", r.outputs.back(), t.rows.size());
}

json w_point_json(const MaterialParams& p) {
  if (!(p.mu < w_point_existence_threshold(p).mu)) return nullptr;
  const WPoint w = w_point(p);
  return {{"eps0", w.eps0}, {"eps_minus", w.eps_minus}, {"d_plus", w.d_plus()}, {"d_minus", w.d_minus()}};
}

Cell opt_cell(const std::optional<double>& v) {
  if (v) return *v;
  return std::monostate{};
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = (i + 1 == n) ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return v;
}

// Parallel map over a sweep, results in parameter order.
template <class F>
auto sweep_map(const std::vector<double>& mus, F f) {
  using R = decltype(f(0.0));
  std::vector<std::future<R>> jobs;
  jobs.reserve(mus.size());
  for (double mu : mus) jobs.push_back(std::async(std::launch::async, f, mu));
  std::vector<R> out;
  out.reserve(mus.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

} // namespace

CommandResult cmd_jumpset(const RunConfig& cfg) {
  CommandResult r;
  const MaterialParams& p = cfg.material;
  const double lo = std::max(jump_domain_lower_bound(p), 0.25 * std::sqrt(p.d1));
  const double hi = 2.0 * std::sqrt(p.d2);

  Table js({"eps0", "eps_plus", "eps_minus", "d_plus", "d_minus", "weierstrass_ok", "eps_plus_asymptotic",
            "eps_minus_asymptotic"});
  for (const JumpPair& jp : jump_set_curve(p, lo, hi, cfg.samples)) {
    const JumpPair ja = jump_pair_asymptotic(jp.eps0, p);
    js.add({jp.eps0, jp.eps_plus, jp.eps_minus, jp.d_plus, jp.d_minus, jp.weierstrass_ok, ja.eps_plus,
            ja.eps_minus});
  }
  emit(r, cfg, js, "jumpset");

  Table hyp({"eps1", "eps2_d1", "eps2_d2"});
  for (double e : linspace(0.25 * std::sqrt(p.d1), hi, cfg.samples)) hyp.add({e, p.d1 / e, p.d2 / e});
  emit(r, cfg, hyp, "hyperbolas");

  const CubicMaximum top = w_point_existence_threshold(p);
  Table wp({"label", "eps1", "eps2"});
  json w = w_point_json(p);
  if (w.is_null()) {
    warn(r, "no W-points: mu=" + format_double(p.mu) + " is at or above the existence threshold " +
                format_double(top.mu));
    r.results["w_point_status"] = nullptr;
  } else {
    const double e0 = w["eps0"], em = w["eps_minus"];
    wp.add({std::string("w_point"), e0, em});
    wp.add({std::string("w_point_mirror"), em, e0});
    wp.add({std::string("hydrostatic"), e0, e0});
    const PcxVerdict v = w_point_pcx_check(p);
    r.results["w_point_status"] = std::string(to_string(v.status));
  }
  emit(r, cfg, wp, "wpoints");

  r.results["w_point"] = w;
  r.results["existence_threshold"] = {{"mu", top.mu}, {"d", top.d}};
  r.results["eps0_range"] = {lo, hi};
  if (cfg.panel) r.results["panel"] = *cfg.panel;
  return r;
}

CommandResult cmd_secondary(const RunConfig& cfg) {
  CommandResult r;
  const MaterialParams& p = cfg.material;
  const auto [lo, hi] = secondary_eps0_range(p);

  Table asym({"eps0", "x0", "y0"});
  for (double e : linspace(lo, hi, cfg.samples)) {
    const StrainPoint s = asymptotic_secondary(e, p);
    asym.add({e, s.x0, s.y0});
  }
  emit(r, cfg, asym, "secondary_asymptotic");
  r.results["window"] = {lo, hi};
  r.results["w_point"] = w_point_json(p);

  if (!(p.mu > 0.0)) {
    warn(r, "mu=0: the secondary system degenerates; only the limit curve is written");
    r.results["bisector"] = nullptr;
    r.results["far_end_eps0"] = nullptr;
    r.results["branch_points"] = 0;
    return r;
  }

  const SecondaryCurve c = secondary_curve(p, cfg.samples);
  auto fill = [&](const std::vector<SecondaryPoint>& pts) {
    Table t({"eps0", "eps_bar", "d0", "lambda", "x0", "y0", "y0_asymptotic"});
    for (const SecondaryPoint& s : pts) {
      std::optional<double> ya;
      try {
        ya = asymptotic_secondary_y(s.x0, p);
      } catch (const OutsideWindow&) {
      }
      t.add({s.eps0, s.eps_bar, s.d0, s.lambda, s.x0, s.y0, opt_cell(ya)});
    }
    return t;
  };
  emit(r, cfg, fill(c.branch), "secondary");
  emit(r, cfg, fill(c.full), "secondary_full");
  Table mirror({"eps1", "eps2"});
  for (const DiagonalStrain& s : c.mirror) mirror.add({s.eps1, s.eps2});
  emit(r, cfg, mirror, "secondary_mirror");

  if (c.bisector) {
    r.results["bisector"] = {{"eps", c.bisector->x0}, {"eps0", c.bisector->eps0}, {"lambda", c.bisector->lambda}};
  } else {
    warn(r, "secondary branch does not reach the bisector");
    r.results["bisector"] = nullptr;
  }
  r.results["far_end_eps0"] = c.far_end_eps0;
  r.results["branch_points"] = c.branch.size();
  return r;
}

namespace {

json nucleus_scalars(const MaterialParams& p, const NucleusSolution& sol) {
  const double asym = eps_inf_asymptotic(p);
  return {{"eps_inf", sol.eps_inf},
          {"eps_inf_asymptotic", asym},
          {"relative_gap", std::abs(sol.eps_inf - asym) / sol.eps_inf},
          {"nondegeneracy", nondegeneracy(p, sol)}};
}

NucleusOptions nucleus_options(const RunConfig& cfg) {
  NucleusOptions o;
  o.uniform_samples = cfg.samples;
  return o;
}

} // namespace

CommandResult cmd_nucleus(const RunConfig& cfg) {
  CommandResult r;
  const MaterialParams& p = cfg.material;
  const NucleusSolution sol = solve_nucleus(p, nucleus_options(cfg));

  Table prof({"x", "r", "v", "v_prime", "eta", "eta_prime", "det", "eta_asymptotic", "eta_prime_asymptotic"});
  for (const ProfileSample& s : sol.samples) {
    if (s.x > 0.0) {
      const auto [ea, dea] = eta_profile_asymptotic(s.r(), p);
      prof.add({s.x, s.r(), s.v, s.v_prime, s.eta(), s.eta_prime(), s.det(), ea, dea});
    } else {
      prof.add({s.x, std::monostate{}, s.v, s.v_prime, std::monostate{}, s.eta_prime(), s.det(),
                std::monostate{}, std::monostate{}});
    }
  }
  emit(r, cfg, prof, "profile");
  r.results = nucleus_scalars(p, sol);
  r.results["w_point"] = w_point_json(p);

  if (cfg.sweep) {
    const std::vector<double> mus = cfg.sweep->values();
    const auto rows = sweep_map(mus, [&](double mu) {
      const MaterialParams q = p.with_mu(mu);
      return nucleus_scalars(q, solve_nucleus(q, nucleus_options(cfg)));
    });
    Table t({"mu", "eps_inf", "eps_inf_asymptotic", "relative_gap", "nondegeneracy"});
    json sweep = json::array();
    for (std::size_t i = 0; i < mus.size(); ++i) {
      t.add({mus[i], rows[i]["eps_inf"].get<double>(), rows[i]["eps_inf_asymptotic"].get<double>(),
             rows[i]["relative_gap"].get<double>(), rows[i]["nondegeneracy"].get<double>()});
      json e = rows[i];
      e["mu"] = mus[i];
      sweep.push_back(e);
    }
    emit(r, cfg, t, "eps_inf");
    r.results["sweep"] = sweep;
  }
  return r;
}

CommandResult cmd_qw(const RunConfig& cfg) {
  CommandResult r;
  const MaterialParams& p = cfg.material;
  const NucleusSolution sol = solve_nucleus(p, nucleus_options(cfg));
  const HydroQWCurve c = qw_hydrostatic(p, sol);

  Table t({"r", "eps", "qw", "w", "d", "eps_asymptotic", "qw_asymptotic", "d_asymptotic"});
  double worst = -std::numeric_limits<double>::infinity();
  for (const HydroQWPoint& q : c.points) {
    const auto [ea, dea] = eta_profile_asymptotic(q.r, p);
    const double eps_a = ea / q.r;
    t.add({q.r, q.eps, q.qw, q.w, q.d, eps_a, qw_formula(eps_a, dea, p), eps_a * dea});
    worst = std::max(worst, q.qw - q.w);
  }
  emit(r, cfg, t, "qw");

  const HydroQWPoint& top = c.points.back();
  r.results["eps_inf"] = sol.eps_inf;
  r.results["eps_range"] = {c.points.front().eps, top.eps};
  r.results["qw_at_boundary"] = top.qw;
  r.results["w_at_boundary"] = top.w;
  r.results["max_qw_minus_w"] = worst;
  r.results["qw_below_w"] = worst <= 1e-9;
  r.results["w_point"] = w_point_json(p);
  if (worst > 1e-9) warn(r, "QW exceeds W somewhere along the curve");
  return r;
}

namespace {

json hydro_bound_json(const MaterialParams& p) {
  if (!(p.mu > 0.0)) return nullptr;
  const HydroPcxBound b = pcx_bound_hydro_numeric(p);
  return {{"polyconvex_up_to", b.polyconvex_up_to},
          {"not_polyconvex_from", b.not_polyconvex_from},
          {"indeterminate_gap", b.has_indeterminate_gap()},
          {"asymptotic", pcx_bound_hydro_asymptotic(p)}};
}

json w_status_json(const MaterialParams& p) {
  if (!(p.mu < w_point_existence_threshold(p).mu)) return nullptr;
  return std::string(to_string(w_point_pcx_check(p).status));
}

} // namespace

CommandResult cmd_pcx(const RunConfig& cfg) {
  CommandResult r;
  const MaterialParams& p = cfg.material;

  r.results["pcx_threshold"] = w_point_pcx_threshold(p.d1, p.d2);
  r.results["w_point_status"] = w_status_json(p);
  r.results["w_point"] = w_point_json(p);

  std::size_t n_indeterminate = 0;
  if (p.mu > 0.0) {
    Table scan({"eps", "status", "m_star", "gap", "witness"});
    for (double e : linspace(std::sqrt(p.d1), std::sqrt(p.d2), cfg.samples)) {
      const PcxVerdict v = pcx_classify_hydro(e, p);
      if (v.status == PcxStatus::Indeterminate) ++n_indeterminate;
      scan.add({e, std::string(to_string(v.status)), v.m_star, v.gap, opt_cell(v.witness)});
    }
    emit(r, cfg, scan, "pcx_scan");
  } else {
    warn(r, "mu=0: the hydrostatic polyconvexity test needs mu > 0; scan skipped");
  }
  r.results["hydrostatic_bound"] = hydro_bound_json(p);
  r.results["indeterminate_count"] = n_indeterminate;

  // Inner and outer bounds on the bisector, numeric next to first order in mu.
  Table bounds({"quantity", "numeric", "asymptotic"});
  if (p.mu > 0.0) {
    const json& hb = r.results["hydrostatic_bound"];
    bounds.add({std::string("pcx_bound"), hb["polyconvex_up_to"].get<double>(), hb["asymptotic"].get<double>()});
  }
  try {
    const NucleusSolution sol = solve_nucleus(p);
    bounds.add({std::string("eps_inf"), sol.eps_inf, eps_inf_asymptotic(p)});
    r.results["eps_inf"] = sol.eps_inf;
  } catch (const std::exception& e) {
    warn(r, std::string("nucleus bound unavailable: ") + e.what());
    r.results["eps_inf"] = nullptr;
  }
  if (p.mu > 0.0) {
    try {
      const SecondaryCurve c = secondary_curve(p);
      if (c.bisector) {
        bounds.add({std::string("secondary_bisector"), c.bisector->x0, std::monostate{}});
        r.results["secondary_bisector"] = c.bisector->x0;
      }
    } catch (const std::exception& e) {
      warn(r, std::string("secondary bound unavailable: ") + e.what());
    }
  }
  if (!r.results.contains("secondary_bisector")) r.results["secondary_bisector"] = nullptr;
  emit(r, cfg, bounds, "bounds");

  if (cfg.sweep) {
    const std::vector<double> mus = cfg.sweep->values();
    const auto rows = sweep_map(mus, [&](double mu) {
      const MaterialParams q = p.with_mu(mu);
      return json{{"hydrostatic_bound", hydro_bound_json(q)}, {"w_point_status", w_status_json(q)}};
    });
    Table t({"mu", "polyconvex_up_to", "not_polyconvex_from", "asymptotic", "w_point_status"});
    for (std::size_t i = 0; i < mus.size(); ++i) {
      const json& hb = rows[i]["hydrostatic_bound"];
      const json& ws = rows[i]["w_point_status"];
      auto num = [&](const char* k) -> Cell {
        if (hb.is_null()) return std::monostate{};
        return hb[k].get<double>();
      };
      t.add({mus[i], num("polyconvex_up_to"), num("not_polyconvex_from"), num("asymptotic"),
             ws.is_null() ? Cell{std::monostate{}} : Cell{ws.get<std::string>()}});
    }
    emit(r, cfg, t, "pcx_sweep");
  }
  return r;
}

CommandResult cmd_binodal(const RunConfig& cfg) {
  CommandResult r;
  const MaterialParams& p = cfg.material;
  const NucleusSolution sol = solve_nucleus(p, nucleus_options(cfg));
  const BinodalCurves bc = binodal_curves(p, sol);

  // Samples run from r = 1 outwards, matching the curve order.
  Table t({"r", "eps1", "eps2", "eps1_asymptotic", "eps2_asymptotic"});
  std::size_t i = 0;
  for (auto it = sol.samples.rbegin(); it != sol.samples.rend(); ++it, ++i) {
    const DiagonalStrain& s = bc.first[i];
    if (it->x > 0.0) {
      const double rr = it->r();
      const auto [ea, dea] = eta_profile_asymptotic(rr, p);
      t.add({rr, s.eps1, s.eps2, ea / rr, dea});
    } else {
      const double e = eps_inf_asymptotic(p);
      t.add({std::monostate{}, s.eps1, s.eps2, e, e});
    }
  }
  emit(r, cfg, t, "binodal");
  Table m({"eps1", "eps2"});
  for (const DiagonalStrain& s : bc.second) m.add({s.eps1, s.eps2});
  emit(r, cfg, m, "binodal_mirror");

  r.results["eps_inf"] = sol.eps_inf;
  r.results["w_point"] = w_point_json(p);
  r.results["secondary_bisector"] = nullptr;
  if (p.mu > 0.0) {
    try {
      const SecondaryCurve c = secondary_curve(p);
      Table s({"eps1", "eps2"});
      for (const SecondaryPoint& q : c.branch) s.add({q.x0, q.y0});
      emit(r, cfg, s, "secondary_branch");
      if (c.bisector) r.results["secondary_bisector"] = c.bisector->x0;
    } catch (const std::exception& e) {
      warn(r, std::string("secondary curve unavailable: ") + e.what());
    }
  }
  return r;
}

json make_summary(const RunConfig& cfg, const CommandResult& r) {
  json params = {{"mu", cfg.material.mu},
                 {"d1", cfg.material.d1},
                 {"d2", cfg.material.d2},
                 {"samples", cfg.samples},
                 {"format", std::string(to_string(cfg.format))},
                 {"panel", cfg.panel ? json(*cfg.panel) : json(nullptr)},
                 {"mu_sweep", nullptr},
                 {"sources", cfg.sources}};
  if (cfg.sweep) params["mu_sweep"] = {{"start", cfg.sweep->start}, {"stop", cfg.sweep->stop}, {"step", cfg.sweep->step}};
  std::vector<std::string> outputs = r.outputs;
  outputs.push_back("summary.json");
  return {{"command", cfg.command},
          {"version", BINODAL_VERSION},
          {"parameters", params},
          {"outputs", outputs},
          {"results", r.results},
          {"warnings", r.warnings}};
}

void execute(const RunConfig& cfg) {
  std::error_code ec;
  std::filesystem::create_directories(cfg.out, ec);
  if (ec || !std::filesystem::is_directory(cfg.out))
    throw ConfigError("cannot create output directory '" + cfg.out.string() + "'");

  spdlog::info("{}: mu={} d1={} d2={} samples={}", cfg.command, cfg.material.mu, cfg.material.d1,
               cfg.material.d2, cfg.samples);
  CommandResult r;
  if (cfg.command == "jumpset") r = cmd_jumpset(cfg);
  else if (cfg.command == "secondary") r = cmd_secondary(cfg);
  else if (cfg.command == "nucleus") r = cmd_nucleus(cfg);
  else if (cfg.command == "qw") r = cmd_qw(cfg);
  else if (cfg.command == "pcx") r = cmd_pcx(cfg);
  else if (cfg.command == "binodal") r = cmd_binodal(cfg);
  else throw ConfigError("unknown command '" + cfg.command + "'");
  write_json(cfg.out / "summary.json", make_summary(cfg, r));
}

} // namespace binodal
