#include "lqspec/pipeline.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "lqspec/empirical.hpp"
#include "lqspec/projection.hpp"
#include "lqspec/render.hpp"

namespace lqspec {

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 6> kCommands{{
    {Command::Validate, "validate"},
    {Command::Render, "render"},
    {Command::Beta, "beta"},
    {Command::Gamma, "gamma"},
    {Command::Tau, "tau"},
    {Command::Report, "report"},
}};

constexpr int kDistortionSamples = 2000;

std::string_view source_name(BetaSource s) {
  return s == BetaSource::Empirical ? "empirical" : "closed_form";
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [cmd, text] : kCommands)
    if (text == name) return cmd;
  return std::nullopt;
}

std::string_view command_name(Command c) {
  for (const auto& [cmd, text] : kCommands)
    if (cmd == c) return text;
  return "unknown";
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

bool Validation::gates_pass() const {
  return contraction.pass() && domination.admissible() && rosc.status != RoscStatus::Violated;
}

Validation validate(const RunConfig& cfg) {
  const Ifs& ifs = cfg.system;
  const Tolerances& tol = cfg.tolerances;
  Validation v;
  v.contraction = check_contraction(ifs, tol.contraction);
  v.domination = check_domination(ifs, tol.domination);

  if (!v.contraction.self_map) v.warnings.push_back("some image leaves the unit square");
  if (!(v.contraction.c_bound < 1.0))
    v.warnings.push_back("contraction not certified (c_bound >= 1)");

  if (v.domination.admissible()) {
    v.rosc = check_rosc(ifs, tol.rosc_depth, tol.rosc);
    v.distortion = distortion_diagnostics(ifs, cfg.k_max, kDistortionSamples, cfg.seed);
    if (!v.domination.pass)
      v.warnings.push_back("domination holds only with equality: all maps are similarities");
    if (v.rosc.status == RoscStatus::Inconclusive)
      v.warnings.push_back(
          "ROSC inconclusive at the configured depth; gamma is then only a one-sided bound");
  } else {
    v.rosc.status = RoscStatus::Inconclusive;
    v.warnings.push_back("domination condition fails; ROSC and distortion checks skipped");
  }
  return v;
}

std::string validation_text(const RunConfig& cfg, const Validation& v) {
  std::ostringstream os;
  const auto num = [](double x) { return format_number(x); };
  os << "system: " << cfg.system.label() << " (" << cfg.system.size() << " maps)\n\n";

  os << "contraction: " << (v.contraction.pass() ? "pass" : "FAIL") << "\n";
  os << "  self_map: " << (v.contraction.self_map ? "yes" : "no") << "\n";
  os << "  c_bound: " << num(v.contraction.c_bound) << "\n";
  for (std::size_t i = 0; i < v.contraction.lipschitz_bound.size(); ++i)
    os << "  map " << i + 1 << ": lipschitz <= " << num(v.contraction.lipschitz_bound[i]) << "\n";

  const DominationReport& d = v.domination;
  os << "\ndomination: " << (d.pass ? "pass" : (d.similarity ? "similarity (boundary case)" : "FAIL"))
     << "\n";
  for (std::size_t i = 0; i < d.maps.size(); ++i) {
    const MapBounds& b = d.maps[i];
    os << "  map " << i + 1 << ": inf fx = " << num(b.inf_fx) << ", sup fx = " << num(b.sup_fx)
       << ", inf gy = " << num(b.inf_gy) << ", sup gy = " << num(b.sup_gy) << "\n";
  }
  os << "  d = " << num(d.d) << "\n  eta = " << num(d.eta) << "\n";
  os << "  alpha_min = " << num(d.alpha_min) << ", alpha_max = " << num(d.alpha_max) << "\n";
  os << "  p_min = " << num(d.p_min) << ", p_max = " << num(d.p_max) << "\n";

  os << "\nrosc: " << to_string(v.rosc.status) << " (depth " << cfg.tolerances.rosc_depth
     << ", " << v.rosc.pairs_examined << " box pairs)\n";
  if (v.rosc.witness) {
    const RoscWitness& w = *v.rosc.witness;
    os << "  witness: maps " << w.i + 1 << " and " << w.j + 1 << " share (" << num(w.point.x)
       << ", " << num(w.point.y) << ")\n";
  }

  if (d.admissible()) {
    const DistortionReport& r = v.distortion;
    os << "\ndistortion (k_max " << r.k_max << ", " << r.samples << " samples):\n";
    os << "  R_hat = " << num(r.R_hat) << "\n  C_hat = " << num(r.C_hat) << "\n";
    os << "  K1_hat = " << num(r.K1_hat) << ", K2_hat = " << num(r.K2_hat) << "\n";
  }

  for (const std::string& w : v.warnings) os << "\nwarning: " << w;
  os << "\n\ngates: " << (v.gates_pass() ? "pass" : "FAIL") << "\n";
  return os.str();
}

std::string validation_json(const RunConfig& cfg, const Validation& v) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["system"] = cfg.system.label();
  j["contraction"] = {{"pass", v.contraction.pass()},
                      {"self_map", v.contraction.self_map},
                      {"c_bound", v.contraction.c_bound},
                      {"lipschitz_bound", v.contraction.lipschitz_bound}};
  const DominationReport& d = v.domination;
  ordered_json maps = ordered_json::array();
  for (const MapBounds& b : d.maps)
    maps.push_back({{"inf_fx", b.inf_fx}, {"sup_fx", b.sup_fx}, {"inf_gy", b.inf_gy},
                    {"sup_gy", b.sup_gy}});
  j["domination"] = {{"pass", d.pass},          {"similarity", d.similarity},
                     {"maps", maps},            {"d", d.d},
                     {"eta", d.eta},            {"alpha_min", d.alpha_min},
                     {"alpha_max", d.alpha_max}, {"p_min", d.p_min},
                     {"p_max", d.p_max}};
  j["rosc"] = {{"status", to_string(v.rosc.status)}, {"pairs_examined", v.rosc.pairs_examined}};
  if (v.rosc.witness) {
    const RoscWitness& w = *v.rosc.witness;
    j["rosc"]["witness"] = {{"maps", {w.i, w.j}}, {"point", {w.point.x, w.point.y}}};
  }
  if (d.admissible()) {
    const DistortionReport& r = v.distortion;
    j["distortion"] = {{"R_hat", r.R_hat},   {"C_hat", r.C_hat},   {"K1_hat", r.K1_hat},
                       {"K2_hat", r.K2_hat}, {"k_max", r.k_max}, {"samples", r.samples}};
  }
  j["warnings"] = v.warnings;
  j["gates_pass"] = v.gates_pass();
  return j.dump(2) + "\n";
}

std::string report_csv(std::span<const ReportRow> rows) {
  std::string out(kReportHeader);
  out += '\n';
  for (const ReportRow& r : rows) {
    out += format_number(r.q) + ',' + format_number(r.beta) + ',' + r.beta_src + ',' +
           format_number(r.gamma) + ',' + format_number(r.gamma_residual) + ',' +
           format_number(r.tau_hat) + ',' + format_number(r.tau_r2) + ',' +
           format_number(r.abs_gap) + '\n';
  }
  return out;
}

namespace {

BetaOptions beta_options(const RunConfig& cfg) { return {cfg.deltas, cfg.z0.x}; }

GammaCurve compute_gamma(const RunConfig& cfg) {
  return gamma_curve(cfg.system, cfg.q_grid, cfg.tolerances.gamma, cfg.k_max, cfg.beta_source,
                     beta_options(cfg), cfg.z0);
}

}  // namespace

std::vector<ReportRow> compute_report(const RunConfig& cfg) {
  const GammaCurve curve = compute_gamma(cfg);
  const auto taus = tau_curve(cfg.system, cfg.q_grid, cfg.deltas, cfg.z0);
  std::vector<ReportRow> rows;
  for (std::size_t i = 0; i < cfg.q_grid.size(); ++i) {
    const GammaPoint& g = curve.points[i];
    ReportRow r;
    r.q = g.q;
    r.beta = g.beta_used;
    r.beta_src = std::string(source_name(cfg.beta_source));
    r.gamma = g.gamma;
    r.gamma_residual = g.residual;
    r.tau_hat = taus[i].tau;
    r.tau_r2 = taus[i].fit_r2;
    r.abs_gap = std::abs(r.tau_hat - r.gamma);
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

namespace {

std::string render_ppm(const RunConfig& cfg) {
  const auto pts = chaos_game(cfg.system, cfg.render.points, cfg.seed, cfg.render.burn_in);
  return encode_ppm(rasterize(pts, cfg.render.width, cfg.render.height));
}

std::string summary_text(const RunConfig& cfg, const Validation& v,
                         std::span<const ReportRow> rows) {
  std::ostringstream os;
  os << "system: " << cfg.system.label() << "\n";
  os << "gates: " << (v.gates_pass() ? "pass" : "FAIL") << ", rosc "
     << to_string(v.rosc.status) << "\n";
  os << "k_max: " << cfg.k_max << ", deltas: " << format_number(cfg.deltas.front()) << " .. "
     << format_number(cfg.deltas.back()) << " (" << cfg.deltas.size() << " scales)\n\n";
  double worst = 0.0;
  for (const ReportRow& r : rows) {
    os << "q = " << format_number(r.q) << ": gamma = " << format_number(r.gamma)
       << ", tau_hat = " << format_number(r.tau_hat) << ", |gap| = " << format_number(r.abs_gap)
       << "\n";
    worst = std::max(worst, r.abs_gap);
  }
  os << "\nmax |tau_hat - gamma| = " << format_number(worst) << "\n";
  for (const std::string& w : v.warnings) os << "warning: " << w << "\n";
  return os.str();
}

int run_checked(const RunConfig& cfg, Command command, const std::filesystem::path& out,
                std::ostream& log) {
  if (command == Command::Render) {
    write_file_atomic(out / "attractor.ppm", render_ppm(cfg));
    log << "wrote " << (out / "attractor.ppm").string() << "\n";
    return kExitOk;
  }

  const Validation v = validate(cfg);
  for (const std::string& w : v.warnings) log << "warning: " << w << "\n";
  if (command == Command::Validate || command == Command::Report) {
    write_file_atomic(out / "validation.txt", validation_text(cfg, v));
    write_file_atomic(out / "validation.json", validation_json(cfg, v));
  }
  if (command == Command::Validate) {
    log << "validation: " << (v.gates_pass() ? "pass" : "FAIL") << "\n";
    return v.gates_pass() ? kExitOk : kExitGateFailed;
  }
  if (!v.gates_pass()) {
    log << "error: hypothesis check failed; refusing to compute spectra\n";
    return kExitGateFailed;
  }

  switch (command) {
    case Command::Beta: {
      std::string csv = "q,beta,beta_src,fit_r2\n";
      const Projected1D proj = project(cfg.system);
      if (cfg.beta_source == BetaSource::Empirical) {
        for (const BetaPoint& b : beta_empirical_curve(proj, cfg.q_grid, cfg.deltas, cfg.z0.x))
          csv += format_number(b.q) + ',' + format_number(b.beta) + ",empirical," +
                 format_number(b.fit_r2) + '\n';
      } else {
        for (double q : cfg.q_grid) {
          const auto b = beta_closed_form(proj, q);
          if (!b) throw SolverError("closed-form beta does not apply to this system");
          csv += format_number(q) + ',' + format_number(*b) + ",closed_form,1\n";
        }
      }
      write_file_atomic(out / "beta.csv", csv);
      break;
    }
    case Command::Gamma: {
      const GammaCurve curve = compute_gamma(cfg);
      std::string csv = "q,beta,beta_src,gamma,gamma_residual\n";
      for (const GammaPoint& g : curve.points)
        csv += format_number(g.q) + ',' + format_number(g.beta_used) + ',' +
               std::string(source_name(cfg.beta_source)) + ',' + format_number(g.gamma) + ',' +
               format_number(g.residual) + '\n';
      write_file_atomic(out / "gamma.csv", csv);
      if (!curve.strictly_decreasing) log << "warning: gamma is not strictly decreasing on the grid\n";
      break;
    }
    case Command::Tau: {
      std::string csv = "q,tau_hat,tau_r2\n";
      for (const TauEstimate& t : tau_curve(cfg.system, cfg.q_grid, cfg.deltas, cfg.z0))
        csv += format_number(t.q) + ',' + format_number(t.tau) + ',' + format_number(t.fit_r2) +
               '\n';
      write_file_atomic(out / "tau.csv", csv);
      break;
    }
    case Command::Report: {
      const auto rows = compute_report(cfg);
      write_file_atomic(out / "report.csv", report_csv(rows));
      write_file_atomic(out / "summary.txt", summary_text(cfg, v, rows));
      write_file_atomic(out / "attractor.ppm", render_ppm(cfg));
      break;
    }
    default:
      break;
  }
  log << command_name(command) << ": done\n";
  return kExitOk;
}

}  // namespace

int run(const RunConfig& cfg, Command command, const std::filesystem::path& out_dir,
        std::ostream& log) {
  std::filesystem::create_directories(out_dir);
  try {
    return run_checked(cfg, command, out_dir, log);
  } catch (const SolverError& e) {
    log << "error: " << e.what() << "\n";
    return kExitSolverFailed;
  } catch (const BudgetExceeded& e) {
    log << "error: " << e.what() << "\n";
    return kExitSolverFailed;
  }
}

}  // namespace lqspec
