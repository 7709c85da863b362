#include "lqspec/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lqspec/regression.hpp"

namespace lqspec {

using nlohmann::json;
using Kind = ConfigError::Kind;

namespace {

double parse_double(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("not a number: '" + std::string(s) + "'");
  return v;
}

double number(const json& j, const std::string& where, Kind kind = Kind::Value) {
  try {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ConfigError(kind, where + ": " + e.what());
  }
  throw ConfigError(kind, where + ": expected a number or \"a/b\" string");
}

Poly2 parse_poly(const json& terms, const std::string& where, bool x_only) {
  if (!terms.is_array()) throw ConfigError(Kind::Polynomial, where + ": expected a list of terms");
  std::vector<Term> out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const json& t = terms[k];
    const std::string at = where + "[" + std::to_string(k) + "]";
    if (!t.is_array() || t.size() != 3)
      throw ConfigError(Kind::Polynomial, at + ": a term is [deg_x, deg_y, coeff]");
    unsigned deg[2];
    for (int d = 0; d < 2; ++d) {
      const json& v = t[static_cast<std::size_t>(d)];
      if (!v.is_number_integer())
        throw ConfigError(Kind::Polynomial, at + ": degrees must be integers");
      const auto n = v.get<long long>();
      if (n < 0) throw ConfigError(Kind::Polynomial, at + ": negative degree");
      if (n > 64) throw ConfigError(Kind::Polynomial, at + ": degree above 64");
      deg[d] = static_cast<unsigned>(n);
    }
    if (x_only && deg[1] != 0)
      throw ConfigError(Kind::Polynomial, at + ": f may not depend on y");
    out.push_back({deg[0], deg[1], number(t[2], at + " coefficient", Kind::Polynomial)});
  }
  return Poly2(std::move(out));
}

std::vector<double> number_list(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty())
    throw ConfigError(Kind::Value, where + ": expected a nonempty list");
  std::vector<double> out;
  for (std::size_t k = 0; k < j.size(); ++k)
    out.push_back(number(j[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

template <class T>
T integer(const json& j, const std::string& where, long long min_value) {
  if (!j.is_number_integer()) throw ConfigError(Kind::Value, where + ": expected an integer");
  const auto v = j.get<long long>();
  if (v < min_value)
    throw ConfigError(Kind::Value, where + ": must be at least " + std::to_string(min_value));
  return static_cast<T>(v);
}

double positive(const json& j, const std::string& where) {
  const double v = number(j, where);
  if (!(v > 0.0)) throw ConfigError(Kind::Value, where + ": must be positive");
  return v;
}

}  // namespace

double parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_double(text);
  const double num = parse_double(text.substr(0, slash));
  const double den = parse_double(text.substr(slash + 1));
  if (den == 0.0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return num / den;
}

RunConfig parse_config(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError(Kind::Syntax, std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError(Kind::Syntax, "config must be a JSON object");

  if (!root.contains("maps") || !root["maps"].is_array() || root["maps"].empty())
    throw ConfigError(Kind::MissingMaps, "config has no \"maps\" list");
  const json& jmaps = root["maps"];
  if (jmaps.size() < 2) throw ConfigError(Kind::MissingMaps, "at least two maps are required");

  std::vector<MapSpec> maps;
  double total = 0.0;
  for (std::size_t i = 0; i < jmaps.size(); ++i) {
    const json& m = jmaps[i];
    const std::string where = "maps[" + std::to_string(i) + "]";
    if (!m.is_object() || !m.contains("f") || !m.contains("g") || !m.contains("p"))
      throw ConfigError(Kind::MissingMaps, where + ": needs \"f\", \"g\" and \"p\"");
    MapSpec spec;
    spec.f = parse_poly(m["f"], where + ".f", true);
    spec.g = parse_poly(m["g"], where + ".g", false);
    spec.p = number(m["p"], where + ".p", Kind::Probabilities);
    if (!(spec.p > 0.0 && spec.p < 1.0))
      throw ConfigError(Kind::Probabilities, where + ".p: must lie in (0, 1)");
    total += spec.p;
    maps.push_back(std::move(spec));
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw ConfigError(Kind::Probabilities,
                      "probabilities sum to " + std::to_string(total) + ", not 1");
  for (MapSpec& m : maps) m.p /= total;

  const std::string label = root.value("label", std::string("unnamed"));
  RunConfig cfg(Ifs(std::move(maps), label));
  cfg.deltas = dyadic_ladder(4, 11);

  if (root.contains("q_grid")) {
    cfg.q_grid = number_list(root["q_grid"], "q_grid");
    for (double q : cfg.q_grid)
      if (!(q >= 0.0)) throw ConfigError(Kind::Value, "q_grid: values must be nonnegative");
  }
  if (root.contains("deltas")) {
    const json& d = root["deltas"];
    if (d.is_object()) {
      if (!d.contains("from") || !d.contains("to"))
        throw ConfigError(Kind::Value, "deltas: object form needs \"from\" and \"to\"");
      const int from = integer<int>(d["from"], "deltas.from", 1);
      const int to = integer<int>(d["to"], "deltas.to", from);
      cfg.deltas = dyadic_ladder(from, to);
    } else {
      cfg.deltas = number_list(d, "deltas");
    }
    try {
      check_delta_ladder(cfg.deltas, 4);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(Kind::Value, std::string("deltas: ") + e.what());
    }
  }
  if (root.contains("k_max")) cfg.k_max = integer<int>(root["k_max"], "k_max", 3);
  if (root.contains("seed")) cfg.seed = integer<std::uint64_t>(root["seed"], "seed", 0);

  if (root.contains("tolerances")) {
    const json& t = root["tolerances"];
    if (!t.is_object()) throw ConfigError(Kind::Value, "tolerances: expected an object");
    Tolerances& tol = cfg.tolerances;
    if (t.contains("contraction")) tol.contraction = positive(t["contraction"], "tolerances.contraction");
    if (t.contains("domination")) tol.domination = positive(t["domination"], "tolerances.domination");
    if (t.contains("gamma")) tol.gamma = positive(t["gamma"], "tolerances.gamma");
    if (t.contains("rosc")) tol.rosc = positive(t["rosc"], "tolerances.rosc");
    if (t.contains("rosc_depth")) tol.rosc_depth = integer<int>(t["rosc_depth"], "tolerances.rosc_depth", 0);
  }

  if (root.contains("beta_source")) {
    const std::string src = root["beta_source"].is_string() ? root["beta_source"].get<std::string>() : "";
    if (src == "empirical") cfg.beta_source = BetaSource::Empirical;
    else if (src == "closed_form") cfg.beta_source = BetaSource::ClosedForm;
    else throw ConfigError(Kind::Value, "beta_source: expected \"empirical\" or \"closed_form\"");
  }

  if (root.contains("z0")) {
    const auto z = number_list(root["z0"], "z0");
    if (z.size() != 2 || z[0] < 0.0 || z[0] > 1.0 || z[1] < 0.0 || z[1] > 1.0)
      throw ConfigError(Kind::Value, "z0: expected [x, y] inside the unit square");
    cfg.z0 = {z[0], z[1]};
  }

  if (root.contains("render")) {
    const json& r = root["render"];
    if (!r.is_object()) throw ConfigError(Kind::Value, "render: expected an object");
    if (r.contains("width")) cfg.render.width = integer<int>(r["width"], "render.width", 1);
    if (r.contains("height")) cfg.render.height = integer<int>(r["height"], "render.height", 1);
    if (r.contains("points")) cfg.render.points = integer<std::size_t>(r["points"], "render.points", 1);
    if (r.contains("burn_in")) cfg.render.burn_in = integer<std::size_t>(r["burn_in"], "render.burn_in", 0);
  }

  if (root.contains("output_dir")) {
    if (!root["output_dir"].is_string()) throw ConfigError(Kind::Value, "output_dir: expected a string");
    cfg.output_dir = root["output_dir"].get<std::string>();
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(Kind::Syntax, "cannot open config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace lqspec
