#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lqspec/error.hpp"
#include "lqspec/ifs.hpp"
#include "lqspec/pressure.hpp"

namespace lqspec {

struct Tolerances {
  double contraction = 1e-9;
  double domination = 1e-10;
  double gamma = 1e-8;
  double rosc = 1e-9;
  int rosc_depth = 12;
};

struct RenderSettings {
  int width = 800;
  int height = 800;
  std::size_t points = 1'000'000;
  std::size_t burn_in = 100;
};

struct RunConfig {
  explicit RunConfig(Ifs sys) : system(std::move(sys)) {}

  Ifs system;
  std::vector<double> q_grid{0.0, 0.5, 1.0, 2.0};
  std::vector<double> deltas;  // defaults to 2^-4 ... 2^-11
  int k_max = 12;
  std::uint64_t seed = 1;
  Tolerances tolerances;
  BetaSource beta_source = BetaSource::Empirical;
  Point z0{0.5, 0.5};          // atom placement and pressure base point
  RenderSettings render;
  std::string output_dir = ".";
};

class ConfigError : public Error {
 public:
  enum class Kind { Syntax, MissingMaps, Probabilities, Polynomial, Value };

  ConfigError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Parses a JSON run configuration.
///
/// Required: "maps", a list of {"f": [[deg_x, 0, c], ...],
/// "g": [[deg_x, deg_y, c], ...], "p": c}. Coefficients and probabilities
/// may be numbers or strings "a/b". Optional: "label", "q_grid", "deltas"
/// (list, or {"from": i, "to": j} for 2^-i ... 2^-j), "k_max", "seed",
/// "tolerances" {contraction, domination, gamma, rosc, rosc_depth},
/// "beta_source" ("empirical" | "closed_form"), "z0", "render"
/// {width, height, points, burn_in}, "output_dir".
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::filesystem::path& path);

// "0.25", "1/4", "-3/40", "1e-3".
double parse_rational(std::string_view text);

}  // namespace lqspec
