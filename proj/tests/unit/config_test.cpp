#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "lqspec/config.hpp"
#include "lqspec/systems.hpp"

namespace lqspec {
namespace {

std::string two_maps(const std::string& p0, const std::string& p1, const std::string& extra = "") {
  return R"({"maps": [
    {"f": [[1, 0, 0.5]], "g": [[0, 1, 0.3]], "p": )" + p0 + R"(},
    {"f": [[1, 0, 0.5], [0, 0, 0.5]], "g": [[0, 1, 0.3], [0, 0, 0.5]], "p": )" + p1 + "}]" +
         extra + "}";
}

ConfigError::Kind kind_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    EXPECT_FALSE(std::string(e.what()).empty());
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << text;
  return ConfigError::Kind::Syntax;
}

TEST(ParseRational, Forms) {
  EXPECT_DOUBLE_EQ(parse_rational("0.25"), 0.25);
  EXPECT_DOUBLE_EQ(parse_rational("1/4"), 0.25);
  EXPECT_DOUBLE_EQ(parse_rational("-3/40"), -0.075);
  EXPECT_DOUBLE_EQ(parse_rational(" 26/45 "), 26.0 / 45);
  EXPECT_DOUBLE_EQ(parse_rational("1e-3"), 1e-3);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/2/3"), std::invalid_argument);
}

TEST(ParseConfig, PolynomialExampleFile) {
  const RunConfig cfg = load_config(std::filesystem::path(LQSPEC_CONFIG_DIR) / "polynomial_example.json");
  const Ifs ref = systems::polynomial_example();
  ASSERT_EQ(cfg.system.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(cfg.system.map(i).f, ref.map(i).f) << i;
    EXPECT_EQ(cfg.system.map(i).g, ref.map(i).g) << i;
    EXPECT_DOUBLE_EQ(cfg.system.prob(i), 1.0 / 3);
  }
  EXPECT_EQ(cfg.q_grid, (std::vector<double>{0.0, 0.5, 1.0, 2.0}));
  ASSERT_EQ(cfg.deltas.size(), 8u);
  EXPECT_EQ(cfg.deltas.front(), 1.0 / 16);
  EXPECT_EQ(cfg.deltas.back(), 1.0 / 2048);
  EXPECT_EQ(cfg.k_max, 12);
  EXPECT_EQ(cfg.tolerances.rosc_depth, 12);
}

TEST(ParseConfig, Defaults) {
  const RunConfig cfg = parse_config(two_maps("0.5", "\"1/2\""));
  EXPECT_EQ(cfg.q_grid, (std::vector<double>{0.0, 0.5, 1.0, 2.0}));
  EXPECT_EQ(cfg.deltas.size(), 8u);
  EXPECT_EQ(cfg.k_max, 12);
  EXPECT_EQ(cfg.seed, 1u);
  EXPECT_EQ(cfg.beta_source, BetaSource::Empirical);
  EXPECT_EQ(cfg.z0, (Point{0.5, 0.5}));
}

TEST(ParseConfig, OptionalFields) {
  const RunConfig cfg = parse_config(two_maps("0.5", "0.5", R"(,
    "q_grid": [0, "1/2", 3], "deltas": [0.1, 0.05, 0.025, 0.0125], "k_max": 9, "seed": 42,
    "tolerances": {"gamma": 1e-6, "rosc_depth": 5}, "beta_source": "closed_form",
    "z0": [0.25, 0.75], "render": {"width": 64, "height": 32, "points": 1000, "burn_in": 7})"));
  EXPECT_EQ(cfg.q_grid, (std::vector<double>{0.0, 0.5, 3.0}));
  EXPECT_EQ(cfg.deltas, (std::vector<double>{0.1, 0.05, 0.025, 0.0125}));
  EXPECT_EQ(cfg.k_max, 9);
  EXPECT_EQ(cfg.seed, 42u);
  EXPECT_EQ(cfg.tolerances.gamma, 1e-6);
  EXPECT_EQ(cfg.tolerances.rosc_depth, 5);
  EXPECT_EQ(cfg.beta_source, BetaSource::ClosedForm);
  EXPECT_EQ(cfg.z0, (Point{0.25, 0.75}));
  EXPECT_EQ(cfg.render.width, 64);
  EXPECT_EQ(cfg.render.height, 32);
  EXPECT_EQ(cfg.render.points, 1000u);
  EXPECT_EQ(cfg.render.burn_in, 7u);
}

TEST(ParseConfig, ProbabilitiesMustSumToOne) {
  const std::string three = R"({"maps": [
    {"f": [[1, 0, 0.3]], "g": [[0, 1, 0.2]], "p": 0.5},
    {"f": [[1, 0, 0.3], [0, 0, 0.35]], "g": [[0, 1, 0.2]], "p": 0.5},
    {"f": [[1, 0, 0.3], [0, 0, 0.7]], "g": [[0, 1, 0.2]], "p": 0.5}]})";
  EXPECT_EQ(kind_of(three), ConfigError::Kind::Probabilities);
  EXPECT_EQ(kind_of(two_maps("0.5", "0.6")), ConfigError::Kind::Probabilities);
  EXPECT_EQ(kind_of(two_maps("0", "1")), ConfigError::Kind::Probabilities);
  EXPECT_EQ(kind_of(two_maps("\"x\"", "0.5")), ConfigError::Kind::Probabilities);
  // Within 1e-9 is accepted and renormalised.
  const RunConfig cfg = parse_config(two_maps("0.5", "0.5000000001"));
  EXPECT_NEAR(cfg.system.prob(0) + cfg.system.prob(1), 1.0, 1e-15);
}

TEST(ParseConfig, MalformedPolynomials) {
  const std::string neg = R"({"maps": [
    {"f": [[-1, 0, 0.5]], "g": [[0, 1, 0.3]], "p": 0.5},
    {"f": [[1, 0, 0.5]], "g": [[0, 1, 0.3]], "p": 0.5}]})";
  EXPECT_EQ(kind_of(neg), ConfigError::Kind::Polynomial);
  const std::string short_term = R"({"maps": [
    {"f": [[1, 0]], "g": [[0, 1, 0.3]], "p": 0.5},
    {"f": [[1, 0, 0.5]], "g": [[0, 1, 0.3]], "p": 0.5}]})";
  EXPECT_EQ(kind_of(short_term), ConfigError::Kind::Polynomial);
  const std::string f_with_y = R"({"maps": [
    {"f": [[1, 1, 0.5]], "g": [[0, 1, 0.3]], "p": 0.5},
    {"f": [[1, 0, 0.5]], "g": [[0, 1, 0.3]], "p": 0.5}]})";
  EXPECT_EQ(kind_of(f_with_y), ConfigError::Kind::Polynomial);
  const std::string bad_coeff = R"({"maps": [
    {"f": [[1, 0, "1/0"]], "g": [[0, 1, 0.3]], "p": 0.5},
    {"f": [[1, 0, 0.5]], "g": [[0, 1, 0.3]], "p": 0.5}]})";
  EXPECT_EQ(kind_of(bad_coeff), ConfigError::Kind::Polynomial);
}

TEST(ParseConfig, MissingMaps) {
  EXPECT_EQ(kind_of(R"({"q_grid": [0, 1]})"), ConfigError::Kind::MissingMaps);
  EXPECT_EQ(kind_of(R"({"maps": []})"), ConfigError::Kind::MissingMaps);
  EXPECT_EQ(kind_of(R"({"maps": [{"f": [[1, 0, 0.5]], "g": [[0, 1, 0.3]], "p": 1}]})"),
            ConfigError::Kind::MissingMaps);
  EXPECT_EQ(kind_of(R"({"maps": [{"f": [], "p": 0.5}, {"f": [], "g": [], "p": 0.5}]})"),
            ConfigError::Kind::MissingMaps);
}

TEST(ParseConfig, SyntaxErrors) {
  EXPECT_EQ(kind_of("{\"maps\": [}"), ConfigError::Kind::Syntax);
  EXPECT_EQ(kind_of("[1, 2]"), ConfigError::Kind::Syntax);
  EXPECT_THROW(load_config("/nonexistent/config.json"), ConfigError);
}

TEST(ParseConfig, InvalidValues) {
  EXPECT_EQ(kind_of(two_maps("0.5", "0.5", R"(, "q_grid": [-1])")), ConfigError::Kind::Value);
  EXPECT_EQ(kind_of(two_maps("0.5", "0.5", R"(, "tolerances": {"gamma": 0})")),
            ConfigError::Kind::Value);
  EXPECT_EQ(kind_of(two_maps("0.5", "0.5", R"(, "tolerances": {"rosc": -1e-9})")),
            ConfigError::Kind::Value);
  EXPECT_EQ(kind_of(two_maps("0.5", "0.5", R"(, "deltas": [0.5, 0.25])")), ConfigError::Kind::Value);
  EXPECT_EQ(kind_of(two_maps("0.5", "0.5", R"(, "deltas": [0.1, 0.2, 0.05, 0.01])")),
            ConfigError::Kind::Value);
  EXPECT_EQ(kind_of(two_maps("0.5", "0.5", R"(, "k_max": 2)")), ConfigError::Kind::Value);
  EXPECT_EQ(kind_of(two_maps("0.5", "0.5", R"(, "beta_source": "magic")")), ConfigError::Kind::Value);
  EXPECT_EQ(kind_of(two_maps("0.5", "0.5", R"(, "z0": [2, 0])")), ConfigError::Kind::Value);
}

}  // namespace
}  // namespace lqspec
