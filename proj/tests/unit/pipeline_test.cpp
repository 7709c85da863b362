#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <locale>
#include <sstream>

#include "lqspec/config.hpp"
#include "lqspec/pipeline.hpp"

namespace lqspec {
namespace {

namespace fs = std::filesystem;

struct CommaDecimal : std::numpunct<char> {
  char do_decimal_point() const override { return ','; }
};

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("lqspec_pipeline_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

RunConfig config_file(const std::string& name) {
  return load_config(fs::path(LQSPEC_CONFIG_DIR) / name);
}

TEST(FormatNumber, RoundTripsAndIgnoresLocale) {
  const std::locale saved = std::locale::global(std::locale(std::locale::classic(), new CommaDecimal));
  EXPECT_EQ(format_number(0.5), "0.5");
  EXPECT_EQ(format_number(-1.4363), "-1.4363");
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.3333333333333333");
  std::locale::global(saved);
  for (double v : {0.1, 1e-300, 123456.789, -2.5e17})
    EXPECT_EQ(std::stod(format_number(v)), v);
}

TEST(ReportCsv, HeaderAndRow) {
  ReportRow r;
  r.q = 2;
  r.beta = 0.5;
  r.beta_src = "closed_form";
  r.gamma = -1.25;
  r.gamma_residual = 0;
  r.tau_hat = -1.5;
  r.tau_r2 = 1;
  r.abs_gap = 0.25;
  const std::string csv = report_csv(std::span(&r, 1));
  EXPECT_EQ(csv, std::string(kReportHeader) + "\n2,0.5,closed_form,-1.25,0,-1.5,1,0.25\n");
  EXPECT_EQ(kReportHeader, "q,beta,beta_src,gamma,gamma_residual,tau_hat,tau_r2,abs_gap");
}

TEST(Commands, NamesRoundTrip) {
  for (const char* name : {"validate", "render", "beta", "gamma", "tau", "report"}) {
    const auto c = parse_command(name);
    ASSERT_TRUE(c.has_value()) << name;
    EXPECT_EQ(command_name(*c), name);
  }
  EXPECT_FALSE(parse_command("Report").has_value());
  EXPECT_FALSE(parse_command("").has_value());
}

TEST(Validate, PolynomialExamplePasses) {
  const Validation v = validate(config_file("polynomial_example.json"));
  EXPECT_TRUE(v.gates_pass());
  EXPECT_TRUE(v.domination.pass);
  EXPECT_NEAR(v.domination.d, 1.0 / 6.0, 1e-12);
  EXPECT_NEAR(v.domination.eta, 8.0 / 9.0, 1e-9);
  EXPECT_EQ(v.rosc.status, RoscStatus::Verified);
}

TEST(Validate, SimilaritiesPassWithWarning) {
  const Validation v = validate(config_file("quarter_similarities.json"));
  EXPECT_TRUE(v.gates_pass());
  EXPECT_FALSE(v.domination.pass);
  EXPECT_TRUE(v.domination.similarity);
  EXPECT_FALSE(v.warnings.empty());
}

TEST(Run, GateFailureWritesNoSpectra) {
  const RunConfig cfg = parse_config(R"({"maps": [
    {"f": [[1, 0, 0.5]], "g": [[0, 1, 0.25], [2, 0, 0.1]], "p": 0.5},
    {"f": [[1, 0, 0.5]], "g": [[0, 1, 0.25], [2, 0, 0.1]], "p": 0.5}],
    "deltas": {"from": 3, "to": 6}, "k_max": 4})");
  const fs::path out = scratch("gate");
  std::ostringstream log;
  EXPECT_EQ(run(cfg, Command::Report, out, log), kExitGateFailed);
  EXPECT_TRUE(fs::exists(out / "validation.txt"));
  EXPECT_TRUE(fs::exists(out / "validation.json"));
  EXPECT_FALSE(fs::exists(out / "report.csv"));
  EXPECT_FALSE(fs::exists(out / "attractor.ppm"));
  EXPECT_NE(log.str().find("refusing"), std::string::npos);

  std::ostringstream log2;
  EXPECT_EQ(run(cfg, Command::Gamma, out, log2), kExitGateFailed);
  EXPECT_FALSE(fs::exists(out / "gamma.csv"));
  fs::remove_all(out);
}

TEST(Run, GammaAtOneIsZero) {
  RunConfig cfg = config_file("polynomial_example.json");
  cfg.q_grid = {1.0};
  cfg.deltas = {1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128};
  cfg.k_max = 8;
  const fs::path out = scratch("gamma");
  std::ostringstream log;
  ASSERT_EQ(run(cfg, Command::Gamma, out, log), kExitOk) << log.str();
  std::istringstream csv(slurp(out / "gamma.csv"));
  std::string header, row;
  std::getline(csv, header);
  std::getline(csv, row);
  EXPECT_EQ(header, "q,beta,beta_src,gamma,gamma_residual");
  const auto last = row.find_last_of(',');
  const auto before = row.find_last_of(',', last - 1);
  const double g = std::stod(row.substr(before + 1, last - before - 1));
  EXPECT_NEAR(g, 0.0, cfg.tolerances.gamma);
  fs::remove_all(out);
}

TEST(Run, ReportOnSimilaritiesAgrees) {
  const RunConfig cfg = config_file("quarter_similarities.json");
  const auto rows = compute_report(cfg);
  ASSERT_EQ(rows.size(), cfg.q_grid.size());
  for (const ReportRow& r : rows) {
    EXPECT_EQ(r.beta_src, "closed_form");
    EXPECT_LE(r.abs_gap, 0.05) << "q = " << r.q;
    EXPECT_DOUBLE_EQ(r.abs_gap, std::abs(r.tau_hat - r.gamma));
  }
}

TEST(Run, ClosedFormRefusedForPolynomialSystem) {
  RunConfig cfg = config_file("polynomial_example.json");
  cfg.beta_source = BetaSource::ClosedForm;
  cfg.k_max = 6;
  const fs::path out = scratch("closed");
  std::ostringstream log;
  EXPECT_EQ(run(cfg, Command::Beta, out, log), kExitSolverFailed);
  EXPECT_FALSE(fs::exists(out / "beta.csv"));
  fs::remove_all(out);
}

TEST(WriteFileAtomic, ReplacesContentWithoutLeftovers) {
  const fs::path dir = scratch("atomic");
  const fs::path target = dir / "out.csv";
  write_file_atomic(target, "first\n");
  write_file_atomic(target, "second\n");
  EXPECT_EQ(slurp(target), "second\n");
  EXPECT_EQ(std::distance(fs::directory_iterator(dir), fs::directory_iterator()), 1);
  EXPECT_THROW(write_file_atomic(dir / "missing" / "x.csv", "x"), Error);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace lqspec
