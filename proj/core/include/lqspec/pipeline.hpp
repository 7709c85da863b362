#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lqspec/conditions.hpp"
#include "lqspec/config.hpp"

namespace lqspec {

enum class Command { Validate, Render, Beta, Gamma, Tau, Report };

std::optional<Command> parse_command(std::string_view name);
std::string_view command_name(Command c);

// Exit statuses of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitGateFailed = 1;
inline constexpr int kExitSolverFailed = 2;

struct Validation {
  ContractionReport contraction;
  DominationReport domination;
  RoscVerdict rosc;
  DistortionReport distortion;
  std::vector<std::string> warnings;

  // Contraction, domination (or the similarity case) and ROSC not Violated.
  bool gates_pass() const;
};

Validation validate(const RunConfig& cfg);
std::string validation_text(const RunConfig& cfg, const Validation& v);
std::string validation_json(const RunConfig& cfg, const Validation& v);

struct ReportRow {
  double q = 0.0;
  double beta = 0.0;
  std::string beta_src;
  double gamma = 0.0;
  double gamma_residual = 0.0;
  double tau_hat = 0.0;
  double tau_r2 = 0.0;
  double abs_gap = 0.0;
};

inline constexpr std::string_view kReportHeader =
    "q,beta,beta_src,gamma,gamma_residual,tau_hat,tau_r2,abs_gap";

// Shortest round-trip formatting; independent of the global locale.
std::string format_number(double v);

std::string report_csv(std::span<const ReportRow> rows);

// Computes the full report rows (beta, gamma, tau, gap) for every q.
std::vector<ReportRow> compute_report(const RunConfig& cfg);

// Writes through a temporary file in the same directory, then renames.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// Executes one command, writing its files into out_dir and progress and
/// warnings to log. Returns kExitOk only if every gate passes and every
/// solver converges.
int run(const RunConfig& cfg, Command command, const std::filesystem::path& out_dir,
        std::ostream& log);

}  // namespace lqspec
