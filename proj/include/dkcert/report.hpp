#pragma once

#include <string>
#include <vector>

#include "dkcert/problem.hpp"

namespace dkcert {

/// What a threshold is compared against.
enum class ThresholdKind {
  RatioNorm,     // E(z) = ||W/d||_p
  CorrectionNorm // ||W||_p / delta(z)
};

struct Threshold {
  std::string name;
  ThresholdKind kind = ThresholdKind::RatioNorm;
  double value = 0.0;
  bool strict = false;  // pass requires quantity < value rather than <=
};

struct ThresholdTable {
  std::vector<Threshold> rows;     // sorted by value, largest first
  std::vector<std::string> notes;  // rows left out at this (n, p)
};

/// Every radius that applies at (n, p); norm-specific ones are omitted with a note.
ThresholdTable threshold_table(std::size_t n, const NormIndex& p);

struct CommandResult {
  Json report;
  int exit_code = 0;  // 0 ok / converged, 1 input error, 2 not converged or not certified
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNotConverged = 2;

Json certificate_to_json(const Certificate& cert);
Json trace_to_json(const IterationTrace& trace);

CommandResult cmd_solve(const ProblemInput& input);
CommandResult cmd_certify(const ProblemInput& input);
CommandResult cmd_compare_sor(const ProblemInput& input);
CommandResult cmd_radii(std::size_t n, const NormIndex& p);

/// Parses and runs one document, turning input errors into an error report.
CommandResult run_document(const std::string& command, const Json& doc);

/// Human-readable rendering of a report produced by the commands above.
std::string render_text(const std::string& command, const Json& report);

}  // namespace dkcert
