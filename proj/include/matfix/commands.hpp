#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "matfix/linalg.hpp"
#include "matfix/solver.hpp"

namespace matfix::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kNegativeVerdict = 1,  // ran fine, answer is "no"
  kUsageError = 2,       // bad flags, unreadable or malformed input, size guard
  kNumericalError = 3,   // domain, convergence or overflow failure
};

enum class OutputFormat { Human, Machine };

struct RunConfig {
  double tol = 1e-9;
  BranchRange branches{};
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::Human;
};

int cmd_verify(const std::filesystem::path& matrix_path, Complex z, const RunConfig& config,
               std::ostream& out);
int cmd_solve(const std::filesystem::path& matrix_path, const RunConfig& config, std::ostream& out);
int cmd_construct(Complex z, const std::vector<BranchIndex>& branches, std::size_t units,
                  const std::optional<std::filesystem::path>& out_path, const RunConfig& config,
                  std::ostream& out, std::ostream& err);
int cmd_gates(const RunConfig& config, std::ostream& out);
int cmd_pauli(std::size_t n, const RunConfig& config, std::ostream& out);
int cmd_lambertw(Complex x, BranchIndex k, const RunConfig& config, std::ostream& out);
int cmd_expm(const std::filesystem::path& matrix_path, Complex z,
             const std::optional<std::filesystem::path>& out_path, std::ostream& out);

/// "MIN:MAX" -> BranchRange. Throws ParseError.
BranchRange parse_branch_range(const std::string& text);
/// Comma-separated integers ("" -> empty list). Throws ParseError.
std::vector<BranchIndex> parse_branch_list(const std::string& text);

/// Full command line (args[0] is the program name). Library exceptions are
/// mapped onto ExitCode; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace matfix::cli
