#include "matfix/commands.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "matfix/errors.hpp"
#include "matfix/matfun.hpp"
#include "matfix/matrix_io.hpp"
#include "matfix/quantum.hpp"
#include "matfix/specfun.hpp"

namespace matfix::cli {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

std::string join(const std::vector<BranchIndex>& ks) {
  std::string s;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(ks[i].value);
  }
  return s;
}

bool machine(const RunConfig& c) { return c.format == OutputFormat::Machine; }

int parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw ParseError("invalid integer '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("invalid integer '" + s + "'");
  }
}

}  // namespace

BranchRange parse_branch_range(const std::string& text) {
  const auto colon = text.find(':', 1);
  if (colon == std::string::npos) throw ParseError("branch range must be MIN:MAX, got '" + text + "'");
  BranchRange r{parse_int(text.substr(0, colon)), parse_int(text.substr(colon + 1))};
  if (r.min > r.max) throw ParseError("branch range is empty: '" + text + "'");
  return r;
}

std::vector<BranchIndex> parse_branch_list(const std::string& text) {
  std::vector<BranchIndex> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.emplace_back(parse_int(text.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int cmd_verify(const std::filesystem::path& matrix_path, Complex z, const RunConfig& config,
               std::ostream& out) {
  const Matrix a = read_matrix_file(matrix_path);
  const VerifyResult v = verify(a, z, config.tol);
  if (machine(config)) {
    out << "n=" << a.rows() << "\n"
        << "z=" << format_complex(z) << "\n"
        << "residual=" << sci(v.residual) << "\n"
        << "verified=" << (v.ok ? "true" : "false") << "\n";
  } else {
    out << "matrix:   " << matrix_path.string() << " (" << a.rows() << "x" << a.cols() << ")\n"
        << "z:        " << format_complex(z) << "\n"
        << "residual: " << sci(v.residual) << "  (||exp(z(A-I)) - A||_F, tol "
        << sci(config.tol) << " * max(1, ||A||_F))\n"
        << "verdict:  " << (v.ok ? "verified" : "NOT a solution") << "\n";
  }
  return v.ok ? kSuccess : kNegativeVerdict;
}

int cmd_solve(const std::filesystem::path& matrix_path, const RunConfig& config, std::ostream& out) {
  const Matrix a = read_matrix_file(matrix_path);
  SolverOptions opts;
  opts.tol = config.tol;
  opts.branches = config.branches;
  const SolutionSet set = solve_z(a, opts);
  const bool has_anchor = set.kind != SolutionKind::AllZ &&
                          set.classification != Classification::Unipotent;

  if (machine(config)) {
    out << "kind=" << to_string(set.kind) << "\n"
        << "classification=" << to_string(set.classification) << "\n"
        << "branch_min=" << set.searched.min << "\n"
        << "branch_max=" << set.searched.max << "\n";
    if (has_anchor) out << "anchor=" << format_complex(set.anchor_eigenvalue) << "\n";
    out << "count=" << set.solutions.size() << "\n";
    for (std::size_t i = 0; i < set.solutions.size(); ++i) {
      const auto& w = set.solutions[i];
      out << "solution=" << i << " z=" << format_complex(w.z) << " anchor_branch="
          << w.anchor_branch.value << " k=" << join(w.per_eigenvalue_branches)
          << " residual=" << sci(w.residual) << "\n";
    }
  } else {
    out << "classification: " << to_string(set.classification) << "\n"
        << "solution set:   " << to_string(set.kind) << "\n";
    if (set.kind == SolutionKind::AllZ) {
      out << "A = I: every complex z solves exp(z(A-I)) = A\n";
      return kSuccess;
    }
    out << "branch range:   " << set.searched.min << ":" << set.searched.max << "\n";
    if (has_anchor) out << "anchor lambda:  " << format_complex(set.anchor_eigenvalue) << "\n";
    out << "solutions:      " << set.solutions.size() << "\n";
    for (const auto& w : set.solutions) {
      out << "  z = " << format_complex(w.z) << "   anchor k = " << w.anchor_branch.value
          << "   k_j = [" << join(w.per_eigenvalue_branches) << "]   residual = " << sci(w.residual)
          << "\n";
    }
  }
  return set.kind == SolutionKind::Empty ? kNegativeVerdict : kSuccess;
}

int cmd_construct(Complex z, const std::vector<BranchIndex>& branches, std::size_t units,
                  const std::optional<std::filesystem::path>& out_path, const RunConfig& config,
                  std::ostream& out, std::ostream& err) {
  const ConstructedSolution s = construct_normal_solution(z, branches, units, config.seed, config.tol);
  // Without --out the matrix owns stdout and the report moves to stderr.
  std::ostream& report = out_path ? out : err;
  if (out_path) write_matrix_file(*out_path, s.matrix);
  if (machine(config)) {
    report << "n=" << s.matrix.rows() << "\n"
           << "z=" << format_complex(z) << "\n";
    for (std::size_t i = 0; i < s.eigenvalues.size(); ++i)
      report << "eigenvalue=" << i << " lambda=" << format_complex(s.eigenvalues[i]) << "\n";
    report << "residual=" << sci(s.verification.residual) << "\n"
           << "verified=" << (s.verification.ok ? "true" : "false") << "\n";
  } else {
    report << "constructed " << s.matrix.rows() << "x" << s.matrix.rows()
           << " normal matrix for z = " << format_complex(z) << "\n";
    for (const Complex& l : s.eigenvalues) report << "  lambda = " << format_complex(l) << "\n";
    report << "residual: " << sci(s.verification.residual) << "\n"
           << "verdict:  " << (s.verification.ok ? "verified" : "NOT verified") << "\n";
    if (out_path) report << "written:  " << out_path->string() << "\n";
  }
  if (!out_path) out << format_matrix(s.matrix);
  return s.verification.ok ? kSuccess : kNegativeVerdict;
}

int cmd_gates(const RunConfig& config, std::ostream& out) {
  bool all = true;
  for (const std::string& name : gate_names()) {
    const GateCatalogEntry g = gate(name);
    const GateIdentityReport r = gate_identity_check(g.matrix, std::max(config.tol, 1e-10));
    all = all && r.passed();
    if (machine(config)) {
      out << "gate=" << name << " qubits=" << g.qubits
          << " involutory=" << (r.involutory ? "true" : "false")
          << " residual_minus=" << sci(r.residual_minus) << " residual_plus=" << sci(r.residual_plus)
          << " pass=" << (r.passed() ? "true" : "false") << "\n";
    } else {
      char line[160];
      std::snprintf(line, sizeof line, "%-5s qubits=%d  G^2=I: %-3s  z=-i pi/2 (k=%d): %.2e  z=+i pi/2 (k=%d): %.2e  %s\n",
                    name.c_str(), g.qubits, r.involutory ? "yes" : "no", r.family_k_minus,
                    r.residual_minus, r.family_k_plus, r.residual_plus, r.passed() ? "pass" : "FAIL");
      out << line;
    }
  }
  return all ? kSuccess : kNegativeVerdict;
}

int cmd_pauli(std::size_t n, const RunConfig& config, std::ostream& out) {
  const std::vector<PauliElement> group = pauli_group(n);
  const bool closed = is_closed(group);
  const std::size_t expected = std::size_t{1} << (2 * (n + 1));
  if (machine(config)) {
    out << "qubits=" << n << "\n"
        << "order=" << group.size() << "\n"
        << "expected=" << expected << "\n"
        << "closed=" << (closed ? "true" : "false") << "\n";
  } else {
    out << "order " << group.size() << ", " << (closed ? "closed" : "NOT closed") << " (4^(n+1) = "
        << expected << ")\n";
  }
  return closed && group.size() == expected ? kSuccess : kNegativeVerdict;
}

int cmd_lambertw(Complex x, BranchIndex k, const RunConfig& config, std::ostream& out) {
  const Complex w = lambert_w(x, k);
  const double residual = std::abs(w * std::exp(w) - x);
  if (machine(config)) {
    out << "x=" << format_complex(x) << "\n"
        << "k=" << k.value << "\n"
        << "w=" << format_complex(w) << "\n"
        << "residual=" << sci(residual) << "\n";
  } else {
    out << "W_" << k.value << "(" << format_complex(x) << ") = " << format_complex(w) << "\n"
        << "residual |W e^W - x| = " << sci(residual) << "\n";
  }
  return kSuccess;
}

int cmd_expm(const std::filesystem::path& matrix_path, Complex z,
             const std::optional<std::filesystem::path>& out_path, std::ostream& out) {
  const Matrix a = read_matrix_file(matrix_path);
  const Matrix e = expm(z * a);
  if (out_path) {
    write_matrix_file(*out_path, e);
  } else {
    out << format_matrix(e);
  }
  return kSuccess;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solve, verify and construct solutions of exp(z(A - I)) = A"};
  app.name(args.empty() ? "matfix" : args.front());
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "human";
  std::string branch_range = "-8:8";
  std::string z_text;
  std::string x_text;
  std::string branch_list;
  std::string matrix_path;
  std::string out_path;
  std::size_t units = 0;
  std::size_t qubits = 0;
  int k = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", config.tol, "Relative verification tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "machine"}));
  };

  auto* verify_cmd = app.add_subcommand("verify", "Check whether (A, z) solves exp(z(A - I)) = A");
  verify_cmd->add_option("matrix", matrix_path, "Matrix file")->required();
  verify_cmd->add_option("--z", z_text, "Complex exponent, e.g. 0-1.5707963267948966i")->required();
  add_common(verify_cmd);

  auto* solve_cmd = app.add_subcommand("solve", "Find every z solving the equation for a matrix");
  solve_cmd->add_option("matrix", matrix_path, "Matrix file")->required();
  solve_cmd->add_option("--branches", branch_range, "Anchor branch range MIN:MAX");
  add_common(solve_cmd);

  auto* construct_cmd = app.add_subcommand("construct", "Build a normal matrix solving the equation for z");
  construct_cmd->add_option("--z", z_text, "Complex exponent")->required();
  construct_cmd->add_option("--branches", branch_list, "Lambert W branch per non-unit eigenvalue, comma separated");
  construct_cmd->add_option("--units", units, "Number of unit eigenvalues");
  construct_cmd->add_option("--seed", config.seed, "Seed of the random eigenbasis");
  construct_cmd->add_option("--out", out_path, "Output matrix file (default: stdout)");
  add_common(construct_cmd);

  auto* gates_cmd = app.add_subcommand("gates", "Check the gate catalog against the Pauli-type identity");
  add_common(gates_cmd);

  auto* pauli_cmd = app.add_subcommand("pauli", "Generate the n-qubit Pauli group and check closure");
  pauli_cmd->add_option("n", qubits, "Number of qubits")->required();
  add_common(pauli_cmd);

  auto* lambertw_cmd = app.add_subcommand("lambertw", "Evaluate branch k of the Lambert W function");
  lambertw_cmd->add_option("--x", x_text, "Complex argument")->required();
  lambertw_cmd->add_option("--k", k, "Branch index");
  add_common(lambertw_cmd);

  auto* expm_cmd = app.add_subcommand("expm", "Print exp(zA) for a matrix file");
  expm_cmd->add_option("matrix", matrix_path, "Matrix file")->required();
  expm_cmd->add_option("--z", z_text, "Complex scale factor (default 1)");
  expm_cmd->add_option("--out", out_path, "Output matrix file (default: stdout)");
  add_common(expm_cmd);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    config.format = format == "machine" ? OutputFormat::Machine : OutputFormat::Human;
    std::optional<std::filesystem::path> out_opt;
    if (!out_path.empty()) out_opt = out_path;

    if (*verify_cmd) return cmd_verify(matrix_path, parse_complex(z_text), config, out);
    if (*solve_cmd) {
      config.branches = parse_branch_range(branch_range);
      return cmd_solve(matrix_path, config, out);
    }
    if (*construct_cmd) {
      return cmd_construct(parse_complex(z_text), parse_branch_list(branch_list), units, out_opt,
                           config, out, err);
    }
    if (*gates_cmd) return cmd_gates(config, out);
    if (*pauli_cmd) return cmd_pauli(qubits, config, out);
    if (*lambertw_cmd) return cmd_lambertw(parse_complex(x_text), BranchIndex(k), config, out);
    if (*expm_cmd) {
      const Complex z = z_text.empty() ? Complex{1.0} : parse_complex(z_text);
      return cmd_expm(matrix_path, z, out_opt, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const CatalogError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ShapeError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    // DomainError, ConvergenceError, OverflowError, PreconditionError.
    err << "numerical error: " << e.what() << "\n";
    return kNumericalError;
  }
  return kUsageError;
}

}  // namespace matfix::cli
