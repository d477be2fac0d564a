#pragma once

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bpenta/bpenta.hpp"

namespace bpenta::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kZeroPivot = 2,
  kSingular = 3,
  kMismatch = 4,
};

namespace detail {

inline BackwardPentaSystem<BigRational> load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_system_file(text);
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ' ';
    out += format_scalar(v[k]);
  }
  return out;
}

inline std::string join_indices(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(v[k]);
  }
  return out;
}

template <class T>
void dump_factors(std::ostream& out, const LUFactors<T>& f, const std::vector<T>& z) {
  out << "alpha = " << join(f.alpha) << '\n';
  out << "beta = " << join(f.beta) << '\n';
  out << "gamma = " << join(f.gamma) << '\n';
  if (!z.empty()) out << "z = " << join(z) << '\n';
  if (!f.replaced.empty()) out << "replaced = " << join_indices(f.replaced) << '\n';
}

inline int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ZeroPivot: return kZeroPivot;
    case ErrorKind::PoleAtZero:
    case ErrorKind::IdenticallySingular:
    case ErrorKind::Singular: return kSingular;
    default: return kUsage;
  }
}

struct SolveArgs {
  std::string path;
  std::string mode = "exact";
  bool det = false;
  double tol = 0.0;
  bool dump = false;
};

inline int cmd_solve(const SolveArgs& args, std::ostream& out) {
  const auto sys = load(args.path);
  if (args.mode == "symbolic") {
    const auto r = solve_symbolic(sys);
    if (args.dump) {
      dump_factors(out, r.factors, r.z);
      out << "X(x) = " << join(r.x) << '\n';
    }
    for (const auto& v : r.report.x) out << format_scalar(v) << '\n';
    if (args.det) out << "det(A1) = " << format_scalar(r.report.det_a1) << '\n';
    return kOk;
  }
  const auto emit = [&](const auto& r) {
    if (args.dump) dump_factors(out, r.factors, r.z);
    for (const auto& v : r.report.x) out << format_scalar(v) << '\n';
    if (args.det) out << "det(A1) = " << format_scalar(r.report.det_a1) << '\n';
  };
  if (args.mode == "float") {
    emit(solve(convert_system<double>(sys), FactorOptions{.zero_tolerance = args.tol}));
  } else {
    emit(solve(sys));
  }
  return kOk;
}

inline int cmd_det(const std::string& path, const std::string& mode, double tol, std::ostream& out) {
  const auto sys = load(path);
  if (mode == "symbolic") {
    const auto f = factor_symbolic(reverse_rows(convert_system<RationalFunction>(sys)));
    const BigRational det = determinant_at_zero(f);
    out << "det(A1) = " << det.to_string() << '\n';
    out << "det(A) = " << reversal_sign_adjust(det, sys.size()).to_string() << '\n';
  } else if (mode == "float") {
    const auto f = factor(reverse_rows(convert_system<double>(sys)), FactorOptions{.zero_tolerance = tol});
    out << "det(A1) = " << format_scalar(determinant(f)) << '\n';
    out << "det(A) = " << format_scalar(det_original(f)) << '\n';
  } else {
    const auto f = factor(reverse_rows(sys));
    out << "det(A1) = " << format_scalar(determinant(f)) << '\n';
    out << "det(A) = " << format_scalar(det_original(f)) << '\n';
  }
  return kOk;
}

inline int cmd_factor(const std::string& path, const std::string& mode, double tol, std::ostream& out) {
  const auto sys = load(path);
  if (mode == "symbolic") {
    dump_factors(out, factor_symbolic(reverse_rows(convert_system<RationalFunction>(sys))), {});
  } else if (mode == "float") {
    dump_factors(out, factor(reverse_rows(convert_system<double>(sys)), FactorOptions{.zero_tolerance = tol}), {});
  } else {
    dump_factors(out, factor(reverse_rows(sys)), {});
  }
  return kOk;
}

inline int cmd_check(const std::string& path, std::ostream& out) {
  const auto sys = load(path);

  std::optional<std::vector<BigRational>> banded_x;
  std::optional<BigRational> banded_det;
  std::string banded_route = "exact";
  std::string banded_note;
  try {
    const auto r = solve(sys);
    banded_x = r.report.x;
    banded_det = r.report.det_a1;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ZeroPivot) throw;
    banded_route = "symbolic";
    try {
      const auto r = solve_symbolic(sys);
      banded_x = r.report.x;
      banded_det = r.report.det_a1;
      banded_route += ", replaced beta[" + join_indices(r.report.pivot_replacements) + "]";
    } catch (const Error& s) {
      if (s.kind() != ErrorKind::PoleAtZero && s.kind() != ErrorKind::IdenticallySingular) throw;
      banded_note = s.what();
    }
  }

  const auto dense_a = densify(sys);
  const BigRational oracle_det = oracle::dense_det(dense_a.reversed_rows());
  std::optional<std::vector<BigRational>> oracle_x;
  std::string oracle_note;
  try {
    oracle_x = oracle::dense_solve(dense_a, sys.y());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Singular) throw;
    oracle_note = e.what();
  }

  if (!banded_x && !oracle_x) {
    out << "SINGULAR\n";
    out << "banded (" << banded_route << "): " << banded_note << '\n';
    out << "oracle: " << oracle_note << '\n';
    return kSingular;
  }
  const bool match = banded_x && oracle_x && *banded_x == *oracle_x && *banded_det == oracle_det;
  out << (match ? "MATCH" : "MISMATCH") << '\n';
  out << "banded (" << banded_route << "): " << (banded_x ? join(*banded_x) : banded_note) << '\n';
  out << "oracle: " << (oracle_x ? join(*oracle_x) : oracle_note) << '\n';
  out << "det(A1): banded " << (banded_det ? banded_det->to_string() : "n/a") << ", oracle "
      << oracle_det.to_string() << '\n';
  return match ? kOk : kMismatch;
}

struct GenArgs {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  long range = 9;
  std::vector<std::string> zero;
  bool planted = false;
  std::string out_path;
};

inline int cmd_gen(const GenArgs& args, std::ostream& out) {
  oracle::GeneratorConfig config{.seed = args.seed, .n = args.n, .range = args.range, .force_zero = {},
                                 .planted_solution = args.planted};
  std::string header = "bpenta gen --seed " + std::to_string(args.seed) + " --n " + std::to_string(args.n) +
                       " --range " + std::to_string(args.range);
  for (const auto& z : args.zero) {
    config.force_zero.push_back(oracle::parse_band_position(z));
    header += " --zero " + z;
  }
  if (args.planted) header += " --planted";
  const auto sys = oracle::generate(config);
  const std::string text = format_system_file(sys, {header});
  if (args.out_path.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream file(args.out_path, std::ios::binary);
  if (!file) throw Error(ErrorKind::Parse, "cannot write '" + args.out_path + "'");
  file << text;
  return kOk;
}

}  // namespace detail

/// Runs the command line `args` (args[0] is the program name). Results go
/// to `out`, diagnostics to `err`; returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Backward pentadiagonal linear system solver"};
  app.require_subcommand(1);

  const std::vector<std::string> modes = {"float", "exact", "symbolic"};

  detail::SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve A X = Y from a system file");
  solve_cmd->add_option("file", solve_args.path, "System file")->required();
  solve_cmd->add_option("--mode", solve_args.mode, "float | exact | symbolic")->check(CLI::IsMember(modes));
  solve_cmd->add_flag("--det", solve_args.det, "Print det(A1) after the solution");
  solve_cmd->add_option("--tol", solve_args.tol, "Float mode: treat |beta| < tol as a zero pivot")
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_flag("--dump-factors", solve_args.dump, "Print alpha, beta, gamma and z");

  std::string det_path;
  std::string det_mode = "exact";
  double det_tol = 0.0;
  auto* det_cmd = app.add_subcommand("det", "Print det(A1) and det(A)");
  det_cmd->add_option("file", det_path, "System file")->required();
  det_cmd->add_option("--mode", det_mode, "float | exact | symbolic")->check(CLI::IsMember(modes));
  det_cmd->add_option("--tol", det_tol, "Float mode zero-pivot tolerance")->check(CLI::NonNegativeNumber);

  std::string factor_path;
  std::string factor_mode = "exact";
  double factor_tol = 0.0;
  auto* factor_cmd = app.add_subcommand("factor", "Print the LU factor vectors alpha, beta, gamma");
  factor_cmd->add_option("file", factor_path, "System file")->required();
  factor_cmd->add_option("--mode", factor_mode, "float | exact | symbolic")->check(CLI::IsMember(modes));
  factor_cmd->add_option("--tol", factor_tol, "Float mode zero-pivot tolerance")->check(CLI::NonNegativeNumber);

  std::string check_path;
  auto* check_cmd = app.add_subcommand("check", "Compare the banded solve with the dense exact oracle");
  check_cmd->add_option("file", check_path, "System file")->required();

  detail::GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Write a seeded random system file");
  gen_cmd->add_option("--seed", gen_args.seed, "PRNG seed")->required();
  gen_cmd->add_option("--n", gen_args.n, "System size (>= 5)")->required()->check(CLI::Range(5, 1 << 24));
  gen_cmd->add_option("--range", gen_args.range, "Entries drawn from [-range, range]")->check(CLI::Range(1L, 1L << 30));
  gen_cmd->add_option("--zero", gen_args.zero, "Band position to force to zero, e.g. d_n");
  gen_cmd->add_flag("--planted", gen_args.planted, "Use Y = A X for a random integer X");
  gen_cmd->add_option("--out", gen_args.out_path, "Output path (default: standard output)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (solve_cmd->parsed()) return detail::cmd_solve(solve_args, out);
    if (det_cmd->parsed()) return detail::cmd_det(det_path, det_mode, det_tol, out);
    if (factor_cmd->parsed()) return detail::cmd_factor(factor_path, factor_mode, factor_tol, out);
    if (check_cmd->parsed()) return detail::cmd_check(check_path, out);
    if (gen_cmd->parsed()) return detail::cmd_gen(gen_args, out);
  } catch (const Error& e) {
    err << "bpenta: " << e.what() << '\n';
    return detail::exit_code_for(e);
  }
  return kUsage;
}

}  // namespace bpenta::cli
