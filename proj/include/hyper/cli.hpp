#pragma once

// Command-line front end shared by tools/hyperc.cpp and the tests.
//
// Exit codes: 0 every identity passed, 1 an identity failed, 2 I/O error,
// 3 malformed input (bad flags, coefficients or identity text).

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hyper/builtin_suite.hpp"
#include "hyper/decomp.hpp"
#include "hyper/dsl.hpp"
#include "hyper/structure_table.hpp"

namespace hyper::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitMalformed = 3;

enum class Command { Suite, Check, Decompose, Table };
enum class Format { Text, Json };

struct RunConfig {
  Command command = Command::Suite;
  std::size_t dim = 8;
  dsl::Backend backend = dsl::Backend::Exact;
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  long coeff_range = 9;
  std::optional<double> tolerance;  // binary64 only
  Format format = Format::Text;
  bool basis_sweep = false;
  std::string file;                   // check
  std::array<std::string, 3> operands;  // decompose

  [[nodiscard]] dsl::CheckOptions check_options() const {
    dsl::CheckOptions opt;
    opt.dim = dim;
    opt.backend = backend;
    opt.trials = trials;
    opt.seed = seed;
    opt.coeff_range = coeff_range;
    opt.basis_sweep = basis_sweep;
    if (tolerance) opt.tolerance = Tolerance{*tolerance, Tolerance{}.absolute_floor};
    return opt;
  }
};

using ordered_json = nlohmann::ordered_json;

[[nodiscard]] inline ordered_json report_json(const dsl::CheckReport& r) {
  ordered_json j;
  j["identity"] = r.identity;
  j["status"] = dsl::status_name(r.status);
  j["trials"] = r.trials;
  j["failures"] = r.failures;
  j["max_deviation"] = r.max_deviation;
  if (r.witness) {
    ordered_json w = ordered_json::object();
    for (const auto& [name, coeffs] : *r.witness) w[name] = coeffs;
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  j["dim"] = r.dim;
  j["backend"] = dsl::backend_name(r.backend);
  j["seed"] = r.seed;
  if (!r.message.empty()) j["message"] = r.message;
  return j;
}

[[nodiscard]] inline std::string report_text(const dsl::CheckReport& r) {
  std::ostringstream out;
  out << dsl::status_name(r.status) << "  " << r.identity << '\n';
  out << "    dim " << r.dim << ", " << dsl::backend_name(r.backend) << ", seed " << r.seed << ": ";
  switch (r.status) {
    case dsl::Status::Pass:
      out << "no counterexample found in " << r.trials << " trials; max deviation "
          << r.max_deviation << '\n';
      break;
    case dsl::Status::Fail:
      out << r.failures << " of " << r.trials << " trials failed; max deviation "
          << r.max_deviation << '\n';
      out << "    witness:";
      for (const auto& [name, coeffs] : *r.witness) out << ' ' << name << " = " << coeffs << ';';
      out << '\n';
      break;
    default:
      out << r.message << '\n';
  }
  return out.str();
}

namespace detail {

inline void emit(const dsl::CheckReport& r, Format f, std::ostream& out) {
  if (f == Format::Json)
    out << report_json(r).dump() << '\n';
  else
    out << report_text(r);
}

/// Checks every applicable line and returns the combined exit code.
inline int check_lines(const std::vector<dsl::IdentityLine>& lines, const RunConfig& cfg,
                       std::ostream& out) {
  const auto opt = cfg.check_options();
  std::size_t passed = 0, failed = 0, malformed = 0;
  for (const auto& line : lines) {
    if (!line.applies_to(cfg.dim)) continue;
    auto rep = dsl::check_text(line.text, opt);
    if (rep.status == dsl::Status::ParseError || rep.status == dsl::Status::Error)
      rep.message = "line " + std::to_string(line.line) + ": " + rep.message;
    emit(rep, cfg.format, out);
    switch (rep.status) {
      case dsl::Status::Pass: ++passed; break;
      case dsl::Status::Fail: ++failed; break;
      default: ++malformed;
    }
  }
  if (cfg.format == Format::Text) {
    const std::size_t total = passed + failed + malformed;
    out << total << (total == 1 ? " identity: " : " identities: ") << passed << " passed, " << failed
        << " failed, " << malformed << " malformed\n";
  }
  if (malformed) return kExitMalformed;
  return failed ? kExitFail : kExitPass;
}

template <class S>
int decompose(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::array<std::optional<HNum<S>>, 3> u;
  for (std::size_t k = 0; k < 3; ++k) {
    try {
      u[k] = parse_hnum<S>(cfg.operands[k], cfg.dim);
    } catch (const parse_error& ex) {
      err << "u" << k + 1 << ": " << ex.what() << '\n';
      return kExitMalformed;
    }
  }
  const auto& u1 = *u[0];
  const auto& u2 = *u[1];
  const auto& u3 = *u[2];
  const auto d = decompose_triple(u1, u2, u3);
  const S na = norm_sq(d.anticommutator), nc = norm_sq(d.cross3), ns = norm_sq(d.associator);
  const S sum = na + nc + ns;
  const S norms = norm_sq(u1) * norm_sq(u2) * norm_sq(u3);
  using T = scalar_traits<S>;

  if (cfg.format == Format::Json) {
    ordered_json j;
    j["dim"] = cfg.dim;
    j["backend"] = T::name;
    j["u1"] = to_coeff_list(u1);
    j["u2"] = to_coeff_list(u2);
    j["u3"] = to_coeff_list(u3);
    j["product"] = to_coeff_list(d.product);
    j["anticommutator"] = to_coeff_list(d.anticommutator);
    j["cross3"] = to_coeff_list(d.cross3);
    j["associator"] = to_coeff_list(d.associator);
    j["inner_anticommutator_cross3"] = T::to_string(inner(d.anticommutator, d.cross3));
    j["inner_anticommutator_associator"] = T::to_string(inner(d.anticommutator, d.associator));
    j["inner_cross3_associator"] = T::to_string(inner(d.cross3, d.associator));
    j["norm_sq_anticommutator"] = T::to_string(na);
    j["norm_sq_cross3"] = T::to_string(nc);
    j["norm_sq_associator"] = T::to_string(ns);
    j["norm_sq_sum"] = T::to_string(sum);
    j["norm_product"] = T::to_string(norms);
    out << j.dump() << '\n';
    return kExitPass;
  }

  out << "dim " << cfg.dim << ", " << T::name << '\n';
  out << "u1 = " << to_string(u1) << '\n';
  out << "u2 = " << to_string(u2) << '\n';
  out << "u3 = " << to_string(u3) << '\n';
  out << "(u1 conj(u2)) u3      = " << to_string(d.product) << '\n';
  out << "anticommutator        = " << to_string(d.anticommutator) << '\n';
  out << "cross3                = " << to_string(d.cross3) << '\n';
  out << "associator            = " << to_string(d.associator) << '\n';
  out << "(anticomm, cross3)    = " << T::to_string(inner(d.anticommutator, d.cross3)) << '\n';
  out << "(anticomm, assoc)     = " << T::to_string(inner(d.anticommutator, d.associator)) << '\n';
  out << "(cross3, assoc)       = " << T::to_string(inner(d.cross3, d.associator)) << '\n';
  out << "|anticomm|^2          = " << T::to_string(na) << '\n';
  out << "|cross3|^2            = " << T::to_string(nc) << '\n';
  out << "|assoc|^2             = " << T::to_string(ns) << '\n';
  out << "sum                   = " << T::to_string(sum) << '\n';
  out << "(u1,u1)(u2,u2)(u3,u3) = " << T::to_string(norms) << '\n';
  return kExitPass;
}

}  // namespace detail

inline int run_suite(const RunConfig& cfg, std::ostream& out) {
  return detail::check_lines(dsl::read_identities(kBuiltinSuite), cfg, out);
}

inline int run_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ifstream in(cfg.file, std::ios::binary);
  if (!in) {
    err << "cannot read '" << cfg.file << "'\n";
    return kExitIo;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    err << "error reading '" << cfg.file << "'\n";
    return kExitIo;
  }
  std::vector<dsl::IdentityLine> lines;
  try {
    lines = dsl::read_identities(buf.str());
  } catch (const parse_error& ex) {
    err << cfg.file << ": " << ex.what() << '\n';
    return kExitMalformed;
  }
  return detail::check_lines(lines, cfg, out);
}

inline int run_decompose(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.backend == dsl::Backend::Exact) return detail::decompose<Rational>(cfg, out, err);
  return detail::decompose<double>(cfg, out, err);
}

inline int run_table(const RunConfig& cfg, std::ostream& out) {
  const auto t = build_table(cfg.dim);
  if (cfg.format == Format::Json) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < t.dim(); ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t j = 0; j < t.dim(); ++j) {
        const auto& e = t.entry(i, j);
        row.push_back(std::string(e.sign < 0 ? "-" : "+") + basis_name(e.index));
      }
      rows.push_back(std::move(row));
    }
    ordered_json j;
    j["dim"] = t.dim();
    j["table"] = std::move(rows);
    out << j.dump() << '\n';
  } else {
    out << format_table(t);
  }
  return kExitPass;
}

inline int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  switch (cfg.command) {
    case Command::Suite: return run_suite(cfg, out);
    case Command::Check: return run_check(cfg, out, err);
    case Command::Decompose: return run_decompose(cfg, out, err);
    case Command::Table: return run_table(cfg, out);
  }
  return kExitMalformed;
}

/// Parses `args` (without the program name) and runs the selected command.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypercomplex product decompositions and identity checker", "hyperc"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string backend = "exact", format = "text";
  std::optional<double> tolerance;
  app.add_option("--dim", cfg.dim, "algebra dimension")->check(CLI::IsMember({1, 2, 4, 8}));
  app.add_option("--backend", backend, "scalar backend")->check(CLI::IsMember({"exact", "binary64"}));
  app.add_option("--trials", cfg.trials, "random trials per identity")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--coeff-range", cfg.coeff_range, "sample coefficients from [-N, N]")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--tolerance", tolerance, "relative tolerance (binary64 only, default 1e-9)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--basis", cfg.basis_sweep, "also check every assignment of basis elements");

  auto* suite = app.add_subcommand("suite", "check the built-in identity suite");
  auto* check = app.add_subcommand("check", "check the identities in a file");
  check->add_option("file", cfg.file, "identity file, one per line")->required();
  auto* decompose = app.add_subcommand("decompose", "split (u1 conj(u2)) u3 into its three parts");
  decompose->add_option("u1", cfg.operands[0], "a0,a1,... or a basis name")->required();
  decompose->add_option("u2", cfg.operands[1])->required();
  decompose->add_option("u3", cfg.operands[2])->required();
  auto* table = app.add_subcommand("table", "print the basis multiplication table");
  for (auto* sub : {suite, check, decompose, table}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitMalformed;
  }

  cfg.backend = backend == "exact" ? dsl::Backend::Exact : dsl::Backend::Binary64;
  cfg.format = format == "json" ? Format::Json : Format::Text;
  if (cfg.backend == dsl::Backend::Exact && tolerance) {
    err << "--tolerance applies only to --backend binary64\n";
    return kExitMalformed;
  }
  if (cfg.backend == dsl::Backend::Binary64) cfg.tolerance = tolerance.value_or(1e-9);
  if (cfg.trials == 0 && !cfg.basis_sweep) {
    err << "--trials must be at least 1\n";
    return kExitMalformed;
  }

  if (*suite) cfg.command = Command::Suite;
  if (*check) cfg.command = Command::Check;
  if (*decompose) cfg.command = Command::Decompose;
  if (*table) cfg.command = Command::Table;
  return dispatch(cfg, out, err);
}

}  // namespace hyper::cli
