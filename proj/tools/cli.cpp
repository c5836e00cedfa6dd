#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "posetcut/bench.hpp"
#include "posetcut/generators.hpp"
#include "posetcut/maxcut.hpp"
#include "posetcut/poset_io.hpp"
#include "posetcut/prooftrace.hpp"

namespace posetcut::cli {
namespace {

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

// Raised for CLI-level failures that carry their own exit code.
struct Exit {
  int code;
  std::string message;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv(kSeedEnv)) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError,
                  std::string(kSeedEnv) + " is not an unsigned integer");
    }
  }
  return 0;
}

FamilySpec with_seed(FamilySpec spec, std::uint64_t seed) {
  if (spec.family == Family::RandomDag && !spec.seed) spec.seed = seed;
  return spec;
}

// A path, `-` for stdin, or a family spec such as chain:8.
Poset load(const std::string& input, std::uint64_t seed, Io& io) {
  if (input == "-") return to_poset(parse_poset_file(io.in));
  if (std::filesystem::exists(input)) {
    std::ifstream file(input);
    if (!file) {
      throw Error(ErrorCode::ParseError, "cannot read '" + input + "'");
    }
    return to_poset(parse_poset_file(file));
  }
  if (input.find(':') != std::string::npos) {
    return generate(with_seed(parse_family_spec(input), seed));
  }
  throw Error(ErrorCode::ParseError,
              "'" + input + "' is neither a file nor a family spec");
}

void print_set(std::ostream& os, const std::vector<Element>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
}

int cmd_classify(const Poset& p, Io& io) {
  const Classification cls = classify(p);
  io.out << "element up down category\n";
  for (Element v = 0; v < p.size(); ++v) {
    io.out << v << ' ' << cls.up[v] << ' ' << cls.down[v] << ' '
           << to_string(cls.category[v]) << '\n';
  }
  auto line = [&](std::string_view name, const std::vector<Element>& set) {
    io.out << name << " (" << set.size() << "):";
    if (!set.empty()) io.out << ' ';
    print_set(io.out, set);
    io.out << '\n';
  };
  line("deficit", cls.deficit);
  line("surplus", cls.surplus);
  line("balanced", cls.balanced);
  return kOk;
}

int cmd_maxcut(const Poset& p, bool oracle, bool check, Io& io) {
  if (oracle && p.size() > kOracleMaxElements) {
    throw Exit{kOracleGuard, "--oracle accepts at most " +
                                 std::to_string(kOracleMaxElements) +
                                 " elements, got " + std::to_string(p.size())};
  }
  const Cut cut = max_dicut(p);
  const std::uint64_t m = p.relation_count();
  io.out << "bottom: ";
  print_set(io.out, cut.bottom);
  io.out << "\ntop: ";
  print_set(io.out, cut.top);
  io.out << "\nsize: " << cut.size << "\nrelations: " << m << "\nratio: ";
  if (m == 0) {
    io.out << "0 (vacuous: m=0)\n";
  } else {
    io.out << std::setprecision(6)
           << static_cast<double>(cut.size) / static_cast<double>(m) << '\n';
  }
  int code = kOk;
  if (check) {
    const bool ok = verify_half_bound(p, cut);
    io.out << "half-bound: " << (ok ? "ok" : "FAILED") << " (2*" << cut.size
           << (ok ? " >= " : " < ") << m << ")\n";
    if (!ok) code = kAssertionFailed;
  }
  if (oracle) {
    const Cut best = brute_force_max_cut(p);
    const bool match = best.size == cut.size;
    io.out << "oracle: " << best.size << (match ? " (match)" : " (MISMATCH)")
           << '\n';
    if (!match) code = kAssertionFailed;
  }
  return code;
}

int cmd_trace(const Poset& p, Io& io) {
  const ProofTrace trace = run_induction(p);
  if (trace.steps.empty()) io.out << "trace: empty, the poset has no relations\n";
  write_trace(io.out, trace);
  const std::uint64_t direct = max_dicut(p).size;
  const bool agree = direct == trace.final_cut.size;
  io.out << "agreement: trace size " << trace.final_cut.size
         << (agree ? " == " : " != ") << "max_dicut size " << direct << '\n';
  return agree ? kOk : kAssertionFailed;
}

int cmd_bench(const std::vector<std::string>& specs, std::size_t trials,
              std::uint64_t seed, bool scaling,
              const std::vector<std::size_t>& sizes, Io& io) {
  if (scaling) {
    const auto rows = bench::chain_scaling(sizes);
    bench::write_scaling_csv(io.out, rows);
    return kOk;
  }
  if (specs.empty()) throw Exit{kParseError, "bench needs at least one spec"};
  std::vector<FamilySpec> parsed;
  for (const auto& s : specs) {
    parsed.push_back(with_seed(parse_family_spec(s), seed));
  }
  const bench::Report report = bench::run(parsed, trials, seed);
  report.write_csv(io.out);
  for (const auto& row : report.rows) {
    if (row.algorithm == bench::Algorithm::Theorem && 2 * row.size < row.m) {
      io.err << "error: theorem row for " << row.family
             << " is below the half bound\n";
      return kAssertionFailed;
    }
  }
  return kOk;
}

int exit_code_for(ErrorCode code) {
  if (is_axiom_violation(code)) return kNotAPoset;
  switch (code) {
    case ErrorCode::TooLargeForOracle: return kOracleGuard;
    case ErrorCode::InternalAssertion:
    case ErrorCode::ProfileViolation:
      return kAssertionFailed;
    default: return kParseError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Io io{in, out, err};

  CLI::App app{"Maximum directed cuts of finite posets", "posetcut"};
  app.require_subcommand(1);

  std::string input;
  bool oracle = false;
  bool check = false;
  bool with_cut = false;
  std::optional<std::uint64_t> seed;
  std::size_t trials = 10;
  bool scaling = false;
  std::vector<std::size_t> sizes{500, 1000, 2000, 4000};
  std::vector<std::string> specs;
  std::string mode = "relations";

  const std::string input_help =
      "poset file, '-' for stdin, or a family spec such as chain:8";
  auto* classify_cmd =
      app.add_subcommand("classify", "Up/down degrees and categories");
  classify_cmd->add_option("input", input, input_help)->required();

  auto* maxcut_cmd = app.add_subcommand("maxcut", "Maximum directed cut");
  maxcut_cmd->add_option("input", input, input_help)->required();
  maxcut_cmd->add_flag("--oracle", oracle,
                       "also run the exhaustive oracle (n <= 24)");
  maxcut_cmd->add_flag("--check", check, "assert 2 * size >= m");
  maxcut_cmd->add_option("--seed", seed, "seed for random family specs");

  auto* trace_cmd =
      app.add_subcommand("trace", "Step-by-step run of the induction");
  trace_cmd->add_option("input", input, input_help)->required();
  trace_cmd->add_option("--seed", seed, "seed for random family specs");

  auto* bench_cmd = app.add_subcommand("bench", "CSV benchmark report");
  bench_cmd->add_option("specs", specs, "family specs");
  bench_cmd->add_option("--trials", trials, "random/local trials per spec");
  bench_cmd->add_option("--seed", seed, std::string("base seed (default $") +
                                            kSeedEnv + " or 0)");
  bench_cmd->add_flag("--scaling", scaling,
                      "time the theorem algorithm on doubling chains");
  bench_cmd->add_option("--sizes", sizes, "chain sizes for --scaling")
      ->delimiter(',');

  auto* gen_cmd = app.add_subcommand("gen", "Write a generated poset file");
  gen_cmd->add_option("spec", input, "family spec")->required();
  gen_cmd->add_option("--mode", mode, "relations or covers")
      ->check(CLI::IsMember({"relations", "covers"}));
  gen_cmd->add_option("--seed", seed, "seed for random family specs");

  auto* dot_cmd = app.add_subcommand("export-dot", "Hasse diagram as DOT");
  dot_cmd->add_option("input", input, input_help)->required();
  dot_cmd->add_flag("--cut", with_cut, "color nodes by the maximum cut");
  dot_cmd->add_option("--seed", seed, "seed for random family specs");

  std::vector<const char*> argv{"posetcut"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    const std::uint64_t base_seed = seed ? *seed : default_seed();
    if (*classify_cmd) return cmd_classify(load(input, base_seed, io), io);
    if (*maxcut_cmd) {
      return cmd_maxcut(load(input, base_seed, io), oracle, check, io);
    }
    if (*trace_cmd) return cmd_trace(load(input, base_seed, io), io);
    if (*bench_cmd) {
      return cmd_bench(specs, trials, base_seed, scaling, sizes, io);
    }
    if (*gen_cmd) {
      const Poset p =
          generate(with_seed(parse_family_spec(input), base_seed));
      write_poset_file(out, p,
                       mode == "covers" ? FileMode::Covers : FileMode::Relations);
      return kOk;
    }
    if (*dot_cmd) {
      const Poset p = load(input, base_seed, io);
      write_dot(out, p, with_cut ? std::optional<Cut>(max_dicut(p))
                                 : std::nullopt);
      return kOk;
    }
  } catch (const Exit& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kParseError;
}

}  // namespace posetcut::cli
