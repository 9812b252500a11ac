#include "gmpd/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "gmpd/cli/document.hpp"
#include "gmpd/error.hpp"

namespace gmpd::cli {

namespace {

struct ModelSource {
  std::string file = "-";
  std::string inline_text;

  void attach(CLI::App &cmd) {
    cmd.add_option("file", file, "Model document path, '-' for standard input");
    cmd.add_option("--model", inline_text, "Model document given inline as JSON text");
  }

  DomainModel load(std::istream &in) const {
    if (!inline_text.empty()) {
      if (file != "-") throw input_error("give either a model file or --model, not both");
      return parse_model_document(inline_text);
    }
    std::string text;
    if (file == "-") {
      text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
      std::ifstream stream(file);
      if (!stream) throw input_error("cannot open model document " + file);
      text.assign(std::istreambuf_iterator<char>(stream), std::istreambuf_iterator<char>());
    }
    return parse_model_document(text);
  }
};

struct CountArgs {
  ModelSource source;
  bool lattice_stats = false;
  std::size_t size_guard = default_size_guard;
};

struct LatticeArgs {
  ModelSource source;
  std::string emit = "json";
  std::size_t size_guard = default_size_guard;
};

struct EnumSpecArgs {
  std::size_t n = 0;
  bool oracle = false;
  std::size_t bound = default_bruteforce_bound;
  std::string emit = "json";
};

struct VerifyArgs {
  std::size_t max_maximals = 8;
  std::size_t size_guard = default_size_guard;
};

int code(ExitCode c) { return static_cast<int>(c); }

int run_count(const CountArgs &args, std::istream &in, std::ostream &out) {
  const DomainModel model = args.source.load(in);
  out << report_json(model, {args.lattice_stats, args.size_guard}).dump(2) << '\n';
  return code(ExitCode::success);
}

int run_lattice(const LatticeArgs &args, std::istream &in, std::ostream &out) {
  const OverringLattice lat = build(args.source.load(in), args.size_guard);
  if (args.emit == "dot") {
    out << emit_hasse(lat);
  } else {
    out << lattice_json(lat).dump(2) << '\n';
  }
  return code(ExitCode::success);
}

int run_enum_spec(const EnumSpecArgs &args, std::ostream &out, std::ostream &err) {
  if (args.emit == "dot") {
    for (const SpecShape &shape : enumerate_shapes(args.n)) {
      const std::string name =
          "shape_" + std::to_string(shape.long_branches) + "_" + std::to_string(shape.short_branches);
      out << emit_dot(spectrum_of(realizing_model(shape)), name);
    }
    return code(ExitCode::success);
  }
  const Json doc = enum_spec_json(args.n, {args.oracle, args.bound});
  out << doc.dump(2) << '\n';
  if (doc.contains("oracle") && !doc["oracle"]["agree"].get<bool>()) {
    err << "gmpd: brute-force enumeration disagrees with the closed-form shapes\n";
    return code(ExitCode::verification_failure);
  }
  return code(ExitCode::success);
}

int run_verify(const VerifyArgs &args, std::ostream &out, std::ostream &err) {
  const VerificationSummary summary = verify_all(args.max_maximals, args.size_guard);
  out << verification_json(summary).dump(2) << '\n';
  if (summary.passed()) return code(ExitCode::success);
  for (const VerificationFailure &f : summary.failures) {
    err << "gmpd: counterexample " << to_string(f.model) << ": " << f.check;
    if (!f.detail.empty()) err << " (" << f.detail << ")";
    err << '\n';
  }
  return code(ExitCode::verification_failure);
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Overring counts, overring lattices and prime spectra of GMPD domain models",
               "gmpd"};
  app.require_subcommand(1);

  CountArgs count_args;
  auto *count = app.add_subcommand("count", "Count overrings and characterize a model");
  count_args.source.attach(*count);
  count->add_flag("--lattice-stats", count_args.lattice_stats,
                  "Also build the overring lattice and report its census");
  count->add_option("--size-guard", count_args.size_guard, "Largest lattice to build")
      ->check(CLI::PositiveNumber);

  LatticeArgs lattice_args;
  auto *lattice = app.add_subcommand("lattice", "Build the overring lattice of a model");
  lattice_args.source.attach(*lattice);
  lattice->add_option("--emit", lattice_args.emit, "Output format")
      ->check(CLI::IsMember({"json", "dot"}));
  lattice->add_option("--size-guard", lattice_args.size_guard, "Largest lattice to build")
      ->check(CLI::PositiveNumber);

  EnumSpecArgs enum_args;
  auto *enum_spec =
      app.add_subcommand("enum-spec", "List the prime spectrum shapes with n elements");
  enum_spec->add_option("n", enum_args.n, "Number of prime ideals")->required();
  enum_spec->add_flag("--oracle", enum_args.oracle,
                      "Cross-check against brute-force poset enumeration");
  enum_spec->add_option("--bound", enum_args.bound, "Largest n the brute-force search accepts");
  enum_spec->add_option("--emit", enum_args.emit, "Output format")
      ->check(CLI::IsMember({"json", "dot"}));

  VerifyArgs verify_args;
  auto *verify = app.add_subcommand("verify", "Run the exhaustive formula/oracle suite");
  verify->add_option("--max-maximals", verify_args.max_maximals,
                     "Largest number of maximal ideals to enumerate");
  verify->add_option("--size-guard", verify_args.size_guard, "Largest lattice to build")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return code(ExitCode::success);
    }
    err << "gmpd: " << e.what() << '\n';
    return code(ExitCode::input_error);
  }

  try {
    if (*count) return run_count(count_args, in, out);
    if (*lattice) return run_lattice(lattice_args, in, out);
    if (*enum_spec) return run_enum_spec(enum_args, out, err);
    return run_verify(verify_args, out, err);
  } catch (const input_error &e) {
    err << "gmpd: " << e.what() << '\n';
    return code(ExitCode::input_error);
  } catch (const precondition_error &e) {
    err << "gmpd: " << e.what() << '\n';
    return code(ExitCode::input_error);
  } catch (const resource_limit_error &e) {
    err << "gmpd: " << e.what() << '\n';
    return code(ExitCode::resource_limit);
  } catch (const internal_error &e) {
    err << "gmpd: internal inconsistency: " << e.what() << '\n';
    return code(ExitCode::verification_failure);
  }
}

} // namespace gmpd::cli
