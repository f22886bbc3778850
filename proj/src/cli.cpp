#include "cyclicgv/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "cyclicgv/autocyclic.hpp"
#include "cyclicgv/bounds.hpp"
#include "cyclicgv/errors.hpp"
#include "cyclicgv/io.hpp"
#include "cyclicgv/packing.hpp"
#include "cyclicgv/random.hpp"
#include "cyclicgv/verify.hpp"

namespace cyclicgv::cli {

using nlohmann::ordered_json;

namespace {

struct Common {
  std::string format = "json";
  std::string report_path;
  std::size_t threads = 1;
};

struct Config {
  std::size_t n = 0;
  std::string delta;
  std::uint64_t seed = 0;
  std::uint64_t orbits = 100;
  std::uint64_t budget = 0;
  std::uint64_t trials = 100000;
  double alpha = 0.01;
  std::size_t exhaustive_limit = 24;
  std::uint64_t max_pairs = std::uint64_t{1} << 16;
  std::string code_path;
  std::string cprime_path;
  std::string out_path;
  std::string trace_path;
  std::string strategy = "auto";
  bool check_linear = false;
};

std::size_t default_threads() {
  if (const char* env = std::getenv("CYCLICGV_THREADS")) {
    try {
      const auto v = std::stoul(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

DistanceThreshold construction_delta(const std::string& text) {
  const auto d = DistanceThreshold::parse(text);
  if (!d.below_half()) throw DomainError("delta must satisfy 0 <= delta < 1/2, got " + d.to_string());
  return d;
}

ordered_json header(std::string_view command) {
  ordered_json j;
  j["command"] = command;
  j["tool_version"] = kToolVersion;
  j["generator"] = SplitMix64::kName;
  return j;
}

void render_text(const ordered_json& j, std::ostream& out, const std::string& indent = "") {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << indent << key << ":\n";
      render_text(value, out, indent + "  ");
    } else if (value.is_array()) {
      out << indent << key << ": [" << value.size() << " entries]\n";
      for (const auto& item : value) out << indent << "  - " << item.dump() << "\n";
    } else if (value.is_string()) {
      out << indent << key << ": " << value.get<std::string>() << "\n";
    } else {
      out << indent << key << ": " << value.dump() << "\n";
    }
  }
}

void emit(const ordered_json& report, const Common& common, std::ostream& out) {
  std::ostringstream text;
  if (common.format == "text") {
    render_text(report, text);
  } else {
    text << report.dump(2) << "\n";
  }
  if (common.report_path.empty()) {
    out << text.str();
  } else {
    write_text_file(common.report_path, text.str());
  }
}

void warn_composite(std::size_t n, ordered_json& report, std::ostream& err) {
  if (is_prime(n)) return;
  const std::string msg = "n = " + std::to_string(n) + " is not prime; the existence argument assumes prime n";
  err << "warning: " << msg << "\n";
  report["warnings"].push_back(msg);
}

int cmd_construct(const Config& cfg, const Common& common, std::ostream& out, std::ostream& err) {
  const auto delta = construction_delta(cfg.delta);
  auto report = header("construct");
  report["n"] = cfg.n;
  report["delta"] = delta.to_string();
  report["seed"] = cfg.seed;
  report["exhaustive_limit"] = cfg.exhaustive_limit;
  report["warnings"] = ordered_json::array();
  warn_composite(cfg.n, report, err);

  AutoCyclicOptions options;
  options.exhaustive_limit = cfg.exhaustive_limit;
  options.attempt_budget = cfg.budget;
  options.threads = common.threads;

  std::optional<CodeSet> code;
  if (cfg.n <= cfg.exhaustive_limit) {
    report["method"] = "exhaustive";
    code = enumerate_auto_cyclic(cfg.n, delta, options);
  } else {
    report["method"] = "sampled";
    report["target_orbits"] = cfg.orbits;
    report["attempt_budget"] = cfg.budget != 0 ? cfg.budget : 1000 * cfg.orbits;
    auto sampled = sample_auto_cyclic(cfg.n, delta, cfg.orbits, cfg.seed, options);
    report["attempts"] = sampled.stats.attempts;
    report["accepted"] = sampled.stats.accepted;
    report["orbits"] = sampled.stats.orbits;
    code = std::move(sampled.code);
  }

  const BigInt size = code->size();
  report["size"] = code->size();
  report["rate"] = code->empty() ? "undefined" : to_decimal(code_rate(size, cfg.n));
  report["lemma1_rate_target"] = to_decimal(1 - Real(1) / Real(cfg.n));
  // |C'| >= 2^{n-1} is exactly rate >= 1 - 1/n.
  report["meets_lemma1_rate"] = size >= (BigInt(1) << (cfg.n - 1));
  if (cfg.n >= 2) {
    const Real lhs = Real(2 * (cfg.n - 1)) * ball_entropy_bound(cfg.n, delta);
    report["lemma1_size_condition"] = lhs <= pow(Real(2), cfg.n - 1);
  }
  if (!cfg.out_path.empty()) {
    write_text_file(cfg.out_path, format_code_file(*code, delta, CodeKind::autocyclic));
    report["output"] = cfg.out_path;
  } else {
    report["words"] = ordered_json::array();
    for (const auto& w : *code) report["words"].push_back(w.to_string());
  }
  emit(report, common, out);
  return kOk;
}

int cmd_pack(const Config& cfg, const Common& common, std::ostream& out, std::ostream& err) {
  const auto file = read_code_file(cfg.code_path);
  const auto delta = cfg.delta.empty() ? file.delta : construction_delta(cfg.delta);
  if (!delta.below_half()) throw DomainError("delta must satisfy 0 <= delta < 1/2, got " + delta.to_string());
  const std::size_t n = file.code.length();

  auto report = header("pack");
  report["n"] = n;
  report["delta"] = delta.to_string();
  report["input"] = cfg.code_path;
  report["strategy"] = cfg.strategy;
  report["warnings"] = ordered_json::array();
  warn_composite(n, report, err);

  PackingOptions options;
  options.threads = common.threads;
  if (cfg.strategy == "scan") {
    options.strategy = ConflictStrategy::scan;
  } else if (cfg.strategy == "ball") {
    options.strategy = ConflictStrategy::ball;
  } else if (cfg.strategy != "auto") {
    throw DomainError("unknown strategy '" + cfg.strategy + "'");
  }

  const auto result = greedy_pack(file.code, delta, options);
  const auto& trace = result.trace;
  const Real cap = Real(n) * ball_entropy_bound(n, delta);
  bool within_cap = true;
  for (auto removed : trace.removed_counts) within_cap = within_cap && Real(removed) <= cap;

  report["input_size"] = trace.initial_size;
  report["size"] = trace.final_size;
  report["iterations"] = trace.selected.size();
  report["rate"] = result.code.empty() ? "undefined" : to_decimal(code_rate(BigInt(trace.final_size), n));
  report["input_rate"] = file.code.empty() ? "undefined" : to_decimal(code_rate(BigInt(trace.initial_size), n));
  report["gv_rate"] = to_decimal(gv_rate(delta));
  report["rate_bound_holds"] = verify_rate_bound(trace.initial_size, trace.final_size, n, delta);
  report["removal_cap_holds"] = within_cap;

  if (!cfg.out_path.empty()) {
    write_text_file(cfg.out_path, format_code_file(result.code, delta, CodeKind::packed));
    report["output"] = cfg.out_path;
  }
  if (!cfg.trace_path.empty()) {
    write_text_file(cfg.trace_path, to_json(trace).dump(2) + "\n");
    report["trace"] = cfg.trace_path;
  } else {
    report["trace"] = to_json(trace);
  }
  emit(report, common, out);
  return kOk;
}

int cmd_estimate(const Config& cfg, const Common& common, std::ostream& out, std::ostream& err) {
  const auto delta = construction_delta(cfg.delta);
  auto report = header("estimate");
  report["warnings"] = ordered_json::array();
  warn_composite(cfg.n, report, err);
  const auto estimate = estimate_tail(cfg.n, delta, cfg.trials, cfg.seed, cfg.alpha, common.threads);
  report["estimate"] = to_json(estimate);
  const Real bound = lemma1_bound(cfg.n, delta);
  report["lemma1_bound"] = to_decimal(bound);
  report["consistent_with_bound"] = estimate.point_estimate() - estimate.confidence_radius() <= bound;
  emit(report, common, out);
  return kOk;
}

int cmd_bounds(const Config& cfg, const Common& common, std::ostream& out, std::ostream&) {
  const auto delta = construction_delta(cfg.delta);
  auto report = header("bounds");
  report["bounds"] = to_json(evaluate_bounds(cfg.n, delta));
  emit(report, common, out);
  return kOk;
}

int cmd_verify(const Config& cfg, const Common& common, std::ostream& out, std::ostream&) {
  const auto file = read_code_file(cfg.code_path);
  const auto delta = cfg.delta.empty() ? file.delta : DistanceThreshold::parse(cfg.delta);
  VerifyOptions options;
  options.max_representative_pairs = cfg.max_pairs;
  options.seed = cfg.seed;
  options.threads = common.threads;

  VerificationReport vr;
  vr.subject = cfg.code_path + " (n=" + std::to_string(file.code.length()) + ", kind=" +
               std::string(to_string(file.kind)) + ", size=" + std::to_string(file.code.size()) + ")";
  vr.checks.push_back(check_cyclic_closure(file.code));
  vr.checks.push_back(check_auto_cyclic(file.code, delta));
  if (file.kind == CodeKind::packed) vr.checks.push_back(check_min_cyclic_distance(file.code, delta, options));
  if (!cfg.cprime_path.empty()) {
    const auto cprime = read_code_file(cfg.cprime_path);
    vr.checks.push_back(check_maximality(file.code, cprime.code, delta, options));
  }
  if (cfg.check_linear) vr.checks.push_back(check_not_linear(file.code, options));

  auto report = header("verify");
  report["delta"] = delta.to_string();
  report["seed"] = cfg.seed;
  report["max_representative_pairs"] = cfg.max_pairs;
  report["verification"] = to_json(vr);
  emit(report, common, out);
  if (!vr.all_pass()) return kVerificationFailed;
  if (vr.any_partial()) return kCapacityError;
  return kOk;
}

int cmd_witness(const Config& cfg, const Common& common, std::ostream& out, std::ostream& err) {
  const auto delta = DistanceThreshold::parse(cfg.delta);
  auto report = header("witness");
  report["seed"] = cfg.seed;
  report["exhaustive_limit"] = cfg.exhaustive_limit;
  report["warnings"] = ordered_json::array();
  warn_composite(cfg.n, report, err);
  VerifyOptions options;
  options.seed = cfg.seed;
  options.exhaustive_limit = cfg.exhaustive_limit;
  if (cfg.budget != 0) options.witness_budget = cfg.budget;
  report["witness_budget"] = options.witness_budget;
  const auto w = find_nonlinearity_witness(cfg.n, delta, options);
  report["witness"] = to_json(w);
  const auto failed = recheck_witness(w);
  report["invariants_hold"] = failed.empty();
  report["failed_invariants"] = failed;
  emit(report, common, out);
  return failed.empty() ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, pack and verify binary non-linear cyclic codes"};
  app.require_subcommand(1);
  Common common;
  common.threads = default_threads();
  Config cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--report", common.report_path, "Write the report here instead of stdout");
    sub->add_option("--threads", common.threads, "Worker threads (output is identical for any value)")
        ->check(CLI::PositiveNumber);
  };

  auto* construct = app.add_subcommand("construct", "Build the auto-cyclic code C'");
  construct->add_option("--n", cfg.n, "Code length")->required()->check(CLI::Range(2, 4096));
  construct->add_option("--delta", cfg.delta, "Threshold p/q")->required();
  construct->add_option("--seed", cfg.seed, "Sampling seed");
  construct->add_option("--orbits", cfg.orbits, "Orbits to sample when n exceeds the exhaustive limit")
      ->check(CLI::PositiveNumber);
  construct->add_option("--budget", cfg.budget, "Sampling attempt budget (0: 1000 x orbits)");
  construct->add_option("--exhaustive-limit", cfg.exhaustive_limit, "Largest n enumerated exhaustively")
      ->check(CLI::Range(1, 30));
  construct->add_option("--out", cfg.out_path, "Code file to write");
  add_common(construct);

  auto* pack = app.add_subcommand("pack", "Greedy cyclic-orbit packing of a code file");
  pack->add_option("--code", cfg.code_path, "Input C' code file")->required();
  pack->add_option("--delta", cfg.delta, "Threshold p/q (default: the file's)");
  pack->add_option("--out", cfg.out_path, "Packed code file to write");
  pack->add_option("--trace", cfg.trace_path, "Packing trace JSON to write");
  pack->add_option("--strategy", cfg.strategy, "Conflict search: auto, scan or ball")
      ->check(CLI::IsMember({"auto", "scan", "ball"}));
  add_common(pack);

  auto* estimate = app.add_subcommand("estimate", "Monte-Carlo estimate of Pr[d*_cyc(x,x) < delta]");
  estimate->add_option("--n", cfg.n, "Code length")->required()->check(CLI::Range(2, 4096));
  estimate->add_option("--delta", cfg.delta, "Threshold p/q")->required();
  estimate->add_option("--trials", cfg.trials, "Number of uniform samples")->check(CLI::PositiveNumber);
  estimate->add_option("--seed", cfg.seed, "Seed");
  estimate->add_option("--alpha", cfg.alpha, "Confidence level is 1 - alpha")->check(CLI::Range(1e-300, 0.999999));
  add_common(estimate);

  auto* bounds = app.add_subcommand("bounds", "Evaluate entropy, ball and rate bounds");
  bounds->add_option("--n", cfg.n, "Code length")->required()->check(CLI::Range(2, 1 << 20));
  bounds->add_option("--delta", cfg.delta, "Threshold p/q")->required();
  add_common(bounds);

  auto* verify = app.add_subcommand("verify", "Check a code file's claimed properties");
  verify->add_option("--code", cfg.code_path, "Code file")->required();
  verify->add_option("--delta", cfg.delta, "Threshold p/q (default: the file's)");
  verify->add_option("--cprime", cfg.cprime_path, "Candidate pool the code was packed from (maximality)");
  verify->add_flag("--check-linear", cfg.check_linear, "Also look for an xor counterexample");
  verify->add_option("--max-pairs", cfg.max_pairs, "Representative pairs scanned before sampling")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "Seed for sampled fallbacks");
  add_common(verify);

  auto* witness = app.add_subcommand("witness", "Find a non-linearity witness x, y = x + 0^{n-1}1");
  witness->add_option("--n", cfg.n, "Code length")->required()->check(CLI::Range(2, 4096));
  witness->add_option("--delta", cfg.delta, "Threshold p/q")->required();
  witness->add_option("--seed", cfg.seed, "Seed for sampling above the exhaustive limit");
  witness->add_option("--budget", cfg.budget, "Sampling attempts (0: default)");
  witness->add_option("--exhaustive-limit", cfg.exhaustive_limit, "Largest n scanned exhaustively")
      ->check(CLI::Range(1, 30));
  add_common(witness);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }

  try {
    if (*construct) return cmd_construct(cfg, common, out, err);
    if (*pack) return cmd_pack(cfg, common, out, err);
    if (*estimate) return cmd_estimate(cfg, common, out, err);
    if (*bounds) return cmd_bounds(cfg, common, out, err);
    if (*verify) return cmd_verify(cfg, common, out, err);
    if (*witness) return cmd_witness(cfg, common, out, err);
  } catch (const PartialResultError& e) {
    err << "error: " << e.what() << "\n";
    return kCapacityError;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << "\n";
    return kContractError;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kCapacityError;
  } catch (const NotFoundError& e) {
    err << "error: " << e.what() << "\n";
    return kCapacityError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  }
  return kOk;
}

}  // namespace cyclicgv::cli
