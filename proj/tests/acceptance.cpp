// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include <unistd.h>

#include "cyclicgv/autocyclic.hpp"
#include "cyclicgv/bounds.hpp"
#include "cyclicgv/cli.hpp"
#include "cyclicgv/packing.hpp"
#include "cyclicgv/verify.hpp"
#include "oracle.hpp"

namespace {

using namespace cyclicgv;
namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::string detail;
};

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.pass) {
    o.pass = false;
    o.detail = what;
  }
}

std::set<std::string> as_strings(const CodeSet& c) {
  std::set<std::string> out;
  for (const auto& w : c) out.insert(w.to_string());
  return out;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t sets = 0;
  for (std::size_t n : {5, 7, 11, 13}) {
    for (auto [p, q] : {std::pair<std::uint64_t, std::uint64_t>{1, 5}, {1, 4}, {2, 5}}) {
      const bool same = as_strings(enumerate_auto_cyclic(n, {p, q})) == oracle::auto_cyclic_code(n, p, q);
      require(o, same, "mismatch at n=" + std::to_string(n) + " delta=" + std::to_string(p) + "/" + std::to_string(q));
      ++sets;
    }
  }
  if (o.pass) o.detail = std::to_string(sets) + " sets equal";
  return o;
}

Outcome tail_n61() {
  Outcome o;
  const DistanceThreshold d(1, 4);
  const Real bound = lemma1_bound(61, d);
  // Independent route: double-precision log-domain evaluation and a frozen
  // high-precision reference.
  const double h = -(0.25 * std::log2(0.25) + 0.75 * std::log2(0.75));
  const double cross = std::exp2(1.0 + std::log2(60.0) + (h - 1.0) * 61.0);
  require(o, abs(bound - Real(cross)) < Real("1e-12"), "bound disagrees with double evaluation");
  require(o, abs(bound - Real("0.041087865284474767131")) < Real("1e-20"), "bound disagrees with reference");
  const auto e = estimate_tail(61, d, 100000, 7, 0.01, 4);
  const Real lower = e.point_estimate() - e.confidence_radius();
  require(o, lower <= bound, "estimate exceeds bound");
  o.detail = "failures " + std::to_string(e.failures) + "/100000, estimate - radius = " + to_decimal(lower) +
             " <= " + to_decimal(bound);
  return o;
}

Outcome tail_n13() {
  Outcome o;
  const DistanceThreshold d(1, 4);
  const auto failures = count_auto_cyclic_failures(13, d);
  std::uint64_t oracle_failures = 0;
  for (const auto& w : oracle::all_words(13)) oracle_failures += !oracle::member(w, 1, 4);
  require(o, failures == oracle_failures, "exact count disagrees with brute force");
  const Real exact = Real(failures) / 8192;
  const Real bound = lemma1_bound(13, d);
  const bool bound_applies = bound < 1;
  if (bound_applies) require(o, exact <= bound, "exact fraction exceeds bound");
  const auto e = estimate_tail(13, d, 100000, 13, 0.01, 4);
  const Real gap = abs(e.point_estimate() - exact);
  require(o, gap <= 3 * e.confidence_radius(), "Monte-Carlo estimate outside 3 radii");
  o.detail = "exact " + std::to_string(failures) + "/8192, bound " + to_decimal(bound) +
             (bound_applies ? "" : " (>= 1, inequality vacuous)") + ", |MC - exact| = " + to_decimal(gap) +
             " <= 3 * " + to_decimal(e.confidence_radius());
  return o;
}

Outcome packing_invariants() {
  Outcome o;
  std::size_t cases = 0;
  for (std::size_t n : {5, 7, 11, 13}) {
    for (const DistanceThreshold d : {DistanceThreshold(2, n), DistanceThreshold(1, 4)}) {
      const auto cprime = enumerate_auto_cyclic(n, d);
      const auto r = greedy_pack(cprime, d);
      const std::string tag = " at n=" + std::to_string(n) + " delta=" + d.to_string();
      require(o, check_cyclic_closure(r.code).pass, "closure" + tag);
      const auto md = check_min_cyclic_distance(r.code, d);
      require(o, md.pass && !md.partial, "min distance" + tag);
      require(o, check_maximality(r.code, cprime, d).pass, "maximality" + tag);
      require(o, verify_rate_bound(cprime.size(), r.code.size(), n, d), "rate bound" + tag);
      ++cases;
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " instances, all four checks exact";
  return o;
}

Outcome size_claim() {
  Outcome o;
  std::size_t checked = 0;
  for (std::size_t n : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
    // |C'| depends only on the integer threshold, and the hypothesis is
    // monotone in delta, so the grid k/(2n) covers every distinct code at
    // both its smallest and largest admissible delta.
    for (std::uint64_t k = 0; k < n; ++k) {
      const DistanceThreshold d(k, 2 * n);
      if (Real(2 * (n - 1)) * ball_entropy_bound(n, d) > pow(Real(2), n - 1)) continue;
      const auto size = enumerate_auto_cyclic(n, d, {24, 0, 4}).size();
      require(o, size >= (std::size_t{1} << (n - 1)),
              "|C'| = " + std::to_string(size) + " at n=" + std::to_string(n) + " delta=" + d.to_string());
      ++checked;
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " (n, delta) pairs satisfy |C'| >= 2^(n-1)";
  return o;
}

Outcome ball_entropy() {
  Outcome o;
  std::size_t pairs = 0;
  for (std::size_t n = 1; n <= 64; ++n) {
    for (std::size_t r = 0; 2 * r <= n; ++r) {
      require(o, Real(ball_volume(n, r)) <= ball_entropy_bound(n, {r, n}),
              "V(" + std::to_string(n) + "," + std::to_string(r) + ") exceeds bound");
      ++pairs;
    }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " (n, r) pairs";
  return o;
}

Outcome nonlinearity() {
  Outcome o;
  o.pass = false;
  std::string found;
  for (std::size_t n : {11, 13, 17, 19, 23, 29, 31}) {
    try {
      const auto w = find_nonlinearity_witness(n, {1, 4});
      const bool ok = recheck_witness(w).empty() && auto_cyclic_distance(Codeword::unit_last(n)) == RationalDistance(2, n);
      if (ok) {
        o.pass = true;
        found += (found.empty() ? "" : ",") + std::to_string(n);
      }
    } catch (const NotFoundError&) {
    }
  }
  o.detail = o.pass ? "witnesses re-verified at n = " + found : "no witness found";
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string artifacts(const fs::path& dir, const std::string& threads) {
  fs::create_directories(dir);
  std::ostringstream out, err;
  const auto code = (dir / "cprime.code").string();
  const auto packed = (dir / "packed.code").string();
  const auto trace = (dir / "trace.json").string();
  auto run = [&](std::vector<std::string> args) {
    args.insert(args.begin(), "cyclicgv");
    args.insert(args.end(), {"--threads", threads});
    if (cli::run(args, out, err) != cli::kOk) throw std::runtime_error("command failed: " + err.str());
  };
  run({"construct", "--n", "61", "--delta", "1/4", "--orbits", "200", "--seed", "11", "--out", code});
  run({"pack", "--code", code, "--out", packed, "--trace", trace});
  run({"estimate", "--n", "61", "--delta", "1/4", "--trials", "20000", "--seed", "11"});
  run({"construct", "--n", "13", "--delta", "1/4"});
  // Reports name their input and output files; strip the per-run directory.
  std::string report = out.str();
  for (std::size_t pos; (pos = report.find(dir.string())) != std::string::npos;) report.erase(pos, dir.string().size());
  return report + slurp(code) + slurp(packed) + slurp(trace);
}

Outcome determinism() {
  Outcome o;
  const fs::path root = fs::temp_directory_path() / ("cyclicgv_acceptance_" + std::to_string(::getpid()));
  const auto a = artifacts(root / "a", "1");
  const auto b = artifacts(root / "b", "1");
  const auto c = artifacts(root / "c", "4");
  fs::remove_all(root);
  require(o, a == b, "two runs differ");
  require(o, a == c, "threads 1 and 4 differ");
  if (o.pass) o.detail = std::to_string(a.size()) + " bytes identical across runs and threads {1, 4}";
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0: no runtime limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "definition oracle equivalence", 10, oracle_equivalence},
      {2, "tail bound at n=61", 60, tail_n61},
      {3, "exact tail at n=13", 0, tail_n13},
      {4, "packing invariants", 30, packing_invariants},
      {5, "auto-cyclic size claim", 0, size_claim},
      {6, "ball volume vs entropy bound", 5, ball_entropy},
      {7, "non-linearity witness", 0, nonlinearity},
      {8, "determinism", 0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      o.pass = false;
      o.detail += " (runtime limit " + std::to_string(static_cast<int>(c.limit_seconds)) + " s exceeded)";
    }
    failed += !o.pass;
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << seconds;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << o.detail << " ("
              << time.str() << " s)\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
