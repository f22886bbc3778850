#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclicgv/codeset.hpp"
#include "cyclicgv/codeword.hpp"

namespace cyclicgv {

/// Concrete evidence attached to a check outcome.
struct Witness {
  Codeword first;
  std::optional<Codeword> second;
  std::optional<std::int64_t> shift;
  std::optional<RationalDistance> distance;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  /// Set when a budget forced a sampled scan; a pass is then not a proof.
  bool partial = false;
  std::optional<Witness> witness;
  std::string detail;
};

struct VerificationReport {
  std::string subject;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  bool any_partial() const;
};

struct VerifyOptions {
  /// Orbit-representative pairs scanned exhaustively before falling back to
  /// a seeded sample of that many pairs.
  std::uint64_t max_representative_pairs = std::uint64_t{1} << 16;
  /// Word pairs scanned by check_not_linear before sampling.
  std::uint64_t max_xor_pairs = std::uint64_t{1} << 26;
  /// Largest n for which find_nonlinearity_witness scans all words.
  std::size_t exhaustive_limit = 24;
  /// Sampling attempts for find_nonlinearity_witness above the limit.
  std::uint64_t witness_budget = 1'000'000;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
};

/// Every shift of every member is a member. Failure witness: (x, i).
CheckResult check_cyclic_closure(const CodeSet& c);

/// Every member has d*_cyc >= delta. Failure witness: (x, distance).
CheckResult check_auto_cyclic(const CodeSet& c, const DistanceThreshold& delta);

/// Distinct members are at distance >= delta: d_cyc for words in different
/// orbits, plain Hamming distance for two shifts of the same word. On a
/// cyclic-closed set this is minimum Hamming distance >= delta and is checked
/// once per orbit-representative pair. Failure witness: the closest pair.
CheckResult check_min_cyclic_distance(const CodeSet& c, const DistanceThreshold& delta,
                                      const VerifyOptions& options = {});

/// Same predicate by brute force over every pair of words.
CheckResult check_min_distance_all_pairs(const CodeSet& c, const DistanceThreshold& delta);

/// c is a subset of cprime and every word of cprime \ c lies within cyclic
/// distance < delta of some member of c.
CheckResult check_maximality(const CodeSet& c, const CodeSet& cprime, const DistanceThreshold& delta,
                             const VerifyOptions& options = {});

/// Passes when c is confirmed non-linear: 0^n is missing, or some u xor v is
/// missing (witness (u, v)).
CheckResult check_not_linear(const CodeSet& c, const VerifyOptions& options = {});

/// x with d(x, E^i(x)) >= delta + 2/n for every i != 0, the word y obtained by
/// flipping x's last bit, and their sum 0^{n-1}1.
struct NonlinearityWitness {
  Codeword x;
  Codeword y;
  Codeword sum;
  DistanceThreshold delta;
  RationalDistance x_auto_distance;
  RationalDistance y_auto_distance;
  RationalDistance sum_auto_distance;
  bool x_in_code = false;
  bool y_in_code = false;
  bool sum_in_code = false;
  /// Whether x came from the exhaustive scan (else from sampling).
  bool exhaustive = true;
  std::uint64_t candidates_examined = 0;
};

/// Requires delta + 2/n < 1/2. Throws NotFoundError when no word meets the
/// margin within the scan or sampling budget.
NonlinearityWitness find_nonlinearity_witness(std::size_t n, const DistanceThreshold& delta,
                                              const VerifyOptions& options = {});

/// Re-derives the witness invariants from raw bits. Returns the names of the
/// invariants that failed; empty means all hold.
std::vector<std::string> recheck_witness(const NonlinearityWitness& w);

}  // namespace cyclicgv
