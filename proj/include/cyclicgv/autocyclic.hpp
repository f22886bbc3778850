#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "cyclicgv/bounds.hpp"
#include "cyclicgv/codeset.hpp"
#include "cyclicgv/codeword.hpp"
#include "cyclicgv/errors.hpp"

namespace cyclicgv {

struct AutoCyclicOptions {
  /// Largest n enumerate_auto_cyclic will scan exhaustively.
  std::size_t exhaustive_limit = 24;
  /// 0 means 1000 * target_orbits.
  std::uint64_t attempt_budget = 0;
  std::size_t threads = 1;
};

/// d*_cyc(x, x) >= delta; words of period 1 always qualify.
bool is_auto_cyclic_member(const Codeword& x, const DistanceThreshold& delta);

/// {x in {0,1}^n : d*_cyc(x,x) >= delta}, the auto-cyclic code C'.
CodeSet enumerate_auto_cyclic(std::size_t n, const DistanceThreshold& delta,
                              const AutoCyclicOptions& options = {});

/// Number of words with d*_cyc(x,x) < delta, by exhaustive scan.
std::uint64_t count_auto_cyclic_failures(std::size_t n, const DistanceThreshold& delta,
                                         const AutoCyclicOptions& options = {});

struct SampleStats {
  std::uint64_t attempts = 0;
  std::uint64_t accepted = 0;
  std::uint64_t orbits = 0;

  double acceptance_rate() const {
    return attempts == 0 ? 0.0 : static_cast<double>(accepted) / static_cast<double>(attempts);
  }
};

struct SampledCode {
  CodeSet code;
  SampleStats stats;
};

/// Thrown when the attempt budget runs out before target_orbits orbits are
/// found. Carries everything collected so far.
class PartialResultError : public CapacityError {
 public:
  PartialResultError(SampledCode partial, std::uint64_t target_orbits);

  const SampledCode& partial() const { return partial_; }

 private:
  SampledCode partial_;
};

/// Rejection sampling of C'. Attempt k draws a uniform word from substream k
/// of `seed`; accepted words contribute their whole orbit. Stops at
/// target_orbits distinct orbits.
SampledCode sample_auto_cyclic(std::size_t n, const DistanceThreshold& delta,
                               std::uint64_t target_orbits, std::uint64_t seed,
                               const AutoCyclicOptions& options = {});

struct TailEstimate {
  std::size_t n = 0;
  DistanceThreshold delta;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  double alpha = 0.01;
  std::uint64_t seed = 0;
  std::string generator;

  Real point_estimate() const { return Real(failures) / Real(trials); }
  /// Hoeffding: sqrt(ln(2/alpha) / (2 trials)).
  Real confidence_radius() const;
};

/// Monte-Carlo estimate of Pr_x[d*_cyc(x,x) < delta]; trial t uses substream
/// t of `seed`.
TailEstimate estimate_tail(std::size_t n, const DistanceThreshold& delta, std::uint64_t trials,
                           std::uint64_t seed, double alpha, std::size_t threads = 1);

/// Per-shift diagnostic: failures of d(E^shift(x), x) < delta over `trials`
/// uniform words. The matching bound is 2^{H(delta) n} / 2^{n-1}.
TailEstimate estimate_shift_event(std::size_t n, std::size_t shift_by, const DistanceThreshold& delta,
                                  std::uint64_t trials, std::uint64_t seed, double alpha,
                                  std::size_t threads = 1);

}  // namespace cyclicgv
