#include "cyclicgv/autocyclic.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "cyclicgv/parallel.hpp"
#include "cyclicgv/random.hpp"

namespace cyclicgv {

namespace {

void require_exhaustive(std::size_t n, const AutoCyclicOptions& options) {
  if (n == 0) throw DomainError("code length must be at least 1");
  if (n > options.exhaustive_limit || n > 63) {
    throw CapacityError("n = " + std::to_string(n) + " exceeds the exhaustive limit of " +
                        std::to_string(std::min<std::size_t>(options.exhaustive_limit, 63)) +
                        "; use sampling instead");
  }
}

bool member64(std::uint64_t v, std::size_t n, std::uint64_t min_count) {
  const unsigned c = word64::auto_cyclic_count(v, n);
  return c == 0 || c >= min_count;
}

}  // namespace

bool is_auto_cyclic_member(const Codeword& x, const DistanceThreshold& delta) {
  return auto_cyclic_distance(x).at_least(delta);
}

CodeSet enumerate_auto_cyclic(std::size_t n, const DistanceThreshold& delta,
                              const AutoCyclicOptions& options) {
  require_exhaustive(n, options);
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint64_t need = delta.min_count(n);
  const std::size_t threads = std::max<std::size_t>(1, options.threads);

  std::vector<std::vector<std::uint64_t>> parts(threads);
  parallel_chunks(total, threads, [&](std::size_t t, std::size_t begin, std::size_t end) {
    auto& out = parts[t];
    for (std::uint64_t v = begin; v < end; ++v) {
      if (member64(v, n, need)) out.push_back(v);
    }
  });

  std::vector<std::uint64_t> values;
  values.reserve(std::accumulate(parts.begin(), parts.end(), std::size_t{0},
                                 [](std::size_t s, const auto& p) { return s + p.size(); }));
  for (auto& p : parts) {
    values.insert(values.end(), p.begin(), p.end());
    std::vector<std::uint64_t>().swap(p);
  }
  CodeSet set = CodeSet::from_values(n, std::move(values));
  set.set_delta(delta);
  set.set_cyclic_closed_claim(true);
  return set;
}

std::uint64_t count_auto_cyclic_failures(std::size_t n, const DistanceThreshold& delta,
                                         const AutoCyclicOptions& options) {
  require_exhaustive(n, options);
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint64_t need = delta.min_count(n);
  const std::size_t threads = std::max<std::size_t>(1, options.threads);
  std::vector<std::uint64_t> counts(threads, 0);
  parallel_chunks(total, threads, [&](std::size_t t, std::size_t begin, std::size_t end) {
    std::uint64_t c = 0;
    for (std::uint64_t v = begin; v < end; ++v) {
      if (!member64(v, n, need)) ++c;
    }
    counts[t] = c;
  });
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

PartialResultError::PartialResultError(SampledCode partial, std::uint64_t target_orbits)
    : CapacityError("attempt budget exhausted after " + std::to_string(partial.stats.attempts) +
                    " attempts with " + std::to_string(partial.stats.orbits) + " of " +
                    std::to_string(target_orbits) + " orbits (acceptance rate " +
                    std::to_string(partial.stats.acceptance_rate()) + ")"),
      partial_(std::move(partial)) {}

SampledCode sample_auto_cyclic(std::size_t n, const DistanceThreshold& delta,
                               std::uint64_t target_orbits, std::uint64_t seed,
                               const AutoCyclicOptions& options) {
  if (n < 2) throw DomainError("sampling needs n >= 2");
  if (!delta.below_half()) throw DomainError("delta must be < 1/2, got " + delta.to_string());
  if (target_orbits == 0) throw DomainError("target_orbits must be positive");
  const std::uint64_t budget = options.attempt_budget != 0 ? options.attempt_budget : 1000 * target_orbits;
  const std::size_t threads = std::max<std::size_t>(1, options.threads);

  // Attempts are evaluated in parallel batches and consumed in index order, so
  // the stopping point does not depend on the thread count.
  struct Draw {
    bool accepted = false;
    Codeword representative{1};
  };
  const std::uint64_t batch = std::max<std::uint64_t>(256, 64 * threads);

  SampleStats stats;
  std::set<Codeword> reps;
  std::vector<Draw> draws;
  for (std::uint64_t start = 0; start < budget && reps.size() < target_orbits; start += batch) {
    const std::uint64_t count = std::min(batch, budget - start);
    draws.assign(count, Draw{});
    parallel_chunks(count, threads, [&](std::size_t, std::size_t begin, std::size_t end) {
      for (std::size_t j = begin; j < end; ++j) {
        auto rng = SplitMix64::substream(seed, start + j);
        Codeword x = random_word(n, rng);
        if (is_auto_cyclic_member(x, delta)) {
          draws[j].accepted = true;
          draws[j].representative = canonical_rotation(x);
        }
      }
    });
    for (const auto& d : draws) {
      ++stats.attempts;
      if (d.accepted) {
        ++stats.accepted;
        reps.insert(d.representative);
        if (reps.size() == target_orbits) break;
      }
    }
  }
  stats.orbits = reps.size();

  std::vector<Codeword> words;
  for (const auto& r : reps) {
    const std::size_t p = period(r);
    for (std::size_t i = 0; i < p; ++i) words.push_back(shift(r, static_cast<std::int64_t>(i)));
  }
  SampledCode result{CodeSet::from_words(n, words), stats};
  result.code.set_delta(delta);
  result.code.set_cyclic_closed_claim(true);
  if (reps.size() < target_orbits) throw PartialResultError(std::move(result), target_orbits);
  return result;
}

Real TailEstimate::confidence_radius() const {
  return sqrt(log(Real(2) / Real(alpha)) / (Real(2) * Real(trials)));
}

namespace {

template <typename Fails>
TailEstimate run_trials(std::size_t n, const DistanceThreshold& delta, std::uint64_t trials,
                        std::uint64_t seed, double alpha, std::size_t threads, Fails&& fails) {
  if (n == 0) throw DomainError("code length must be at least 1");
  if (trials == 0) throw DomainError("trials must be positive");
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0,1)");
  threads = std::max<std::size_t>(1, threads);
  std::vector<std::uint64_t> counts(threads, 0);
  parallel_chunks(trials, threads, [&](std::size_t t, std::size_t begin, std::size_t end) {
    std::uint64_t c = 0;
    for (std::uint64_t k = begin; k < end; ++k) {
      auto rng = SplitMix64::substream(seed, k);
      if (fails(random_word(n, rng))) ++c;
    }
    counts[t] = c;
  });
  TailEstimate e;
  e.n = n;
  e.delta = delta;
  e.trials = trials;
  e.failures = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  e.alpha = alpha;
  e.seed = seed;
  e.generator = std::string(SplitMix64::kName);
  return e;
}

}  // namespace

TailEstimate estimate_tail(std::size_t n, const DistanceThreshold& delta, std::uint64_t trials,
                           std::uint64_t seed, double alpha, std::size_t threads) {
  return run_trials(n, delta, trials, seed, alpha, threads,
                    [&](const Codeword& x) { return !is_auto_cyclic_member(x, delta); });
}

TailEstimate estimate_shift_event(std::size_t n, std::size_t shift_by, const DistanceThreshold& delta,
                                  std::uint64_t trials, std::uint64_t seed, double alpha,
                                  std::size_t threads) {
  if (n == 0 || shift_by % n == 0) throw DomainError("shift must be nonzero modulo n");
  return run_trials(n, delta, trials, seed, alpha, threads, [&](const Codeword& x) {
    return hamming(shift(x, static_cast<std::int64_t>(shift_by)), x).below(delta);
  });
}

}  // namespace cyclicgv
