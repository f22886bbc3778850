#include "cyclicgv/packing.hpp"

#include <algorithm>
#include <numeric>

#include "cyclicgv/bounds.hpp"
#include "cyclicgv/errors.hpp"
#include "cyclicgv/parallel.hpp"

namespace cyclicgv {

namespace {

/// Calls visit(w) for every w with d(center, w) <= radius.
template <typename Visit>
void for_each_in_ball(Codeword& center, std::size_t start, std::int64_t radius, Visit& visit) {
  visit(static_cast<const Codeword&>(center));
  if (radius <= 0) return;
  for (std::size_t i = start; i < center.length(); ++i) {
    center.flip(i);
    for_each_in_ball(center, i + 1, radius - 1, visit);
    center.flip(i);
  }
}

template <typename Visit>
void for_each_in_ball64(std::uint64_t center, std::size_t n, std::size_t start, std::int64_t radius,
                        Visit& visit) {
  visit(center);
  if (radius <= 0) return;
  for (std::size_t i = start; i < n; ++i) {
    for_each_in_ball64(center ^ (std::uint64_t{1} << i), n, i + 1, radius - 1, visit);
  }
}

void require_packable(const CodeSet& pool, const DistanceThreshold& delta) {
  for (const auto& w : pool) {
    const Codeword s = shift(w, 1);
    if (!pool.contains(s)) {
      throw ContractError("pool is not closed under cyclic shifts: shift(" + w.to_string() +
                          ", 1) = " + s.to_string() + " is missing");
    }
    const auto d = auto_cyclic_distance(w);
    if (!d.at_least(delta)) {
      throw ContractError("pool word " + w.to_string() + " has auto-cyclic distance " +
                          d.to_string() + " < " + delta.to_string());
    }
  }
}

/// Mutable view of C' as the sorted word list plus an alive flag per index.
class Pool {
 public:
  explicit Pool(const CodeSet& words) : words_(words), alive_(words.size(), 1), remaining_(words.size()) {}

  std::size_t remaining() const { return remaining_; }

  std::size_t next_alive() {
    while (cursor_ < alive_.size() && !alive_[cursor_]) ++cursor_;
    return cursor_;
  }

  bool alive(std::size_t i) const { return alive_[i] != 0; }

  void kill(std::size_t i) {
    alive_[i] = 0;
    --remaining_;
  }

  const CodeSet& words() const { return words_; }

 private:
  const CodeSet& words_;
  std::vector<unsigned char> alive_;
  std::size_t remaining_;
  std::size_t cursor_ = 0;
};

/// Indices of alive words y with d_cyc(x, y) < delta or y a shift of x.
std::vector<std::size_t> doomed_by_scan(const Pool& pool, const Codeword& x, const DistanceThreshold& delta,
                                        std::size_t threads) {
  const CodeSet& words = pool.words();
  const std::size_t n = words.length();
  const std::uint64_t need = delta.min_count(n);
  const std::size_t total = words.size();
  std::vector<std::vector<std::size_t>> parts(std::max<std::size_t>(1, threads));
  parallel_chunks(total, parts.size(), [&](std::size_t t, std::size_t begin, std::size_t end) {
    auto& out = parts[t];
    if (n <= 64) {
      const auto values = words.values();
      const std::uint64_t xv = x.value();
      for (std::size_t j = begin; j < end; ++j) {
        if (!pool.alive(j)) continue;
        const unsigned c = word64::cyclic_count(xv, values[j], n);
        if (c == 0 || c < need) out.push_back(j);
      }
    } else {
      for (std::size_t j = begin; j < end; ++j) {
        if (!pool.alive(j)) continue;
        const auto d = cyclic_distance(x, words.at(j));
        if (d.count() == 0 || d.below(delta)) out.push_back(j);
      }
    }
  });
  std::vector<std::size_t> doomed;
  for (auto& p : parts) doomed.insert(doomed.end(), p.begin(), p.end());
  return doomed;
}

std::vector<std::size_t> doomed_by_ball(const Pool& pool, const Codeword& x, const DistanceThreshold& delta) {
  const CodeSet& words = pool.words();
  const std::size_t n = words.length();
  // radius -1 (delta = 0) still removes the orbit itself.
  const std::int64_t radius = std::max<std::int64_t>(0, delta.strict_radius(n));
  std::vector<std::size_t> doomed;
  const std::size_t p = period(x);
  if (n <= 64) {
    const auto values = words.values();
    auto visit = [&](std::uint64_t w) {
      auto it = std::lower_bound(values.begin(), values.end(), w);
      if (it != values.end() && *it == w) {
        const auto j = static_cast<std::size_t>(it - values.begin());
        if (pool.alive(j)) doomed.push_back(j);
      }
    };
    for (std::size_t i = 0; i < p; ++i) {
      for_each_in_ball64(word64::rotate_left(x.value(), i, n), n, 0, radius, visit);
    }
  } else {
    auto visit = [&](const Codeword& w) {
      if (auto j = words.index_of(w); j && pool.alive(*j)) doomed.push_back(*j);
    };
    for (std::size_t i = 0; i < p; ++i) {
      Codeword center = shift(x, static_cast<std::int64_t>(i));
      for_each_in_ball(center, 0, radius, visit);
    }
  }
  std::sort(doomed.begin(), doomed.end());
  doomed.erase(std::unique(doomed.begin(), doomed.end()), doomed.end());
  return doomed;
}

}  // namespace

PackingResult greedy_pack(const CodeSet& cprime, const DistanceThreshold& delta, const PackingOptions& options) {
  if (!delta.below_half()) throw DomainError("delta must be < 1/2, got " + delta.to_string());
  require_packable(cprime, delta);

  const std::size_t n = cprime.length();
  const std::int64_t radius = std::max<std::int64_t>(0, delta.strict_radius(n));
  const BigInt ball_cost = BigInt(n) * ball_volume(n, static_cast<std::size_t>(std::min<std::int64_t>(radius, n)));

  Pool pool(cprime);
  PackingTrace trace;
  trace.initial_size = cprime.size();
  std::vector<Codeword> kept;

  while (pool.remaining() > 0) {
    const Codeword x = cprime.at(pool.next_alive());
    bool use_ball = false;
    switch (options.strategy) {
      case ConflictStrategy::automatic:
        use_ball = ball_cost < pool.remaining();
        break;
      case ConflictStrategy::ball:
        use_ball = true;
        break;
      case ConflictStrategy::scan:
        break;
    }
    const auto doomed = use_ball ? doomed_by_ball(pool, x, delta) : doomed_by_scan(pool, x, delta, options.threads);
    for (auto j : doomed) pool.kill(j);

    const std::size_t p = period(x);
    for (std::size_t i = 0; i < p; ++i) kept.push_back(shift(x, static_cast<std::int64_t>(i)));
    trace.selected.push_back(x);
    trace.removed_counts.push_back(doomed.size());
  }

  PackingResult result{CodeSet::from_words(n, kept), std::move(trace)};
  result.code.set_delta(delta);
  result.code.set_cyclic_closed_claim(true);
  result.trace.final_size = result.code.size();
  return result;
}

CodeSet conflict_set(const Codeword& x, const CodeSet& pool, const DistanceThreshold& delta) {
  std::vector<Codeword> out;
  for (const auto& y : pool) {
    if (cyclic_distance(x, y).below(delta)) out.push_back(y);
  }
  CodeSet set = CodeSet::from_words(pool.length(), out);
  set.set_delta(delta);
  return set;
}

bool verify_rate_bound(std::uint64_t cprime_size, std::uint64_t c_size, std::size_t n,
                       const DistanceThreshold& delta) {
  const Real lhs = Real(c_size) * Real(n) * ball_entropy_bound(n, delta);
  const Real rhs = Real(cprime_size) * (1 - Real("1e-40"));
  return lhs >= rhs;
}

}  // namespace cyclicgv
