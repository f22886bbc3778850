#include "cyclicgv/verify.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <tuple>

#include "cyclicgv/errors.hpp"
#include "cyclicgv/parallel.hpp"
#include "cyclicgv/random.hpp"

namespace cyclicgv {

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

bool VerificationReport::any_partial() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.partial; });
}

namespace {

using u128 = unsigned __int128;

/// A violating pair found during a scan, ordered so that the minimum is the
/// closest pair with the smallest indices.
struct Violation {
  std::uint64_t count = std::numeric_limits<std::uint64_t>::max();
  std::size_t a = 0;
  std::size_t b = 0;

  bool found() const { return count != std::numeric_limits<std::uint64_t>::max(); }
  friend bool operator<(const Violation& l, const Violation& r) {
    return std::tie(l.count, l.a, l.b) < std::tie(r.count, r.a, r.b);
  }
};

/// Smallest i with d(E^i(x), y) == count, skipping i = 0 when x == y.
std::int64_t shift_achieving(const Codeword& x, const Codeword& y, std::uint64_t count) {
  for (std::size_t i = 0; i < x.length(); ++i) {
    const Codeword s = shift(x, static_cast<std::int64_t>(i));
    if (x == y && s == x) continue;
    if (hamming(s, y).count() == count) return static_cast<std::int64_t>(i);
  }
  return 0;
}

bool closed_under_shift(const CodeSet& c) {
  for (const auto& w : c) {
    if (!c.contains(shift(w, 1))) return false;
  }
  return true;
}

/// Distance between two distinct words under the code predicate: Hamming for
/// shifts of one another, cyclic distance otherwise.
RationalDistance pair_distance(const Codeword& x, const Codeword& y) {
  const auto cyc = cyclic_distance(x, y);
  return cyc.count() == 0 ? hamming(x, y) : cyc;
}

CheckResult min_distance_result(Violation v, const Codeword& first, const Codeword& second,
                                std::size_t n) {
  CheckResult r;
  r.name = "min_cyclic_distance";
  r.pass = false;
  auto [lo, hi] = std::minmax(first, second);
  r.witness = Witness{lo, hi, std::nullopt, RationalDistance(v.count, n)};
  return r;
}

}  // namespace

CheckResult check_cyclic_closure(const CodeSet& c) {
  CheckResult r;
  r.name = "cyclic_closure";
  for (const auto& w : c) {
    for (std::size_t i = 1; i < c.length(); ++i) {
      if (!c.contains(shift(w, static_cast<std::int64_t>(i)))) {
        r.witness = Witness{w, shift(w, static_cast<std::int64_t>(i)), static_cast<std::int64_t>(i), std::nullopt};
        r.detail = "shift missing from the set";
        return r;
      }
    }
  }
  r.pass = true;
  return r;
}

CheckResult check_auto_cyclic(const CodeSet& c, const DistanceThreshold& delta) {
  CheckResult r;
  r.name = "auto_cyclic_distance";
  for (const auto& w : c) {
    const auto d = auto_cyclic_distance(w);
    if (!d.at_least(delta)) {
      r.witness = Witness{w, std::nullopt, std::nullopt, d};
      return r;
    }
  }
  r.pass = true;
  return r;
}

CheckResult check_min_distance_all_pairs(const CodeSet& c, const DistanceThreshold& delta) {
  Violation best;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Codeword x = c.at(i);
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const auto d = pair_distance(x, c.at(j));
      if (d.below(delta)) best = std::min(best, Violation{d.count(), i, j});
    }
  }
  if (!best.found()) {
    CheckResult r;
    r.name = "min_cyclic_distance";
    r.pass = true;
    return r;
  }
  return min_distance_result(best, c.at(best.a), c.at(best.b), c.length());
}

CheckResult check_min_cyclic_distance(const CodeSet& c, const DistanceThreshold& delta,
                                      const VerifyOptions& options) {
  const std::size_t n = c.length();
  if (!closed_under_shift(c)) {
    const u128 pairs = u128{c.size()} * (c.size() > 0 ? c.size() - 1 : 0) / 2;
    if (pairs <= options.max_representative_pairs) return check_min_distance_all_pairs(c, delta);
  }

  // On a closed set reps stand for whole orbits; on an open one they are just
  // the words themselves.
  const bool closed = closed_under_shift(c);
  std::vector<Codeword> reps;
  if (closed) {
    reps = orbit_representatives(c);
  } else {
    reps.assign(c.begin(), c.end());
  }
  const std::size_t count = reps.size();

  auto evaluate = [&](std::size_t a, std::size_t b) -> Violation {
    if (a == b) {
      if (!closed) return {};
      const auto d = auto_cyclic_distance(reps[a]);
      if (d.below(delta)) return {d.count(), a, a};
      return {};
    }
    const auto d = closed ? cyclic_distance(reps[a], reps[b]) : pair_distance(reps[a], reps[b]);
    if (d.below(delta)) return {d.count(), a, b};
    return {};
  };

  const u128 pairs = u128{count} * (count + 1) / 2;
  Violation best;
  bool partial = false;
  if (pairs <= options.max_representative_pairs) {
    const std::size_t threads = std::max<std::size_t>(1, options.threads);
    std::vector<Violation> per_chunk(threads);
    parallel_chunks(count, threads, [&](std::size_t t, std::size_t begin, std::size_t end) {
      for (std::size_t a = begin; a < end; ++a) {
        for (std::size_t b = a; b < count; ++b) per_chunk[t] = std::min(per_chunk[t], evaluate(a, b));
      }
    });
    for (const auto& v : per_chunk) best = std::min(best, v);
  } else {
    partial = true;
    SplitMix64 rng(options.seed);
    for (std::uint64_t k = 0; k < options.max_representative_pairs; ++k) {
      auto a = static_cast<std::size_t>(rng() % count);
      auto b = static_cast<std::size_t>(rng() % count);
      if (a > b) std::swap(a, b);
      best = std::min(best, evaluate(a, b));
    }
  }

  if (!best.found()) {
    CheckResult r;
    r.name = "min_cyclic_distance";
    r.pass = true;
    r.partial = partial;
    if (partial) r.detail = "pair budget exceeded; sampled " + std::to_string(options.max_representative_pairs) + " pairs";
    return r;
  }
  const Codeword& x = reps[best.a];
  const Codeword& y = reps[best.b];
  CheckResult r;
  if (closed) {
    const auto i = shift_achieving(x, y, best.count);
    r = min_distance_result(best, shift(x, i), y, n);
  } else {
    r = min_distance_result(best, x, y, n);
  }
  r.partial = partial;
  return r;
}

CheckResult check_maximality(const CodeSet& c, const CodeSet& cprime, const DistanceThreshold& delta,
                             const VerifyOptions& options) {
  CheckResult r;
  r.name = "maximality";
  if (c.length() != cprime.length()) throw LengthMismatchError(c.length(), cprime.length());
  for (const auto& w : c) {
    if (!cprime.contains(w)) {
      r.witness = Witness{w, std::nullopt, std::nullopt, std::nullopt};
      r.detail = "code word is not in the candidate pool";
      return r;
    }
  }

  std::vector<Codeword> leftover;
  for (const auto& w : cprime) {
    if (!c.contains(w)) leftover.push_back(w);
  }
  const auto cover = orbit_representatives(c);

  const std::size_t threads = std::max<std::size_t>(1, options.threads);
  std::vector<std::size_t> first_uncovered(threads, leftover.size());
  parallel_chunks(leftover.size(), threads, [&](std::size_t t, std::size_t begin, std::size_t end) {
    for (std::size_t j = begin; j < end; ++j) {
      const bool covered = std::any_of(cover.begin(), cover.end(), [&](const Codeword& x) {
        return cyclic_distance(x, leftover[j]).below(delta);
      });
      if (!covered) {
        first_uncovered[t] = j;
        return;
      }
    }
  });
  const std::size_t j = *std::min_element(first_uncovered.begin(), first_uncovered.end());
  if (j < leftover.size()) {
    r.witness = Witness{leftover[j], std::nullopt, std::nullopt, std::nullopt};
    r.detail = "word could still be added";
    return r;
  }
  r.pass = true;
  return r;
}

CheckResult check_not_linear(const CodeSet& c, const VerifyOptions& options) {
  CheckResult r;
  r.name = "not_linear";
  const std::size_t n = c.length();
  if (c.empty()) {
    r.pass = true;
    r.detail = "empty set does not contain the zero word";
    return r;
  }
  if (!c.contains(Codeword::zeros(n))) {
    r.pass = true;
    r.witness = Witness{c.at(0), c.at(0), std::nullopt, std::nullopt};
    r.detail = "zero word missing";
    return r;
  }

  auto missing = [&](std::size_t i, std::size_t j) { return !c.contains(c.at(i) ^ c.at(j)); };
  const std::size_t size = c.size();
  const u128 pairs = u128{size} * (size - 1) / 2;
  if (pairs <= options.max_xor_pairs) {
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = i + 1; j < size; ++j) {
        if (missing(i, j)) {
          r.pass = true;
          r.witness = Witness{c.at(i), c.at(j), std::nullopt, std::nullopt};
          return r;
        }
      }
    }
    r.detail = "closed under xor";
    return r;
  }

  SplitMix64 rng(options.seed);
  for (std::uint64_t k = 0; k < options.max_xor_pairs; ++k) {
    const auto i = static_cast<std::size_t>(rng() % size);
    const auto j = static_cast<std::size_t>(rng() % size);
    if (missing(i, j)) {
      r.pass = true;
      r.witness = Witness{std::min(c.at(i), c.at(j)), std::max(c.at(i), c.at(j)), std::nullopt, std::nullopt};
      return r;
    }
  }
  r.partial = true;
  r.detail = "no xor counterexample among " + std::to_string(options.max_xor_pairs) + " sampled pairs";
  return r;
}

namespace {

/// d(x, E^i(x)) >= delta + 2/n for every i != 0, i.e. count*q >= p*n + 2q.
bool meets_margin(const Codeword& x, const DistanceThreshold& delta) {
  const std::size_t n = x.length();
  const u128 need = u128{delta.numerator()} * n + 2 * u128{delta.denominator()};
  for (std::size_t i = 1; i < n; ++i) {
    const auto c = hamming(shift(x, static_cast<std::int64_t>(i)), x).count();
    if (u128{c} * delta.denominator() < need) return false;
  }
  return true;
}

bool meets_margin64(std::uint64_t v, std::size_t n, u128 need, std::uint64_t q) {
  for (std::size_t i = 1; i < n; ++i) {
    const auto c = static_cast<unsigned>(std::popcount(word64::rotate_left(v, i, n) ^ v));
    if (u128{c} * q < need) return false;
  }
  return true;
}

}  // namespace

NonlinearityWitness find_nonlinearity_witness(std::size_t n, const DistanceThreshold& delta,
                                              const VerifyOptions& options) {
  if (n < 2) throw DomainError("witness search needs n >= 2");
  // delta + 2/n < 1/2  <=>  2(p n + 2q) < q n
  const u128 p = delta.numerator();
  const u128 q = delta.denominator();
  if (2 * (p * n + 2 * q) >= q * n) {
    throw DomainError("witness search needs delta + 2/n < 1/2 (delta = " + delta.to_string() +
                      ", n = " + std::to_string(n) + ")");
  }

  std::optional<Codeword> found;
  std::uint64_t examined = 0;
  const bool exhaustive = n <= options.exhaustive_limit && n < 64;
  if (exhaustive) {
    const u128 need = p * n + 2 * q;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      ++examined;
      if (meets_margin64(v, n, need, delta.denominator())) {
        found = Codeword(n, v);
        break;
      }
    }
  } else {
    for (std::uint64_t k = 0; k < options.witness_budget; ++k) {
      ++examined;
      auto rng = SplitMix64::substream(options.seed, k);
      Codeword x = random_word(n, rng);
      if (meets_margin(x, delta)) {
        found = x;
        break;
      }
    }
  }
  if (!found) {
    throw NotFoundError("no word with d(x, E^i(x)) >= " + delta.to_string() + " + 2/" + std::to_string(n) +
                        " for all i != 0 among " + std::to_string(examined) +
                        (exhaustive ? " words (exhaustive)" : " sampled words"));
  }

  const Codeword& x = *found;
  Codeword y = x;
  y.flip(n - 1);
  const Codeword sum = x ^ y;
  NonlinearityWitness w{x,
                        y,
                        sum,
                        delta,
                        auto_cyclic_distance(x),
                        auto_cyclic_distance(y),
                        auto_cyclic_distance(sum),
                        false,
                        false,
                        false,
                        exhaustive,
                        examined};
  w.x_in_code = w.x_auto_distance.at_least(delta);
  w.y_in_code = w.y_auto_distance.at_least(delta);
  w.sum_in_code = w.sum_auto_distance.at_least(delta);
  return w;
}

std::vector<std::string> recheck_witness(const NonlinearityWitness& w) {
  std::vector<std::string> failed;
  const std::size_t n = w.x.length();
  if (!meets_margin(w.x, w.delta)) failed.emplace_back("x margin d(x,E^i x) >= delta + 2/n");
  if (!auto_cyclic_distance(w.y).at_least(w.delta)) failed.emplace_back("y auto-cyclic distance >= delta");
  if (w.sum != (w.x ^ w.y) || w.sum != Codeword::unit_last(n)) failed.emplace_back("x xor y = 0^{n-1}1");
  if (auto_cyclic_distance(w.sum) != RationalDistance(2, n)) failed.emplace_back("auto-cyclic distance of sum = 2/n");
  // delta > 2/n  <=>  p n > 2 q
  if (u128{w.delta.numerator()} * n > 2 * u128{w.delta.denominator()}) {
    const bool x_in = auto_cyclic_distance(w.x).at_least(w.delta);
    const bool y_in = auto_cyclic_distance(w.y).at_least(w.delta);
    const bool sum_in = auto_cyclic_distance(w.sum).at_least(w.delta);
    if (!(x_in && y_in && !sum_in)) failed.emplace_back("x, y in C' and x xor y not in C'");
  }
  return failed;
}

}  // namespace cyclicgv
