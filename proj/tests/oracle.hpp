#pragma once

// Brute-force reference implementations on plain strings. Nothing here uses
// the library's bit kernels, so tests can compare the two routes.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline std::string shift(const std::string& x, std::size_t i) {
  i %= x.size();
  return x.substr(i) + x.substr(0, i);
}

inline std::size_t hamming(const std::string& x, const std::string& y) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < x.size(); ++i) c += x[i] != y[i];
  return c;
}

inline std::size_t cyclic(const std::string& x, const std::string& y) {
  std::size_t best = x.size();
  for (std::size_t i = 0; i < x.size(); ++i) best = std::min(best, hamming(shift(x, i), y));
  return best;
}

/// nullopt stands for the infinite value of period-1 words.
inline std::optional<std::size_t> auto_cyclic(const std::string& x) {
  std::optional<std::size_t> best;
  for (std::size_t i = 1; i < x.size(); ++i) {
    const auto s = shift(x, i);
    if (s == x) continue;
    const auto d = hamming(s, x);
    if (!best || d < *best) best = d;
  }
  return best;
}

/// count/n >= p/q.
inline bool at_least(std::size_t count, std::size_t n, std::uint64_t p, std::uint64_t q) {
  return static_cast<unsigned __int128>(count) * q >= static_cast<unsigned __int128>(p) * n;
}

inline bool member(const std::string& x, std::uint64_t p, std::uint64_t q) {
  const auto a = auto_cyclic(x);
  return !a || at_least(*a, x.size(), p, q);
}

inline std::vector<std::string> all_words(std::size_t n) {
  std::vector<std::string> out;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    std::string s(n, '0');
    for (std::size_t i = 0; i < n; ++i) {
      if ((v >> (n - 1 - i)) & 1U) s[i] = '1';
    }
    out.push_back(s);
  }
  return out;
}

inline std::set<std::string> auto_cyclic_code(std::size_t n, std::uint64_t p, std::uint64_t q) {
  std::set<std::string> out;
  for (const auto& w : all_words(n)) {
    if (member(w, p, q)) out.insert(w);
  }
  return out;
}

struct GreedyRun {
  std::set<std::string> code;
  std::vector<std::pair<std::string, std::size_t>> trace;
};

/// The packing procedure as written: smallest remaining word, keep its
/// shifts, drop everything at cyclic distance < p/q.
inline GreedyRun greedy(std::set<std::string> pool, std::uint64_t p, std::uint64_t q) {
  GreedyRun run;
  while (!pool.empty()) {
    const std::string x = *pool.begin();
    std::set<std::string> orbit;
    for (std::size_t i = 0; i < x.size(); ++i) orbit.insert(shift(x, i));
    std::size_t removed = 0;
    for (auto it = pool.begin(); it != pool.end();) {
      if (orbit.count(*it) || !at_least(cyclic(x, *it), x.size(), p, q)) {
        it = pool.erase(it);
        ++removed;
      } else {
        ++it;
      }
    }
    run.code.insert(orbit.begin(), orbit.end());
    run.trace.emplace_back(x, removed);
  }
  return run;
}

}  // namespace oracle
