#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cyclicgv/codeset.hpp"
#include "cyclicgv/codeword.hpp"

namespace cyclicgv {

/// How the words within cyclic distance < delta of the selected word are found.
enum class ConflictStrategy {
  automatic,  // ball when n * V(n, r) < |remaining pool|, scan otherwise
  scan,       // test d_cyc against every remaining pool word
  ball,       // enumerate radius-r Hamming balls around each shift
};

struct PackingOptions {
  ConflictStrategy strategy = ConflictStrategy::automatic;
  std::size_t threads = 1;
};

struct PackingTrace {
  /// Orbit representative chosen at each iteration (smallest remaining word).
  std::vector<Codeword> selected;
  /// Words deleted from C' per iteration, selected orbit included.
  std::vector<std::uint64_t> removed_counts;
  std::uint64_t initial_size = 0;
  std::uint64_t final_size = 0;
};

struct PackingResult {
  CodeSet code;
  PackingTrace trace;
};

/// Greedy orbit packing: repeatedly take the smallest remaining word x of C',
/// keep its orbit, and delete every y with d_cyc(x, y) < delta, until C' is
/// empty. C' must be closed under shifts with every member at auto-cyclic
/// distance >= delta; violations raise ContractError naming a witness.
PackingResult greedy_pack(const CodeSet& cprime, const DistanceThreshold& delta,
                          const PackingOptions& options = {});

/// {y in pool : d_cyc(x, y) < delta}.
CodeSet conflict_set(const Codeword& x, const CodeSet& pool, const DistanceThreshold& delta);

/// c_size * n * 2^{H(delta) n} >= cprime_size, evaluated with ~166-bit
/// arithmetic and a relative slack of 1e-40 on the right-hand side.
bool verify_rate_bound(std::uint64_t cprime_size, std::uint64_t c_size, std::size_t n,
                       const DistanceThreshold& delta);

}  // namespace cyclicgv
