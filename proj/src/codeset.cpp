#include "cyclicgv/codeset.hpp"

#include <algorithm>

#include "cyclicgv/errors.hpp"

namespace cyclicgv {

CodeSet::CodeSet(std::size_t n) : n_(n), stride_(Codeword::limb_count(n)) {
  if (n == 0) throw DomainError("code length must be at least 1");
}

CodeSet CodeSet::from_words(std::size_t n, std::span<const Codeword> words) {
  CodeSet set(n);
  std::vector<Codeword> sorted(words.begin(), words.end());
  for (const auto& w : sorted) {
    if (w.length() != n) throw LengthMismatchError(n, w.length());
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  set.limbs_.reserve(sorted.size() * set.stride_);
  for (const auto& w : sorted) {
    const auto l = w.limbs();
    set.limbs_.insert(set.limbs_.end(), l.begin(), l.end());
  }
  return set;
}

CodeSet CodeSet::from_values(std::size_t n, std::vector<std::uint64_t> values) {
  if (n > 64) throw DomainError("from_values needs n <= 64");
  const auto m = word64::mask(n);
  for (auto v : values) {
    if ((v & ~m) != 0) throw DomainError("value does not fit in n bits");
  }
  if (!std::is_sorted(values.begin(), values.end())) std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  CodeSet set(n);
  set.limbs_ = std::move(values);
  return set;
}

Codeword CodeSet::at(std::size_t index) const {
  return Codeword(n_, std::span<const std::uint64_t>(limbs_.data() + index * stride_, stride_));
}

std::optional<std::size_t> CodeSet::index_of(const Codeword& w) const {
  if (w.length() != n_) return std::nullopt;
  if (stride_ == 1) {
    auto it = std::lower_bound(limbs_.begin(), limbs_.end(), w.value());
    if (it == limbs_.end() || *it != w.value()) return std::nullopt;
    return static_cast<std::size_t>(it - limbs_.begin());
  }
  std::size_t lo = 0;
  std::size_t hi = size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (at(mid) < w) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < size() && at(lo) == w) return lo;
  return std::nullopt;
}

std::span<const std::uint64_t> CodeSet::values() const {
  if (stride_ != 1) throw DomainError("raw values are only available for n <= 64");
  return limbs_;
}

std::vector<Codeword> orbit_representatives(const CodeSet& set) {
  std::vector<Codeword> reps;
  for (const auto& w : set) reps.push_back(canonical_rotation(w));
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

}  // namespace cyclicgv
