#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <vector>

#include "cyclicgv/codeword.hpp"

namespace cyclicgv {

/// A finite set of equal-length codewords, kept sorted ascending by integer
/// value. Words are stored as a flat limb array so that sets of 2^24 words
/// stay compact.
class CodeSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::random_access_iterator_tag;
    using value_type = Codeword;
    using difference_type = std::ptrdiff_t;
    using reference = Codeword;
    using pointer = void;

    const_iterator() = default;
    const_iterator(const CodeSet* set, std::size_t index) : set_(set), index_(index) {}

    Codeword operator*() const { return set_->at(index_); }
    const_iterator& operator++() { ++index_; return *this; }
    const_iterator operator++(int) { auto t = *this; ++index_; return t; }
    const_iterator& operator--() { --index_; return *this; }
    const_iterator& operator+=(difference_type d) { index_ += d; return *this; }
    const_iterator operator+(difference_type d) const { return {set_, index_ + d}; }
    difference_type operator-(const const_iterator& o) const {
      return static_cast<difference_type>(index_) - static_cast<difference_type>(o.index_);
    }
    Codeword operator[](difference_type d) const { return set_->at(index_ + d); }
    friend bool operator==(const const_iterator& a, const const_iterator& b) {
      return a.index_ == b.index_;
    }
    friend auto operator<=>(const const_iterator& a, const const_iterator& b) {
      return a.index_ <=> b.index_;
    }

   private:
    const CodeSet* set_ = nullptr;
    std::size_t index_ = 0;
  };

  explicit CodeSet(std::size_t n);

  /// Sorts and deduplicates. Every word must have length n.
  static CodeSet from_words(std::size_t n, std::span<const Codeword> words);

  /// n <= 64: words given as integer values; sorted and deduplicated here.
  static CodeSet from_values(std::size_t n, std::vector<std::uint64_t> values);

  std::size_t length() const { return n_; }
  std::size_t size() const { return limbs_.size() / stride_; }
  bool empty() const { return limbs_.empty(); }

  Codeword at(std::size_t index) const;
  bool contains(const Codeword& w) const { return index_of(w).has_value(); }
  std::optional<std::size_t> index_of(const Codeword& w) const;

  /// Raw sorted values, n <= 64 only.
  std::span<const std::uint64_t> values() const;

  const_iterator begin() const { return {this, 0}; }
  const_iterator end() const { return {this, size()}; }

  const std::optional<DistanceThreshold>& delta() const { return delta_; }
  void set_delta(std::optional<DistanceThreshold> d) { delta_ = d; }

  /// Closure under shifts as claimed by whoever built the set. The verify
  /// module checks the claim independently.
  bool claims_cyclic_closed() const { return cyclic_closed_; }
  void set_cyclic_closed_claim(bool v) { cyclic_closed_ = v; }

  friend bool operator==(const CodeSet& a, const CodeSet& b) {
    return a.n_ == b.n_ && a.limbs_ == b.limbs_;
  }

 private:
  std::size_t n_;
  std::size_t stride_;
  std::vector<std::uint64_t> limbs_;
  std::optional<DistanceThreshold> delta_;
  bool cyclic_closed_ = false;
};

/// Words of the set, one representative (canonical rotation) per orbit,
/// ascending. Assumes nothing about closure.
std::vector<Codeword> orbit_representatives(const CodeSet& set);

}  // namespace cyclicgv
