#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace cyclicgv {

class CodeSet;

/// Exact rational threshold delta = p/q, kept in lowest terms.
class DistanceThreshold {
 public:
  DistanceThreshold() = default;
  DistanceThreshold(std::uint64_t p, std::uint64_t q);

  /// Parses "p/q" (or a bare integer). Decimal forms are rejected.
  static DistanceThreshold parse(std::string_view text);

  std::uint64_t numerator() const { return p_; }
  std::uint64_t denominator() const { return q_; }

  /// Whether 0 <= delta < 1/2, the regime construction procedures accept.
  bool below_half() const { return 2 * p_ < q_; }

  /// Largest c with c/n < delta, i.e. c*q < p*n; -1 when no count qualifies
  /// (delta = 0). This is the Hamming radius of "distance < delta" balls.
  std::int64_t strict_radius(std::size_t n) const;

  /// Smallest count c with c/n >= delta.
  std::uint64_t min_count(std::size_t n) const;

  std::string to_string() const;

  friend bool operator==(const DistanceThreshold&, const DistanceThreshold&) = default;

 private:
  std::uint64_t p_ = 0;
  std::uint64_t q_ = 1;
};

/// Normalized Hamming distance count/length held exactly, or INFINITE.
class RationalDistance {
 public:
  RationalDistance(std::uint64_t count, std::uint64_t length);

  static RationalDistance infinite() { return RationalDistance(); }

  bool is_infinite() const { return infinite_; }
  std::uint64_t count() const { return count_; }
  std::uint64_t length() const { return length_; }

  /// count/length >= delta, by cross-multiplication.
  bool at_least(const DistanceThreshold& delta) const;
  bool below(const DistanceThreshold& delta) const { return !at_least(delta); }

  double to_double() const;
  std::string to_string() const;

  friend std::strong_ordering operator<=>(const RationalDistance& a, const RationalDistance& b);
  friend bool operator==(const RationalDistance& a, const RationalDistance& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  RationalDistance() : infinite_(true) {}

  std::uint64_t count_ = 0;
  std::uint64_t length_ = 1;
  bool infinite_ = false;
};

/// A word x = x_0 ... x_{n-1} over {0,1}.
///
/// Stored as the integer sum x_i * 2^(n-1-i) in little-endian 64-bit limbs,
/// so x_0 is the most significant bit and ordering by value is ordering by
/// the textual form. Words with n <= 64 occupy a single inline limb and use
/// rotate/popcount fast paths.
class Codeword {
 public:
  using Limbs = boost::container::small_vector<std::uint64_t, 1>;

  explicit Codeword(std::size_t n);
  /// n <= 64 only.
  Codeword(std::size_t n, std::uint64_t value);
  Codeword(std::size_t n, std::span<const std::uint64_t> limbs);

  static Codeword parse(std::string_view bits);
  static Codeword zeros(std::size_t n) { return Codeword(n); }
  static Codeword ones(std::size_t n);
  /// 0^{n-1}1.
  static Codeword unit_last(std::size_t n);

  std::size_t length() const { return n_; }
  std::span<const std::uint64_t> limbs() const { return {limbs_.data(), limbs_.size()}; }
  static std::size_t limb_count(std::size_t n) { return (n + 63) / 64; }

  /// Only valid when length() <= 64.
  std::uint64_t value() const { return limbs_[0]; }

  bool bit(std::size_t i) const;
  void set_bit(std::size_t i, bool v);
  void flip(std::size_t i);
  std::size_t weight() const;

  std::string to_string() const;

  friend Codeword operator^(const Codeword& a, const Codeword& b);
  friend bool operator==(const Codeword& a, const Codeword& b) = default;
  friend std::strong_ordering operator<=>(const Codeword& a, const Codeword& b);

 private:
  void mask_top();

  std::size_t n_;
  Limbs limbs_;
};

/// E^i(x): the cyclic shift of x by i positions to the left, i taken mod n.
Codeword shift(const Codeword& x, std::int64_t i);

/// d(x, y). Throws LengthMismatchError.
RationalDistance hamming(const Codeword& x, const Codeword& y);

/// d_cyc(x, y) = min_i d(E^i(x), y).
RationalDistance cyclic_distance(const Codeword& x, const Codeword& y);

/// d*_cyc(x, x): minimum over the shifts that differ from x. INFINITE when
/// every shift equals x.
RationalDistance auto_cyclic_distance(const Codeword& x);

/// Smallest p >= 1 with E^p(x) = x. Always divides n.
std::size_t period(const Codeword& x);

/// Smallest word (as an integer) among the shifts of x.
Codeword canonical_rotation(const Codeword& x);

/// The distinct shifts of x.
CodeSet orbit(const Codeword& x);

/// Raw single-limb kernels used by the exhaustive scans. All take n <= 64 and
/// values already masked to n bits.
namespace word64 {

inline std::uint64_t mask(std::size_t n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

inline std::uint64_t rotate_left(std::uint64_t v, std::size_t i, std::size_t n) {
  if (i == 0) return v;
  return ((v << i) | (v >> (n - i))) & mask(n);
}

/// Minimum nonzero popcount of E^i(v) xor v over i in 1..n-1; 0 when every
/// shift equals v (period 1).
unsigned auto_cyclic_count(std::uint64_t v, std::size_t n);

unsigned cyclic_count(std::uint64_t x, std::uint64_t y, std::size_t n);

std::uint64_t canonical(std::uint64_t v, std::size_t n);

}  // namespace word64

}  // namespace cyclicgv

template <>
struct std::hash<cyclicgv::Codeword> {
  std::size_t operator()(const cyclicgv::Codeword& w) const noexcept;
};
