#include "cyclicgv/codeword.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <limits>
#include <numeric>

#include "cyclicgv/codeset.hpp"
#include "cyclicgv/errors.hpp"

namespace cyclicgv {

using u128 = unsigned __int128;

namespace {

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  if (s.empty()) throw ParseError("empty " + std::string(what));
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("invalid " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// DistanceThreshold

DistanceThreshold::DistanceThreshold(std::uint64_t p, std::uint64_t q) {
  if (q == 0) throw DomainError("threshold denominator must be positive");
  const std::uint64_t g = std::gcd(p, q);
  p_ = p / g;
  q_ = q / g;
}

DistanceThreshold DistanceThreshold::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return DistanceThreshold(parse_u64(text, "threshold"), 1);
  }
  return DistanceThreshold(parse_u64(text.substr(0, slash), "threshold numerator"),
                           parse_u64(text.substr(slash + 1), "threshold denominator"));
}

std::int64_t DistanceThreshold::strict_radius(std::size_t n) const {
  const u128 pn = u128{p_} * n;
  if (pn == 0) return -1;
  const u128 c = (pn - 1) / q_;
  return static_cast<std::int64_t>(std::min<u128>(c, n));
}

std::uint64_t DistanceThreshold::min_count(std::size_t n) const {
  return static_cast<std::uint64_t>(strict_radius(n) + 1);
}

std::string DistanceThreshold::to_string() const {
  return std::to_string(p_) + "/" + std::to_string(q_);
}

// ---------------------------------------------------------------------------
// RationalDistance

RationalDistance::RationalDistance(std::uint64_t count, std::uint64_t length)
    : count_(count), length_(length) {
  if (length == 0) throw DomainError("distance length must be positive");
  if (count > length) throw DomainError("distance count exceeds length");
}

bool RationalDistance::at_least(const DistanceThreshold& delta) const {
  if (infinite_) return true;
  return u128{count_} * delta.denominator() >= u128{delta.numerator()} * length_;
}

double RationalDistance::to_double() const {
  if (infinite_) return std::numeric_limits<double>::infinity();
  return static_cast<double>(count_) / static_cast<double>(length_);
}

std::string RationalDistance::to_string() const {
  if (infinite_) return "inf";
  return std::to_string(count_) + "/" + std::to_string(length_);
}

std::strong_ordering operator<=>(const RationalDistance& a, const RationalDistance& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  return u128{a.count_} * b.length_ <=> u128{b.count_} * a.length_;
}

// ---------------------------------------------------------------------------
// Codeword

Codeword::Codeword(std::size_t n) : n_(n), limbs_(limb_count(n), 0) {
  if (n == 0) throw DomainError("codeword length must be at least 1");
}

Codeword::Codeword(std::size_t n, std::uint64_t value) : Codeword(n) {
  if (n > 64) throw DomainError("integer-valued codewords need n <= 64");
  if ((value & ~word64::mask(n)) != 0) throw DomainError("value does not fit in n bits");
  limbs_[0] = value;
}

Codeword::Codeword(std::size_t n, std::span<const std::uint64_t> limbs) : Codeword(n) {
  if (limbs.size() != limbs_.size()) throw DomainError("limb count does not match length");
  std::copy(limbs.begin(), limbs.end(), limbs_.begin());
  const auto top = limbs_.back();
  mask_top();
  if (top != limbs_.back()) throw DomainError("value does not fit in n bits");
}

Codeword Codeword::parse(std::string_view bits) {
  if (bits.empty()) throw ParseError("empty codeword");
  Codeword w(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      w.set_bit(i, true);
    } else if (bits[i] != '0') {
      throw ParseError("codeword contains a character other than 0/1: '" + std::string(bits) + "'");
    }
  }
  return w;
}

Codeword Codeword::ones(std::size_t n) {
  Codeword w(n);
  std::fill(w.limbs_.begin(), w.limbs_.end(), ~std::uint64_t{0});
  w.mask_top();
  return w;
}

Codeword Codeword::unit_last(std::size_t n) {
  Codeword w(n);
  w.set_bit(n - 1, true);
  return w;
}

void Codeword::mask_top() {
  const std::size_t rem = n_ % 64;
  if (rem != 0) limbs_.back() &= (std::uint64_t{1} << rem) - 1;
}

bool Codeword::bit(std::size_t i) const {
  const std::size_t pos = n_ - 1 - i;
  return (limbs_[pos / 64] >> (pos % 64)) & 1U;
}

void Codeword::set_bit(std::size_t i, bool v) {
  const std::size_t pos = n_ - 1 - i;
  const std::uint64_t m = std::uint64_t{1} << (pos % 64);
  if (v) {
    limbs_[pos / 64] |= m;
  } else {
    limbs_[pos / 64] &= ~m;
  }
}

void Codeword::flip(std::size_t i) { set_bit(i, !bit(i)); }

std::size_t Codeword::weight() const {
  std::size_t w = 0;
  for (auto l : limbs_) w += static_cast<std::size_t>(std::popcount(l));
  return w;
}

std::string Codeword::to_string() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i) {
    if (bit(i)) s[i] = '1';
  }
  return s;
}

Codeword operator^(const Codeword& a, const Codeword& b) {
  if (a.n_ != b.n_) throw LengthMismatchError(a.n_, b.n_);
  Codeword r(a.n_);
  for (std::size_t k = 0; k < r.limbs_.size(); ++k) r.limbs_[k] = a.limbs_[k] ^ b.limbs_[k];
  return r;
}

std::strong_ordering operator<=>(const Codeword& a, const Codeword& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  for (std::size_t k = a.limbs_.size(); k-- > 0;) {
    if (a.limbs_[k] != b.limbs_[k]) return a.limbs_[k] <=> b.limbs_[k];
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// word64 kernels

namespace word64 {

unsigned auto_cyclic_count(std::uint64_t v, std::size_t n) {
  unsigned best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    const auto c = static_cast<unsigned>(std::popcount(rotate_left(v, i, n) ^ v));
    if (c != 0 && (best == 0 || c < best)) best = c;
  }
  return best;
}

unsigned cyclic_count(std::uint64_t x, std::uint64_t y, std::size_t n) {
  unsigned best = static_cast<unsigned>(n);
  for (std::size_t i = 0; i < n && best != 0; ++i) {
    best = std::min(best, static_cast<unsigned>(std::popcount(rotate_left(x, i, n) ^ y)));
  }
  return best;
}

std::uint64_t canonical(std::uint64_t v, std::size_t n) {
  std::uint64_t best = v;
  for (std::size_t i = 1; i < n; ++i) best = std::min(best, rotate_left(v, i, n));
  return best;
}

}  // namespace word64

// ---------------------------------------------------------------------------
// Operations

namespace {

std::size_t reduce(std::int64_t i, std::size_t n) {
  const auto m = static_cast<std::int64_t>(n);
  return static_cast<std::size_t>(((i % m) + m) % m);
}

std::size_t xor_weight(const Codeword& a, const Codeword& b) {
  std::size_t w = 0;
  const auto la = a.limbs();
  const auto lb = b.limbs();
  for (std::size_t k = 0; k < la.size(); ++k) w += static_cast<std::size_t>(std::popcount(la[k] ^ lb[k]));
  return w;
}

void require_same_length(const Codeword& x, const Codeword& y) {
  if (x.length() != y.length()) throw LengthMismatchError(x.length(), y.length());
}

}  // namespace

Codeword shift(const Codeword& x, std::int64_t i) {
  const std::size_t n = x.length();
  const std::size_t s = reduce(i, n);
  if (s == 0) return x;
  if (n <= 64) return Codeword(n, word64::rotate_left(x.value(), s, n));
  Codeword r(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (x.bit((k + s) % n)) r.set_bit(k, true);
  }
  return r;
}

RationalDistance hamming(const Codeword& x, const Codeword& y) {
  require_same_length(x, y);
  return RationalDistance(xor_weight(x, y), x.length());
}

RationalDistance cyclic_distance(const Codeword& x, const Codeword& y) {
  require_same_length(x, y);
  const std::size_t n = x.length();
  if (n <= 64) return RationalDistance(word64::cyclic_count(x.value(), y.value(), n), n);
  std::size_t best = n;
  for (std::size_t i = 0; i < n && best != 0; ++i) {
    best = std::min(best, xor_weight(shift(x, static_cast<std::int64_t>(i)), y));
  }
  return RationalDistance(best, n);
}

RationalDistance auto_cyclic_distance(const Codeword& x) {
  const std::size_t n = x.length();
  std::size_t best = 0;
  if (n <= 64) {
    best = word64::auto_cyclic_count(x.value(), n);
  } else {
    for (std::size_t i = 1; i < n; ++i) {
      const std::size_t c = xor_weight(shift(x, static_cast<std::int64_t>(i)), x);
      if (c != 0 && (best == 0 || c < best)) best = c;
    }
  }
  if (best == 0) return RationalDistance::infinite();
  return RationalDistance(best, n);
}

std::size_t period(const Codeword& x) {
  const std::size_t n = x.length();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p == 0 && shift(x, static_cast<std::int64_t>(p)) == x) return p;
  }
  return n;
}

Codeword canonical_rotation(const Codeword& x) {
  const std::size_t n = x.length();
  if (n <= 64) return Codeword(n, word64::canonical(x.value(), n));
  Codeword best = x;
  for (std::size_t i = 1; i < n; ++i) best = std::min(best, shift(x, static_cast<std::int64_t>(i)));
  return best;
}

CodeSet orbit(const Codeword& x) {
  const std::size_t p = period(x);
  std::vector<Codeword> words;
  words.reserve(p);
  for (std::size_t i = 0; i < p; ++i) words.push_back(shift(x, static_cast<std::int64_t>(i)));
  CodeSet s = CodeSet::from_words(x.length(), words);
  s.set_cyclic_closed_claim(true);
  return s;
}

}  // namespace cyclicgv

std::size_t std::hash<cyclicgv::Codeword>::operator()(const cyclicgv::Codeword& w) const noexcept {
  std::size_t h = std::hash<std::size_t>{}(w.length());
  for (auto l : w.limbs()) h ^= std::hash<std::uint64_t>{}(l) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}
