#pragma once

#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "cyclicgv/codeword.hpp"

namespace cyclicgv {

/// ~166-bit mantissa; comfortably more than 50 bits past double.
using Real = boost::multiprecision::cpp_bin_float_50;
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational in [0,1] given as num/den. Accepts thresholds too.
struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  Fraction() = default;
  Fraction(std::uint64_t n, std::uint64_t d) : num(n), den(d) {}
  Fraction(const DistanceThreshold& t) : num(t.numerator()), den(t.denominator()) {}  // NOLINT
};

/// H(x) = -x log2 x - (1-x) log2 (1-x), with H(0) = H(1) = 0.
Real binary_entropy(Fraction x);

/// V(n, r) = sum_{k<=r} C(n, k), exact.
BigInt ball_volume(std::size_t n, std::size_t r);

/// C(n, k), exact.
BigInt binomial(std::size_t n, std::size_t k);

/// 2^{H(delta) n}, the entropy upper bound on a ball of radius delta*n.
Real ball_entropy_bound(std::size_t n, Fraction delta);

/// 2(n-1) * 2^{(H(delta)-1) n}: union bound on Pr[d*_cyc(x,x) < delta].
Real lemma1_bound(std::size_t n, const DistanceThreshold& delta);

/// 1 - H(delta).
Real gv_rate(const DistanceThreshold& delta);

/// log2(size) / n.
Real code_rate(const BigInt& size, std::size_t n);

/// Every closed-form quantity for one (n, delta).
struct BoundReport {
  std::size_t n = 0;
  DistanceThreshold delta;
  Real entropy;
  std::int64_t strict_radius = -1;
  BigInt ball_volume;  // V(n, floor(delta n))
  Real ball_entropy_bound;
  Real lemma1_bound;
  Real gv_rate;
  Real lemma1_rate_target;  // 1 - 1/n
};

/// delta must be < 1/2 and n >= 2.
BoundReport evaluate_bounds(std::size_t n, const DistanceThreshold& delta);

/// Trial division; n is desk-scale.
bool is_prime(std::size_t n);

/// Decimal with the given significant digits (scientific when needed).
std::string to_decimal(const Real& x, int digits = 15);

}  // namespace cyclicgv
