#include "cyclicgv/bounds.hpp"

#include <sstream>

#include "cyclicgv/errors.hpp"

namespace cyclicgv {

namespace mp = boost::multiprecision;

namespace {

const Real& ln2() {
  static const Real v = log(Real(2));
  return v;
}

Real log2r(const Real& x) { return log(x) / ln2(); }

Real exp2r(const Real& x) { return exp(x * ln2()); }

void require_construction_regime(const DistanceThreshold& delta) {
  if (!delta.below_half()) {
    throw DomainError("delta must satisfy 0 <= delta < 1/2, got " + delta.to_string());
  }
}

}  // namespace

Real binary_entropy(Fraction x) {
  if (x.den == 0 || x.num > x.den) throw DomainError("entropy argument outside [0,1]");
  if (x.num == 0 || x.num == x.den) return Real(0);
  const Real p = Real(x.num) / Real(x.den);
  const Real q = Real(x.den - x.num) / Real(x.den);
  return -p * log2r(p) - q * log2r(q);
}

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt c = 1;
  for (std::size_t j = 0; j < k; ++j) c = c * (n - j) / (j + 1);
  return c;
}

BigInt ball_volume(std::size_t n, std::size_t r) {
  if (r > n) throw DomainError("ball radius exceeds length");
  BigInt term = 1;
  BigInt sum = 1;
  for (std::size_t k = 0; k < r; ++k) {
    term = term * (n - k) / (k + 1);
    sum += term;
  }
  return sum;
}

Real ball_entropy_bound(std::size_t n, Fraction delta) {
  return exp2r(binary_entropy(delta) * Real(n));
}

Real lemma1_bound(std::size_t n, const DistanceThreshold& delta) {
  if (n < 2) throw DomainError("lemma1_bound needs n >= 2");
  require_construction_regime(delta);
  return Real(2 * (n - 1)) * exp2r((binary_entropy(delta) - 1) * Real(n));
}

Real gv_rate(const DistanceThreshold& delta) {
  require_construction_regime(delta);
  return 1 - binary_entropy(delta);
}

Real code_rate(const BigInt& size, std::size_t n) {
  if (size <= 0) throw DomainError("rate of an empty code is undefined");
  if (n == 0) throw DomainError("code length must be positive");
  // log2 of an exact power of two stays exact.
  const auto msb = mp::msb(size);
  if (size == (BigInt(1) << msb)) return Real(msb) / Real(n);
  return log2r(Real(size)) / Real(n);
}

BoundReport evaluate_bounds(std::size_t n, const DistanceThreshold& delta) {
  BoundReport r;
  r.n = n;
  r.delta = delta;
  r.entropy = binary_entropy(delta);
  r.strict_radius = delta.strict_radius(n);
  const auto floor_radius = static_cast<std::size_t>(
      (static_cast<unsigned __int128>(delta.numerator()) * n) / delta.denominator());
  r.ball_volume = ball_volume(n, floor_radius);
  r.ball_entropy_bound = ball_entropy_bound(n, delta);
  r.lemma1_bound = lemma1_bound(n, delta);
  r.gv_rate = gv_rate(delta);
  r.lemma1_rate_target = 1 - Real(1) / Real(n);
  return r;
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::string to_decimal(const Real& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

}  // namespace cyclicgv
