#include "wfs/padic.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <tuple>
#include <utility>
#include <vector>

namespace wfs {

namespace {

using u128 = unsigned __int128;

std::uint64_t ipow(std::uint64_t base, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1U;
  }
  return r;
}

// a must be prime to m.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  __int128 t0 = 0, t1 = 1;
  __int128 r0 = m, r1 = a % m;
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
  }
  if (r0 != 1) throw DivisionByZero("unit is not invertible");
  if (t0 < 0) t0 += m;
  return static_cast<std::uint64_t>(t0);
}

void require_same_prime(const PAdic& x, const PAdic& y) {
  if (x.prime() != y.prime()) throw PreconditionViolated("p-adic operands over different primes");
}

// x truncated to absolute precision a (a may exceed what x knows).
PAdic truncate_abs(const PAdic& x, int a) {
  if (x.is_zero()) {
    return PAdic::inexact_zero(x.prime(), x.cap(), std::min(a, x.absolute_precision()));
  }
  if (a >= x.absolute_precision()) return x;
  if (x.valuation() >= a) return PAdic::inexact_zero(x.prime(), x.cap(), a);
  return PAdic::from_parts(x.prime(), x.cap(), x.valuation(), x.unit(), a - x.valuation());
}

struct Rational {
  std::int64_t num;
  std::int64_t den;
};

// Small n/d with n = d*u mod m, if one exists below `limit`.
bool reconstruct(std::uint64_t u, std::uint64_t m, std::int64_t limit, Rational& out) {
  __int128 r0 = m, r1 = u;
  __int128 t0 = 0, t1 = 1;
  while (r1 * r1 * 2 > static_cast<__int128>(m)) {
    const __int128 q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
  }
  __int128 n = r1, d = t1;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (d == 0 || n > limit || -n > limit || d > limit) return false;
  __int128 a = n < 0 ? -n : n, b = d;
  while (b != 0) std::tie(a, b) = std::pair{b, a % b};
  if (a != 1) return false;
  out = {static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)};
  return true;
}

}  // namespace

PAdic PAdic::exact_zero(std::uint32_t p, int cap) {
  PAdic z;
  z.p_ = p;
  z.cap_ = cap;
  return z;
}

PAdic PAdic::inexact_zero(std::uint32_t p, int cap, int abs_prec) {
  PAdic z = exact_zero(p, cap);
  z.val_ = abs_prec;
  return z;
}

PAdic PAdic::from_parts(std::uint32_t p, int cap, int val, std::uint64_t unit, int rel) {
  if (unit % p == 0) throw PreconditionViolated("p-adic unit part divisible by p");
  PAdic x = exact_zero(p, cap);
  x.rel_ = std::clamp(rel, 1, cap);
  x.val_ = val;
  x.unit_ = unit % ipow(p, x.rel_);
  return x;
}

PAdic PAdic::from_int(std::uint32_t p, int cap, std::int64_t n) {
  if (n == 0) return exact_zero(p, cap);
  int v = 0;
  while (n % static_cast<std::int64_t>(p) == 0) {
    n /= static_cast<std::int64_t>(p);
    ++v;
  }
  const auto m = static_cast<__int128>(ipow(p, cap));
  __int128 u = static_cast<__int128>(n) % m;
  if (u < 0) u += m;
  return from_parts(p, cap, v, static_cast<std::uint64_t>(u), cap);
}

PAdic PAdic::from_rational(std::uint32_t p, int cap, std::int64_t num, std::int64_t den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  return from_int(p, cap, num) / from_int(p, cap, den);
}

int PAdic::absolute_precision() const {
  if (is_zero()) return val_;
  return val_ + rel_;
}

std::uint32_t PAdic::leading_digit() const {
  if (is_zero()) throw ZeroInput("leading digit of zero");
  return static_cast<std::uint32_t>(unit_ % p_);
}

bool PAdic::in_ideal(int k) const {
  if (!is_zero()) return val_ >= k;
  if (val_ >= k) return true;
  throw PrecisionLoss("zero known only modulo p^" + std::to_string(val_) + ", membership in m^" +
                      std::to_string(k) + " undecidable");
}

std::uint32_t PAdic::residue() const {
  if (!in_ideal(0)) throw NegativeValuation("residue of a non-integral p-adic number");
  if (is_zero() || val_ > 0) return 0;
  return static_cast<std::uint32_t>(unit_ % p_);
}

std::int64_t PAdic::to_integer_mod(int digits) const {
  if (!in_ideal(0)) throw NegativeValuation("integer representative of a non-integral value");
  if (absolute_precision() < digits) throw PrecisionLoss("value not known to the requested digits");
  if (is_zero() || val_ >= digits) return 0;
  const std::uint64_t m = ipow(p_, digits);
  return static_cast<std::int64_t>(mulmod(unit_ % m, ipow(p_, val_), m));
}

PAdic PAdic::operator-() const {
  if (is_zero()) return *this;
  PAdic r = *this;
  r.unit_ = ipow(p_, rel_) - unit_;
  return r;
}

PAdic PAdic::inverse() const {
  if (is_zero()) throw DivisionByZero("division by the Zero marker");
  PAdic r = *this;
  r.val_ = -val_;
  r.unit_ = inv_mod(unit_, ipow(p_, rel_));
  return r;
}

PAdic operator+(const PAdic& x, const PAdic& y) {
  if (x.p_ == 0) return y;
  if (y.p_ == 0) return x;
  require_same_prime(x, y);
  const int ax = x.absolute_precision();
  const int ay = y.absolute_precision();
  const int a = std::min(ax, ay);
  if (x.is_zero()) return truncate_abs(y, a);
  if (y.is_zero()) return truncate_abs(x, a);

  const int v = std::min(x.val_, y.val_);
  const int k = a - v;
  const std::uint64_t m = ipow(x.p_, k);
  auto term = [&](const PAdic& t) -> std::uint64_t {
    const int shift = t.val_ - v;
    if (shift >= k) return 0;
    return (t.unit_ % ipow(t.p_, k - shift)) * ipow(t.p_, shift);
  };
  std::uint64_t s = (term(x) + term(y)) % m;
  if (s == 0) return PAdic::inexact_zero(x.p_, x.cap_, a);
  int t = 0;
  while (s % x.p_ == 0) {
    s /= x.p_;
    ++t;
  }
  return PAdic::from_parts(x.p_, std::max(x.cap_, y.cap_), v + t, s, k - t);
}

PAdic operator*(const PAdic& x, const PAdic& y) {
  if (x.p_ == 0 && y.p_ == 0) return PAdic{};
  if (x.p_ == 0) return PAdic::exact_zero(y.p_, y.cap_);
  if (y.p_ == 0) return PAdic::exact_zero(x.p_, x.cap_);
  require_same_prime(x, y);
  if (x.is_exact_zero() || y.is_exact_zero()) return PAdic::exact_zero(x.p_, std::max(x.cap_, y.cap_));
  if (x.is_zero() || y.is_zero()) {
    // val_ holds the valuation of a nonzero factor and the known depth of a zero.
    return PAdic::inexact_zero(x.p_, std::max(x.cap_, y.cap_), x.val_ + y.val_);
  }
  const int rel = std::min(x.rel_, y.rel_);
  const std::uint64_t m = ipow(x.p_, rel);
  return PAdic::from_parts(x.p_, std::max(x.cap_, y.cap_), x.val_ + y.val_, mulmod(x.unit_ % m, y.unit_ % m, m),
                           rel);
}

std::string PAdic::to_string() const {
  if (is_exact_zero()) return "0";
  if (is_zero()) return "O(p^" + std::to_string(val_) + ")";
  std::ostringstream os;
  Rational q{};
  if (reconstruct(unit_, ipow(p_, rel_), 1000, q)) {
    os << q.num;
    if (q.den != 1) os << "/" << q.den;
  } else {
    std::vector<std::uint64_t> digits;
    std::uint64_t u = unit_;
    for (int i = 0; i < rel_; ++i) {
      digits.push_back(u % p_);
      u /= p_;
    }
    os << "(";
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
      os << *it << (std::next(it) == digits.rend() ? "" : ".");
    }
    os << ")_" << p_;
  }
  if (val_ != 0) os << "*p^" << val_;
  return os.str();
}

std::string to_string(SquareClass c) {
  switch (c) {
    case SquareClass::One: return "1";
    case SquareClass::Eps: return "eps";
    case SquareClass::Pi: return "pi";
    case SquareClass::EpsPi: return "epspi";
  }
  return "?";
}

SquareClass square_class_from_string(const std::string& name) {
  for (SquareClass c : kAllSquareClasses) {
    if (to_string(c) == name) return c;
  }
  throw BadConfig("unknown square class '" + name + "' (expected 1, eps, pi or epspi)");
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

int legendre(std::uint64_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) return 0;
  return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

FieldConfig FieldConfig::make(std::uint32_t p, int precision) {
  if (!is_prime(p)) throw BadConfig("p = " + std::to_string(p) + " is not prime");
  if (p % 4 != 1) throw BadConfig("p must be 1 mod 4");
  if (p < 13) throw BadConfig("p must be at least 13");
  if (precision < 4) throw BadConfig("precision must be at least 4");
  std::uint64_t m = 1;
  for (int i = 0; i < precision; ++i) {
    if (m > (std::uint64_t{1} << 62U) / p) throw BadConfig("p^precision exceeds 2^62");
    m *= p;
  }
  FieldConfig cfg;
  cfg.p = p;
  cfg.precision = precision;
  cfg.epsilon = least_nonresidue(p);
  cfg.i_unit = sqrt_hensel(cfg.integer(-1));
  return cfg;
}

PAdic FieldConfig::representative(SquareClass c) const { return class_representative(p, precision, c); }

std::uint32_t least_nonresidue(std::uint32_t p) {
  for (std::uint32_t a = 2; a < p; ++a) {
    if (legendre(a, p) == -1) return a;
  }
  throw BadConfig("no quadratic non-residue mod " + std::to_string(p));
}

PAdic class_representative(std::uint32_t p, int cap, SquareClass c) {
  return PAdic::from_parts(p, cap, has_pi(c) ? 1 : 0, has_eps(c) ? least_nonresidue(p) : 1, cap);
}

SquareClass square_class(const PAdic& x) {
  if (x.is_zero()) throw ZeroInput("square class of zero");
  const bool odd = (x.valuation() & 1) != 0;
  const bool nonsquare_unit = legendre(x.leading_digit(), x.prime()) == -1;
  return static_cast<SquareClass>((odd ? 2U : 0U) | (nonsquare_unit ? 1U : 0U));
}

int hilbert_symbol(SquareClass a, SquareClass b, std::uint32_t p) {
  // a = p^alpha u, b = p^beta v:
  // (a,b) = (-1)^(alpha beta (p-1)/2) (u/p)^beta (v/p)^alpha.
  int sign = 1;
  if (has_pi(a) && has_pi(b) && ((p - 1) / 2) % 2 == 1) sign = -sign;
  if (has_pi(b) && has_eps(a)) sign = -sign;
  if (has_pi(a) && has_eps(b)) sign = -sign;
  return sign;
}

int hilbert_symbol(const PAdic& a, const PAdic& b) {
  if (a.is_zero() || b.is_zero()) throw ZeroInput("Hilbert symbol of zero");
  require_same_prime(a, b);
  return hilbert_symbol(square_class(a), square_class(b), a.prime());
}

PAdic sqrt_hensel(const PAdic& x) {
  if (x.is_zero()) throw ZeroInput("square root of zero");
  if (square_class(x) != SquareClass::One) throw NotASquare(x.to_string() + " is not a square");
  const std::uint32_t p = x.prime();
  const std::uint64_t u0 = x.leading_digit();
  std::uint64_t r = 0;
  for (std::uint64_t c = 1; c <= (p - 1) / 2; ++c) {
    if (c * c % p == u0) {
      r = c;
      break;
    }
  }
  const int rel = x.relative_precision();
  const std::uint64_t m = ipow(p, rel);
  const std::uint64_t u = x.unit() % m;
  // Newton: r <- r - (r^2 - u) / (2r); digits double each step.
  for (int known = 1; known < rel; known *= 2) {
    const std::uint64_t f = (mulmod(r, r, m) + m - u) % m;
    const std::uint64_t step = mulmod(f, inv_mod(2 * r % m, m), m);
    r = (r + m - step) % m;
  }
  return PAdic::from_parts(p, x.cap(), x.valuation() / 2, r, rel);
}

}  // namespace wfs
