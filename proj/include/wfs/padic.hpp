#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "wfs/errors.hpp"

namespace wfs {

class PAdic;

/// Valuation reported for the Zero marker.
inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

/**
 * A p-adic number p^val * unit at capped relative precision.
 *
 * Nonzero values carry `rel` known p-adic digits (1 <= rel <= cap) and a unit
 * residue modulo p^rel. The Zero marker means "zero to the known absolute
 * precision"; a zero built from the integer 0 is exact and absorbs nothing.
 *
 * Sums keep the smaller absolute precision of their operands and products the
 * smaller relative precision. When a subtraction cancels every known digit the
 * result is an inexact Zero marker; that is the precision-loss signal, and
 * consumers that need a zero certified to some depth ask `in_ideal`.
 *
 * A default-constructed PAdic is an exact zero not yet bound to a prime; it
 * adopts the prime of whatever it is combined with.
 */
class PAdic {
 public:
  PAdic() = default;

  static PAdic exact_zero(std::uint32_t p, int cap);
  static PAdic from_int(std::uint32_t p, int cap, std::int64_t n);
  static PAdic from_rational(std::uint32_t p, int cap, std::int64_t num, std::int64_t den);
  /// p^val * unit with `rel` known digits; unit must be prime to p.
  static PAdic from_parts(std::uint32_t p, int cap, int val, std::uint64_t unit, int rel);
  /// Zero known modulo p^abs_prec.
  static PAdic inexact_zero(std::uint32_t p, int cap, int abs_prec);

  bool is_zero() const { return rel_ == 0; }
  bool is_exact_zero() const { return rel_ == 0 && val_ == kInfiniteValuation; }

  /// kInfiniteValuation for the Zero marker.
  int valuation() const { return is_zero() ? kInfiniteValuation : val_; }
  int relative_precision() const { return rel_; }
  /// val + rel for nonzero values, the known depth for zeros.
  int absolute_precision() const;
  std::uint64_t unit() const { return unit_; }
  std::uint32_t prime() const { return p_; }
  int cap() const { return cap_; }

  /// Unit residue mod p; requires a nonzero value.
  std::uint32_t leading_digit() const;

  /// x in m^k. Throws PrecisionLoss when x is a zero known only below depth k.
  bool in_ideal(int k) const;

  /// Residue in F_p of an integral value; zero maps to 0.
  std::uint32_t residue() const;

  /// Signed integer representative of x when x is integral and known exactly
  /// up to the cap; used for integer-based oracles.
  std::int64_t to_integer_mod(int digits) const;

  PAdic operator-() const;
  PAdic inverse() const;

  friend PAdic operator+(const PAdic& x, const PAdic& y);
  friend PAdic operator-(const PAdic& x, const PAdic& y) { return x + (-y); }
  friend PAdic operator*(const PAdic& x, const PAdic& y);
  friend PAdic operator/(const PAdic& x, const PAdic& y) { return x * y.inverse(); }

  PAdic& operator+=(const PAdic& y) { return *this = *this + y; }
  PAdic& operator-=(const PAdic& y) { return *this = *this - y; }
  PAdic& operator*=(const PAdic& y) { return *this = *this * y; }
  PAdic& operator/=(const PAdic& y) { return *this = *this / y; }

  /// Equality to working precision: the difference is a Zero marker.
  friend bool operator==(const PAdic& x, const PAdic& y) { return (x - y).is_zero(); }

  std::string to_string() const;

 private:
  std::uint32_t p_ = 0;
  int cap_ = 0;
  int val_ = kInfiniteValuation;  // absolute precision when zero
  int rel_ = 0;
  std::uint64_t unit_ = 0;
};

enum class SquareClass : std::uint8_t { One = 0, Eps = 1, Pi = 2, EpsPi = 3 };

inline SquareClass operator*(SquareClass a, SquareClass b) {
  return static_cast<SquareClass>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
inline bool has_pi(SquareClass c) { return (static_cast<std::uint8_t>(c) & 2U) != 0; }
inline bool has_eps(SquareClass c) { return (static_cast<std::uint8_t>(c) & 1U) != 0; }
inline constexpr SquareClass kAllSquareClasses[4] = {SquareClass::One, SquareClass::Eps, SquareClass::Pi,
                                                     SquareClass::EpsPi};

/// "1", "eps", "pi", "epspi".
std::string to_string(SquareClass c);
/// Inverse of to_string; throws BadConfig on unknown names.
SquareClass square_class_from_string(const std::string& name);

/**
 * The local field Q_p with p = 1 mod 4, p >= 13, at relative precision N.
 *
 * epsilon is the least positive quadratic non-residue mod p and i_unit the
 * Hensel lift of the smaller residue square root of -1. The uniformizer is p.
 */
struct FieldConfig {
  std::uint32_t p = 0;
  int precision = 0;
  std::uint32_t epsilon = 0;
  PAdic i_unit;

  static FieldConfig make(std::uint32_t p, int precision = 8);

  PAdic zero() const { return PAdic::exact_zero(p, precision); }
  PAdic integer(std::int64_t n) const { return PAdic::from_int(p, precision, n); }
  PAdic rational(std::int64_t num, std::int64_t den) const {
    return PAdic::from_rational(p, precision, num, den);
  }
  /// varpi^k = p^k.
  PAdic pi_power(int k) const { return PAdic::from_parts(p, precision, k, 1, precision); }
  PAdic eps() const { return integer(epsilon); }
  /// The class representative 1, eps, p, eps*p.
  PAdic representative(SquareClass c) const;
};

bool is_prime(std::uint64_t n);
/// Euler's criterion on a residue: 1, -1, or 0.
int legendre(std::uint64_t a, std::uint32_t p);

std::uint32_t least_nonresidue(std::uint32_t p);
/// 1, eps, p or eps*p in Q_p at the given cap.
PAdic class_representative(std::uint32_t p, int cap, SquareClass c);

/// Throws ZeroInput on the Zero marker.
SquareClass square_class(const PAdic& x);

/// Tame symbol for odd p; +1 or -1.
int hilbert_symbol(SquareClass a, SquareClass b, std::uint32_t p);
/// Throws ZeroInput if either argument is the Zero marker.
int hilbert_symbol(const PAdic& a, const PAdic& b);

/// Square root whose unit residue lies in [1, (p-1)/2]. Throws NotASquare.
PAdic sqrt_hensel(const PAdic& x);

}  // namespace wfs
