#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wfs {

/// Nonnegative fraction in lowest terms.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Fraction make(std::int64_t num, std::int64_t den);
  bool is_integer() const { return den == 1; }
  std::string to_string() const;
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

using CurvePoint = std::pair<std::uint32_t, std::uint32_t>;

/// Data of the affine curve eps*y^2 = (eps^2/4) x^4 + 1 with x, y in F_p^x.
struct CurveReport {
  std::uint32_t p = 0;
  std::uint32_t eps_bar = 0;
  std::int64_t affine_count = 0;
  int boundary_rational = 0;
  bool hasse_ok = false;
  Fraction predicted_dim;
  std::optional<CurvePoint> first_point;
};

/// O(p) count: for each x, the right-hand side over eps must be a nonzero square.
/// Throws BadConfig unless p = 1 mod 4 is prime and eps_bar is a non-square unit.
std::int64_t count_affine(std::uint32_t p, std::uint32_t eps_bar);

/// All affine points in scan order (x ascending, then y ascending).
std::vector<CurvePoint> affine_points(std::uint32_t p, std::uint32_t eps_bar);

/**
 * F_p-rational points among the eight points of the smooth completion missing
 * from the affine piece: x = 0 (eps y^2 = 1), y = 0 ((eps^2/4) x^4 = -1) and the
 * two points at infinity (slope s with s^2 = eps/4). eps_bar may be any unit.
 */
int boundary_points(std::uint32_t p, std::uint32_t eps_bar);

/// |N - (p + 1)| <= 2 sqrt(p), in integers. Throws PreconditionViolated if boundary_rational != 0.
bool hasse_check(const CurveReport& report);

/// affine_count / 4.
Fraction predicted_dim(const CurveReport& report);

/// Checks that x -> -x and y -> -y permute the points in free orbits of size 4.
bool sign_orbits_are_free(std::uint32_t p, std::uint32_t eps_bar);

CurveReport curve_report(std::uint32_t p, std::uint32_t eps_bar);

}  // namespace wfs
