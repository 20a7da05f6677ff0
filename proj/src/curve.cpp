#include "wfs/curve.hpp"

#include <numeric>
#include <set>

#include "wfs/errors.hpp"
#include "wfs/padic.hpp"

namespace wfs {

namespace {

std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint32_t p) { return a * b % p; }

std::uint64_t powm(std::uint64_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  a %= p;
  for (; e; e >>= 1, a = mulm(a, a, p)) {
    if (e & 1U) r = mulm(r, a, p);
  }
  return r;
}

std::uint64_t invm(std::uint64_t a, std::uint32_t p) { return powm(a, p - 2, p); }

void require_prime_field(std::uint32_t p, std::uint32_t eps_bar) {
  if (!is_prime(p) || p % 4 != 1) throw BadConfig("p must be a prime congruent to 1 mod 4");
  if (eps_bar % p == 0) throw BadConfig("eps_bar must be a unit");
}

void require_nonsquare(std::uint32_t p, std::uint32_t eps_bar) {
  require_prime_field(p, eps_bar);
  if (legendre(eps_bar, p) != -1) throw BadConfig("eps_bar must be a non-square mod p");
}

// (eps^2/4) x^4 + 1.
std::uint64_t rhs(std::uint64_t x, std::uint32_t p, std::uint32_t eps_bar) {
  const std::uint64_t c = mulm(mulm(eps_bar, eps_bar, p), invm(4, p), p);
  return (mulm(c, powm(x, 4, p), p) + 1) % p;
}

}  // namespace

Fraction Fraction::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DivisionByZero("fraction with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::string Fraction::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::int64_t count_affine(std::uint32_t p, std::uint32_t eps_bar) {
  require_nonsquare(p, eps_bar);
  const std::uint64_t eps_inv = invm(eps_bar, p);
  std::int64_t n = 0;
  for (std::uint64_t x = 1; x < p; ++x) {
    if (legendre(mulm(rhs(x, p, eps_bar), eps_inv, p), p) == 1) n += 2;
  }
  return n;
}

std::vector<CurvePoint> affine_points(std::uint32_t p, std::uint32_t eps_bar) {
  require_nonsquare(p, eps_bar);
  std::vector<CurvePoint> pts;
  for (std::uint64_t x = 1; x < p; ++x) {
    const std::uint64_t r = rhs(x, p, eps_bar);
    for (std::uint64_t y = 1; y < p; ++y) {
      if (mulm(eps_bar, mulm(y, y, p), p) == r) {
        pts.emplace_back(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y));
      }
    }
  }
  return pts;
}

int boundary_points(std::uint32_t p, std::uint32_t eps_bar) {
  require_prime_field(p, eps_bar);
  int n = 0;
  const std::uint64_t quarter_eps = mulm(eps_bar, invm(4, p), p);
  for (std::uint64_t t = 1; t < p; ++t) {
    const std::uint64_t t2 = mulm(t, t, p);
    if (mulm(eps_bar, t2, p) == 1) ++n;   // x = 0, y = t
    if (rhs(t, p, eps_bar) == 0) ++n;     // y = 0, x = t
    if (t2 == quarter_eps) ++n;           // slope t at infinity
  }
  return n;
}

bool hasse_check(const CurveReport& report) {
  if (report.boundary_rational != 0) throw PreconditionViolated("boundary points must all be irrational");
  const std::int64_t dev = report.affine_count - static_cast<std::int64_t>(report.p) - 1;
  return dev * dev <= 4 * static_cast<std::int64_t>(report.p);
}

Fraction predicted_dim(const CurveReport& report) { return Fraction::make(report.affine_count, 4); }

bool sign_orbits_are_free(std::uint32_t p, std::uint32_t eps_bar) {
  const std::vector<CurvePoint> pts = affine_points(p, eps_bar);
  const std::set<CurvePoint> all(pts.begin(), pts.end());
  std::set<CurvePoint> seen;
  for (const CurvePoint& pt : pts) {
    if (seen.count(pt)) continue;
    const auto [x, y] = pt;
    const std::set<CurvePoint> orbit = {{x, y}, {p - x, y}, {x, p - y}, {p - x, p - y}};
    if (orbit.size() != 4) return false;
    for (const CurvePoint& q : orbit) {
      if (!all.count(q)) return false;
      seen.insert(q);
    }
  }
  return seen.size() == all.size();
}

CurveReport curve_report(std::uint32_t p, std::uint32_t eps_bar) {
  CurveReport r;
  r.p = p;
  r.eps_bar = eps_bar;
  r.affine_count = count_affine(p, eps_bar);
  r.boundary_rational = boundary_points(p, eps_bar);
  r.hasse_ok = r.boundary_rational == 0 && hasse_check(r);
  r.predicted_dim = predicted_dim(r);
  const std::vector<CurvePoint> pts = affine_points(p, eps_bar);
  if (!pts.empty()) r.first_point = pts.front();
  return r;
}

}  // namespace wfs
