#pragma once

#include <cstdint>
#include <random>

#include "wfs/padic.hpp"

namespace wfs::testing {

// Seeded generator shared by the property tests; raw engine output only, so
// sequences are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return eng_() % n; }
  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

  PAdic unit(const FieldConfig& f) {
    std::uint64_t m = 1;
    for (int i = 0; i < f.precision; ++i) m *= f.p;
    std::uint64_t u = 0;
    while (u % f.p == 0) u = below(m);
    return PAdic::from_parts(f.p, f.precision, 0, u, f.precision);
  }

  PAdic nonzero(const FieldConfig& f, int vmin = -3, int vmax = 3) {
    return unit(f) * f.pi_power(range(vmin, vmax));
  }

  // Zero with small probability, otherwise an element of m^vmin.
  PAdic element(const FieldConfig& f, int vmin, int vmax) {
    if (below(8) == 0) return f.zero();
    return nonzero(f, vmin, vmax);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace wfs::testing
