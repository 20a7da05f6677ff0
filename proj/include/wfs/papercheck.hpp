#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wfs/orbits.hpp"

namespace wfs {

/// Outcome of one replayed computation.
struct CheckReport {
  std::string check_id;
  std::uint32_t p = 0;
  bool passed = false;
  std::string witness;
  std::vector<std::string> notes;
};

struct CheckOptions {
  std::uint64_t seed = 1;
  int precision = 8;
  int nil_samples = 40;
  HilbertFn hilbert = &hilbert_symbol;
};

/**
 * Limit family converging to e_{a,b,c}: change basis so that a = d, solve for
 * e and f with h = p^k, conjugate n_d, and require the result to be within m^k
 * of e_{a,b,c}. Throws NotRepresentable if the form [[c,b],[b,a]] misses d.
 */
CheckReport check_lemma_quad_forward(const FieldConfig& f, const PAdic& d, const PAdic& a, const PAdic& b,
                                     const PAdic& c, int k);

/// The printed factors and products of the limit family, replayed literally.
CheckReport check_limit_family_display(const FieldConfig& f);

/// Conjugations of A into the Kostant slices of n_{-1/p} and n_{i/2}.
std::vector<CheckReport> check_prop_reg_conjugations(const FieldConfig& f);
std::vector<CheckReport> check_prop_reg_conjugations(const FieldConfig& f, const Mat4& a);

/// diag(s^-1, s^-1, s, s) n_d = n_{s^2 d} for s^2 = eps, and the identity case.
CheckReport check_ad_diagonal_twist(const FieldConfig& f);

/// Rescaled Ad(w_nil) supp(f) converges into the orbit of e.
CheckReport check_lemma_nil_scaling(const FieldConfig& f, int sample_count, std::uint64_t seed = 1);

/// ad(t_xy u_z, A) lands in supp(f) for the first curve point; x optionally shifted by p.
CheckReport check_lemma_rs_construction(const FieldConfig& f, bool perturb_x = false);

/// The conjugation reports for `a`, plus a^4 = p^-2 Id and non-nilpotency of every image.
CheckReport check_A_in_kostant_chain(const FieldConfig& f);
CheckReport check_A_in_kostant_chain(const FieldConfig& f, const Mat4& a);

/// For all 28 (subregular, regular) pairs: represents, the brute-force oracle and,
/// when representable, the limit-family witness at level k must agree.
CheckReport check_representability_pairs(const FieldConfig& f, HilbertFn hilbert = &hilbert_symbol, int k = 4);

/// Every check for every prime, in a fixed order.
std::vector<CheckReport> run_all(const std::vector<std::uint32_t>& primes, const CheckOptions& options = {});

/// A deliberately wrong Hilbert symbol: flips the sign when both arguments have odd valuation.
int sabotaged_hilbert_symbol(const PAdic& a, const PAdic& b);

}  // namespace wfs
