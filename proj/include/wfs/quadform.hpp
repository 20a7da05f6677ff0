#pragma once

#include <string>
#include <vector>

#include "wfs/padic.hpp"

namespace wfs {

/// Pluggable Hilbert symbol; papercheck swaps in a broken one as a negative control.
using HilbertFn = int (*)(const PAdic&, const PAdic&);

/// Symmetric Gram matrix over Q_p.
class QuadraticForm {
 public:
  QuadraticForm() = default;
  /// Row-major dim x dim Gram matrix; throws PreconditionViolated unless exactly symmetric.
  QuadraticForm(int dim, std::vector<PAdic> gram);

  static QuadraticForm diagonal(const std::vector<PAdic>& entries);
  /// Gram [[c, b], [b, a]]: the form (X, Y) -> <X, e_{a,b,c} Y> on span(v1, v2).
  static QuadraticForm from_subregular(const PAdic& a, const PAdic& b, const PAdic& c);

  int dim() const { return dim_; }
  const PAdic& at(int i, int j) const { return gram_[static_cast<std::size_t>(i * dim_ + j)]; }
  bool is_diagonal() const;

  /// Value q(v) = v^T G v.
  PAdic evaluate(const std::vector<PAdic>& v) const;
  QuadraticForm scaled(const PAdic& s) const;
  /// T^T G T for a row-major dim x dim matrix T.
  QuadraticForm congruent(const std::vector<PAdic>& t) const;

  std::string to_string() const;

 private:
  int dim_ = 0;
  std::vector<PAdic> gram_;
};

/// (rank, discriminant class, Hasse invariant) of the non-degenerate part.
/// Hasse convention: product over i < j of (a_i, a_j) on a diagonalization.
struct FormInvariants {
  int rank = 0;
  SquareClass disc = SquareClass::One;
  int hasse = 1;

  friend bool operator==(const FormInvariants&, const FormInvariants&) = default;
};

std::string to_string(const FormInvariants& inv);

/// Diagonal entries of an equivalent form, nonzero entries first. Each step
/// pivots on a minimal-valuation entry (diagonal preferred on ties). Throws
/// PrecisionLoss if a residual zero is not resolved below the pivots.
std::vector<PAdic> diagonalize(const QuadraticForm& q);

FormInvariants invariants(const QuadraticForm& q, HilbertFn hilbert = &hilbert_symbol);

/// Invariants of q1 + q2 from those of the summands.
FormInvariants compose_invariants(const FormInvariants& a, const FormInvariants& b, std::uint32_t p);

bool is_isomorphic(const QuadraticForm& q1, const QuadraticForm& q2, HilbertFn hilbert = &hilbert_symbol);

/// Local isotropy from (rank, disc, hasse). Throws DegenerateForm if rank < dim.
bool is_isotropic(const QuadraticForm& q, HilbertFn hilbert = &hilbert_symbol);

/// q represents d iff q + <-d> is isotropic.
bool represents(const QuadraticForm& q, const PAdic& d, HilbertFn hilbert = &hilbert_symbol);

/**
 * Brute-force decision of "q represents d" that never touches Hilbert symbols.
 *
 * q must be diagonal and non-degenerate with dim(q) <= 3. Each coefficient of
 * q + <-d> is reduced to unit * p^{0 or 1} by even powers of p; the form is then
 * isotropic iff some primitive vector x satisfies Q(x) = 0 mod p^3 (every
 * primitive x has a partial derivative of valuation <= 1, which is exactly the
 * Hensel condition at that modulus). The search runs over reachable residues.
 */
bool represents_oracle(const QuadraticForm& q, const PAdic& d);

QuadraticForm direct_sum(const QuadraticForm& q1, const QuadraticForm& q2);

}  // namespace wfs
