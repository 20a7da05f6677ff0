#pragma once

#include <string>
#include <vector>

#include "wfs/quadform.hpp"
#include "wfs/sp4.hpp"

namespace wfs {

/// Jordan type of a nilpotent element of sp4, in dominance order.
enum class Partition : std::uint8_t { Zero = 0, Minimal = 1, Subregular = 2, Regular = 3 };

/// "[1^4]", "[2,1^2]", "[2^2]", "[4]".
std::string to_string(Partition p);

/**
 * A rational nilpotent orbit of Sp4(F).
 *
 * Minimal and Regular orbits carry the square class of the rank-1 forms
 * v -> <v, Xv> and v -> <v, X^3 v>; Subregular orbits carry the invariants of
 * the rank-2 form v -> <v, Xv>.
 */
struct NilpotentOrbit {
  Partition kind = Partition::Zero;
  SquareClass cls = SquareClass::One;
  FormInvariants form{};

  static NilpotentOrbit zero() { return {}; }
  static NilpotentOrbit minimal(SquareClass c) { return {Partition::Minimal, c, {}}; }
  static NilpotentOrbit regular(SquareClass c) { return {Partition::Regular, c, {}}; }
  /// Throws BadConfig unless (disc, hasse) is a realizable binary class.
  static NilpotentOrbit subregular(SquareClass disc, int hasse);

  /// "zero", "min:<class>", "sub:disc=<class>,hasse=<+1|-1>", "reg:<class>".
  std::string label() const;

  friend bool operator==(const NilpotentOrbit&, const NilpotentOrbit&) = default;
};

/// Inverse of label(); throws BadConfig.
NilpotentOrbit parse_orbit(const std::string& spec);

/// The 16 orbits: zero, 4 minimal, 7 subregular, 4 regular.
const std::vector<NilpotentOrbit>& all_orbits();
/// Position in all_orbits(); used as a stable sort key.
int orbit_index(const NilpotentOrbit& o);

/// Diagonal form whose class the orbit carries (rank 1 for minimal/regular, 2 for subregular).
QuadraticForm orbit_form(const FieldConfig& f, const NilpotentOrbit& o);
/// A representative: c E41, the subregular element with that Gram on span(v1, v2), or n_d.
Mat4 orbit_representative(const FieldConfig& f, const NilpotentOrbit& o);

/// Throws PreconditionViolated outside sp4, NotNilpotent if X^4 != 0.
NilpotentOrbit classify(const FieldConfig& f, const Mat4& X);

enum class TruthValue3 : std::uint8_t { False, True, Unknown };
std::string to_string(TruthValue3 t);

bool strictly_below_zariski(const NilpotentOrbit& o1, const NilpotentOrbit& o2);

/// Analytic-closure order. Subregular below Regular(d) iff the form represents d;
/// minimal versus higher orbits is Unknown.
TruthValue3 strictly_below_rational(const FieldConfig& f, const NilpotentOrbit& o1, const NilpotentOrbit& o2,
                                    HilbertFn hilbert = &hilbert_symbol);

enum class GermStatus : std::uint8_t { Nonzero, Zero, Unknown };
std::string to_string(GermStatus s);

struct GermSupportEntry {
  NilpotentOrbit orbit;
  GermStatus status;
};

/// The invariants (2, Pi, -1) of the subregular element e.
NilpotentOrbit orbit_of_e(const FieldConfig& f);

/// Germ coefficients of A: a regular orbit is Nonzero exactly when e's form does
/// not represent its class, Zero otherwise; e's own orbit is Nonzero; the rest Unknown.
std::vector<GermSupportEntry> germ_support(const FieldConfig& f, HilbertFn hilbert = &hilbert_symbol);

struct WavefrontResult {
  int depth = 0;
  std::vector<NilpotentOrbit> wf_rat_contains;
  std::vector<NilpotentOrbit> wf_zar;
  std::vector<std::string> caveats;
};

/// Maximal Nonzero orbits under both orders, shifted to the given depth.
/// Throws InconsistentOrder if two Nonzero orbits compare as Unknown.
WavefrontResult wavefront(const FieldConfig& f, const std::vector<GermSupportEntry>& germs, int depth);
WavefrontResult wavefront(const FieldConfig& f, int depth);

/// The orbit of p^-n X for X in o.
NilpotentOrbit scale_by_depth(const FieldConfig& f, const NilpotentOrbit& o, int n);

enum class ClosureOrder : std::uint8_t { Rational, Zariski };

struct HasseEdge {
  NilpotentOrbit from;
  NilpotentOrbit to;
  TruthValue3 value;
};

/// Zariski: every strict relation (value True). Rational: every Zariski-strict
/// pair labelled with the analytic answer.
std::vector<HasseEdge> hasse_diagram(const FieldConfig& f, ClosureOrder order, HilbertFn hilbert = &hilbert_symbol);

}  // namespace wfs
