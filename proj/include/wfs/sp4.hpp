#pragma once

#include <array>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "wfs/padic.hpp"

namespace wfs {

/// 4x4 matrix over Q_p. Entries are indexed 1..4 as in matrix notation.
class Mat4 {
 public:
  Mat4() = default;

  static Mat4 zero(const FieldConfig& f);
  static Mat4 identity(const FieldConfig& f);
  /// E_ij.
  static Mat4 unit(const FieldConfig& f, int i, int j);
  static Mat4 diagonal(const PAdic& a, const PAdic& b, const PAdic& c, const PAdic& d);
  static Mat4 from_rows(const std::array<std::array<PAdic, 4>, 4>& rows);

  PAdic& operator()(int i, int j) { return e_[static_cast<std::size_t>((i - 1) * 4 + (j - 1))]; }
  const PAdic& operator()(int i, int j) const { return e_[static_cast<std::size_t>((i - 1) * 4 + (j - 1))]; }

  Mat4 transpose() const;
  PAdic trace() const;
  bool is_zero() const;
  /// Smallest entry valuation; kInfiniteValuation for the zero matrix.
  int min_valuation() const;
  int rank() const;
  /// Gauss-Jordan with minimal-valuation pivots. Throws SingularMatrix.
  Mat4 inverse() const;

  friend Mat4 operator+(const Mat4& x, const Mat4& y);
  friend Mat4 operator-(const Mat4& x, const Mat4& y);
  friend Mat4 operator*(const Mat4& x, const Mat4& y);
  friend Mat4 operator*(const PAdic& s, const Mat4& x);
  Mat4 operator-() const;
  Mat4& operator+=(const Mat4& y) { return *this = *this + y; }

  /// Entrywise equality to working precision.
  friend bool operator==(const Mat4& x, const Mat4& y);

  std::string to_string() const;

 private:
  std::array<PAdic, 16> e_{};
};

/// Rank of a rows x cols matrix over Q_p. Throws PrecisionLoss when a
/// cancellation leaves a zero not resolved below the pivot valuations.
int matrix_rank(std::vector<std::vector<PAdic>> m);

// --- symplectic structure -------------------------------------------------

/// Gram matrix of <x, y> = x1 y4 + x2 y3 - x3 y2 - x4 y1.
Mat4 symplectic_form(const FieldConfig& f);

/// g^T J g = J. Throws PrecisionLoss when a vanishing entry is not known mod p.
bool is_symplectic(const FieldConfig& f, const Mat4& g);
/// X^T J + J X = 0, i.e. J X symmetric.
bool is_in_algebra(const FieldConfig& f, const Mat4& X);
/// -J g^T J; the inverse of a symplectic g.
Mat4 symplectic_inverse(const FieldConfig& f, const Mat4& g);

/// g X g^{-1}. Throws SingularMatrix.
Mat4 ad(const Mat4& g, const Mat4& X);
/// Conjugation by diag(s^-1, s^-1, s, s) given only s^2 (s itself may not exist in F).
Mat4 ad_diag_sqrt(const PAdic& s_squared, const Mat4& X);
Mat4 commutator(const Mat4& x, const Mat4& y);
bool is_nilpotent(const Mat4& X);

/// Basis E11-E44, E22-E33, E12-E34, E21-E43, E13+E24, E31+E42, E14, E23, E32, E41 of sp4.
std::vector<Mat4> algebra_basis(const FieldConfig& f);

// --- named elements -------------------------------------------------------

using ElementParams = std::map<std::string, PAdic>;

enum class ElementKind { Group, Algebra };

struct ElementInfo {
  std::string name;
  ElementKind kind;
  std::vector<std::string> params;
  std::string description;
};

/// Every name accepted by canonical_element.
const std::vector<ElementInfo>& canonical_catalog();

/**
 * Named matrices:
 *   A               the regular semisimple element of depth 1/2
 *   n        (d)    regular nilpotent representative E21 + d E32 - E43
 *   e_abc    (a,b,c) subregular representative, bottom-left block [[b, a], [c, b]]
 *   e               e_abc with a = -eps/p, b = 0, c = eps
 *   w_kostant, M, D, W, w_nil       Weyl-type and Cayley conjugators
 *   nil_scale (t)   diag(t, t, 1/t, 1/t)
 *   u        (z)    unipotent [[1,0,0,0],[z,1,0,0],[0,0,1,0],[0,0,-z,1]]
 *   t_xy     (x,y)  diag(x, 1/y, y, 1/x)
 *   L, L_inv (e,f)  lower unipotent of the limit family and its inverse
 *   H        (h)    diag(1/h, 1, 1, h)
 * Throws UnknownName, or PreconditionViolated when a parameter is missing.
 */
Mat4 canonical_element(const FieldConfig& f, const std::string& name, const ElementParams& params = {});

Mat4 element_A(const FieldConfig& f);
Mat4 regular_rep(const FieldConfig& f, const PAdic& d);
Mat4 subregular_rep(const FieldConfig& f, const PAdic& a, const PAdic& b, const PAdic& c);

// --- Moy-Prasad filtration of the Siegel parahoric -----------------------

/// Level r stored as 2r.
struct MPLevel {
  int halves = 0;

  static MPLevel integer(int n) { return {2 * n}; }
  static MPLevel half(int n) { return {2 * n + 1}; }
  bool is_half() const { return halves % 2 != 0; }
  int floor() const { return halves / 2; }
  int ceil() const { return (halves + 1) / 2; }
  std::string to_string() const;
};

/// Entry pattern of g - Id: level n has rows 1-2 in m^n and rows 3-4 in
/// (m^{n+1} | m^n); level n + 1/2 has rows 1-2 in (m^{n+1} | m^n) and rows
/// 3-4 in m^{n+1}. Pattern test only; group membership is is_symplectic.
bool mp_group_member(const Mat4& g, MPLevel r);

/// Image of g in G_{1/2}/G_1: a, b, c in O/m from entries (1,4), (1,3), (2,3);
/// d, e, f in m/m^2 from entries (3,2), (3,1), (4,1), each divided by p.
struct VCoords {
  std::uint32_t a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;
  friend bool operator==(const VCoords&, const VCoords&) = default;
};

/// Throws NotInLevel unless g is in the level-1/2 pattern.
VCoords quotient_V_shape(const Mat4& g);

/// Tr(X B) mod m; throws NegativeValuation when the trace is not integral.
std::uint32_t psi_trace(const Mat4& X, const Mat4& B);

// --- test-function windows -------------------------------------------------

/// Per-entry window: entry - center must lie in m^min_val.
struct EntryWindow {
  enum class Center : std::uint8_t { Zero, EpsOverPi, Eps };
  Center center;
  int min_val;
};

using WindowTable = std::array<EntryWindow, 16>;

/// Support of the test function f.
const WindowTable& supp_f_table();
/// Lattice Y with f(X + Y) = f(X).
const WindowTable& invariance_lattice_table();

bool matches_windows(const FieldConfig& f, const WindowTable& table, const Mat4& X);
bool in_supp_f(const FieldConfig& f, const Mat4& X);
bool in_invariance_lattice(const FieldConfig& f, const Mat4& Y);

// --- Kostant slice ---------------------------------------------------------

/// The nilnegative f_d with (h, n_d, f_d) an sl2-triple for h = diag(-3, -1, 1, 3).
Mat4 kostant_completion(const FieldConfig& f, const PAdic& d);
/// dim of ker(ad f_d) restricted to sp4.
int kostant_slice_dimension(const FieldConfig& f, const PAdic& d);
/// X in n_d + ker(ad f_d), with X in sp4.
bool in_kostant_slice(const FieldConfig& f, const Mat4& X, const PAdic& d);

// --- random elements ---------------------------------------------------------

/// A random element of the filtration group at level r: a product of root
/// subgroup elements Id + t X_alpha and a torus element, each with valuations
/// fixed by the level. Always exactly symplectic.
Mat4 random_filtration_element(const FieldConfig& f, MPLevel r, std::mt19937_64& rng);
/// A random symplectic matrix with entry valuations in a small window.
Mat4 random_symplectic(const FieldConfig& f, std::mt19937_64& rng);
/// Random unit, sometimes scaled into m^k, from raw engine output.
PAdic random_element(const FieldConfig& f, std::mt19937_64& rng, int vmin, int vmax);

}  // namespace wfs
