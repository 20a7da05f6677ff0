#include "wfs/sp4.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace wfs {

namespace {

PAdic zero_like(const PAdic& x) { return PAdic::exact_zero(x.prime(), x.cap()); }

PAdic times_pi_power(const PAdic& x, int k) {
  return x * PAdic::from_parts(x.prime(), x.cap(), k, 1, x.cap());
}

const PAdic& param(const ElementParams& params, const std::string& name, const std::string& element) {
  const auto it = params.find(name);
  if (it == params.end()) throw PreconditionViolated(element + " needs parameter '" + name + "'");
  return it->second;
}

}  // namespace

Mat4 Mat4::zero(const FieldConfig& f) {
  Mat4 m;
  m.e_.fill(f.zero());
  return m;
}

Mat4 Mat4::identity(const FieldConfig& f) {
  Mat4 m = zero(f);
  for (int i = 1; i <= 4; ++i) m(i, i) = f.integer(1);
  return m;
}

Mat4 Mat4::unit(const FieldConfig& f, int i, int j) {
  Mat4 m = zero(f);
  m(i, j) = f.integer(1);
  return m;
}

Mat4 Mat4::diagonal(const PAdic& a, const PAdic& b, const PAdic& c, const PAdic& d) {
  Mat4 m;
  m.e_.fill(zero_like(a));
  m(1, 1) = a;
  m(2, 2) = b;
  m(3, 3) = c;
  m(4, 4) = d;
  return m;
}

Mat4 Mat4::from_rows(const std::array<std::array<PAdic, 4>, 4>& rows) {
  Mat4 m;
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) m(i, j) = rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }
  return m;
}

Mat4 Mat4::transpose() const {
  Mat4 t;
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) t(i, j) = (*this)(j, i);
  }
  return t;
}

PAdic Mat4::trace() const { return (*this)(1, 1) + (*this)(2, 2) + (*this)(3, 3) + (*this)(4, 4); }

bool Mat4::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const PAdic& x) { return x.is_zero(); });
}

int Mat4::min_valuation() const {
  int v = kInfiniteValuation;
  for (const PAdic& x : e_) v = std::min(v, x.valuation());
  return v;
}

int Mat4::rank() const {
  std::vector<std::vector<PAdic>> m(4, std::vector<PAdic>(4));
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) m[i - 1][j - 1] = (*this)(i, j);
  }
  return matrix_rank(std::move(m));
}

Mat4 Mat4::inverse() const {
  Mat4 a = *this;
  Mat4 inv;
  inv.e_.fill(zero_like(e_[0]));
  for (int i = 1; i <= 4; ++i) inv(i, i) = PAdic::from_int(e_[0].prime(), e_[0].cap(), 1);

  for (int col = 1; col <= 4; ++col) {
    int piv = -1;
    int best = kInfiniteValuation;
    for (int r = col; r <= 4; ++r) {
      if (!a(r, col).is_zero() && a(r, col).valuation() < best) {
        best = a(r, col).valuation();
        piv = r;
      }
    }
    if (piv < 0) throw SingularMatrix("matrix is singular to working precision");
    if (piv != col) {
      for (int j = 1; j <= 4; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    const PAdic s = a(col, col).inverse();
    for (int j = 1; j <= 4; ++j) {
      a(col, j) *= s;
      inv(col, j) *= s;
    }
    for (int r = 1; r <= 4; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const PAdic factor = a(r, col);
      for (int j = 1; j <= 4; ++j) {
        a(r, j) -= factor * a(col, j);
        inv(r, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

Mat4 operator+(const Mat4& x, const Mat4& y) {
  Mat4 r;
  for (std::size_t k = 0; k < 16; ++k) r.e_[k] = x.e_[k] + y.e_[k];
  return r;
}

Mat4 operator-(const Mat4& x, const Mat4& y) {
  Mat4 r;
  for (std::size_t k = 0; k < 16; ++k) r.e_[k] = x.e_[k] - y.e_[k];
  return r;
}

Mat4 operator*(const Mat4& x, const Mat4& y) {
  Mat4 r;
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      PAdic s = zero_like(x(i, 1));
      for (int k = 1; k <= 4; ++k) s += x(i, k) * y(k, j);
      r(i, j) = s;
    }
  }
  return r;
}

Mat4 operator*(const PAdic& s, const Mat4& x) {
  Mat4 r;
  for (std::size_t k = 0; k < 16; ++k) r.e_[k] = s * x.e_[k];
  return r;
}

Mat4 Mat4::operator-() const {
  Mat4 r;
  for (std::size_t k = 0; k < 16; ++k) r.e_[k] = -e_[k];
  return r;
}

bool operator==(const Mat4& x, const Mat4& y) { return (x - y).is_zero(); }

std::string Mat4::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 1; i <= 4; ++i) {
    os << (i > 1 ? ", [" : "[");
    for (int j = 1; j <= 4; ++j) os << (j > 1 ? ", " : "") << (*this)(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

int matrix_rank(std::vector<std::vector<PAdic>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<bool> row_used(rows, false), col_used(cols, false);
  int rank = 0;
  int max_pivot_val = INT_MIN;
  for (;;) {
    std::size_t pr = rows, pc = cols;
    int best = kInfiniteValuation;
    for (std::size_t r = 0; r < rows; ++r) {
      if (row_used[r]) continue;
      for (std::size_t c = 0; c < cols; ++c) {
        if (!col_used[c] && !m[r][c].is_zero() && m[r][c].valuation() < best) {
          best = m[r][c].valuation();
          pr = r;
          pc = c;
        }
      }
    }
    if (pr == rows) break;
    row_used[pr] = true;
    col_used[pc] = true;
    ++rank;
    max_pivot_val = std::max(max_pivot_val, best);
    const PAdic inv = m[pr][pc].inverse();
    for (std::size_t r = 0; r < rows; ++r) {
      if (row_used[r] || m[r][pc].is_zero()) continue;
      const PAdic factor = m[r][pc] * inv;
      for (std::size_t c = 0; c < cols; ++c) {
        if (!col_used[c]) m[r][c] -= factor * m[pr][c];
      }
      m[r][pc] = zero_like(m[r][pc]);
    }
  }
  for (std::size_t r = 0; r < rows; ++r) {
    if (row_used[r]) continue;
    for (std::size_t c = 0; c < cols; ++c) {
      if (!col_used[c] && !m[r][c].is_exact_zero() && m[r][c].absolute_precision() <= max_pivot_val) {
        throw PrecisionLoss("rank undecided: residual entry known only modulo p^" +
                            std::to_string(m[r][c].absolute_precision()));
      }
    }
  }
  return rank;
}

Mat4 symplectic_form(const FieldConfig& f) {
  Mat4 j = Mat4::zero(f);
  j(1, 4) = f.integer(1);
  j(2, 3) = f.integer(1);
  j(3, 2) = f.integer(-1);
  j(4, 1) = f.integer(-1);
  return j;
}

bool is_symplectic(const FieldConfig& f, const Mat4& g) {
  const Mat4 j = symplectic_form(f);
  const Mat4 diff = g.transpose() * j * g - j;
  for (int r = 1; r <= 4; ++r) {
    for (int c = 1; c <= 4; ++c) {
      if (!diff(r, c).is_zero()) return false;
      if (!diff(r, c).in_ideal(1)) return false;
    }
  }
  return true;
}

bool is_in_algebra(const FieldConfig& f, const Mat4& X) {
  const Mat4 jx = symplectic_form(f) * X;
  return (jx - jx.transpose()).is_zero();
}

Mat4 symplectic_inverse(const FieldConfig& f, const Mat4& g) {
  const Mat4 j = symplectic_form(f);
  return -(j * g.transpose() * j);
}

Mat4 ad(const Mat4& g, const Mat4& X) { return g * X * g.inverse(); }

Mat4 ad_diag_sqrt(const PAdic& s_squared, const Mat4& X) {
  Mat4 r = X;
  const PAdic inv = s_squared.inverse();
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      const bool top_i = i <= 2, top_j = j <= 2;
      if (top_i && !top_j) r(i, j) *= inv;
      if (!top_i && top_j) r(i, j) *= s_squared;
    }
  }
  return r;
}

Mat4 commutator(const Mat4& x, const Mat4& y) { return x * y - y * x; }

bool is_nilpotent(const Mat4& X) {
  const Mat4 x2 = X * X;
  return (x2 * x2).is_zero();
}

std::vector<Mat4> algebra_basis(const FieldConfig& f) {
  auto E = [&](int i, int j) { return Mat4::unit(f, i, j); };
  return {E(1, 1) - E(4, 4), E(2, 2) - E(3, 3), E(1, 2) - E(3, 4), E(2, 1) - E(4, 3), E(1, 3) + E(2, 4),
          E(3, 1) + E(4, 2), E(1, 4),           E(2, 3),           E(3, 2),           E(4, 1)};
}

const std::vector<ElementInfo>& canonical_catalog() {
  static const std::vector<ElementInfo> catalog = {
      {"A", ElementKind::Algebra, {}, "regular semisimple element of depth 1/2"},
      {"n", ElementKind::Algebra, {"d"}, "regular nilpotent E21 + d E32 - E43"},
      {"e_abc", ElementKind::Algebra, {"a", "b", "c"}, "subregular nilpotent, bottom-left block [[b,a],[c,b]]"},
      {"e", ElementKind::Algebra, {}, "subregular nilpotent with a = -eps/p, b = 0, c = eps"},
      {"w_kostant", ElementKind::Group, {}, "permutation conjugator into the Kostant section of n_{-1/p}"},
      {"M", ElementKind::Group, {}, "Cayley-type conjugator built from i"},
      {"D", ElementKind::Group, {}, "diag(2/p, 1, 1, p/2)"},
      {"W", ElementKind::Group, {}, "signed permutation swapping e1 and e4"},
      {"w_nil", ElementKind::Group, {}, "signed permutation swapping e2 and e3"},
      {"nil_scale", ElementKind::Group, {"t"}, "diag(t, t, 1/t, 1/t)"},
      {"u", ElementKind::Group, {"z"}, "unipotent E21 - E43 direction"},
      {"t_xy", ElementKind::Group, {"x", "y"}, "torus diag(x, 1/y, y, 1/x)"},
      {"L", ElementKind::Group, {"e", "f"}, "lower unipotent of the limit family"},
      {"L_inv", ElementKind::Group, {"e", "f"}, "inverse of L"},
      {"H", ElementKind::Group, {"h"}, "diag(1/h, 1, 1, h)"},
  };
  return catalog;
}

Mat4 element_A(const FieldConfig& f) {
  Mat4 a = Mat4::zero(f);
  a(1, 4) = f.pi_power(-1);
  a(2, 3) = f.pi_power(-1);
  a(3, 1) = f.integer(1);
  a(4, 2) = f.integer(1);
  return a;
}

Mat4 regular_rep(const FieldConfig& f, const PAdic& d) {
  Mat4 n = Mat4::zero(f);
  n(2, 1) = f.integer(1);
  n(3, 2) = d;
  n(4, 3) = f.integer(-1);
  return n;
}

Mat4 subregular_rep(const FieldConfig& f, const PAdic& a, const PAdic& b, const PAdic& c) {
  Mat4 e = Mat4::zero(f);
  e(3, 1) = b;
  e(3, 2) = a;
  e(4, 1) = c;
  e(4, 2) = b;
  return e;
}

Mat4 canonical_element(const FieldConfig& f, const std::string& name, const ElementParams& params) {
  const PAdic zero = f.zero(), one = f.integer(1);
  if (name == "A") return element_A(f);
  if (name == "n") return regular_rep(f, param(params, "d", name));
  if (name == "e_abc") {
    return subregular_rep(f, param(params, "a", name), param(params, "b", name), param(params, "c", name));
  }
  if (name == "e") return subregular_rep(f, -f.eps() * f.pi_power(-1), zero, f.eps());
  if (name == "w_kostant") {
    return Mat4::from_rows({{{one, zero, zero, zero}, {zero, zero, one, zero}, {zero, -one, zero, zero},
                             {zero, zero, zero, one}}});
  }
  if (name == "M") {
    const PAdic i = f.i_unit, half = f.rational(1, 2);
    return Mat4::from_rows({{{one, i, zero, zero},
                             {one, -i, zero, zero},
                             {zero, zero, i * half, half},
                             {zero, zero, -i * half, half}}});
  }
  if (name == "D") return Mat4::diagonal(f.integer(2) * f.pi_power(-1), one, one, f.rational(1, 2) * f.pi_power(1));
  if (name == "W") {
    return Mat4::from_rows({{{zero, zero, zero, one}, {zero, one, zero, zero}, {zero, zero, one, zero},
                             {-one, zero, zero, zero}}});
  }
  if (name == "w_nil") {
    return Mat4::from_rows({{{one, zero, zero, zero}, {zero, zero, -one, zero}, {zero, one, zero, zero},
                             {zero, zero, zero, one}}});
  }
  if (name == "nil_scale") {
    const PAdic& t = param(params, "t", name);
    return Mat4::diagonal(t, t, t.inverse(), t.inverse());
  }
  if (name == "u") {
    const PAdic& z = param(params, "z", name);
    Mat4 u = Mat4::identity(f);
    u(2, 1) = z;
    u(4, 3) = -z;
    return u;
  }
  if (name == "t_xy") {
    const PAdic& x = param(params, "x", name);
    const PAdic& y = param(params, "y", name);
    return Mat4::diagonal(x, y.inverse(), y, x.inverse());
  }
  if (name == "L" || name == "L_inv") {
    const PAdic s = name == "L" ? one : -one;
    const PAdic e = s * param(params, "e", name);
    const PAdic fp = s * param(params, "f", name);
    return Mat4::from_rows({{{one, zero, zero, zero}, {-e, one, zero, zero}, {fp, zero, one, zero},
                             {zero, fp, e, one}}});
  }
  if (name == "H") {
    const PAdic& h = param(params, "h", name);
    return Mat4::diagonal(h.inverse(), one, one, h);
  }
  throw UnknownName("no canonical element named '" + name + "'");
}

std::string MPLevel::to_string() const {
  return is_half() ? std::to_string(floor()) + "+1/2" : std::to_string(floor());
}

namespace {

// Minimal valuation of (g - Id)_{ij} at level r.
int level_bound(MPLevel r, int i, int j) {
  const int n = r.floor();
  const bool top = i <= 2, left = j <= 2;
  if (!r.is_half()) return (!top && left) ? n + 1 : n;
  if (top) return left ? n + 1 : n;
  return n + 1;
}

}  // namespace

bool mp_group_member(const Mat4& g, MPLevel r) {
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      PAdic y = g(i, j);
      if (i == j) y -= PAdic::from_int(y.prime(), y.cap(), 1);
      if (!y.in_ideal(level_bound(r, i, j))) return false;
    }
  }
  return true;
}

VCoords quotient_V_shape(const Mat4& g) {
  if (!mp_group_member(g, MPLevel::half(0))) throw NotInLevel("element is not in the level-1/2 subgroup");
  VCoords v;
  v.a = g(1, 4).residue();
  v.b = g(1, 3).residue();
  v.c = g(2, 3).residue();
  v.d = times_pi_power(g(3, 2), -1).residue();
  v.e = times_pi_power(g(3, 1), -1).residue();
  v.f = times_pi_power(g(4, 1), -1).residue();
  return v;
}

std::uint32_t psi_trace(const Mat4& X, const Mat4& B) {
  const PAdic t = (X * B).trace();
  if (!t.in_ideal(0)) throw NegativeValuation("trace pairing has negative valuation: " + t.to_string());
  return t.residue();
}

namespace {

using C = EntryWindow::Center;

// Rows of the support of f: generic O entries, O/p entries in the top-right
// corner, the window eps/p + O at (2,3) and eps + m at (4,1).
constexpr WindowTable kSuppF = {{
    {C::Zero, 0}, {C::Zero, 0}, {C::Zero, -1}, {C::Zero, -1},
    {C::Zero, 0}, {C::Zero, 0}, {C::EpsOverPi, 0}, {C::Zero, -1},
    {C::Zero, 0}, {C::Zero, 0}, {C::Zero, 0}, {C::Zero, 0},
    {C::Eps, 1}, {C::Zero, 0}, {C::Zero, 0}, {C::Zero, 0},
}};

constexpr WindowTable kInvariance = {{
    {C::Zero, 0}, {C::Zero, 0}, {C::Zero, -1}, {C::Zero, -1},
    {C::Zero, 0}, {C::Zero, 0}, {C::Zero, 0}, {C::Zero, -1},
    {C::Zero, 0}, {C::Zero, 0}, {C::Zero, 0}, {C::Zero, 0},
    {C::Zero, 1}, {C::Zero, 0}, {C::Zero, 0}, {C::Zero, 0},
}};

PAdic center_value(const FieldConfig& f, C c) {
  switch (c) {
    case C::EpsOverPi: return f.eps() * f.pi_power(-1);
    case C::Eps: return f.eps();
    case C::Zero: break;
  }
  return f.zero();
}

}  // namespace

const WindowTable& supp_f_table() { return kSuppF; }
const WindowTable& invariance_lattice_table() { return kInvariance; }

bool matches_windows(const FieldConfig& f, const WindowTable& table, const Mat4& X) {
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      const EntryWindow& w = table[static_cast<std::size_t>((i - 1) * 4 + (j - 1))];
      if (!(X(i, j) - center_value(f, w.center)).in_ideal(w.min_val)) return false;
    }
  }
  return true;
}

bool in_supp_f(const FieldConfig& f, const Mat4& X) { return matches_windows(f, kSuppF, X); }
bool in_invariance_lattice(const FieldConfig& f, const Mat4& Y) { return matches_windows(f, kInvariance, Y); }

Mat4 kostant_completion(const FieldConfig& f, const PAdic& d) {
  Mat4 m = Mat4::zero(f);
  m(1, 2) = f.integer(3);
  m(2, 3) = f.integer(4) / d;
  m(3, 4) = f.integer(-3);
  return m;
}

int kostant_slice_dimension(const FieldConfig& f, const PAdic& d) {
  const Mat4 fd = kostant_completion(f, d);
  const std::vector<Mat4> basis = algebra_basis(f);
  std::vector<std::vector<PAdic>> m(16, std::vector<PAdic>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Mat4 c = commutator(fd, basis[k]);
    for (int i = 1; i <= 4; ++i) {
      for (int j = 1; j <= 4; ++j) m[static_cast<std::size_t>((i - 1) * 4 + (j - 1))][k] = c(i, j);
    }
  }
  return static_cast<int>(basis.size()) - matrix_rank(std::move(m));
}

bool in_kostant_slice(const FieldConfig& f, const Mat4& X, const PAdic& d) {
  if (!is_in_algebra(f, X)) return false;
  return commutator(kostant_completion(f, d), X - regular_rep(f, d)).is_zero();
}

PAdic random_element(const FieldConfig& f, std::mt19937_64& rng, int vmin, int vmax) {
  if (rng() % 8 == 0) return f.zero();
  std::uint64_t m = 1;
  for (int i = 0; i < f.precision; ++i) m *= f.p;
  std::uint64_t u = 0;
  while (u % f.p == 0) u = rng() % m;
  const int v = vmin + static_cast<int>(rng() % static_cast<std::uint64_t>(vmax - vmin + 1));
  return PAdic::from_parts(f.p, f.precision, v, u, f.precision);
}

namespace {

enum class RootBlock { Diagonal, TopRight, BottomLeft };

struct Root {
  Mat4 x;
  RootBlock block;
};

std::vector<Root> root_vectors(const FieldConfig& f) {
  auto E = [&](int i, int j) { return Mat4::unit(f, i, j); };
  return {
      {E(1, 2) - E(3, 4), RootBlock::Diagonal}, {E(2, 1) - E(4, 3), RootBlock::Diagonal},
      {E(1, 3) + E(2, 4), RootBlock::TopRight}, {E(1, 4), RootBlock::TopRight},
      {E(2, 3), RootBlock::TopRight},           {E(3, 1) + E(4, 2), RootBlock::BottomLeft},
      {E(3, 2), RootBlock::BottomLeft},         {E(4, 1), RootBlock::BottomLeft},
  };
}

Mat4 root_product(const FieldConfig& f, std::mt19937_64& rng, const std::vector<Root>& roots,
                  const std::array<int, 3>& bounds, int spread, int passes) {
  Mat4 g = Mat4::identity(f);
  for (int pass = 0; pass < passes; ++pass) {
    std::vector<std::size_t> order(roots.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    for (std::size_t k = order.size(); k > 1; --k) std::swap(order[k - 1], order[rng() % k]);
    for (std::size_t k : order) {
      const int lo = bounds[static_cast<std::size_t>(roots[k].block)];
      const PAdic t = random_element(f, rng, lo, lo + spread);
      g = g * (Mat4::identity(f) + t * roots[k].x);
    }
  }
  return g;
}

}  // namespace

Mat4 random_filtration_element(const FieldConfig& f, MPLevel r, std::mt19937_64& rng) {
  const std::vector<Root> roots = root_vectors(f);
  const Mat4 g = root_product(f, rng, roots, {r.ceil(), r.floor(), r.floor() + 1}, 2, 2);
  auto torus_entry = [&]() {
    if (r.halves == 0) {
      PAdic u = f.zero();
      while (u.is_zero()) u = random_element(f, rng, 0, 0);
      return u;
    }
    return f.integer(1) + random_element(f, rng, r.ceil(), r.ceil() + 2);
  };
  const PAdic a = torus_entry(), b = torus_entry();
  return Mat4::diagonal(a, b, b.inverse(), a.inverse()) * g;
}

Mat4 random_symplectic(const FieldConfig& f, std::mt19937_64& rng) {
  const Mat4 g = root_product(f, rng, root_vectors(f), {0, 0, 0}, 2, 1);
  auto torus_entry = [&]() {
    PAdic u = f.zero();
    while (u.is_zero()) u = random_element(f, rng, -1, 1);
    return u;
  };
  const PAdic a = torus_entry(), b = torus_entry();
  return Mat4::diagonal(a, b, b.inverse(), a.inverse()) * g;
}

}  // namespace wfs
