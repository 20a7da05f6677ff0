#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wfs/sp4.hpp"

using namespace wfs;

namespace {

ElementParams sample_params(const FieldConfig& f) {
  return {{"d", f.rational(3, 7)}, {"a", f.integer(2)},       {"b", f.integer(5)},      {"c", f.pi_power(1)},
          {"t", f.pi_power(2)},    {"z", f.rational(-2, 5)},  {"x", f.integer(3)},      {"y", f.rational(1, 6)},
          {"e", f.rational(4, 9)}, {"f", f.integer(11)},      {"h", f.pi_power(3)}};
}

Mat4 random_algebra_element(const FieldConfig& f, std::mt19937_64& rng, int vmin, int vmax) {
  Mat4 x = Mat4::zero(f);
  for (const Mat4& b : algebra_basis(f)) x += random_element(f, rng, vmin, vmax) * b;
  return x;
}

Mat4 random_matrix(const FieldConfig& f, std::mt19937_64& rng, int vmin, int vmax) {
  Mat4 x = Mat4::zero(f);
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) x(i, j) = random_element(f, rng, vmin, vmax);
  }
  return x;
}

const MPLevel kLevels[] = {MPLevel::integer(0), MPLevel::half(0), MPLevel::integer(1), MPLevel::half(1)};

}  // namespace

TEST_CASE("symplectic form") {
  const FieldConfig f = FieldConfig::make(13);
  const Mat4 j = symplectic_form(f);
  CHECK(j.transpose() == -j);
  CHECK(j * j == -Mat4::identity(f));
}

TEST_CASE("group membership") {
  const FieldConfig f = FieldConfig::make(13);
  CHECK(is_symplectic(f, Mat4::identity(f)));
  CHECK(is_symplectic(f, canonical_element(f, "M")));
  CHECK_FALSE(is_symplectic(f, Mat4::diagonal(f.integer(2), f.integer(1), f.integer(1), f.integer(1))));
}

TEST_CASE("algebra membership") {
  const FieldConfig f = FieldConfig::make(13);
  CHECK(is_in_algebra(f, element_A(f)));
  for (int k = -2; k <= 2; ++k) CHECK(is_in_algebra(f, regular_rep(f, f.pi_power(k) * f.eps())));
  CHECK_FALSE(is_in_algebra(f, Mat4::unit(f, 2, 1)));
  for (const Mat4& b : algebra_basis(f)) CHECK(is_in_algebra(f, b));
}

TEST_CASE("every catalogued element lies in the group or the algebra") {
  for (std::uint32_t p : {13U, 17U, 29U}) {
    const FieldConfig f = FieldConfig::make(p);
    const ElementParams params = sample_params(f);
    for (const ElementInfo& info : canonical_catalog()) {
      CAPTURE(info.name);
      const Mat4 m = canonical_element(f, info.name, params);
      if (info.kind == ElementKind::Group) {
        CHECK(is_symplectic(f, m));
      } else {
        CHECK(is_in_algebra(f, m));
      }
    }
    CHECK(canonical_element(f, "L", params) * canonical_element(f, "L_inv", params) == Mat4::identity(f));
  }
}

TEST_CASE("canonical elements") {
  const FieldConfig f = FieldConfig::make(13);
  const Mat4 a = canonical_element(f, "A");
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      if ((i == 1 && j == 4) || (i == 2 && j == 3)) {
        CHECK(a(i, j) == f.pi_power(-1));
      } else if ((i == 3 && j == 1) || (i == 4 && j == 2)) {
        CHECK(a(i, j) == f.integer(1));
      } else {
        CHECK(a(i, j).is_exact_zero());
      }
    }
  }
  const Mat4 e = canonical_element(f, "e");
  CHECK(e == subregular_rep(f, -f.pi_power(-1) * f.eps(), f.zero(), f.eps()));
  const Mat4 n = canonical_element(f, "n", {{"d", f.integer(1)}});
  CHECK(n == Mat4::unit(f, 2, 1) + Mat4::unit(f, 3, 2) - Mat4::unit(f, 4, 3));
  CHECK_THROWS_AS(canonical_element(f, "B"), UnknownName);
  CHECK_THROWS_AS(canonical_element(f, "n"), PreconditionViolated);
}

TEST_CASE("conjugation") {
  const FieldConfig f = FieldConfig::make(13);
  const Mat4 x = element_A(f);
  CHECK(ad(Mat4::identity(f), x) == x);

  const PAdic pinv = f.pi_power(-1);
  for (const PAdic& d : {-pinv, f.i_unit / f.integer(2), f.integer(1)}) {
    CHECK(ad_diag_sqrt(f.eps(), regular_rep(f, d)) == regular_rep(f, f.eps() * d));
    CHECK(ad_diag_sqrt(f.integer(1), regular_rep(f, d)) == regular_rep(f, d));
  }
  const PAdic s = f.rational(5, 3);
  const Mat4 ds = Mat4::diagonal(s.inverse(), s.inverse(), s, s);
  CHECK(ad(ds, x) == ad_diag_sqrt(s * s, x));

  const Mat4 expected = regular_rep(f, -pinv) + pinv * Mat4::unit(f, 1, 4);
  CHECK(ad(canonical_element(f, "w_kostant"), x) == expected);
  CHECK_THROWS_AS(ad(Mat4::zero(f), x), SingularMatrix);
}

TEST_CASE("A is regular semisimple with A^4 = p^-2") {
  for (std::uint32_t p : {13U, 17U, 29U}) {
    const FieldConfig f = FieldConfig::make(p);
    const Mat4 a = element_A(f);
    CHECK(a * a * a * a == f.pi_power(-2) * Mat4::identity(f));
    CHECK_FALSE(is_nilpotent(a));
  }
}

TEST_CASE("filtration patterns") {
  const FieldConfig f = FieldConfig::make(13);
  const Mat4 id = Mat4::identity(f);
  for (int h = 0; h < 6; ++h) CHECK(mp_group_member(id, MPLevel{h}));
  const Mat4 g = id + f.pi_power(1) * Mat4::unit(f, 3, 1);
  CHECK(mp_group_member(g, MPLevel::half(0)));
  CHECK_FALSE(mp_group_member(g, MPLevel::integer(1)));
  const Mat4 h = id + Mat4::unit(f, 1, 3);
  CHECK(mp_group_member(h, MPLevel::half(0)));
  CHECK_FALSE(mp_group_member(h, MPLevel::integer(1)));
  CHECK_FALSE(mp_group_member(id + Mat4::unit(f, 1, 1), MPLevel::half(0)));
  CHECK(mp_group_member(id + Mat4::unit(f, 1, 1), MPLevel::integer(0)));
}

TEST_CASE("quotient coordinates") {
  const FieldConfig f = FieldConfig::make(13);
  std::mt19937_64 rng(0x5eed0201);
  for (int k = 0; k < 20; ++k) {
    CHECK(quotient_V_shape(random_filtration_element(f, MPLevel::integer(1), rng)) == VCoords{});
  }
  const PAdic u = f.integer(7);
  const Mat4 g = Mat4::identity(f) + u * (Mat4::unit(f, 1, 3) + Mat4::unit(f, 2, 4));
  CHECK(quotient_V_shape(g).b == 7);
  CHECK_THROWS_AS(quotient_V_shape(Mat4::identity(f) + Mat4::unit(f, 3, 1)), NotInLevel);

  int nontrivial = 0;
  for (int k = 0; k < 100; ++k) {
    const Mat4 x = random_filtration_element(f, MPLevel::half(0), rng);
    const Mat4 y = random_filtration_element(f, MPLevel::half(0), rng);
    const VCoords vx = quotient_V_shape(x), vy = quotient_V_shape(y), vxy = quotient_V_shape(x * y);
    CHECK(vxy.a == (vx.a + vy.a) % f.p);
    CHECK(vxy.b == (vx.b + vy.b) % f.p);
    CHECK(vxy.c == (vx.c + vy.c) % f.p);
    CHECK(vxy.d == (vx.d + vy.d) % f.p);
    CHECK(vxy.e == (vx.e + vy.e) % f.p);
    CHECK(vxy.f == (vx.f + vy.f) % f.p);
    CHECK((vx == VCoords{}) == mp_group_member(x, MPLevel::integer(1)));
    if (!(vx == VCoords{})) ++nontrivial;
  }
  CHECK(nontrivial > 50);
}

TEST_CASE("trace pairing") {
  const FieldConfig f = FieldConfig::make(13);
  const Mat4 a = element_A(f);
  CHECK(psi_trace(a, Mat4::zero(f)) == 0);
  std::mt19937_64 rng(0x5eed0202);
  for (int k = 0; k < 20; ++k) CHECK(psi_trace(a, random_filtration_element(f, MPLevel::integer(1), rng)) == 0);

  const PAdic u = f.integer(5);
  const Mat4 id = Mat4::identity(f);
  CHECK(psi_trace(a, id + u * (Mat4::unit(f, 1, 3) + Mat4::unit(f, 2, 4))) == 10);
  CHECK(psi_trace(a, id + u * Mat4::unit(f, 2, 3)) == 0);
  CHECK(psi_trace(a, id + f.pi_power(1) * u * Mat4::unit(f, 3, 2)) == 5);
  CHECK_THROWS_AS(psi_trace(a, Mat4::unit(f, 4, 1)), NegativeValuation);
}

TEST_CASE("support of the test function") {
  const FieldConfig f = FieldConfig::make(13);
  Mat4 x = Mat4::zero(f);
  x(2, 3) = f.eps() * f.pi_power(-1);
  x(4, 1) = f.eps();
  CHECK(in_supp_f(f, x));
  Mat4 y = x;
  y(4, 1) = f.eps() + f.integer(1);
  CHECK_FALSE(in_supp_f(f, y));
  y = x;
  y(4, 1) = f.eps() + f.pi_power(1);
  CHECK(in_supp_f(f, y));

  CHECK(in_invariance_lattice(f, Mat4::zero(f)));
  CHECK(in_invariance_lattice(f, f.pi_power(-1) * Mat4::unit(f, 1, 3)));
  CHECK_FALSE(in_invariance_lattice(f, Mat4::unit(f, 4, 1)));
  CHECK_FALSE(in_invariance_lattice(f, f.pi_power(-1) * Mat4::unit(f, 2, 3)));
}

TEST_CASE("test function is invariant under the lattice") {
  const FieldConfig f = FieldConfig::make(13);
  std::mt19937_64 rng(0x5eed0203);
  Mat4 center = Mat4::zero(f);
  center(2, 3) = f.eps() * f.pi_power(-1);
  center(4, 1) = f.eps();
  int inside = 0;
  for (int k = 0; k < 200; ++k) {
    const Mat4 x = center + random_matrix(f, rng, k % 2 == 0 ? 0 : -1, 2);
    Mat4 y = Mat4::zero(f);
    for (int i = 1; i <= 4; ++i) {
      for (int j = 1; j <= 4; ++j) {
        const int lo = invariance_lattice_table()[static_cast<std::size_t>((i - 1) * 4 + j - 1)].min_val;
        y(i, j) = random_element(f, rng, lo, lo + 2);
      }
    }
    REQUIRE(in_invariance_lattice(f, y));
    CHECK(in_supp_f(f, x + y) == in_supp_f(f, x));
    if (in_supp_f(f, x)) ++inside;
  }
  CHECK(inside > 20);
  CHECK(inside < 180);
}

TEST_CASE("filtration levels are nested groups") {
  const FieldConfig f = FieldConfig::make(13);
  std::mt19937_64 rng(0x5eed0204);
  for (MPLevel r : kLevels) {
    CAPTURE(r.to_string());
    for (int k = 0; k < 50; ++k) {
      const Mat4 g = random_filtration_element(f, r, rng);
      const Mat4 h = random_filtration_element(f, r, rng);
      CHECK(is_symplectic(f, g));
      CHECK(mp_group_member(g, r));
      CHECK(mp_group_member(g * h, r));
      CHECK(mp_group_member(symplectic_inverse(f, g), r));
      CHECK(symplectic_inverse(f, g) * g == Mat4::identity(f));
      for (int lower = 0; lower < r.halves; ++lower) CHECK(mp_group_member(g, MPLevel{lower}));
    }
  }
}

TEST_CASE("level one is normal in level one half") {
  const FieldConfig f = FieldConfig::make(13);
  std::mt19937_64 rng(0x5eed0205);
  for (int k = 0; k < 100; ++k) {
    const Mat4 g = random_filtration_element(f, MPLevel::half(0), rng);
    const Mat4 h = random_filtration_element(f, MPLevel::integer(1), rng);
    CHECK(mp_group_member(g * h * symplectic_inverse(f, g), MPLevel::integer(1)));
  }
}

TEST_CASE("conjugation preserves the algebra and the trace form") {
  const FieldConfig f = FieldConfig::make(13);
  std::mt19937_64 rng(0x5eed0206);
  for (int k = 0; k < 100; ++k) {
    const Mat4 g = random_symplectic(f, rng);
    REQUIRE(is_symplectic(f, g));
    const Mat4 x = random_algebra_element(f, rng, -1, 1);
    const Mat4 y = random_algebra_element(f, rng, -1, 1);
    const Mat4 gx = ad(g, x), gy = ad(g, y);
    CHECK(is_in_algebra(f, gx));
    CHECK((gx * gy).trace() == (x * y).trace());
  }
}

TEST_CASE("kostant slices") {
  for (std::uint32_t p : {13U, 17U, 29U}) {
    const FieldConfig f = FieldConfig::make(p);
    const PAdic pinv = f.pi_power(-1);
    for (const PAdic& d : {-pinv, f.i_unit / f.integer(2), f.integer(1), f.eps() * f.pi_power(1)}) {
      const Mat4 fd = kostant_completion(f, d);
      const Mat4 nd = regular_rep(f, d);
      const Mat4 h = Mat4::diagonal(f.integer(-3), f.integer(-1), f.integer(1), f.integer(3));
      CHECK(is_in_algebra(f, fd));
      CHECK(commutator(h, nd) == f.integer(2) * nd);
      CHECK(commutator(h, fd) == f.integer(-2) * fd);
      CHECK(commutator(nd, fd) == h);
      CHECK(kostant_slice_dimension(f, d) == 2);
      CHECK(in_kostant_slice(f, nd, d));
      CHECK(in_kostant_slice(f, nd + f.integer(7) * Mat4::unit(f, 1, 4) + f.integer(2) * fd, d));
      CHECK_FALSE(in_kostant_slice(f, nd + Mat4::unit(f, 2, 3), d));
    }
    CHECK(in_kostant_slice(f, ad(canonical_element(f, "w_kostant"), element_A(f)), -pinv));
  }
}
