#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "wfs/orbits.hpp"

using namespace wfs;

namespace {

const NilpotentOrbit kSubE = NilpotentOrbit::subregular(SquareClass::Pi, -1);

std::vector<std::string> labels(const std::vector<NilpotentOrbit>& v) {
  std::vector<std::string> out;
  for (const auto& o : v) out.push_back(o.label());
  return out;
}

}  // namespace

TEST_CASE("orbit catalogue and labels") {
  const auto& all = all_orbits();
  CHECK(all.size() == 16);
  int counts[4] = {0, 0, 0, 0};
  for (const auto& o : all) {
    ++counts[static_cast<int>(o.kind)];
    CHECK(parse_orbit(o.label()) == o);
  }
  CHECK(counts[0] == 1);
  CHECK(counts[1] == 4);
  CHECK(counts[2] == 7);
  CHECK(counts[3] == 4);
  CHECK(parse_orbit("sub:disc=pi,hasse=-1") == kSubE);
  CHECK(parse_orbit("reg:epspi") == NilpotentOrbit::regular(SquareClass::EpsPi));
  for (const char* bad : {"sub:disc=1,hasse=-1", "reg:2", "sub:disc=pi", "sub:disc=pi,hasse=1", "", "min:"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_orbit(bad), BadConfig);
  }
}

TEST_CASE("classification of named elements") {
  for (std::uint32_t p : {13U, 17U, 29U}) {
    const FieldConfig f = FieldConfig::make(p);
    CHECK(classify(f, Mat4::zero(f)) == NilpotentOrbit::zero());
    CHECK(classify(f, canonical_element(f, "e")) == kSubE);
    CHECK(orbit_of_e(f) == kSubE);
    for (SquareClass c : kAllSquareClasses) {
      CHECK(classify(f, regular_rep(f, f.representative(c))) == NilpotentOrbit::regular(c));
    }
    for (const auto& o : all_orbits()) CHECK(classify(f, orbit_representative(f, o)) == o);
    CHECK_THROWS_AS(classify(f, element_A(f)), NotNilpotent);
    CHECK_THROWS_AS(classify(f, Mat4::unit(f, 2, 1)), PreconditionViolated);
  }
}

TEST_CASE("classification is conjugation invariant") {
  const FieldConfig f = FieldConfig::make(13);
  std::mt19937_64 rng(0x5eed0301);
  std::vector<Mat4> reps;
  for (const auto& o : all_orbits()) reps.push_back(orbit_representative(f, o));
  reps.push_back(canonical_element(f, "e"));
  for (int k = 0; k < 100; ++k) {
    const Mat4 g = random_symplectic(f, rng);
    for (const Mat4& x : reps) CHECK(classify(f, ad(g, x)) == classify(f, x));
  }
}

TEST_CASE("zariski order") {
  CHECK(strictly_below_zariski(kSubE, NilpotentOrbit::regular(SquareClass::Pi)));
  CHECK_FALSE(strictly_below_zariski(NilpotentOrbit::regular(SquareClass::One), NilpotentOrbit::regular(SquareClass::Pi)));
  CHECK(strictly_below_zariski(NilpotentOrbit::zero(), NilpotentOrbit::minimal(SquareClass::One)));
}

TEST_CASE("rational order") {
  const FieldConfig f = FieldConfig::make(13);
  CHECK(strictly_below_rational(f, kSubE, NilpotentOrbit::regular(SquareClass::Pi)) == TruthValue3::False);
  CHECK(strictly_below_rational(f, kSubE, NilpotentOrbit::regular(SquareClass::Eps)) == TruthValue3::True);
  CHECK(strictly_below_rational(f, NilpotentOrbit::minimal(SquareClass::One), NilpotentOrbit::regular(SquareClass::One)) ==
        TruthValue3::Unknown);
  CHECK(strictly_below_rational(f, kSubE, kSubE) == TruthValue3::False);
  CHECK(strictly_below_rational(f, NilpotentOrbit::zero(), kSubE) == TruthValue3::True);
  CHECK(strictly_below_rational(f, NilpotentOrbit::regular(SquareClass::One), kSubE) == TruthValue3::False);
}

TEST_CASE("rational order refines the zariski order") {
  for (std::uint32_t p : {13U, 17U, 29U}) {
    const FieldConfig f = FieldConfig::make(p);
    for (const auto& a : all_orbits()) {
      for (const auto& b : all_orbits()) {
        const TruthValue3 t = strictly_below_rational(f, a, b);
        if (t == TruthValue3::True) CHECK(strictly_below_zariski(a, b));
        if (t == TruthValue3::Unknown) CHECK(a.kind == Partition::Minimal);
      }
    }
  }
}

TEST_CASE("germ support") {
  for (std::uint32_t p : {13U, 17U, 29U, 37U, 41U}) {
    const FieldConfig f = FieldConfig::make(p);
    std::vector<SquareClass> nonzero_regular, zero_regular;
    for (const auto& g : germ_support(f)) {
      if (g.orbit.kind == Partition::Regular) {
        (g.status == GermStatus::Nonzero ? nonzero_regular : zero_regular).push_back(g.orbit.cls);
        CHECK(g.status != GermStatus::Unknown);
      } else if (g.orbit == kSubE) {
        CHECK(g.status == GermStatus::Nonzero);
      } else {
        CHECK(g.status == GermStatus::Unknown);
      }
    }
    CHECK(nonzero_regular == std::vector<SquareClass>{SquareClass::One, SquareClass::Pi});
    CHECK(zero_regular == std::vector<SquareClass>{SquareClass::Eps, SquareClass::EpsPi});
    CHECK(square_class(-f.pi_power(-1)) == SquareClass::Pi);
    CHECK(square_class(f.i_unit / f.integer(2)) == SquareClass::One);
  }
}

TEST_CASE("unknown orbits sit below a nonzero orbit in the zariski order") {
  const FieldConfig f = FieldConfig::make(13);
  const auto germs = germ_support(f);
  for (const auto& u : germs) {
    if (u.status != GermStatus::Unknown) continue;
    CHECK(std::any_of(germs.begin(), germs.end(), [&](const GermSupportEntry& x) {
      return x.status == GermStatus::Nonzero && strictly_below_zariski(u.orbit, x.orbit);
    }));
  }
}

TEST_CASE("wavefront sets") {
  for (std::uint32_t p : {13U, 17U, 29U}) {
    const FieldConfig f = FieldConfig::make(p);
    const WavefrontResult w = wavefront(f, 0);
    CHECK(labels(w.wf_zar) == std::vector<std::string>{"reg:1", "reg:pi"});
    CHECK(labels(w.wf_rat_contains) == std::vector<std::string>{"sub:disc=pi,hasse=-1", "reg:1", "reg:pi"});
    CHECK(std::find(w.wf_zar.begin(), w.wf_zar.end(), kSubE) == w.wf_zar.end());
    CHECK(w.caveats.size() == 5);

    const WavefrontResult w1 = wavefront(f, 1);
    CHECK(labels(w1.wf_zar) == std::vector<std::string>{"reg:1", "reg:pi"});
    CHECK(labels(w1.wf_rat_contains) == std::vector<std::string>{"sub:disc=pi,hasse=-1", "reg:1", "reg:pi"});
    for (std::size_t k = 0; k < w.wf_rat_contains.size(); ++k) {
      CHECK(std::find(w1.wf_rat_contains.begin(), w1.wf_rat_contains.end(),
                      scale_by_depth(f, w.wf_rat_contains[k], 1)) != w1.wf_rat_contains.end());
    }

    const WavefrontResult w2 = wavefront(f, 2);
    CHECK(w2.wf_zar == w.wf_zar);
    CHECK(w2.wf_rat_contains == w.wf_rat_contains);
    CHECK(w2.caveats == w.caveats);
  }
}

TEST_CASE("wavefront on synthetic germ tables") {
  const FieldConfig f = FieldConfig::make(13);
  std::vector<GermSupportEntry> only_regular;
  for (const auto& o : all_orbits()) {
    const bool nz = o == NilpotentOrbit::regular(SquareClass::One) || o == NilpotentOrbit::regular(SquareClass::Pi);
    only_regular.push_back({o, nz ? GermStatus::Nonzero : GermStatus::Zero});
  }
  const WavefrontResult w = wavefront(f, only_regular, 0);
  CHECK(w.wf_zar == w.wf_rat_contains);
  CHECK(labels(w.wf_zar) == std::vector<std::string>{"reg:1", "reg:pi"});

  std::vector<GermSupportEntry> clash = only_regular;
  clash.push_back({NilpotentOrbit::minimal(SquareClass::Eps), GermStatus::Nonzero});
  CHECK_THROWS_AS(wavefront(f, clash, 0), InconsistentOrder);
}

TEST_CASE("depth scaling") {
  const FieldConfig f = FieldConfig::make(13);
  CHECK(scale_by_depth(f, NilpotentOrbit::regular(SquareClass::One), 2) == NilpotentOrbit::regular(SquareClass::One));
  CHECK(scale_by_depth(f, NilpotentOrbit::regular(SquareClass::One), 1) == NilpotentOrbit::regular(SquareClass::Pi));
  CHECK(scale_by_depth(f, NilpotentOrbit::regular(SquareClass::Eps), 1) == NilpotentOrbit::regular(SquareClass::EpsPi));
  const PAdic eps = f.eps();
  const FormInvariants scaled =
      invariants(QuadraticForm::diagonal({eps, -eps * f.pi_power(-1)}).scaled(f.pi_power(-1)));
  CHECK(scale_by_depth(f, kSubE, 1) == NilpotentOrbit::subregular(scaled.disc, scaled.hasse));
  for (const auto& o : all_orbits()) {
    CHECK(scale_by_depth(f, o, 2) == o);
    CHECK(scale_by_depth(f, scale_by_depth(f, o, 1), 1) == o);
    CHECK(scale_by_depth(f, o, 0) == o);
  }
  // Scaling agrees with classifying the scaled representative.
  for (const auto& o : all_orbits()) {
    CHECK(classify(f, f.pi_power(-1) * orbit_representative(f, o)) == scale_by_depth(f, o, 1));
  }
}

TEST_CASE("closure diagrams") {
  const FieldConfig f = FieldConfig::make(13);
  const auto zar = hasse_diagram(f, ClosureOrder::Zariski);
  CHECK(zar.size() == 87);
  for (const auto& o : all_orbits()) {
    const bool maximal = std::none_of(zar.begin(), zar.end(), [&](const HasseEdge& e) { return e.from == o; });
    CHECK(maximal == (o.kind == Partition::Regular));
  }

  const auto rat = hasse_diagram(f, ClosureOrder::Rational);
  CHECK(rat.size() == zar.size());
  for (const auto& o : all_orbits()) {
    if (o.kind != Partition::Subregular) continue;
    const auto n = std::count_if(rat.begin(), rat.end(), [&](const HasseEdge& e) {
      return e.from == o && e.to.kind == Partition::Regular && e.value == TruthValue3::True;
    });
    CHECK(n == (o.form.disc == SquareClass::One ? 4 : 2));
  }
  for (const auto& e : rat) {
    if (e.value == TruthValue3::True) CHECK(strictly_below_zariski(e.from, e.to));
  }
}
