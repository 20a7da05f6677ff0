#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <iostream>

#include "wfs/papercheck.hpp"

using namespace wfs;

namespace {

bool has_note(const CheckReport& r, const std::string& needle) {
  return std::any_of(r.notes.begin(), r.notes.end(),
                     [&](const std::string& n) { return n.find(needle) != std::string::npos; });
}

void show(const CheckReport& r) {
  if (r.passed) return;
  std::cerr << r.check_id << " @" << r.p << ": " << r.witness << "\n";
  for (const auto& n : r.notes) std::cerr << "  " << n << "\n";
}

}  // namespace

TEST_CASE("limit family reaches e_abc") {
  const FieldConfig f = FieldConfig::make(13);
  const CheckReport r = check_lemma_quad_forward(f, f.eps(), f.eps(), f.pi_power(1), f.pi_power(2), 3);
  show(r);
  CHECK(r.passed);
  CHECK(r.witness.find("valuation gap = 3") != std::string::npos);

  const CheckReport hyp = check_lemma_quad_forward(f, f.integer(1), f.integer(1), f.zero(), f.integer(-1), 5);
  show(hyp);
  CHECK(hyp.passed);

  const FieldConfig g = FieldConfig::make(13);
  CHECK_THROWS_AS(check_lemma_quad_forward(g, g.pi_power(1), g.integer(1), g.zero(), g.eps(), 2), NotRepresentable);
  CHECK_THROWS_AS(check_lemma_quad_forward(g, g.integer(1), g.integer(1), g.zero(), g.integer(-1), 0),
                  PreconditionViolated);
}

TEST_CASE("valuation gap grows linearly in k") {
  const FieldConfig f = FieldConfig::make(13);
  // A form needing a nontrivial basis change: v0 = e2 does not work for d = -1.
  const PAdic a = f.eps(), b = f.integer(1), c = f.integer(3), d = f.integer(-1);
  REQUIRE(represents(QuadraticForm::from_subregular(a, b, c), d));
  int previous = -1;
  for (int k = 1; k <= 6; ++k) {
    CAPTURE(k);
    const CheckReport r = check_lemma_quad_forward(f, d, a, b, c, k);
    show(r);
    CHECK(r.passed);
    const auto pos = r.witness.find("valuation gap = ");
    REQUIRE(pos != std::string::npos);
    const int gap = std::stoi(r.witness.substr(pos + 16));
    CHECK(gap >= k);
    if (previous >= 0) CHECK(gap - previous == 1);
    previous = gap;
  }
}

TEST_CASE("displayed limit family") {
  for (std::uint32_t p : {13U, 17U}) {
    const CheckReport r = check_limit_family_display(FieldConfig::make(p));
    show(r);
    CHECK(r.passed);
    CHECK(has_note(r, "middle factor has (4,3) = 1"));
    CHECK(has_note(r, "product with n_d (4,3)"));
    CHECK(has_note(r, "literal product (4,1)"));
  }
}

TEST_CASE("regular conjugations") {
  for (std::uint32_t p : {13U, 17U, 29U}) {
    const FieldConfig f = FieldConfig::make(p);
    const auto reports = check_prop_reg_conjugations(f);
    REQUIRE(reports.size() == 3);
    for (const auto& r : reports) {
      show(r);
      CHECK(r.passed);
    }
    CHECK(reports[0].notes.empty());
    CHECK(reports[1].notes.empty());
    CHECK(reports[2].notes.size() == 2);
    CHECK(has_note(reports[2], "(4,3): displayed 1, recomputed -1"));
    CHECK(has_note(reports[2], "not in sp4"));
  }
}

TEST_CASE("diagonal twist") {
  for (std::uint32_t p : {13U, 17U, 29U, 37U, 41U}) {
    const CheckReport r = check_ad_diagonal_twist(FieldConfig::make(p));
    show(r);
    CHECK(r.passed);
  }
}

TEST_CASE("rescaled nilpotent limits") {
  for (std::uint32_t p : {13U, 17U}) {
    const FieldConfig f = FieldConfig::make(p);
    const CheckReport r = check_lemma_nil_scaling(f, 60, 7);
    show(r);
    CHECK(r.passed);
    CHECK(has_note(r, "samples outside supp(f) skipped"));
    CHECK(has_note(r, "m^(2n-1)"));
  }
  const FieldConfig f = FieldConfig::make(13);
  const CheckReport center_only = check_lemma_nil_scaling(f, 1);
  CHECK(center_only.passed);
  CHECK(center_only.notes.empty());
  CHECK_THROWS_AS(check_lemma_nil_scaling(f, 0), PreconditionViolated);
}

TEST_CASE("residue construction lands in supp f") {
  for (std::uint32_t p : {13U, 17U, 29U, 37U, 41U}) {
    const FieldConfig f = FieldConfig::make(p);
    for (bool perturb : {false, true}) {
      const CheckReport r = check_lemma_rs_construction(f, perturb);
      show(r);
      CHECK(r.passed);
      CHECK(r.notes.empty());
    }
  }
}

TEST_CASE("A and the Kostant chain") {
  const FieldConfig f = FieldConfig::make(13);
  const CheckReport r = check_A_in_kostant_chain(f);
  show(r);
  CHECK(r.passed);
  CHECK(check_A_in_kostant_chain(FieldConfig::make(13, 4)).passed);
  CHECK(check_A_in_kostant_chain(FieldConfig::make(29, 4)).passed);

  Mat4 tampered = element_A(f);
  tampered(1, 4) = f.zero();
  const CheckReport bad = check_A_in_kostant_chain(f, tampered);
  CHECK_FALSE(bad.passed);
  CHECK(bad.witness.find("FAIL") != std::string::npos);
  CHECK(has_note(bad, "A^4"));
}

TEST_CASE("representability across all pairs") {
  for (std::uint32_t p : {13U, 17U}) {
    const CheckReport r = check_representability_pairs(FieldConfig::make(p));
    show(r);
    CHECK(r.passed);
    CHECK(r.witness.rfind("28 pairs", 0) == 0);
  }
  const CheckReport sabotaged = check_representability_pairs(FieldConfig::make(13), &sabotaged_hilbert_symbol);
  CHECK_FALSE(sabotaged.passed);
  CHECK(has_note(sabotaged, "quadform: represents"));
}

TEST_CASE("run_all") {
  const auto reports = run_all({13});
  CHECK(reports.size() == 12);
  for (const auto& r : reports) {
    show(r);
    CHECK(r.passed);
  }
  CheckOptions sabotage;
  sabotage.hilbert = &sabotaged_hilbert_symbol;
  const auto bad = run_all({13}, sabotage);
  const auto failed = std::count_if(bad.begin(), bad.end(), [](const CheckReport& r) { return !r.passed; });
  CHECK(failed == 1);
  CHECK(std::find_if(bad.begin(), bad.end(), [](const CheckReport& r) { return !r.passed; })->check_id ==
        "representability_pairs");

  const auto again = run_all({13});
  for (std::size_t k = 0; k < reports.size(); ++k) {
    CHECK(reports[k].witness == again[k].witness);
    CHECK(reports[k].notes == again[k].notes);
  }
}
