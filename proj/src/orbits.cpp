#include "wfs/orbits.hpp"

#include <algorithm>

namespace wfs {

std::string to_string(Partition p) {
  switch (p) {
    case Partition::Zero: return "[1^4]";
    case Partition::Minimal: return "[2,1^2]";
    case Partition::Subregular: return "[2^2]";
    case Partition::Regular: return "[4]";
  }
  return "?";
}

NilpotentOrbit NilpotentOrbit::subregular(SquareClass disc, int hasse) {
  if (hasse != 1 && hasse != -1) throw BadConfig("hasse invariant must be +1 or -1");
  // -1 is a square, so a binary form of discriminant One is hyperbolic.
  if (disc == SquareClass::One && hasse == -1) {
    throw BadConfig("no binary form has disc 1 and hasse -1");
  }
  return {Partition::Subregular, SquareClass::One, {2, disc, hasse}};
}

std::string NilpotentOrbit::label() const {
  switch (kind) {
    case Partition::Zero: return "zero";
    case Partition::Minimal: return "min:" + to_string(cls);
    case Partition::Regular: return "reg:" + to_string(cls);
    case Partition::Subregular:
      return "sub:disc=" + to_string(form.disc) + ",hasse=" + (form.hasse > 0 ? "+1" : "-1");
  }
  return "?";
}

NilpotentOrbit parse_orbit(const std::string& spec) {
  if (spec == "zero") return NilpotentOrbit::zero();
  if (spec.rfind("reg:", 0) == 0) return NilpotentOrbit::regular(square_class_from_string(spec.substr(4)));
  if (spec.rfind("min:", 0) == 0) return NilpotentOrbit::minimal(square_class_from_string(spec.substr(4)));
  const std::string disc_key = "sub:disc=", hasse_key = ",hasse=";
  if (spec.rfind(disc_key, 0) == 0) {
    const std::size_t comma = spec.find(hasse_key);
    if (comma != std::string::npos) {
      const SquareClass disc = square_class_from_string(spec.substr(disc_key.size(), comma - disc_key.size()));
      const std::string h = spec.substr(comma + hasse_key.size());
      if (h == "+1" || h == "-1") return NilpotentOrbit::subregular(disc, h == "+1" ? 1 : -1);
    }
  }
  throw BadConfig("unrecognised orbit spec '" + spec + "'");
}

const std::vector<NilpotentOrbit>& all_orbits() {
  static const std::vector<NilpotentOrbit> orbits = [] {
    std::vector<NilpotentOrbit> v{NilpotentOrbit::zero()};
    for (SquareClass c : kAllSquareClasses) v.push_back(NilpotentOrbit::minimal(c));
    v.push_back(NilpotentOrbit::subregular(SquareClass::One, 1));
    for (SquareClass c : kAllSquareClasses) {
      if (c == SquareClass::One) continue;
      v.push_back(NilpotentOrbit::subregular(c, 1));
      v.push_back(NilpotentOrbit::subregular(c, -1));
    }
    for (SquareClass c : kAllSquareClasses) v.push_back(NilpotentOrbit::regular(c));
    return v;
  }();
  return orbits;
}

int orbit_index(const NilpotentOrbit& o) {
  const auto& all = all_orbits();
  const auto it = std::find(all.begin(), all.end(), o);
  if (it == all.end()) throw PreconditionViolated("orbit outside the catalogue: " + o.label());
  return static_cast<int>(it - all.begin());
}

QuadraticForm orbit_form(const FieldConfig& f, const NilpotentOrbit& o) {
  switch (o.kind) {
    case Partition::Zero: return QuadraticForm::diagonal({});
    case Partition::Minimal:
    case Partition::Regular: return QuadraticForm::diagonal({f.representative(o.cls)});
    case Partition::Subregular:
      for (SquareClass a : kAllSquareClasses) {
        const QuadraticForm q = QuadraticForm::diagonal({f.representative(a), f.representative(a * o.form.disc)});
        if (invariants(q) == o.form) return q;
      }
      break;
  }
  throw PreconditionViolated("no form realises " + o.label());
}

Mat4 orbit_representative(const FieldConfig& f, const NilpotentOrbit& o) {
  switch (o.kind) {
    case Partition::Zero: return Mat4::zero(f);
    case Partition::Minimal: return f.representative(o.cls) * Mat4::unit(f, 4, 1);
    case Partition::Regular: return regular_rep(f, f.representative(o.cls));
    case Partition::Subregular: {
      const QuadraticForm q = orbit_form(f, o);
      return subregular_rep(f, q.at(1, 1), f.zero(), q.at(0, 0));
    }
  }
  return Mat4::zero(f);
}

namespace {

// The form v -> <v, Y v>, i.e. the Gram matrix J Y (symmetric for Y in sp4 and its odd powers).
FormInvariants pairing_invariants(const FieldConfig& f, const Mat4& y) {
  const Mat4 jy = symplectic_form(f) * y;
  std::vector<PAdic> g;
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) g.push_back(jy(i, j));
  }
  return invariants(QuadraticForm(4, std::move(g)));
}

}  // namespace

NilpotentOrbit classify(const FieldConfig& f, const Mat4& X) {
  if (!is_in_algebra(f, X)) throw PreconditionViolated("classify needs an element of sp4");
  if (!is_nilpotent(X)) throw NotNilpotent("X^4 != 0");
  switch (X.rank()) {
    case 0: return NilpotentOrbit::zero();
    case 1: return NilpotentOrbit::minimal(pairing_invariants(f, X).disc);
    case 2: {
      if (!(X * X).is_zero()) throw PreconditionViolated("rank-2 nilpotent with X^2 != 0 is not in sp4");
      const FormInvariants inv = pairing_invariants(f, X);
      if (inv.rank != 2) throw PrecisionLoss("subregular form has unexpected rank");
      return NilpotentOrbit::subregular(inv.disc, inv.hasse);
    }
    default: return NilpotentOrbit::regular(pairing_invariants(f, X * X * X).disc);
  }
}

std::string to_string(TruthValue3 t) {
  switch (t) {
    case TruthValue3::True: return "True";
    case TruthValue3::False: return "False";
    case TruthValue3::Unknown: return "Unknown";
  }
  return "?";
}

bool strictly_below_zariski(const NilpotentOrbit& o1, const NilpotentOrbit& o2) { return o1.kind < o2.kind; }

TruthValue3 strictly_below_rational(const FieldConfig& f, const NilpotentOrbit& o1, const NilpotentOrbit& o2,
                                    HilbertFn hilbert) {
  if (o1 == o2) return TruthValue3::False;
  if (o1.kind == Partition::Zero) return TruthValue3::True;
  if (!strictly_below_zariski(o1, o2)) return TruthValue3::False;
  if (o1.kind == Partition::Subregular && o2.kind == Partition::Regular) {
    return represents(orbit_form(f, o1), f.representative(o2.cls), hilbert) ? TruthValue3::True : TruthValue3::False;
  }
  return TruthValue3::Unknown;
}

std::string to_string(GermStatus s) {
  switch (s) {
    case GermStatus::Nonzero: return "Nonzero";
    case GermStatus::Zero: return "Zero";
    case GermStatus::Unknown: return "Unknown";
  }
  return "?";
}

NilpotentOrbit orbit_of_e(const FieldConfig& f) {
  const PAdic eps = f.eps();
  const FormInvariants inv = invariants(QuadraticForm::diagonal({eps, -eps * f.pi_power(-1)}));
  return NilpotentOrbit::subregular(inv.disc, inv.hasse);
}

std::vector<GermSupportEntry> germ_support(const FieldConfig& f, HilbertFn hilbert) {
  const PAdic eps = f.eps();
  const QuadraticForm e_form = QuadraticForm::diagonal({eps, -eps * f.pi_power(-1)});
  const NilpotentOrbit e_orbit = orbit_of_e(f);
  std::vector<GermSupportEntry> out;
  for (const NilpotentOrbit& o : all_orbits()) {
    GermStatus s = GermStatus::Unknown;
    if (o.kind == Partition::Regular) {
      s = represents(e_form, f.representative(o.cls), hilbert) ? GermStatus::Zero : GermStatus::Nonzero;
    } else if (o == e_orbit) {
      s = GermStatus::Nonzero;
    }
    out.push_back({o, s});
  }
  return out;
}

NilpotentOrbit scale_by_depth(const FieldConfig& f, const NilpotentOrbit& o, int n) {
  const bool odd = n % 2 != 0;
  switch (o.kind) {
    case Partition::Zero: return o;
    case Partition::Minimal:
    case Partition::Regular: {
      NilpotentOrbit r = o;
      if (odd) r.cls = r.cls * SquareClass::Pi;
      return r;
    }
    case Partition::Subregular: {
      const FormInvariants inv = invariants(orbit_form(f, o).scaled(f.pi_power(-n)));
      return NilpotentOrbit::subregular(inv.disc, inv.hasse);
    }
  }
  return o;
}

WavefrontResult wavefront(const FieldConfig& f, const std::vector<GermSupportEntry>& germs, int depth) {
  std::vector<NilpotentOrbit> nonzero, unknown;
  for (const GermSupportEntry& g : germs) {
    if (g.status == GermStatus::Nonzero) nonzero.push_back(g.orbit);
    if (g.status == GermStatus::Unknown) unknown.push_back(g.orbit);
  }

  WavefrontResult r;
  r.depth = depth;
  for (const NilpotentOrbit& o : nonzero) {
    const bool zar_max = std::none_of(nonzero.begin(), nonzero.end(),
                                      [&](const NilpotentOrbit& x) { return strictly_below_zariski(o, x); });
    bool rat_max = true;
    for (const NilpotentOrbit& x : nonzero) {
      const TruthValue3 t = strictly_below_rational(f, o, x);
      if (t == TruthValue3::Unknown) {
        throw InconsistentOrder("analytic order between " + o.label() + " and " + x.label() + " is unknown");
      }
      if (t == TruthValue3::True) rat_max = false;
    }
    if (zar_max) r.wf_zar.push_back(o);
    if (rat_max) r.wf_rat_contains.push_back(o);
  }

  r.caveats.push_back("the analytic set lists orbits it contains; equality is not claimed");
  for (const NilpotentOrbit& u : unknown) {
    const bool zar_dominated = std::any_of(nonzero.begin(), nonzero.end(),
                                           [&](const NilpotentOrbit& x) { return strictly_below_zariski(u, x); });
    if (!zar_dominated) {
      r.caveats.push_back(scale_by_depth(f, u, depth).label() +
                          ": germ status unknown and not below a Nonzero orbit; the Zariski set may be incomplete");
    }
    const bool rat_dominated = std::any_of(r.wf_rat_contains.begin(), r.wf_rat_contains.end(),
                                           [&](const NilpotentOrbit& x) {
                                             return strictly_below_rational(f, u, x) == TruthValue3::True;
                                           });
    if (!rat_dominated) {
      r.caveats.push_back(scale_by_depth(f, u, depth).label() +
                          ": germ status unknown and not known to lie below a listed orbit in the analytic order");
    }
  }

  auto shift_and_sort = [&](std::vector<NilpotentOrbit>& v) {
    for (NilpotentOrbit& o : v) o = scale_by_depth(f, o, depth);
    std::sort(v.begin(), v.end(),
              [](const NilpotentOrbit& a, const NilpotentOrbit& b) { return orbit_index(a) < orbit_index(b); });
  };
  shift_and_sort(r.wf_zar);
  shift_and_sort(r.wf_rat_contains);
  return r;
}

WavefrontResult wavefront(const FieldConfig& f, int depth) { return wavefront(f, germ_support(f), depth); }

std::vector<HasseEdge> hasse_diagram(const FieldConfig& f, ClosureOrder order, HilbertFn hilbert) {
  std::vector<HasseEdge> edges;
  for (const NilpotentOrbit& a : all_orbits()) {
    for (const NilpotentOrbit& b : all_orbits()) {
      if (!strictly_below_zariski(a, b)) continue;
      const TruthValue3 v =
          order == ClosureOrder::Zariski ? TruthValue3::True : strictly_below_rational(f, a, b, hilbert);
      edges.push_back({a, b, v});
    }
  }
  return edges;
}

}  // namespace wfs
