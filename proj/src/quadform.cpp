#include "wfs/quadform.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <sstream>

namespace wfs {

namespace {

struct FieldTag {
  std::uint32_t p = 0;
  int cap = 0;
};

FieldTag field_of(const std::vector<PAdic>& xs) {
  for (const PAdic& x : xs) {
    if (x.prime() != 0) return {x.prime(), x.cap()};
  }
  return {};
}

// dst |= src rotated left by s inside an m-bit ring.
class ResidueSet {
 public:
  explicit ResidueSet(std::uint64_t m) : m_(m), words_((m + 63) / 64, 0) {}

  void set(std::uint64_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::uint64_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  void or_rotated(const ResidueSet& src, std::uint64_t s) {
    shift_up_or(src, s);
    if (s != 0) shift_down_or(src, m_ - s);
    mask_tail();
  }

 private:
  void shift_up_or(const ResidueSet& src, std::uint64_t s) {
    const std::size_t ws = s / 64;
    const unsigned bs = s % 64;
    const std::size_t n = words_.size();
    for (std::size_t w = 0; w + ws < n; ++w) {
      words_[w + ws] |= src.words_[w] << bs;
      if (bs != 0 && w + ws + 1 < n) words_[w + ws + 1] |= src.words_[w] >> (64 - bs);
    }
  }

  void shift_down_or(const ResidueSet& src, std::uint64_t t) {
    const std::size_t wt = t / 64;
    const unsigned bt = t % 64;
    for (std::size_t w = wt; w < words_.size(); ++w) {
      words_[w - wt] |= src.words_[w] >> bt;
      if (bt != 0 && w >= wt + 1) words_[w - wt - 1] |= src.words_[w] << (64 - bt);
    }
  }

  void mask_tail() {
    const unsigned used = m_ % 64;
    if (used != 0) words_.back() &= (std::uint64_t{1} << used) - 1;
  }

  std::uint64_t m_;
  std::vector<std::uint64_t> words_;
};

}  // namespace

QuadraticForm::QuadraticForm(int dim, std::vector<PAdic> gram) : dim_(dim), gram_(std::move(gram)) {
  if (dim < 0 || gram_.size() != static_cast<std::size_t>(dim * dim)) {
    throw PreconditionViolated("Gram matrix size does not match dimension");
  }
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      if (!(at(i, j) == at(j, i))) throw PreconditionViolated("Gram matrix is not symmetric");
    }
  }
}

QuadraticForm QuadraticForm::diagonal(const std::vector<PAdic>& entries) {
  const int n = static_cast<int>(entries.size());
  const FieldTag f = field_of(entries);
  std::vector<PAdic> g(static_cast<std::size_t>(n * n), PAdic::exact_zero(f.p, f.cap));
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i * n + i)] = entries[static_cast<std::size_t>(i)];
  return {n, std::move(g)};
}

QuadraticForm QuadraticForm::from_subregular(const PAdic& a, const PAdic& b, const PAdic& c) {
  return {2, {c, b, b, a}};
}

bool QuadraticForm::is_diagonal() const {
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      if (i != j && !at(i, j).is_zero()) return false;
    }
  }
  return true;
}

PAdic QuadraticForm::evaluate(const std::vector<PAdic>& v) const {
  PAdic s;
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) s += v[static_cast<std::size_t>(i)] * at(i, j) * v[static_cast<std::size_t>(j)];
  }
  return s;
}

QuadraticForm QuadraticForm::scaled(const PAdic& s) const {
  std::vector<PAdic> g = gram_;
  for (PAdic& x : g) x *= s;
  return {dim_, std::move(g)};
}

QuadraticForm QuadraticForm::congruent(const std::vector<PAdic>& t) const {
  const auto n = static_cast<std::size_t>(dim_);
  std::vector<PAdic> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      PAdic s;
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) s += t[k * n + i] * gram_[k * n + l] * t[l * n + j];
      }
      out[i * n + j] = s;
      out[j * n + i] = s;
    }
  }
  return {dim_, std::move(out)};
}

std::string QuadraticForm::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < dim_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < dim_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

std::string to_string(const FormInvariants& inv) {
  return "(rank " + std::to_string(inv.rank) + ", disc " + to_string(inv.disc) + ", hasse " +
         (inv.hasse > 0 ? "+1" : "-1") + ")";
}

std::vector<PAdic> diagonalize(const QuadraticForm& q) {
  const int n = q.dim();
  std::vector<std::vector<PAdic>> g(static_cast<std::size_t>(n), std::vector<PAdic>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g[i][j] = q.at(i, j);
  }
  std::vector<int> active(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) active[static_cast<std::size_t>(i)] = i;

  std::vector<PAdic> out;
  int max_pivot_val = INT_MIN;
  while (!active.empty()) {
    int bi = -1, bj = -1, bv = kInfiniteValuation;
    for (int i : active) {
      for (int j : active) {
        if (j < i || g[i][j].is_zero()) continue;
        const int v = g[i][j].valuation();
        if (v < bv || (v == bv && i == j && bi != bj)) {
          bi = i;
          bj = j;
          bv = v;
        }
      }
    }
    if (bi < 0) break;

    if (bi != bj) {
      // Replace e_i by e_i + e_j; the new diagonal entry has the off-diagonal valuation.
      for (int k = 0; k < n; ++k) g[bi][k] += g[bj][k];
      for (int k = 0; k < n; ++k) g[k][bi] += g[k][bj];
    }
    const PAdic a = g[bi][bi];
    if (a.is_zero()) throw PrecisionLoss("pivot cancelled during diagonalization");
    for (int k : active) {
      if (k == bi) continue;
      const PAdic factor = g[k][bi] / a;
      for (int l : active) {
        if (l == bi) continue;
        g[k][l] -= factor * g[bi][l];
      }
    }
    for (int k : active) {
      if (k == bi) continue;
      g[k][bi] = PAdic::exact_zero(a.prime(), a.cap());
      g[bi][k] = g[k][bi];
    }
    out.push_back(a);
    max_pivot_val = std::max(max_pivot_val, a.valuation());
    active.erase(std::find(active.begin(), active.end(), bi));
  }

  for (int k : active) {
    for (int l : active) {
      if (g[k][l].absolute_precision() <= max_pivot_val) {
        throw PrecisionLoss("degenerate part not resolved below the pivot valuations; raise precision");
      }
    }
  }
  for (int k : active) out.push_back(g[k][k]);
  return out;
}

FormInvariants invariants(const QuadraticForm& q, HilbertFn hilbert) {
  std::vector<PAdic> diag = diagonalize(q);
  std::erase_if(diag, [](const PAdic& x) { return x.is_zero(); });
  FormInvariants inv;
  inv.rank = static_cast<int>(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) {
    inv.disc = inv.disc * square_class(diag[i]);
    for (std::size_t j = i + 1; j < diag.size(); ++j) inv.hasse *= hilbert(diag[i], diag[j]);
  }
  return inv;
}

FormInvariants compose_invariants(const FormInvariants& a, const FormInvariants& b, std::uint32_t p) {
  return {a.rank + b.rank, a.disc * b.disc, a.hasse * b.hasse * hilbert_symbol(a.disc, b.disc, p)};
}

bool is_isomorphic(const QuadraticForm& q1, const QuadraticForm& q2, HilbertFn hilbert) {
  return q1.dim() == q2.dim() && invariants(q1, hilbert) == invariants(q2, hilbert);
}

bool is_isotropic(const QuadraticForm& q, HilbertFn hilbert) {
  const FormInvariants inv = invariants(q, hilbert);
  if (inv.rank != q.dim()) throw DegenerateForm("isotropy is decided for non-degenerate forms only");
  std::vector<PAdic> entries;
  for (int i = 0; i < q.dim(); ++i) entries.push_back(q.at(i, i));
  const FieldTag f = field_of(entries);
  const PAdic minus_one = PAdic::from_int(f.p, f.cap, -1);
  switch (inv.rank) {
    case 0:
    case 1: return false;
    case 2: return inv.disc == square_class(minus_one);
    case 3: {
      const PAdic minus_disc = -class_representative(f.p, f.cap, inv.disc);
      return inv.hasse == hilbert(minus_one, minus_disc);
    }
    case 4: return !(inv.disc == SquareClass::One && inv.hasse == -hilbert(minus_one, minus_one));
    default: return true;
  }
}

bool represents(const QuadraticForm& q, const PAdic& d, HilbertFn hilbert) {
  if (d.is_zero()) throw ZeroInput("representability of zero");
  if (invariants(q, hilbert).rank != q.dim()) throw DegenerateForm("represents needs a non-degenerate form");
  return is_isotropic(direct_sum(q, QuadraticForm::diagonal({-d})), hilbert);
}

bool represents_oracle(const QuadraticForm& q, const PAdic& d) {
  if (d.is_zero()) throw ZeroInput("representability of zero");
  if (!q.is_diagonal()) throw PreconditionViolated("oracle needs a diagonal form");
  if (q.dim() + 1 > 4) throw PreconditionViolated("oracle handles dim(q) <= 3");

  std::vector<PAdic> coeffs;
  for (int i = 0; i < q.dim(); ++i) coeffs.push_back(q.at(i, i));
  coeffs.push_back(-d);

  const std::uint64_t p = d.prime();
  const std::uint64_t m = p * p * p;
  std::vector<std::uint64_t> reduced;
  for (const PAdic& c : coeffs) {
    if (c.is_zero()) throw DegenerateForm("oracle needs a non-degenerate form");
    if (c.relative_precision() < 3) throw PrecisionLoss("oracle needs three known digits per coefficient");
    const int parity = ((c.valuation() % 2) + 2) % 2;
    reduced.push_back(c.unit() % m * (parity ? p : 1) % m);
  }

  // values[unit][v]: some x with x % p != 0 (unit = 1) or x % p == 0 has c x^2 = v mod p^3.
  auto value_sets = [&](std::uint64_t coef) {
    std::vector<ResidueSet> values(2, ResidueSet(m));
    for (std::uint64_t x = 0; x < m; ++x) {
      const auto v = static_cast<std::uint64_t>(static_cast<unsigned __int128>(coef) * x % m * x % m);
      values[x % p != 0 ? 1 : 0].set(v);
    }
    return values;
  };

  // reach[primitive][r]: some partial vector has value r mod p^3. The first
  // coordinate seeds it directly and the last is matched by intersection.
  std::vector<ResidueSet> reach = value_sets(reduced.front());
  for (std::size_t k = 1; k + 1 < reduced.size(); ++k) {
    const std::vector<ResidueSet> values = value_sets(reduced[k]);
    std::vector<ResidueSet> next(2, ResidueSet(m));
    for (int prim = 0; prim < 2; ++prim) {
      if (reach[prim].empty()) continue;
      for (int unit_step = 0; unit_step < 2; ++unit_step) {
        for (std::uint64_t v = 0; v < m; ++v) {
          if (values[unit_step].test(v)) next[prim | unit_step].or_rotated(reach[prim], v);
        }
      }
    }
    reach = std::move(next);
  }
  const std::vector<ResidueSet> last = value_sets(reduced.back());
  for (int prim = 0; prim < 2; ++prim) {
    for (int unit_step = 0; unit_step < 2; ++unit_step) {
      if ((prim | unit_step) == 0) continue;
      for (std::uint64_t v = 0; v < m; ++v) {
        if (last[unit_step].test(v) && reach[prim].test((m - v) % m)) return true;
      }
    }
  }
  return false;
}

QuadraticForm direct_sum(const QuadraticForm& q1, const QuadraticForm& q2) {
  const int n = q1.dim() + q2.dim();
  std::vector<PAdic> all;
  for (int i = 0; i < q1.dim(); ++i) all.push_back(q1.at(i, i));
  for (int i = 0; i < q2.dim(); ++i) all.push_back(q2.at(i, i));
  const FieldTag f = field_of(all);
  std::vector<PAdic> g(static_cast<std::size_t>(n * n), PAdic::exact_zero(f.p, f.cap));
  for (int i = 0; i < q1.dim(); ++i) {
    for (int j = 0; j < q1.dim(); ++j) g[static_cast<std::size_t>(i * n + j)] = q1.at(i, j);
  }
  const int o = q1.dim();
  for (int i = 0; i < q2.dim(); ++i) {
    for (int j = 0; j < q2.dim(); ++j) g[static_cast<std::size_t>((o + i) * n + o + j)] = q2.at(i, j);
  }
  return {n, std::move(g)};
}

}  // namespace wfs
