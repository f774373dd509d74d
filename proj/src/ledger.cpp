#include "gravicat/ledger.hpp"

#include <algorithm>

#include "gravicat/error.hpp"

namespace gravicat {

long long expected_dimension(long long d, long long chi, long long sigma) {
  long long s = chi + sigma;
  if (s % 2 != 0)
    throw Error("ParityViolation", "chi + sigma must be even");
  return 8 * d - 3 * (s / 2);
}

long long ledger_degree(long long input_degree, long long d, long long chi, long long sigma) {
  return input_degree + expected_dimension(d, chi, sigma);
}

namespace {

std::vector<Int> binomial_row(long long n, long long kmax) {
  // C(n, 0..kmax) for n >= 0
  std::vector<Int> row(static_cast<std::size_t>(kmax) + 1, 0);
  row[0] = 1;
  for (long long k = 1; k <= kmax && k <= n; ++k)
    row[static_cast<std::size_t>(k)] =
        row[static_cast<std::size_t>(k - 1)] * Int(n - k + 1) / Int(k);
  return row;
}

std::vector<Int> multiset_row(long long n, long long kmax) {
  // C(n - 1 + k, k) for k = 0..kmax: weight-k monomials in n variables
  std::vector<Int> row(static_cast<std::size_t>(kmax) + 1, 0);
  row[0] = 1;
  for (long long k = 1; k <= kmax; ++k)
    row[static_cast<std::size_t>(k)] =
        row[static_cast<std::size_t>(k - 1)] * Int(n - 1 + k) / Int(k);
  return row;
}

} // namespace

std::map<long long, Int> sym_dimension_row(const BettiProfile& betti, long long weight) {
  for (long long bi : betti.b)
    if (bi < 0) throw Error("SchemaError", "Betti numbers must be nonnegative");
  std::map<long long, Int> empty_row;
  if (weight < 0) return empty_row;

  // table[w][t]: coefficient of s^w t^t in the truncated generating series
  // prod_{i even} (1 - s t^i)^{-b_i} * prod_{i odd} (1 + s t^i)^{b_i}
  long long tmax = 4 * weight;
  std::vector<std::vector<Int>> table(
      static_cast<std::size_t>(weight) + 1,
      std::vector<Int>(static_cast<std::size_t>(tmax) + 1, 0));
  table[0][0] = 1;

  for (int i = 0; i <= 4; ++i) {
    long long bi = betti.b[static_cast<std::size_t>(i)];
    if (bi == 0) continue;
    std::vector<Int> factor =
        i % 2 == 0 ? multiset_row(bi, weight) : binomial_row(bi, weight);
    std::vector<std::vector<Int>> next(
        static_cast<std::size_t>(weight) + 1,
        std::vector<Int>(static_cast<std::size_t>(tmax) + 1, 0));
    for (long long w = 0; w <= weight; ++w)
      for (long long t = 0; t <= tmax; ++t) {
        const Int& cur = table[static_cast<std::size_t>(w)][static_cast<std::size_t>(t)];
        if (cur == 0) continue;
        for (long long k = 0; w + k <= weight; ++k) {
          const Int& f = factor[static_cast<std::size_t>(k)];
          if (f == 0) continue;
          long long tt = t + k * i;
          if (tt > tmax) break;
          next[static_cast<std::size_t>(w + k)][static_cast<std::size_t>(tt)] += cur * f;
        }
      }
    table = std::move(next);
  }

  std::map<long long, Int> row;
  for (long long t = 0; t <= tmax; ++t) {
    const Int& c = table[static_cast<std::size_t>(weight)][static_cast<std::size_t>(t)];
    if (c != 0) row[t] = c;
  }
  return row;
}

Int sym_dimension(const BettiProfile& betti, long long weight, long long degree) {
  auto row = sym_dimension_row(betti, weight);
  auto it = row.find(degree);
  return it == row.end() ? Int(0) : it->second;
}

void check_ledger_shape(const Ledger& l) {
  if (l.entries.empty())
    throw Error("MissingCharge", "ledger has no entries; charge 0 is required");
  for (std::size_t i = 0; i < l.entries.size(); ++i)
    if (l.entries[i].d != static_cast<long long>(i))
      throw Error("MissingCharge", "ledger charges must run 0,1,... without gaps (found " +
                                       std::to_string(l.entries[i].d) + " at position " +
                                       std::to_string(i) + ")");
  for (const auto& e : l.entries)
    if (e.input_degree != l.entries[0].input_degree)
      throw Error("SchemaError", "ledger entries must share one input degree");
}

namespace {

// Largest generator index used per degree, so a second ledger's generators
// can be shifted past them.
std::map<int, int> generator_footprint(const Ledger& l) {
  std::map<int, int> maxidx;
  for (const auto& e : l.entries)
    for (const auto& [m, c] : e.value.terms())
      for (const auto& [g, p] : m.factors) {
        auto it = maxidx.find(g.degree);
        if (it == maxidx.end())
          maxidx[g.degree] = g.index;
        else
          it->second = std::max(it->second, g.index);
      }
  return maxidx;
}

SymElement shift_generators(const SymElement& v, const std::map<int, int>& offsets) {
  SymElement out;
  for (const auto& [m, c] : v.terms()) {
    Monomial shifted = m;
    for (auto& [g, p] : shifted.factors) {
      auto it = offsets.find(g.degree);
      if (it != offsets.end()) g.index += it->second;
    }
    std::sort(shifted.factors.begin(), shifted.factors.end());
    out.add_term(shifted, c); // shifting preserves order within each degree: no signs
  }
  return out;
}

} // namespace

Ledger convolve_disjoint(const Ledger& a, const Ledger& b, long long dmax) {
  if (dmax < 0) throw Error("SchemaError", "dmax must be nonnegative");
  check_ledger_shape(a);
  check_ledger_shape(b);

  // Disjoint generator sets: shift b's indices past everything a uses, or
  // past a's declared Betti numbers when those are larger.
  std::map<int, int> offsets = generator_footprint(a);
  for (auto& [deg, idx] : offsets) idx += 1;
  if (a.betti)
    for (int i = 0; i <= 4; ++i) {
      long long bi = a.betti->b[static_cast<std::size_t>(i)];
      if (bi > 0) {
        auto& slot = offsets[i];
        slot = std::max<int>(slot, static_cast<int>(bi));
      }
    }

  long long na = static_cast<long long>(a.entries.size()) - 1;
  long long nb = static_cast<long long>(b.entries.size()) - 1;
  long long top = std::min(dmax, na + nb);

  Ledger out;
  if (a.betti && b.betti) {
    BettiProfile sum;
    for (std::size_t i = 0; i < 5; ++i) sum.b[i] = a.betti->b[i] + b.betti->b[i];
    out.betti = sum;
  }
  long long in_deg = a.entries[0].input_degree + b.entries[0].input_degree;
  for (long long d = 0; d <= top; ++d) {
    SymElement v;
    for (long long i = std::max<long long>(0, d - nb); i <= std::min(d, na); ++i) {
      SymElement rhs = shift_generators(b.entries[static_cast<std::size_t>(d - i)].value, offsets);
      v = v + a.entries[static_cast<std::size_t>(i)].value * rhs;
    }
    out.entries.push_back(LedgerEntry{d, in_deg, std::move(v)});
  }
  return out;
}

Monomial simple_type_monomial() {
  return Monomial{{{Generator{0, 0}, 1}, {Generator{4, 0}, 2}}};
}

bool simple_type_check(const Ledger& l) {
  check_ledger_shape(l);
  if (l.betti && (l.betti->b[0] < 1 || l.betti->b[4] < 1))
    throw Error("MissingGenerators",
                "the recursion needs generators in degrees zero and four");
  SymElement step = SymElement::monomial(simple_type_monomial());
  for (std::size_t i = 0; i + 1 < l.entries.size(); ++i)
    if (!(l.entries[i + 1].value == step * l.entries[i].value)) return false;
  return true;
}

Ledger normalize(const Ledger& l) {
  check_ledger_shape(l);
  Ledger out;
  out.betti = l.betti;
  Monomial step = simple_type_monomial();
  for (const auto& e : l.entries) {
    SymElement v = e.value;
    for (long long i = 0; i < e.d; ++i) {
      auto q = v.divide_by(step);
      if (!q)
        throw Error("NotDivisible",
                    "entry " + std::to_string(e.d) + " is not divisible by (w0 w4^2)^d");
      v = std::move(*q);
    }
    out.entries.push_back(LedgerEntry{e.d, e.input_degree, std::move(v)});
  }
  return out;
}

} // namespace gravicat
