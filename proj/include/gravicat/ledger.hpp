#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "gravicat/sym.hpp"

namespace gravicat {

// Betti numbers b_0 .. b_4 of the underlying closed 4-manifold.
struct BettiProfile {
  std::array<long long, 5> b{};
  bool operator==(const BettiProfile&) const = default;
};

// Formal-dimension bookkeeping: expected dimension of the charge-d moduli
// problem and the induced degree shift on polynomial invariants.
long long expected_dimension(long long d, long long chi, long long sigma);
long long ledger_degree(long long input_degree, long long d, long long chi, long long sigma);

// Dimension of the weight-w part of the free graded-commutative algebra on
// b_i generators of degree i, in a single homological degree or as the full
// degree row. Odd generators contribute exterior factors.
Int sym_dimension(const BettiProfile& betti, long long weight, long long degree);
std::map<long long, Int> sym_dimension_row(const BettiProfile& betti, long long weight);

struct LedgerEntry {
  long long d = 0;
  long long input_degree = 0;
  SymElement value;
};

struct Ledger {
  std::optional<BettiProfile> betti;
  std::vector<LedgerEntry> entries;
};

// Entries must cover charges 0..n contiguously and share one input degree.
void check_ledger_shape(const Ledger& l);

// Charge-graded convolution product over all splittings d = i + j,
// truncated at dmax. Models the invariant of a disjoint union.
Ledger convolve_disjoint(const Ledger& a, const Ledger& b, long long dmax);

// Whether successive entries satisfy value(d+1) = w0 * w4^2 * value(d).
bool simple_type_check(const Ledger& l);

// Divides entry d by (w0 * w4^2)^d, removing the simple-type growth.
Ledger normalize(const Ledger& l);

// The recursion monomial w0 * w4^2.
Monomial simple_type_monomial();

} // namespace gravicat
