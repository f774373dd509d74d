#pragma once

#include <optional>
#include <vector>

#include "gravicat/matrix.hpp"

namespace gravicat {

struct Inertia {
  long long b_plus = 0;
  long long b_minus = 0;
  long long zeros = 0;
  Int det = 0;
};

// Inertia and determinant of a symmetric matrix by congruence reduction.
// Uses rational Schur complements with 1x1 pivots, falling back to 2x2
// off-diagonal pivots (which contribute one plus and one minus each) when
// the remaining diagonal vanishes. Inertia is additive across the pivot
// blocks and congruence preserves signs, so the counts are exact.
Inertia symmetric_inertia(const IMat& g);
Inertia symmetric_inertia(const QMat& g);

// Basis for { x in Z^n : a x = 0 }, returned as the columns of an n x k
// matrix. Computed by unimodular column reduction, so the basis spans the
// kernel saturated in Z^n (a primitive sublattice, not a finite-index one).
IMat integer_kernel(const IMat& a);

// gcd of the entries with Bezout certificate u: sum u[i]*w[i] = g.
// All-zero input yields g = 0 and u = 0.
Int vector_gcd_certificate(const std::vector<Int>& w, std::vector<Int>& u);

// Solution of g w = diag(g) over GF(2); empty when the mod-2 system is
// singular and inconsistent. Unique when det(g) is odd.
std::optional<std::vector<Int>> solve_mod2_characteristic(const IMat& g);

struct Ldlt {
  bool positive_definite = false;
  std::vector<Rat> d;  // pivots, all > 0 when positive_definite
  QMat l;              // unit lower triangular
};

// LDL^T of a symmetric rational matrix without pivoting. Stops early and
// reports positive_definite = false on the first nonpositive pivot; for
// symmetric input that is exactly the positive-definiteness test.
Ldlt ldlt_decompose(const QMat& a);

// Solves a x = b for square nonsingular a by rational Gaussian elimination.
std::vector<Rat> solve_linear(QMat a, std::vector<Rat> b);

Int dot(const std::vector<Int>& x, const std::vector<Int>& y);
Rat dot(const std::vector<Rat>& x, const std::vector<Rat>& y);

} // namespace gravicat
