#pragma once

#include <optional>
#include <vector>

#include "gravicat/lattice.hpp"

namespace gravicat {

// Rational span inside a lattice, given by basis column vectors. Intended
// for negative definite subspaces of maximal dimension.
struct NegativeSubspace {
  Lattice lattice;
  QMat basis; // rank(lattice) rows, dim columns
};

// Positive-norm rational direction in a lattice with b_plus = 1.
struct Period {
  Lattice lattice;
  std::vector<Rat> omega;
};

struct WallVector {
  std::vector<Int> x;
  Int norm = 0;
};

// Dimension b_plus * b_minus of the space of maximal negative definite
// subspaces of the real quadratic space.
long long grass_dimension(const Lattice& l);

bool validate_subspace(const NegativeSubspace& s);

// All x with 0 < q(x) <= bound in a positive definite lattice, one vector
// per +-pair (the representative whose first nonzero coordinate is
// positive), ordered lexicographically. Exact Fincke-Pohst enumeration over
// an LDL^T factorization of the Gram matrix.
std::vector<std::vector<Int>> short_vectors(const Lattice& l, const Int& bound);

// Integer points z with (z - center)^T gram (z - center) <= radius_sq,
// gram positive definite. The zero offset is included when it qualifies.
std::vector<std::vector<Int>> enumerate_ellipsoid(const IMat& gram,
                                                  const std::vector<Rat>& center,
                                                  const Rat& radius_sq);

// Whether the integer points of the subspace contain some x with
// -d <= q(x) < 0; returns a witness of minimal |q| (lexicographically
// smallest among those) when they do.
std::optional<WallVector> wall_membership(const NegativeSubspace& s, const Int& d,
                                          bool primitive_only = false);

// Lattice vectors x with -d <= q(x) < 0 separating two periods:
// <x, omega0> < 0 < <x, omega1>. Requires b_plus = 1, periods of positive
// norm on the same side of the cone, and neither period lying on a wall of
// level d. Output is sorted lexicographically.
std::vector<WallVector> crossing_set(const Period& p0, const Period& p1, const Int& d,
                                     bool primitive_only = false);

} // namespace gravicat
