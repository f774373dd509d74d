#pragma once

#include <string>
#include <variant>

#include "gravicat/lattice.hpp"

namespace gravicat {

// Canonical shapes of indefinite unimodular forms: odd ones diagonalize to
// p<1> + q<-1>, even ones split as u copies of the hyperbolic plane plus
// |e8| copies of the rank-8 even definite form (negated when e8 < 0).
struct OddCanonical {
  long long p = 0;
  long long q = 0;
  bool operator==(const OddCanonical&) const = default;
};

struct EvenCanonical {
  long long u = 0;
  long long e8 = 0; // signed copy count, sign matching the signature
  bool operator==(const EvenCanonical&) const = default;
};

using CanonicalForm = std::variant<OddCanonical, EvenCanonical>;

CanonicalForm classify_indefinite(const Lattice& l);

// Explicit Gram matrix of a canonical form (block diagonal).
Lattice canonical_gram(const CanonicalForm& form);

// Class of an even unimodular lattice in the Grothendieck group on the
// generators [U] and [E8], using [E8] + [E8(-1)] = 8[U] to eliminate
// negative copies: coordinates (u, e8) with rank = 2u + 8e8 and
// signature = 8e8.
struct K0Class {
  long long u = 0;
  long long e8 = 0;
  bool operator==(const K0Class&) const = default;
};

struct K0Result {
  K0Class cls;
  bool definite_input = false; // set when a definite lattice of positive rank was mapped
};

K0Result k0_class(const Lattice& l);

K0Class k0_add(const K0Class& a, const K0Class& b);

// Product induced by the tensor product: rank and signature are both
// multiplicative, which pins the image coordinates uniquely.
K0Class k0_product(const K0Class& a, const K0Class& b);

// Whether a definite unimodular lattice is Z-congruent to a diagonal one,
// decided by hunting for unit-norm vectors and splitting them off.
bool diagonalizable_definite(const Lattice& l);

struct SmoothReport {
  bool topologically_realizable = true;
  bool smoothly_admissible = false;
  std::string reason;
};

// Realizability of a unimodular form as the intersection form of a closed
// oriented topological / smooth simply connected 4-manifold: everything is
// realized topologically, while smoothness forces definite forms to be
// diagonal.
SmoothReport smooth_closed_constraint(const Lattice& l);

} // namespace gravicat
