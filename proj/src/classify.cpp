#include "gravicat/classify.hpp"

#include "gravicat/error.hpp"
#include "gravicat/walls.hpp"

namespace gravicat {

CanonicalForm classify_indefinite(const Lattice& l) {
  LatticeProfile p = analyze(l);
  if (!p.unimodular)
    throw Error("NotUnimodular", "classification applies to unimodular forms only");
  if (p.definiteness != Definiteness::Indefinite)
    throw Error("NotIndefinite", "classification requires an indefinite form");

  if (p.parity == Parity::Odd) return OddCanonical{p.b_plus, p.b_minus};

  if (p.signature % 8 != 0)
    throw Error("EvenSignatureViolation", "even unimodular signature must be divisible by 8");
  EvenCanonical e;
  e.e8 = p.signature / 8;
  long long copies = e.e8 < 0 ? -e.e8 : e.e8;
  e.u = (p.rank - 8 * copies) / 2;
  return e;
}

Lattice canonical_gram(const CanonicalForm& form) {
  if (const auto* odd = std::get_if<OddCanonical>(&form)) {
    return builtin_lattice("I_" + std::to_string(odd->p) + "_" + std::to_string(odd->q));
  }
  const auto& even = std::get<EvenCanonical>(form);
  Lattice out;
  for (long long i = 0; i < even.u; ++i) out = direct_sum(out, builtin_lattice("U"));
  Lattice e8 = builtin_lattice(even.e8 >= 0 ? "E8" : "E8(-1)");
  long long copies = even.e8 < 0 ? -even.e8 : even.e8;
  for (long long i = 0; i < copies; ++i) out = direct_sum(out, e8);
  return out;
}

K0Result k0_class(const Lattice& l) {
  LatticeProfile p = analyze(l);
  if (!p.unimodular)
    throw Error("NotUnimodular", "K0 class is defined for unimodular lattices");
  if (p.parity == Parity::Odd)
    throw Error("OddLattice", "K0 class is defined for even lattices");
  if (p.signature % 8 != 0)
    throw Error("EvenSignatureViolation", "even unimodular signature must be divisible by 8");

  K0Result r;
  r.cls.e8 = p.signature / 8;
  r.cls.u = (p.rank - 8 * r.cls.e8) / 2; // rank = 2u + 8 e8
  r.definite_input = p.rank > 0 && (p.definiteness == Definiteness::PositiveDefinite ||
                                    p.definiteness == Definiteness::NegativeDefinite);
  return r;
}

K0Class k0_add(const K0Class& a, const K0Class& b) { return {a.u + b.u, a.e8 + b.e8}; }

K0Class k0_product(const K0Class& a, const K0Class& b) {
  long long ra = 2 * a.u + 8 * a.e8, rb = 2 * b.u + 8 * b.e8;
  long long sa = 8 * a.e8, sb = 8 * b.e8;
  K0Class r;
  r.e8 = sa * sb / 8;
  r.u = (ra * rb - 8 * r.e8) / 2;
  return r;
}

namespace {

// Splits off unit vectors one at a time. For a positive definite unimodular
// lattice, a norm-1 vector x gives an orthogonal splitting <x> + x-perp with
// x-perp again unimodular, so the form is diagonal exactly when this
// terminates at rank zero.
bool splits_into_units(Lattice l) {
  while (l.rank() > 0) {
    auto units = short_vectors(l, 1);
    const std::vector<Int>* unit = nullptr;
    for (const auto& v : units)
      if (norm(l, v) == 1) { unit = &v; break; }
    if (!unit) return false;

    std::vector<Int> gx = l.gram().apply(*unit);
    IMat row(1, l.rank());
    for (std::size_t i = 0; i < l.rank(); ++i) row(0, i) = gx[i];
    IMat k = integer_kernel(row);
    l = Lattice(k.transposed() * l.gram() * k);
  }
  return true;
}

} // namespace

bool diagonalizable_definite(const Lattice& l) {
  LatticeProfile p = analyze(l);
  if (!p.unimodular)
    throw Error("NotUnimodular", "diagonalizability test applies to unimodular forms");
  if (p.definiteness == Definiteness::Indefinite || p.definiteness == Definiteness::Degenerate)
    throw Error("NotDefinite", "diagonalizability test applies to definite forms");
  if (p.rank == 0) return true;
  if (p.parity == Parity::Even) return false; // diagonal forms are odd in positive rank

  Lattice pos = p.definiteness == Definiteness::NegativeDefinite ? negate(l) : l;
  return splits_into_units(pos);
}

SmoothReport smooth_closed_constraint(const Lattice& l) {
  LatticeProfile p = analyze(l);
  if (!p.unimodular)
    throw Error("NotUnimodular", "smooth realizability applies to unimodular forms");

  SmoothReport r;
  if (p.rank == 0) {
    r.smoothly_admissible = true;
    r.reason = "rank zero form";
    return r;
  }
  if (p.definiteness == Definiteness::Indefinite) {
    r.smoothly_admissible = true;
    r.reason = "indefinite forms carry no smooth obstruction";
    return r;
  }
  if (diagonalizable_definite(l)) {
    r.smoothly_admissible = true;
    r.reason = "definite and diagonal over the integers";
  } else {
    r.smoothly_admissible = false;
    r.reason = "definite without a diagonal basis";
  }
  return r;
}

} // namespace gravicat
