#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gravicat/classify.hpp"
#include "gravicat/lattice.hpp"

namespace gravicat {

enum class BoundaryKind { StandardSphere, HomologySphere, Circle };

struct BoundaryComponent {
  std::string label;
  BoundaryKind kind = BoundaryKind::StandardSphere;
  bool operator==(const BoundaryComponent&) const = default;
};

using BoundaryObject = std::vector<BoundaryComponent>;

// Invariant-level record of a cobordism: dimension, ordered boundary
// objects, Euler characteristic, signature, middle intersection form,
// spin flag, optional first Chern coordinates, smoothness, optional first
// Betti number. Records in dimension 2 use the split hyperbolic form of the
// total genus and carry sigma = 0.
struct CobordismRecord {
  int dim = 4;
  BoundaryObject incoming;
  BoundaryObject outgoing;
  long long chi = 0;
  long long sigma = 0;
  Lattice lattice;
  bool spin = false;
  std::optional<std::vector<Int>> c1;
  bool smooth = true;
  std::optional<long long> b1;
};

struct Grading {
  long long kappa0 = 0;      // Euler characteristic grading
  long long sigma_grade = 0; // signature grading
};

Grading grading(const CobordismRecord& w);

// General gluing correction for the Euler characteristic. compose() relies
// on the interface pieces tracked here (circles, homology 3-spheres) having
// chi = 0, so there the correction vanishes.
constexpr long long euler_glue(long long chi_a, long long chi_b, long long chi_interface) {
  return chi_a + chi_b - chi_interface;
}

bool is_closed(const CobordismRecord& w);
bool is_empty_record(const CobordismRecord& w);

// Total genus of a dimension-2 record, read off the hyperbolic lattice.
long long genus(const CobordismRecord& w);

// Consistency audit. Returns human-readable violations, each prefixed with
// a stable code ("SigmaMismatch: ..."). Empty means consistent.
std::vector<std::string> validate_cobordism(const CobordismRecord& w);

// Gluing along the full outgoing boundary of a, which must equal the
// incoming boundary of b componentwise. chi adds because the interface has
// Euler characteristic zero in odd dimensions covered here; sigma adds by
// Novikov additivity; forms add as a direct sum.
CobordismRecord compose(const CobordismRecord& a, const CobordismRecord& b);

CobordismRecord disjoint_union(const CobordismRecord& a, const CobordismRecord& b);

// Orientation reversal: boundary roles swap, sigma and the form negate.
CobordismRecord reverse_morphism(const CobordismRecord& w);

struct FunctorImage {
  K0Class cls;
  std::vector<std::string> warnings;
};

// Monoidal functor to classes over the generators [U], [E8]: composition
// and disjoint union both land in addition.
FunctorImage functor_class(const CobordismRecord& w);

// Characteristic-class arithmetic check <c1,c1> = 2 chi + 3 sigma for a
// closed record with c1 present.
bool quadric_check(const CobordismRecord& w);

CobordismRecord relabel_boundary(const CobordismRecord& w,
                                 const std::map<std::string, std::string>& renames);

const char* boundary_kind_name(BoundaryKind k);
BoundaryKind boundary_kind_from_name(const std::string& name);

} // namespace gravicat
