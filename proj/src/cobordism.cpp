#include "gravicat/cobordism.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gravicat/error.hpp"

namespace gravicat {

namespace {

std::string boundary_to_string(const BoundaryObject& b) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) os << ", ";
    os << b[i].label << ":" << boundary_kind_name(b[i].kind);
  }
  os << "]";
  return os.str();
}

bool has_duplicate_label(const BoundaryObject& b, std::string& which) {
  std::set<std::string> seen;
  for (const auto& c : b)
    if (!seen.insert(c.label).second) {
      which = c.label;
      return true;
    }
  return false;
}

Lattice hyperbolic_sum(long long g) {
  Lattice out;
  for (long long i = 0; i < g; ++i) out = direct_sum(out, builtin_lattice("U"));
  out.set_label(std::nullopt);
  return out;
}

// Number of connected pieces of a dimension-2 record, recovered from
// chi = 2k - 2g - m for k pieces of total genus g with m boundary circles.
long long piece_count(const CobordismRecord& w) {
  long long m = static_cast<long long>(w.incoming.size() + w.outgoing.size());
  return (w.chi + 2 * genus(w) + m) / 2;
}

bool piece_count_consistent(const CobordismRecord& w) {
  long long m = static_cast<long long>(w.incoming.size() + w.outgoing.size());
  long long twice = w.chi + 2 * genus(w) + m;
  if (twice % 2 != 0 || twice < 0) return false;
  return twice > 0 || is_empty_record(w);
}

} // namespace

Grading grading(const CobordismRecord& w) { return {w.chi, w.sigma}; }

bool is_closed(const CobordismRecord& w) { return w.incoming.empty() && w.outgoing.empty(); }

bool is_empty_record(const CobordismRecord& w) {
  return is_closed(w) && w.chi == 0 && w.sigma == 0 && w.lattice.rank() == 0 &&
         (!w.c1 || w.c1->empty()) && (!w.b1 || *w.b1 == 0);
}

long long genus(const CobordismRecord& w) {
  if (w.dim != 2)
    throw Error("DimensionMismatch", "genus is defined for dimension-2 records");
  return static_cast<long long>(w.lattice.rank()) / 2;
}

std::vector<std::string> validate_cobordism(const CobordismRecord& w) {
  std::vector<std::string> v;
  if (w.dim != 2 && w.dim != 4) {
    v.push_back("UnsupportedDimension: only dimensions 2 and 4 are tracked");
    return v;
  }

  std::string dup;
  if (has_duplicate_label(w.incoming, dup))
    v.push_back("DuplicateLabel: '" + dup + "' repeated in the incoming boundary");
  if (has_duplicate_label(w.outgoing, dup))
    v.push_back("DuplicateLabel: '" + dup + "' repeated in the outgoing boundary");

  auto kind_ok = [&](BoundaryKind k) {
    return w.dim == 4 ? k != BoundaryKind::Circle : k == BoundaryKind::Circle;
  };
  for (const auto* side : {&w.incoming, &w.outgoing})
    for (const auto& c : *side)
      if (!kind_ok(c.kind)) {
        v.push_back("BoundaryKindMismatch: '" + c.label + "' has kind " +
                    boundary_kind_name(c.kind) + " in dimension " + std::to_string(w.dim));
      }

  LatticeProfile p = analyze(w.lattice);

  if (w.dim == 4) {
    if (p.signature != w.sigma)
      v.push_back("SigmaMismatch: recorded signature " + std::to_string(w.sigma) +
                  " but the form has signature " + std::to_string(p.signature));
    if (w.spin && p.parity == Parity::Odd)
      v.push_back("SpinParityViolation: spin records need an even intersection form");
    if (w.c1) {
      if (w.c1->size() != w.lattice.rank()) {
        v.push_back("C1LengthMismatch: c1 has " + std::to_string(w.c1->size()) +
                    " coordinates for a rank " + std::to_string(p.rank) + " form");
      } else {
        std::vector<Int> gc = w.lattice.gram().apply(*w.c1);
        bool characteristic = true;
        for (std::size_t i = 0; i < w.lattice.rank(); ++i)
          if ((gc[i] - w.lattice.gram()(i, i)) % 2 != 0) { characteristic = false; break; }
        if (!characteristic)
          v.push_back("C1NotCharacteristic: <c1,x> must equal <x,x> mod 2 for all x");
        if (w.spin) {
          bool even = std::all_of(w.c1->begin(), w.c1->end(),
                                  [](const Int& e) { return e % 2 == 0; });
          if (!even) v.push_back("SpinC1Mismatch: spin records need c1 divisible by 2");
        }
      }
    }
    if (is_closed(w)) {
      if (w.b1 && w.chi != 2 - 2 * *w.b1 + p.rank)
        v.push_back("EulerCharMismatch: chi must equal 2 - 2 b1 + rank for a closed record");
      if (!p.unimodular) {
        v.push_back("ClosedFormNotUnimodular: closed records carry unimodular forms");
      } else if (w.smooth) {
        SmoothReport sr = smooth_closed_constraint(w.lattice);
        if (!sr.smoothly_admissible)
          v.push_back("DonaldsonObstruction: " + sr.reason);
      }
    }
  } else {
    if (w.sigma != 0)
      v.push_back("SigmaMismatch: dimension-2 records have signature zero");
    bool hyperbolic = p.rank % 2 == 0 && p.parity == Parity::Even && p.signature == 0 &&
                      (p.rank == 0 || p.unimodular);
    if (!hyperbolic) {
      v.push_back("GenusFormMismatch: dimension-2 records carry the split hyperbolic form");
    } else if (!piece_count_consistent(w)) {
      v.push_back("EulerCharMismatch: chi + 2g + boundary count must be a positive even number");
    }
    if (w.c1)
      v.push_back("C1NotApplicable: c1 belongs to dimension-4 records");
  }
  return v;
}

CobordismRecord compose(const CobordismRecord& a, const CobordismRecord& b) {
  if (is_empty_record(b) && a.outgoing.empty()) return a;
  if (is_empty_record(a) && b.incoming.empty()) return b;
  if (a.dim != b.dim)
    throw Error("DimensionMismatch", "cannot compose records of different dimensions");
  if (a.outgoing != b.incoming)
    throw Error("BoundaryMismatch", "outgoing boundary " + boundary_to_string(a.outgoing) +
                                        " does not match incoming boundary " +
                                        boundary_to_string(b.incoming));

  long long interface = static_cast<long long>(a.outgoing.size());
  CobordismRecord r;
  r.dim = a.dim;
  r.incoming = a.incoming;
  r.outgoing = b.outgoing;
  r.chi = a.chi + b.chi; // the interface pieces have Euler characteristic zero
  r.sigma = a.sigma + b.sigma;
  r.spin = a.spin && b.spin;
  r.smooth = a.smooth && b.smooth;

  if (a.dim == 4) {
    r.lattice = direct_sum(a.lattice, b.lattice);
    if (a.c1 && b.c1) {
      r.c1 = *a.c1;
      r.c1->insert(r.c1->end(), b.c1->begin(), b.c1->end());
    }
    if (interface <= 1 && a.b1 && b.b1) r.b1 = *a.b1 + *b.b1;
  } else {
    if (interface >= 1 && (piece_count(a) != 1 || piece_count(b) != 1))
      throw Error("NotConnectedInterface",
                  "genus bookkeeping needs connected pieces on both sides of the interface");
    long long extra = interface >= 1 ? interface - 1 : 0;
    r.lattice = hyperbolic_sum(genus(a) + genus(b) + extra);
  }
  return r;
}

CobordismRecord disjoint_union(const CobordismRecord& a, const CobordismRecord& b) {
  if (is_empty_record(a)) return b;
  if (is_empty_record(b)) return a;
  if (a.dim != b.dim)
    throw Error("DimensionMismatch", "cannot union records of different dimensions");

  CobordismRecord r;
  r.dim = a.dim;
  r.incoming = a.incoming;
  r.incoming.insert(r.incoming.end(), b.incoming.begin(), b.incoming.end());
  r.outgoing = a.outgoing;
  r.outgoing.insert(r.outgoing.end(), b.outgoing.begin(), b.outgoing.end());

  std::string dup;
  if (has_duplicate_label(r.incoming, dup) || has_duplicate_label(r.outgoing, dup))
    throw Error("LabelCollision", "boundary label '" + dup + "' appears in both operands");

  r.chi = a.chi + b.chi;
  r.sigma = a.sigma + b.sigma;
  r.lattice = direct_sum(a.lattice, b.lattice);
  r.spin = a.spin && b.spin;
  r.smooth = a.smooth && b.smooth;
  if (a.c1 && b.c1) {
    r.c1 = *a.c1;
    r.c1->insert(r.c1->end(), b.c1->begin(), b.c1->end());
  }
  // b1 stays untracked: the closed-record Euler relation assumes one piece
  return r;
}

CobordismRecord reverse_morphism(const CobordismRecord& w) {
  CobordismRecord r = w;
  std::swap(r.incoming, r.outgoing);
  r.sigma = -w.sigma;
  r.lattice = negate(w.lattice);
  return r;
}

FunctorImage functor_class(const CobordismRecord& w) {
  if (w.dim != 4)
    throw Error("DimensionMismatch", "the class functor is defined on dimension-4 records");
  K0Result k = k0_class(w.lattice);
  FunctorImage out{k.cls, {}};
  if (k.definite_input) out.warnings.push_back("DefiniteLattice");
  return out;
}

bool quadric_check(const CobordismRecord& w) {
  if (w.dim != 4)
    throw Error("DimensionMismatch", "the quadric identity applies to dimension-4 records");
  if (!is_closed(w))
    throw Error("NotClosed", "the quadric identity applies to closed records");
  if (!w.c1)
    throw Error("MissingC1", "record carries no first Chern coordinates");
  if (w.c1->size() != w.lattice.rank())
    throw Error("DimensionMismatch", "c1 length does not match the form rank");
  return inner(w.lattice, *w.c1, *w.c1) == Int(2 * w.chi + 3 * w.sigma);
}

CobordismRecord relabel_boundary(const CobordismRecord& w,
                                 const std::map<std::string, std::string>& renames) {
  CobordismRecord r = w;
  for (auto* side : {&r.incoming, &r.outgoing})
    for (auto& c : *side) {
      auto it = renames.find(c.label);
      if (it != renames.end()) c.label = it->second;
    }
  std::string dup;
  if (has_duplicate_label(r.incoming, dup) || has_duplicate_label(r.outgoing, dup))
    throw Error("LabelCollision", "renaming makes boundary label '" + dup + "' ambiguous");
  return r;
}

const char* boundary_kind_name(BoundaryKind k) {
  switch (k) {
    case BoundaryKind::StandardSphere: return "sphere";
    case BoundaryKind::HomologySphere: return "homology_sphere";
    case BoundaryKind::Circle: return "circle";
  }
  return "unknown";
}

BoundaryKind boundary_kind_from_name(const std::string& name) {
  if (name == "sphere") return BoundaryKind::StandardSphere;
  if (name == "homology_sphere") return BoundaryKind::HomologySphere;
  if (name == "circle") return BoundaryKind::Circle;
  throw Error("SchemaError", "unknown boundary kind '" + name + "'");
}

} // namespace gravicat
