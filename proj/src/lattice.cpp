#include "gravicat/lattice.hpp"

#include <cassert>
#include <cstdlib>

#include "gravicat/error.hpp"

namespace gravicat {

Lattice::Lattice(IMat gram, std::optional<std::string> label)
    : gram_(std::move(gram)), label_(std::move(label)) {
  if (!gram_.is_square())
    throw Error("MalformedGram", "Gram matrix must be square");
  if (!gram_.is_symmetric())
    throw Error("MalformedGram", "Gram matrix must be symmetric");
}

LatticeProfile analyze(const Lattice& l) {
  Inertia in = symmetric_inertia(l.gram());
  LatticeProfile p;
  p.rank = static_cast<long long>(l.rank());
  p.b_plus = in.b_plus;
  p.b_minus = in.b_minus;
  p.signature = in.b_plus - in.b_minus;
  p.determinant = in.det;

  p.parity = Parity::Even;
  for (std::size_t i = 0; i < l.rank(); ++i)
    if (l.gram()(i, i) % 2 != 0) { p.parity = Parity::Odd; break; }

  p.unimodular = (in.det == 1 || in.det == -1);

  if (in.zeros > 0)
    p.definiteness = Definiteness::Degenerate;
  else if (p.b_plus == p.rank)
    p.definiteness = Definiteness::PositiveDefinite; // rank 0 counts as positive
  else if (p.b_minus == p.rank)
    p.definiteness = Definiteness::NegativeDefinite;
  else
    p.definiteness = Definiteness::Indefinite;
  return p;
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  return Lattice(block_diag(a.gram(), b.gram()));
}

Lattice tensor_product(const Lattice& a, const Lattice& b) {
  return Lattice(kronecker(a.gram(), b.gram()));
}

Lattice negate(const Lattice& l) {
  IMat g = l.gram();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) = -g(i, j);
  return Lattice(std::move(g));
}

Int inner(const Lattice& l, const std::vector<Int>& x, const std::vector<Int>& y) {
  if (x.size() != l.rank() || y.size() != l.rank())
    throw Error("DimensionMismatch", "vector length does not match lattice rank");
  return dot(x, l.gram().apply(y));
}

Int norm(const Lattice& l, const std::vector<Int>& x) { return inner(l, x, x); }

std::vector<Int> characteristic_vector(const Lattice& l) {
  LatticeProfile p = analyze(l);
  if (!p.unimodular)
    throw Error("NotUnimodular", "characteristic vector needs a unimodular lattice");
  auto w = solve_mod2_characteristic(l.gram());
  assert(w.has_value()); // odd determinant makes the mod-2 system nonsingular
  return *w;
}

namespace {

IMat gram_u() {
  IMat g(2, 2);
  g(0, 1) = 1;
  g(1, 0) = 1;
  return g;
}

// Cartan matrix of the E8 diagram: a chain of seven nodes with the eighth
// attached to the fifth. Determinant 1, positive definite, even.
IMat gram_e8() {
  IMat g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = 2;
  auto link = [&](std::size_t i, std::size_t j) {
    g(i, j) = -1;
    g(j, i) = -1;
  };
  for (std::size_t i = 0; i + 1 < 7; ++i) link(i, i + 1);
  link(4, 7);
  return g;
}

IMat gram_diag(long long p, long long q) {
  IMat g(static_cast<std::size_t>(p + q), static_cast<std::size_t>(p + q));
  for (long long i = 0; i < p; ++i) g(i, i) = 1;
  for (long long i = p; i < p + q; ++i) g(i, i) = -1;
  return g;
}

bool parse_i_pq(const std::string& name, long long& p, long long& q) {
  if (name.size() < 5 || name.compare(0, 2, "I_") != 0) return false;
  auto second = name.find('_', 2);
  if (second == std::string::npos || second == 2 || second + 1 == name.size()) return false;
  std::string ps = name.substr(2, second - 2), qs = name.substr(second + 1);
  for (char c : ps)
    if (c < '0' || c > '9') return false;
  for (char c : qs)
    if (c < '0' || c > '9') return false;
  if (ps.size() > 9 || qs.size() > 9) return false; // anything longer is not a usable rank
  p = std::strtoll(ps.c_str(), nullptr, 10);
  q = std::strtoll(qs.c_str(), nullptr, 10);
  return true;
}

} // namespace

Lattice builtin_lattice(const std::string& name) {
  if (name == "U") return Lattice(gram_u(), name);
  if (name == "E8") return Lattice(gram_e8(), name);
  if (name == "E8(-1)") return Lattice(negate(Lattice(gram_e8())).gram(), name);
  if (name == "K3") {
    Lattice l;
    for (int i = 0; i < 3; ++i) l = direct_sum(l, Lattice(gram_u()));
    Lattice e8m(negate(Lattice(gram_e8())).gram());
    for (int i = 0; i < 2; ++i) l = direct_sum(l, e8m);
    l.set_label(name);
    return l;
  }
  long long p = 0, q = 0;
  if (parse_i_pq(name, p, q)) return Lattice(gram_diag(p, q), name);
  throw Error("UnknownLattice", "no builtin lattice named '" + name + "'");
}

const char* parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

const char* definiteness_name(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return "positive_definite";
    case Definiteness::NegativeDefinite: return "negative_definite";
    case Definiteness::Indefinite: return "indefinite";
    case Definiteness::Degenerate: return "degenerate";
  }
  return "unknown";
}

} // namespace gravicat
