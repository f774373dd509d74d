#include "gravicat/walls.hpp"

#include <algorithm>
#include <cassert>

#include "gravicat/error.hpp"

namespace gravicat {

namespace {

Int vector_gcd(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  return g;
}

std::vector<Int> scale_to_primitive_integer(const std::vector<Rat>& v) {
  Int l = 1;
  for (const Rat& q : v) l = boost::multiprecision::lcm(l, rat_den(q));
  std::vector<Int> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = rat_num(v[i]) * (l / rat_den(v[i]));
  Int g = vector_gcd(out);
  if (g > 1)
    for (Int& x : out) x /= g;
  return out;
}

IMat negated_restriction(const IMat& g, const IMat& k) {
  IMat r = k.transposed() * g * k;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = -r(i, j);
  return r;
}

// Saturated integer basis of the orthogonal complement of one vector.
IMat perp_kernel(const IMat& g, const std::vector<Int>& v) {
  std::vector<Int> w = g.apply(v);
  IMat row(1, w.size());
  for (std::size_t i = 0; i < w.size(); ++i) row(0, i) = w[i];
  return integer_kernel(row);
}

} // namespace

long long grass_dimension(const Lattice& l) {
  LatticeProfile p = analyze(l);
  if (p.definiteness == Definiteness::Degenerate)
    throw Error("DegenerateForm", "the form has a radical");
  return p.b_plus * p.b_minus;
}

bool validate_subspace(const NegativeSubspace& s) {
  if (s.basis.rows() != s.lattice.rank())
    throw Error("DimensionMismatch", "basis rows must match the lattice rank");
  LatticeProfile ambient = analyze(s.lattice);
  std::size_t n = s.basis.rows(), k = s.basis.cols();

  // Only the span matters; clear denominators per column so the restricted
  // Gram stays integral.
  IMat cols(n, k);
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Rat> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = s.basis(i, j);
    std::vector<Int> scaled = scale_to_primitive_integer(col);
    for (std::size_t i = 0; i < n; ++i) cols(i, j) = scaled[i];
  }
  Inertia in = symmetric_inertia(cols.transposed() * s.lattice.gram() * cols);
  bool negative_definite = in.zeros == 0 && in.b_plus == 0 &&
                           in.b_minus == static_cast<long long>(k);
  return negative_definite && static_cast<long long>(k) == ambient.b_minus;
}

std::vector<std::vector<Int>> enumerate_ellipsoid(const IMat& gram,
                                                  const std::vector<Rat>& center,
                                                  const Rat& radius_sq) {
  std::size_t k = gram.rows();
  if (center.size() != k)
    throw Error("DimensionMismatch", "center length must match the form rank");

  std::vector<std::vector<Int>> out;
  if (radius_sq < 0) return out;
  if (k == 0) {
    out.push_back({});
    return out;
  }

  Ldlt f = ldlt_decompose(to_rational(gram));
  if (!f.positive_definite)
    throw Error("NotPositiveDefinite", "enumeration requires a positive definite form");

  // q(z - c) = sum_i d_i (z_i - mu_i)^2 with mu_i depending on the already
  // fixed coordinates z_{i+1} .. z_{k-1}; walk each coordinate outward from
  // the nearest integer to mu_i, which lies in the feasible interval
  // whenever the interval is nonempty.
  std::vector<Int> z(k);
  auto descend = [&](auto&& self, std::size_t i, const Rat& rem) -> void {
    Rat mu = center[i];
    for (std::size_t j = i + 1; j < k; ++j) mu -= f.l(j, i) * (Rat(z[j]) - center[j]);
    Int base = rat_round(mu);
    for (int dir = 0; dir < 2; ++dir) {
      Int zi = dir == 0 ? base : base - 1;
      Int step = dir == 0 ? Int(1) : Int(-1);
      while (true) {
        Rat diff = Rat(zi) - mu;
        Rat term = f.d[i] * diff * diff;
        if (term > rem) break;
        z[i] = zi;
        if (i == 0)
          out.push_back(z);
        else
          self(self, i - 1, rem - term);
        zi += step;
      }
    }
  };
  descend(descend, k - 1, radius_sq);
  return out;
}

std::vector<std::vector<Int>> short_vectors(const Lattice& l, const Int& bound) {
  std::size_t n = l.rank();
  if (n == 0) return {};
  if (!ldlt_decompose(to_rational(l.gram())).positive_definite)
    throw Error("NotPositiveDefinite", "short vector enumeration requires a positive definite form");

  std::vector<std::vector<Int>> found =
      enumerate_ellipsoid(l.gram(), std::vector<Rat>(n, Rat(0)), Rat(bound));

  std::vector<std::vector<Int>> out;
  for (auto& v : found) {
    auto lead = std::find_if(v.begin(), v.end(), [](const Int& x) { return x != 0; });
    if (lead == v.end() || *lead < 0) continue; // drop zero, keep one of each +- pair
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<WallVector> wall_membership(const NegativeSubspace& s, const Int& d,
                                          bool primitive_only) {
  if (!validate_subspace(s))
    throw Error("InvalidSubspace", "basis must span a maximal negative definite subspace");
  std::size_t n = s.lattice.rank(), k = s.basis.cols();
  if (k == 0 || d <= 0) return std::nullopt;

  // Integer points of the span: saturate the column span by passing through
  // the relation lattice twice.
  IMat cols(n, k);
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Rat> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = s.basis(i, j);
    std::vector<Int> scaled = scale_to_primitive_integer(col);
    for (std::size_t i = 0; i < n; ++i) cols(i, j) = scaled[i];
  }
  IMat relations = integer_kernel(cols.transposed());
  IMat span = integer_kernel(relations.transposed());
  assert(span.cols() == k);

  Lattice restricted(negated_restriction(s.lattice.gram(), span));
  auto cands = short_vectors(restricted, d);

  std::optional<WallVector> best;
  for (const auto& y : cands) {
    if (primitive_only && vector_gcd(y) != 1) continue;
    std::vector<Int> x = span.apply(y);
    Int q = norm(s.lattice, x);
    if (!best || -q < -best->norm || (-q == -best->norm && x < best->x))
      best = WallVector{std::move(x), q};
  }
  return best;
}

namespace {

// Nonzero integer points orthogonal to v with -d <= q < 0 exist exactly when
// the negated restriction to the perp lattice has a vector of norm <= d.
bool touches_wall(const Lattice& l, const std::vector<Int>& v, const Int& d) {
  IMat k = perp_kernel(l.gram(), v);
  Lattice restricted(negated_restriction(l.gram(), k));
  return !short_vectors(restricted, d).empty();
}

} // namespace

std::vector<WallVector> crossing_set(const Period& p0, const Period& p1, const Int& d,
                                     bool primitive_only) {
  const Lattice& l = p0.lattice;
  std::size_t n = l.rank();
  if (p1.lattice.gram() != l.gram())
    throw Error("DimensionMismatch", "periods must live in the same lattice");
  if (p0.omega.size() != n || p1.omega.size() != n)
    throw Error("DimensionMismatch", "period vector length must match the lattice rank");

  LatticeProfile prof = analyze(l);
  if (prof.b_plus != 1 || prof.definiteness == Definiteness::Degenerate)
    throw Error("NotLorentzian", "wall crossing requires signature (1, n-1)");

  std::vector<Int> w0 = scale_to_primitive_integer(p0.omega);
  std::vector<Int> w1 = scale_to_primitive_integer(p1.omega);
  Int a = norm(l, w0), b = norm(l, w1), c = inner(l, w0, w1);
  if (a <= 0 || b <= 0)
    throw Error("InvalidPeriod", "periods must have positive norm");
  if (c <= 0)
    throw Error("OppositeCones", "periods lie in different components of the positive cone");
  if (d <= 0) return {};

  if (touches_wall(l, w0, d) || touches_wall(l, w1, d))
    throw Error("PeriodOnWall", "a period is orthogonal to a wall vector of this level");

  std::vector<WallVector> out;
  Int budget = d * (c * c - a * b); // t^2 b < budget bounds the pairing with w0
  if (budget <= 0) return out;

  IMat kmat = perp_kernel(l.gram(), w0);
  IMat p = negated_restriction(l.gram(), kmat);
  std::vector<Int> gw0 = l.gram().apply(w0);
  std::vector<Int> gw1 = l.gram().apply(w1);
  std::vector<Int> bezout;
  Int g = vector_gcd_certificate(gw0, bezout);
  assert(g > 0);

  QMat pq = to_rational(p);
  for (Int t = -1; t * t * b < budget; --t) {
    if (t % g != 0) continue; // no integer slice at this pairing value
    Int scale = t / g;
    std::vector<Int> xp(n);
    for (std::size_t i = 0; i < n; ++i) xp[i] = bezout[i] * scale;

    // On the slice <x, w0> = t write x = xp + K z and complete the square:
    // -q(x) = (z - z0)^T P (z - z0) - C with P z0 = K^T G xp.
    std::vector<Int> kgx(kmat.cols(), 0);
    {
      std::vector<Int> gxp = l.gram().apply(xp);
      for (std::size_t j = 0; j < kmat.cols(); ++j)
        for (std::size_t i = 0; i < n; ++i) kgx[j] += kmat(i, j) * gxp[i];
    }
    std::vector<Rat> rhs(kgx.size());
    for (std::size_t i = 0; i < kgx.size(); ++i) rhs[i] = Rat(kgx[i]);
    std::vector<Rat> z0 = solve_linear(pq, rhs);
    Rat cap = dot(z0, rhs) + Rat(norm(l, xp)) + Rat(d);

    for (const auto& z : enumerate_ellipsoid(p, z0, cap)) {
      std::vector<Int> x = xp;
      {
        std::vector<Int> kz = kmat.apply(z);
        for (std::size_t i = 0; i < n; ++i) x[i] += kz[i];
      }
      Int qx = norm(l, x);
      if (qx >= 0 || qx < -d) continue;
      Int s1 = dot(x, gw1);
      if (s1 == 0)
        throw Error("PeriodOnWall", "a period is orthogonal to a wall vector of this level");
      if (s1 < 0) continue;
      assert(dot(x, gw0) == t);
      if (primitive_only && vector_gcd(x) != 1) continue;
      out.push_back(WallVector{std::move(x), qx});
    }
  }

  std::sort(out.begin(), out.end(),
            [](const WallVector& u, const WallVector& v) { return u.x < v.x; });
  return out;
}

} // namespace gravicat
