#include "gravicat/linalg.hpp"

#include <cassert>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "gravicat/error.hpp"

namespace gravicat {

std::string rat_to_string(const Rat& q) {
  std::ostringstream os;
  os << rat_num(q) << "/" << rat_den(q);
  return os.str();
}

Rat rat_from_string(const std::string& s) {
  auto bad = [&]() -> Rat {
    throw Error("SchemaError", "not a rational: '" + s + "'");
  };
  auto parse_int = [&](const std::string& part) {
    if (part.empty()) bad();
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) bad();
    for (std::size_t i = start; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') bad();
    return Int(part);
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) bad();
  return Rat(num, den);
}

Xgcd xgcd(const Int& a, const Int& b) {
  // invariant: r0 = s0*a + t0*b, r1 = s1*a + t1*b
  Int r0 = a, r1 = b;
  Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1; // truncated division keeps the invariant
    Int r2 = r0 - q * r1;
    Int s2 = s0 - q * s1;
    Int t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
    t0 = t1; t1 = t2;
  }
  if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
  return {r0, s0, t0};
}

Int dot(const std::vector<Int>& x, const std::vector<Int>& y) {
  assert(x.size() == y.size());
  Int s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Rat dot(const std::vector<Rat>& x, const std::vector<Rat>& y) {
  assert(x.size() == y.size());
  Rat s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Inertia symmetric_inertia(const IMat& g) { return symmetric_inertia(to_rational(g)); }

Inertia symmetric_inertia(const QMat& g) {
  if (!g.is_symmetric()) throw std::logic_error("symmetric_inertia: asymmetric input");
  QMat a = g;
  std::vector<std::size_t> act(a.rows());
  for (std::size_t i = 0; i < act.size(); ++i) act[i] = i;

  Inertia out;
  Rat det(1);
  while (!act.empty()) {
    // prefer a 1x1 pivot on the diagonal
    std::size_t pi = act.size();
    for (std::size_t ii = 0; ii < act.size(); ++ii)
      if (a(act[ii], act[ii]) != 0) { pi = ii; break; }

    if (pi < act.size()) {
      std::size_t p = act[pi];
      Rat piv = a(p, p);
      (piv > 0 ? out.b_plus : out.b_minus)++;
      det *= piv;
      act.erase(act.begin() + pi);
      for (std::size_t k : act)
        for (std::size_t l : act) a(k, l) -= a(k, p) * a(p, l) / piv;
      continue;
    }

    // zero diagonal: any nonzero entry gives a hyperbolic 2x2 block
    std::size_t pa = act.size(), pb = act.size();
    for (std::size_t ii = 0; ii < act.size() && pa == act.size(); ++ii)
      for (std::size_t jj = ii + 1; jj < act.size(); ++jj)
        if (a(act[ii], act[jj]) != 0) { pa = ii; pb = jj; break; }

    if (pa == act.size()) {
      out.zeros += static_cast<long long>(act.size());
      det = 0;
      break;
    }

    std::size_t p = act[pa], q = act[pb];
    Rat c = a(p, q);
    out.b_plus++;
    out.b_minus++;
    det *= -c * c;
    act.erase(act.begin() + pb); // erase larger index first
    act.erase(act.begin() + pa);
    // Schur complement against the block [[0,c],[c,0]]
    for (std::size_t k : act)
      for (std::size_t l : act) a(k, l) -= (a(k, p) * a(q, l) + a(k, q) * a(p, l)) / c;
  }

  if (rat_den(det) != 1) throw std::logic_error("symmetric_inertia: non-integer determinant");
  out.det = rat_num(det);
  return out;
}

IMat integer_kernel(const IMat& a) {
  std::size_t m = a.rows(), n = a.cols();
  IMat h = a;
  IMat u = IMat::identity(n);

  std::size_t c = 0; // columns [0, c) hold pivots; columns >= c are zero in processed rows
  for (std::size_t row = 0; row < m && c < n; ++row) {
    std::size_t lead = n;
    for (std::size_t j = c; j < n; ++j)
      if (h(row, j) != 0) { lead = j; break; }
    if (lead == n) continue;
    h.swap_columns(c, lead);
    u.swap_columns(c, lead);

    for (std::size_t j = c + 1; j < n; ++j) {
      if (h(row, j) == 0) continue;
      // unimodular 2x2 column transform zeroing h(row, j)
      Int x = h(row, c), y = h(row, j);
      Xgcd e = xgcd(x, y);
      Int xa = x / e.g, yb = y / e.g;
      for (std::size_t i = 0; i < m; ++i) {
        Int hc = h(i, c), hj = h(i, j);
        h(i, c) = e.s * hc + e.t * hj;
        h(i, j) = -yb * hc + xa * hj;
      }
      for (std::size_t i = 0; i < n; ++i) {
        Int uc = u(i, c), uj = u(i, j);
        u(i, c) = e.s * uc + e.t * uj;
        u(i, j) = -yb * uc + xa * uj;
      }
    }
    ++c;
  }

  IMat ker(n, n - c);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = c; j < n; ++j) ker(i, j - c) = u(i, j);
  return ker;
}

Int vector_gcd_certificate(const std::vector<Int>& w, std::vector<Int>& u) {
  u.assign(w.size(), 0);
  Int g = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    if (g == 0) {
      g = w[i] < 0 ? Int(-w[i]) : w[i];
      u[i] = w[i] < 0 ? -1 : 1;
      continue;
    }
    Xgcd e = xgcd(g, w[i]);
    for (std::size_t j = 0; j < i; ++j) u[j] *= e.s;
    u[i] = e.t;
    g = e.g;
  }
  return g;
}

std::optional<std::vector<Int>> solve_mod2_characteristic(const IMat& g) {
  std::size_t n = g.rows();
  // augmented bit rows: [g mod 2 | diag(g) mod 2]
  std::vector<std::vector<std::uint8_t>> r(n, std::vector<std::uint8_t>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) r[i][j] = static_cast<std::uint8_t>(g(i, j) % 2 != 0);
    r[i][n] = static_cast<std::uint8_t>(g(i, i) % 2 != 0);
  }

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t p = rank;
    while (p < n && !r[p][col]) ++p;
    if (p == n) continue;
    std::swap(r[p], r[rank]);
    for (std::size_t i = 0; i < n; ++i)
      if (i != rank && r[i][col])
        for (std::size_t j = col; j <= n; ++j) r[i][j] ^= r[rank][j];
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < n; ++i)
    if (r[i][n]) return std::nullopt; // inconsistent

  std::vector<Int> w(n, 0);
  for (std::size_t i = 0; i < rank; ++i)
    if (r[i][n]) w[pivot_col[i]] = 1;
  return w;
}

Ldlt ldlt_decompose(const QMat& a) {
  if (!a.is_symmetric()) throw std::logic_error("ldlt_decompose: asymmetric input");
  std::size_t n = a.rows();
  Ldlt out;
  out.d.assign(n, Rat(0));
  out.l = QMat::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rat dj = a(j, j);
    for (std::size_t k = 0; k < j; ++k) dj -= out.l(j, k) * out.l(j, k) * out.d[k];
    if (dj <= 0) return out; // positive_definite stays false
    out.d[j] = dj;
    for (std::size_t i = j + 1; i < n; ++i) {
      Rat v = a(i, j);
      for (std::size_t k = 0; k < j; ++k) v -= out.l(i, k) * out.l(j, k) * out.d[k];
      out.l(i, j) = v / dj;
    }
  }
  out.positive_definite = true;
  return out;
}

std::vector<Rat> solve_linear(QMat a, std::vector<Rat> b) {
  std::size_t n = a.rows();
  if (!a.is_square() || b.size() != n) throw std::logic_error("solve_linear: shape mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col) == 0) ++p;
    if (p == n) throw std::logic_error("solve_linear: singular matrix");
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(col, j));
      std::swap(b[p], b[col]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      Rat f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
      b[i] -= f * b[col];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a(i, i);
  return x;
}

} // namespace gravicat
