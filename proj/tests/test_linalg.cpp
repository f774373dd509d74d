#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gravicat/error.hpp"
#include "gravicat/linalg.hpp"
#include "oracles.hpp"

using namespace gravicat;

namespace {

IMat gram(const std::vector<std::vector<long long>>& rows) { return oracle::make_gram(rows); }

// gcd of all maximal minors; 1 means the columns span a saturated sublattice
Int max_minor_gcd(const IMat& k) {
  std::size_t n = k.rows(), c = k.cols();
  if (c == 0 || c > n) return 0;
  std::vector<std::size_t> pick(c);
  for (std::size_t i = 0; i < c; ++i) pick[i] = i;
  Int g = 0;
  while (true) {
    QMat minor(c, c);
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = 0; j < c; ++j) minor(i, j) = Rat(k(pick[i], j));
    Rat d = oracle::echelon_det(minor);
    g = boost::multiprecision::gcd(g, rat_num(d));
    // next combination
    std::size_t i = c;
    while (i > 0) {
      --i;
      if (pick[i] != i + n - c) {
        ++pick[i];
        for (std::size_t j = i + 1; j < c; ++j) pick[j] = pick[j - 1] + 1;
        break;
      }
      if (i == 0) return g;
    }
  }
}

bool is_zero_product(const IMat& a, const IMat& k) {
  IMat p = a * k;
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (p(i, j) != 0) return false;
  return true;
}

} // namespace

TEST_CASE("inertia of small pinned matrices") {
  Inertia u = symmetric_inertia(gram({{0, 1}, {1, 0}}));
  CHECK(u.b_plus == 1);
  CHECK(u.b_minus == 1);
  CHECK(u.zeros == 0);
  CHECK(u.det == -1);

  Inertia d = symmetric_inertia(gram({{1, 0}, {0, -1}}));
  CHECK(d.b_plus == 1);
  CHECK(d.b_minus == 1);
  CHECK(d.det == -1);

  Inertia h = symmetric_inertia(gram({{0, 2}, {2, 0}}));
  CHECK(h.b_plus == 1); // hyperbolic 2x2 pivot path
  CHECK(h.b_minus == 1);
  CHECK(h.det == -4);

  Inertia z = symmetric_inertia(gram({{0, 0}, {0, 0}}));
  CHECK(z.zeros == 2);
  CHECK(z.det == 0);

  Inertia mixed = symmetric_inertia(gram({{0, 0, 0}, {0, 3, 0}, {0, 0, -5}}));
  CHECK(mixed.b_plus == 1);
  CHECK(mixed.b_minus == 1);
  CHECK(mixed.zeros == 1);
  CHECK(mixed.det == 0);

  Inertia empty = symmetric_inertia(IMat(0, 0));
  CHECK(empty.b_plus == 0);
  CHECK(empty.det == 1);
}

TEST_CASE("inertia matches the principal-minor oracle on random matrices") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-4, 4);
  std::uniform_int_distribution<std::size_t> size(1, 5);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = size(rng);
    IMat a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = entry(rng);

    long long bp = 0, bm = 0;
    if (!oracle::principal_minor_signs(a, bp, bm)) continue; // zero minor, rule inapplicable
    ++checked;
    Inertia in = symmetric_inertia(a);
    CHECK(in.b_plus == bp);
    CHECK(in.b_minus == bm);
    CHECK(in.zeros == 0);

    QMat q(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q(i, j) = Rat(a(i, j));
    CHECK(Rat(in.det) == oracle::echelon_det(q));
  }
  CHECK(checked > 50);
}

TEST_CASE("inertia is a congruence invariant") {
  std::mt19937_64 rng(12);
  IMat e8 = builtin_lattice("E8").gram();
  for (int trial = 0; trial < 10; ++trial) {
    IMat s = oracle::scramble(e8, rng);
    Inertia in = symmetric_inertia(s);
    CHECK(in.b_plus == 8);
    CHECK(in.b_minus == 0);
    CHECK(in.det == 1);
  }
}

TEST_CASE("integer kernel on pinned inputs") {
  IMat k1 = integer_kernel(gram({{1, 2}, {2, 4}}));
  REQUIRE(k1.cols() == 1);
  bool plus = k1(0, 0) == 2 && k1(1, 0) == -1;
  bool minus = k1(0, 0) == -2 && k1(1, 0) == 1;
  CHECK((plus || minus));

  CHECK(integer_kernel(IMat::identity(3)).cols() == 0);

  IMat z = integer_kernel(IMat(2, 3));
  REQUIRE(z.cols() == 3);
  CHECK(max_minor_gcd(z) == 1); // basis of all of Z^3

  // non-primitive row still has a saturated kernel
  IMat row(1, 2);
  row(0, 0) = 2;
  row(0, 1) = 4;
  IMat k2 = integer_kernel(row);
  REQUIRE(k2.cols() == 1);
  CHECK(is_zero_product(row, k2));
  CHECK(max_minor_gcd(k2) == 1);
}

TEST_CASE("integer kernel spans the saturated kernel on random matrices") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> entry(-5, 5);
  std::uniform_int_distribution<std::size_t> rows_d(1, 3), cols_d(1, 5);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t r = rows_d(rng), c = cols_d(rng);
    IMat a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = entry(rng);
    IMat k = integer_kernel(a);
    CHECK(is_zero_product(a, k));

    // dimension: cols(k) = c - rank(a)
    std::size_t rank = 0;
    {
      QMat e(r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) e(i, j) = Rat(a(i, j));
      // row echelon rank
      std::size_t lead = 0;
      for (std::size_t col = 0; col < c && lead < r; ++col) {
        std::size_t p = lead;
        while (p < r && e(p, col) == 0) ++p;
        if (p == r) continue;
        for (std::size_t j = 0; j < c; ++j) std::swap(e(p, j), e(lead, j));
        for (std::size_t i = lead + 1; i < r; ++i) {
          if (e(i, col) == 0) continue;
          Rat f = e(i, col) / e(lead, col);
          for (std::size_t j = col; j < c; ++j) e(i, j) -= f * e(lead, j);
        }
        ++lead;
      }
      rank = lead;
    }
    CHECK(k.cols() == c - rank);
    if (k.cols() > 0) CHECK(max_minor_gcd(k) == 1);
  }
}

TEST_CASE("gcd certificate") {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<long long> entry(-40, 40);
  std::uniform_int_distribution<std::size_t> len(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Int> w(len(rng));
    for (Int& x : w) x = entry(rng);
    std::vector<Int> u;
    Int g = vector_gcd_certificate(w, u);
    REQUIRE(u.size() == w.size());
    Int folded = 0, combo = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      folded = boost::multiprecision::gcd(folded, w[i]);
      combo += u[i] * w[i];
    }
    CHECK(g == folded);
    CHECK(combo == g);
  }
  std::vector<Int> zeros(3, 0), u;
  CHECK(vector_gcd_certificate(zeros, u) == 0);
}

TEST_CASE("mod-2 characteristic solve") {
  auto w = solve_mod2_characteristic(gram({{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}));
  REQUIRE(w.has_value());
  CHECK(*w == std::vector<Int>{1, 1, 1});

  auto wu = solve_mod2_characteristic(gram({{0, 1}, {1, 0}}));
  REQUIRE(wu.has_value());
  CHECK(*wu == std::vector<Int>{0, 0});

  // the diagonal of a symmetric matrix always lies in its mod-2 row space,
  // so random symmetric inputs must all be solvable
  std::mt19937_64 rng(15);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t n = 1 + trial % 5;
    IMat a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = entry(rng);
    auto sol = solve_mod2_characteristic(a);
    REQUIRE(sol.has_value());
    std::vector<Int> gw = a.apply(*sol);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK((*sol)[i] >= 0);
      CHECK((*sol)[i] <= 1);
      CHECK((gw[i] - a(i, i)) % 2 == 0);
    }
  }
}

TEST_CASE("ldlt factorization and positive definiteness") {
  CHECK(ldlt_decompose(to_rational(builtin_lattice("E8").gram())).positive_definite);
  CHECK_FALSE(ldlt_decompose(to_rational(builtin_lattice("U").gram())).positive_definite);
  CHECK_FALSE(ldlt_decompose(to_rational(gram({{0, 0}, {0, 1}}))).positive_definite);

  std::mt19937_64 rng(16);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + trial % 4;
    // b^T b + I is positive definite
    IMat b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b(i, j) = entry(rng);
    IMat a = b.transposed() * b;
    for (std::size_t i = 0; i < n; ++i) a(i, i) += 1;

    Ldlt f = ldlt_decompose(to_rational(a));
    REQUIRE(f.positive_definite);
    // reconstruct L D L^T
    QMat prod(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rat s(0);
        for (std::size_t k = 0; k < n; ++k) s += f.l(i, k) * f.d[k] * f.l(j, k);
        prod(i, j) = s;
      }
    CHECK(prod == to_rational(a));
  }
}

TEST_CASE("rational linear solve") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> entry(-6, 6);
  int solved = 0;
  while (solved < 60) {
    std::size_t n = 1 + static_cast<std::size_t>(solved) % 4;
    QMat a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = Rat(entry(rng));
    if (oracle::echelon_det(a) == 0) continue;
    std::vector<Rat> b(n);
    for (Rat& x : b) x = Rat(entry(rng), 1 + (solved % 3));
    std::vector<Rat> x = solve_linear(a, b);
    std::vector<Rat> ax = a.apply(x);
    CHECK(ax == b);
    ++solved;
  }
}

TEST_CASE("rational string round trips and rounding") {
  CHECK(rat_to_string(Rat(-3, 6)) == "-1/2");
  CHECK(rat_to_string(Rat(4)) == "4/1");
  CHECK(rat_from_string("7") == Rat(7));
  CHECK(rat_from_string("-9/12") == Rat(-3, 4));
  CHECK_THROWS_AS(rat_from_string("1/0"), Error);
  CHECK_THROWS_AS(rat_from_string("x"), Error);
  CHECK_THROWS_AS(rat_from_string(""), Error);

  CHECK(rat_floor(Rat(-1, 2)) == -1);
  CHECK(rat_ceil(Rat(-1, 2)) == 0);
  CHECK(rat_floor(Rat(5, 2)) == 2);
  CHECK(rat_ceil(Rat(5, 2)) == 3);
  CHECK(rat_floor(Rat(6, 3)) == 2);
  CHECK(rat_ceil(Rat(6, 3)) == 2);
  CHECK(rat_round(Rat(7, 2)) == 4);   // ties go up under floor(q + 1/2)
  CHECK(rat_round(Rat(-7, 2)) == -3);
  CHECK(rat_round(Rat(1, 3)) == 0);
  CHECK(rat_round(Rat(-1, 3)) == 0);
  CHECK(rat_round(Rat(2, 3)) == 1);

  Xgcd x = xgcd(Int(12), Int(-18));
  CHECK(x.g == 6);
  CHECK(x.s * 12 + x.t * -18 == 6);
  Xgcd z = xgcd(Int(0), Int(0));
  CHECK(z.g == 0);
}
