#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "gravicat/numeric.hpp"

namespace gravicat {

// Homogeneous generator w_{degree}^{(index)} of the free graded-commutative
// algebra on a homology basis. Odd-degree generators anticommute and square
// to zero; even ones are polynomial variables.
struct Generator {
  int degree = 0;
  int index = 0;
  auto operator<=>(const Generator&) const = default;
};

// Sorted factor list with positive exponents; odd factors keep exponent 1.
struct Monomial {
  std::vector<std::pair<Generator, int>> factors;

  long long weight() const;       // total exponent count
  long long total_degree() const; // sum of degree * exponent
  auto operator<=>(const Monomial&) const = default;
};

// Element of the graded symmetric algebra with rational coefficients.
class SymElement {
 public:
  SymElement() = default;

  static SymElement constant(const Rat& c);
  static SymElement generator(const Generator& g);
  static SymElement monomial(const Monomial& m, const Rat& c = Rat(1));

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rat>& terms() const { return terms_; }

  SymElement operator+(const SymElement& o) const;
  SymElement operator-(const SymElement& o) const;
  SymElement operator*(const SymElement& o) const;
  SymElement operator*(const Rat& c) const;
  bool operator==(const SymElement& o) const { return terms_ == o.terms_; }

  // Exact division by a monomial; nullopt when any term lacks the factor.
  std::optional<SymElement> divide_by(const Monomial& m) const;

  void add_term(const Monomial& m, const Rat& c);

 private:
  std::map<Monomial, Rat> terms_; // canonical form: no zero coefficients
};

// Product of two sorted monomials with the sign from moving odd factors
// past each other; nullopt when an odd factor repeats (the square is zero).
std::optional<std::pair<Monomial, int>> monomial_product(const Monomial& a, const Monomial& b);

} // namespace gravicat
