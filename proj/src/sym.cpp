#include "gravicat/sym.hpp"

#include <stdexcept>

namespace gravicat {

long long Monomial::weight() const {
  long long w = 0;
  for (const auto& [g, e] : factors) w += e;
  return w;
}

long long Monomial::total_degree() const {
  long long d = 0;
  for (const auto& [g, e] : factors) d += static_cast<long long>(g.degree) * e;
  return d;
}

std::optional<std::pair<Monomial, int>> monomial_product(const Monomial& a, const Monomial& b) {
  // Count the transpositions needed to merge the odd factors of b past the
  // odd factors of a; even factors commute with everything.
  long long swaps = 0;
  for (const auto& [gb, eb] : b.factors) {
    if (gb.degree % 2 == 0) continue;
    for (const auto& [ga, ea] : a.factors) {
      if (ga.degree % 2 == 0) continue;
      if (gb == ga) return std::nullopt; // odd squares vanish
      if (gb < ga) ++swaps;
    }
  }

  Monomial out;
  auto ia = a.factors.begin(), ib = b.factors.begin();
  while (ia != a.factors.end() || ib != b.factors.end()) {
    if (ib == b.factors.end() || (ia != a.factors.end() && ia->first < ib->first)) {
      out.factors.push_back(*ia++);
    } else if (ia == a.factors.end() || ib->first < ia->first) {
      out.factors.push_back(*ib++);
    } else {
      out.factors.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return std::make_pair(std::move(out), swaps % 2 == 0 ? 1 : -1);
}

SymElement SymElement::constant(const Rat& c) {
  SymElement e;
  e.add_term(Monomial{}, c);
  return e;
}

SymElement SymElement::generator(const Generator& g) {
  SymElement e;
  e.add_term(Monomial{{{g, 1}}}, Rat(1));
  return e;
}

SymElement SymElement::monomial(const Monomial& m, const Rat& c) {
  for (std::size_t i = 0; i + 1 < m.factors.size(); ++i)
    if (!(m.factors[i].first < m.factors[i + 1].first))
      throw std::logic_error("SymElement::monomial: factors must be strictly sorted");
  for (const auto& [g, e] : m.factors) {
    if (e <= 0) throw std::logic_error("SymElement::monomial: exponents must be positive");
    if (g.degree % 2 != 0 && e > 1) return SymElement(); // odd square is zero
  }
  SymElement out;
  out.add_term(m, c);
  return out;
}

void SymElement::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymElement SymElement::operator+(const SymElement& o) const {
  SymElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

SymElement SymElement::operator-(const SymElement& o) const {
  SymElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

SymElement SymElement::operator*(const SymElement& o) const {
  SymElement r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      auto prod = monomial_product(ma, mb);
      if (!prod) continue;
      r.add_term(prod->first, ca * cb * prod->second);
    }
  return r;
}

SymElement SymElement::operator*(const Rat& c) const {
  SymElement r;
  if (c == 0) return r;
  for (const auto& [m, coeff] : terms_) r.add_term(m, coeff * c);
  return r;
}

std::optional<SymElement> SymElement::divide_by(const Monomial& m) const {
  SymElement r;
  for (const auto& [mono, coeff] : terms_) {
    Monomial quot;
    auto it = mono.factors.begin();
    bool ok = true;
    for (const auto& [g, e] : m.factors) {
      while (it != mono.factors.end() && it->first < g) quot.factors.push_back(*it++);
      if (it == mono.factors.end() || it->first != g || it->second < e) {
        ok = false;
        break;
      }
      if (it->second > e) quot.factors.emplace_back(g, it->second - e);
      ++it;
    }
    if (!ok) return std::nullopt;
    while (it != mono.factors.end()) quot.factors.push_back(*it++);

    // dividing is multiplying the quotient back; recover the Koszul sign
    auto back = monomial_product(quot, m);
    if (!back || back->first != mono) return std::nullopt;
    r.add_term(quot, coeff * back->second);
  }
  return r;
}

} // namespace gravicat
