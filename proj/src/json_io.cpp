#include "gravicat/json_io.hpp"

#include <algorithm>
#include <limits>

#include "gravicat/error.hpp"

namespace gravicat {

Json int_to_json(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    return Int(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    Rat r = rat_from_string(j.get<std::string>());
    if (rat_den(r) != 1) throw Error("SchemaError", "expected an integer, got a fraction");
    return rat_num(r);
  }
  throw Error("SchemaError", "expected an integer (number or decimal string)");
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(int_from_json(j));
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  throw Error("SchemaError", "expected a rational (\"p/q\" string or integer)");
}

Json lattice_to_json(const Lattice& l) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < l.rank(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < l.rank(); ++j) row.push_back(int_to_json(l.gram()(i, j)));
    rows.push_back(std::move(row));
  }
  Json out;
  out["gram"] = std::move(rows);
  if (l.label()) out["label"] = *l.label();
  return out;
}

Lattice lattice_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("gram"))
    throw Error("SchemaError", "lattice JSON needs a \"gram\" field");
  const Json& g = j.at("gram");
  if (!g.is_array()) throw Error("MalformedGram", "\"gram\" must be an array of rows");
  std::size_t n = g.size();
  IMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!g[i].is_array() || g[i].size() != n)
      throw Error("MalformedGram", "Gram matrix must be square");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = int_from_json(g[i][k]);
  }
  std::optional<std::string> label;
  if (j.contains("label")) {
    if (!j.at("label").is_string()) throw Error("SchemaError", "\"label\" must be a string");
    label = j.at("label").get<std::string>();
  }
  return Lattice(std::move(m), std::move(label));
}

Json profile_to_json(const LatticeProfile& p) {
  Json out;
  out["rank"] = p.rank;
  out["b_plus"] = p.b_plus;
  out["b_minus"] = p.b_minus;
  out["signature"] = p.signature;
  out["determinant"] = int_to_json(p.determinant);
  out["parity"] = parity_name(p.parity);
  out["unimodular"] = p.unimodular;
  out["definiteness"] = definiteness_name(p.definiteness);
  return out;
}

Json canonical_to_json(const CanonicalForm& f) {
  Json out;
  if (const auto* odd = std::get_if<OddCanonical>(&f)) {
    out["variant"] = "odd";
    out["p"] = odd->p;
    out["q"] = odd->q;
  } else {
    const auto& even = std::get<EvenCanonical>(f);
    out["variant"] = "even";
    out["u"] = even.u;
    out["e8"] = even.e8;
  }
  return out;
}

Json k0_to_json(const K0Class& k) {
  Json out;
  out["u"] = k.u;
  out["e8"] = k.e8;
  return out;
}

Json smooth_report_to_json(const SmoothReport& r) {
  Json out;
  out["topologically_realizable"] = r.topologically_realizable;
  out["smoothly_admissible"] = r.smoothly_admissible;
  out["reason"] = r.reason;
  return out;
}

namespace {

Json boundary_to_json(const BoundaryObject& b) {
  Json out = Json::array();
  for (const auto& c : b) {
    Json e;
    e["label"] = c.label;
    e["kind"] = boundary_kind_name(c.kind);
    out.push_back(std::move(e));
  }
  return out;
}

} // namespace

Json record_to_json(const CobordismRecord& w) {
  Json out;
  out["dim"] = w.dim;
  out["in"] = boundary_to_json(w.incoming);
  out["out"] = boundary_to_json(w.outgoing);
  out["chi"] = w.chi;
  out["sigma"] = w.sigma;
  out["lattice"] = lattice_to_json(w.lattice);
  out["spin"] = w.spin;
  out["smooth"] = w.smooth;
  if (w.c1) {
    Json c1 = Json::array();
    for (const Int& v : *w.c1) c1.push_back(int_to_json(v));
    out["c1"] = std::move(c1);
  }
  if (w.b1) out["b1"] = *w.b1;
  if (w.dim == 2) out["genus"] = genus(w);
  return out;
}

Json sym_to_json(const SymElement& v) {
  Json out = Json::array();
  for (const auto& [m, c] : v.terms()) {
    Json mono = Json::array();
    for (const auto& [g, e] : m.factors)
      mono.push_back(Json::array({"w", g.degree, g.index, e}));
    Json term;
    term["coeff"] = rat_to_string(c);
    term["monomial"] = std::move(mono);
    out.push_back(std::move(term));
  }
  return out;
}

SymElement sym_from_json(const Json& j) {
  if (!j.is_array()) throw Error("SchemaError", "a polynomial value must be an array of terms");
  SymElement out;
  for (const Json& term : j) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("monomial"))
      throw Error("SchemaError", "each term needs \"coeff\" and \"monomial\"");
    Rat c = rat_from_json(term.at("coeff"));
    Monomial m;
    for (const Json& f : term.at("monomial")) {
      if (!f.is_array() || f.size() != 4 || f[0] != "w")
        throw Error("SchemaError", "monomial factors look like [\"w\",degree,index,power]");
      Generator g{f[1].get<int>(), f[2].get<int>()};
      int power = f[3].get<int>();
      if (power <= 0) throw Error("SchemaError", "factor powers must be positive");
      m.factors.emplace_back(g, power);
    }
    std::sort(m.factors.begin(), m.factors.end());
    for (std::size_t i = 0; i + 1 < m.factors.size(); ++i)
      if (m.factors[i].first == m.factors[i + 1].first)
        throw Error("SchemaError", "monomial factors must use distinct generators");
    for (const auto& [g, e] : m.factors)
      if (g.degree % 2 != 0 && e > 1)
        throw Error("SchemaError", "odd generators cannot carry powers above one");
    out.add_term(m, c);
  }
  return out;
}

Json ledger_to_json(const Ledger& l) {
  Json entries = Json::array();
  for (const auto& e : l.entries) {
    Json je;
    je["d"] = e.d;
    je["input_degree"] = e.input_degree;
    je["value"] = sym_to_json(e.value);
    entries.push_back(std::move(je));
  }
  if (!l.betti) return entries;
  Json out;
  Json betti = Json::array();
  for (long long b : l.betti->b) betti.push_back(b);
  out["betti"] = std::move(betti);
  out["entries"] = std::move(entries);
  return out;
}

Ledger ledger_from_json(const Json& j) {
  Ledger out;
  const Json* entries = &j;
  if (j.is_object()) {
    if (!j.contains("entries"))
      throw Error("SchemaError", "ledger object needs an \"entries\" array");
    if (j.contains("betti")) {
      const Json& b = j.at("betti");
      if (!b.is_array() || b.size() != 5)
        throw Error("SchemaError", "\"betti\" must list b_0 .. b_4");
      BettiProfile bp;
      for (std::size_t i = 0; i < 5; ++i) bp.b[i] = b[i].get<long long>();
      out.betti = bp;
    }
    entries = &j.at("entries");
  }
  if (!entries->is_array())
    throw Error("SchemaError", "ledger entries must form an array");
  for (const Json& je : *entries) {
    if (!je.is_object() || !je.contains("d") || !je.contains("value"))
      throw Error("SchemaError", "each ledger entry needs \"d\" and \"value\"");
    LedgerEntry e;
    e.d = je.at("d").get<long long>();
    e.input_degree = je.contains("input_degree") ? je.at("input_degree").get<long long>() : 0;
    e.value = sym_from_json(je.at("value"));
    out.entries.push_back(std::move(e));
  }
  return out;
}

Json error_to_json(const Error& e) {
  Json inner;
  inner["code"] = e.code();
  inner["message"] = e.what();
  if (const auto* s = dynamic_cast<const SyntaxError*>(&e)) {
    inner["line"] = s->line;
    inner["column"] = s->column;
    inner["token"] = s->token;
  }
  Json out;
  out["error"] = std::move(inner);
  return out;
}

} // namespace gravicat
