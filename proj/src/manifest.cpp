#include "gravicat/manifest.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "gravicat/error.hpp"

namespace gravicat {

const CobordismRecord* Manifest::find(const std::string& name) const {
  for (const auto& [n, r] : cobordisms)
    if (n == name) return &r;
  return nullptr;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("IoError", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error("IoError", "cannot read '" + path + "'");
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw Error("SchemaError", "'" + path + "' is not valid JSON: " + e.what());
  }
}

void enforce_rank_cap(const Lattice& l, long long max_rank) {
  if (static_cast<long long>(l.rank()) > max_rank)
    throw Error("RankLimitExceeded",
                "lattice rank " + std::to_string(l.rank()) + " exceeds the cap of " +
                    std::to_string(max_rank) + " (set GRAVICAT_MAX_RANK to raise it)");
}

Lattice load_lattice_ref(const std::string& ref, long long max_rank) {
  Lattice l;
  if (ref.rfind("builtin:", 0) == 0)
    l = builtin_lattice(ref.substr(8));
  else
    l = lattice_from_json(read_json_file(ref));
  enforce_rank_cap(l, max_rank);
  return l;
}

namespace {

[[noreturn]] void schema_fail(const std::string& where, const std::string& what) {
  throw Error("SchemaError", where + ": " + what);
}

BoundaryObject resolve_boundary(const Json& arr, const std::string& where,
                                const std::map<std::string, BoundaryKind>& declared) {
  if (!arr.is_array()) schema_fail(where, "boundary list must be an array of labels");
  BoundaryObject out;
  for (const Json& e : arr) {
    if (!e.is_string()) schema_fail(where, "boundary entries are labels declared under \"objects\"");
    std::string label = e.get<std::string>();
    auto it = declared.find(label);
    if (it == declared.end())
      schema_fail(where, "boundary label '" + label + "' is not declared");
    out.push_back(BoundaryComponent{label, it->second});
  }
  return out;
}

} // namespace

Manifest manifest_from_json(const Json& j, long long max_rank) {
  if (!j.is_object()) throw Error("SchemaError", "manifest must be a JSON object");
  Manifest m;
  std::map<std::string, BoundaryKind> declared;

  if (j.contains("objects")) {
    const Json& objs = j.at("objects");
    if (!objs.is_array()) schema_fail("objects", "must be an array");
    for (std::size_t i = 0; i < objs.size(); ++i) {
      const Json& o = objs[i];
      std::string where = "objects[" + std::to_string(i) + "]";
      if (!o.is_object() || !o.contains("label") || !o.contains("kind"))
        schema_fail(where, "needs \"label\" and \"kind\"");
      BoundaryComponent c{o.at("label").get<std::string>(),
                          boundary_kind_from_name(o.at("kind").get<std::string>())};
      if (!declared.emplace(c.label, c.kind).second)
        schema_fail(where, "duplicate object label '" + c.label + "'");
      m.objects.push_back(std::move(c));
    }
  }

  if (j.contains("lattices")) {
    const Json& lats = j.at("lattices");
    if (!lats.is_array()) schema_fail("lattices", "must be an array");
    for (std::size_t i = 0; i < lats.size(); ++i) {
      const Json& o = lats[i];
      std::string where = "lattices[" + std::to_string(i) + "]";
      if (!o.is_object() || !o.contains("name")) schema_fail(where, "needs a \"name\"");
      std::string name = o.at("name").get<std::string>();
      Lattice l;
      if (o.contains("builtin"))
        l = builtin_lattice(o.at("builtin").get<std::string>());
      else if (o.contains("gram"))
        l = lattice_from_json(o);
      else
        schema_fail(where, "needs \"gram\" or \"builtin\"");
      enforce_rank_cap(l, max_rank);
      if (!m.lattices.emplace(name, std::move(l)).second)
        schema_fail(where, "duplicate lattice name '" + name + "'");
    }
  }

  auto resolve_lattice = [&](const Json& spec, const std::string& where) -> Lattice {
    if (spec.is_string()) {
      std::string ref = spec.get<std::string>();
      if (ref.rfind("builtin:", 0) == 0) {
        Lattice l = builtin_lattice(ref.substr(8));
        enforce_rank_cap(l, max_rank);
        return l;
      }
      auto it = m.lattices.find(ref);
      if (it == m.lattices.end())
        schema_fail(where, "lattice '" + ref + "' is not declared under \"lattices\"");
      return it->second;
    }
    if (spec.is_object()) {
      Lattice l = lattice_from_json(spec);
      enforce_rank_cap(l, max_rank);
      return l;
    }
    schema_fail(where, "\"lattice\" must be a name, builtin:NAME, or an inline object");
  };

  std::set<std::string> names;
  std::vector<std::string> violations;
  if (j.contains("cobordisms")) {
    const Json& cobs = j.at("cobordisms");
    if (!cobs.is_array()) schema_fail("cobordisms", "must be an array");
    for (std::size_t i = 0; i < cobs.size(); ++i) {
      const Json& o = cobs[i];
      std::string where = "cobordisms[" + std::to_string(i) + "]";
      if (!o.is_object() || !o.contains("name")) schema_fail(where, "needs a \"name\"");
      std::string name = o.at("name").get<std::string>();
      where = "cobordisms[" + std::to_string(i) + "] '" + name + "'";
      if (!names.insert(name).second) schema_fail(where, "duplicate cobordism name");

      CobordismRecord r;
      r.dim = o.contains("dim") ? o.at("dim").get<int>() : 4;
      r.incoming = resolve_boundary(o.contains("in") ? o.at("in") : Json::array(), where, declared);
      r.outgoing = resolve_boundary(o.contains("out") ? o.at("out") : Json::array(), where, declared);
      if (!o.contains("chi")) schema_fail(where, "needs \"chi\"");
      r.chi = o.at("chi").get<long long>();
      r.sigma = o.contains("sigma") ? o.at("sigma").get<long long>() : 0;

      if (o.contains("genus")) {
        if (r.dim != 2) schema_fail(where, "\"genus\" applies to dimension-2 records");
        if (o.contains("lattice")) schema_fail(where, "give \"genus\" or \"lattice\", not both");
        long long g = o.at("genus").get<long long>();
        if (g < 0) schema_fail(where, "genus must be nonnegative");
        Lattice l;
        for (long long k = 0; k < g; ++k) l = direct_sum(l, builtin_lattice("U"));
        enforce_rank_cap(l, max_rank);
        r.lattice = std::move(l);
      } else if (o.contains("lattice")) {
        r.lattice = resolve_lattice(o.at("lattice"), where);
      }

      r.spin = o.contains("spin") && o.at("spin").get<bool>();
      r.smooth = !o.contains("smooth") || o.at("smooth").get<bool>();
      if (o.contains("c1")) {
        std::vector<Int> c1;
        for (const Json& v : o.at("c1")) c1.push_back(int_from_json(v));
        r.c1 = std::move(c1);
      }
      if (o.contains("b1")) r.b1 = o.at("b1").get<long long>();

      if (o.contains("relabel")) {
        const Json& rl = o.at("relabel");
        if (!rl.is_object()) schema_fail(where, "\"relabel\" must map old labels to new ones");
        std::map<std::string, std::string> renames;
        for (const auto& [from, to] : rl.items()) {
          if (!to.is_string()) schema_fail(where, "\"relabel\" values must be labels");
          std::string target = to.get<std::string>();
          auto was = declared.find(from);
          auto now = declared.find(target);
          if (was == declared.end() || now == declared.end())
            schema_fail(where, "relabel endpoints must be declared objects");
          if (was->second != now->second)
            schema_fail(where, "relabel must preserve the boundary kind");
          renames[from] = target;
        }
        r = relabel_boundary(r, renames);
      }

      for (const std::string& v : validate_cobordism(r))
        violations.push_back(name + ": " + v);
      m.cobordisms.emplace_back(std::move(name), std::move(r));
    }
  }

  if (!violations.empty()) {
    std::string msg = "manifest records fail validation";
    for (const std::string& v : violations) msg += "; " + v;
    throw Error("ValidationError", msg);
  }
  return m;
}

Manifest load_manifest(const std::string& path, long long max_rank) {
  return manifest_from_json(read_json_file(path), max_rank);
}

namespace {

std::string at_position(const Expression& e) {
  return " (at " + std::to_string(e.line) + ":" + std::to_string(e.column) + ")";
}

} // namespace

CobordismRecord evaluate(const Expression& e, const Manifest& m) {
  switch (e.kind) {
    case Expression::Kind::Name: {
      const CobordismRecord* r = m.find(e.name);
      if (!r) throw Error("UnboundName", "name '" + e.name + "' is not bound" + at_position(e));
      return *r;
    }
    case Expression::Kind::Reverse:
      return reverse_morphism(evaluate(*e.lhs, m));
    case Expression::Kind::Compose: {
      CobordismRecord a = evaluate(*e.lhs, m);
      CobordismRecord b = evaluate(*e.rhs, m);
      try {
        return compose(a, b);
      } catch (const Error& err) {
        throw Error(err.code(), err.what() + at_position(e));
      }
    }
    case Expression::Kind::Union: {
      CobordismRecord a = evaluate(*e.lhs, m);
      CobordismRecord b = evaluate(*e.rhs, m);
      try {
        return disjoint_union(a, b);
      } catch (const Error& err) {
        throw Error(err.code(), err.what() + at_position(e));
      }
    }
  }
  throw std::logic_error("evaluate: unhandled node kind");
}

} // namespace gravicat
