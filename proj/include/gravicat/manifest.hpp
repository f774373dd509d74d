#pragma once

#include <map>
#include <string>
#include <vector>

#include "gravicat/cobordism.hpp"
#include "gravicat/expr.hpp"
#include "gravicat/json_io.hpp"

namespace gravicat {

// Named scene the expression language evaluates against: declared boundary
// components, named lattices, and named cobordism records.
struct Manifest {
  std::vector<BoundaryComponent> objects;
  std::map<std::string, Lattice> lattices;
  std::vector<std::pair<std::string, CobordismRecord>> cobordisms;

  const CobordismRecord* find(const std::string& name) const;
};

// Parses, cross-references, and validates every record. Rank caps apply to
// lattices declared inline or by reference.
Manifest manifest_from_json(const Json& j, long long max_rank);
Manifest load_manifest(const std::string& path, long long max_rank);

CobordismRecord evaluate(const Expression& e, const Manifest& m);

// Shared helpers for anything that reads lattices from disk or by name.
Json read_json_file(const std::string& path);
Lattice load_lattice_ref(const std::string& ref, long long max_rank);
void enforce_rank_cap(const Lattice& l, long long max_rank);

} // namespace gravicat
