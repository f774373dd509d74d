#pragma once

#include <json.hpp>

#include "gravicat/classify.hpp"
#include "gravicat/cobordism.hpp"
#include "gravicat/lattice.hpp"
#include "gravicat/ledger.hpp"
#include "gravicat/walls.hpp"

namespace gravicat {

using Json = nlohmann::json;

// Integers serialize as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that; rationals always as "p/q" strings.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);
Rat rat_from_json(const Json& j);

Json lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const Json& j);

Json profile_to_json(const LatticeProfile& p);
Json canonical_to_json(const CanonicalForm& f);
Json k0_to_json(const K0Class& k);
Json smooth_report_to_json(const SmoothReport& r);

Json record_to_json(const CobordismRecord& w);

Json sym_to_json(const SymElement& v);
SymElement sym_from_json(const Json& j);

Json ledger_to_json(const Ledger& l);
Ledger ledger_from_json(const Json& j);

Json error_to_json(const class Error& e);

} // namespace gravicat
