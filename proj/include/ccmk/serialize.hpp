#pragma once

// JSON encoding of reports, catalog listings and verification verdicts.
// Integers that can grow (matrix entries, torsion orders) are decimal strings.

#include "ccmk/catalog.hpp"
#include "ccmk/groups.hpp"
#include "ccmk/kcalc.hpp"
#include "ccmk/verify.hpp"
#include "ccmk/znf.hpp"

#include <nlohmann/json.hpp>

namespace ccmk::serialize {

using Json = nlohmann::ordered_json;

Json to_json(const znf::IntegerMatrix& m);
znf::IntegerMatrix matrix_from_json(const Json& j);

Json to_json(const groups::StructuredAbelianGroup& g);
groups::StructuredAbelianGroup group_from_json(const Json& j);

Json to_json(const groups::ExponentLattice& x);
groups::ExponentLattice lattice_from_json(const Json& j);

Json to_json(const catalog::RingSpec& spec);
catalog::RingSpec spec_from_json(const Json& j);

/// {spec, t_matrix, g0, h_rank, xi, g1, notes}; unavailable parts are null.
Json to_json(const kcalc::ComputationReport& r);
/// Restores every serialized field; diagnostics and catalog data are not part
/// of the encoding.
kcalc::ComputationReport report_from_json(const Json& j);

Json to_json(const catalog::FamilyDescriptor& d);
Json catalog_to_json(const std::vector<catalog::FamilyDescriptor>& families);

/// [{case, verdict, counterexample?}, ...]
Json verdicts_to_json(const std::vector<verify::Verdict>& verdicts);

}  // namespace ccmk::serialize
