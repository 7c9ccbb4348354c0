#pragma once

#include "sympl/bivector.hpp"
#include "sympl/psm.hpp"
#include "sympl/relational.hpp"

#include <json.hpp>

namespace sympl {

using json = nlohmann::json;

// Rational matrices and vectors as arrays of rational strings ("3/4", "-2").
json to_json(const Mat& m);
Mat mat_from_json(const json& j);
json to_json(const std::vector<Rat>& v);
std::vector<Rat> vec_from_json(const json& j);

// Subspace = {"ambient_dim": int, "basis": [[...]]}; basis entries are the
// basis vectors.
json to_json(const Subspace& s);

// Relation = {"source_dim", "target_dim", "graph_basis"}.
json to_json(const LinRel& r);

// PolyBivector = {"dim": n, "entries": [{"i", "j", "poly": [{"coef","exps"}]}]}
// with 1-based i < j.
json to_json(const PolyBivector& pi);
PolyBivector bivector_from_json(const json& j);

// Field = {"bivector": ..., "N": int, "X": [[...]], "eta": [[...]]}.
json to_json(const DiscretizedBoundaryField& f);
DiscretizedBoundaryField field_from_json(const json& j);

json to_json(const GroupoidReport& r);
json to_json(const InducedPoisson& p);

} // namespace sympl
