#pragma once

#include <json.hpp>

#include "lift/degeneration.hpp"
#include "lift/git.hpp"
#include "lift/mutation.hpp"
#include "lift/period.hpp"
#include "lift/polytope.hpp"
#include "lift/scaffold.hpp"

namespace lift {

// JSON conventions (see docs/formats.md): integers that fit in 64 bits
// are emitted as JSON numbers, larger ones as decimal strings; rationals
// are "p/q" strings; all indices (variables, GIT columns, fan rays) are
// 1-based.
using Json = nlohmann::json;

Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

Json to_json(const IntMat& m);  // row-major nested arrays
IntMat intmat_from_json(const Json& j);

Json to_json(const Fan& f);
Fan fan_from_json(const Json& j);

Json to_json(const StackyFan& s);

Json to_json(const GitData& g);
GitData git_from_json(const Json& j);

Json to_json(const Polytope& p);

Json to_json(const Scaffolding& sc);
Scaffolding scaffolding_from_json(const Json& j);

Json to_json(const Mutation& m);
Mutation mutation_from_json(const Json& j);

Json to_json(const PeriodSeq& p);

Json to_json(const WeightMatrix& wm);
Json to_json(const InversionReport& rep);
Json to_json(const DegenerationReport& rep);

}  // namespace lift
