#pragma once

#include "json.hpp"
#include "subdiff_lab/monotone.hpp"
#include "subdiff_lab/optimality.hpp"

namespace subdiff {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const Point& p);
ordered_json to_json(ExtReal v);  // number, or "+inf"
ordered_json to_json(const Polytope& p);
ordered_json to_json(const SubgradientSample& s);
ordered_json to_json(const LinkReport& r);
ordered_json to_json(const EkelandWitness& w);
ordered_json to_json(const MVIWitness& w);
ordered_json to_json(const Violation& v);
ordered_json to_json(const TestReport& r);
ordered_json to_json(const RefutationWitness& w);
ordered_json to_json(const OperatorGraph& g);
ordered_json to_json(const AbsorbReport& r);

}  // namespace subdiff
