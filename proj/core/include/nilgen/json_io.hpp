#pragma once

#include <json.hpp>

#include "nilgen/ahsp.hpp"
#include "nilgen/bounds.hpp"
#include "nilgen/group.hpp"
#include "nilgen/phi.hpp"
#include "nilgen/profile.hpp"
#include "nilgen/subgroup.hpp"

// Wire formats. Integers are emitted as JSON numbers while they fit in
// 53 bits (exact in every JSON reader) and as decimal strings beyond;
// parsers accept either form. Orders and rationals are always decimal
// strings: {"num": "21", "den": "32"}.

namespace nilgen {

using Json = nlohmann::json;

Json integer_to_json(const Integer& value);
Integer integer_from_json(const Json& j);

Json rational_to_json(const Rational& value);
Rational rational_from_json(const Json& j);

Json group_to_json(const AbelianGroup& g);           // {"divisors": [...]}
AbelianGroup group_from_json(const Json& j);

Json element_to_json(const Element& e);              // {"coords": [...]}
Element element_from_json(const AbelianGroup& g, const Json& j);

Json subgroup_to_json(const Subgroup& s);            // generators/order/basis

Json profile_to_json(const NilpotentProfile& p);
NilpotentProfile profile_from_json(const Json& j);

Json phi_value_to_json(const PhiValue& v);
Json monte_carlo_to_json(const MonteCarloEstimate& e);
Json bound_report_to_json(const BoundReport& r);
Json tightness_witness_to_json(const TightnessWitness& w);

Json iteration_plan_to_json(const IterationPlan& p);
Json simulation_result_to_json(const SimulationResult& r);

HspInstance hsp_instance_from_json(const Json& j);
Json hsp_instance_to_json(const HspInstance& inst);

}  // namespace nilgen
