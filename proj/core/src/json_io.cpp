#include "nilgen/json_io.hpp"

#include "nilgen/errors.hpp"

namespace nilgen {

namespace {

const Integer kJsonSafe = (Integer(1) << 53) - 1;

}  // namespace

Json integer_to_json(const Integer& value) {
    if (value >= -kJsonSafe && value <= kJsonSafe) {
        return Json(value.get_si());
    }
    return Json(value.get_str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) {
            unsigned long long v = j.get<unsigned long long>();
            Integer out;
            mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
            return out;
        }
        long long v = j.get<long long>();
        Integer out;
        const bool negative = v < 0;
        unsigned long long magnitude =
            negative ? ~static_cast<unsigned long long>(v) + 1ULL
                     : static_cast<unsigned long long>(v);
        mpz_import(out.get_mpz_t(), 1, 1, sizeof(magnitude), 0, 0, &magnitude);
        return negative ? Integer(-out) : out;
    }
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw invalid_input_error("malformed integer literal '" + j.get<std::string>() + "'");
        }
    }
    throw invalid_input_error("expected an integer (number or decimal string)");
}

Json rational_to_json(const Rational& value) {
    return Json{{"num", value.get_num().get_str()}, {"den", value.get_den().get_str()}};
}

Rational rational_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw invalid_input_error("expected a rational object {\"num\": ..., \"den\": ...}");
    return make_rational(integer_from_json(j.at("num")), integer_from_json(j.at("den")));
}

Json group_to_json(const AbelianGroup& g) {
    Json divisors = Json::array();
    for (const auto& f : g.factors()) divisors.push_back(integer_to_json(f.modulus));
    return Json{{"divisors", std::move(divisors)}};
}

AbelianGroup group_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("divisors") || !j.at("divisors").is_array())
        throw invalid_input_error("expected {\"divisors\": [...]}");
    std::vector<Integer> divisors;
    for (const auto& d : j.at("divisors")) divisors.push_back(integer_from_json(d));
    return parse_group(divisors);
}

Json element_to_json(const Element& e) {
    Json coords = Json::array();
    for (const auto& c : e.coords) coords.push_back(integer_to_json(c));
    return Json{{"coords", std::move(coords)}};
}

Element element_from_json(const AbelianGroup& g, const Json& j) {
    const Json* coords = nullptr;
    if (j.is_array()) {
        coords = &j;
    } else if (j.is_object() && j.contains("coords") && j.at("coords").is_array()) {
        coords = &j.at("coords");
    } else {
        throw invalid_input_error("expected an element: {\"coords\": [...]} or a bare array");
    }
    std::vector<Integer> values;
    for (const auto& c : *coords) values.push_back(integer_from_json(c));
    return element_from_coords(g, std::move(values));
}

Json subgroup_to_json(const Subgroup& s) {
    Json generators = Json::array();
    for (const auto& e : subgroup_generators(s)) generators.push_back(element_to_json(e).at("coords"));
    Json basis = Json::array();
    for (const auto& row : s.basis()) {
        Json out_row = Json::array();
        for (const auto& v : row) out_row.push_back(integer_to_json(v));
        basis.push_back(std::move(out_row));
    }
    return Json{{"generators", std::move(generators)},
                {"order", s.order().get_str()},
                {"basis", std::move(basis)}};
}

Json profile_to_json(const NilpotentProfile& p) {
    Json entries = Json::array();
    for (const auto& e : p.entries()) {
        entries.push_back(Json{{"prime", integer_to_json(e.prime)},
                               {"rank", e.rank},
                               {"len", e.length}});
    }
    return Json{{"entries", std::move(entries)}};
}

NilpotentProfile profile_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("entries") || !j.at("entries").is_array())
        throw invalid_input_error("expected {\"entries\": [...]}");
    std::vector<ProfileEntry> entries;
    for (const auto& e : j.at("entries")) {
        entries.push_back(ProfileEntry{integer_from_json(e.at("prime")),
                                       e.at("rank").get<long>(),
                                       e.at("len").get<long>()});
    }
    return NilpotentProfile(std::move(entries));
}

Json phi_value_to_json(const PhiValue& v) {
    return Json{{"k", v.k},
                {"value", rational_to_json(v.value)},
                {"profile", profile_to_json(v.group_descriptor)}};
}

Json monte_carlo_to_json(const MonteCarloEstimate& e) {
    return Json{{"trials", integer_to_json(e.trials)},
                {"successes", integer_to_json(e.successes)},
                {"point_estimate", rational_to_json(e.point_estimate)},
                {"confidence_halfwidth", rational_to_json(e.confidence_halfwidth)},
                {"seed", e.seed}};
}

Json bound_report_to_json(const BoundReport& r) {
    Json j{{"epsilon", rational_to_json(r.epsilon)},
           {"rank_bound_k", r.rank_bound_k},
           {"len_bound_k", r.len_bound_k},
           {"phi_at_rank_bound", rational_to_json(r.phi_at_rank_bound)},
           {"phi_at_len_bound", rational_to_json(r.phi_at_len_bound)}};
    if (r.pak_bound_k) j["pak_bound_k"] = *r.pak_bound_k;
    if (r.exact_min_k) j["exact_min_k"] = *r.exact_min_k;
    return j;
}

Json tightness_witness_to_json(const TightnessWitness& w) {
    return Json{{"group", group_to_json(w.group)},
                {"k", w.k},
                {"phi", rational_to_json(w.phi)},
                {"claim_holds", w.claim_holds}};
}

namespace {

std::string strategy_name(PlanStrategy s) {
    switch (s) {
        case PlanStrategy::rank: return "rank";
        case PlanStrategy::len: return "len";
        case PlanStrategy::len_unknown_h: return "len_unknown_h";
    }
    return "rank";
}

}  // namespace

Json iteration_plan_to_json(const IterationPlan& p) {
    return Json{{"strategy", strategy_name(p.strategy)},
                {"k", p.k},
                {"epsilon", rational_to_json(p.epsilon)}};
}

Json simulation_result_to_json(const SimulationResult& r) {
    Json j{{"trials", integer_to_json(r.trials)},
           {"successes", integer_to_json(r.successes)},
           {"point_estimate", rational_to_json(r.point_estimate)},
           {"confidence_halfwidth", rational_to_json(r.confidence_halfwidth)},
           {"seed", r.seed},
           {"k", r.k}};
    if (r.plan) j["plan"] = iteration_plan_to_json(*r.plan);
    return j;
}

HspInstance hsp_instance_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("group"))
        throw invalid_input_error("expected {\"group\": ..., \"hidden_subgroup_generators\": [...]}");
    AbelianGroup g = group_from_json(j.at("group"));
    std::vector<Element> generators;
    if (j.contains("hidden_subgroup_generators")) {
        if (!j.at("hidden_subgroup_generators").is_array())
            throw invalid_input_error("hidden_subgroup_generators must be an array");
        for (const auto& e : j.at("hidden_subgroup_generators"))
            generators.push_back(element_from_json(g, e));
    }
    return HspInstance::from_generators(g, generators);
}

Json hsp_instance_to_json(const HspInstance& inst) {
    Json generators = Json::array();
    for (const auto& e : subgroup_generators(inst.hidden))
        generators.push_back(element_to_json(e).at("coords"));
    return Json{{"group", group_to_json(inst.group)},
                {"hidden_subgroup_generators", std::move(generators)}};
}

}  // namespace nilgen
