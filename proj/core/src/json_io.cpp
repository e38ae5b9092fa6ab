#include "icosal/json_io.hpp"

#include "icosal/rational.hpp"

#include "json.hpp"

#include <stdexcept>
#include <utility>

namespace icosal {

namespace {

using nlohmann::json;

json cyclo_obj(const Cyclo& v) {
    json coeffs = json::array();
    for (const Rational& r : v.coeffs()) coeffs.push_back(rational_str(r));
    return json{{"conductor", v.conductor()}, {"coeffs", std::move(coeffs)}};
}

Rational rational_of(const json& j, const char* where) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw std::invalid_argument(std::string(where) + ": expected integer or \"num/den\"");
}

Cyclo cyclo_of(const json& j) {
    if (j.is_number_integer()) return Cyclo(Rational(j.get<long long>()));
    if (j.is_string()) return Cyclo(parse_rational(j.get<std::string>()));
    if (j.is_object()) {
        if (j.contains("zeta")) {
            const long n = j.at("zeta").get<long>();
            const long k = j.value("power", 1L);
            return Cyclo::root_of_unity(n, k);
        }
        const long conductor = j.at("conductor").get<long>();
        std::vector<Rational> coeffs;
        for (const json& c : j.at("coeffs")) coeffs.push_back(rational_of(c, "coeffs"));
        return Cyclo::from_parts(conductor, std::move(coeffs));
    }
    throw std::invalid_argument("value: expected integer, string, or object");
}

json param_obj(const UnramifiedParam& p) {
    json roots = json::array();
    for (const Cyclo& g : p.inverse_roots()) roots.push_back(cyclo_obj(g));
    return json{{"inverse_roots", std::move(roots)}};
}

UnramifiedParam param_of(const json& j) {
    std::vector<Cyclo> roots;
    for (const json& r : j.at("inverse_roots")) roots.push_back(cyclo_of(r));
    return UnramifiedParam(std::move(roots));
}

json field_obj(const NumberFieldDesc& f) {
    return json{{"conductor", f.conductor()}, {"subgroup", f.fixing_subgroup()}};
}

json witness_obj(const CaseWitness& w) {
    json obj{{"z", cyclo_obj(w.z)}};
    if (w.unit) obj[w.label == CaseLabel::case_2 ? "mu" : "zeta"] = cyclo_obj(*w.unit);
    return obj;
}

json classification_obj(const ClassificationReport& r) {
    json cases = json::array();
    json witnesses = json::object();
    for (const CaseWitness& w : r.matched) {
        cases.push_back(case_label_str(w.label));
        witnesses[case_label_str(w.label)] = witness_obj(w);
    }
    return json{{"sym3_match", r.sym3_match},
                {"cases", std::move(cases)},
                {"witnesses", std::move(witnesses)},
                {"adjoint_isomorphic", r.adjoint_isomorphic}};
}

json tuple_obj(const Cyclo& a, const Cyclo& w, const Cyclo& c, const Cyclo& wp) {
    return json{{"a", cyclo_obj(a)},
                {"w", cyclo_obj(w)},
                {"c", cyclo_obj(c)},
                {"wp", cyclo_obj(wp)}};
}

// Rethrows library/JSON exceptions as invalid_argument so callers can map
// every malformed-input path to the same usage-error exit code.
template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string(what) + ": " + e.what());
    } catch (const std::domain_error& e) {
        throw std::invalid_argument(std::string(what) + ": " + e.what());
    }
}

} // namespace

std::string cyclo_to_json(const Cyclo& v) { return cyclo_obj(v).dump(); }

Cyclo cyclo_from_json(const std::string& text) {
    return guarded("cyclo", [&] { return cyclo_of(json::parse(text)); });
}

std::string param_to_json(const UnramifiedParam& p) { return param_obj(p).dump(); }

UnramifiedParam param_from_json(const std::string& text) {
    return guarded("parameter", [&] { return param_of(json::parse(text)); });
}

std::string steinberg_to_json(const SteinbergParam& p) {
    json blocks = json::array();
    for (const SteinbergBlock& b : p.blocks())
        blocks.push_back(json{{"lambda_exp", b.lambda_exp}, {"size", b.size}});
    return json{{"blocks", std::move(blocks)}}.dump();
}

SteinbergParam steinberg_from_json(const std::string& text) {
    return guarded("steinberg", [&] {
        const json j = json::parse(text);
        std::vector<SteinbergBlock> blocks;
        for (const json& b : j.at("blocks"))
            blocks.push_back({b.at("lambda_exp").get<long>(), b.at("size").get<long>()});
        return SteinbergParam(std::move(blocks));
    });
}

std::string arch_to_json(const ArchParam& p) {
    json exps = json::array();
    for (const ArchChar& e : p.exponents())
        exps.push_back(json{{"m", e.m}, {"two_s", rational_str(e.two_s)}});
    return json{{"exponents", std::move(exps)}}.dump();
}

ArchParam arch_from_json(const std::string& text) {
    return guarded("arch", [&] {
        const json j = json::parse(text);
        std::vector<ArchChar> exps;
        for (const json& e : j.at("exponents"))
            exps.push_back({e.at("m").get<long>(), rational_of(e.at("two_s"), "two_s")});
        return ArchParam(std::move(exps));
    });
}

std::string field_to_json(const NumberFieldDesc& f) { return field_obj(f).dump(); }

NumberFieldDesc field_from_json(const std::string& text) {
    return guarded("field", [&] {
        const json j = json::parse(text);
        return NumberFieldDesc::fixed_field(j.at("conductor").get<long>(),
                                            j.at("subgroup").get<std::vector<long>>());
    });
}

ClassifyInput parse_classify_input(const std::string& text) {
    return guarded("classify input", [&]() -> ClassifyInput {
        const json j = json::parse(text);
        if (j.contains("pi") || j.contains("pi_prime")) {
            const UnramifiedParam pi = param_of(j.at("pi"));
            const UnramifiedParam pi_prime = param_of(j.at("pi_prime"));
            if (pi.dimension() != 2 || pi_prime.dimension() != 2)
                throw std::invalid_argument(
                    "classify input: parameters must be 2-dimensional");
            return {pi.inverse_roots()[0], pi.central(), pi_prime.inverse_roots()[0],
                    pi_prime.central()};
        }
        const json& wp = j.contains("wp") ? j.at("wp") : j.at("w'");
        return {cyclo_of(j.at("a")), cyclo_of(j.at("w")), cyclo_of(j.at("c")),
                cyclo_of(wp)};
    });
}

LFactorInput parse_lfactor_input(const std::string& text) {
    return guarded("lfactor input", [&]() -> LFactorInput {
        const json j = json::parse(text);
        const long q = j.at("q").get<long>();
        LocalLFactor f = local_l_factor(param_of(j.at("param")), q);
        return {std::move(f.param), f.prime_power_q};
    });
}

std::string analysis_to_json(const LocalPairAnalysis& a, int indent) {
    json j = classification_obj(a.classification);
    j["si3_local"] = a.si3_local;
    if (a.power_preconditions)
        j["power_relation"] = power_relation_str(a.power_relation);
    else
        j["power_relation"] = nullptr;
    j["rationality_field"] = field_obj(a.rationality);
    return j.dump(indent);
}

std::string enumeration_to_json(const EnumerationReport& r, std::size_t max_solutions,
                                int indent) {
    json j{{"max_order", r.max_order},
           {"trivial_center", r.trivial_center},
           {"max_central_order", r.max_central_order},
           {"tuples_scanned", r.tuples_scanned},
           {"sym3_matches", r.sym3_matches}};

    json cases = json::object();
    for (std::size_t k = 0; k < r.case_counts.size(); ++k)
        cases[case_label_str(static_cast<CaseLabel>(k))] = r.case_counts[k];
    j["case_counts"] = std::move(cases);

    json uncovered = json::array();
    for (const UncoveredPair& u : r.uncovered)
        uncovered.push_back(tuple_obj(u.a, u.w, u.c, u.wp));
    j["uncovered"] = std::move(uncovered);

    j["adjoint_si3_pairs"] = r.adjoint_si3_pairs;
    json powers = json::object();
    for (std::size_t k = 0; k < r.power_counts.size(); ++k)
        powers[power_relation_str(static_cast<PowerRelation>(k))] = r.power_counts[k];
    j["power_counts"] = std::move(powers);

    json power_none = json::array();
    for (const UncoveredPair& u : r.power_none)
        power_none.push_back(tuple_obj(u.a, u.w, u.c, u.wp));
    j["power_none"] = std::move(power_none);

    j["case2_w1"] = json{{"count", r.case2_w1_count},
                         {"a4_violations", r.case2_w1_a4_violations}};

    if (r.trivial_center) {
        json unc = json::array();
        for (const UncoveredPair& u : r.dichotomy_uncovered)
            unc.push_back(tuple_obj(u.a, u.w, u.c, u.wp));
        j["trivial_center_dichotomy"] =
            json{{"consistent_pairs", r.consistent_pairs},
                 {"case_i_m4", r.case_i_m4},
                 {"case_i_m6", r.case_i_m6},
                 {"case_ii", r.case_ii},
                 {"uncovered", std::move(unc)},
                 {"rationality_mismatches", r.rationality_mismatches},
                 {"tau_mismatches", r.tau_mismatches}};
    }

    json sols = json::array();
    for (std::size_t i = 0; i < r.solutions.size() && i < max_solutions; ++i) {
        const MatchedSolution& s = r.solutions[i];
        json entry = tuple_obj(s.a, s.w, s.c, s.wp);
        entry["classification"] = classification_obj(s.report);
        sols.push_back(std::move(entry));
    }
    j["solutions_listed"] = sols.size();
    j["solutions"] = std::move(sols);
    return j.dump(indent);
}

std::string campaigns_to_json(const std::vector<CampaignResult>& results, int indent) {
    json arr = json::array();
    for (const CampaignResult& r : results) {
        json counters = json::object();
        for (const auto& [name, count] : r.counters) counters[name] = count;
        arr.push_back(json{{"identity", r.identity},
                           {"random_trials", r.random_trials},
                           {"sweep_checks", r.sweep_checks},
                           {"violations", r.violations},
                           {"counters", std::move(counters)},
                           {"notes", r.notes}});
    }
    return json{{"campaigns", std::move(arr)}}.dump(indent);
}

std::string euler_factor_json_str(const LocalLFactor& factor) {
    std::string out;
    for (const Cyclo& g : factor.param.inverse_roots()) {
        if (!out.empty()) out += " * ";
        out += "(1 - " + cyclo_obj(g).dump() + " * " +
               std::to_string(factor.prime_power_q) + "^-s)^-1";
    }
    return out;
}

} // namespace icosal
