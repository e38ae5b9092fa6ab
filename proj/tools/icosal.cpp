#include "CLI11.hpp"
#include "json.hpp"

#include "icosal/campaign.hpp"
#include "icosal/classify.hpp"
#include "icosal/icosa.hpp"
#include "icosal/json_io.hpp"
#include "icosal/lfactors.hpp"
#include "icosal/number_field.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace {

using nlohmann::json;
using namespace icosal;

// Exit codes: 0 success, 1 mathematical violation, 2 input/usage error.
constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::invalid_argument("cannot open input file: " + path);
        ss << in.rdbuf();
    }
    return ss.str();
}

std::string field_text(const NumberFieldDesc& f) {
    if (f == NumberFieldDesc::rationals()) return "Q";
    if (f == NumberFieldDesc::fixed_field(5, {1, 4})) return "Q(sqrt5)";
    std::string s = "conductor " + std::to_string(f.conductor()) + " subgroup {";
    bool first = true;
    for (long r : f.fixing_subgroup()) {
        if (!first) s += ", ";
        s += std::to_string(r);
        first = false;
    }
    return s + "}";
}

int cmd_classify(const std::string& input_path, bool strict, const std::string& format) {
    const ClassifyInput in = parse_classify_input(read_input(input_path));
    const LocalPairAnalysis a = analyze_local_pair(in.a, in.w, in.c, in.wp);

    if (format == "json") {
        std::cout << analysis_to_json(a) << "\n";
    } else {
        const ClassificationReport& r = a.classification;
        std::cout << "sym3 match: " << (r.sym3_match ? "yes" : "no") << "\n";
        std::cout << "cases:";
        if (r.matched.empty()) std::cout << " (none)";
        for (const CaseWitness& w : r.matched) {
            std::cout << " " << case_label_str(w.label);
            if (w.unit)
                std::cout << (w.label == CaseLabel::case_2 ? " (mu = " : " (zeta = ")
                          << w.unit->str() << ")";
        }
        std::cout << "\n";
        std::cout << "z = " << r.z.str() << "\n";
        std::cout << "adjoint isomorphic: " << (r.adjoint_isomorphic ? "yes" : "no") << "\n";
        std::cout << "si3 local: " << (a.si3_local ? "yes" : "no") << "\n";
        std::cout << "power relation: "
                  << (a.power_preconditions ? power_relation_str(a.power_relation)
                                            : "(preconditions not met)")
                  << "\n";
        std::cout << "rationality field: " << field_text(a.rationality) << "\n";
    }

    // An uncovered match or a missing power relation contradicts the
    // guaranteed case coverage: always a violation.
    if ((a.classification.sym3_match && a.classification.matched.empty()) ||
        (a.power_preconditions && a.power_relation == PowerRelation::none))
        return kExitViolation;
    // Strict mode additionally demands the full constraint set.
    if (strict && !(a.classification.sym3_match && a.si3_local)) return kExitViolation;
    return kExitOk;
}

int cmd_verify(const std::string& identity, long trials, std::uint64_t seed, long max_order,
               const std::string& format) {
    const std::vector<CampaignResult> results = run_campaigns(identity, trials, seed, max_order);
    long violations = 0;
    for (const CampaignResult& r : results) violations += r.violations;

    if (format == "json") {
        std::cout << campaigns_to_json(results) << "\n";
    } else {
        for (const CampaignResult& r : results) {
            std::cout << r.identity << ": random " << r.random_trials << ", sweep "
                      << r.sweep_checks << ", violations " << r.violations << "\n";
            for (const auto& [name, count] : r.counters)
                std::cout << "  " << name << " = " << count << "\n";
            for (const std::string& note : r.notes) std::cout << "  ! " << note << "\n";
        }
    }
    return violations == 0 ? kExitOk : kExitViolation;
}

void print_enumeration_text(const char* title, const EnumerationReport& r) {
    std::cout << title << ": scanned " << r.tuples_scanned << " tuples, " << r.sym3_matches
              << " matches (";
    for (std::size_t k = 0; k < r.case_counts.size(); ++k) {
        if (k) std::cout << ", ";
        std::cout << case_label_str(static_cast<CaseLabel>(k)) << " " << r.case_counts[k];
    }
    std::cout << "), uncovered " << r.uncovered.size() << "\n";
    std::cout << "  power relations over " << r.adjoint_si3_pairs << " eligible pairs:";
    for (std::size_t k = 0; k < r.power_counts.size(); ++k)
        std::cout << " " << power_relation_str(static_cast<PowerRelation>(k)) << "="
                  << r.power_counts[k];
    std::cout << "; case-2 w=1 count " << r.case2_w1_count << ", a^4 violations "
              << r.case2_w1_a4_violations << "\n";
    if (r.trivial_center)
        std::cout << "  dichotomy: consistent " << r.consistent_pairs << ", case i (m=4) "
                  << r.case_i_m4 << ", case i (m=6) " << r.case_i_m6 << ", case ii "
                  << r.case_ii << ", uncovered " << r.dichotomy_uncovered.size()
                  << ", rationality mismatches " << r.rationality_mismatches
                  << ", tau mismatches " << r.tau_mismatches << "\n";
}

int cmd_enumerate(long max_order, const std::string& format) {
    const EnumerationReport triv = enumerate_solutions(max_order, true);
    const EnumerationReport bounded = enumerate_solutions(max_order, false, 12);

    if (format == "json") {
        const json out{{"trivial_center", json::parse(enumeration_to_json(triv, 100))},
                       {"bounded_center", json::parse(enumeration_to_json(bounded, 100))}};
        std::cout << out.dump(2) << "\n";
    } else {
        print_enumeration_text("trivial center", triv);
        print_enumeration_text("bounded center", bounded);
    }

    const bool violation =
        !triv.uncovered.empty() || !bounded.uncovered.empty() ||
        !triv.dichotomy_uncovered.empty() || !triv.power_none.empty() ||
        !bounded.power_none.empty() || triv.case2_w1_a4_violations > 0 ||
        bounded.case2_w1_a4_violations > 0 || triv.rationality_mismatches > 0 ||
        triv.tau_mismatches > 0;
    return violation ? kExitViolation : kExitOk;
}

int cmd_demo(const std::string& format) {
    const GroupData g = conjugacy_classes(build_group());
    const IcosaIdentityReport idrep = verify_icosahedral_identities(g);
    const std::vector<UnramifiedParam> params = frobenius_params(g);
    const CharacterVector chi = rep_character(g, 1);
    const CharacterVector chi_prime = rep_character(g, 13);
    const NumberFieldDesc sqrt5 = NumberFieldDesc::fixed_field(5, {1, 4});

    bool ok = g.elements.size() == 120 && g.classes.size() == 9 && idrep.all_hold() &&
              field_of(chi.values) == sqrt5;

    struct Row {
        long order, size;
        Cyclo chi_v, chi_p_v;
        UnramifiedParam param, tau_param;
        TrivialCentralResult tc;
        NumberFieldDesc field;
        long partner = -1;
    };
    std::vector<Row> rows;
    for (std::size_t i = 0; i < g.classes.size(); ++i) {
        const UnramifiedParam tau_p = tau_conjugate(params[i]);
        Row row{g.class_orders[i],
                g.class_sizes[i],
                chi.values[i],
                chi_prime.values[i],
                params[i],
                tau_p,
                classify_trivial_central(params[i].inverse_roots()[0],
                                         tau_p.inverse_roots()[0]),
                rationality_field(params[i])};
        for (std::size_t j = 0; j < params.size(); ++j)
            if (params[j] == tau_p) row.partner = static_cast<long>(j);
        const NumberFieldDesc expect =
            row.tc.outcome == TrivialCentralResult::Case::case_ii
                ? sqrt5
                : NumberFieldDesc::rationals();
        ok = ok && row.tc.outcome != TrivialCentralResult::Case::none &&
             row.partner >= 0 && row.field == expect;
        rows.push_back(std::move(row));
    }

    if (format == "json") {
        json classes = json::array();
        for (const Row& r : rows) {
            classes.push_back(
                json{{"order", r.order},
                     {"size", r.size},
                     {"chi_rho", json::parse(cyclo_to_json(r.chi_v))},
                     {"chi_rho_prime", json::parse(cyclo_to_json(r.chi_p_v))},
                     {"parameter", json::parse(param_to_json(r.param))},
                     {"tau_parameter", json::parse(param_to_json(r.tau_param))},
                     {"tau_partner_class", r.partner},
                     {"case", r.tc.outcome == TrivialCentralResult::Case::case_i
                                  ? "i"
                                  : (r.tc.outcome == TrivialCentralResult::Case::case_ii
                                         ? "ii"
                                         : "none")},
                     {"m", r.tc.m},
                     {"rationality_field", json::parse(field_to_json(r.field))}});
        }
        const json out{{"group_order", g.elements.size()},
                       {"class_count", g.classes.size()},
                       {"identities",
                        json{{"sym3", idrep.sym3_identity},
                             {"sym5", idrep.sym5_identity},
                             {"conjugate_distinct", idrep.conjugate_distinct},
                             {"rho_norm", rational_str(idrep.rho_norm)},
                             {"rho_prime_norm", rational_str(idrep.rho_prime_norm)},
                             {"cross_inner", rational_str(idrep.cross_inner)}}},
                       {"chi_field", json::parse(field_to_json(field_of(chi.values)))},
                       {"classes", std::move(classes)},
                       {"all_checks_pass", ok}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "group order " << g.elements.size() << ", " << g.classes.size()
                  << " conjugacy classes\n";
        std::cout << "sym3 identity: " << (idrep.sym3_identity ? "holds" : "FAILS")
                  << "; sym5 identity: " << (idrep.sym5_identity ? "holds" : "FAILS")
                  << "; chi != chi': " << (idrep.conjugate_distinct ? "yes" : "NO") << "\n";
        std::cout << "<chi,chi> = " << rational_str(idrep.rho_norm)
                  << ", <chi',chi'> = " << rational_str(idrep.rho_prime_norm)
                  << ", <chi,chi'> = " << rational_str(idrep.cross_inner) << "\n";
        std::cout << "field of chi values: " << field_text(field_of(chi.values)) << "\n";
        for (const Row& r : rows) {
            std::cout << "class order " << r.order << " size " << r.size << ": chi = "
                      << r.chi_v.str() << ", chi' = " << r.chi_p_v.str() << ", case "
                      << (r.tc.outcome == TrivialCentralResult::Case::case_i
                              ? "i"
                              : (r.tc.outcome == TrivialCentralResult::Case::case_ii
                                     ? "ii"
                                     : "none"));
            if (r.tc.m != 0) std::cout << " (m=" << r.tc.m << ")";
            std::cout << ", field " << field_text(r.field) << ", tau partner class "
                      << r.partner << "\n";
        }
        std::cout << (ok ? "all checks pass" : "CHECKS FAILED") << "\n";
    }
    return ok ? kExitOk : kExitViolation;
}

int cmd_lfactor(const std::string& input_path, long terms, const std::string& format) {
    if (terms < 1) throw std::invalid_argument("--terms must be at least 1");
    const LFactorInput in = parse_lfactor_input(read_input(input_path));
    const LocalLFactor factor = local_l_factor(in.param, in.q);
    const std::vector<Cyclo> coeffs = dirichlet_coeffs(factor, terms);

    if (format == "json") {
        json arr = json::array();
        for (const Cyclo& c : coeffs) arr.push_back(json::parse(cyclo_to_json(c)));
        const json out{{"q", factor.prime_power_q},
                       {"euler_factor", euler_factor_json_str(factor)},
                       {"coefficients", std::move(arr)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << euler_factor_str(factor) << "\n";
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            std::cout << "a_" << k << " = " << coeffs[k].str() << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact local calculus for icosahedral cusp-form parameters"};
    app.require_subcommand(1);

    std::string input_path;
    std::string identity = "all";
    std::string format = "json";
    long max_order = 60;
    long trials = 500;
    long terms = 12;
    std::uint64_t seed = 0;
    bool strict = false;

    const auto format_check = CLI::IsMember({"json", "text"});

    CLI::App* sc_classify = app.add_subcommand(
        "classify", "Classify a local parameter pair against the matching cases");
    sc_classify->add_option("--input", input_path, "input JSON path, or - for stdin")
        ->required();
    sc_classify->add_flag("--strict", strict,
                          "exit 1 unless the pair satisfies the degree-4 and degree-6 "
                          "comparisons");
    sc_classify->add_option("--format", format, "json or text")->check(format_check);

    CLI::App* sc_verify =
        app.add_subcommand("verify", "Run seeded identity campaigns plus exhaustive sweeps");
    sc_verify->add_option("--identity", identity,
                          "clebsch-gordon, lambda2-sym3, power-relations, arch, tempered, "
                          "or all");
    sc_verify->add_option("--trials", trials, "pseudo-random trials per campaign")
        ->capture_default_str();
    sc_verify->add_option("--seed", seed, "RNG seed")->capture_default_str();
    sc_verify->add_option("--max-order", max_order, "root-of-unity sweep bound")
        ->capture_default_str();
    sc_verify->add_option("--format", format, "json or text")->check(format_check);

    CLI::App* sc_enumerate = app.add_subcommand(
        "enumerate", "Exhaustive census of matching pairs over roots of unity");
    sc_enumerate->add_option("--max-order", max_order, "order bound for the scanned roots")
        ->capture_default_str();
    sc_enumerate->add_option("--format", format, "json or text")->check(format_check);

    CLI::App* sc_demo = app.add_subcommand(
        "demo", "Build the binary icosahedral group and verify its signature identities");
    sc_demo->add_option("--format", format, "json or text")->check(format_check);

    CLI::App* sc_lfactor =
        app.add_subcommand("lfactor", "Euler factor and Dirichlet coefficients");
    sc_lfactor->add_option("--input", input_path, "input JSON path, or - for stdin")
        ->required();
    sc_lfactor->add_option("--terms", terms, "number of coefficients after a_0")
        ->capture_default_str();
    sc_lfactor->add_option("--format", format, "json or text")->check(format_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sc_classify->parsed()) return cmd_classify(input_path, strict, format);
        if (sc_verify->parsed()) return cmd_verify(identity, trials, seed, max_order, format);
        if (sc_enumerate->parsed()) return cmd_enumerate(max_order, format);
        if (sc_demo->parsed()) return cmd_demo(format);
        if (sc_lfactor->parsed()) return cmd_lfactor(input_path, terms, format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "violation: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitUsage;
}
