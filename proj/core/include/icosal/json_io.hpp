#pragma once

#include "icosal/campaign.hpp"
#include "icosal/classify.hpp"
#include "icosal/cyclo.hpp"
#include "icosal/lfactors.hpp"
#include "icosal/number_field.hpp"
#include "icosal/params.hpp"

#include <cstddef>
#include <string>
#include <vector>

// String-in/string-out JSON layer. Malformed input raises
// std::invalid_argument with a description; serializers never fail.
// Values round-trip bit-identically (exact rationals, canonical forms).

namespace icosal {

/// {"conductor": n, "coeffs": ["num/den", ...]} with phi(n) coefficients in
/// the power basis. The parser additionally accepts a bare integer, a
/// "num/den" string, and {"zeta": n, "power": k} as shorthands.
std::string cyclo_to_json(const Cyclo& v);
Cyclo cyclo_from_json(const std::string& text);

/// {"inverse_roots": [Cyclo, ...]}
std::string param_to_json(const UnramifiedParam& p);
UnramifiedParam param_from_json(const std::string& text);

/// {"blocks": [{"lambda_exp": k, "size": n}, ...]}
std::string steinberg_to_json(const SteinbergParam& p);
SteinbergParam steinberg_from_json(const std::string& text);

/// {"exponents": [{"m": int, "two_s": "num/den"}, ...]}
std::string arch_to_json(const ArchParam& p);
ArchParam arch_from_json(const std::string& text);

/// {"conductor": n, "subgroup": [residues...]}
std::string field_to_json(const NumberFieldDesc& f);
NumberFieldDesc field_from_json(const std::string& text);

struct ClassifyInput {
    Cyclo a, w, c, wp;
};

/// Accepts {"a", "w", "c", "wp"} ("w'" is an accepted alias for "wp") with
/// Cyclo-valued entries, or {"pi": ..., "pi_prime": ...} holding two
/// dimension-2 parameters (a and c are taken as their first inverse roots,
/// w and wp as their central values).
ClassifyInput parse_classify_input(const std::string& text);

struct LFactorInput {
    UnramifiedParam param;
    long q;
};

/// {"param": {"inverse_roots": [...]}, "q": n}
LFactorInput parse_lfactor_input(const std::string& text);

/// Classification payload: {"sym3_match", "cases", "witnesses",
/// "adjoint_isomorphic", "si3_local", "power_relation" (null when the
/// preconditions fail), "rationality_field"}.
std::string analysis_to_json(const LocalPairAnalysis& a, int indent = 2);

/// Census payload; at most max_solutions matched tuples are listed inline
/// (the counts always cover everything).
std::string enumeration_to_json(const EnumerationReport& r, std::size_t max_solutions,
                                int indent = 2);

std::string campaigns_to_json(const std::vector<CampaignResult>& results, int indent = 2);

/// Euler factor rendering with JSON-encoded inverse roots, for machine
/// output; euler_factor_str gives the human-readable variant.
std::string euler_factor_json_str(const LocalLFactor& factor);

} // namespace icosal
