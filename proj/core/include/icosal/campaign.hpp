#pragma once

#include "icosal/cyclo.hpp"
#include "icosal/params.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace icosal {

// Reproducible test corpus: inverse roots are zeta_n^k with n uniform over
// the divisors of 60 and k uniform mod n, plus an occasional small rational
// from {2, 1/2, 3, 1/3} so the formal identities are exercised off the unit
// circle. Indices come from % on the raw 64-bit draw, which fixes the value
// stream across platforms (std distributions do not guarantee that).
Cyclo sample_value(std::mt19937_64& rng);
UnramifiedParam sample_param(std::mt19937_64& rng, std::size_t dim);

struct CampaignResult {
    std::string identity;
    long random_trials = 0;
    long sweep_checks = 0;
    long violations = 0;
    std::vector<std::pair<std::string, long>> counters;  // per-case tallies, fixed order
    std::vector<std::string> notes;                      // first few violations, rendered
};

/// Runs one named identity campaign: `trials` seeded pseudo-random checks
/// plus the identity's exhaustive sweep. Campaign names are the --identity
/// values: clebsch-gordon, lambda2-sym3, power-relations, arch, tempered.
/// Unknown names throw std::invalid_argument.
CampaignResult run_identity_campaign(const std::string& identity, long trials,
                                     std::uint64_t seed, long max_order = 60);

/// "all" expands to the five concrete campaigns; otherwise one entry.
std::vector<CampaignResult> run_campaigns(const std::string& identity, long trials,
                                          std::uint64_t seed, long max_order = 60);

} // namespace icosal
