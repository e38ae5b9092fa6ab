#pragma once

#include <vector>

namespace icosal {

long euler_phi(long n);

/// Distinct prime factors, ascending.
std::vector<long> prime_factors(long n);

/// All positive divisors, ascending.
std::vector<long> divisors_of(long n);

/// Representative of k mod n in [0, n). Requires n >= 1.
long mod_norm(long k, long n);

long lcm_long(long a, long b);

} // namespace icosal
