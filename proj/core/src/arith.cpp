#include "icosal/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace icosal {

long euler_phi(long n) {
    if (n < 1) throw std::domain_error("euler_phi: argument must be positive");
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<long> prime_factors(long n) {
    if (n < 1) throw std::domain_error("prime_factors: argument must be positive");
    std::vector<long> out;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            out.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

std::vector<long> divisors_of(long n) {
    if (n < 1) throw std::domain_error("divisors_of: argument must be positive");
    std::vector<long> out;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long mod_norm(long k, long n) {
    if (n < 1) throw std::domain_error("mod_norm: modulus must be positive");
    long r = k % n;
    return r < 0 ? r + n : r;
}

long lcm_long(long a, long b) {
    return std::lcm(a, b);
}

} // namespace icosal
