#pragma once

#include "icosal/rational.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace icosal {

/**
 * Element of the cyclotomic tower, held in canonical form.
 *
 * A value is stored as its minimal conductor n together with coordinates in
 * the power basis 1, zeta_n, ..., zeta_n^{phi(n)-1} of Q(zeta_n) = Q[x]/Phi_n(x).
 * Minimality means no proper divisor d of n has the value inside Q(zeta_d);
 * in particular the stored conductor is never congruent to 2 mod 4.
 *
 * Every constructor and arithmetic operator re-minimizes eagerly, so two
 * values are equal exactly when their stored forms are identical, and
 * mixed-conductor arithmetic goes through the lcm-conductor field
 * transparently. The comparison operators order by the structural key
 * (conductor, coefficient vector lexicographically); this is a total order
 * used for sorting multisets, not an order on complex numbers.
 */
class Cyclo {
public:
    Cyclo();
    Cyclo(long value);                 // NOLINT: implicit integer literals are intended
    Cyclo(const Rational& value);      // NOLINT: implicit rational scalars are intended

    /// zeta_n^k. Requires n >= 1; k is reduced mod n. Result is canonical,
    /// e.g. root_of_unity(4, 2) == -1 with conductor 1.
    static Cyclo root_of_unity(long n, long k);

    /// Rebuilds a value from raw parts (as read from serialized form).
    /// coeffs.size() must equal phi(conductor); the value is canonicalized.
    static Cyclo from_parts(long conductor, std::vector<Rational> coeffs);

    long conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return conductor_ == 1; }
    /// Requires is_rational().
    const Rational& rational_value() const;

    Cyclo operator-() const;
    Cyclo inverse() const;             // throws std::domain_error on zero
    Cyclo pow(long long e) const;      // e < 0 inverts; 0^0 == 1 by convention

    /// Galois action zeta_n -> zeta_n^k; requires gcd(k, conductor) == 1.
    Cyclo galois(long k) const;
    /// Complex conjugation, i.e. galois(-1).
    Cyclo conj() const;

    /// Numeric embedding zeta_n -> exp(2*pi*i/n). Test/display oracle only;
    /// never used for equality decisions.
    std::complex<double> embed() const;

    /// Polynomial rendering in zeta_n, e.g. "-zeta_5^2 - zeta_5^3".
    std::string str() const;

    /// Structural three-way comparison on (conductor, coefficients lex).
    static int compare(const Cyclo& a, const Cyclo& b);

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b);

    friend bool operator==(const Cyclo& a, const Cyclo& b) {
        return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }
    friend bool operator<(const Cyclo& a, const Cyclo& b) { return compare(a, b) < 0; }
    friend bool operator>(const Cyclo& a, const Cyclo& b) { return compare(a, b) > 0; }
    friend bool operator<=(const Cyclo& a, const Cyclo& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const Cyclo& a, const Cyclo& b) { return compare(a, b) >= 0; }

    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
    Cyclo& operator/=(const Cyclo& o) { return *this = *this / o; }

private:
    Cyclo(long conductor, std::vector<Rational> coeffs, bool canonicalize);
    void reduce_conductor();

    long conductor_;
    std::vector<Rational> coeffs_;
};

} // namespace icosal
