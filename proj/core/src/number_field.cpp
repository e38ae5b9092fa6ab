#include "icosal/number_field.hpp"

#include "icosal/arith.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace icosal {
namespace {

std::vector<long> unit_residues(long n) {
    std::vector<long> out;
    for (long k = 0; k < n; ++k)
        if (std::gcd(k, n) == 1) out.push_back(k);
    if (n == 1) out.assign({0});
    return out;
}

long identity_residue(long n) { return n == 1 ? 0 : 1; }

// Multiplicative closure of the given residues together with the identity.
std::vector<long> close_subgroup(long n, std::vector<long> gens) {
    std::set<long> seen{identity_residue(n)};
    for (long g : gens) {
        if (n == 1) break;
        if (std::gcd(mod_norm(g, n), n) != 1)
            throw std::domain_error("NumberFieldDesc: subgroup residue not a unit mod conductor");
        seen.insert(mod_norm(g, n));
    }
    // Fixed-point closure; groups here are tiny.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<long> cur(seen.begin(), seen.end());
        for (long a : cur)
            for (long b : cur) {
                const long c = n == 1 ? 0 : mod_norm(a * b, n);
                if (seen.insert(c).second) grew = true;
            }
    }
    return {seen.begin(), seen.end()};
}

} // namespace

NumberFieldDesc::NumberFieldDesc(long conductor, std::vector<long> subgroup)
    : conductor_(conductor), subgroup_(std::move(subgroup)) {
    normalize();
}

NumberFieldDesc NumberFieldDesc::rationals() { return NumberFieldDesc(1, {0}); }

NumberFieldDesc NumberFieldDesc::cyclotomic(long conductor) {
    if (conductor < 1) throw std::domain_error("NumberFieldDesc: conductor must be positive");
    return NumberFieldDesc(conductor, {identity_residue(conductor)});
}

NumberFieldDesc NumberFieldDesc::fixed_field(long conductor, std::vector<long> subgroup) {
    if (conductor < 1) throw std::domain_error("NumberFieldDesc: conductor must be positive");
    return NumberFieldDesc(conductor, std::move(subgroup));
}

void NumberFieldDesc::normalize() {
    subgroup_ = close_subgroup(conductor_, std::move(subgroup_));
    // Find the smallest divisor d of n with ker((Z/n)^* -> (Z/d)^*) inside H;
    // by Galois correspondence that is the minimal conductor presenting the
    // fixed field. Scanning ascending also lands on odd halves before their
    // 2-mod-4 doubles, so canonical conductors are never 2 mod 4.
    for (long d : divisors_of(conductor_)) {
        bool kernel_inside = true;
        for (long k : unit_residues(conductor_)) {
            if (mod_norm(k, d) != identity_residue(d)) continue;  // not in kernel
            if (!std::binary_search(subgroup_.begin(), subgroup_.end(), k)) {
                kernel_inside = false;
                break;
            }
        }
        if (!kernel_inside) continue;
        std::set<long> projected;
        for (long k : subgroup_) projected.insert(d == 1 ? 0 : mod_norm(k, d));
        conductor_ = d;
        subgroup_.assign(projected.begin(), projected.end());
        return;
    }
    throw std::logic_error("NumberFieldDesc: divisor scan cannot fail for d = n");
}

long NumberFieldDesc::degree() const {
    return euler_phi(conductor_) / static_cast<long>(subgroup_.size());
}

bool NumberFieldDesc::contains(const NumberFieldDesc& other) const {
    const long big = lcm_long(conductor_, other.conductor_);
    // Pull both fixing subgroups back to (Z/big)^*; larger fields have
    // smaller pullbacks.
    auto in_pullback = [](const NumberFieldDesc& f, long k) {
        const long r = f.conductor_ == 1 ? 0 : mod_norm(k, f.conductor_);
        return std::binary_search(f.subgroup_.begin(), f.subgroup_.end(), r);
    };
    for (long k : unit_residues(big))
        if (in_pullback(*this, k) && !in_pullback(other, k)) return false;
    return true;
}

NumberFieldDesc NumberFieldDesc::real_subfield() const {
    std::vector<long> gens = subgroup_;
    gens.push_back(conductor_ - 1);  // -1 mod n (0 when n = 1, the identity)
    return NumberFieldDesc(conductor_, std::move(gens));
}

NumberFieldDesc field_of(const std::vector<Cyclo>& values) {
    long big = 1;
    for (const Cyclo& v : values) big = lcm_long(big, v.conductor());
    if (big == 1) return NumberFieldDesc::rationals();
    std::vector<long> stabilizer;
    for (long k = 1; k < big; ++k) {
        if (std::gcd(k, big) != 1) continue;
        bool fixes_all = true;
        for (const Cyclo& v : values)
            if (v.galois(k) != v) {
                fixes_all = false;
                break;
            }
        if (fixes_all) stabilizer.push_back(k);
    }
    return NumberFieldDesc::fixed_field(big, std::move(stabilizer));
}

} // namespace icosal
