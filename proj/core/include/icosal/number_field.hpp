#pragma once

#include "icosal/cyclo.hpp"

#include <vector>

namespace icosal {

/**
 * Abelian number field presented as a fixed field inside a cyclotomic:
 * conductor n plus the subgroup H of (Z/n)^* whose automorphisms fix it.
 *
 * Descriptors are normalized on construction: the conductor is the smallest
 * one presenting the field (so equality is plain structural equality) and
 * the subgroup is stored as sorted residues in [0, n). The rationals are
 * (n = 1, H = {0}).
 */
class NumberFieldDesc {
public:
    static NumberFieldDesc rationals();
    static NumberFieldDesc cyclotomic(long conductor);
    /// Fixed field of the subgroup generated by the given residues, which
    /// must be units mod conductor. Normalizes to the minimal presentation.
    static NumberFieldDesc fixed_field(long conductor, std::vector<long> subgroup);

    long conductor() const { return conductor_; }
    const std::vector<long>& fixing_subgroup() const { return subgroup_; }

    /// Degree over Q: phi(conductor) / |H|.
    long degree() const;

    /// True when other is a subfield of (or equal to) this field.
    bool contains(const NumberFieldDesc& other) const;

    /// Maximal real subfield: adjoin -1 to the fixing subgroup.
    NumberFieldDesc real_subfield() const;

    friend bool operator==(const NumberFieldDesc& a, const NumberFieldDesc& b) {
        return a.conductor_ == b.conductor_ && a.subgroup_ == b.subgroup_;
    }
    friend bool operator!=(const NumberFieldDesc& a, const NumberFieldDesc& b) { return !(a == b); }

private:
    NumberFieldDesc(long conductor, std::vector<long> subgroup);
    void normalize();

    long conductor_ = 1;
    std::vector<long> subgroup_{0};
};

/// Smallest field containing every listed value: lcm conductor, stabilizer
/// subgroup. field_of({}) is Q.
NumberFieldDesc field_of(const std::vector<Cyclo>& values);

} // namespace icosal
