#pragma once

#include "icosal/cyclo.hpp"
#include "icosal/rational.hpp"

#include <vector>

namespace icosal {

/**
 * Unramified local parameter: the multiset of nonzero inverse roots
 * (Satake parameters), stored canonically sorted so multiset equality is
 * vector equality. central() is the product, i.e. the value the central
 * character takes on a uniformizer.
 */
class UnramifiedParam {
public:
    explicit UnramifiedParam(std::vector<Cyclo> inverse_roots);

    long dimension() const { return static_cast<long>(roots_.size()); }
    const std::vector<Cyclo>& inverse_roots() const { return roots_; }
    const Cyclo& central() const { return central_; }

    friend bool operator==(const UnramifiedParam& a, const UnramifiedParam& b) {
        return a.roots_ == b.roots_;
    }
    friend bool operator!=(const UnramifiedParam& a, const UnramifiedParam& b) {
        return !(a == b);
    }

private:
    std::vector<Cyclo> roots_;
    Cyclo central_;
};

/// {a^m, a^{m-1}b, ..., b^m} for p = {a, b}. Requires dimension 2 and m >= 0.
UnramifiedParam sym_power(const UnramifiedParam& p, long m);

/// {a/b, 1, b/a} for p = {a, b}. Requires dimension 2.
UnramifiedParam adjoint(const UnramifiedParam& p);

/// All pairwise products.
UnramifiedParam tensor(const UnramifiedParam& a, const UnramifiedParam& b);

/// Entrywise multiplication by a nonzero chi.
UnramifiedParam twist(const UnramifiedParam& p, const Cyclo& chi);

/// Multiset union.
UnramifiedParam isobaric_sum(const UnramifiedParam& a, const UnramifiedParam& b);

/// Entrywise inverse.
UnramifiedParam dual(const UnramifiedParam& p);

/// Products over the C(dim, 2) unordered distinct index pairs.
UnramifiedParam ext_square(const UnramifiedParam& p);

bool multiset_equal(const UnramifiedParam& a, const UnramifiedParam& b);

/**
 * Parameter of an unramified-twist-of-Steinberg type representation:
 * a multiset of Jordan blocks, each an unramified twist exponent (power of
 * the fixed twisting character lambda) with a block size.
 */
struct SteinbergBlock {
    long lambda_exp = 0;
    long size = 1;
    friend bool operator==(const SteinbergBlock&, const SteinbergBlock&) = default;
};

class SteinbergParam {
public:
    explicit SteinbergParam(std::vector<SteinbergBlock> blocks);

    const std::vector<SteinbergBlock>& blocks() const { return blocks_; }
    long dimension() const;
    /// Block sizes sorted descending (the Jordan type, twist-blind).
    std::vector<long> block_sizes() const;

    friend bool operator==(const SteinbergParam& a, const SteinbergParam& b) {
        return a.blocks_ == b.blocks_;
    }
    friend bool operator!=(const SteinbergParam& a, const SteinbergParam& b) {
        return !(a == b);
    }

private:
    std::vector<SteinbergBlock> blocks_;
};

/// lambda^e tensor st, the 2-dimensional special block.
SteinbergParam steinberg_standard(long lambda_exp);

/// sym^m of a single 2-dimensional block (e, 2): the block (m*e, m+1).
SteinbergParam steinberg_sym(long m, const SteinbergParam& base);

/// Adjoint of a single 2-dimensional block: the exponent-0 block of size 3.
SteinbergParam steinberg_adjoint(const SteinbergParam& base);

/// Blockwise Clebsch-Gordan: (e1,s1)x(e2,s2) = sum_j (e1+e2, s1+s2-1-2j).
SteinbergParam steinberg_tensor(const SteinbergParam& a, const SteinbergParam& b);

SteinbergParam steinberg_twist(const SteinbergParam& p, long lambda_exp);

SteinbergParam steinberg_isobaric_sum(const SteinbergParam& a, const SteinbergParam& b);

/**
 * Archimedean parameter: a multiset of characters (z/|z|)^m |z|^{two_s} of
 * the complex units, with m integral and two_s an exact rational.
 */
struct ArchChar {
    long m = 0;
    Rational two_s = 0;
    friend bool operator==(const ArchChar&, const ArchChar&) = default;
};

class ArchParam {
public:
    explicit ArchParam(std::vector<ArchChar> exponents);
    const std::vector<ArchChar>& exponents() const { return exponents_; }
    long dimension() const { return static_cast<long>(exponents_.size()); }

    friend bool operator==(const ArchParam& a, const ArchParam& b) {
        return a.exponents_ == b.exponents_;
    }
    friend bool operator!=(const ArchParam& a, const ArchParam& b) { return !(a == b); }

private:
    std::vector<ArchChar> exponents_;
};

/**
 * Character of a finite cyclic quotient, as an exponent mod the group order.
 * The ramified flag only tags provenance; the algebra is on exponents.
 */
struct AbstractCharacter {
    long modulus = 1;
    long exponent = 0;
    bool ramified = false;

    AbstractCharacter() = default;
    AbstractCharacter(long modulus, long exponent, bool ramified = false);

    long order() const;
    bool is_trivial() const { return exponent == 0; }

    friend bool operator==(const AbstractCharacter&, const AbstractCharacter&) = default;
};

AbstractCharacter char_mul(const AbstractCharacter& a, const AbstractCharacter& b);
AbstractCharacter char_pow(const AbstractCharacter& a, long e);

} // namespace icosal
