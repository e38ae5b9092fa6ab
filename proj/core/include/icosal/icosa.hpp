#pragma once

#include "icosal/cyclo.hpp"
#include "icosal/params.hpp"
#include "icosal/rational.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace icosal {

// The 120 unit icosians realized as exact 2x2 matrices over Q(zeta_20):
// a + bi + cj + dk maps to [[a+bi, c+di], [-c+di, a-bi]] with i = zeta_4.

struct ExactMatrix2 {
    std::array<Cyclo, 4> e;  // row-major

    ExactMatrix2 operator*(const ExactMatrix2& rhs) const;
    bool operator==(const ExactMatrix2& rhs) const = default;

    Cyclo trace() const;
    Cyclo det() const;
    ExactMatrix2 inverse_det1() const;  // adjugate; valid only when det = 1
};

/// Total order on matrices (entrywise canonical-form comparison).
bool matrix_less(const ExactMatrix2& lhs, const ExactMatrix2& rhs);

struct GroupData {
    std::vector<ExactMatrix2> elements;
    // Filled by conjugacy_classes, in canonical class order
    // (element order, class size, lexicographic trace):
    std::vector<std::vector<std::size_t>> classes;
    std::vector<long> class_orders;
    std::vector<long> class_sizes;
    std::vector<Cyclo> class_traces;
};

/// Constructs the binary icosahedral group: 8 quaternion units, the 16
/// half-integer units, and 96 even permutations of (0, +-1, +-1/phi, +-phi)/2
/// with phi = 1 + zeta_5 + zeta_5^4. Verifies |G| = 120, determinant 1
/// throughout, closure under multiplication, and presence of inverses;
/// any failure throws std::logic_error.
GroupData build_group();

/// Partitions the elements into conjugacy classes and fills the class data
/// in canonical order.
GroupData conjugacy_classes(GroupData g);

struct CharacterVector {
    std::vector<Cyclo> values;  // one per class, canonical class order
    std::vector<long> class_sizes;

    bool operator==(const CharacterVector&) const = default;
};

/// Trace character of the defining representation (k = 1) or of its Galois
/// conjugate under the conductor-20 automorphism fixing zeta_4 and moving
/// zeta_5 (k = 13). Other k throw std::domain_error.
CharacterVector rep_character(const GroupData& g, long automorphism_k);

CharacterVector trivial_character(const GroupData& g);

/// Symmetric-power character of a 2-dimensional representation by the
/// recursion s_m = chi * s_{m-1} - det_chi * s_{m-2}, s_0 = 1, s_1 = chi.
CharacterVector sym_character(const CharacterVector& chi, const CharacterVector& det_chi,
                              long m);

/// Pointwise product of characters on the same class structure.
CharacterVector char_product(const CharacterVector& x, const CharacterVector& y);

/// (1 / |G|) sum over classes of size * x * conj(y), where conj is the
/// Galois action by -1. The result of a character pairing is rational;
/// a non-rational sum throws std::logic_error.
Rational inner_product(const CharacterVector& x, const CharacterVector& y);

struct IcosaIdentityReport {
    bool sym3_identity = false;    // sym3 chi = sym3 chi'
    bool sym5_identity = false;    // sym5 chi = sym2 chi' * chi
    bool conjugate_distinct = false;
    Rational rho_norm;             // <chi, chi>
    Rational rho_prime_norm;       // <chi', chi'>
    Rational cross_inner;          // <chi, chi'>

    bool all_hold() const {
        return sym3_identity && sym5_identity && conjugate_distinct && rho_norm == 1 &&
               rho_prime_norm == 1 && cross_inner == 0;
    }
};

/// Exact pointwise verification of the two signature character identities,
/// the inequivalence with the conjugate, and the orthogonality pairings.
IcosaIdentityReport verify_icosahedral_identities(const GroupData& g);

/// Per class, the eigenvalue pair {lambda, 1/lambda} of a representative,
/// found among roots of unity of order dividing the element order.
std::vector<UnramifiedParam> frobenius_params(const GroupData& g);

} // namespace icosal
