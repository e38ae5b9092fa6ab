#include "doctest.h"

#include "icosal/cyclo.hpp"
#include "icosal/number_field.hpp"

#include <stdexcept>

using icosal::Cyclo;
using icosal::NumberFieldDesc;
using icosal::field_of;

namespace {
Cyclo zeta(long n, long k = 1) { return Cyclo::root_of_unity(n, k); }
}

TEST_CASE("rationals and cyclotomic factories") {
    const NumberFieldDesc q = NumberFieldDesc::rationals();
    CHECK(q.degree() == 1);
    CHECK(q.conductor() == 1);
    CHECK(NumberFieldDesc::cyclotomic(1) == q);
    CHECK(NumberFieldDesc::cyclotomic(5).degree() == 4);
    CHECK(NumberFieldDesc::cyclotomic(60).degree() == 16);
    CHECK_THROWS_AS(NumberFieldDesc::cyclotomic(0), std::domain_error);
}

TEST_CASE("conductors 2 mod 4 normalize to odd halves") {
    CHECK(NumberFieldDesc::cyclotomic(2) == NumberFieldDesc::rationals());
    CHECK(NumberFieldDesc::cyclotomic(6) == NumberFieldDesc::cyclotomic(3));
    CHECK(NumberFieldDesc::cyclotomic(10) == NumberFieldDesc::cyclotomic(5));
    CHECK(NumberFieldDesc::cyclotomic(10).conductor() == 5);
}

TEST_CASE("fixed fields normalize subgroup and conductor") {
    const NumberFieldDesc sqrt5 = NumberFieldDesc::fixed_field(5, {1, 4});
    CHECK(sqrt5.degree() == 2);
    CHECK(sqrt5.conductor() == 5);
    CHECK(sqrt5.fixing_subgroup() == std::vector<long>{1, 4});
    // Generators are closed up: <2> = all of (Z/5)^*, so this is Q.
    CHECK(NumberFieldDesc::fixed_field(5, {2}) == NumberFieldDesc::rationals());
    CHECK(NumberFieldDesc::fixed_field(5, {1, 2, 3, 4}) == NumberFieldDesc::rationals());
    // Trivial subgroup presents the full cyclotomic.
    CHECK(NumberFieldDesc::fixed_field(12, {1}) == NumberFieldDesc::cyclotomic(12));
    // The same field through a larger conductor collapses to conductor 5.
    CHECK(NumberFieldDesc::fixed_field(20, {1, 9, 11, 19}) == sqrt5);
    CHECK_THROWS_AS(NumberFieldDesc::fixed_field(10, {4}), std::domain_error);
}

TEST_CASE("containment follows the Galois correspondence") {
    const NumberFieldDesc q = NumberFieldDesc::rationals();
    const NumberFieldDesc sqrt5 = NumberFieldDesc::fixed_field(5, {1, 4});
    const NumberFieldDesc c5 = NumberFieldDesc::cyclotomic(5);
    CHECK(c5.contains(sqrt5));
    CHECK(sqrt5.contains(q));
    CHECK(c5.contains(q));
    CHECK_FALSE(q.contains(sqrt5));
    CHECK_FALSE(sqrt5.contains(c5));
    CHECK(sqrt5.contains(sqrt5));
    // Disjoint conductors: Q(zeta_3) does not contain Q(sqrt 5).
    CHECK_FALSE(NumberFieldDesc::cyclotomic(3).contains(sqrt5));
    CHECK(NumberFieldDesc::cyclotomic(15).contains(sqrt5));
}

TEST_CASE("field_of generates the right subfield") {
    const NumberFieldDesc q = NumberFieldDesc::rationals();
    CHECK(field_of({}) == q);
    CHECK(field_of({Cyclo(3), Cyclo(-7)}) == q);
    CHECK(field_of({zeta(5)}) == NumberFieldDesc::cyclotomic(5));
    const Cyclo phi = Cyclo(1) + zeta(5) + zeta(5, 4);
    CHECK(field_of({phi}) == NumberFieldDesc::fixed_field(5, {1, 4}));
    CHECK(field_of({zeta(8) + zeta(8, 7)}) == NumberFieldDesc::fixed_field(8, {1, 7}));
    CHECK(field_of({zeta(3), zeta(4)}) == NumberFieldDesc::cyclotomic(12));
    CHECK(field_of({phi, zeta(4)}) == NumberFieldDesc::fixed_field(20, {1, 9}));
}
