#include "doctest.h"

#include "icosal/cyclo.hpp"
#include "icosal/lfactors.hpp"
#include "icosal/params.hpp"

#include <stdexcept>
#include <vector>

using namespace icosal;

namespace {
Cyclo zeta(long n, long k = 1) { return Cyclo::root_of_unity(n, k); }
UnramifiedParam par(std::vector<Cyclo> v) { return UnramifiedParam(std::move(v)); }

// a_k of the product of two local factors is the Dirichlet convolution.
std::vector<Cyclo> convolve(const std::vector<Cyclo>& x, const std::vector<Cyclo>& y) {
    std::vector<Cyclo> out(x.size());
    for (std::size_t k = 0; k < out.size(); ++k)
        for (std::size_t i = 0; i <= k; ++i) out[k] += x[i] * y[k - i];
    return out;
}
}

TEST_CASE("local factor validates the prime power") {
    CHECK(local_l_factor(par({Cyclo(1)}), 2).prime_power_q == 2);
    CHECK_THROWS_AS(local_l_factor(par({Cyclo(1)}), 1), std::domain_error);
    CHECK_THROWS_AS(local_l_factor(par({Cyclo(1)}), 0), std::domain_error);
}

TEST_CASE("coefficients of the trivial parameter are all ones") {
    const auto c = dirichlet_coeffs(local_l_factor(par({Cyclo(1)}), 7), 9);
    REQUIRE(c.size() == 10);
    for (const Cyclo& x : c) CHECK(x == Cyclo(1));
}

TEST_CASE("one-dimensional coefficients are geometric") {
    const Cyclo g = zeta(5, 2);
    const auto c = dirichlet_coeffs(local_l_factor(par({g}), 3), 11);
    for (std::size_t k = 0; k < c.size(); ++k) CHECK(c[k] == g.pow(static_cast<long>(k)));
}

TEST_CASE("golden-ratio parameter follows the Fibonacci-like recursion") {
    const UnramifiedParam p = par({zeta(10), zeta(10, 9)});
    const auto c = dirichlet_coeffs(local_l_factor(p, 11), 6);
    const Cyclo phi = -(zeta(5, 2)) - zeta(5, 3);
    REQUIRE(c.size() == 7);
    CHECK(c[0] == Cyclo(1));
    CHECK(c[1] == phi);
    CHECK(c[2] == phi);
    CHECK(c[3] == Cyclo(1));
    CHECK(c[4] == Cyclo(0));
    CHECK(c[5] == Cyclo(-1));
    CHECK(c[6] == -phi);
    // Chebyshev-style recursion a_k = phi a_{k-1} - a_{k-2}.
    for (std::size_t k = 2; k < c.size(); ++k) CHECK(c[k] == phi * c[k - 1] - c[k - 2]);
}

TEST_CASE("coefficients multiply as Dirichlet convolutions") {
    const std::vector<UnramifiedParam> ps = {
        par({zeta(3), zeta(5)}),
        par({zeta(8, 3)}),
        par({Cyclo(2), Cyclo(Rational(1, 2))}),
        par({zeta(12, 7), zeta(7, 2), zeta(4)}),
    };
    for (const UnramifiedParam& x : ps) {
        for (const UnramifiedParam& y : ps) {
            const auto cx = dirichlet_coeffs(local_l_factor(x, 5), 8);
            const auto cy = dirichlet_coeffs(local_l_factor(y, 5), 8);
            const auto cs = dirichlet_coeffs(local_l_factor(isobaric_sum(x, y), 5), 8);
            CHECK(cs == convolve(cx, cy));
        }
    }
}

TEST_CASE("negative term counts are rejected") {
    CHECK_THROWS_AS(dirichlet_coeffs(local_l_factor(par({Cyclo(1)}), 2), -1),
                    std::domain_error);
}

TEST_CASE("degree-4 comparison identities hold formally") {
    const std::vector<UnramifiedParam> ps = {
        par({zeta(5), zeta(7)}),
        par({Cyclo(2), zeta(3)}),
        par({zeta(60, 7), zeta(60, 49)}),
    };
    for (const UnramifiedParam& p : ps) {
        const auto cg = check_clebsch_gordon(p);
        CHECK(cg.holds);
        CHECK_FALSE(cg.witness.has_value());
        const auto l2 = check_lambda2_sym3(p);
        CHECK(l2.holds);
        CHECK_FALSE(l2.witness.has_value());
    }
}

TEST_CASE("degree-6 comparison discriminates exactly") {
    // Equal parameters with unit roots pass; the octic and split examples fail.
    CHECK(check_si3_local(zeta(4), Cyclo(1), zeta(4), Cyclo(1)));
    CHECK(check_si3_local(zeta(10), Cyclo(1), zeta(10, 3), Cyclo(1)));
    CHECK_FALSE(check_si3_local(zeta(8), Cyclo(1), zeta(8, 3), Cyclo(1)));
    CHECK_FALSE(check_si3_local(Cyclo(2), Cyclo(1), Cyclo(2), Cyclo(1)));
    CHECK_THROWS_AS(check_si3_local(Cyclo(0), Cyclo(1), Cyclo(1), Cyclo(1)),
                    std::domain_error);
}

TEST_CASE("euler factor prints one binomial per inverse root") {
    const LocalLFactor f = local_l_factor(par({zeta(4)}), 3);
    CHECK(euler_factor_str(f) == "(1 - (zeta_4) * 3^-s)^-1");
    const LocalLFactor g = local_l_factor(par({Cyclo(1), Cyclo(-1)}), 2);
    CHECK(euler_factor_str(g) ==
          "(1 - (-1) * 2^-s)^-1 * (1 - (1) * 2^-s)^-1");
}
