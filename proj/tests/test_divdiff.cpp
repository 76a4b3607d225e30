#include <doctest.h>

#include "oracles.hpp"
#include "orthoq/divdiff.hpp"
#include "orthoq/error.hpp"

using namespace orthoq;

namespace {

std::vector<Lattice> samples() {
    return {Lattice::wilson(), Lattice::quadratic(2, 1, Rational(-1, 3)), Lattice::askey_wilson(Rational(1, 2)),
            Lattice::q_quadratic(Rational(1, 3), Rational(5, 2), Rational(1, 7), Rational(2, 3))};
}

/// Pointwise definitions of D and S at site s.
Rational d_at(const Lattice& lat, const Polynomial& f, HalfInteger s) {
    const Rational xp = lat.x(s + kHalf), xm = lat.x(s - kHalf);
    return (f(xp) - f(xm)) / (xp - xm);
}

Rational s_at(const Lattice& lat, const Polynomial& f, HalfInteger s) {
    return (f(lat.x(s + kHalf)) + f(lat.x(s - kHalf))) / 2;
}

}  // namespace

TEST_CASE("operators on low-degree polynomials") {
    for (const auto& lat : samples()) {
        const OperatorContext ctx(lat);
        const Polynomial x = Polynomial::monomial(1);
        const Polynomial sx({lat.beta(), lat.alpha()});
        CHECK(apply_D(ctx, Polynomial({1})).is_zero());
        CHECK(apply_D(ctx, x) == Polynomial({1}));
        CHECK(apply_D(ctx, x * x) == 2 * sx);
        CHECK(apply_S(ctx, Polynomial({1})) == Polynomial({1}));
        CHECK(apply_S(ctx, x) == sx);
        CHECK(apply_S(ctx, x * x) == sx * sx + lat.u2());
        CHECK(apply_M(ctx, x * x) == apply_S(ctx, x * x));
        CHECK(apply_D_pow(ctx, x * x * x, 0) == x * x * x);
        CHECK(apply_D_pow(ctx, x, 2).is_zero());
    }
    CHECK(apply_D_pow(OperatorContext(Lattice::wilson()), Polynomial::monomial(2), 2) == Polynomial({2}));
    CHECK_THROWS_AS(apply_D_pow(OperatorContext(Lattice::wilson()), Polynomial({1}), -1), DomainError);
}

TEST_CASE("operators agree with pointwise definitions") {
    oracle::RationalSource src(7);
    for (const auto& lat : samples()) {
        const OperatorContext ctx(lat);
        const Polynomial f = src.polynomial(6);
        const Polynomial df = apply_D(ctx, f), sf = apply_S(ctx, f);
        for (long twice = 1; twice <= 9; twice += 2) {
            const HalfInteger s = HalfInteger::from_twice(twice);
            const Rational xs = lat.x(s);
            CHECK(df(xs) == d_at(lat, f, s));
            CHECK(sf(xs) == s_at(lat, f, s));
        }
    }
}

TEST_CASE("product and composition rules") {
    oracle::RationalSource src(2024);
    for (const auto& lat : samples()) {
        const OperatorContext ctx(lat);
        const Polynomial u1 = lat.u1(), u2 = lat.u2();
        const Rational alpha = lat.alpha();
        for (int trial = 0; trial < 20; ++trial) {
            const Polynomial f = src.polynomial(trial % 7);
            const Polynomial g = src.polynomial(6 - trial % 7);
            const Polynomial df = apply_D(ctx, f), dg = apply_D(ctx, g);
            const Polynomial sf = apply_S(ctx, f), sg = apply_S(ctx, g);
            CHECK(apply_D(ctx, f * g) == df * sg + sf * dg);
            CHECK(apply_S(ctx, f * g) == sf * sg + u2 * df * dg);
            CHECK(apply_D(ctx, sf) == alpha * apply_S(ctx, df) + u1 * apply_D_pow(ctx, f, 2));
            CHECK(apply_S(ctx, sf) == u1 * apply_S(ctx, df) + alpha * u2 * apply_D_pow(ctx, f, 2) + f);
        }
    }
}
