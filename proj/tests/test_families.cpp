#include <doctest.h>

#include "oracles.hpp"
#include "orthoq/error.hpp"
#include "orthoq/families.hpp"

using namespace orthoq;

namespace {

const Rational q_of(const FamilySpec& spec) { return spec.lattice.q(); }

}  // namespace

TEST_CASE("wilson members match the 4F3 sum in t") {
    const std::vector<std::vector<Rational>> sets{
        {1, 1, 1, 1}, {Rational(1, 2), Rational(1, 3), 2, Rational(3, 4)}, {Rational(2, 5), 1, Rational(7, 3), Rational(1, 6)}};
    for (const auto& v : sets) {
        const auto spec = make_family(Family::Wilson, v);
        for (long n = 0; n <= 6; ++n)
            CHECK(to_t_variable(monic_family(spec, n)) == oracle::wilson_t(n, v[0], v[1], v[2], v[3]));
    }
}

TEST_CASE("wilson t-variable rows for a=b=c=d=1") {
    const auto spec = make_family(Family::Wilson, {1, 1, 1, 1});
    CHECK(to_t_variable(monic_family(spec, 0)) == Polynomial({1}));
    CHECK(to_t_variable(monic_family(spec, 1)) == Polynomial({-1, 1}));
}

TEST_CASE("continuous dual hahn members match the 3F2 sum in t") {
    const std::vector<Rational> v{Rational(1, 2), Rational(1, 3), 2};
    const auto spec = make_family(Family::ContinuousDualHahn, v);
    for (long n = 0; n <= 6; ++n) CHECK(to_t_variable(monic_family(spec, n)) == oracle::cdh_t(n, v[0], v[1], v[2]));
}

TEST_CASE("q-families match their basic hypergeometric sums") {
    const Rational a(1, 3), b(2, 5), c(3, 7), d(1, 5);
    for (const Rational p : {Rational(1, 2), Rational(2, 3)}) {
        const auto aw = make_family(Family::AskeyWilson, {a, b, c, d}, p);
        const auto dqh = make_family(Family::ContinuousDualQHahn, {a, b, c}, p);
        const auto asc = make_family(Family::AlSalamChihara, {a, b}, p);
        const auto bqh = make_family(Family::ContinuousBigQHermite, {a}, p);
        const auto cqh = make_family(Family::ContinuousQHermite, {}, p);
        const Rational q = q_of(aw);
        for (long n = 0; n <= 6; ++n) {
            CHECK(monic_family(aw, n) == oracle::askey_wilson_x(n, q, a, b, c, d));
            CHECK(monic_family(dqh, n) == oracle::dual_q_hahn_x(n, q, a, b, c));
            CHECK(monic_family(asc, n) == oracle::al_salam_chihara_x(n, q, a, b));
            CHECK(monic_family(bqh, n) == oracle::big_q_hermite_x(n, q, a));
            CHECK(monic_family(cqh, n) == oracle::q_hermite_x(n, q));
        }
    }
}

TEST_CASE("continuous q-hermite degree 2 at p = 1/2") {
    CHECK(monic_family(make_family(Family::ContinuousQHermite, {}), 2) == Polynomial({Rational(-3, 16), 0, 1}));
}

TEST_CASE("anchor fallback when the first parameter is degenerate") {
    // a c = 1 breaks the recurrence anchored at a.
    const std::vector<Rational> v{2, 3, Rational(1, 2), Rational(1, 5)};
    const auto spec = make_family(Family::AskeyWilson, v);
    for (long n = 0; n <= 4; ++n)
        CHECK(monic_family(spec, n) == oracle::askey_wilson_x(n, spec.lattice.q(), v[1], v[0], v[2], v[3]));
}

TEST_CASE("parameter count is checked") {
    CHECK_THROWS_AS(make_family(Family::Wilson, {1, 2}), DomainError);
    CHECK_THROWS_AS(make_family(Family::ContinuousQHermite, {1}), DomainError);
}

TEST_CASE("to_t_variable is an involution") {
    const Polynomial p({1, Rational(2, 3), -5, 7});
    CHECK(to_t_variable(to_t_variable(p)) == p);
    CHECK(to_t_variable(Polynomial({-1, 1})) == Polynomial({1, 1}));
}

TEST_CASE("wilson recurrence matches the oracle and the closed form") {
    const std::vector<Rational> v{Rational(1, 2), Rational(1, 3), 2, Rational(3, 4)};
    const auto spec = make_family(Family::Wilson, v);
    const auto rows = ttrr_coeffs(spec, 5);
    for (const auto& row : rows) {
        const long n = row.n;
        REQUIRE(row.closed_form_match.has_value());
        CHECK(*row.closed_form_match);
        // t P_n = P_{n+1} + a^t P_n + b^t P_{n-1} from the oracle.
        const Polynomial t = Polynomial::monomial(1);
        Polynomial rest = t * oracle::wilson_t(n, v[0], v[1], v[2], v[3]) - oracle::wilson_t(n + 1, v[0], v[1], v[2], v[3]);
        const Rational a_t = rest.coeff(static_cast<std::size_t>(n));
        CHECK(row.a == -a_t);
        rest -= a_t * oracle::wilson_t(n, v[0], v[1], v[2], v[3]);
        const Rational b_t = n == 0 ? Rational(0) : rest.coeff(static_cast<std::size_t>(n - 1));
        CHECK(row.b == b_t);
    }
}

TEST_CASE("q-hermite recurrence coefficients") {
    const auto spec = make_family(Family::ContinuousQHermite, {});
    const Rational q = spec.lattice.q();
    for (const auto& row : ttrr_coeffs(spec, 5)) {
        CHECK(row.a == 0);
        CHECK(row.b == (1 - pow(q, row.n)) / 4);
    }
}

TEST_CASE("contiguous and derivative-shift relations hold") {
    const std::vector<std::vector<Rational>> wilson_sets{
        {Rational(1, 2), Rational(1, 3), 2, Rational(3, 4)}, {1, 1, 1, 1}, {Rational(2, 5), 1, Rational(7, 3), Rational(1, 6)}};
    for (const auto& v : wilson_sets)
        for (const auto& r : verify_contiguous(make_family(Family::Wilson, v), 5)) {
            INFO(r.identity << " n=" << r.n);
            CHECK(r.ok());
        }
    const std::vector<std::vector<Rational>> aw_sets{{Rational(1, 3), Rational(2, 5), Rational(3, 7), Rational(1, 5)},
                                                     {Rational(1, 4), Rational(2, 3), Rational(3, 5), Rational(2, 7)}};
    for (const auto& v : aw_sets)
        for (const auto& r : verify_contiguous(make_family(Family::AskeyWilson, v), 5)) {
            INFO(r.identity << " n=" << r.n);
            CHECK(r.ok());
        }
}

TEST_CASE("wilson derivative shift against the oracle") {
    // D on s^2 of W_n(t) reflected is (-n) W_{n-1}(t; a+1/2, ...) reflected.
    const std::vector<Rational> v{Rational(1, 2), Rational(1, 3), 2, Rational(3, 4)};
    const OperatorContext ctx(Lattice::wilson());
    const Rational h(1, 2);
    for (long n = 1; n <= 5; ++n) {
        const Polynomial lhs = apply_D(ctx, oracle::wilson_t(n, v[0], v[1], v[2], v[3]).reflected());
        const Polynomial rhs = Rational(-n) * oracle::wilson_t(n - 1, v[0] + h, v[1] + h, v[2] + h, v[3] + h).reflected();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("contiguous relations are limited to wilson and askey-wilson") {
    CHECK_THROWS_AS(verify_contiguous(make_family(Family::ContinuousQHermite, {}), 3), DomainError);
}

TEST_CASE("closed-form helpers report degenerate sums") {
    CHECK_THROWS_AS(wilson_A(0, Rational(1, 2), Rational(1, 2), -1, 0), DegenerateError);
    CHECK(wilson_C(0, 1, 1, 1, 1) == 0);
}
