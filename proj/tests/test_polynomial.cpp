#include <doctest.h>

#include <vector>

#include "orthoq/basis.hpp"
#include "orthoq/error.hpp"
#include "orthoq/polynomial.hpp"

using namespace orthoq;

TEST_CASE("degree and leading coefficient") {
    CHECK(Polynomial().degree() < 0);
    CHECK(Polynomial({1, 2, 0}).degree() == 1);
    CHECK(Polynomial({1, 2, 0}).leading() == 2);
    CHECK(Polynomial({0, 0}).is_zero());
}

TEST_CASE("arithmetic") {
    const Polynomial a({1, 1});
    const Polynomial b({-1, 1});
    CHECK(a * b == Polynomial({-1, 0, 1}));
    CHECK(a + b == Polynomial({0, 2}));
    CHECK(a - a == Polynomial());
    CHECK((a * Rational(1, 2))(Rational(3)) == 2);
    CHECK(Polynomial({0, 2, 4}).monic() == Polynomial({0, Rational(1, 2), 1}));
    CHECK(Polynomial({1, 2, 3}).reflected() == Polynomial({1, -2, 3}));
}

TEST_CASE("interpolation") {
    std::vector<InterpolationNode> constant{{0, 1}, {1, 1}};
    CHECK(interpolate(constant) == Polynomial({1}));
    std::vector<InterpolationNode> square{{0, 0}, {1, 1}, {2, 4}};
    CHECK(interpolate(square) == Polynomial({0, 0, 1}));
    std::vector<InterpolationNode> redundant{
        {Rational(1, 2), Rational(1, 4)}, {1, 1}, {Rational(3, 2), Rational(9, 4)}, {2, 4}};
    CHECK(interpolate(redundant) == Polynomial({0, 0, 1}));
    std::vector<InterpolationNode> clash{{1, 1}, {1, 2}};
    CHECK_THROWS_AS(interpolate(clash), DomainError);
}

TEST_CASE("expansion in a sequence") {
    const std::vector<Polynomial> mono{Polynomial({1}), Polynomial({0, 1}), Polynomial({0, 0, 1})};
    CHECK(expand_in_sequence(Polynomial({0, 0, 1}), mono) == std::vector<Rational>{0, 0, 1});
    const std::vector<Polynomial> shifted{Polynomial({1}), Polynomial({1, 1}), Polynomial({0, 0, 1})};
    CHECK(expand_in_sequence(Polynomial({0, 1, 1}), shifted) == std::vector<Rational>{-1, 1, 1});
    const std::vector<Polynomial> line{Polynomial({1}), Polynomial({0, 1})};
    CHECK(expand_in_sequence(Polynomial(), line) == std::vector<Rational>{0, 0});
    const auto c = expand_in_sequence(Polynomial({0, 1, 1}), shifted);
    CHECK(linear_combination(c, shifted) == Polynomial({0, 1, 1}));
}

TEST_CASE("expansion outside the span carries the remainder") {
    const std::vector<Polynomial> gap{Polynomial({1}), Polynomial({0, 0, 1})};
    try {
        expand_in_sequence(Polynomial({0, 1, 1}), gap);
        FAIL("expected ExpansionError");
    } catch (const ExpansionError& err) {
        CHECK(err.residual() == Polynomial({0, 1}));
    }
}

TEST_CASE("pochhammer symbols") {
    CHECK(pochhammer(1, 3) == 6);
    CHECK(pochhammer(Rational(1, 2), 0) == 1);
    CHECK(q_pochhammer(2, 4, 2) == 7);
    CHECK(q_pochhammer(Rational(1, 3), Rational(1, 2), 0) == 1);
}

TEST_CASE("newton basis") {
    const NewtonBasisSpec wil{Lattice::wilson(), LatticePoint(0)};
    CHECK(newton_basis_poly(wil, 0) == Polynomial({1}));
    CHECK(newton_basis_poly(wil, 2) == Polynomial({0, -1, 1}));
    const Rational a(2, 3);
    const NewtonBasisSpec aw{Lattice::askey_wilson(Rational(1, 2)), LatticePoint(a)};
    CHECK(newton_basis_poly(aw, 1) == Polynomial({-(a + 1 / a) / 2, 1}));
}

TEST_CASE("symmetric basis") {
    const Lattice lat = Lattice::askey_wilson(Rational(1, 3));
    CHECK(k_basis_poly(lat, 0) == Polynomial({1}));
    CHECK(k_basis_poly(lat, 1) == Polynomial({0, 1}));
    // Degree 2 against direct evaluation at three fresh sites.
    const Polynomial k2 = k_basis_poly(lat, 2);
    CHECK(k2.degree() == 2);
    for (long e : {3, 5, 7}) {
        const Rational qs = pow(lat.q(), e);
        const Rational x = (qs + 1 / qs) / 2;
        CHECK(k2(x) == k_basis_value(lat, 2, qs));
    }
}
