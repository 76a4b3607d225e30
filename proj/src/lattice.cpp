#include "orthoq/lattice.hpp"

#include <algorithm>

#include "orthoq/error.hpp"

namespace orthoq {

Lattice::Lattice(LatticeKind kind, Rational a, Rational b, Rational c, Rational p)
    : kind_(kind), c_{std::move(a), std::move(b), std::move(c)}, p_(std::move(p)) {}

Lattice Lattice::quadratic(Rational c4, Rational c5, Rational c6) {
    if (is_zero(c4)) throw DomainError("invalid lattice: quadratic lattice requires c4 != 0");
    return Lattice(LatticeKind::Quadratic, std::move(c4), std::move(c5), std::move(c6), Rational(1));
}

Lattice Lattice::q_quadratic(Rational c1, Rational c2, Rational c3, Rational p) {
    if (is_zero(c1)) throw DomainError("invalid lattice: q-quadratic lattice requires c1 != 0");
    if (is_zero(p) || p == 1 || p == -1) throw DomainError("invalid lattice: p must avoid 0, 1 and -1");
    return Lattice(LatticeKind::QQuadratic, std::move(c1), std::move(c2), std::move(c3), std::move(p));
}

Lattice Lattice::askey_wilson(Rational p) {
    return q_quadratic(Rational(1, 2), Rational(1, 2), Rational(0), std::move(p));
}

Lattice Lattice::wilson() { return quadratic(Rational(1), Rational(0), Rational(0)); }

LatticePoint Lattice::point(HalfInteger s) const {
    if (is_q()) return LatticePoint(pow(p_, s.twice()));
    return LatticePoint(s.value());
}

LatticePoint Lattice::shift(const LatticePoint& pt, HalfInteger h) const {
    if (is_q()) return LatticePoint(pt.coordinate() * pow(p_, h.twice()));
    return LatticePoint(pt.coordinate() + h.value());
}

Rational Lattice::x(const LatticePoint& pt) const {
    const Rational& z = pt.coordinate();
    if (is_q()) {
        if (is_zero(z)) throw DomainError("q-lattice point with zero coordinate");
        return c1() / z + c2() * z + c3();
    }
    return (c4() * z + c5()) * z + c6();
}

Rational Lattice::nabla_x1(const LatticePoint& pt) const {
    return x(shift(pt, kHalf)) - x(shift(pt, HalfInteger() - kHalf));
}

LatticeConstants Lattice::constants() const {
    if (!is_q()) return {Rational(1), c4() / 4, c5() * c5() / 4 - c4() * c6()};
    const Rational q = this->q();
    Rational alpha = (p_ + 1 / p_) / 2;
    Rational beta = -c3() * (p_ - 1) * (p_ - 1) / (2 * p_);
    Rational c_x = (q - 1) * (q - 1) * (c3() * c3() - 4 * c1() * c2()) / (4 * q);
    return {alpha, beta, c_x};
}

Rational Lattice::alpha_n(long n) const {
    if (!is_q()) return 1;
    return (pow(p_, n) + pow(p_, -n)) / 2;
}

Rational Lattice::beta_n(long n) const {
    const auto k = constants();
    if (!is_q()) return k.beta * n * n;
    return k.beta * (1 - alpha_n(n)) / (1 - k.alpha);
}

Rational Lattice::gamma_n(long n) const {
    if (!is_q()) return n;
    return (pow(p_, n) - pow(p_, -n)) / (p_ - 1 / p_);
}

Polynomial Lattice::u1() const {
    const auto k = constants();
    return Polynomial({k.beta * (k.alpha + 1), k.alpha * k.alpha - 1});
}

Polynomial Lattice::u2() const {
    const auto k = constants();
    return Polynomial({k.c_x, 2 * k.beta * (k.alpha + 1), k.alpha * k.alpha - 1});
}

std::vector<HalfInteger> Lattice::grid(std::size_t count) const {
    if (count == 0) throw DomainError("grid size must be positive");
    std::vector<HalfInteger> sites;
    std::vector<Rational> xs;
    const std::size_t budget = 4 * count + 16;
    HalfInteger s = kHalf;
    for (std::size_t tried = 0; sites.size() < count && tried < budget; ++tried, s = s + kHalf) {
        const LatticePoint pt = point(s);
        if (is_zero(nabla_x1(pt))) continue;
        Rational xs_value = x(pt);
        if (std::find(xs.begin(), xs.end(), xs_value) != xs.end()) continue;
        xs.push_back(std::move(xs_value));
        sites.push_back(s);
    }
    if (sites.size() < count) throw DomainError("invalid lattice: cannot find enough distinct grid sites");
    return sites;
}

}  // namespace orthoq
