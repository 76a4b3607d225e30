#ifndef ORTHOQ_LATTICE_HPP
#define ORTHOQ_LATTICE_HPP

#include <compare>
#include <vector>

#include "orthoq/polynomial.hpp"
#include "orthoq/rational.hpp"

namespace orthoq {

/// A value in (1/2)Z stored as its double.
class HalfInteger {
public:
    constexpr HalfInteger() = default;
    static constexpr HalfInteger from_twice(long twice) { return HalfInteger(twice); }
    static constexpr HalfInteger from_int(long n) { return HalfInteger(2 * n); }

    constexpr long twice() const { return twice_; }
    Rational value() const { return make_rational(twice_, 2); }

    constexpr HalfInteger operator+(HalfInteger rhs) const { return HalfInteger(twice_ + rhs.twice_); }
    constexpr HalfInteger operator-(HalfInteger rhs) const { return HalfInteger(twice_ - rhs.twice_); }
    constexpr auto operator<=>(const HalfInteger&) const = default;

private:
    constexpr explicit HalfInteger(long twice) : twice_(twice) {}
    long twice_ = 0;
};

inline constexpr HalfInteger kHalf = HalfInteger::from_twice(1);

/// A point on the parameter axis of a lattice.  On a q-quadratic lattice the
/// stored coordinate is q^s (so irrational s such as the anchor eta with
/// q^eta = a stay exact); on a quadratic lattice it is s itself.
class LatticePoint {
public:
    LatticePoint() = default;
    explicit LatticePoint(Rational coordinate) : coordinate_(std::move(coordinate)) {}
    const Rational& coordinate() const { return coordinate_; }
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;

private:
    Rational coordinate_;
};

struct LatticeConstants {
    Rational alpha;
    Rational beta;
    Rational c_x;
};

enum class LatticeKind { Quadratic, QQuadratic };

/// x(s) = c1 q^{-s} + c2 q^s + c3 with q = p^2, or x(s) = c4 s^2 + c5 s + c6.
class Lattice {
public:
    static Lattice quadratic(Rational c4, Rational c5, Rational c6);
    static Lattice q_quadratic(Rational c1, Rational c2, Rational c3, Rational p);
    /// x(s) = (q^{-s} + q^s) / 2, the Askey-Wilson variable.
    static Lattice askey_wilson(Rational p);
    /// x(z) = z^2, the Wilson variable.
    static Lattice wilson();

    LatticeKind kind() const { return kind_; }
    bool is_q() const { return kind_ == LatticeKind::QQuadratic; }
    const Rational& c1() const { return c_[0]; }
    const Rational& c2() const { return c_[1]; }
    const Rational& c3() const { return c_[2]; }
    const Rational& c4() const { return c_[0]; }
    const Rational& c5() const { return c_[1]; }
    const Rational& c6() const { return c_[2]; }
    /// Square root of q; only meaningful for q-quadratic lattices.
    const Rational& p() const { return p_; }
    Rational q() const { return p_ * p_; }

    LatticePoint point(HalfInteger s) const;
    /// The point whose coordinate (q^s, or s) is the given rational.
    LatticePoint point_from_coordinate(const Rational& coordinate) const { return LatticePoint(coordinate); }
    LatticePoint shift(const LatticePoint& pt, HalfInteger h) const;

    Rational x(const LatticePoint& pt) const;
    Rational x(HalfInteger s) const { return x(point(s)); }
    /// x(s + 1/2) - x(s - 1/2).
    Rational nabla_x1(const LatticePoint& pt) const;

    LatticeConstants constants() const;
    Rational alpha() const { return constants().alpha; }
    Rational beta() const { return constants().beta; }

    Rational alpha_n(long n) const;
    Rational beta_n(long n) const;
    Rational gamma_n(long n) const;

    /// U1(x) = (alpha^2 - 1) x + beta (alpha + 1).
    Polynomial u1() const;
    /// U2(x) = (alpha^2 - 1) x^2 + 2 beta (alpha + 1) x + C_x.
    Polynomial u2() const;

    /// Half-integer sites s = 1/2, 1, 3/2, ... with pairwise distinct x(s) and
    /// nabla_x1(s) != 0, skipping sites that violate either condition.
    std::vector<HalfInteger> grid(std::size_t count) const;

    friend bool operator==(const Lattice&, const Lattice&) = default;

private:
    Lattice(LatticeKind kind, Rational a, Rational b, Rational c, Rational p);

    LatticeKind kind_;
    Rational c_[3];
    Rational p_;
};

}  // namespace orthoq

#endif  // ORTHOQ_LATTICE_HPP
