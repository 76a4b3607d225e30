#ifndef ORTHOQ_POLYNOMIAL_HPP
#define ORTHOQ_POLYNOMIAL_HPP

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "orthoq/error.hpp"
#include "orthoq/rational.hpp"

namespace orthoq {

/// Dense univariate polynomial over the rationals.  Coefficients are stored
/// constant term first with trailing zeros trimmed, so the zero polynomial has
/// no coefficients and degree() == Polynomial::kZeroDegree.
class Polynomial {
public:
    static constexpr int kZeroDegree = -1;

    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    /// The monomial c * x^k.
    static Polynomial monomial(std::size_t k, const Rational& c = 1);
    /// x - root.
    static Polynomial linear_factor(const Rational& root);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Coefficient of x^k; zero beyond the degree.
    Rational coeff(std::size_t k) const;
    /// Leading coefficient; zero for the zero polynomial.
    Rational leading() const;

    Rational operator()(const Rational& x) const;

    Polynomial monic() const;
    /// p(-x).
    Polynomial reflected() const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);
    Polynomial& operator/=(const Rational& c);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Rational& c) { return lhs *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial rhs) { return rhs *= c; }
    friend Polynomial operator/(Polynomial lhs, const Rational& c) { return lhs /= c; }
    friend Polynomial operator-(Polynomial p) { return p *= Rational(-1); }
    friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Raised when an expansion leaves a remainder outside the span of the basis.
class ExpansionError : public Error {
public:
    ExpansionError(const std::string& what, Polynomial residual)
        : Error(what), residual_(std::move(residual)) {}
    const Polynomial& residual() const { return residual_; }

private:
    Polynomial residual_;
};

struct InterpolationNode {
    Rational x;
    Rational y;
};

/// Unique polynomial of degree < nodes.size() through the nodes, built from
/// exact Newton divided differences.  Throws DomainError("degenerate
/// interpolation nodes") when two abscissae coincide.
Polynomial interpolate(std::span<const InterpolationNode> nodes);

/// Coefficients c_i with target = sum c_i * basis_i.  The basis must have
/// strictly increasing degrees; the expansion is computed by back-substitution
/// from the top degree.  Throws ExpansionError carrying the remainder when the
/// target is not in the span.
std::vector<Rational> expand_in_sequence(const Polynomial& target, std::span<const Polynomial> basis);

/// sum c_i * basis_i.
Polynomial linear_combination(std::span<const Rational> coeffs, std::span<const Polynomial> basis);

/// (a)_k = a (a+1) ... (a+k-1).
Rational pochhammer(const Rational& a, long k);
/// (a;q)_k = (1-a)(1-aq)...(1-aq^{k-1}).
Rational q_pochhammer(const Rational& a, const Rational& q, long k);

}  // namespace orthoq

#endif  // ORTHOQ_POLYNOMIAL_HPP
