#include "orthoq/polynomial.hpp"

#include <algorithm>
#include <ostream>

namespace orthoq {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(std::size_t k, const Rational& c) {
    std::vector<Rational> coeffs(k + 1);
    coeffs[k] = c;
    return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::linear_factor(const Rational& root) { return Polynomial({-root, Rational(1)}); }

void Polynomial::trim() {
    while (!coeffs_.empty() && orthoq::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw DomainError("zero polynomial has no monic form");
    return *this / leading();
}

Polynomial Polynomial::reflected() const {
    Polynomial out = *this;
    for (std::size_t k = 1; k < out.coeffs_.size(); k += 2) out.coeffs_[k] = -out.coeffs_[k];
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (orthoq::is_zero(coeffs_[i])) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (orthoq::is_zero(c)) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

Polynomial& Polynomial::operator/=(const Rational& c) {
    if (orthoq::is_zero(c)) throw DomainError("polynomial divided by zero");
    for (auto& a : coeffs_) a /= c;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational& c = p.coeffs()[static_cast<std::size_t>(k)];
        if (is_zero(c)) continue;
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        Rational mag = abs(c);
        if (k == 0 || mag != 1) os << to_string(mag);
        if (k > 0) os << (k == 0 || mag != 1 ? "*x" : "x");
        if (k > 1) os << "^" << k;
        first = false;
    }
    return os;
}

Polynomial interpolate(std::span<const InterpolationNode> nodes) {
    const std::size_t m = nodes.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (nodes[i].x == nodes[j].x) throw DomainError("degenerate interpolation nodes");
        }
    }
    // Divided-difference table, overwritten in place column by column.
    std::vector<Rational> dd(m);
    for (std::size_t i = 0; i < m; ++i) dd[i] = nodes[i].y;
    for (std::size_t level = 1; level < m; ++level) {
        for (std::size_t i = m - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i].x - nodes[i - level].x);
        }
    }
    // Horner over the Newton form.
    Polynomial result;
    for (std::size_t i = m; i-- > 0;) {
        result *= Polynomial::linear_factor(nodes[i].x);
        result += Polynomial::constant(dd[i]);
    }
    return result;
}

std::vector<Rational> expand_in_sequence(const Polynomial& target, std::span<const Polynomial> basis) {
    int previous = Polynomial::kZeroDegree - 1;
    for (const auto& b : basis) {
        if (b.is_zero() || b.degree() <= previous) {
            throw DomainError("expansion basis must have strictly increasing degrees");
        }
        previous = b.degree();
    }
    std::vector<Rational> coeffs(basis.size());
    Polynomial residual = target;
    for (std::size_t i = basis.size(); i-- > 0;) {
        if (residual.degree() > basis[i].degree()) break;
        if (residual.degree() == basis[i].degree()) {
            coeffs[i] = residual.leading() / basis[i].leading();
            residual -= coeffs[i] * basis[i];
        }
    }
    if (!residual.is_zero()) {
        throw ExpansionError("target is not in the span of the expansion basis", residual);
    }
    return coeffs;
}

Polynomial linear_combination(std::span<const Rational> coeffs, std::span<const Polynomial> basis) {
    if (coeffs.size() != basis.size()) throw DomainError("coefficient and basis lengths differ");
    Polynomial out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (!is_zero(coeffs[i])) out += coeffs[i] * basis[i];
    }
    return out;
}

Rational pochhammer(const Rational& a, long k) {
    if (k < 0) throw DomainError("pochhammer index must be non-negative");
    Rational out = 1;
    for (long j = 0; j < k; ++j) out *= a + j;
    return out;
}

Rational q_pochhammer(const Rational& a, const Rational& q, long k) {
    if (k < 0) throw DomainError("q-pochhammer index must be non-negative");
    Rational out = 1;
    Rational term = a;
    for (long j = 0; j < k; ++j) {
        out *= 1 - term;
        term *= q;
    }
    return out;
}

}  // namespace orthoq
