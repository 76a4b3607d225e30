#include "orthoq/bochner.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "orthoq/basis.hpp"
#include "orthoq/error.hpp"

namespace orthoq {

namespace {

struct FamilyInfo {
    Family family;
    std::string_view name;
    std::size_t params;
    bool q;
};

constexpr std::array<FamilyInfo, 7> kFamilies{{
    {Family::AskeyWilson, "askey-wilson", 4, true},
    {Family::ContinuousDualQHahn, "continuous-dual-q-hahn", 3, true},
    {Family::AlSalamChihara, "al-salam-chihara", 2, true},
    {Family::ContinuousBigQHermite, "continuous-big-q-hermite", 1, true},
    {Family::ContinuousQHermite, "continuous-q-hermite", 0, true},
    {Family::Wilson, "wilson", 4, false},
    {Family::ContinuousDualHahn, "continuous-dual-hahn", 3, false},
}};

const FamilyInfo& info(Family family) {
    for (const auto& entry : kFamilies)
        if (entry.family == family) return entry;
    throw std::logic_error("unknown family enumerator");
}

}  // namespace

std::size_t parameter_count(Family family) { return info(family).params; }
bool is_q_family(Family family) { return info(family).q; }
std::string_view family_name(Family family) { return info(family).name; }

Family parse_family(std::string_view name) {
    for (const auto& entry : kFamilies)
        if (entry.name == name) return entry.family;
    throw ParseError("unknown family '" + std::string(name) + "'");
}

Rational lambda_for(const SLData& sl, long n) {
    if (n <= 0) return 0;
    const Lattice& lat = sl.lattice;
    return -lat.gamma_n(n) * lat.gamma_n(n - 1) * sl.phi2 - lat.gamma_n(n) * lat.alpha_n(n - 1) * sl.psi1;
}

Rational sigma_at(const SLData& sl, const LatticePoint& pt) {
    const Rational x = sl.lattice.x(pt);
    return sl.phi()(x) - sl.lattice.nabla_x1(pt) / 2 * sl.psi()(x);
}

AuxPolynomial sigma_aux(const SLData& sl) {
    const Lattice& lat = sl.lattice;
    std::vector<InterpolationNode> nodes;
    for (long twice = 1; nodes.size() < 6; ++twice) {
        const LatticePoint pt = lat.point(HalfInteger::from_twice(twice));
        const Rational& big_x = pt.coordinate();
        Rational value = sigma_at(sl, pt);
        if (lat.is_q()) value *= big_x * big_x;
        nodes.push_back({big_x, value});
    }
    const Polynomial p = interpolate(std::span<const InterpolationNode>(nodes).first(5));
    if (p(nodes.back().x) != nodes.back().y) throw std::logic_error("sigma is not a quartic in X");
    AuxPolynomial aux;
    for (std::size_t i = 0; i < 5; ++i) aux.coeffs[i] = p.coeff(i);
    return aux;
}

Rational recurrence_a(const SLData& sl, long n, long k, CoefficientReading reading) {
    const Rational lambda = lambda_for(sl, n);
    if (k <= 0) return lambda;
    const Lattice& lat = sl.lattice;
    const Rational& c = reading == CoefficientReading::Psi1 ? sl.psi1 : sl.phi1;
    return lambda + lat.gamma_n(k) * lat.gamma_n(k - 1) * sl.phi2 + lat.gamma_n(k) * lat.alpha_n(k - 1) * c;
}

Rational recurrence_b(const SLData& sl, const LatticePoint& eta, long k) {
    const Lattice& lat = sl.lattice;
    const Rational x_eta = lat.x(eta);
    const Rational x_k = lat.x(lat.shift(eta, HalfInteger::from_int(k)));
    const Rational h = sl.phi2 * (x_k + x_eta) + sl.phi1 - sl.psi1 * lat.nabla_x1(eta) / 2;
    return lat.gamma_n(k + 1) * lat.gamma_n(k) * h + lat.alpha_n(k) * lat.gamma_n(k + 1) * sl.psi()(x_k);
}

std::vector<Rational> solve_dk(const SLData& sl, const Rational& anchor, long n) {
    if (n < 0) throw DomainError("degree must be non-negative");
    const LatticePoint eta = sl.lattice.point_from_coordinate(anchor);
    if (!is_zero(sigma_at(sl, eta))) throw DomainError("anchor is not a zero of sigma");
    if (!is_zero(recurrence_a(sl, n, n))) throw std::logic_error("A_n does not vanish");

    std::vector<Rational> d(static_cast<std::size_t>(n) + 1);
    d[static_cast<std::size_t>(n)] = 1;
    for (long k = n - 1; k >= 0; --k) {
        const Rational a = recurrence_a(sl, n, k);
        const Rational b = recurrence_b(sl, eta, k);
        if (is_zero(a) || is_zero(b)) {
            throw DegenerateError("non-generic parameters: d_k recurrence breaks down at k = " + std::to_string(k) +
                                  (is_zero(a) ? " (A_k = 0)" : " (B_k = 0)"));
        }
        d[static_cast<std::size_t>(k)] = -b * d[static_cast<std::size_t>(k) + 1] / a;
    }
    return d;
}

Polynomial build_solution(const SLData& sl, const Rational& anchor, long n) {
    const auto d = solve_dk(sl, anchor, n);
    const NewtonBasisSpec spec{sl.lattice, sl.lattice.point_from_coordinate(anchor)};
    Polynomial out;
    for (long k = 0; k <= n; ++k) out += d[static_cast<std::size_t>(k)] * newton_basis_poly(spec, k);
    return out.monic();
}

Polynomial solve_symmetric(const Lattice& lattice, const Rational& phi2, const Rational& phi0, const Rational& psi1,
                           long n) {
    if (n < 0) throw DomainError("degree must be non-negative");
    if (!lattice.is_q()) throw DomainError("symmetric basis requires a q-quadratic lattice");
    if (!is_zero(lattice.c3())) throw DomainError("symmetric basis requires c3 = 0");

    const Rational alpha = lattice.alpha();
    const SLData sl{phi2, 0, phi0, psi1, 0, lattice};
    auto g = [&](long j) { return lattice.gamma_n(j); };
    auto y = [&](long j) {
        const Rational t = pow(lattice.p(), j) - pow(lattice.p(), -j);
        return Rational(-lattice.c1() * lattice.c2() * t * t);
    };

    std::vector<Rational> d(static_cast<std::size_t>(n) + 1);
    d[static_cast<std::size_t>(n)] = 1;
    for (long j = n - 2; j >= 0; j -= 2) {
        const Rational a = recurrence_a(sl, n, j);
        const Rational coef =
            g(j + 2) * g(j + 1) * (phi2 * y(j) + phi0) + psi1 * g(j + 2) * (g(j) * y(j + 1) - alpha * g(j + 1) * y(j));
        if (is_zero(a)) {
            throw DegenerateError("non-generic symmetric parameters: recurrence denominator vanishes at j = " +
                                  std::to_string(j));
        }
        d[static_cast<std::size_t>(j)] = -coef * d[static_cast<std::size_t>(j) + 2] / a;
    }

    Polynomial out;
    for (long j = n; j >= 0; j -= 2) out += d[static_cast<std::size_t>(j)] * k_basis_poly(lattice, j);
    return out.monic();
}

namespace {

/// Quotient of p by (x - r), assuming r is a root.
Polynomial deflate(const Polynomial& p, const Rational& r) {
    const int deg = p.degree();
    std::vector<Rational> q(static_cast<std::size_t>(deg));
    Rational carry = 0;
    for (int i = deg; i >= 1; --i) {
        carry = p.coeff(static_cast<std::size_t>(i)) + carry * r;
        q[static_cast<std::size_t>(i - 1)] = carry;
    }
    return Polynomial(std::move(q));
}

Polynomial derivative(const Polynomial& p) {
    std::vector<Rational> out;
    for (int i = 1; i <= p.degree(); ++i) out.push_back(p.coeff(static_cast<std::size_t>(i)) * i);
    return Polynomial(std::move(out));
}

Polynomial remainder(Polynomial a, const Polynomial& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const Rational factor = a.leading() / b.leading();
        a -= Polynomial::monomial(static_cast<std::size_t>(a.degree() - b.degree()), factor) * b;
    }
    return a;
}

Polynomial quotient(Polynomial a, const Polynomial& b) {
    Polynomial q;
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const Polynomial term =
            Polynomial::monomial(static_cast<std::size_t>(a.degree() - b.degree()), a.leading() / b.leading());
        q += term;
        a -= term * b;
    }
    return q;
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

int sign_variations(const std::vector<Polynomial>& chain, const Rational& at) {
    int count = 0;
    int last = 0;
    for (const auto& p : chain) {
        const int s = sgn(p(at));
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

/// Integer roots of a squarefree polynomial in the half-open interval
/// (lo, hi], both endpoints being half-odd integers.
void isolate_integers(const std::vector<Polynomial>& chain, const Rational& lo, const Rational& hi,
                      std::vector<mpz_class>& out) {
    if (sign_variations(chain, lo) - sign_variations(chain, hi) == 0) return;
    if (hi - lo == 1) {
        const mpz_class k = mpz_class(lo + Rational(1, 2));
        if (is_zero(chain.front()(Rational(k)))) out.push_back(k);
        return;
    }
    const mpz_class width = mpz_class(hi - lo);
    const Rational mid = lo + Rational(mpz_class(width / 2));
    isolate_integers(chain, lo, mid, out);
    isolate_integers(chain, mid, hi, out);
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("the zero polynomial has no finite root set");
    std::vector<Rational> roots;
    Polynomial rest = p;
    while (rest.degree() > 0 && is_zero(rest.coeff(0))) {
        roots.emplace_back(0);
        rest = deflate(rest, 0);
    }
    const int deg = rest.degree();
    if (deg <= 0) return roots;

    // Scale to the monic integer polynomial Q(y) = a_d^{d-1} P(y / a_d).
    mpz_class lcm_den = 1;
    for (const auto& c : rest.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> a;
    for (const auto& c : rest.coeffs()) a.push_back(mpz_class(c * lcm_den));
    const mpz_class lead = a.back();
    std::vector<Rational> b(a.size());
    b.back() = 1;
    mpz_class bound = 0;
    for (int i = 0; i < deg; ++i) {
        mpz_class scale;
        mpz_pow_ui(scale.get_mpz_t(), lead.get_mpz_t(), static_cast<unsigned long>(deg - 1 - i));
        const mpz_class value = a[static_cast<std::size_t>(i)] * scale;
        b[static_cast<std::size_t>(i)] = Rational(value);
        if (abs(value) > bound) bound = abs(value);
    }
    const Polynomial monic_int(b);
    const Polynomial squarefree = quotient(monic_int, gcd(monic_int, derivative(monic_int)));

    std::vector<Polynomial> chain{squarefree, derivative(squarefree)};
    while (chain.back().degree() > 0) {
        Polynomial r = -remainder(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        chain.push_back(std::move(r));
    }

    std::vector<mpz_class> integer_roots;
    const Rational edge = Rational(bound + 1) + Rational(1, 2);
    isolate_integers(chain, -edge, edge, integer_roots);

    for (const auto& y : integer_roots) {
        const Rational r = Rational(y) / Rational(lead);
        while (rest.degree() > 0 && is_zero(rest(r))) {
            roots.push_back(r);
            rest = deflate(rest, r);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

FamilyTag classify(const SLData& sl) {
    const Lattice& lat = sl.lattice;
    if (is_zero(sl.psi1)) throw DomainError("classification requires deg psi = 1");
    const Polynomial p = sigma_aux(sl).as_polynomial();

    if (lat.is_q()) {
        if (lat.c1() != Rational(1, 2) || lat.c2() != Rational(1, 2) || !is_zero(lat.c3())) {
            throw DomainError("classification requires the lattice x(s) = (q^s + q^-s)/2; re-normalize the data");
        }
        if (p.degree() < 4) {
            throw ClassificationError("degree-" + std::to_string(p.degree()) +
                                      " branch is a limiting family outside the supported tags");
        }
        const auto roots = rational_roots(p);
        if (roots.size() < 4) throw ClassificationError("parameters outside rational-root scope");
        std::vector<Rational> params;
        for (const auto& r : roots)
            if (!is_zero(r)) params.push_back(r);
        static constexpr std::array<Family, 5> by_count{Family::ContinuousQHermite, Family::ContinuousBigQHermite,
                                                        Family::AlSalamChihara, Family::ContinuousDualQHahn,
                                                        Family::AskeyWilson};
        return {by_count[params.size()], std::move(params), lat.c2() / lat.c1()};
    }

    if (p.degree() < 3) throw ClassificationError("inconsistent psi1 = 0 branch");
    const auto roots = rational_roots(p);
    if (static_cast<int>(roots.size()) < p.degree()) {
        throw ClassificationError("parameters outside rational-root scope");
    }
    const Rational u = lat.c5() / lat.c4();
    std::vector<Rational> params;
    for (const auto& r : roots) params.push_back(r + u / 2);
    return {p.degree() == 4 ? Family::Wilson : Family::ContinuousDualHahn, std::move(params), u};
}

Polynomial sl_residual(const OperatorContext& ctx, const SLData& sl, const Rational& lambda, const Polynomial& p) {
    const Polynomial dp = apply_D(ctx, p);
    return sl.phi() * apply_D(ctx, dp) + sl.psi() * apply_S(ctx, dp) + lambda * p;
}

Polynomial verify_sl(const OperatorContext& ctx, const SLData& sl, long n, const Polynomial& p) {
    return sl_residual(ctx, sl, lambda_for(sl, n), p);
}

Polynomial verify_sl(const SLData& sl, long n, const Polynomial& p) {
    return verify_sl(OperatorContext(sl.lattice), sl, n, p);
}

}  // namespace orthoq
