#include "orthoq/basis.hpp"

#include "orthoq/error.hpp"

namespace orthoq {

Polynomial newton_basis_poly(const NewtonBasisSpec& spec, long k) {
    if (k < 0) throw DomainError("basis index must be non-negative");
    Polynomial w = Polynomial::constant(1);
    for (long j = 0; j < k; ++j) {
        const LatticePoint node = spec.lattice.shift(spec.eta, HalfInteger::from_int(j));
        w *= Polynomial::linear_factor(spec.lattice.x(node));
    }
    return w;
}

Rational k_basis_value(const Lattice& lattice, long j, const Rational& qs) {
    if (j == 0) return 1;
    const Rational q = lattice.q();
    const Rational u = lattice.c2() / lattice.c1();
    const Rational qs2 = qs * qs;
    // (-u q^{2-j} q^{2s}; q^2)_{j-1}
    Rational product = q_pochhammer(-u * pow(q, 2 - j) * qs2, q * q, j - 1);
    return pow(lattice.c1() / qs, j) * (1 + u * qs2) * product;
}

Polynomial k_basis_poly(const Lattice& lattice, long j) {
    if (!lattice.is_q()) throw DomainError("symmetric basis requires a q-quadratic lattice");
    if (!is_zero(lattice.c3())) throw DomainError("symmetric basis requires c3 = 0");
    if (j < 0) throw DomainError("basis index must be non-negative");
    if (j == 0) return Polynomial::constant(1);

    const auto sites = lattice.grid(static_cast<std::size_t>(j) + 2);
    std::vector<InterpolationNode> nodes;
    nodes.reserve(sites.size());
    for (const auto s : sites) {
        const LatticePoint pt = lattice.point(s);
        nodes.push_back({lattice.x(pt), k_basis_value(lattice, j, pt.coordinate())});
    }
    const auto fit = std::span<const InterpolationNode>(nodes).first(nodes.size() - 1);
    Polynomial k = interpolate(fit);
    if (k(nodes.back().x) != nodes.back().y) {
        throw DomainError("symmetric basis is not a polynomial in x on this lattice");
    }
    return k;
}

}  // namespace orthoq
