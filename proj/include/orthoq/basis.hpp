#ifndef ORTHOQ_BASIS_HPP
#define ORTHOQ_BASIS_HPP

#include "orthoq/lattice.hpp"
#include "orthoq/polynomial.hpp"

namespace orthoq {

/// Anchor of the Newton-type basis w_k(x, eta) = prod_{j<k} (x - x(eta + j)).
struct NewtonBasisSpec {
    Lattice lattice;
    LatticePoint eta;
};

/// w_k(x, eta) as a monic polynomial of degree k; w_0 = 1.
Polynomial newton_basis_poly(const NewtonBasisSpec& spec, long k);

/// The symmetric-case basis K_j on a lattice c1 q^{-s} + c2 q^s (c3 = 0):
///   K_j(x(s)) = (c1 q^{-s})^j (1 + u q^{2s}) (-u q^{2-j} q^{2s}; q^2)_{j-1},  u = c2/c1,
/// with K_0 = 1.  Recovered as a polynomial in x by interpolation over j + 1
/// grid sites and checked on one more.
Polynomial k_basis_poly(const Lattice& lattice, long j);

/// Direct evaluation of K_j at the site with q^s = qs.
Rational k_basis_value(const Lattice& lattice, long j, const Rational& qs);

}  // namespace orthoq

#endif  // ORTHOQ_BASIS_HPP
