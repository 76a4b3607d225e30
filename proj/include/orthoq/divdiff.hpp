#ifndef ORTHOQ_DIVDIFF_HPP
#define ORTHOQ_DIVDIFF_HPP

#include <vector>

#include "orthoq/lattice.hpp"
#include "orthoq/polynomial.hpp"

namespace orthoq {

/// A lattice together with a cached evaluation grid.  The divided-difference
/// and averaging operators are computed by sampling on the grid and
/// interpolating; one extra site is always used as a consistency check.
class OperatorContext {
public:
    explicit OperatorContext(Lattice lattice, std::size_t cached_sites = 24);

    const Lattice& lattice() const { return lattice_; }
    /// Grid sites for an operator needing `count` sites; falls back to a
    /// fresh grid when the cache is too small.
    std::vector<HalfInteger> sites(std::size_t count) const;

private:
    Lattice lattice_;
    std::vector<HalfInteger> cache_;
};

/// D_x P: [P(x(s+1/2)) - P(x(s-1/2))] / [x(s+1/2) - x(s-1/2)].
Polynomial apply_D(const OperatorContext& ctx, const Polynomial& p);
/// S_x P: [P(x(s+1/2)) + P(x(s-1/2))] / 2.
Polynomial apply_S(const OperatorContext& ctx, const Polynomial& p);
/// k-fold D_x.
Polynomial apply_D_pow(const OperatorContext& ctx, const Polynomial& p, long k);
/// The half-shift mean M f(s) = [f(s+1/2) + f(s-1/2)] / 2; on polynomials in
/// x(s) it coincides with S_x.
Polynomial apply_M(const OperatorContext& ctx, const Polynomial& p);

}  // namespace orthoq

#endif  // ORTHOQ_DIVDIFF_HPP
