#ifndef ORTHOQ_BOCHNER_HPP
#define ORTHOQ_BOCHNER_HPP

#include <array>
#include <string_view>
#include <vector>

#include "orthoq/divdiff.hpp"
#include "orthoq/lattice.hpp"
#include "orthoq/polynomial.hpp"

namespace orthoq {

/// phi D^2 y + psi S D y + lambda_n y = 0 with phi = phi2 x^2 + phi1 x + phi0
/// and psi = psi1 x + psi0.
struct SLData {
    Rational phi2, phi1, phi0;
    Rational psi1, psi0;
    Lattice lattice;

    Polynomial phi() const { return Polynomial({phi0, phi1, phi2}); }
    Polynomial psi() const { return Polynomial({psi0, psi1}); }
};

/// The quartic P(X) with sigma(x(s)) = P(q^s) / q^{2s} on a q-quadratic lattice,
/// or sigma(x(s)) = P(s) on a quadratic one.
struct AuxPolynomial {
    std::array<Rational, 5> coeffs;

    Polynomial as_polynomial() const { return Polynomial(std::vector<Rational>(coeffs.begin(), coeffs.end())); }
};

enum class Family {
    AskeyWilson,
    ContinuousDualQHahn,
    AlSalamChihara,
    ContinuousBigQHermite,
    ContinuousQHermite,
    Wilson,
    ContinuousDualHahn,
};

/// Number of parameters a family carries.
std::size_t parameter_count(Family family);
bool is_q_family(Family family);
/// Hyphenated lower-case name, e.g. "continuous-dual-q-hahn".
std::string_view family_name(Family family);
/// Inverse of family_name; throws ParseError on unknown names.
Family parse_family(std::string_view name);

struct FamilyTag {
    Family family;
    std::vector<Rational> params;
    /// c2/c1 or c5/c4 of the lattice the data was classified on.
    Rational u;
};

/// lambda_n = -gamma_n gamma_{n-1} phi2 - gamma_n alpha_{n-1} psi1.
Rational lambda_for(const SLData& sl, long n);

/// sigma(x) = phi(x) - (nabla x_1 / 2) psi(x) at the given point.
Rational sigma_at(const SLData& sl, const LatticePoint& pt);

/// Builds P(X) by sampling sigma on six sites and interpolating (one site is
/// a check).  Works on any lattice; classification additionally requires the
/// normal forms.
AuxPolynomial sigma_aux(const SLData& sl);

/// Which phi/psi coefficient enters A_k alongside gamma_k alpha_{k-1}.
enum class CoefficientReading { Psi1, Phi1 };

/// A_k = lambda_n + gamma_k gamma_{k-1} phi2 + gamma_k alpha_{k-1} c, with c
/// either psi1 or phi1.
Rational recurrence_a(const SLData& sl, long n, long k, CoefficientReading reading = CoefficientReading::Psi1);

/// B_k = gamma_{k+1} gamma_k h(x(eta+k)) + alpha_k gamma_{k+1} psi(x(eta+k)),
/// h(x) = phi2 (x + x(eta)) + phi1 - psi1 nabla x_1(eta) / 2.
Rational recurrence_b(const SLData& sl, const LatticePoint& eta, long k);

/// d_0..d_n with d_n = 1 for the expansion in w_k(x, eta).  `anchor` is q^eta
/// on q-lattices and eta itself on quadratic ones; sigma(x(eta)) must vanish.
/// Throws DegenerateError when some A_k or B_k with k < n vanishes.
std::vector<Rational> solve_dk(const SLData& sl, const Rational& anchor, long n);

/// sum d_k w_k(x, eta), made monic.
Polynomial build_solution(const SLData& sl, const Rational& anchor, long n);

/// Monic degree-n solution for phi = phi2 x^2 + phi0, psi = psi1 x, expanded
/// in the K_j basis.  The lattice must be q-quadratic with c3 = 0.
Polynomial solve_symmetric(const Lattice& lattice, const Rational& phi2, const Rational& phi0, const Rational& psi1,
                           long n);

/// Real rational roots with multiplicity, ascending.
std::vector<Rational> rational_roots(const Polynomial& p);

/// Tag and parameters from the zeros of sigma.
FamilyTag classify(const SLData& sl);

/// phi D^2 p + psi S D p + lambda p.
Polynomial sl_residual(const OperatorContext& ctx, const SLData& sl, const Rational& lambda, const Polynomial& p);
/// sl_residual with lambda = lambda_for(sl, n).
Polynomial verify_sl(const SLData& sl, long n, const Polynomial& p);
Polynomial verify_sl(const OperatorContext& ctx, const SLData& sl, long n, const Polynomial& p);

}  // namespace orthoq

#endif  // ORTHOQ_BOCHNER_HPP
