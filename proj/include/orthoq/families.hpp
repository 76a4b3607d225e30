#ifndef ORTHOQ_FAMILIES_HPP
#define ORTHOQ_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "orthoq/bochner.hpp"

namespace orthoq {

/// A family with its parameters on its normal-form lattice: the Askey-Wilson
/// variable for the q-families, x(z) = z^2 for Wilson and continuous dual Hahn.
struct FamilySpec {
    Family family;
    std::vector<Rational> params;
    Lattice lattice;
};

/// Checks the parameter count and builds the lattice; `p` is ignored for the
/// quadratic families.
FamilySpec make_family(Family family, std::vector<Rational> params, const Rational& p = Rational(1, 2));

/// Same family on the same lattice with different parameters.
FamilySpec with_params(const FamilySpec& spec, std::vector<Rational> params);

SLData sl_data_for(const FamilySpec& spec);

/// Monic degree-n member in the lattice variable x.  Wilson and continuous
/// dual Hahn come out as (-1)^n P_n(-x), so the Sturm-Liouville data applies
/// as is; use to_t_variable for the usual s^2 form.
Polynomial monic_family(const FamilySpec& spec, long n);

/// P_0 .. P_{n_max}.
std::vector<Polynomial> monic_sequence(const FamilySpec& spec, long n_max);

/// (-1)^deg p(-x).  An involution, so it also maps back.
Polynomial to_t_variable(const Polynomial& p);

Rational wilson_A(long n, const Rational& a, const Rational& b, const Rational& c, const Rational& d);
Rational wilson_C(long n, const Rational& a, const Rational& b, const Rational& c, const Rational& d);
Rational aw_C(long n, const Rational& a, const Rational& b, const Rational& c, const Rational& d, const Rational& p);

/// x P_n = P_{n+1} + a_n P_n + b_n P_{n-1}.
struct TtrrRow {
    long n;
    Rational a;
    Rational b;
    /// Wilson only: agreement with A_n + C_n - a^2 and C_n A_{n-1}.
    std::optional<bool> closed_form_match;
};

/// Wilson recurrence in the s^2 variable, (A_n + C_n - a^2, C_n A_{n-1}).
std::pair<Rational, Rational> wilson_ttrr_closed_form(long n, const Rational& a, const Rational& b, const Rational& c,
                                                      const Rational& d);

/// Rows n = 0 .. n_max, read off by expanding x P_n.
std::vector<TtrrRow> ttrr_coeffs(const FamilySpec& spec, long n_max);

struct IdentityResult {
    std::string identity;
    long n;
    Polynomial residual;

    bool ok() const { return residual.is_zero(); }
};

/// Parameter-raising, lowering and derivative-shift relations for Wilson and
/// Askey-Wilson, n <= n_max.
std::vector<IdentityResult> verify_contiguous(const FamilySpec& spec, long n_max);

}  // namespace orthoq

#endif  // ORTHOQ_FAMILIES_HPP
