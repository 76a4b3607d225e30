#ifndef ORTHOQ_STRUCTURE_HPP
#define ORTHOQ_STRUCTURE_HPP

#include <array>
#include <map>
#include <optional>
#include <span>

#include "orthoq/families.hpp"

namespace orthoq {

/// Five-term window keyed by offset j in -2..2.  Offsets whose basis element
/// vanishes (negative degree, or D^2 of a polynomial of degree < 2) are absent.
using Window = std::map<int, Rational>;

struct CoefficientReport {
    long n = 0;
    Window window;
    /// Part of the target not carried by the window; zero when the relation holds.
    Polynomial residual;
    /// Closed-form agreement where a closed form exists.
    std::optional<bool> closed_form_match;
    /// Per-offset agreement, same keys as window.
    std::map<int, bool> entry_match;
    /// True when the window is stated for the s^2 variable (Wilson, continuous
    /// dual Hahn); the x-variable window differs by (-1)^j.
    bool t_variable = false;

    bool residual_zero() const { return residual.is_zero(); }
};

/// pi = phi^2 - U2 psi^2.
Polynomial pi_poly(const SLData& sl);

/// pi D^2 P_n expanded in P_0 .. P_{n+2}; n >= 2.
CoefficientReport first_structure(const FamilySpec& spec, long n);

/// Closed-form a_{n,n+j}, index j + 2, in the s^2 variable.
std::array<Rational, 5> wilson_first_closed_form(long n, const Rational& a, const Rational& b, const Rational& c,
                                                 const Rational& d);

/// P_n expanded in D^2 P_2 .. D^2 P_{n+2}; n >= 2.
CoefficientReport second_structure(const FamilySpec& spec, long n);

/// Closed-form b_{n,n+j}, index j + 2, in the s^2 variable.  Entries with
/// n + j < 2 are zero.
std::array<Rational, 5> wilson_second_closed_form(long n, const Rational& a, const Rational& b, const Rational& c,
                                                  const Rational& d);

/// Left-hand gamma factors of the Askey-Wilson second-structure rows, either
/// as displayed in the literature or as gamma_{n+j} gamma_{n+j-1} throughout.
enum class AwIndexing { AsPrinted, Consistent };

/// Closed-form b_{n,n+j}, index j + 2.
std::array<Rational, 5> aw_second_closed_form(long n, const Rational& a, const Rational& b, const Rational& c,
                                              const Rational& d, const Rational& p,
                                              AwIndexing indexing = AwIndexing::Consistent);

/// Per-offset comparison of the expansion window against the printed gamma
/// indexing; the Consistent indexing is what second_structure reports.
std::map<int, bool> aw_printed_entry_match(const FamilySpec& spec, const CoefficientReport& report);

/// S M P_n - [P_n + D^2 P_{n+1}/alpha + c_n D^2 P_{n-1}/alpha
///   + (b_n - alpha^2 x - beta(alpha+1) - U1 + alpha^2 U2) D^2 P_n / alpha],
/// with x P_n = P_{n+1} + b_n P_n + c_n P_{n-1}.
Polynomial verify_m_operator(const FamilySpec& spec, long n);

/// S M P_n - [P_n + (U1/(2 alpha)) (D^2 P_{n+1} + b_n D^2 P_{n-1})
///   + (alpha U2 - (U1/(2 alpha)) ((2 alpha^2 - 1) x + 2 beta (alpha+1) - a_n)) D^2 P_n],
/// with x P_n = P_{n+1} + a_n P_n + b_n P_{n-1}.
Polynomial verify_m_operator_corrected(const FamilySpec& spec, long n);

struct SurrogateReport {
    long n = 0;
    Rational up, mid, down;
    Polynomial out_of_band;
    bool leading_match = false;

    bool ok() const { return out_of_band.is_zero() && leading_match && !is_zero(down); }
};

/// x D^2 P_n / gamma_n expanded in D^2 P_2 .. D^2 P_{n+1}; n >= 3.
SurrogateReport derivative_ttrr_surrogate(const FamilySpec& spec, long n);
/// Same for an arbitrary sequence with seq[m] of degree m, m = 0 .. n + 1.
SurrogateReport derivative_ttrr_surrogate(const Lattice& lattice, std::span<const Polynomial> seq, long n);

}  // namespace orthoq

#endif  // ORTHOQ_STRUCTURE_HPP
