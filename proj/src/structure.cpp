#include "orthoq/structure.hpp"

#include <vector>

#include "orthoq/error.hpp"

namespace orthoq {

namespace {

bool quadratic_family(const FamilySpec& spec) { return !spec.lattice.is_q(); }

/// (-1)^j applied to every entry.
Window alternate(const Window& w) {
    Window out;
    for (const auto& [j, v] : w) out[j] = j % 2 == 0 ? v : Rational(-v);
    return out;
}

std::map<int, bool> compare(const Window& window, const std::array<Rational, 5>& closed) {
    std::map<int, bool> out;
    for (const auto& [j, v] : window) out[j] = v == closed[static_cast<std::size_t>(j + 2)];
    return out;
}

bool all_true(const std::map<int, bool>& m) {
    for (const auto& [j, ok] : m)
        if (!ok) return false;
    return true;
}

/// TTRR (a_n, b_n) for n = 0 .. n_max from an explicit sequence.
std::pair<Rational, Rational> recurrence_row(std::span<const Polynomial> seq, long n) {
    const auto basis = seq.first(static_cast<std::size_t>(n) + 2);
    const auto c = expand_in_sequence(Polynomial::monomial(1) * seq[static_cast<std::size_t>(n)], basis);
    return {c[static_cast<std::size_t>(n)], n > 0 ? c[static_cast<std::size_t>(n) - 1] : Rational(0)};
}

}  // namespace

Polynomial pi_poly(const SLData& sl) {
    const Polynomial phi = sl.phi();
    const Polynomial psi = sl.psi();
    return phi * phi - sl.lattice.u2() * psi * psi;
}

CoefficientReport first_structure(const FamilySpec& spec, long n) {
    if (n < 2) throw DomainError("first structure relation needs n >= 2");
    const auto seq = monic_sequence(spec, n + 2);
    const OperatorContext ctx(spec.lattice);
    const Polynomial target = pi_poly(sl_data_for(spec)) * apply_D_pow(ctx, seq[static_cast<std::size_t>(n)], 2);
    const auto c = expand_in_sequence(target, seq);

    CoefficientReport report;
    report.n = n;
    Polynomial carried;
    for (int j = -2; j <= 2; ++j) {
        const auto idx = static_cast<std::size_t>(n + j);
        report.window[j] = c[idx];
        carried += c[idx] * seq[idx];
    }
    report.residual = target - carried;

    if (quadratic_family(spec)) {
        report.window = alternate(report.window);
        report.t_variable = true;
    }
    if (spec.family == Family::Wilson) {
        const auto& v = spec.params;
        report.entry_match = compare(report.window, wilson_first_closed_form(n, v[0], v[1], v[2], v[3]));
        report.closed_form_match = all_true(report.entry_match);
    }
    return report;
}

std::array<Rational, 5> wilson_first_closed_form(long n, const Rational& a, const Rational& b, const Rational& c,
                                                 const Rational& d) {
    if (n < 2) return {};
    const Rational f = Rational(n * (n - 1));
    const Rational x1 = wilson_A(n, c, b, a, d + 1);
    const Rational x2 = wilson_A(n - 1, b, a, c + 1, d + 1);
    const Rational x3 = wilson_A(n - 2, a, b + 1, c + 1, d + 1);
    const Rational y2 = wilson_A(n - 2, b, a, c + 1, d + 1);
    const Rational z1 = wilson_A(n - 1, c, b, a, d + 1);
    const Rational z2 = wilson_A(n - 2, c, b, a, d + 1);

    const Rational top = f;
    const Rational up = f * (x1 + x2 + x3 + wilson_A(n + 1, d, b, c, a));
    const Rational mid = f * ((x1 + x2 + x3) * wilson_A(n, d, b, c, a) + (x2 + x3) * z1 + x3 * y2);
    const Rational down = f * (((x2 + x3) * z1 + x3 * y2) * wilson_A(n - 1, d, b, c, a) + x3 * y2 * z2);
    const Rational bottom = f * x3 * y2 * z2 * wilson_A(n - 2, d, b, c, a);
    return {bottom, down, mid, up, top};
}

CoefficientReport second_structure(const FamilySpec& spec, long n) {
    if (n < 2) throw DomainError("second structure relation needs n >= 2");
    const auto seq = monic_sequence(spec, n + 2);
    const OperatorContext ctx(spec.lattice);
    std::vector<Polynomial> basis;
    for (long m = 2; m <= n + 2; ++m) basis.push_back(apply_D_pow(ctx, seq[static_cast<std::size_t>(m)], 2));
    const Polynomial& target = seq[static_cast<std::size_t>(n)];
    const auto c = expand_in_sequence(target, basis);

    CoefficientReport report;
    report.n = n;
    Polynomial carried;
    for (int j = -2; j <= 2; ++j) {
        const long m = n + j;
        if (m < 2) continue;
        const auto idx = static_cast<std::size_t>(m - 2);
        report.window[j] = c[idx];
        carried += c[idx] * basis[idx];
    }
    report.residual = target - carried;

    if (quadratic_family(spec)) {
        report.window = alternate(report.window);
        report.t_variable = true;
    }
    const auto& v = spec.params;
    if (spec.family == Family::Wilson) {
        report.entry_match = compare(report.window, wilson_second_closed_form(n, v[0], v[1], v[2], v[3]));
        report.closed_form_match = all_true(report.entry_match);
    } else if (spec.family == Family::AskeyWilson) {
        report.entry_match =
            compare(report.window, aw_second_closed_form(n, v[0], v[1], v[2], v[3], spec.lattice.p()));
        report.closed_form_match = all_true(report.entry_match);
    }
    return report;
}

namespace {

/// Coefficients of the fully shifted family in the two-step lowering chain,
/// P_n = sum_m k_m S_{n-m}, m = 0..4, given the per-step parameters.
template <class Lower1, class Lower2>
std::array<Rational, 5> lowering_chain(long n, Lower1 e, Lower2 f) {
    // e(m) -> {first, second} for the first step, f(m) likewise for the second.
    const auto [e1, e2] = e(n);
    const auto [f1n, f2n] = f(n);
    const auto [f1m, f2m] = f(n - 1);
    const auto [f1k, f2k] = f(n - 2);
    return {Rational(1), Rational(e1 + f1n), Rational(f2n + e1 * f1m + e2), Rational(e1 * f2m + e2 * f1k),
            Rational(e2 * f2k)};
}

}  // namespace

std::array<Rational, 5> wilson_second_closed_form(long n, const Rational& a, const Rational& b, const Rational& c,
                                                  const Rational& d) {
    auto cw = [](long m, const Rational& p1, const Rational& p2, const Rational& p3, const Rational& p4) {
        return m <= 0 ? Rational(0) : wilson_C(m, p1, p2, p3, p4);
    };
    auto e = [&](long m) {
        return std::pair<Rational, Rational>{cw(m, b, a + 1, c, d) + cw(m, a, b, c, d),
                                             cw(m, a, b, c, d) * cw(m - 1, b, a + 1, c, d)};
    };
    auto f = [&](long m) {
        return std::pair<Rational, Rational>{cw(m, d, c + 1, a + 1, b + 1) + cw(m, c, d, a + 1, b + 1),
                                             cw(m, c, d, a + 1, b + 1) * cw(m - 1, d, c + 1, a + 1, b + 1)};
    };
    const auto k = lowering_chain(n, e, f);
    std::array<Rational, 5> out;
    for (int j = -2; j <= 2; ++j) {
        const long m = n + j;
        if (m < 2) continue;
        out[static_cast<std::size_t>(j + 2)] = k[static_cast<std::size_t>(2 - j)] / Rational(m * (m - 1));
    }
    return out;
}

std::array<Rational, 5> aw_second_closed_form(long n, const Rational& a, const Rational& b, const Rational& c,
                                              const Rational& d, const Rational& p, AwIndexing indexing) {
    const Rational q = p * p;
    auto ca = [&](long m, const Rational& p1, const Rational& p2, const Rational& p3, const Rational& p4) {
        return m <= 0 ? Rational(0) : aw_C(m, p1, p2, p3, p4, p);
    };
    auto e = [&](long m) {
        return std::pair<Rational, Rational>{ca(m, b, a * q, c, d) + ca(m, a, b, c, d),
                                             ca(m, a, b, c, d) * ca(m - 1, b, a * q, c, d)};
    };
    auto f = [&](long m) {
        return std::pair<Rational, Rational>{ca(m, d, c * q, a * q, b * q) + ca(m, c, d, a * q, b * q),
                                             ca(m, c, d, a * q, b * q) * ca(m - 1, d, c * q, a * q, b * q)};
    };
    const auto k = lowering_chain(n, e, f);
    static constexpr std::array<int, 5> kScale{1, -2, 4, -8, 16};

    const Lattice lat = Lattice::askey_wilson(p);
    auto gg = [&](long m) { return Rational(lat.gamma_n(m) * lat.gamma_n(m - 1)); };
    std::array<Rational, 5> out;
    for (int j = -2; j <= 2; ++j) {
        const long m = n + j;
        if (m < 2) continue;
        const int step = 2 - j;
        Rational factor;
        if (indexing == AwIndexing::Consistent) {
            factor = gg(m);
        } else {
            // Displayed factors for j = 2, 1, 0, -1, -2.
            static constexpr std::array<long, 5> kPrinted{2, 0, 1, 0, -1};
            factor = gg(n + kPrinted[static_cast<std::size_t>(step)]);
        }
        if (is_zero(factor)) continue;
        out[static_cast<std::size_t>(j + 2)] = k[static_cast<std::size_t>(step)] / (kScale[static_cast<std::size_t>(step)] * factor);
    }
    return out;
}

std::map<int, bool> aw_printed_entry_match(const FamilySpec& spec, const CoefficientReport& report) {
    if (spec.family != Family::AskeyWilson) throw DomainError("printed indexing applies to askey-wilson only");
    const auto& v = spec.params;
    return compare(report.window,
                   aw_second_closed_form(report.n, v[0], v[1], v[2], v[3], spec.lattice.p(), AwIndexing::AsPrinted));
}

Polynomial verify_m_operator(const FamilySpec& spec, long n) {
    if (n < 0) throw DomainError("degree must be non-negative");
    const auto seq = monic_sequence(spec, n + 1);
    const Lattice& lat = spec.lattice;
    const OperatorContext ctx(lat);
    const auto [b_n, c_n] = recurrence_row(seq, n);
    const Rational alpha = lat.alpha();
    const Rational beta = lat.beta();
    const Polynomial x = Polynomial::monomial(1);
    auto d2 = [&](long m) { return m < 0 ? Polynomial() : apply_D_pow(ctx, seq[static_cast<std::size_t>(m)], 2); };

    const Polynomial& p = seq[static_cast<std::size_t>(n)];
    const Polynomial lhs = apply_S(ctx, apply_M(ctx, p));
    const Polynomial bracket = Polynomial::constant(b_n - beta * (alpha + 1)) - alpha * alpha * x - lat.u1() +
                               alpha * alpha * lat.u2();
    const Polynomial rhs = p + d2(n + 1) / alpha + c_n / alpha * d2(n - 1) + bracket * d2(n) / alpha;
    return lhs - rhs;
}

Polynomial verify_m_operator_corrected(const FamilySpec& spec, long n) {
    if (n < 0) throw DomainError("degree must be non-negative");
    const auto seq = monic_sequence(spec, n + 1);
    const Lattice& lat = spec.lattice;
    const OperatorContext ctx(lat);
    const auto [a_n, b_n] = recurrence_row(seq, n);
    const Rational alpha = lat.alpha();
    const Rational beta = lat.beta();
    const Polynomial x = Polynomial::monomial(1);
    auto d2 = [&](long m) { return m < 0 ? Polynomial() : apply_D_pow(ctx, seq[static_cast<std::size_t>(m)], 2); };

    const Polynomial& p = seq[static_cast<std::size_t>(n)];
    const Polynomial lhs = apply_S(ctx, apply_M(ctx, p));
    const Polynomial half_u1 = lat.u1() / (2 * alpha);
    const Polynomial shift = (2 * alpha * alpha - 1) * x + Polynomial::constant(2 * beta * (alpha + 1) - a_n);
    const Polynomial rhs = p + half_u1 * (d2(n + 1) + b_n * d2(n - 1)) + (alpha * lat.u2() - half_u1 * shift) * d2(n);
    return lhs - rhs;
}

SurrogateReport derivative_ttrr_surrogate(const Lattice& lattice, std::span<const Polynomial> seq, long n) {
    if (n < 3) throw DomainError("derivative recurrence check needs n >= 3");
    if (seq.size() < static_cast<std::size_t>(n) + 2) throw DomainError("sequence too short");
    const OperatorContext ctx(lattice);
    std::vector<Polynomial> basis;
    for (long m = 2; m <= n + 1; ++m) basis.push_back(apply_D_pow(ctx, seq[static_cast<std::size_t>(m)], 2));
    const Polynomial target = Polynomial::monomial(1) * basis[static_cast<std::size_t>(n - 2)] / lattice.gamma_n(n);
    const auto c = expand_in_sequence(target, basis);

    SurrogateReport report;
    report.n = n;
    report.up = c[static_cast<std::size_t>(n - 1)];
    report.mid = c[static_cast<std::size_t>(n - 2)];
    report.down = c[static_cast<std::size_t>(n - 3)];
    for (long m = 2; m < n - 1; ++m) {
        const auto idx = static_cast<std::size_t>(m - 2);
        report.out_of_band += c[idx] * basis[idx];
    }
    report.leading_match =
        report.up == lattice.gamma_n(n - 1) / (lattice.gamma_n(n + 1) * lattice.gamma_n(n));
    return report;
}

SurrogateReport derivative_ttrr_surrogate(const FamilySpec& spec, long n) {
    const auto seq = monic_sequence(spec, n + 1);
    return derivative_ttrr_surrogate(spec.lattice, seq, n);
}

}  // namespace orthoq
