#include "orthoq/families.hpp"

#include <map>
#include <optional>

#include "orthoq/error.hpp"

namespace orthoq {

FamilySpec make_family(Family family, std::vector<Rational> params, const Rational& p) {
    if (params.size() != parameter_count(family)) {
        throw DomainError(std::string(family_name(family)) + " takes " + std::to_string(parameter_count(family)) +
                          " parameters, got " + std::to_string(params.size()));
    }
    Lattice lattice = is_q_family(family) ? Lattice::askey_wilson(p) : Lattice::wilson();
    return {family, std::move(params), std::move(lattice)};
}

FamilySpec with_params(const FamilySpec& spec, std::vector<Rational> params) {
    return {spec.family, std::move(params), spec.lattice};
}

namespace {

struct Symmetric {
    Rational e1, e2, e3, e4;
};

Symmetric elementary(std::vector<Rational> v) {
    v.resize(4);
    const Rational &a = v[0], &b = v[1], &c = v[2], &d = v[3];
    return {a + b + c + d, a * b + a * c + a * d + b * c + b * d + c * d,
            a * b * c + a * b * d + a * c * d + b * c * d, a * b * c * d};
}
}  // namespace

SLData sl_data_for(const FamilySpec& spec) {
    const Symmetric e = elementary(spec.params);
    const Lattice& lat = spec.lattice;
    switch (spec.family) {
        case Family::Wilson:
            return {1, e.e2, e.e4, e.e1, e.e3, lat};
        case Family::ContinuousDualHahn:
            return {0, e.e1, e.e3, 1, e.e2, lat};
        default: {
            const Rational& p = lat.p();
            const Rational q = lat.q();
            return {2 * (e.e4 + 1),
                    -(e.e3 + e.e1),
                    -e.e4 + e.e2 - 1,
                    4 * p * (e.e4 - 1) / (q - 1),
                    -2 * p * (e.e3 - e.e1) / (q - 1),
                    lat};
        }
    }
}

Polynomial monic_family(const FamilySpec& spec, long n) {
    if (n < 0) throw DomainError("degree must be non-negative");
    const SLData sl = sl_data_for(spec);
    if (spec.family == Family::ContinuousQHermite) return solve_symmetric(sl.lattice, sl.phi2, sl.phi0, sl.psi1, n);

    std::optional<DegenerateError> first_failure;
    for (const auto& anchor : spec.params) {
        if (is_zero(anchor) && spec.lattice.is_q()) continue;
        try {
            return build_solution(sl, anchor, n);
        } catch (const DegenerateError& err) {
            if (!first_failure) first_failure = err;
        }
    }
    if (first_failure) throw *first_failure;
    throw DomainError("no admissible anchor among the parameters");
}

std::vector<Polynomial> monic_sequence(const FamilySpec& spec, long n_max) {
    std::vector<Polynomial> out;
    for (long n = 0; n <= n_max; ++n) out.push_back(monic_family(spec, n));
    return out;
}

Polynomial to_t_variable(const Polynomial& p) {
    Polynomial r = p.reflected();
    return p.degree() % 2 == 0 ? r : -r;
}

Rational wilson_A(long n, const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    const Rational sum = a + b + c + d;
    const Rational den = (sum + 2 * n - 1) * (sum + 2 * n);
    if (is_zero(den)) throw DegenerateError("degenerate parameter sum in A_" + std::to_string(n));
    return (sum + n - 1) * (a + b + n) * (a + c + n) * (a + d + n) / den;
}

Rational wilson_C(long n, const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    if (n == 0) return 0;
    const Rational sum = a + b + c + d;
    const Rational den = (sum + 2 * n - 2) * (sum + 2 * n - 1);
    if (is_zero(den)) throw DegenerateError("degenerate parameter sum in C_" + std::to_string(n));
    return Rational(n) * (b + c + n - 1) * (b + d + n - 1) * (c + d + n - 1) / den;
}

Rational aw_C(long n, const Rational& a, const Rational& b, const Rational& c, const Rational& d, const Rational& p) {
    if (n == 0) return 0;
    const Rational q = p * p;
    const Rational abcd = a * b * c * d;
    const Rational den = (1 - abcd * pow(q, 2 * n - 2)) * (1 - abcd * pow(q, 2 * n - 1));
    if (is_zero(den)) throw DegenerateError("degenerate parameter product in C_" + std::to_string(n));
    const Rational qn1 = pow(q, n - 1);
    return a * (1 - pow(q, n)) * (1 - b * c * qn1) * (1 - b * d * qn1) * (1 - d * c * qn1) / den;
}

std::pair<Rational, Rational> wilson_ttrr_closed_form(long n, const Rational& a, const Rational& b, const Rational& c,
                                                      const Rational& d) {
    Rational down = n == 0 ? Rational(0) : Rational(wilson_C(n, a, b, c, d) * wilson_A(n - 1, a, b, c, d));
    return {wilson_A(n, a, b, c, d) + wilson_C(n, a, b, c, d) - a * a, down};
}

std::vector<TtrrRow> ttrr_coeffs(const FamilySpec& spec, long n_max) {
    const auto seq = monic_sequence(spec, n_max + 1);
    const Polynomial x = Polynomial::monomial(1);
    std::vector<TtrrRow> rows;
    for (long n = 0; n <= n_max; ++n) {
        const auto basis = std::span<const Polynomial>(seq).first(static_cast<std::size_t>(n) + 2);
        const auto c = expand_in_sequence(x * seq[static_cast<std::size_t>(n)], basis);
        for (long j = 0; j + 1 < n; ++j) {
            if (!is_zero(c[static_cast<std::size_t>(j)])) throw Error("sequence is not orthogonal-style");
        }
        if (c[static_cast<std::size_t>(n) + 1] != 1) throw Error("sequence is not orthogonal-style");
        TtrrRow row{n, c[static_cast<std::size_t>(n)], n > 0 ? c[static_cast<std::size_t>(n) - 1] : Rational(0), {}};
        if (spec.family == Family::Wilson) {
            const auto& v = spec.params;
            const auto [a_t, b_t] = wilson_ttrr_closed_form(n, v[0], v[1], v[2], v[3]);
            row.closed_form_match = row.a == -a_t && row.b == b_t;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

using Params = std::vector<Rational>;

/// Members of one family under varying parameters, memoized by parameter list.
class FamilyCache {
public:
    FamilyCache(const FamilySpec& spec, long n_max) : spec_(spec), n_max_(n_max) {}

    const Polynomial& get(const Params& params, long n) {
        auto it = cache_.find(params);
        if (it == cache_.end()) it = cache_.emplace(params, monic_sequence(with_params(spec_, params), n_max_)).first;
        return it->second.at(static_cast<std::size_t>(n));
    }

private:
    FamilySpec spec_;
    long n_max_;
    std::map<Params, std::vector<Polynomial>> cache_;
};

std::vector<IdentityResult> wilson_contiguous(const FamilySpec& spec, long n_max) {
    const Rational &a = spec.params[0], &b = spec.params[1], &c = spec.params[2], &d = spec.params[3];
    FamilyCache cache(spec, n_max + 1);
    // Wilson members in the s^2 variable t.
    auto w = [&](const Params& params, long n) -> Polynomial {
        if (n < 0) return {};
        return to_t_variable(cache.get(params, n));
    };
    auto t_plus = [](const Rational& r) { return Polynomial({r * r, Rational(1)}); };
    const Params base{a, b, c, d};
    const OperatorContext ctx(spec.lattice);

    std::vector<IdentityResult> out;
    for (long n = 0; n <= n_max; ++n) {
        out.push_back({"wilson-raise-a", n,
                       t_plus(a) * w({a + 1, b, c, d}, n) - w(base, n + 1) - wilson_A(n, a, b, c, d) * w(base, n)});
        out.push_back({"wilson-raise-b", n,
                       t_plus(b) * w({a, b + 1, c, d}, n) - w(base, n + 1) - wilson_A(n, b, a, c, d) * w(base, n)});
        out.push_back({"wilson-raise-c", n,
                       t_plus(c) * w({a, b, c + 1, d}, n) - w(base, n + 1) - wilson_A(n, c, b, a, d) * w(base, n)});
        out.push_back({"wilson-raise-d", n,
                       t_plus(d) * w({a, b, c, d + 1}, n) - w(base, n + 1) - wilson_A(n, d, b, c, a) * w(base, n)});
        out.push_back({"wilson-lower-a", n,
                       w(base, n) - w({a + 1, b, c, d}, n) - wilson_C(n, a, b, c, d) * w({a + 1, b, c, d}, n - 1)});
        out.push_back({"wilson-lower-ab", n,
                       w({a + 1, b, c, d}, n) - w({a + 1, b + 1, c, d}, n) -
                           wilson_C(n, b, a + 1, c, d) * w({a + 1, b + 1, c, d}, n - 1)});
        for (long k = 1; k <= 2 && k <= n; ++k) {
            const Rational h = make_rational(k, 2);
            const Polynomial lhs = apply_D_pow(ctx, w(base, n).reflected(), k);
            const Polynomial rhs = pochhammer(Rational(-n), k) * w({a + h, b + h, c + h, d + h}, n - k).reflected();
            out.push_back({"wilson-derivative-k" + std::to_string(k), n, lhs - rhs});
        }
    }
    return out;
}

std::vector<IdentityResult> aw_contiguous(const FamilySpec& spec, long n_max) {
    const Rational &a = spec.params[0], &b = spec.params[1], &c = spec.params[2], &d = spec.params[3];
    const Lattice& lat = spec.lattice;
    const Rational& p = lat.p();
    const Rational q = lat.q();
    FamilyCache cache(spec, n_max);
    auto aw = [&](const Params& params, long n) -> Polynomial {
        if (n < 0) return {};
        return cache.get(params, n);
    };
    const Params base{a, b, c, d};
    const OperatorContext ctx(lat);

    std::vector<IdentityResult> out;
    for (long n = 0; n <= n_max; ++n) {
        out.push_back({"aw-lower-a", n,
                       aw(base, n) - aw({a * q, b, c, d}, n) +
                           aw_C(n, a, b, c, d, p) / 2 * aw({a * q, b, c, d}, n - 1)});
        out.push_back({"aw-lower-ab", n,
                       aw({a * q, b, c, d}, n) - aw({a * q, b * q, c, d}, n) +
                           aw_C(n, b, a * q, c, d, p) / 2 * aw({a * q, b * q, c, d}, n - 1)});
        for (long k = 1; k <= 2 && k <= n; ++k) {
            const Rational s = pow(p, k);
            Rational factor = 1;
            for (long i = 0; i < k; ++i) factor *= lat.gamma_n(n - i);
            const Polynomial lhs = apply_D_pow(ctx, aw(base, n), k);
            const Polynomial rhs = factor * aw({a * s, b * s, c * s, d * s}, n - k);
            out.push_back({"aw-derivative-k" + std::to_string(k), n, lhs - rhs});
        }
    }
    return out;
}

}  // namespace

std::vector<IdentityResult> verify_contiguous(const FamilySpec& spec, long n_max) {
    if (n_max < 0) throw DomainError("n_max must be non-negative");
    if (spec.family == Family::Wilson) return wilson_contiguous(spec, n_max);
    if (spec.family == Family::AskeyWilson) return aw_contiguous(spec, n_max);
    throw DomainError("contiguous relations are available for wilson and askey-wilson only");
}

}  // namespace orthoq
