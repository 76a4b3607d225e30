#ifndef ORTHOQ_TESTS_ORACLES_HPP
#define ORTHOQ_TESTS_ORACLES_HPP

// Reference polynomials from the terminating hypergeometric sums, built with
// plain coefficient vectors so they share no code with the library's solver.

#include <random>
#include <vector>

#include "orthoq/polynomial.hpp"

namespace oracle {

using orthoq::Rational;
using Coeffs = std::vector<Rational>;

inline Coeffs mul(const Coeffs& a, const Coeffs& b) {
    Coeffs out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline void add_scaled(Coeffs& acc, const Coeffs& term, const Rational& c) {
    if (acc.size() < term.size()) acc.resize(term.size());
    for (std::size_t i = 0; i < term.size(); ++i) acc[i] += c * term[i];
}

inline orthoq::Polynomial monic(Coeffs c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    const Rational lead = c.back();
    for (auto& v : c) v /= lead;
    return orthoq::Polynomial(c);
}

inline Rational rising(const Rational& a, long k) {
    Rational out = 1;
    for (long j = 0; j < k; ++j) out *= a + j;
    return out;
}

inline Rational qrising(const Rational& a, const Rational& q, long k) {
    Rational out = 1, qj = 1;
    for (long j = 0; j < k; ++j, qj *= q) out *= 1 - a * qj;
    return out;
}

inline Rational qpow(const Rational& q, long e) {
    Rational out = 1;
    for (long i = 0; i < (e < 0 ? -e : e); ++i) out *= q;
    return e < 0 ? Rational(1 / out) : out;
}

/// sum_k (-n)_k prod(top)_k / (k! prod(bottom)_k) prod_{j<k} (t + (a+j)^2),
/// monic in t = s^2.
inline orthoq::Polynomial quadratic_series(long n, const Rational& a, const std::vector<Rational>& top,
                                           const std::vector<Rational>& bottom) {
    Coeffs acc, block{Rational(1)};
    for (long k = 0; k <= n; ++k) {
        Rational c = rising(Rational(-n), k) / rising(Rational(1), k);
        for (const auto& v : top) c *= rising(v, k);
        for (const auto& v : bottom) c /= rising(v, k);
        add_scaled(acc, block, c);
        block = mul(block, {(a + k) * (a + k), Rational(1)});
    }
    return monic(acc);
}

/// Wilson W_n(s^2; a, b, c, d), monic in t.
inline orthoq::Polynomial wilson_t(long n, const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    return quadratic_series(n, a, {n + a + b + c + d - 1}, {a + b, a + c, a + d});
}

/// Continuous dual Hahn S_n(s^2; a, b, c), monic in t.
inline orthoq::Polynomial cdh_t(long n, const Rational& a, const Rational& b, const Rational& c) {
    return quadratic_series(n, a, {}, {a + b, a + c});
}

/// sum_k (q^-n;q)_k prod(top;q)_k q^k / ((q;q)_k prod(bottom;q)_k)
///   * prod_{j<k} (1 - 2 a q^j x + a^2 q^{2j}), monic in x = cos(theta).
inline orthoq::Polynomial q_series(long n, const Rational& q, const Rational& a, const std::vector<Rational>& top,
                                   const std::vector<Rational>& bottom) {
    Coeffs acc, block{Rational(1)};
    for (long k = 0; k <= n; ++k) {
        Rational c = qrising(qpow(q, -n), q, k) * qpow(q, k) / qrising(q, q, k);
        for (const auto& v : top) c *= qrising(v, q, k);
        for (const auto& v : bottom) c /= qrising(v, q, k);
        add_scaled(acc, block, c);
        const Rational aq = a * qpow(q, k);
        block = mul(block, {1 + aq * aq, -2 * aq});
    }
    return monic(acc);
}

inline orthoq::Polynomial askey_wilson_x(long n, const Rational& q, const Rational& a, const Rational& b,
                                         const Rational& c, const Rational& d) {
    return q_series(n, q, a, {a * b * c * d * qpow(q, n - 1)}, {a * b, a * c, a * d});
}

inline orthoq::Polynomial dual_q_hahn_x(long n, const Rational& q, const Rational& a, const Rational& b,
                                        const Rational& c) {
    return q_series(n, q, a, {}, {a * b, a * c});
}

inline orthoq::Polynomial al_salam_chihara_x(long n, const Rational& q, const Rational& a, const Rational& b) {
    return q_series(n, q, a, {}, {a * b, Rational(0)});
}

inline orthoq::Polynomial big_q_hermite_x(long n, const Rational& q, const Rational& a) {
    return q_series(n, q, a, {}, {Rational(0), Rational(0)});
}

/// Monic continuous q-Hermite from x h_n = h_{n+1} + (1 - q^n)/4 h_{n-1}.
inline orthoq::Polynomial q_hermite_x(long n, const Rational& q) {
    Coeffs prev, cur{Rational(1)};
    for (long m = 0; m < n; ++m) {
        Coeffs next(cur.size() + 1);
        for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
        add_scaled(next, prev, -(1 - qpow(q, m)) / 4);
        prev = cur;
        cur = next;
    }
    return orthoq::Polynomial(cur);
}

/// Small nonzero rationals num/den with |num| <= max_num, 1 <= den <= max_den.
class RationalSource {
public:
    explicit RationalSource(unsigned seed) : rng_(seed) {}

    Rational next(long max_num = 5, long max_den = 7, bool positive = false) {
        std::uniform_int_distribution<long> num(positive ? 1 : -max_num, max_num);
        std::uniform_int_distribution<long> den(1, max_den);
        long n = 0;
        while (n == 0) n = num(rng_);
        Rational r(n, den(rng_));
        r.canonicalize();
        return r;
    }

    orthoq::Polynomial polynomial(int degree) {
        std::vector<Rational> c;
        for (int i = 0; i <= degree; ++i) c.push_back(next(4, 5));
        return orthoq::Polynomial(c);
    }

private:
    std::mt19937 rng_;
};

}  // namespace oracle

#endif  // ORTHOQ_TESTS_ORACLES_HPP
