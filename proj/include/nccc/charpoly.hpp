#pragma once

#include "nccc/spectra.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nccc {

// gmpxx has no long long constructor; every value converted here fits a long.
inline mpz_class to_mpz(long long v) { return mpz_class(static_cast<long>(v)); }

/// Monic integer polynomial, coefficients stored ascending (coeffs[k] multiplies x^k).
struct CharPoly {
    std::vector<mpz_class> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    const mpz_class& leading() const { return coeffs.back(); }

    mpz_class eval(const mpz_class& x) const {
        mpz_class acc = 0;
        for (int k = degree(); k >= 0; --k) acc = acc * x + coeffs[k];
        return acc;
    }

    double eval_double(double x) const {
        double acc = 0;
        for (int k = degree(); k >= 0; --k) acc = acc * x + coeffs[k].get_d();
        return acc;
    }

    friend bool operator==(const CharPoly& a, const CharPoly& b) { return a.coeffs == b.coeffs; }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            const mpz_class& c = coeffs[k];
            if (c == 0 && degree() > 0) continue;
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << "-";
            first = false;
            const mpz_class mag = ::abs(c);
            if (k == 0 || mag != 1) os << mag.get_str();
            if (k > 0) os << "x";
            if (k > 1) os << "^" << k;
        }
        return os.str();
    }
};

/// Exact characteristic polynomial of an integer matrix via the Faddeev-LeVerrier
/// recurrence in arbitrary-precision arithmetic (every division is exact).
inline CharPoly char_poly_exact(const IntMatrix& m) {
    const int n = m.n;
    CharPoly p;
    p.coeffs.assign(static_cast<size_t>(n) + 1, 0);
    p.coeffs[n] = 1;
    if (n == 0) return p;
    std::vector<mpz_class> a(static_cast<size_t>(n) * n);
    for (size_t k = 0; k < a.size(); ++k) a[k] = to_mpz(m.a[k]);
    std::vector<mpz_class> cur(static_cast<size_t>(n) * n);  // M_{k-1}, starts as identity
    std::vector<mpz_class> next(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) cur[static_cast<size_t>(i) * n + i] = 1;
    for (int k = 1; k <= n; ++k) {
        // next = A * cur
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                mpz_class& acc = next[static_cast<size_t>(i) * n + j];
                acc = 0;
                for (int t = 0; t < n; ++t)
                    mpz_addmul(acc.get_mpz_t(), a[static_cast<size_t>(i) * n + t].get_mpz_t(),
                               cur[static_cast<size_t>(t) * n + j].get_mpz_t());
            }
        mpz_class trace = 0;
        for (int i = 0; i < n; ++i) trace += next[static_cast<size_t>(i) * n + i];
        mpz_class c;
        mpz_divexact_ui(c.get_mpz_t(), trace.get_mpz_t(), static_cast<unsigned long>(k));
        c = -c;
        p.coeffs[n - k] = c;
        std::swap(cur, next);
        for (int i = 0; i < n; ++i) cur[static_cast<size_t>(i) * n + i] += c;
    }
    return p;
}

struct IntegerRootSplit {
    bool fully_split = false;
    std::vector<std::pair<long long, int>> roots;  // (root, multiplicity), ascending
    CharPoly residual;                             // what is left after deflation (monic)
};

namespace detail {

// Knuth-style root bound for a monic integer polynomial:
// every root r satisfies |r| <= 2 * max_i |c_{n-i}|^{1/i}.
inline long long integer_root_bound(const std::vector<mpz_class>& coeffs) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    double bound = 0;
    for (int i = 1; i <= n; ++i) {
        const double mag = std::abs(coeffs[n - i].get_d());
        if (mag > 0) bound = std::max(bound, std::pow(mag, 1.0 / i));
    }
    return static_cast<long long>(std::ceil(2 * bound)) + 1;
}

// Divides poly by (x - r); requires p(r) == 0.
inline void deflate(std::vector<mpz_class>& coeffs, long long r) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    const long rl = static_cast<long>(r);
    std::vector<mpz_class> q(static_cast<size_t>(n));
    mpz_class carry = coeffs[n];
    for (int k = n - 1; k >= 0; --k) {
        q[k] = carry;
        carry = coeffs[k] + carry * rl;
    }
    coeffs = std::move(q);
}

}  // namespace detail

/// Repeatedly deflates by integer roots found among the divisors of the constant
/// term (and by 0 while the constant term vanishes); fully_split is true iff the
/// polynomial factors completely over the integers.
inline IntegerRootSplit integer_root_split(const CharPoly& p) {
    if (p.coeffs.empty() || p.leading() != 1)
        throw std::invalid_argument("integer_root_split: polynomial must be monic");
    IntegerRootSplit out;
    std::vector<mpz_class> c = p.coeffs;
    int zero_mult = 0;
    while (static_cast<int>(c.size()) > 1 && c[0] == 0) {
        c.erase(c.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) out.roots.emplace_back(0, zero_mult);
    const long long bound = detail::integer_root_bound(c);
    auto eval = [&](long long r) {
        const long rl = static_cast<long>(r);
        mpz_class acc = 0;
        for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) acc = acc * rl + c[k];
        return acc;
    };
    for (long long d = 1; d <= bound && static_cast<int>(c.size()) > 1; ++d) {
        if (!mpz_divisible_ui_p(c[0].get_mpz_t(), static_cast<unsigned long>(d))) continue;
        for (long long r : {d, -d}) {
            int mult = 0;
            while (static_cast<int>(c.size()) > 1 && eval(r) == 0) {
                detail::deflate(c, r);
                ++mult;
            }
            if (mult > 0) out.roots.emplace_back(r, mult);
        }
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.residual.coeffs = std::move(c);
    out.fully_split = out.residual.degree() == 0;
    return out;
}

// ---------------------------------------------------------------------------
// Small exact-polynomial construction helpers (used by the closed forms).
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<mpz_class> poly_one() { return {mpz_class(1)}; }

inline void poly_mul_inplace(std::vector<mpz_class>& p, const std::vector<mpz_class>& q) {
    std::vector<mpz_class> r(p.size() + q.size() - 1, mpz_class(0));
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < q.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), p[i].get_mpz_t(), q[j].get_mpz_t());
    p = std::move(r);
}

// p *= (x - root)^power
inline void poly_mul_linear_power(std::vector<mpz_class>& p, long long root, long long power) {
    const std::vector<mpz_class> lin = {to_mpz(-root), mpz_class(1)};
    for (long long k = 0; k < power; ++k) poly_mul_inplace(p, lin);
}

// p *= x^2 + bx + c
inline void poly_mul_quadratic(std::vector<mpz_class>& p, long long b, long long c) {
    const std::vector<mpz_class> quad = {to_mpz(c), to_mpz(b), mpz_class(1)};
    poly_mul_inplace(p, quad);
}

}  // namespace detail

}  // namespace nccc
