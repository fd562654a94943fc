#pragma once

#include "nccc/charpoly.hpp"
#include "nccc/graph.hpp"
#include "nccc/group.hpp"
#include "nccc/spectra.hpp"
#include "nccc/surd.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nccc {

/// Spectrum with exact (quadratic surd) values. Entries are merged on exact
/// equality and kept sorted by numeric value.
struct ExactSpectrum {
    std::vector<std::pair<Surd, long long>> pairs;

    void add(Surd value, long long multiplicity) {
        if (multiplicity < 0) throw std::invalid_argument("ExactSpectrum: negative multiplicity");
        if (multiplicity == 0) return;
        for (auto& [v, m] : pairs)
            if (v == value) {
                m += multiplicity;
                return;
            }
        pairs.emplace_back(std::move(value), multiplicity);
        std::sort(pairs.begin(), pairs.end(),
                  [](const auto& x, const auto& y) { return x.first.value() < y.first.value(); });
    }

    long long total_multiplicity() const {
        long long t = 0;
        for (auto& [v, m] : pairs) t += m;
        return t;
    }

    bool all_integral() const {
        for (auto& [v, m] : pairs)
            if (!v.is_integer()) return false;
        return true;
    }

    Spectrum to_spectrum() const {
        Spectrum s;
        s.exact = true;
        for (auto& [v, m] : pairs) s.pairs.emplace_back(v.value(), static_cast<int>(m));
        return s;
    }
};

/// Sum of |value| * multiplicity, exact.
inline Surd exact_energy(const ExactSpectrum& spec) {
    Surd e{0};
    for (auto& [v, m] : spec.pairs) e = e + Rational(m) * abs(v);
    return e;
}

/// Sum of |value - delta| * multiplicity, exact.
inline Surd exact_shifted_energy(const ExactSpectrum& spec, const Rational& delta) {
    Surd e{0};
    for (auto& [v, m] : spec.pairs) e = e + Rational(m) * abs(v - Surd(delta));
    return e;
}

/// Closed-form spectra and energies of one NCCC-graph instance, all exact.
struct ClosedFormResult {
    MultipartiteShape shape;
    ExactSpectrum spec_a, spec_l, spec_q;
    Surd energy, laplacian_energy, signless_energy;
    std::string case_tag;

    long long n_vertices() const { return shape.n_vertices(); }
    long long n_edges() const { return shape.n_edges(); }
};

// ---------------------------------------------------------------------------
// Characteristic polynomials of complete multipartite graphs K_{a1.p1, a2.p2}
// ---------------------------------------------------------------------------

struct CmPolys {
    CharPoly adjacency, laplacian, signless_laplacian;
};

/// Factored characteristic polynomials of A, L and Q for K_{a1.p1, a2.p2} on
/// n = a1*p1 + a2*p2 vertices, expanded to integer coefficients. a2 = p2 = 0
/// degenerates to the single-size graph K_{a1.p1}.
inline CmPolys cm_polys(long long a1, long long p1, long long a2, long long p2) {
    if (a1 < 1 || p1 < 1 || a2 < 0 || p2 < 0 || (a2 == 0) != (p2 == 0))
        throw std::invalid_argument("cm_polys: invalid block counts");
    using detail::poly_mul_linear_power;
    using detail::poly_mul_quadratic;
    using detail::poly_one;
    CmPolys out;
    if (a2 == 0) {
        const long long a = a1, b = p1;
        auto adj = poly_one();
        poly_mul_linear_power(adj, 0, a * (b - 1));
        poly_mul_linear_power(adj, -b, a - 1);
        poly_mul_linear_power(adj, b * (a - 1), 1);
        auto lap = poly_one();
        poly_mul_linear_power(lap, 0, 1);
        poly_mul_linear_power(lap, b * (a - 1), a * (b - 1));
        poly_mul_linear_power(lap, a * b, a - 1);
        auto sig = poly_one();
        poly_mul_linear_power(sig, b * (a - 1), a * (b - 1));
        poly_mul_linear_power(sig, b * (a - 2), a - 1);
        poly_mul_linear_power(sig, 2 * b * (a - 1), 1);
        out.adjacency.coeffs = std::move(adj);
        out.laplacian.coeffs = std::move(lap);
        out.signless_laplacian.coeffs = std::move(sig);
        return out;
    }
    const long long n = a1 * p1 + a2 * p2;
    const long long r = a1 + a2;
    auto adj = poly_one();
    poly_mul_linear_power(adj, 0, n - r);
    poly_mul_linear_power(adj, -p1, a1 - 1);
    poly_mul_linear_power(adj, -p2, a2 - 1);
    poly_mul_quadratic(adj, p1 * (1 - a1) + p2 * (1 - a2), p1 * p2 * (1 - a1 - a2));
    auto lap = poly_one();
    poly_mul_linear_power(lap, 0, 1);
    poly_mul_linear_power(lap, a1 * p1 + p2 * (a2 - 1), a2 * (p2 - 1));
    poly_mul_linear_power(lap, a2 * p2 + p1 * (a1 - 1), a1 * (p1 - 1));
    poly_mul_linear_power(lap, n, r - 1);
    auto sig = poly_one();
    poly_mul_linear_power(sig, n - p1, a1 * (p1 - 1));
    poly_mul_linear_power(sig, n - p2, a2 * (p2 - 1));
    poly_mul_linear_power(sig, n - 2 * p1, a1 - 1);
    poly_mul_linear_power(sig, n - 2 * p2, a2 - 1);
    poly_mul_quadratic(sig, -(2 * n + p1 * (a1 - 2) + p2 * (a2 - 2)),
                       n * n - 2 * n * (p1 + p2) + n * (a1 * p1 + a2 * p2) +
                           2 * p1 * p2 * (2 - a1 - a2));
    out.adjacency.coeffs = std::move(adj);
    out.laplacian.coeffs = std::move(lap);
    out.signless_laplacian.coeffs = std::move(sig);
    return out;
}

// ---------------------------------------------------------------------------
// Closed-form spectra for the two central-quotient shapes
// ---------------------------------------------------------------------------

/// G/Z(G) = Zp x Zp with |Z(G)| = z (p must divide z): the NCCC-graph is
/// K_{(p+1).n} with n = (p-1)z/p, and E = LE = SE = 2np.
inline ClosedFormResult spectra_pp_quotient(long long p, long long z) {
    if (!is_prime(p)) throw std::invalid_argument("spectra_pp_quotient: p must be prime");
    if (z < 1 || z % p != 0) throw std::invalid_argument("spectra_pp_quotient: p must divide z");
    const long long n = (p - 1) * z / p;
    ClosedFormResult r;
    r.shape = MultipartiteShape::of({{p + 1, n}});
    r.spec_a.add(0, (p + 1) * (n - 1));
    r.spec_a.add(-n, p);
    r.spec_a.add(n * p, 1);
    r.spec_l.add(0, 1);
    r.spec_l.add(n * p, (p + 1) * (n - 1));
    r.spec_l.add((p + 1) * n, p);
    r.spec_q.add(n * p, (p + 1) * (n - 1));
    r.spec_q.add(n * (p - 1), p);
    r.spec_q.add(2 * n * p, 1);
    r.energy = r.laplacian_energy = r.signless_energy = Surd(2 * n * p);
    r.case_tag = "ZpxZp quotient (p=" + std::to_string(p) + ", z=" + std::to_string(z) + ")";
    return r;
}

/// G/Z(G) = D_2m with |Z(G)| = z, m >= 2 (z even when m is even). Covers both
/// parities of m; for even m the SE expression changes branch at m = 2, where the
/// graph degenerates to K_{3.(z/2)} and SE = 2z.
inline ClosedFormResult spectra_d2m_quotient(long long m, long long z) {
    if (m < 2 || z < 1) throw std::invalid_argument("spectra_d2m_quotient: require m >= 2, z >= 1");
    ClosedFormResult r;
    if (m % 2 == 1) {
        r.shape = MultipartiteShape::of({{1, z}, {1, (m - 1) * z / 2}});
        r.spec_a.add(0, z * (m + 1) / 2 - 2);
        const Surd amp = Surd::make(0, Rational(z), (m - 1) / 2);
        r.spec_a.add(-amp, 1);
        r.spec_a.add(amp, 1);
        r.energy = Rational(2) * amp;
        r.spec_l.add(0, 1);
        r.spec_l.add(z, z * (m - 1) / 2 - 1);
        r.spec_l.add(z * (m - 1) / 2, z - 1);
        r.spec_l.add(z * (m + 1) / 2, 1);
        r.spec_q = r.spec_l;
        r.laplacian_energy = Surd(Rational(z * z * (m - 1) * (m - 3), m + 1) + Rational(2 * z));
        r.signless_energy = r.laplacian_energy;
        r.case_tag = "D2m quotient, m odd (m=" + std::to_string(m) + ", z=" + std::to_string(z) + ")";
        return r;
    }
    if (z % 2 != 0)
        throw std::invalid_argument("spectra_d2m_quotient: even m requires even z");
    r.shape = MultipartiteShape::of({{2, z / 2}, {1, (m - 1) * z / 2}});
    r.spec_a.add(0, z * (m + 1) / 2 - 3);
    r.spec_a.add(Surd(Rational(-z, 2)), 1);
    r.spec_a.add(Surd::make(Rational(z, 4), Rational(z, 4), 8 * m - 7), 1);
    r.spec_a.add(Surd::make(Rational(z, 4), Rational(-z, 4), 8 * m - 7), 1);
    r.energy = Surd::make(Rational(z, 2), Rational(z, 2), 8 * m - 7);
    r.spec_l.add(0, 1);
    r.spec_l.add(z, (m - 1) * z / 2 - 1);
    r.spec_l.add(z * m / 2, z - 2);
    r.spec_l.add(z * (m + 1) / 2, 2);
    r.laplacian_energy = Surd(Rational(z * z * (m - 1) * (m - 2), m + 1) + Rational(2 * z));
    r.spec_q.add(z, (m - 1) * z / 2 - 1);
    r.spec_q.add(z * m / 2, z - 2);
    r.spec_q.add(z * (m - 1) / 2, 1);
    r.spec_q.add(Surd::make(Rational(z * (m + 3), 4), Rational(z, 4), (m - 1) * (m + 7)), 1);
    r.spec_q.add(Surd::make(Rational(z * (m + 3), 4), Rational(-z, 4), (m - 1) * (m + 7)), 1);
    if (m == 2)
        r.signless_energy = Surd(2 * z);
    else
        r.signless_energy =
            Surd::make(Rational(z * z * (m - 1) * (m - 2), m + 1) - Rational(z * (m - 1), 2),
                       Rational(z, 2), (m - 1) * (m + 7));
    r.case_tag = "D2m quotient, m even (m=" + std::to_string(m) + ", z=" + std::to_string(z) + ")";
    return r;
}

/// Dispatches a family instance to its closed-form branch.
///
/// Branches: D2m splits on m odd / m even with m/2 odd / m even with m/2 even
/// (central quotients D_2m with z = 1 and D_{2*(m/2)} with z = 2); T4m has quotient
/// D_2m with z = 2; SD8m has quotient D_{2*(2m)} (z = 2) or D_2m (z = 4) for m even
/// resp. odd; U(n,m) behaves as D2m with x-order scaling (z = n or 2n); U6m is the
/// (m_q, z) = (3, m) case; V8m is handled from its own structure results
/// (K_{2.2, 1.(2m-2)} for even m, K_{2.1, 1.(2m-1)} for odd m); Heisenberg mod p
/// has quotient Zp x Zp with z = p.
inline ClosedFormResult family_closed_form(const FamilySpec& spec) {
    ClosedFormResult r;
    switch (spec.family) {
        case Family::dihedral: {
            if (spec.m % 2 == 1) {
                r = spectra_d2m_quotient(spec.m, 1);
                r.case_tag = "D2m: m odd";
            } else {
                r = spectra_d2m_quotient(spec.m / 2, 2);
                r.case_tag = (spec.m / 2) % 2 == 1 ? "D2m: m even, m/2 odd" : "D2m: m even, m/2 even";
            }
            return r;
        }
        case Family::dicyclic:
            r = spectra_d2m_quotient(spec.m, 2);
            r.case_tag = spec.m % 2 == 0 ? "T4m: m even" : "T4m: m odd";
            return r;
        case Family::semidihedral:
            if (spec.m % 2 == 0) {
                r = spectra_d2m_quotient(2 * spec.m, 2);
                r.case_tag = "SD8m: m even";
            } else {
                r = spectra_d2m_quotient(spec.m, 4);
                r.case_tag = "SD8m: m odd";
            }
            return r;
        case Family::umn:
            if (spec.m % 2 == 1) {
                r = spectra_d2m_quotient(spec.m, spec.n);
                r.case_tag = "U(n,m): m odd";
            } else {
                r = spectra_d2m_quotient(spec.m / 2, 2 * spec.n);
                r.case_tag =
                    (spec.m / 2) % 2 == 1 ? "U(n,m): m even, m/2 odd" : "U(n,m): m even, m/2 even";
            }
            return r;
        case Family::u6m:
            r = spectra_d2m_quotient(3, spec.m);
            r.case_tag = "U6m";
            return r;
        case Family::v8m:
            if (spec.m % 2 == 0) {
                r = spectra_d2m_quotient(spec.m, 4);
                r.case_tag = "V8m: m even";
            } else {
                r = spectra_d2m_quotient(2 * spec.m, 2);
                r.case_tag = "V8m: m odd";
            }
            return r;
        case Family::heisenberg:
            return spectra_pp_quotient(spec.p, spec.p);
        case Family::explicit_table:
            throw std::invalid_argument("family_closed_form: explicit tables have no closed form");
    }
    throw std::invalid_argument("family_closed_form: unknown family");
}

// ---------------------------------------------------------------------------
// Integrality
// ---------------------------------------------------------------------------

inline bool is_perfect_square(long long v) {
    if (v < 0) return false;
    long long r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(v))));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r * r == v;
}

/// Exact square tests of m^2+6m-7, m^2+12m-28 and 4m^2+12m-7. Over all positive m
/// the solution sets are {1,2}, {2,4,11} and {1}.
inline std::array<bool, 3> perfect_square_predicates(long long m) {
    if (m < 1) throw std::invalid_argument("perfect_square_predicates: require m >= 1");
    return {is_perfect_square(m * m + 6 * m - 7), is_perfect_square(m * m + 12 * m - 28),
            is_perfect_square(4 * m * m + 12 * m - 7)};
}

struct IntegralityFlags {
    bool integral = false;
    bool l_integral = false;
    bool q_integral = false;

    friend bool operator==(const IntegralityFlags& a, const IntegralityFlags& b) {
        return a.integral == b.integral && a.l_integral == b.l_integral &&
               a.q_integral == b.q_integral;
    }
};

/// Per-family integrality criteria. A-integrality reduces to one square test per
/// parity branch (odd m: (m-1)/2 square; m/2 odd: m-2 square; doubled-parameter
/// branches: 4m-7 / 8m-7 / 16m-7 square); every family here is L-integral; the
/// Q-integral exceptions ride on the square tests of m^2+6m-7 and friends.
inline IntegralityFlags integrality_predicates(const FamilySpec& spec) {
    IntegralityFlags f;
    f.l_integral = true;
    switch (spec.family) {
        case Family::dihedral:
            if (spec.m % 2 == 1) {
                f.integral = is_perfect_square((spec.m - 1) / 2);
                f.q_integral = true;
            } else if ((spec.m / 2) % 2 == 1) {
                f.integral = is_perfect_square(spec.m - 2);
                f.q_integral = true;
            } else {
                f.integral = is_perfect_square(4 * spec.m - 7);
                f.q_integral = spec.m == 4;
            }
            return f;
        case Family::dicyclic:
            if (spec.m % 2 == 1) {
                f.integral = is_perfect_square((spec.m - 1) / 2);
                f.q_integral = true;
            } else {
                f.integral = is_perfect_square(8 * spec.m - 7);
                f.q_integral = spec.m == 2;
            }
            return f;
        case Family::semidihedral:
            if (spec.m % 2 == 1) {
                f.integral = is_perfect_square((spec.m - 1) / 2);
                f.q_integral = true;
            } else {
                f.integral = is_perfect_square(16 * spec.m - 7);
                f.q_integral = false;
            }
            return f;
        case Family::umn:
            if (spec.m % 2 == 1) {
                f.integral = is_perfect_square((spec.m - 1) / 2);
                f.q_integral = true;
            } else if ((spec.m / 2) % 2 == 1) {
                f.integral = is_perfect_square(spec.m - 2);
                f.q_integral = true;
            } else {
                f.integral = is_perfect_square(4 * spec.m - 7);
                f.q_integral = spec.m == 4;
            }
            return f;
        case Family::u6m:
        case Family::heisenberg:
            f.integral = f.q_integral = true;
            return f;
        case Family::v8m:
            f.integral = spec.m % 2 == 0 ? is_perfect_square(8 * spec.m - 7)
                                         : is_perfect_square(16 * spec.m - 7);
            f.q_integral = spec.m == 2;
            return f;
        case Family::explicit_table:
            throw std::invalid_argument("integrality_predicates: no closed form for tables");
    }
    throw std::invalid_argument("integrality_predicates: unknown family");
}

// ---------------------------------------------------------------------------
// Energy classes (vs the complete graph on the same vertex count) and orderings
// ---------------------------------------------------------------------------

enum class EnergyClass { border, hyper, neither };

inline const char* to_string(EnergyClass c) {
    switch (c) {
        case EnergyClass::border: return "border";
        case EnergyClass::hyper: return "hyper";
        case EnergyClass::neither: return "neither";
    }
    return "?";
}

struct EnergyClassification {
    EnergyClass adjacency = EnergyClass::neither;
    EnergyClass laplacian = EnergyClass::neither;
    EnergyClass signless = EnergyClass::neither;

    friend bool operator==(const EnergyClassification& a, const EnergyClassification& b) {
        return a.adjacency == b.adjacency && a.laplacian == b.laplacian && a.signless == b.signless;
    }
};

/// Zp x Zp quotient: E = LE = SE = 2np vs 2(n(p+1)-1); border exactly when n = 1
/// (the graph is the complete graph K_{p+1}), below otherwise. Never hyper.
inline EnergyClassification pp_quotient_energy_classification(long long p, long long z) {
    if (!is_prime(p) || z < 1 || z % p != 0)
        throw std::invalid_argument("pp_quotient_energy_classification: p must divide z");
    const long long n = (p - 1) * z / p;
    const EnergyClass c = n == 1 ? EnergyClass::border : EnergyClass::neither;
    return {c, c, c};
}

/// D_2m quotient (m >= 3): borderenergetic in all three senses exactly at
/// (m, z) = (3, 1); never hyperenergetic; L-hyperenergetic except for
/// {m odd >= 5, z = 1}, {m = 3, z >= 2}, {(5,2)}, {(7,1)}; Q adds the (4,2)
/// exception. m = 2 routes to the Zp x Zp case (p = 2).
inline EnergyClassification d2m_quotient_energy_classification(long long m, long long z) {
    if (m == 2) return pp_quotient_energy_classification(2, z);
    if (m < 3 || z < 1)
        throw std::invalid_argument("d2m_quotient_energy_classification: require m >= 2, z >= 1");
    EnergyClassification c;
    const bool border = m == 3 && z == 1;
    c.adjacency = border ? EnergyClass::border : EnergyClass::neither;
    const bool not_hyper = (m % 2 == 1 && m >= 5 && z == 1) || (m == 3 && z >= 2) ||
                           (m == 5 && z == 2) || (m == 7 && z == 1);
    c.laplacian = border ? EnergyClass::border
                         : (not_hyper ? EnergyClass::neither : EnergyClass::hyper);
    c.signless = border ? EnergyClass::border
                        : (not_hyper || (m == 4 && z == 2) ? EnergyClass::neither
                                                           : EnergyClass::hyper);
    return c;
}

inline EnergyClassification energy_classification(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::dihedral:
            return spec.m % 2 == 1 ? d2m_quotient_energy_classification(spec.m, 1)
                                   : d2m_quotient_energy_classification(spec.m / 2, 2);
        case Family::dicyclic:
            return d2m_quotient_energy_classification(spec.m, 2);
        case Family::semidihedral:
            return spec.m % 2 == 0 ? d2m_quotient_energy_classification(2 * spec.m, 2)
                                   : d2m_quotient_energy_classification(spec.m, 4);
        case Family::umn:
            return spec.m % 2 == 1 ? d2m_quotient_energy_classification(spec.m, spec.n)
                                   : d2m_quotient_energy_classification(spec.m / 2, 2 * spec.n);
        case Family::u6m:
            return d2m_quotient_energy_classification(3, spec.m);
        case Family::v8m:
            // L- and Q-hyperenergetic except m = 2; never hyperenergetic (adjacency).
            if (spec.m == 2) return {};
            return {EnergyClass::neither, EnergyClass::hyper, EnergyClass::hyper};
        case Family::heisenberg:
            return pp_quotient_energy_classification(spec.p, spec.p);
        case Family::explicit_table:
            throw std::invalid_argument("energy_classification: no closed form for tables");
    }
    throw std::invalid_argument("energy_classification: unknown family");
}

enum class EnergyOrdering {
    all_equal,       // E = LE = SE
    e_lt_le_eq_se,   // E < LE = SE
    e_lt_se_lt_le,   // E < SE < LE
    other,
};

inline const char* to_string(EnergyOrdering o) {
    switch (o) {
        case EnergyOrdering::all_equal: return "E=LE=SE";
        case EnergyOrdering::e_lt_le_eq_se: return "E<LE=SE";
        case EnergyOrdering::e_lt_se_lt_le: return "E<SE<LE";
        case EnergyOrdering::other: return "other";
    }
    return "?";
}

/// Three-way energy comparison for D2m / T4m / SD8m / V8m. Equality holds exactly
/// for D6, D8, D12, T8, T12, SD24, V16.
inline EnergyOrdering energy_ordering(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::dihedral:
            if (spec.m == 3 || spec.m == 4 || spec.m == 6) return EnergyOrdering::all_equal;
            if (spec.m % 2 == 1) return EnergyOrdering::e_lt_le_eq_se;
            if ((spec.m / 2) % 2 == 1) return EnergyOrdering::e_lt_le_eq_se;  // m >= 10 here
            return EnergyOrdering::e_lt_se_lt_le;                             // m >= 8, m/2 even
        case Family::dicyclic:
            if (spec.m == 2 || spec.m == 3) return EnergyOrdering::all_equal;
            return spec.m % 2 == 1 ? EnergyOrdering::e_lt_le_eq_se : EnergyOrdering::e_lt_se_lt_le;
        case Family::semidihedral:
            if (spec.m == 3) return EnergyOrdering::all_equal;
            return spec.m % 2 == 1 ? EnergyOrdering::e_lt_le_eq_se : EnergyOrdering::e_lt_se_lt_le;
        case Family::v8m:
            return spec.m == 2 ? EnergyOrdering::all_equal : EnergyOrdering::e_lt_se_lt_le;
        default:
            throw std::invalid_argument("energy_ordering: family outside the comparison results");
    }
}

}  // namespace nccc
