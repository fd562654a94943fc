#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <memory>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nccc {

enum class Family {
    dihedral,      // D_{2m} = <x,y | x^m = y^2 = 1, yxy^-1 = x^-1>, m >= 3
    dicyclic,      // T_{4m} = <x,y | x^{2m} = 1, x^m = y^2, y^-1xy = x^-1>, m >= 2
    semidihedral,  // SD_{8m} = <x,y | x^{4m} = y^2 = 1, yxy = x^{2m-1}>, m >= 2
    umn,           // U_{(n,m)} = <x,y | x^{2n} = y^m = 1, x^-1yx = y^-1>, n >= 2, m >= 3
    u6m,           // U_{6m} = <x,y | x^{2m} = y^3 = 1, x^-1yx = y^-1>, m >= 2
    v8m,           // V_{8m} = <x,y | x^{2m} = y^4 = 1, yx = x^-1y^-1, y^-1x = x^-1y>, m >= 2
    heisenberg,    // upper unitriangular 3x3 matrices over Z_p, p prime
    explicit_table,
};

inline const char* family_name(Family f) {
    switch (f) {
        case Family::dihedral: return "d2m";
        case Family::dicyclic: return "t4m";
        case Family::semidihedral: return "sd8m";
        case Family::umn: return "umn";
        case Family::u6m: return "u6m";
        case Family::v8m: return "v8m";
        case Family::heisenberg: return "heis";
        case Family::explicit_table: return "table";
    }
    return "?";
}

struct ExplicitTableData {
    std::vector<std::vector<int>> table;
    std::vector<std::string> labels;  // optional; generated when empty
};

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

/// Group family plus parameters. Parameter bounds are enforced by the named
/// constructors, so a FamilySpec in hand is always buildable.
struct FamilySpec {
    Family family = Family::dihedral;
    long long m = 0;  // dihedral/dicyclic/semidihedral/umn/u6m/v8m
    long long n = 0;  // umn only
    long long p = 0;  // heisenberg only
    std::shared_ptr<const ExplicitTableData> table;

    static FamilySpec dihedral(long long m) {
        if (m < 3) throw std::invalid_argument("dihedral: require m >= 3");
        return {Family::dihedral, m, 0, 0, nullptr};
    }
    static FamilySpec dicyclic(long long m) {
        if (m < 2) throw std::invalid_argument("dicyclic: require m >= 2");
        return {Family::dicyclic, m, 0, 0, nullptr};
    }
    static FamilySpec semidihedral(long long m) {
        if (m < 2) throw std::invalid_argument("semidihedral: require m >= 2");
        return {Family::semidihedral, m, 0, 0, nullptr};
    }
    static FamilySpec umn(long long n, long long m) {
        if (n < 2 || m < 3) throw std::invalid_argument("umn: require n >= 2 and m >= 3");
        return {Family::umn, m, n, 0, nullptr};
    }
    static FamilySpec u6m(long long m) {
        if (m < 2) throw std::invalid_argument("u6m: require m >= 2");
        return {Family::u6m, m, 0, 0, nullptr};
    }
    static FamilySpec v8m(long long m) {
        if (m < 2) throw std::invalid_argument("v8m: require m >= 2");
        return {Family::v8m, m, 0, 0, nullptr};
    }
    static FamilySpec heisenberg(long long p) {
        if (!is_prime(p)) throw std::invalid_argument("heisenberg: p must be prime");
        return {Family::heisenberg, 0, 0, p, nullptr};
    }
    static FamilySpec from_table(ExplicitTableData data) {
        auto shared = std::make_shared<const ExplicitTableData>(std::move(data));
        return {Family::explicit_table, 0, 0, 0, std::move(shared)};
    }

    long long expected_order() const {
        switch (family) {
            case Family::dihedral: return 2 * m;
            case Family::dicyclic: return 4 * m;
            case Family::semidihedral: return 8 * m;
            case Family::umn: return 2 * n * m;
            case Family::u6m: return 6 * m;
            case Family::v8m: return 8 * m;
            case Family::heisenberg: return p * p * p;
            case Family::explicit_table: return static_cast<long long>(table->table.size());
        }
        return 0;
    }

    std::string name() const {
        std::string s = family_name(family);
        switch (family) {
            case Family::umn: return s + "(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")";
            case Family::heisenberg: return s + "(p=" + std::to_string(p) + ")";
            case Family::explicit_table: return s + "(order=" + std::to_string(expected_order()) + ")";
            default: return s + "(m=" + std::to_string(m) + ")";
        }
    }
};

namespace detail {

// Validates a candidate multiplication table: totality/range, identity at index 0,
// Latin-square rows and columns, two-sided inverses, associativity. Associativity is
// exhaustive up to order 512 and sampled (>= 1e6 fixed-seed triples) above that.
inline void validate_group_table(const std::vector<int>& op, int n, const char* what) {
    auto fail = [&](const std::string& msg) {
        throw std::runtime_error(std::string(what) + ": " + msg);
    };
    if (n <= 0 || static_cast<long long>(op.size()) != static_cast<long long>(n) * n)
        fail("table is not order x order");
    for (int v : op)
        if (v < 0 || v >= n) fail("entry out of range (not closed)");
    for (int k = 0; k < n; ++k)
        if (op[static_cast<size_t>(0) * n + k] != k || op[static_cast<size_t>(k) * n + 0] != k)
            fail("identity is not element 0");
    std::vector<char> seen(n);
    for (int i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j) seen[op[static_cast<size_t>(i) * n + j]] = 1;
        if (std::find(seen.begin(), seen.end(), 0) != seen.end()) fail("row is not a permutation");
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j) seen[op[static_cast<size_t>(j) * n + i]] = 1;
        if (std::find(seen.begin(), seen.end(), 0) != seen.end()) fail("column is not a permutation");
    }
    auto mul = [&](int a, int b) { return op[static_cast<size_t>(a) * n + b]; };
    for (int g = 0; g < n; ++g) {
        bool has_inverse = false;
        for (int h = 0; h < n; ++h)
            if (mul(g, h) == 0 && mul(h, g) == 0) { has_inverse = true; break; }
        if (!has_inverse) fail("element without two-sided inverse");
    }
    if (n <= 512) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const int ab = mul(a, b);
                for (int c = 0; c < n; ++c)
                    if (mul(ab, c) != mul(a, mul(b, c))) fail("associativity fails");
            }
    } else {
        std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (long long t = 0; t < 1'000'000; ++t) {
            const int a = pick(rng), b = pick(rng), c = pick(rng);
            if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("associativity fails (sampled)");
        }
    }
}

inline std::string power_label(const char* gen, long long e) {
    if (e == 0) return "";
    if (e == 1) return gen;
    return std::string(gen) + "^" + std::to_string(e);
}

inline std::string xy_label(long long i, long long j) {
    std::string xs = power_label("x", i);
    std::string ys = power_label("y", j);
    if (xs.empty() && ys.empty()) return "e";
    if (xs.empty()) return ys;
    if (ys.empty()) return xs;
    return xs + " " + ys;
}

}  // namespace detail

/// Finite group of order n realized as an explicit multiplication table over element
/// indices 0..n-1, with index 0 the identity. Immutable after construction and safe
/// to share across threads. The constructor re-validates the group axioms, so a wrong
/// family reduction rule cannot produce a silently broken group.
class FiniteGroup {
  public:
    static constexpr int identity = 0;

    FiniteGroup(std::vector<int> op_table, std::vector<std::string> labels,
                const char* what = "group table")
        : order_(static_cast<int>(labels.size())), op_(std::move(op_table)), labels_(std::move(labels)) {
        detail::validate_group_table(op_, order_, what);
        inv_.assign(order_, 0);
        for (int g = 0; g < order_; ++g)
            for (int h = 0; h < order_; ++h)
                if (op(g, h) == identity) { inv_[g] = h; break; }
    }

    int order() const { return order_; }
    int op(int a, int b) const { return op_[static_cast<size_t>(a) * order_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int conjugate(int g, int by) const { return op(op(by, g), inv(by)); }
    const std::string& label(int a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }

    int element_order(int g) const {
        int k = 1;
        int x = g;
        while (x != identity) { x = op(x, g); ++k; }
        return k;
    }

  private:
    int order_;
    std::vector<int> op_;
    std::vector<int> inv_;
    std::vector<std::string> labels_;
};

inline bool commutes(const FiniteGroup& g, int a, int b) { return g.op(a, b) == g.op(b, a); }

/// Elements commuting with everything, as a sorted index list.
inline std::vector<int> center(const FiniteGroup& g) {
    std::vector<int> z;
    for (int a = 0; a < g.order(); ++a) {
        bool central = true;
        for (int b = 0; b < g.order() && central; ++b) central = commutes(g, a, b);
        if (central) z.push_back(a);
    }
    return z;
}

struct ConjugacyPartition {
    std::vector<std::vector<int>> classes;  // sorted by minimal element; members sorted
    std::vector<int> representative;        // first member of each class
    std::vector<int> central_classes;       // indices of singleton classes with central member
};

/// Orbit partition of the group under conjugation, in a deterministic order
/// (classes sorted by minimal element index).
inline ConjugacyPartition conjugacy_classes(const FiniteGroup& g) {
    ConjugacyPartition part;
    const std::vector<int> z = center(g);
    std::vector<char> visited(g.order(), 0);
    for (int a = 0; a < g.order(); ++a) {
        if (visited[a]) continue;
        std::set<int> orbit;
        for (int h = 0; h < g.order(); ++h) orbit.insert(g.conjugate(a, h));
        std::vector<int> cls(orbit.begin(), orbit.end());
        for (int e : cls) visited[e] = 1;
        const int idx = static_cast<int>(part.classes.size());
        part.representative.push_back(cls.front());
        if (cls.size() == 1 && std::binary_search(z.begin(), z.end(), cls.front()))
            part.central_classes.push_back(idx);
        part.classes.push_back(std::move(cls));
    }
    return part;
}

// ---------------------------------------------------------------------------
// Family constructions. Each family is realized on normal forms x^i y^j (indexed
// lexicographically in (i, j)) with the reduction rule read off its presentation;
// correctness is enforced by the table validation above, not assumed.
// ---------------------------------------------------------------------------

namespace detail {

template <typename Compose>
FiniteGroup build_two_generator(long long x_range, long long y_range, Compose&& compose,
                                const char* what) {
    const long long n = x_range * y_range;
    std::vector<int> op(static_cast<size_t>(n) * n);
    std::vector<std::string> labels(static_cast<size_t>(n));
    auto index = [&](long long i, long long j) { return static_cast<int>(i * y_range + j); };
    for (long long i = 0; i < x_range; ++i)
        for (long long j = 0; j < y_range; ++j) labels[index(i, j)] = xy_label(i, j);
    for (long long i1 = 0; i1 < x_range; ++i1)
        for (long long j1 = 0; j1 < y_range; ++j1)
            for (long long i2 = 0; i2 < x_range; ++i2)
                for (long long j2 = 0; j2 < y_range; ++j2) {
                    auto [i, j] = compose(i1, j1, i2, j2);
                    op[static_cast<size_t>(index(i1, j1)) * n + index(i2, j2)] = index(i, j);
                }
    return FiniteGroup(std::move(op), std::move(labels), what);
}

inline long long mod(long long v, long long m) { return ((v % m) + m) % m; }

}  // namespace detail

/// Builds the group named by the spec and validates it (closure, associativity,
/// identity/inverses, expected order). Throws std::runtime_error when a table fails
/// validation and std::invalid_argument on bad parameters.
inline FiniteGroup build_group(const FamilySpec& spec) {
    using detail::mod;
    switch (spec.family) {
        case Family::dihedral: {
            const long long m = spec.m;
            // y x^i = x^-i y
            return detail::build_two_generator(
                m, 2,
                [m](long long i1, long long j1, long long i2, long long j2) {
                    const long long i = mod(i1 + (j1 ? -i2 : i2), m);
                    return std::pair{i, (j1 + j2) % 2};
                },
                "dihedral");
        }
        case Family::dicyclic: {
            const long long m = spec.m;
            // y x^i = x^-i y and y^2 = x^m
            return detail::build_two_generator(
                2 * m, 2,
                [m](long long i1, long long j1, long long i2, long long j2) {
                    long long i = i1 + (j1 ? -i2 : i2);
                    if (j1 && j2) i += m;
                    return std::pair{mod(i, 2 * m), (j1 + j2) % 2};
                },
                "dicyclic");
        }
        case Family::semidihedral: {
            const long long m = spec.m;
            // y x^i = x^{(2m-1)i} y
            return detail::build_two_generator(
                4 * m, 2,
                [m](long long i1, long long j1, long long i2, long long j2) {
                    const long long i = mod(i1 + (j1 ? (2 * m - 1) * i2 : i2), 4 * m);
                    return std::pair{i, (j1 + j2) % 2};
                },
                "semidihedral");
        }
        case Family::umn:
        case Family::u6m: {
            // y^j x^i = x^i y^{(-1)^i j}; u6m is the y-order-3 case with x of order 2m.
            const long long x_range = spec.family == Family::umn ? 2 * spec.n : 2 * spec.m;
            const long long y_range = spec.family == Family::umn ? spec.m : 3;
            return detail::build_two_generator(
                x_range, y_range,
                [x_range, y_range](long long i1, long long j1, long long i2, long long j2) {
                    const long long j = mod((i2 % 2 ? -j1 : j1) + j2, y_range);
                    return std::pair{mod(i1 + i2, x_range), j};
                },
                spec.family == Family::umn ? "umn" : "u6m");
        }
        case Family::v8m: {
            const long long m = spec.m;
            // y x^i = x^-i y       for i even,   y x^i = x^-i y^3   for i odd,
            // y^2 central; hence y^j x^i = x^{±i} y^{j'} with j' = j + 2(i odd)(j odd).
            return detail::build_two_generator(
                2 * m, 4,
                [m](long long i1, long long j1, long long i2, long long j2) {
                    const bool flip = j1 % 2 != 0;
                    const long long i = mod(i1 + (flip ? -i2 : i2), 2 * m);
                    long long j = j1;
                    if (flip && i2 % 2 != 0) j = (j + 2) % 4;
                    return std::pair{i, (j + j2) % 4};
                },
                "v8m");
        }
        case Family::heisenberg: {
            const long long p = spec.p;
            const long long n = p * p * p;
            std::vector<int> op(static_cast<size_t>(n) * n);
            std::vector<std::string> labels(static_cast<size_t>(n));
            auto index = [p](long long a, long long b, long long c) {
                return static_cast<int>((a * p + b) * p + c);
            };
            for (long long a = 0; a < p; ++a)
                for (long long b = 0; b < p; ++b)
                    for (long long c = 0; c < p; ++c)
                        labels[index(a, b, c)] = "u(" + std::to_string(a) + "," + std::to_string(b) +
                                                 "," + std::to_string(c) + ")";
            // [[1,a1,c1],[0,1,b1],[0,0,1]] * [[1,a2,c2],[0,1,b2],[0,0,1]]
            for (long long a1 = 0; a1 < p; ++a1)
                for (long long b1 = 0; b1 < p; ++b1)
                    for (long long c1 = 0; c1 < p; ++c1)
                        for (long long a2 = 0; a2 < p; ++a2)
                            for (long long b2 = 0; b2 < p; ++b2)
                                for (long long c2 = 0; c2 < p; ++c2)
                                    op[static_cast<size_t>(index(a1, b1, c1)) * n +
                                       index(a2, b2, c2)] =
                                        index((a1 + a2) % p, (b1 + b2) % p,
                                              (c1 + c2 + a1 * b2) % p);
            return FiniteGroup(std::move(op), std::move(labels), "heisenberg");
        }
        case Family::explicit_table: {
            const auto& data = *spec.table;
            const int n = static_cast<int>(data.table.size());
            std::vector<int> op;
            op.reserve(static_cast<size_t>(n) * n);
            for (const auto& row : data.table) {
                if (static_cast<int>(row.size()) != n)
                    throw std::runtime_error("explicit table: table is not order x order");
                op.insert(op.end(), row.begin(), row.end());
            }
            std::vector<std::string> labels = data.labels;
            if (labels.empty())
                for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
            if (static_cast<int>(labels.size()) != n)
                throw std::runtime_error("explicit table: labels/order mismatch");
            return FiniteGroup(std::move(op), std::move(labels), "explicit table");
        }
    }
    throw std::invalid_argument("build_group: unknown family");
}

// ---------------------------------------------------------------------------
// Central quotient recognition
// ---------------------------------------------------------------------------

struct QuotientKind {
    enum class Tag { zp_x_zp, d2m, other };
    Tag tag = Tag::other;
    long long p = 0;  // zp_x_zp
    long long m = 0;  // d2m

    static QuotientKind zp(long long p) { return {Tag::zp_x_zp, p, 0}; }
    static QuotientKind dihedral(long long m) { return {Tag::d2m, 0, m}; }
    static QuotientKind other() { return {}; }

    friend bool operator==(const QuotientKind& a, const QuotientKind& b) {
        return a.tag == b.tag && a.p == b.p && a.m == b.m;
    }
};

/// Builds G/Z(G) as an explicit group (cosets of the center).
inline FiniteGroup central_quotient(const FiniteGroup& g) {
    const std::vector<int> z = center(g);
    if (static_cast<int>(z.size()) == g.order())
        throw std::invalid_argument("central_quotient: group is abelian");
    const int n = g.order();
    // coset id of x = minimal element of xZ; compress to 0..q-1 with identity coset first
    std::vector<int> coset_min(n, -1);
    for (int x = 0; x < n; ++x) {
        int mn = x;
        for (int c : z) mn = std::min(mn, g.op(x, c));
        coset_min[x] = mn;
    }
    std::vector<int> reps;
    for (int x = 0; x < n; ++x)
        if (coset_min[x] == x) reps.push_back(x);
    std::vector<int> coset_id(n);
    for (int x = 0; x < n; ++x)
        coset_id[x] = static_cast<int>(std::lower_bound(reps.begin(), reps.end(), coset_min[x]) -
                                       reps.begin());
    const int q = static_cast<int>(reps.size());
    std::vector<int> op(static_cast<size_t>(q) * q);
    std::vector<std::string> labels(q);
    for (int i = 0; i < q; ++i) labels[i] = g.label(reps[i]) + " Z";
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            op[static_cast<size_t>(i) * q + j] = coset_id[g.op(reps[i], reps[j])];
    return FiniteGroup(std::move(op), std::move(labels), "central quotient");
}

/// Recognizes G/Z(G) as Zp x Zp (order p^2, exponent p, abelian) or D_2m (order 2m
/// with a cyclic index-2 subgroup inverted by an involution); Other when neither.
/// Order-4 non-cyclic quotients report ZpxZp(2), not D2m(2).
inline QuotientKind central_quotient_kind(const FiniteGroup& g) {
    const FiniteGroup q = central_quotient(g);
    const int order = q.order();
    // Zp x Zp
    long long p = 1;
    while (p * p < order) ++p;
    if (p * p == order && is_prime(p)) {
        bool exponent_p = true;
        for (int x = 1; x < order && exponent_p; ++x) exponent_p = q.element_order(x) == p;
        bool abelian = true;
        for (int x = 0; x < order && abelian; ++x)
            for (int y = x + 1; y < order && abelian; ++y) abelian = commutes(q, x, y);
        if (exponent_p && abelian) return QuotientKind::zp(p);
    }
    // D_2m
    if (order % 2 == 0 && order >= 6) {
        const long long m = order / 2;
        for (int r = 1; r < order; ++r) {
            if (q.element_order(r) != m) continue;
            std::vector<char> in_cyclic(order, 0);
            int x = FiniteGroup::identity;
            for (long long k = 0; k < m; ++k) {
                in_cyclic[x] = 1;
                x = q.op(x, r);
            }
            for (int s = 1; s < order; ++s) {
                if (in_cyclic[s] || q.element_order(s) != 2) continue;
                if (q.conjugate(r, s) == q.inv(r)) return QuotientKind::dihedral(m);
            }
        }
    }
    return QuotientKind::other();
}

// ---------------------------------------------------------------------------
// Explicit tables from JSON: {"order": n, "table": [[...]], "labels": [...]}
// ---------------------------------------------------------------------------

inline FamilySpec group_spec_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("table"))
        throw std::runtime_error("group json: need object with \"order\" and \"table\"");
    const long long order = j.at("order").get<long long>();
    ExplicitTableData data;
    data.table = j.at("table").get<std::vector<std::vector<int>>>();
    if (static_cast<long long>(data.table.size()) != order)
        throw std::runtime_error("group json: \"order\" does not match table size");
    if (j.contains("labels")) {
        data.labels = j.at("labels").get<std::vector<std::string>>();
        if (static_cast<long long>(data.labels.size()) != order)
            throw std::runtime_error("group json: labels/order mismatch");
    }
    return FamilySpec::from_table(std::move(data));
}

}  // namespace nccc
