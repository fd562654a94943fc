#pragma once

#include "nccc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nccc {

template <typename T>
struct SquareMatrix {
    int n = 0;
    std::vector<T> a;

    SquareMatrix() = default;
    explicit SquareMatrix(int n) : n(n), a(static_cast<size_t>(n) * n, T(0)) {}

    T& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const T& operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    bool is_symmetric() const {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }
};

using IntMatrix = SquareMatrix<long long>;
using RealMatrix = SquareMatrix<double>;

inline RealMatrix to_real(const IntMatrix& m) {
    RealMatrix r(m.n);
    for (size_t k = 0; k < m.a.size(); ++k) r.a[k] = static_cast<double>(m.a[k]);
    return r;
}

inline IntMatrix adjacency_matrix(const Graph& g) {
    IntMatrix m(g.n_vertices());
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) m(i, j) = g.adjacent(i, j) ? 1 : 0;
    return m;
}

/// L = D - A; zero row sums.
inline IntMatrix laplacian_matrix(const Graph& g) {
    IntMatrix m(g.n_vertices());
    for (int i = 0; i < m.n; ++i) {
        m(i, i) = g.degree(i);
        for (int j = 0; j < m.n; ++j)
            if (g.adjacent(i, j)) m(i, j) = -1;
    }
    return m;
}

/// Q = D + A.
inline IntMatrix signless_laplacian_matrix(const Graph& g) {
    IntMatrix m(g.n_vertices());
    for (int i = 0; i < m.n; ++i) {
        m(i, i) = g.degree(i);
        for (int j = 0; j < m.n; ++j)
            if (g.adjacent(i, j)) m(i, j) = 1;
    }
    return m;
}

/// All eigenvalues of a symmetric matrix, ascending. Cyclic Jacobi rotations until
/// the off-diagonal Frobenius norm drops below 1e-12 * ||M||_F; adequate for the
/// dense graphs handled here (a few hundred vertices at most).
inline std::vector<double> eigen_symmetric(const RealMatrix& m) {
    const int n = m.n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m(i, j) != m(j, i)) throw std::invalid_argument("eigen_symmetric: matrix not symmetric");
    std::vector<double> a = m.a;
    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
    double norm = 0;
    for (double v : a) norm += v * v;
    norm = std::sqrt(norm);
    auto off_norm = [&] {
        double s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += 2 * at(i, j) * at(i, j);
        return std::sqrt(s);
    };
    const double threshold = 1e-12 * norm;
    for (int sweep = 0; sweep < 100 && off_norm() > threshold; ++sweep) {
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2 * apq);
                const double t =
                    (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                const double tau = s / (1 + c);
                const double app = at(p, p), aqq = at(q, q);
                at(p, p) = app - t * apq;
                at(q, q) = aqq + t * apq;
                at(p, q) = at(q, p) = 0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = at(r, p), arq = at(r, q);
                    at(r, p) = at(p, r) = arp - s * (arq + tau * arp);
                    at(r, q) = at(q, r) = arq + s * (arp - tau * arq);
                }
            }
    }
    if (off_norm() > threshold) throw std::runtime_error("eigen_symmetric: Jacobi did not converge");
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

inline std::vector<double> eigen_symmetric(const IntMatrix& m) { return eigen_symmetric(to_real(m)); }

/// Multiset of (eigenvalue, multiplicity) pairs, values strictly increasing.
/// `exact` marks spectra whose values come from exact (closed-form) arithmetic.
struct Spectrum {
    std::vector<std::pair<double, int>> pairs;
    bool exact = false;

    int total_multiplicity() const {
        int t = 0;
        for (auto& [v, m] : pairs) t += m;
        return t;
    }
    double moment(int power) const {
        double s = 0;
        for (auto& [v, m] : pairs) s += std::pow(v, power) * m;
        return s;
    }
};

/// Clusters sorted eigenvalues whose consecutive gaps are < tol into (mean, count)
/// pairs. Cluster gaps landing in [tol, 1e-3] are suspicious (numerically split
/// multiplicity); they are reported through `warnings`, never merged silently.
inline Spectrum group_eigenvalues(std::vector<double> values, double tol = 1e-6,
                                  std::vector<std::string>* warnings = nullptr) {
    if (tol <= 0) throw std::invalid_argument("group_eigenvalues: tol must be positive");
    std::sort(values.begin(), values.end());
    Spectrum spec;
    size_t i = 0;
    while (i < values.size()) {
        size_t j = i + 1;
        double sum = values[i];
        while (j < values.size() && values[j] - values[j - 1] < tol) sum += values[j++];
        spec.pairs.emplace_back(sum / static_cast<double>(j - i), static_cast<int>(j - i));
        i = j;
    }
    if (warnings) {
        for (size_t k = 1; k < spec.pairs.size(); ++k) {
            const double gap = spec.pairs[k].first - spec.pairs[k - 1].first;
            if (gap >= tol && gap <= 1e-3)
                warnings->push_back("clusters " + std::to_string(spec.pairs[k - 1].first) + " and " +
                                    std::to_string(spec.pairs[k].first) + " are only " +
                                    std::to_string(gap) + " apart");
        }
    }
    return spec;
}

/// E, LE, SE and the average degree Delta for one graph.
struct EnergyReport {
    double energy = 0;            // sum |alpha| over the adjacency spectrum
    double laplacian_energy = 0;  // sum |beta - Delta| over the Laplacian spectrum
    double signless_energy = 0;   // sum |gamma - Delta| over the signless Laplacian spectrum
    double delta = 0;             // 2e/n
    int n_vertices = 0;
    long long n_edges = 0;
};

inline EnergyReport energies(const Spectrum& spec_a, const Spectrum& spec_l, const Spectrum& spec_q,
                             int n, long long e) {
    if (spec_a.total_multiplicity() != n || spec_l.total_multiplicity() != n ||
        spec_q.total_multiplicity() != n)
        throw std::invalid_argument("energies: spectrum multiplicities do not sum to n");
    EnergyReport r;
    r.n_vertices = n;
    r.n_edges = e;
    r.delta = n > 0 ? 2.0 * static_cast<double>(e) / n : 0.0;
    for (auto& [v, m] : spec_a.pairs) r.energy += std::abs(v) * m;
    for (auto& [v, m] : spec_l.pairs) r.laplacian_energy += std::abs(v - r.delta) * m;
    for (auto& [v, m] : spec_q.pairs) r.signless_energy += std::abs(v - r.delta) * m;
    return r;
}

}  // namespace nccc
