#pragma once

#include "nccc/group.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nccc {

/// Simple undirected graph on labelled vertices, stored as a dense symmetric 0/1
/// adjacency with zero diagonal. Immutable in practice once built.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n, std::vector<std::string> labels = {})
        : n_(n), adj_(static_cast<size_t>(n) * n, 0), labels_(std::move(labels)) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        if (labels_.empty())
            for (int i = 0; i < n; ++i) labels_.push_back("v" + std::to_string(i));
        if (static_cast<int>(labels_.size()) != n)
            throw std::invalid_argument("Graph: labels/vertex count mismatch");
    }

    int n_vertices() const { return n_; }
    bool adjacent(int u, int v) const { return adj_[static_cast<size_t>(u) * n_ + v] != 0; }
    const std::string& vertex_label(int v) const { return labels_[v]; }
    const std::vector<std::string>& vertex_labels() const { return labels_; }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("Graph: loops not allowed");
        adj_[static_cast<size_t>(u) * n_ + v] = 1;
        adj_[static_cast<size_t>(v) * n_ + u] = 1;
    }

    int degree(int v) const {
        int d = 0;
        for (int u = 0; u < n_; ++u) d += adj_[static_cast<size_t>(v) * n_ + u];
        return d;
    }

    long long n_edges() const {
        long long twice = 0;
        for (int v = 0; v < n_; ++v) twice += degree(v);
        return twice / 2;
    }

    bool is_regular() const {
        for (int v = 1; v < n_; ++v)
            if (degree(v) != degree(0)) return false;
        return true;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

  private:
    int n_ = 0;
    std::vector<uint8_t> adj_;
    std::vector<std::string> labels_;
};

/// Complete-multipartite profile: (count, part size) pairs with distinct sizes,
/// sorted by size ascending. K_{a1.p1, a2.p2} notation.
struct MultipartiteShape {
    std::vector<std::pair<long long, long long>> parts;  // (count a_i, size p_i)

    static MultipartiteShape of(std::vector<std::pair<long long, long long>> raw) {
        std::map<long long, long long> by_size;
        for (auto [count, size] : raw) {
            if (count < 0 || size <= 0) throw std::invalid_argument("MultipartiteShape: bad part");
            if (count > 0) by_size[size] += count;
        }
        MultipartiteShape s;
        for (auto [size, count] : by_size) s.parts.emplace_back(count, size);
        return s;
    }

    long long n_vertices() const {
        long long n = 0;
        for (auto [count, size] : parts) n += count * size;
        return n;
    }

    long long n_edges() const {
        // 2e = (sum a_i p_i)^2 - sum a_i p_i^2
        long long n = n_vertices();
        long long sq = 0;
        for (auto [count, size] : parts) sq += count * size * size;
        return (n * n - sq) / 2;
    }

    std::string str() const {
        std::ostringstream os;
        os << "K_{";
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) os << ", ";
            os << parts[i].first << "." << parts[i].second;
        }
        os << "}";
        return os.str();
    }

    friend bool operator==(const MultipartiteShape& a, const MultipartiteShape& b) {
        return a.parts == b.parts;
    }
};

namespace detail {

// Shared skeleton of the two conjugacy-class graphs: vertices are the non-central
// classes in partition order; the edge rule over all representative pairs differs.
template <typename EdgeRule>
Graph build_class_graph(const FiniteGroup& g, const ConjugacyPartition& part, EdgeRule&& rule) {
    std::vector<const std::vector<int>*> verts;
    std::vector<std::string> labels;
    const std::vector<int> z = center(g);
    for (const auto& cls : part.classes) {
        if (std::binary_search(z.begin(), z.end(), cls.front())) continue;
        verts.push_back(&cls);
        labels.push_back(g.label(cls.front()));
    }
    if (verts.empty()) throw std::invalid_argument("class graph: abelian group has no vertices");
    Graph graph(static_cast<int>(verts.size()), std::move(labels));
    for (int u = 0; u < graph.n_vertices(); ++u)
        for (int v = u + 1; v < graph.n_vertices(); ++v)
            if (rule(g, *verts[u], *verts[v])) graph.add_edge(u, v);
    return graph;
}

}  // namespace detail

/// Non-commuting conjugacy class graph: classes adjacent when no pair of their
/// members commutes. Brute force over all member pairs — this is the definition
/// and doubles as the oracle for the closed-form structure results.
inline Graph build_nccc(const FiniteGroup& g, const ConjugacyPartition& part) {
    return detail::build_class_graph(
        g, part, [](const FiniteGroup& gr, const std::vector<int>& a, const std::vector<int>& b) {
            for (int x : a)
                for (int y : b)
                    if (commutes(gr, x, y)) return false;
            return true;
        });
}

/// Commuting conjugacy class graph: classes adjacent when some pair of their
/// members commutes. Exact complement of build_nccc by construction of the rules.
inline Graph build_ccc(const FiniteGroup& g, const ConjugacyPartition& part) {
    return detail::build_class_graph(
        g, part, [](const FiniteGroup& gr, const std::vector<int>& a, const std::vector<int>& b) {
            for (int x : a)
                for (int y : b)
                    if (commutes(gr, x, y)) return true;
            return false;
        });
}

inline Graph complement(const Graph& g) {
    Graph c(g.n_vertices(), g.vertex_labels());
    for (int u = 0; u < g.n_vertices(); ++u)
        for (int v = u + 1; v < g.n_vertices(); ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

/// Detects complete-multipartite structure: returns the grouped (count, size)
/// profile when the complement is a disjoint union of cliques, nullopt otherwise.
inline std::optional<MultipartiteShape> detect_multipartite(const Graph& g) {
    const Graph co = complement(g);
    const int n = co.n_vertices();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> components;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        std::vector<int> members;
        comp[s] = static_cast<int>(components.size());
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int u = 0; u < n; ++u)
                if (co.adjacent(v, u) && comp[u] < 0) {
                    comp[u] = comp[s];
                    stack.push_back(u);
                }
        }
        components.push_back(std::move(members));
    }
    std::vector<std::pair<long long, long long>> raw;
    for (const auto& members : components) {
        for (size_t i = 0; i < members.size(); ++i)
            for (size_t j = i + 1; j < members.size(); ++j)
                if (!co.adjacent(members[i], members[j])) return std::nullopt;
        raw.emplace_back(1, static_cast<long long>(members.size()));
    }
    return MultipartiteShape::of(std::move(raw));
}

/// Complete multipartite graph of the given shape, vertices grouped part by part
/// (sizes ascending). Used to cross-check closed-form polynomials against the
/// literal graph.
inline Graph build_complete_multipartite(const MultipartiteShape& shape) {
    const int n = static_cast<int>(shape.n_vertices());
    std::vector<int> part_of;
    int part = 0;
    for (auto [count, size] : shape.parts)
        for (long long c = 0; c < count; ++c, ++part)
            for (long long k = 0; k < size; ++k) part_of.push_back(part);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) g.add_edge(u, v);
    return g;
}

/// One "u v" line per edge, 0-based, u < v, sorted.
inline std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    for (int u = 0; u < g.n_vertices(); ++u)
        for (int v = u + 1; v < g.n_vertices(); ++v)
            if (g.adjacent(u, v)) os << u << " " << v << "\n";
    return os.str();
}

inline nlohmann::json to_adjacency_json(const Graph& g) {
    nlohmann::json adj = nlohmann::json::array();
    for (int u = 0; u < g.n_vertices(); ++u) {
        nlohmann::json row = nlohmann::json::array();
        for (int v = 0; v < g.n_vertices(); ++v)
            if (g.adjacent(u, v)) row.push_back(v);
        adj.push_back(std::move(row));
    }
    return nlohmann::json{{"n_vertices", g.n_vertices()},
                          {"labels", g.vertex_labels()},
                          {"adjacency", std::move(adj)}};
}

}  // namespace nccc
