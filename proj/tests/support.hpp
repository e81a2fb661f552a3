#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "dsem/connectivity.hpp"
#include "dsem/surface_map.hpp"

namespace dsem::fixtures {

/// p x q quadrangulated torus.
inline std::vector<Face> torus_grid(int p, int q) {
    std::vector<Face> faces;
    auto at = [&](int r, int c) { return ((r + p) % p) * q + (c + q) % q; };
    for (int r = 0; r < p; ++r)
        for (int c = 0; c < q; ++c) faces.push_back({at(r, c), at(r, c + 1), at(r + 1, c + 1), at(r + 1, c)});
    return faces;
}

inline std::vector<Face> octahedron() {
    // 0 and 5 are the poles
    return {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1}, {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}};
}

inline Adjacency petersen() {
    std::vector<Edge> e;
    for (int t = 0; t < 5; ++t) {
        e.push_back({t, (t + 1) % 5});
        e.push_back({t, t + 5});
        e.push_back({5 + t, 5 + (t + 2) % 5});
    }
    return adjacency_from_edges(10, e);
}

inline Adjacency complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return adjacency_from_edges(n, e);
}

inline Adjacency cycle_graph(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u) e.push_back({u, (u + 1) % n});
    return adjacency_from_edges(n, e);
}

inline bool reachable_without(const Adjacency& g, int u, int v, const std::vector<char>& removed) {
    std::vector<char> seen(g.size(), 0);
    std::vector<int> stack{u};
    seen[u] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (x == v) return true;
        for (int y : g[x]) {
            if (seen[y] || removed[y]) continue;
            seen[y] = 1;
            stack.push_back(y);
        }
    }
    return false;
}

/// Smallest vertex set separating non-adjacent u and v, by subset enumeration.
inline int min_separator_size(const Adjacency& g, int u, int v) {
    const int n = static_cast<int>(g.size());
    std::vector<int> others;
    for (int x = 0; x < n; ++x)
        if (x != u && x != v) others.push_back(x);
    for (int size = 0; size <= static_cast<int>(others.size()); ++size) {
        std::vector<char> pick(others.size(), 0);
        std::fill(pick.end() - size, pick.end(), 1);
        do {
            std::vector<char> removed(n, 0);
            for (std::size_t t = 0; t < others.size(); ++t)
                if (pick[t]) removed[others[t]] = 1;
            if (!reachable_without(g, u, v, removed)) return size;
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return n;
}

/// Exhaustive Hamiltonian cycle count check on tiny graphs, by permutations.
inline bool hamiltonian_by_permutation(const Adjacency& g) {
    const int n = static_cast<int>(g.size());
    std::vector<int> order;
    for (int v = 1; v < n; ++v) order.push_back(v);
    auto edge = [&](int a, int b) { return std::binary_search(g[a].begin(), g[a].end(), b); };
    do {
        bool ok = edge(0, order.front()) && edge(order.back(), 0);
        for (std::size_t t = 0; ok && t + 1 < order.size(); ++t) ok = edge(order[t], order[t + 1]);
        if (ok) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

}  // namespace dsem::fixtures
