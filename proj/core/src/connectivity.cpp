#include "dsem/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace dsem {

Adjacency adjacency(const SurfaceMap& m) {
    Adjacency g(m.vertex_count());
    for (int v = 0; v < m.vertex_count(); ++v) g[v] = m.neighbors(v);
    return g;
}

Adjacency adjacency_from_edges(int n, const std::vector<Edge>& edges) {
    Adjacency g(n);
    for (auto [u, v] : edges) {
        if (u == v) continue;
        g[u].push_back(v);
        g[v].push_back(u);
    }
    for (auto& a : g) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return g;
}

namespace {

struct Flow {
    struct Arc {
        int to, cap;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out;

    explicit Flow(int n) : out(n) {}
    void add(int a, int b, int c) {
        out[a].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({b, c});
        out[b].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({a, 0});
    }
    int run(int s, int t) {
        int total = 0;
        const int n = static_cast<int>(out.size());
        for (;;) {
            std::vector<int> via(n, -1);
            std::deque<int> q{s};
            via[s] = -2;
            while (!q.empty() && via[t] == -1) {
                int x = q.front();
                q.pop_front();
                for (int id : out[x]) {
                    if (arcs[id].cap > 0 && via[arcs[id].to] == -1) {
                        via[arcs[id].to] = id;
                        q.push_back(arcs[id].to);
                    }
                }
            }
            if (via[t] == -1) return total;
            for (int x = t; x != s; x = arcs[via[x] ^ 1].to) {
                arcs[via[x]].cap -= 1;
                arcs[via[x] ^ 1].cap += 1;
            }
            ++total;
        }
    }
};

bool has_edge(const Adjacency& g, int u, int v) {
    return std::binary_search(g[u].begin(), g[u].end(), v);
}

}  // namespace

int independent_paths(const Adjacency& g, int u, int v) {
    const int n = static_cast<int>(g.size());
    const int big = n + 1;
    // v_in = 2v, v_out = 2v + 1
    Flow f(2 * n);
    for (int x = 0; x < n; ++x) f.add(2 * x, 2 * x + 1, (x == u || x == v) ? big : 1);
    bool direct = false;
    for (int x = 0; x < n; ++x) {
        for (int y : g[x]) {
            if ((x == u && y == v) || (x == v && y == u)) {
                direct = true;
                continue;
            }
            f.add(2 * x + 1, 2 * y, 1);
        }
    }
    return f.run(2 * u + 1, 2 * v) + (direct ? 1 : 0);
}

int independent_paths(const SurfaceMap& m, int u, int v) { return independent_paths(adjacency(m), u, v); }

int vertex_connectivity(const Adjacency& g) {
    const int n = static_cast<int>(g.size());
    int best = n - 1;
    for (int u = 0; u < n; ++u) {
        if (static_cast<int>(g[u].size()) < best) best = static_cast<int>(g[u].size());
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (has_edge(g, u, v)) continue;
            best = std::min(best, independent_paths(g, u, v));
        }
    }
    return best;
}

int vertex_connectivity(const SurfaceMap& m) { return vertex_connectivity(adjacency(m)); }

EdgeNotInMap::EdgeNotInMap(int a, int b)
    : std::invalid_argument("edge " + std::to_string(a) + "-" + std::to_string(b) + " is not in the map"), u(a), v(b) {}

WindingPair winding(const Layout& layout, const Cycle& c) {
    WindingPair w;
    const std::size_t len = c.vertices.size();
    for (std::size_t t = 0; t < len; ++t) {
        int a = c.vertices[t];
        int b = c.vertices[(t + 1) % len];
        auto it = layout.edge_shift.find({a, b});
        if (it == layout.edge_shift.end()) throw EdgeNotInMap(a, b);
        w.wx += it->second.wx;
        w.wy += it->second.wy;
    }
    return w;
}

bool is_contractible(const Layout& layout, const Cycle& c) { return winding(layout, c).is_zero(); }

Cycle row_cycle(const Layout& layout, int s) {
    Cycle c;
    c.vertices = layout.rows.at(s);
    c.winding = winding(layout, c);
    return c;
}

Cycle cutting_cycle(const SurfaceMap& m, const Layout& layout) {
    const int n = m.vertex_count();
    std::vector<int> best;
    for (int start = 0; start < n; ++start) {
        // state = 2 * vertex + parity of top-seam crossings
        std::vector<int> prev(2 * n, -1);
        std::vector<int> dist(2 * n, -1);
        std::deque<int> q{2 * start};
        dist[2 * start] = 0;
        const int goal = 2 * start + 1;
        while (!q.empty() && dist[goal] == -1) {
            int st = q.front();
            q.pop_front();
            if (!best.empty() && dist[st] + 1 >= static_cast<int>(best.size())) break;
            int x = st / 2;
            for (int y : m.neighbors(x)) {
                int nst = 2 * y + ((st & 1) ^ (layout.shift(x, y).wy & 1));
                if (dist[nst] != -1) continue;
                dist[nst] = dist[st] + 1;
                prev[nst] = st;
                q.push_back(nst);
            }
        }
        if (dist[goal] == -1) continue;
        if (!best.empty() && dist[goal] >= static_cast<int>(best.size())) continue;
        std::vector<int> walk;
        for (int st = prev[goal]; st != -1; st = prev[st]) walk.push_back(st / 2);
        std::reverse(walk.begin(), walk.end());
        best = walk;
    }
    Cycle c;
    c.vertices = best;
    if (!best.empty()) c.winding = winding(layout, c);
    return c;
}

ConjectureReport check_conjecture_instance(const Adjacency& g, bool ham_found) {
    ConjectureReport r;
    r.kappa = vertex_connectivity(g);
    r.min_degree = std::numeric_limits<int>::max();
    for (const auto& a : g) r.min_degree = std::min(r.min_degree, static_cast<int>(a.size()));
    if (g.empty()) r.min_degree = 0;
    r.hamiltonian = ham_found;
    r.kappa_is_min_degree = r.kappa == r.min_degree;
    r.in_scope = r.kappa >= 4;
    r.consistent = !r.in_scope || ham_found;
    if (!r.in_scope) {
        r.note = ham_found ? "not 4-connected" : "outside conjecture scope";
    } else {
        r.note = ham_found ? "4-connected and Hamiltonian" : "counterexample candidate";
    }
    return r;
}

ConjectureReport check_conjecture_instance(const SurfaceMap& m, bool ham_found) {
    return check_conjecture_instance(adjacency(m), ham_found);
}

}  // namespace dsem
