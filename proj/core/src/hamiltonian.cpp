#include "dsem/hamiltonian.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace dsem {

const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::QuadReduction: return "quad-reduction";
        case Strategy::Concatenation: return "concatenation";
        case Strategy::RowMerge: return "row-merge";
    }
    return "?";
}

const char* to_string(OracleStatus s) {
    switch (s) {
        case OracleStatus::Found: return "Found";
        case OracleStatus::NotFound: return "NotFound";
        case OracleStatus::BudgetExhausted: return "BudgetExhausted";
    }
    return "?";
}

Strategy strategy_for(const DsemType& t, int j) {
    switch (t.rule) {
        case Rule::TriangleStrips:
        case Rule::SquareStrips:
        case Rule::ElongatedSnub2:
            return Strategy::QuadReduction;
        case Rule::HexTriangleStrips:
            return j == 1 ? Strategy::Concatenation : Strategy::RowMerge;
        default:
            return Strategy::RowMerge;
    }
}

namespace {

int mod(int a, int b) { return ((a % b) + b) % b; }

int upper(const Layout& L, int s, int col) {
    if (s + 1 < L.j) return L.rows[s + 1][mod(col, L.i)];
    return L.rows[0][mod(col + L.k + L.top_offset, L.i)];
}

/// A set of disjoint cycles stored as successor/predecessor arrays.
class TwoFactor {
public:
    explicit TwoFactor(int n) : next_(n, -1), prev_(n, -1) {}

    bool covered(int v) const { return next_[v] != -1; }
    int next(int v) const { return next_[v]; }
    int prev(int v) const { return prev_[v]; }

    void add_cycle(const std::vector<int>& vs) {
        const std::size_t len = vs.size();
        for (std::size_t t = 0; t < len; ++t) {
            next_[vs[t]] = vs[(t + 1) % len];
            prev_[vs[(t + 1) % len]] = vs[t];
        }
    }

    /// Replaces the edge u->next(u) by the path u, xs..., next(u).
    void insert_after(int u, const std::vector<int>& xs) {
        int v = next_[u];
        int cur = u;
        for (int x : xs) {
            next_[cur] = x;
            prev_[x] = cur;
            cur = x;
        }
        next_[cur] = v;
        prev_[v] = cur;
    }

    std::vector<int> component(int start) const {
        std::vector<int> out{start};
        for (int v = next_[start]; v != start; v = next_[v]) out.push_back(v);
        return out;
    }

    std::vector<int> labels() const {
        std::vector<int> lab(next_.size(), -1);
        int id = 0;
        for (std::size_t v = 0; v < next_.size(); ++v) {
            if (lab[v] != -1 || next_[v] == -1) continue;
            for (int w : component(static_cast<int>(v))) lab[w] = id;
            ++id;
        }
        return lab;
    }

    /// Joins the cycle through a->b with the cycle through edge {c, d},
    /// trading a->b and {c, d} for a-c and d-b.
    void merge(int a, int c, int d) {
        int b = next_[a];
        if (next_[c] == d) {
            for (int v : component(c)) std::swap(next_[v], prev_[v]);
        }
        next_[a] = c;
        prev_[c] = a;
        next_[d] = b;
        prev_[b] = d;
    }

private:
    std::vector<int> next_, prev_;
};

bool has_edge(const Adjacency& g, int u, int v) {
    return std::binary_search(g[u].begin(), g[u].end(), v);
}

/// Merges cycles across 4-cycles whose two opposite sides are cycle edges.
/// allowed(x, y) restricts which edges may be used.
template <class Allowed>
bool merge_all(TwoFactor& tf, const Adjacency& g, Allowed allowed) {
    const int n = static_cast<int>(g.size());
    for (;;) {
        std::vector<int> lab = tf.labels();
        if (*std::max_element(lab.begin(), lab.end()) == 0) return true;
        bool merged = false;
        for (int a = 0; a < n && !merged; ++a) {
            int b = tf.next(a);
            if (!allowed(a, b)) continue;
            for (int c : g[a]) {
                if (lab[c] == lab[a] || !allowed(a, c)) continue;
                for (int d : {tf.next(c), tf.prev(c)}) {
                    if (has_edge(g, b, d) && allowed(b, d) && allowed(c, d)) {
                        tf.merge(a, c, d);
                        merged = true;
                        break;
                    }
                }
                if (merged) break;
            }
        }
        if (!merged) return false;
    }
}

bool absorb_detours(TwoFactor& tf, const Adjacency& g) {
    const int n = static_cast<int>(g.size());
    bool progress = true;
    auto remaining = [&] {
        for (int v = 0; v < n; ++v)
            if (!tf.covered(v)) return true;
        return false;
    };
    while (progress && remaining()) {
        progress = false;
        for (int x = 0; x < n; ++x) {
            if (tf.covered(x)) continue;
            for (int u : g[x]) {
                if (!tf.covered(u)) continue;
                if (has_edge(g, x, tf.next(u))) {
                    tf.insert_after(u, {x});
                    progress = true;
                    break;
                }
                if (has_edge(g, x, tf.prev(u))) {
                    tf.insert_after(tf.prev(u), {x});
                    progress = true;
                    break;
                }
            }
        }
        if (progress) continue;
        for (int x = 0; x < n && !progress; ++x) {
            if (tf.covered(x)) continue;
            for (int y : g[x]) {
                if (tf.covered(y)) continue;
                for (int u : g[x]) {
                    if (tf.covered(u) && has_edge(g, y, tf.next(u))) {
                        tf.insert_after(u, {x, y});
                        progress = true;
                        break;
                    }
                }
                if (progress) break;
            }
        }
    }
    return !remaining();
}

void seed_uncovered_faces(TwoFactor& tf, const SurfaceMap& m) {
    for (const Face& f : m.faces()) {
        bool fresh = std::none_of(f.begin(), f.end(), [&](int v) { return tf.covered(v); });
        if (fresh) tf.add_cycle(f);
    }
}

Cycle to_cycle(const TwoFactor& tf, int start) {
    Cycle c;
    c.vertices = tf.component(start);
    return c;
}

Cycle concatenation(const Layout& L) {
    Cycle c;
    for (int t = 0; t < L.i / 2; ++t) {
        c.vertices.push_back(L.rows[0][2 * t]);
        c.vertices.push_back(L.i + t);
        c.vertices.push_back(L.rows[0][2 * t + 1]);
    }
    return c;
}

/// Rotation-extension search for a Hamiltonian path that closes. Choices are
/// driven by a counter so that runs are reproducible.
std::optional<std::vector<int>> rotation_extension(const Adjacency& g, long long steps) {
    const int n = static_cast<int>(g.size());
    unsigned long long tick = 0;
    for (int first = 0; first < n; ++first) {
        std::vector<int> path{first};
        std::vector<int> where(n, -1);
        where[first] = 0;
        auto reindex = [&](std::size_t from) {
            for (std::size_t t = from; t < path.size(); ++t) where[path[t]] = static_cast<int>(t);
        };
        for (long long step = 0; step < steps; ++step) {
            int end = path.back();
            // extension: the free neighbour with fewest free neighbours
            int best = -1, best_free = n + 1;
            for (int w : g[end]) {
                if (where[w] != -1) continue;
                int f = 0;
                for (int y : g[w]) f += where[y] == -1;
                if (f < best_free) {
                    best = w;
                    best_free = f;
                }
            }
            if (best != -1) {
                where[best] = static_cast<int>(path.size());
                path.push_back(best);
                continue;
            }
            const bool closes = has_edge(g, end, path.front());
            if (closes && static_cast<int>(path.size()) == n) return path;
            if (closes) {
                // open the cycle next to a vertex that sees a free vertex
                bool opened = false;
                for (std::size_t t = 0; t < path.size() && !opened; ++t) {
                    for (int w : g[path[t]]) {
                        if (where[w] != -1) continue;
                        std::vector<int> np;
                        for (std::size_t u = 1; u <= path.size(); ++u) np.push_back(path[(t + u) % path.size()]);
                        np.push_back(w);
                        path = std::move(np);
                        reindex(0);
                        opened = true;
                        break;
                    }
                }
                if (opened) continue;
            }
            // rotation about an edge from the end into the path
            std::vector<int> pivots;
            for (int w : g[end]) {
                if (where[w] != -1 && where[w] + 1 < static_cast<int>(path.size()) - 1) pivots.push_back(where[w]);
            }
            if (pivots.empty()) break;
            std::sort(pivots.begin(), pivots.end());
            int piv = pivots[(tick++ * 7919u) % pivots.size()];
            std::reverse(path.begin() + piv + 1, path.end());
            reindex(static_cast<std::size_t>(piv) + 1);
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<QuadGrid> quad_reduction(const SurfaceMap& m, const Layout& L) {
    if (L.i < 3 || m.vertex_count() != L.i * L.j) return std::nullopt;
    QuadGrid q;
    for (int s = 0; s < L.j; ++s) {
        std::optional<int> found;
        for (int step = 0; step < L.i && !found; ++step) {
            for (int d : {step, -step}) {
                bool all = true;
                for (int c = 0; c < L.i && all; ++c) all = m.adjacent(L.rows[s][c], upper(L, s, c + d));
                if (all) {
                    found = d;
                    break;
                }
            }
        }
        if (!found) return std::nullopt;
        q.rung_offset.push_back(*found);
        for (int c = 0; c < L.i; ++c) {
            q.faces.push_back({L.rows[s][c], L.rows[s][(c + 1) % L.i], upper(L, s, c + 1 + *found),
                               upper(L, s, c + *found)});
        }
    }
    try {
        SurfaceMap grid = SurfaceMap::from_faces(q.faces);
        q.degree_four = grid.vertex_count() == m.vertex_count();
        for (int v = 0; v < grid.vertex_count(); ++v) q.degree_four = q.degree_four && grid.degree(v) == 4;
        q.all_quads = std::all_of(grid.faces().begin(), grid.faces().end(),
                                  [](const Face& f) { return f.size() == 4; });
    } catch (const MapException&) {
        return q;
    }
    return q;
}

Cycle construct_hamiltonian(const ReprParams& p, const SurfaceMap& m, const Layout& L) {
    const DsemType& t = find_type(p.type);
    const Adjacency g = adjacency(m);
    const int n = m.vertex_count();
    Cycle c;
    Strategy s = strategy_for(t, p.j);
    if (s == Strategy::Concatenation) {
        c = concatenation(L);
    } else {
        TwoFactor tf(n);
        for (const auto& row : L.rows) tf.add_cycle(row);
        bool ok = false;
        if (s == Strategy::QuadReduction) {
            auto q = quad_reduction(m, L);
            if (!q || !q->uniform()) {
                throw PatternFailure(p.type + ": no uniform [4^4] subgraph for i=" + std::to_string(p.i) +
                                     " j=" + std::to_string(p.j) + " k=" + std::to_string(p.k));
            }
            Adjacency grid = adjacency_from_edges(n, [&] {
                std::vector<Edge> es;
                for (const Face& f : q->faces)
                    for (std::size_t e = 0; e < f.size(); ++e) es.push_back({f[e], f[(e + 1) % f.size()]});
                return es;
            }());
            ok = merge_all(tf, grid, [](int, int) { return true; });
        } else {
            ok = absorb_detours(tf, g);
            if (!ok) {
                seed_uncovered_faces(tf, m);
                ok = absorb_detours(tf, g);
            }
            ok = ok && merge_all(tf, g, [](int, int) { return true; });
        }
        if (ok) {
            c = to_cycle(tf, L.rows[0][0]);
        } else if (s == Strategy::RowMerge) {
            auto path = rotation_extension(g, 200LL * n * n);
            ok = path.has_value();
            if (ok) c.vertices = *path;
        }
        if (!ok) {
            throw PatternFailure(p.type + ": " + to_string(s) + " left a disconnected 2-factor for i=" +
                                 std::to_string(p.i) + " j=" + std::to_string(p.j) + " k=" + std::to_string(p.k));
        }
    }
    c.verified = verify_hamiltonian(g, c);
    if (!c.verified) {
        throw PatternFailure(p.type + ": constructed cycle does not verify for i=" + std::to_string(p.i) +
                             " j=" + std::to_string(p.j) + " k=" + std::to_string(p.k));
    }
    c.winding = winding(L, c);
    return c;
}

bool verify_hamiltonian(const Adjacency& g, const Cycle& c) {
    const std::size_t n = g.size();
    if (c.vertices.size() != n || n < 3) return false;
    std::vector<char> seen(n, 0);
    for (int v : c.vertices) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (std::size_t t = 0; t < n; ++t) {
        if (!has_edge(g, c.vertices[t], c.vertices[(t + 1) % n])) return false;
    }
    return true;
}

bool verify_hamiltonian(const SurfaceMap& m, const Cycle& c) { return verify_hamiltonian(adjacency(m), c); }

long long oracle_budget_from_env() {
    const char* env = std::getenv("DSEM_ORACLE_BUDGET");
    if (!env) return kDefaultOracleBudget;
    try {
        long long b = std::stoll(env);
        return b > 0 ? b : kDefaultOracleBudget;
    } catch (const std::exception&) {
        return kDefaultOracleBudget;
    }
}

namespace {

struct Search {
    const Adjacency& g;
    long long budget;
    long long nodes = 0;
    int n;
    int start = 0;
    std::vector<char> used;
    std::vector<int> avail;  // neighbours that are unvisited or path endpoints
    std::vector<int> path;
    bool exhausted = false;

    Search(const Adjacency& graph, long long b)
        : g(graph), budget(b), n(static_cast<int>(graph.size())), used(n, 0), avail(n, 0) {}

    bool extend() {
        int head = path.back();
        if (static_cast<int>(path.size()) == n) return has_edge(g, head, start);
        for (int w : g[head]) {
            if (used[w]) continue;
            if (++nodes > budget) {
                exhausted = true;
                return false;
            }
            // head becomes interior; its unvisited neighbours lose it
            const bool interior = head != start;
            bool dead = false;
            for (int y : g[head]) {
                if (used[y] || !interior) continue;
                if (--avail[y] < 2 && y != w) dead = true;
            }
            used[w] = 1;
            path.push_back(w);
            if (!dead && avail[w] >= 1 && extend()) return true;
            path.pop_back();
            used[w] = 0;
            for (int y : g[head]) {
                if (!used[y] && interior) ++avail[y];
            }
            if (exhausted) return false;
        }
        return false;
    }
};

}  // namespace

OracleResult brute_force_hamiltonian(const Adjacency& g, long long node_budget) {
    OracleResult r;
    const int n = static_cast<int>(g.size());
    if (n < 3) return r;
    Search s(g, node_budget);
    for (int v = 0; v < n; ++v) s.avail[v] = static_cast<int>(g[v].size());
    s.used[0] = 1;
    s.path.push_back(0);
    bool found = s.extend();
    r.nodes = s.nodes;
    if (found) {
        r.status = OracleStatus::Found;
        r.cycle.vertices = s.path;
        r.cycle.verified = verify_hamiltonian(g, r.cycle);
    } else {
        r.status = s.exhausted ? OracleStatus::BudgetExhausted : OracleStatus::NotFound;
    }
    return r;
}

OracleResult brute_force_hamiltonian(const SurfaceMap& m, long long node_budget) {
    return brute_force_hamiltonian(adjacency(m), node_budget);
}

}  // namespace dsem
