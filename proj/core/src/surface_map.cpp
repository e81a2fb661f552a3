#include "dsem/surface_map.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace dsem {

const char* to_string(MapError e) {
    switch (e) {
        case MapError::BadInput: return "BadInput";
        case MapError::NotClosed: return "NotClosed";
        case MapError::Disconnected: return "Disconnected";
        case MapError::NonSimple: return "NonSimple";
        case MapError::BadIncidence: return "BadIncidence";
        case MapError::NonOrientable: return "NonOrientable";
        case MapError::LinkNotCycle: return "LinkNotCycle";
    }
    return "Unknown";
}

MapException::MapException(MapError code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

namespace {

[[noreturn]] void fail(MapError e, const std::string& msg) { throw MapException(e, msg); }

struct EdgeUse {
    int face;
    int dir;  // +1 when the face runs from the smaller to the larger endpoint
};

}  // namespace

SurfaceMap SurfaceMap::from_faces(std::vector<Face> faces) {
    if (faces.empty()) fail(MapError::BadInput, "no faces");
    int maxv = -1;
    for (const Face& f : faces) {
        if (f.size() < 3) fail(MapError::BadInput, "face with fewer than 3 vertices");
        for (int v : f) {
            if (v < 0) fail(MapError::BadInput, "negative vertex id");
            maxv = std::max(maxv, v);
        }
        Face sorted = f;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            fail(MapError::NonSimple, "face repeats a vertex");
        }
    }
    const int n = maxv + 1;
    const int nf = static_cast<int>(faces.size());

    std::map<Edge, std::vector<EdgeUse>> uses;
    for (int fi = 0; fi < nf; ++fi) {
        const Face& f = faces[fi];
        for (std::size_t t = 0; t < f.size(); ++t) {
            int a = f[t], b = f[(t + 1) % f.size()];
            uses[{std::min(a, b), std::max(a, b)}].push_back({fi, a < b ? 1 : -1});
        }
    }
    for (const auto& [e, u] : uses) {
        if (u.size() != 2) {
            fail(MapError::NotClosed, "edge {" + std::to_string(e.first) + "," +
                                          std::to_string(e.second) + "} lies on " +
                                          std::to_string(u.size()) + " faces");
        }
        if (u[0].face == u[1].face) fail(MapError::NonSimple, "face meets itself along an edge");
    }

    // Coherent orientation: flip faces so every edge is traversed once each way.
    std::vector<std::vector<std::pair<int, int>>> fadj(nf);
    for (const auto& [e, u] : uses) {
        int same = (u[0].dir == u[1].dir) ? 1 : 0;
        fadj[u[0].face].push_back({u[1].face, same});
        fadj[u[1].face].push_back({u[0].face, same});
    }
    std::vector<int> flip(nf, -1);
    for (int s = 0; s < nf; ++s) {
        if (flip[s] != -1) continue;
        flip[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int f = q.front();
            q.pop();
            for (auto [g, same] : fadj[f]) {
                int want = flip[f] ^ same;
                if (flip[g] == -1) {
                    flip[g] = want;
                    q.push(g);
                } else if (flip[g] != want) {
                    fail(MapError::NonOrientable, "faces cannot be oriented coherently");
                }
            }
        }
    }
    for (int fi = 0; fi < nf; ++fi) {
        if (flip[fi]) std::reverse(faces[fi].begin(), faces[fi].end());
    }

    struct Corner {
        int face, prev, next;
    };
    std::vector<std::vector<Corner>> corners(n);
    for (int fi = 0; fi < nf; ++fi) {
        const Face& f = faces[fi];
        const std::size_t len = f.size();
        for (std::size_t t = 0; t < len; ++t) {
            corners[f[t]].push_back({fi, f[(t + len - 1) % len], f[(t + 1) % len]});
        }
    }

    SurfaceMap m;
    m.n_ = n;
    m.rotation_.assign(n, {});
    m.face_rotation_.assign(n, {});
    m.sorted_nbrs_.assign(n, {});
    for (int v = 0; v < n; ++v) {
        const auto& cs = corners[v];
        if (cs.empty()) fail(MapError::Disconnected, "vertex " + std::to_string(v) + " lies on no face");
        std::vector<char> used(cs.size(), 0);
        std::size_t cur = 0;
        for (std::size_t step = 0; step < cs.size(); ++step) {
            if (used[cur]) break;
            used[cur] = 1;
            m.rotation_[v].push_back(cs[cur].next);
            m.face_rotation_[v].push_back(cs[cur].face);
            std::size_t nxt = cs.size();
            for (std::size_t t = 0; t < cs.size(); ++t) {
                if (cs[t].next == cs[cur].prev) nxt = t;
            }
            if (nxt == cs.size()) fail(MapError::NotClosed, "open rotation at " + std::to_string(v));
            cur = nxt;
        }
        if (m.rotation_[v].size() != cs.size()) {
            fail(MapError::BadIncidence, "vertex " + std::to_string(v) + " is pinched");
        }
        if (cs.size() < 3) fail(MapError::NonSimple, "vertex " + std::to_string(v) + " has degree below 3");
        m.sorted_nbrs_[v] = m.rotation_[v];
        std::sort(m.sorted_nbrs_[v].begin(), m.sorted_nbrs_[v].end());
        if (std::adjacent_find(m.sorted_nbrs_[v].begin(), m.sorted_nbrs_[v].end()) !=
            m.sorted_nbrs_[v].end()) {
            fail(MapError::NonSimple, "parallel edges at " + std::to_string(v));
        }
    }

    // Two faces may share nothing, one vertex, or one edge.
    std::map<std::pair<int, int>, std::vector<int>> common;
    for (int v = 0; v < n; ++v) {
        const auto& fr = m.face_rotation_[v];
        for (std::size_t a = 0; a < fr.size(); ++a) {
            for (std::size_t b = a + 1; b < fr.size(); ++b) {
                common[{std::min(fr[a], fr[b]), std::max(fr[a], fr[b])}].push_back(v);
            }
        }
    }
    for (const auto& [fg, vs] : common) {
        if (vs.size() < 2) continue;
        bool edge = false;
        if (vs.size() == 2) {
            auto it = uses.find({std::min(vs[0], vs[1]), std::max(vs[0], vs[1])});
            edge = it != uses.end() &&
                   ((it->second[0].face == fg.first && it->second[1].face == fg.second) ||
                    (it->second[0].face == fg.second && it->second[1].face == fg.first));
        }
        if (!edge) {
            fail(MapError::BadIncidence, "faces " + std::to_string(fg.first) + " and " +
                                             std::to_string(fg.second) + " meet in " +
                                             std::to_string(vs.size()) + " vertices");
        }
    }

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [e, u] : uses) {
        m.edges_.push_back(e);
        parent[find(e.first)] = find(e.second);
    }
    for (int v = 1; v < n; ++v) {
        if (find(v) != find(0)) fail(MapError::Disconnected, "graph is not connected");
    }
    m.faces_ = std::move(faces);
    return m;
}

bool SurfaceMap::adjacent(int u, int v) const {
    const auto& nb = sorted_nbrs_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

int SurfaceMap::min_degree() const {
    int best = n_ > 0 ? degree(0) : 0;
    for (int v = 1; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

SurfaceMap build_from_faces(std::vector<Face> faces) { return SurfaceMap::from_faces(std::move(faces)); }

FaceSequence face_sequence(const SurfaceMap& m, int v) {
    std::vector<int> sizes;
    for (int f : m.face_rotation(v)) sizes.push_back(static_cast<int>(m.faces()[f].size()));
    return FaceSequence(sizes);
}

Cycle link(const SurfaceMap& m, int v) {
    Cycle c;
    for (int fi : m.face_rotation(v)) {
        const Face& f = m.faces()[fi];
        const std::size_t len = f.size();
        std::size_t p = static_cast<std::size_t>(std::find(f.begin(), f.end(), v) - f.begin());
        for (std::size_t t = 1; t + 1 < len; ++t) c.vertices.push_back(f[(p + t) % len]);
    }
    std::vector<int> sorted = c.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
        std::binary_search(sorted.begin(), sorted.end(), v)) {
        throw MapException(MapError::LinkNotCycle, "link of " + std::to_string(v) + " is not a cycle");
    }
    c.verified = true;
    return c;
}

std::vector<FaceSequence> link_face_sequences(const SurfaceMap& m, int v) {
    std::vector<FaceSequence> out;
    for (int w : link(m, v).vertices) out.push_back(face_sequence(m, w));
    return out;
}

int euler_characteristic(const SurfaceMap& m) {
    return m.vertex_count() - m.edge_count() + m.face_count();
}

int degree(const SurfaceMap& m, int v) { return m.degree(v); }

std::map<FaceSequence, std::vector<int>> classify_vertices(const SurfaceMap& m) {
    std::map<FaceSequence, std::vector<int>> out;
    for (int v = 0; v < m.vertex_count(); ++v) out[face_sequence(m, v)].push_back(v);
    return out;
}

}  // namespace dsem
