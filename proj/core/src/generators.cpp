#include "dsem/generators.hpp"

#include <algorithm>
#include <cmath>

#include "patterns.hpp"

namespace dsem {

const char* to_string(Clause c) {
    switch (c) {
        case Clause::Ok: return "Ok";
        case Clause::BadI: return "BadI";
        case Clause::BadJ: return "BadJ";
        case Clause::TooSmall: return "TooSmall";
        case Clause::BadK: return "BadK";
    }
    return "Unknown";
}

AdmissibilityError::AdmissibilityError(Admissibility a)
    : std::runtime_error(std::string(to_string(a.clause)) + ": " + a.reason), detail_(std::move(a)) {}

namespace {

Admissibility reject(Clause c, std::string why) { return {c, std::move(why)}; }

// k = step*r + offset with lo <= r and step*r < bound, i.e. r < bound/step.
bool progression(int k, int step, int offset, int lo, long long bound) {
    if (k < offset || (k - offset) % step != 0) return false;
    long long r = (k - offset) / step;
    return r >= lo && step * r < bound;
}

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
int mod(int a, int b) { return ((a % b) + b) % b; }

}  // namespace

Admissibility admissible(const DsemType& t, int i, int j, int k) {
    if (i <= 0) return reject(Clause::BadI, "i must be positive");
    if (j <= 0) return reject(Clause::BadJ, "j must be positive");
    const long long ij = static_cast<long long>(i) * j;

    auto i_mult = [&](int m) {
        return i % m == 0 ? Admissibility{} : reject(Clause::BadI, "i must be a multiple of " + std::to_string(m));
    };
    auto j_mult = [&](int m) {
        return j % m == 0 ? Admissibility{} : reject(Clause::BadJ, "j must be a multiple of " + std::to_string(m));
    };
    auto i_floor = [&](int lo, const char* when) {
        return i >= lo ? Admissibility{}
                       : reject(Clause::TooSmall, "i must be at least " + std::to_string(lo) + when);
    };
    auto n_floor = [&](long long lo) {
        long long n = ij * t.count_num / t.count_den;
        return n >= lo ? Admissibility{}
                       : reject(Clause::TooSmall, t.count_formula() + " = " + std::to_string(n) + " is below " +
                                                      std::to_string(lo));
    };
    auto k_in = [&](bool member, const std::string& set) {
        if (k >= 0 && k < i && member) return Admissibility{};
        return reject(Clause::BadK, "k=" + std::to_string(k) + " not in " + set);
    };

    std::vector<Admissibility> clauses;
    auto first_failure = [&]() {
        for (auto& c : clauses) {
            if (!c.ok()) return c;
        }
        return Admissibility{};
    };

    switch (t.rule) {
        case Rule::TriangleStrips:
        case Rule::SquareStrips: {
            const int period = t.name.back() == '1' ? 3 : 4;
            clauses = {j_mult(period), i_floor(3, ""), n_floor(3LL * period), k_in(k >= 0 && k < i, "[0, i)")};
            break;
        }
        case Rule::ElongatedSnub1:
            clauses = {i_mult(5), j_mult(2), n_floor(12),
                       j % 4 == 2 ? k_in(k % 5 == 3, "{5r+3}") : k_in(k % 5 == 0, "{5r}")};
            break;
        case Rule::ElongatedSnub2:
            clauses = {j_mult(2), i_mult(4), j == 2 ? i_floor(8, " for j=2") : i_floor(4, " for j>=4"), n_floor(16),
                       j == 2 ? k_in(k % 4 == 0 && k > 0, "{4r: 0<r<i/4}") : k_in(k % 4 == 0, "{4r}")};
            break;
        case Rule::TriangleSnub:
            clauses = {j_mult(2), i_mult(3), j == 2 ? i_floor(9, " for j=2") : i_floor(6, " for j>=4"), n_floor(21)};
            if (j == 2) {
                clauses.push_back(k_in(progression(k, 3, 2, 1, i - 3), "{3r+2: 0<r<(i-3)/3}"));
            } else if (j % 4 == 2) {
                clauses.push_back(k_in(k % 3 == 2, "{3r+2}"));
            } else {
                clauses.push_back(k_in(k % 3 == 0, "{3r}"));
            }
            break;
        case Rule::HexSquare:
            clauses = {i_mult(2), j_mult(2), i_floor(6, ""), n_floor(15),
                       j == 2 ? k_in(k >= 4 && k <= i - 2, "[4, i-2]") : k_in(true, "[0, i)")};
            break;
        case Rule::HexTriangleStrips:
            clauses = {i_mult(2), n_floor(15), j == 1 ? i_floor(10, " for j=1") : i_floor(6, " for j>=2")};
            if (j == 1) {
                const bool excluded = 2 * (k - 5) == i - 8;  // k = (i-8)/2 + 5
                clauses.push_back(k_in(progression(k, 2, 5, 0, i - 8) && !excluded,
                                       "{2r+5: 0<=r<(i-8)/2} minus {(i-8)/2+5}"));
            } else if (j == 2) {
                clauses.push_back(k_in(k % 2 == 0 && k > 0, "{2r: 0<r<i/2}"));
            } else if (j % 2 == 1) {
                clauses.push_back(k_in(k % 2 == 1, "{2r+1}"));
            } else {
                clauses.push_back(k_in(k % 2 == 0, "{2r}"));
            }
            break;
        case Rule::HexIslands:
            clauses = {i_mult(3), j == 1 ? i_floor(9, " for j=1") : i_floor(6, " for j>1"),
                       j == 1 ? k_in(progression(k, 3, 0, 2, i), "{3r: 1<r<i/3}") : k_in(k % 3 == 0, "{3r}")};
            break;
        case Rule::HexZigzag:
            clauses = {i_mult(2), j_mult(2), i_floor(6, ""), n_floor(12),
                       j == 2 ? k_in(k % 2 == 1 && k >= 3 && k <= i - 3, "{2r+3: 0<=r<=(i-6)/2}")
                              : k_in(k % 2 == 1, "{2r+1}")};
            break;
        case Rule::SquareHexagonal:
            clauses = {j_mult(2), i_mult(4), n_floor(12), k_in(k % 4 == 0, "{4r}")};
            break;
        case Rule::SnubHexagonal1:
            clauses = {j_mult(3), i_mult(4), n_floor(12), k_in(k % 4 == 1, "{4r+1}")};
            break;
        case Rule::SnubHexagonal2:
            clauses = {j_mult(2), i_mult(3), j == 2 ? i_floor(9, " for j=2") : i_floor(6, " for j>=4"), n_floor(24),
                       j == 2 ? k_in(k >= 4 && k <= i - 1, "[4, i-1]") : k_in(true, "[0, i)")};
            break;
        case Rule::Dodecagonal:
            clauses = {j_mult(2), i_mult(5), j == 2 ? i_floor(15, " for j=2") : i_floor(10, " for j>=4"),
                       n_floor(42),
                       j == 2 ? k_in(progression(k, 5, 0, 2, i), "{5r: 1<r<i/5}") : k_in(k % 5 == 0, "{5r}")};
            break;
        case Rule::TruncatedHexagonal:
            clauses = {i_mult(6),
                       j == 1   ? i_floor(24, " for j=1")
                       : j == 2 ? i_floor(18, " for j=2")
                                : i_floor(12, " for j>2"),
                       n_floor(32)};
            if (j == 1) {
                clauses.push_back(k_in(progression(k, 6, 3, 1, i - 6), "{6r+3: 1<=r<(i-6)/6}"));
            } else if (j == 2) {
                clauses.push_back(k_in(progression(k, 6, 5, 1, i - 12), "{6r+5: 1<=r<(i-12)/6}"));
            } else if (j % 2 == 1) {
                clauses.push_back(k_in(k % 6 == 3, "{6r+3}"));
            } else {
                clauses.push_back(k_in(k % 6 == 5, "{6r+5}"));
            }
            break;
        case Rule::TruncatedTrihexagonal:
            clauses = {j_mult(2), i_mult(6), i_floor(12, ""), n_floor(36),
                       j == 2 ? k_in(progression(k, 3, 2, 2, i - 3), "{3r+2: 1<r<(i-3)/3}")
                              : k_in(k % 3 == 2, "{3r+2}")};
            break;
        case Rule::RhombiHexagonal:
            clauses = {j_mult(2), i_mult(5), i_floor(5, ""), n_floor(18), k_in(k % 5 == 0, "{5r}")};
            break;
        case Rule::ElongatedRhombi:
            clauses = {j_mult(3), i_mult(4), i_floor(4, ""), n_floor(12), k_in(k % 4 == 3, "{4r+3}")};
            break;
    }
    return first_failure();
}

Admissibility admissible(const ReprParams& p) { return admissible(find_type(p.type), p.i, p.j, p.k); }

long long vertex_count(const DsemType& t, int i, int j) {
    long long prod = static_cast<long long>(i) * j * t.count_num;
    if (i <= 0 || j <= 0 || prod % t.count_den != 0) {
        throw NotDivisible(t.count_formula() + " is not an integer for i=" + std::to_string(i) +
                           ", j=" + std::to_string(j));
    }
    return prod / t.count_den;
}

int Layout::top_to_bottom(int col) const { return mod(col + k + top_offset, i); }

int Layout::right_to_left(int col) const { return mod(col, i); }

WindingPair Layout::shift(int u, int v) const {
    auto it = edge_shift.find({u, v});
    if (it == edge_shift.end()) {
        throw std::out_of_range("no edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    return it->second;
}

int column_period(const DsemType& t) { return detail::pattern_for(t.name).px; }

Generated generate_unchecked(const DsemType& t, int i, int j, int k) {
    const detail::Pattern& pat = detail::pattern_for(t.name);
    if (i <= 0 || j <= 0 || i % pat.px != 0) {
        throw GluingError("i=" + std::to_string(i) + " is not a multiple of the block width " +
                          std::to_string(pat.px));
    }
    const int nb = i / pat.px;
    const int py = static_cast<int>(pat.bands.size());
    const int top_offset = pat.top_offset ? pat.top_offset(j) : 0;

    // Vertex numbering: rows first, then the inserted rows band by band.
    std::vector<std::vector<int>> xbase(j);
    std::vector<std::vector<int>> xcount(j);
    int next = i * j;
    std::vector<std::string> labels(static_cast<std::size_t>(next));
    for (int s = 0; s < j; ++s) {
        for (int c = 0; c < i; ++c) {
            labels[s * i + c] = "a_{" + std::to_string(s + 1) + "," + std::to_string(c + 1) + "}";
        }
    }
    int xrow_global = 0;
    for (int s = 0; s < j; ++s) {
        for (int per_block : pat.bands[s % py].xrows) {
            xbase[s].push_back(next);
            xcount[s].push_back(per_block * nb);
            ++xrow_global;
            for (int c = 0; c < per_block * nb; ++c) {
                labels.push_back("x_{" + std::to_string(xrow_global) + "," + std::to_string(c + 1) + "}");
            }
            next += per_block * nb;
        }
    }
    const int n = next;

    std::vector<double> row_x(j + 1, 0.0);
    for (int s = 0; s < j; ++s) row_x[s + 1] = row_x[s] + pat.bands[s % py].shift;

    std::vector<Face> faces;
    std::vector<std::vector<StripCorner>> strip;
    std::vector<char> is_x(n, 0);
    for (int s = 0; s < j; ++s) {
        const detail::BandPattern& bp = pat.bands[s % py];
        for (int blk = 0; blk < nb; ++blk) {
            for (const auto& fp : bp.faces) {
                Face f;
                std::vector<StripCorner> corners;
                for (const detail::Ref& r : fp) {
                    StripCorner sc;
                    if (r.kind == 'X') {
                        int idx = blk * bp.xrows.at(r.row) + r.col;
                        int cnt = xcount[s][r.row];
                        sc.vertex = xbase[s][r.row] + mod(idx, cnt);
                        sc.a = floor_div(idx, cnt);
                        is_x[sc.vertex] = 1;
                    } else {
                        int col = blk * pat.px + r.col;
                        int row = s + (r.kind == 'U' ? 1 : 0);
                        sc.at = {col + row_x[row], static_cast<double>(row)};
                        if (row == j) {
                            col += k + top_offset;
                            row = 0;
                            sc.b = 1;
                        }
                        sc.vertex = row * i + mod(col, i);
                        sc.a = floor_div(col, i);
                    }
                    f.push_back(sc.vertex);
                    corners.push_back(sc);
                }
                faces.push_back(std::move(f));
                strip.push_back(std::move(corners));
            }
        }
    }

    SurfaceMap m = SurfaceMap::from_faces(faces);
    if (m.vertex_count() != n) throw GluingError("vertex numbering has gaps");
    for (std::size_t f = 0; f < strip.size(); ++f) {
        if (m.faces()[f].front() != strip[f].front().vertex || m.faces()[f] != faces[f]) {
            std::reverse(strip[f].begin(), strip[f].end());
        }
    }

    Layout L;
    L.i = i;
    L.j = j;
    L.k = k;
    L.top_offset = top_offset;
    L.labels = std::move(labels);
    L.rows.assign(j, std::vector<int>(i));
    for (int s = 0; s < j; ++s) {
        for (int c = 0; c < i; ++c) L.rows[s][c] = s * i + c;
    }

    for (const auto& corners : strip) {
        const std::size_t len = corners.size();
        for (std::size_t t = 0; t < len; ++t) {
            const StripCorner& u = corners[t];
            const StripCorner& v = corners[(t + 1) % len];
            WindingPair w{v.a - u.a, v.b - u.b};
            auto [it, fresh] = L.edge_shift.emplace(std::make_pair(u.vertex, v.vertex), w);
            if (!fresh && !(it->second == w)) throw GluingError("edge lifts disagree");
            WindingPair back{-w.wx, -w.wy};
            auto [it2, fresh2] = L.edge_shift.emplace(std::make_pair(v.vertex, u.vertex), back);
            if (!fresh2 && !(it2->second == back)) {
                throw GluingError("edge " + L.labels[u.vertex] + "-" + L.labels[v.vertex] + " has inconsistent lifts");
            }
        }
    }

    // Representative positions: rows are fixed, inserted vertices are relaxed
    // to the average of their strip neighbours.
    L.pos.assign(n, {});
    for (int s = 0; s < j; ++s) {
        for (int c = 0; c < i; ++c) L.pos[s * i + c] = {c + row_x[s], static_cast<double>(s)};
    }
    for (int s = 0; s < j; ++s) {
        int total = static_cast<int>(xbase[s].size());
        for (int t = 0; t < total; ++t) {
            for (int c = 0; c < xcount[s][t]; ++c) {
                double frac = (c + 0.5) / xcount[s][t];
                L.pos[xbase[s][t] + c] = {frac * i + row_x[s] + 0.5 * pat.bands[s % py].shift,
                                          s + (t + 1.0) / (total + 1.0)};
            }
        }
    }
    auto corner_point = [&](const StripCorner& sc) -> Point {
        if (!is_x[sc.vertex]) return sc.at;
        return {L.pos[sc.vertex].x + sc.a * static_cast<double>(i), L.pos[sc.vertex].y};
    };
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<Point> sum(n);
        std::vector<int> cnt(n, 0);
        for (const auto& corners : strip) {
            const std::size_t len = corners.size();
            for (std::size_t t = 0; t < len; ++t) {
                const StripCorner& me = corners[t];
                if (!is_x[me.vertex]) continue;
                for (std::size_t d : {len - 1, std::size_t{1}}) {
                    Point q = corner_point(corners[(t + d) % len]);
                    sum[me.vertex].x += q.x - me.a * static_cast<double>(i);
                    sum[me.vertex].y += q.y;
                    ++cnt[me.vertex];
                }
            }
        }
        for (int v = 0; v < n; ++v) {
            if (is_x[v] && cnt[v] > 0) L.pos[v] = {sum[v].x / cnt[v], sum[v].y / cnt[v]};
        }
    }
    for (auto& corners : strip) {
        for (auto& sc : corners) {
            sc.at = corner_point(sc);
            sc.at.x = std::round(sc.at.x * 1e6) / 1e6;
            sc.at.y = std::round(sc.at.y * 1e6) / 1e6;
        }
    }
    for (auto& p : L.pos) {
        p.x = std::round(p.x * 1e6) / 1e6;
        p.y = std::round(p.y * 1e6) / 1e6;
    }
    L.strip = std::move(strip);

    long long expect = static_cast<long long>(i) * j * t.count_num;
    if (expect % t.count_den != 0 || expect / t.count_den != n) {
        throw GluingError("pattern yields " + std::to_string(n) + " vertices, formula " + t.count_formula() +
                          " differs");
    }
    return {std::move(m), std::move(L)};
}

Generated generate(const ReprParams& p) {
    const DsemType& t = find_type(p.type);
    Admissibility a = admissible(t, p.i, p.j, p.k);
    if (!a.ok()) throw AdmissibilityError(a);
    return generate_unchecked(t, p.i, p.j, p.k);
}

std::vector<ReprParams> enumerate_admissible(const DsemType& t, int max_vertices) {
    std::vector<ReprParams> out;
    for (int i = 1; i <= max_vertices; ++i) {
        for (int j = 1; static_cast<long long>(i) * j * t.count_num <= static_cast<long long>(max_vertices) * t.count_den;
             ++j) {
            for (int k = 0; k < i; ++k) {
                if (admissible(t, i, j, k).ok()) out.push_back({t.name, i, j, k});
            }
        }
    }
    return out;
}

}  // namespace dsem
