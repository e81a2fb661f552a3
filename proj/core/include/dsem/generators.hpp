#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dsem/catalog.hpp"
#include "dsem/cycle.hpp"
#include "dsem/surface_map.hpp"

namespace dsem {

struct ReprParams {
    std::string type;
    int i = 0;
    int j = 0;
    int k = 0;
    bool operator==(const ReprParams&) const = default;
};

enum class Clause { Ok, BadI, BadJ, TooSmall, BadK };
const char* to_string(Clause c);

struct Admissibility {
    Clause clause = Clause::Ok;
    std::string reason;
    bool ok() const { return clause == Clause::Ok; }
};

Admissibility admissible(const DsemType& t, int i, int j, int k);
Admissibility admissible(const ReprParams& p);

class AdmissibilityError : public std::runtime_error {
public:
    explicit AdmissibilityError(Admissibility a);
    const Admissibility& detail() const { return detail_; }

private:
    Admissibility detail_;
};

/// A pattern table produced an inconsistent gluing.
class GluingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotDivisible : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Point {
    double x = 0;
    double y = 0;
    bool operator==(const Point&) const = default;
};

/// One corner of a face in the unrolled strip. (a, b) counts the translations
/// by the horizontal period and by the top-to-bottom gluing that carry the
/// representative of the vertex to this copy.
struct StripCorner {
    int vertex = 0;
    int a = 0;
    int b = 0;
    Point at;
};

struct Layout {
    int i = 0;
    int j = 0;
    int k = 0;
    int top_offset = 0;                          // top column c is bottom column c + k + top_offset
    std::vector<Point> pos;                      // representative position of each vertex
    std::vector<std::string> labels;
    std::vector<std::vector<int>> rows;          // rows[s][c] = a_{s+1,c+1}
    std::vector<std::vector<StripCorner>> strip; // parallel to SurfaceMap::faces()
    std::map<std::pair<int, int>, WindingPair> edge_shift;

    int top_to_bottom(int col) const;
    int right_to_left(int col) const;
    /// Throws std::out_of_range when (u, v) is not an edge.
    WindingPair shift(int u, int v) const;
};

struct Generated {
    SurfaceMap map;
    Layout layout;
};

long long vertex_count(const DsemType& t, int i, int j);
Generated generate(const ReprParams& p);
/// Builds M(i,j,k) without the admissibility gate. Throws MapException when the
/// glued complex is not a valid map and GluingError on inconsistent lifts.
Generated generate_unchecked(const DsemType& t, int i, int j, int k);
/// Horizontal period of the pattern table, in columns.
int column_period(const DsemType& t);
std::vector<ReprParams> enumerate_admissible(const DsemType& t, int max_vertices);

}  // namespace dsem
