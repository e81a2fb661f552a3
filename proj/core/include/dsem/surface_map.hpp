#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dsem/cycle.hpp"
#include "dsem/face_sequence.hpp"

namespace dsem {

using Face = std::vector<int>;
using Edge = std::pair<int, int>;

enum class MapError {
    BadInput,
    NotClosed,
    Disconnected,
    NonSimple,
    BadIncidence,
    NonOrientable,
    LinkNotCycle,
};

const char* to_string(MapError e);

class MapException : public std::runtime_error {
public:
    MapException(MapError code, const std::string& what);
    MapError code() const { return code_; }

private:
    MapError code_;
};

/// Polygonal map on a closed orientable surface. Faces are the only stored data;
/// edges, neighbour lists and rotations are derived once at construction.
class SurfaceMap {
public:
    /// Validates the face list and derives the incidence structure. Throws MapException.
    static SurfaceMap from_faces(std::vector<Face> faces);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }

    /// Faces, coherently oriented.
    const std::vector<Face>& faces() const { return faces_; }
    /// Undirected edges (u < v), sorted.
    const std::vector<Edge>& edges() const { return edges_; }
    /// Neighbours of v in rotation order.
    const std::vector<int>& rotation(int v) const { return rotation_.at(v); }
    /// face_rotation(v)[t] is the face between rotation(v)[t] and rotation(v)[t+1].
    const std::vector<int>& face_rotation(int v) const { return face_rotation_.at(v); }
    /// Neighbours of v in ascending order.
    const std::vector<int>& neighbors(int v) const { return sorted_nbrs_.at(v); }
    bool adjacent(int u, int v) const;
    int degree(int v) const { return static_cast<int>(rotation_.at(v).size()); }
    int min_degree() const;

private:
    int n_ = 0;
    std::vector<Face> faces_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> rotation_;
    std::vector<std::vector<int>> face_rotation_;
    std::vector<std::vector<int>> sorted_nbrs_;
};

SurfaceMap build_from_faces(std::vector<Face> faces);

FaceSequence face_sequence(const SurfaceMap& m, int v);
Cycle link(const SurfaceMap& m, int v);
std::vector<FaceSequence> link_face_sequences(const SurfaceMap& m, int v);
int euler_characteristic(const SurfaceMap& m);
int degree(const SurfaceMap& m, int v);
std::map<FaceSequence, std::vector<int>> classify_vertices(const SurfaceMap& m);

}  // namespace dsem
