#pragma once

#include <map>
#include <string>
#include <vector>

#include "dsem/face_sequence.hpp"
#include "dsem/surface_map.hpp"

namespace dsem {

/// Which admissibility predicate governs a type.
enum class Rule {
    TriangleStrips,         // [3^6:3^3.4^2]_r
    SquareStrips,           // [3^3.4^2:4^4]_r
    ElongatedSnub1,         // [3^3.4^2:3^2.4.3.4]_1
    ElongatedSnub2,         // [3^3.4^2:3^2.4.3.4]_2
    TriangleSnub,           // [3^6:3^2.4.3.4]
    HexSquare,              // [3.4^2.6:3.6.3.6]_r
    HexTriangleStrips,      // [3^2.6^2:3.6.3.6]
    HexIslands,             // [3^6:3^2.6^2]
    HexZigzag,              // [3^4.6:3^2.6^2]
    SquareHexagonal,        // [3^2.4.3.4:3.4.6.4]
    SnubHexagonal1,         // [3^6:3^4.6]_1
    SnubHexagonal2,         // [3^6:3^4.6]_2
    Dodecagonal,            // [3^6:3^2.4.12]
    TruncatedHexagonal,     // [3.4.3.12:3.12^2]
    TruncatedTrihexagonal,  // [3.4.6.4:4.6.12]
    RhombiHexagonal,        // [3.4^2.6:3.4.6.4]
    ElongatedRhombi,        // [3^3.4^2:3.4.6.4]
};

struct DsemType {
    std::string name;
    FaceSequence fseq_a;
    FaceSequence fseq_b;
    int count_num = 1;  // vertex count = count_num * i * j / count_den
    int count_den = 1;
    int min_degree = 0;
    Rule rule{};

    std::string count_formula() const;
};

const std::vector<DsemType>& catalog();
/// Throws std::out_of_range for unknown names.
const DsemType& find_type(const std::string& name);

struct ClassReport {
    FaceSequence fseq;
    int size = 0;
    bool link_constant = false;          // same link sequence up to rotation and reflection
    bool link_constant_oriented = false; // same link sequence up to rotation only
    std::vector<FaceSequence> link_sequence;
};

struct DsemReport {
    bool pass = false;
    bool classes_match = false;
    std::vector<ClassReport> classes;
    std::vector<std::string> problems;
};

DsemReport verify_dsem(const SurfaceMap& m, const DsemType& t);

}  // namespace dsem
