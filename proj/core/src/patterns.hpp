#pragma once

#include <string>
#include <vector>

namespace dsem::detail {

/// Vertex reference inside one band: lower row (L), upper row (U) or
/// inserted row t (X). Columns are relative to the start of a block.
struct Ref {
    char kind = 'L';
    int row = 0;
    int col = 0;
};

struct BandPattern {
    std::vector<int> xrows;  // inserted vertices per block, one entry per inserted row
    std::vector<std::vector<Ref>> faces;
    double shift = 0;        // drawing offset of the upper row against the lower row
};

struct Pattern {
    std::string type;
    int px = 1;                      // block width in columns
    std::vector<BandPattern> bands;  // band s uses bands[s % bands.size()]
    int (*top_offset)(int j) = nullptr;
};

const Pattern& pattern_for(const std::string& type);
const std::vector<Pattern>& all_patterns();

}  // namespace dsem::detail
