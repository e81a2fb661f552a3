#pragma once

#include <optional>
#include <vector>

namespace dsem {

/// Signed seam crossings of a closed walk on the torus.
struct WindingPair {
    int wx = 0;
    int wy = 0;
    bool operator==(const WindingPair&) const = default;
    bool is_zero() const { return wx == 0 && wy == 0; }
};

/// Ordered vertex sequence, closed by the edge from the last vertex back to the first.
struct Cycle {
    std::vector<int> vertices;
    bool verified = false;
    std::optional<WindingPair> winding;
};

}  // namespace dsem
