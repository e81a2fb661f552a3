#pragma once

#include <vector>

#include "dsem/generators.hpp"

namespace dsem::fixtures {

struct BoundaryCase {
    ReprParams p;
    Clause expect;
};

// Just-inside and just-outside parameters for each admissibility lemma.
inline const std::vector<BoundaryCase>& boundary_cases() {
    static const std::vector<BoundaryCase> cases = {
        {{"[3^6:3^3.4^2]_1", 3, 3, 0}, Clause::Ok},
        {{"[3^6:3^3.4^2]_1", 3, 2, 0}, Clause::BadJ},
        {{"[3^6:3^3.4^2]_1", 2, 3, 0}, Clause::TooSmall},
        {{"[3^6:3^3.4^2]_2", 3, 4, 2}, Clause::Ok},
        {{"[3^6:3^3.4^2]_2", 3, 3, 0}, Clause::BadJ},
        {{"[3^3.4^2:4^4]_1", 3, 3, 1}, Clause::Ok},
        {{"[3^3.4^2:4^4]_1", 2, 3, 1}, Clause::TooSmall},
        {{"[3^3.4^2:4^4]_2", 4, 4, 3}, Clause::Ok},
        {{"[3^3.4^2:4^4]_2", 4, 6, 3}, Clause::BadJ},
        {{"[3^3.4^2:3^2.4.3.4]_1", 5, 2, 3}, Clause::Ok},
        {{"[3^3.4^2:3^2.4.3.4]_1", 5, 2, 0}, Clause::BadK},
        {{"[3^3.4^2:3^2.4.3.4]_1", 5, 4, 0}, Clause::Ok},
        {{"[3^3.4^2:3^2.4.3.4]_1", 4, 2, 3}, Clause::BadI},
        {{"[3^3.4^2:3^2.4.3.4]_2", 8, 2, 4}, Clause::Ok},
        {{"[3^3.4^2:3^2.4.3.4]_2", 4, 2, 0}, Clause::TooSmall},
        {{"[3^3.4^2:3^2.4.3.4]_2", 8, 2, 0}, Clause::BadK},
        {{"[3^6:3^2.4.3.4]", 9, 2, 5}, Clause::Ok},
        {{"[3^6:3^2.4.3.4]", 9, 2, 2}, Clause::BadK},
        {{"[3^6:3^2.4.3.4]", 6, 2, 2}, Clause::TooSmall},
        {{"[3.4^2.6:3.6.3.6]_1", 6, 2, 4}, Clause::Ok},
        {{"[3.4^2.6:3.6.3.6]_1", 6, 2, 3}, Clause::BadK},
        {{"[3.4^2.6:3.6.3.6]_1", 8, 2, 6}, Clause::Ok},
        {{"[3.4^2.6:3.6.3.6]_1", 8, 2, 7}, Clause::BadK},
        {{"[3.4^2.6:3.6.3.6]_2", 6, 3, 0}, Clause::BadJ},
        {{"[3^2.6^2:3.6.3.6]", 10, 1, 5}, Clause::Ok},
        {{"[3^2.6^2:3.6.3.6]", 8, 1, 5}, Clause::TooSmall},
        {{"[3^2.6^2:3.6.3.6]", 12, 1, 7}, Clause::BadK},
        {{"[3^2.6^2:3.6.3.6]", 6, 2, 2}, Clause::Ok},
        {{"[3^2.6^2:3.6.3.6]", 6, 2, 0}, Clause::BadK},
        {{"[3^6:3^2.6^2]", 9, 1, 6}, Clause::Ok},
        {{"[3^6:3^2.6^2]", 9, 1, 3}, Clause::BadK},
        {{"[3^6:3^2.6^2]", 6, 1, 3}, Clause::TooSmall},
        {{"[3^4.6:3^2.6^2]", 6, 2, 3}, Clause::Ok},
        {{"[3^4.6:3^2.6^2]", 6, 2, 1}, Clause::BadK},
        {{"[3^2.4.3.4:3.4.6.4]", 4, 2, 0}, Clause::Ok},
        {{"[3^2.4.3.4:3.4.6.4]", 4, 2, 2}, Clause::BadK},
        {{"[3^6:3^4.6]_1", 4, 3, 1}, Clause::Ok},
        {{"[3^6:3^4.6]_1", 4, 2, 1}, Clause::BadJ},
        {{"[3^6:3^4.6]_2", 9, 2, 4}, Clause::Ok},
        {{"[3^6:3^4.6]_2", 9, 2, 3}, Clause::BadK},
        {{"[3^6:3^2.4.12]", 15, 2, 10}, Clause::Ok},
        {{"[3^6:3^2.4.12]", 15, 2, 5}, Clause::BadK},
        {{"[3^6:3^2.4.12]", 10, 2, 5}, Clause::TooSmall},
        {{"[3.4.3.12:3.12^2]", 24, 1, 9}, Clause::Ok},
        {{"[3.4.3.12:3.12^2]", 24, 1, 10}, Clause::BadK},
        {{"[3.4.3.12:3.12^2]", 18, 1, 9}, Clause::TooSmall},
        {{"[3.4.6.4:4.6.12]", 12, 2, 8}, Clause::Ok},
        {{"[3.4.6.4:4.6.12]", 12, 2, 5}, Clause::BadK},
        {{"[3.4^2.6:3.4.6.4]", 5, 2, 0}, Clause::Ok},
        {{"[3.4^2.6:3.4.6.4]", 5, 2, 1}, Clause::BadK},
        {{"[3^3.4^2:3.4.6.4]", 4, 3, 3}, Clause::Ok},
        {{"[3^3.4^2:3.4.6.4]", 4, 3, 1}, Clause::BadK},
    };
    return cases;
}

}  // namespace dsem::fixtures
