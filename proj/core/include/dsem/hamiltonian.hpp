#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "dsem/connectivity.hpp"
#include "dsem/cycle.hpp"
#include "dsem/generators.hpp"
#include "dsem/surface_map.hpp"

namespace dsem {

/// A constructed sequence failed verification.
class PatternFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Strategy { QuadReduction, Concatenation, RowMerge };
const char* to_string(Strategy s);
Strategy strategy_for(const DsemType& t, int j);

/// Spanning [4^4] subgraph made of the row edges and one rung per row vertex.
struct QuadGrid {
    std::vector<int> rung_offset;  // rung_offset[s]: a_{s,c} ~ upper row column c + offset
    std::vector<Face> faces;
    bool degree_four = false;
    bool all_quads = false;
    bool uniform() const { return degree_four && all_quads; }
};

std::optional<QuadGrid> quad_reduction(const SurfaceMap& m, const Layout& layout);

Cycle construct_hamiltonian(const ReprParams& p, const SurfaceMap& m, const Layout& layout);

bool verify_hamiltonian(const Adjacency& g, const Cycle& c);
bool verify_hamiltonian(const SurfaceMap& m, const Cycle& c);

enum class OracleStatus { Found, NotFound, BudgetExhausted };
const char* to_string(OracleStatus s);

struct OracleResult {
    OracleStatus status = OracleStatus::NotFound;
    Cycle cycle;
    long long nodes = 0;
};

constexpr long long kDefaultOracleBudget = 100'000'000;
/// kDefaultOracleBudget unless DSEM_ORACLE_BUDGET holds a positive integer.
long long oracle_budget_from_env();

OracleResult brute_force_hamiltonian(const Adjacency& g, long long node_budget);
OracleResult brute_force_hamiltonian(const SurfaceMap& m, long long node_budget);

}  // namespace dsem
