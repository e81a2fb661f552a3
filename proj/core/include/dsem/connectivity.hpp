#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "dsem/cycle.hpp"
#include "dsem/generators.hpp"
#include "dsem/surface_map.hpp"

namespace dsem {

/// Plain simple graph, adj[v] sorted ascending.
using Adjacency = std::vector<std::vector<int>>;

Adjacency adjacency(const SurfaceMap& m);
Adjacency adjacency_from_edges(int n, const std::vector<Edge>& edges);

/// Maximum number of internally vertex-disjoint u-v paths.
int independent_paths(const Adjacency& g, int u, int v);
int independent_paths(const SurfaceMap& m, int u, int v);

int vertex_connectivity(const Adjacency& g);
int vertex_connectivity(const SurfaceMap& m);

class EdgeNotInMap : public std::invalid_argument {
public:
    EdgeNotInMap(int u, int v);
    int u, v;
};

WindingPair winding(const Layout& layout, const Cycle& c);
bool is_contractible(const Layout& layout, const Cycle& c);

/// Row cycle Q_{s+1} of the representation.
Cycle row_cycle(const Layout& layout, int s);
/// A shortest cycle crossing the top seam an odd number of times.
Cycle cutting_cycle(const SurfaceMap& m, const Layout& layout);

struct ConjectureReport {
    int kappa = 0;
    int min_degree = 0;
    bool hamiltonian = false;
    bool kappa_is_min_degree = false;
    bool in_scope = false;   // 4-connected
    bool consistent = false; // not a counterexample
    std::string note;
};

ConjectureReport check_conjecture_instance(const Adjacency& g, bool ham_found);
ConjectureReport check_conjecture_instance(const SurfaceMap& m, bool ham_found);

}  // namespace dsem
