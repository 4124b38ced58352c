#ifndef EQC_BOUNDS_HPP
#define EQC_BOUNDS_HPP

#include <algorithm>
#include <vector>

#include "eqc/coloring.hpp"
#include "eqc/graph.hpp"

namespace eqc {

// Initial bounds on the equitable chromatic number plus the seed objects
// the solver needs: a maximal clique and an initial equitable coloring.
struct BoundsReport {
    int lb_clique = 0;           // size of the clique below
    std::vector<int> clique;     // maximal clique, sorted ascending
    int lb_eq = 0;               // clique-cover relaxation lower bound
    int ub_ore = 0;              // degree-sum upper bound
    int ub_naive = 0;            // colors used by the naive heuristic
    Coloring naive_coloring;     // proper equitable coloring with ub_naive classes
    double seconds = 0.0;

    int lb() const { return std::max(lb_clique, lb_eq); }
    int ub() const { return std::min(ub_ore, ub_naive); }
};

// Greedy maximal clique grown from every start vertex: repeatedly add the
// highest-degree vertex adjacent to the whole clique (ties by lowest
// index). Keeps the largest clique; equal sizes are broken by the largest
// degree sum, then by the lexicographically smallest sorted vertex list.
std::vector<int> find_clique(const Graph& g);

// Greedy partition of the induced subgraph on `vertices` into cliques.
// Each clique is grown by the find_clique rule restricted to the residual
// vertices, starting from the highest-degree residual vertex (residual
// degrees, recomputed per extraction; ties by lowest index).
std::vector<std::vector<int>> greedy_clique_cover(const Graph& g,
    const bitset& vertices);

// max over v of ceil((n+1) / (PC_v + 2)), where PC_v is the size of the
// greedy clique cover of G[V \ N[v]].
int find_eq_lower_bound(const Graph& g);

// ceil((max{d(u)+d(v) : (u,v) in E} - 1) / 2) + 1; 1 for edgeless graphs.
int ore_upper_bound(const Graph& g);

// Smallest-last greedy coloring, then rebalancing: move vertices from the
// largest classes to classes at least two smaller while the coloring
// violates equity, opening a fresh class when no move is possible. All
// scan orders are deterministic (classes and vertices by ascending index,
// target classes smallest-first).
Coloring naive_eqcol(const Graph& g);

BoundsReport compute_bounds(const Graph& g);

} // namespace eqc

#endif
