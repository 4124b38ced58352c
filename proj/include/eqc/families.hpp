#ifndef EQC_FAMILIES_HPP
#define EQC_FAMILIES_HPP

#include <string>
#include <vector>

#include "eqc/graph.hpp"

namespace eqc {

// Generators for the standard coloring benchmark families. These rebuild
// the instances from their mathematical definitions; vertex numbering may
// differ from the distributed files but the graphs are isomorphic, which
// is all that matters for chromatic invariants.

// n x n chessboard, squares adjacent when a queen move connects them.
Graph queen_graph(int rows, int cols);

// Mycielskian of g: shadows adjacent to original neighborhoods plus an
// apex over the shadows. n' = 2n+1, m' = 3m+n.
Graph mycielskian(const Graph& g);

// myciel_k: Mycielskian chain K2 -> C5 -> Groetzsch -> ... with
// chromatic number k (myciel3 = Groetzsch graph on 11 vertices).
Graph myciel_graph(int k);

// Kneser graph K(n,k): k-subsets of [n], adjacent when disjoint.
Graph kneser_graph(int n, int k);

// Generalized Mycielskian with `levels` shadow levels: levels
// V^1..V^levels above the original V^0, u^i ~ v^{i+1} for uv in E, and a
// single apex adjacent to the last level.
Graph generalized_mycielskian(const Graph& g, int levels);

// k-Insertions_l: (l-1) applications of the generalized Mycielskian with
// k+1 shadow levels, starting from K2.
Graph insertions_graph(int k, int l);

// One "full insertion" step: levels V^0..V^{k+1} wired as above, plus a
// clique of k+2 apexes, apex j adjacent to every vertex of level j.
Graph full_insertion(const Graph& g, int k);

// k-FullIns_l: (l-1) full-insertion steps starting from K2.
Graph full_insertions_graph(int k, int l);

// Named instances used by the benchmark suite ("queen6_6", "myciel4",
// "kneser7_2", "2-Insertions_3", "1-FullIns_3", ...). Throws
// std::invalid_argument for unknown names.
Graph benchmark_instance(const std::string& name);
std::vector<std::string> benchmark_instance_names();

} // namespace eqc

#endif
