#ifndef EQC_GRAPH_HPP
#define EQC_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "eqc/bitset.hpp"

namespace eqc {

// Simple undirected graph, immutable after construction. Vertices are
// 0..n-1 internally; DIMACS I/O and all reporting translate to 1-based
// labels. Adjacency rows are fixed-width bit vectors sized to n.
class Graph {
public:
    Graph() = default;

    // Builds from an edge list. Duplicate edges (either orientation)
    // collapse; self-loops are rejected.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    static Graph complete(int n);
    // K_{1,m}: vertex 0 adjacent to vertices 1..m, no other edges.
    static Graph star(int m);
    // G(n,p): each of the n(n-1)/2 candidate edges included independently
    // with probability p. Deterministic per (n, p, seed): driven by
    // std::mt19937_64, candidate pairs scanned in lexicographic order.
    static Graph random_gnp(int n, double p, std::uint64_t seed);

    int num_vertices() const { return n_; }
    long long num_edges() const { return m_; }

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const bitset& neighbors(int u) const { return adj_[u]; }
    int degree(int u) const { return degree_[u]; }
    int max_degree() const { return max_degree_; }

    // Sorted edge list with u < v.
    std::vector<std::pair<int, int>> edges() const;

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<bitset> adj_;
    std::vector<int> degree_;
    int max_degree_ = 0;
};

// Standard DIMACS coloring format: 'c' comments, one 'p edge <n> <m>'
// line, 'e <u> <v>' lines with 1-based endpoints. Throws std::runtime_error
// on malformed input, out-of-range endpoints, self-loops, or edges before
// the problem line. A mismatch between the declared and actual edge count
// is reported through *warning (COLORLIB files are occasionally
// inconsistent), not treated as an error.
Graph parse_dimacs(std::istream& in, std::string* warning = nullptr);
Graph parse_dimacs_file(const std::string& path, std::string* warning = nullptr);

// Canonical serialization: 'p edge n m' followed by sorted 'e u v' lines.
void write_dimacs(const Graph& g, std::ostream& out);

} // namespace eqc

#endif
