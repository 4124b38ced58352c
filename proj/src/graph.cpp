#include "eqc/graph.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace eqc {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges)
{
    if (n < 0)
        throw std::invalid_argument("graph: negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, bitset(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("graph: vertex out of range");
        if (u == v)
            throw std::invalid_argument("graph: self-loop");
        if (!g.adj_[u].test(v)) {
            g.adj_[u].set(v);
            g.adj_[v].set(u);
            ++g.m_;
        }
    }
    g.degree_.resize(n);
    for (int u = 0; u < n; ++u) {
        g.degree_[u] = g.adj_[u].count();
        if (g.degree_[u] > g.max_degree_)
            g.max_degree_ = g.degree_[u];
    }
    return g;
}

Graph Graph::complete(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return from_edges(n, edges);
}

Graph Graph::star(int m)
{
    if (m < 1)
        throw std::invalid_argument("star: need at least one leaf");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= m; ++v)
        edges.emplace_back(0, v);
    return from_edges(m + 1, edges);
}

Graph Graph::random_gnp(int n, double p, std::uint64_t seed)
{
    if (n < 1)
        throw std::invalid_argument("random_gnp: n must be positive");
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("random_gnp: p outside [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            // top 53 bits -> uniform double in [0,1); avoids the
            // implementation-defined std distributions so edge sets are
            // bit-identical across platforms
            double x = double(rng() >> 11) * 0x1.0p-53;
            if (x < p)
                edges.emplace_back(u, v);
        }
    return from_edges(n, edges);
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    out.reserve(std::size_t(m_));
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v)
                out.emplace_back(u, v);
        });
    return out;
}

Graph parse_dimacs(std::istream& in, std::string* warning)
{
    int n = -1;
    long long declared_m = -1;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok))
            continue; // blank line
        if (tok == "c")
            continue;
        if (tok == "p") {
            if (n >= 0)
                throw std::runtime_error("dimacs: duplicate problem line at line "
                    + std::to_string(lineno));
            std::string fmt;
            if (!(ls >> fmt >> n >> declared_m) || fmt != "edge" || n < 0)
                throw std::runtime_error("dimacs: malformed problem line at line "
                    + std::to_string(lineno));
        } else if (tok == "e") {
            if (n < 0)
                throw std::runtime_error("dimacs: edge line before problem line at line "
                    + std::to_string(lineno));
            int u, v;
            if (!(ls >> u >> v))
                throw std::runtime_error("dimacs: malformed edge line at line "
                    + std::to_string(lineno));
            if (u < 1 || u > n || v < 1 || v > n)
                throw std::runtime_error("dimacs: vertex out of range at line "
                    + std::to_string(lineno));
            if (u == v)
                throw std::runtime_error("dimacs: self-loop at line "
                    + std::to_string(lineno));
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw std::runtime_error("dimacs: unknown line type '" + tok
                + "' at line " + std::to_string(lineno));
        }
    }
    if (n < 0)
        throw std::runtime_error("dimacs: missing problem line");
    Graph g = Graph::from_edges(n, edges);
    if (warning && declared_m != g.num_edges())
        *warning = "dimacs: problem line declares " + std::to_string(declared_m)
            + " edges, file has " + std::to_string(g.num_edges()) + " distinct edges";
    return g;
}

Graph parse_dimacs_file(const std::string& path, std::string* warning)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return parse_dimacs(in, warning);
}

void write_dimacs(const Graph& g, std::ostream& out)
{
    out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

} // namespace eqc
