#include "eqc/families.hpp"

#include <bit>
#include <stdexcept>

namespace eqc {

Graph queen_graph(int rows, int cols)
{
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("queen_graph: board must be nonempty");
    int n = rows * cols;
    auto id = [cols](int r, int c) { return r * cols + c; };
    std::vector<std::pair<int, int>> edges;
    for (int r1 = 0; r1 < rows; ++r1)
        for (int c1 = 0; c1 < cols; ++c1)
            for (int r2 = r1; r2 < rows; ++r2)
                for (int c2 = (r2 == r1 ? c1 + 1 : 0); c2 < cols; ++c2) {
                    bool attack = r1 == r2 || c1 == c2
                        || (r2 - r1) == (c2 - c1) || (r2 - r1) == (c1 - c2);
                    if (attack)
                        edges.emplace_back(id(r1, c1), id(r2, c2));
                }
    return Graph::from_edges(n, edges);
}

Graph mycielskian(const Graph& g)
{
    return generalized_mycielskian(g, 1);
}

Graph myciel_graph(int k)
{
    if (k < 2)
        throw std::invalid_argument("myciel_graph: k >= 2 required");
    Graph g = Graph::complete(2);
    for (int i = 2; i < k; ++i)
        g = mycielskian(g);
    return g;
}

Graph kneser_graph(int n, int k)
{
    if (k < 1 || n < k || n > 24)
        throw std::invalid_argument("kneser_graph: need 1 <= k <= n <= 24");
    std::vector<unsigned> subsets;
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        if (std::popcount(mask) == k)
            subsets.push_back(mask);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = i + 1; j < subsets.size(); ++j)
            if ((subsets[i] & subsets[j]) == 0)
                edges.emplace_back(int(i), int(j));
    return Graph::from_edges(int(subsets.size()), edges);
}

Graph generalized_mycielskian(const Graph& g, int levels)
{
    if (levels < 1)
        throw std::invalid_argument("generalized_mycielskian: levels >= 1");
    int n = g.num_vertices();
    int apex = (levels + 1) * n;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(u, v);
        for (int i = 0; i < levels; ++i) {
            edges.emplace_back(i * n + u, (i + 1) * n + v);
            edges.emplace_back(i * n + v, (i + 1) * n + u);
        }
    }
    for (int v = 0; v < n; ++v)
        edges.emplace_back(levels * n + v, apex);
    return Graph::from_edges(apex + 1, edges);
}

Graph insertions_graph(int k, int l)
{
    if (k < 1 || l < 2)
        throw std::invalid_argument("insertions_graph: need k >= 1, l >= 2");
    Graph g = Graph::complete(2);
    for (int i = 1; i < l; ++i)
        g = generalized_mycielskian(g, k + 1);
    return g;
}

Graph full_insertion(const Graph& g, int k)
{
    int n = g.num_vertices();
    int nlevels = k + 2;
    int apex_base = nlevels * n;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(u, v);
        for (int i = 0; i + 1 < nlevels; ++i) {
            edges.emplace_back(i * n + u, (i + 1) * n + v);
            edges.emplace_back(i * n + v, (i + 1) * n + u);
        }
    }
    for (int j = 0; j < nlevels; ++j) {
        for (int v = 0; v < n; ++v)
            edges.emplace_back(j * n + v, apex_base + j);
        for (int j2 = j + 1; j2 < nlevels; ++j2)
            edges.emplace_back(apex_base + j, apex_base + j2);
    }
    return Graph::from_edges(apex_base + nlevels, edges);
}

Graph full_insertions_graph(int k, int l)
{
    if (k < 1 || l < 2)
        throw std::invalid_argument("full_insertions_graph: need k >= 1, l >= 2");
    Graph g = Graph::complete(2);
    for (int i = 1; i < l; ++i)
        g = full_insertion(g, k);
    return g;
}

Graph benchmark_instance(const std::string& name)
{
    if (name == "queen6_6")
        return queen_graph(6, 6);
    if (name == "queen7_7")
        return queen_graph(7, 7);
    if (name == "queen8_8")
        return queen_graph(8, 8);
    if (name == "myciel4")
        return myciel_graph(5);
    if (name == "myciel5")
        return myciel_graph(6);
    if (name == "kneser7_2")
        return kneser_graph(7, 2);
    if (name == "kneser7_3")
        return kneser_graph(7, 3);
    if (name == "kneser9_4")
        return kneser_graph(9, 4);
    if (name == "1-FullIns_3")
        return full_insertions_graph(1, 3);
    if (name == "2-FullIns_3")
        return full_insertions_graph(2, 3);
    if (name == "2-Insertions_3")
        return insertions_graph(2, 3);
    if (name == "3-Insertions_3")
        return insertions_graph(3, 3);
    throw std::invalid_argument("unknown benchmark instance: " + name);
}

std::vector<std::string> benchmark_instance_names()
{
    return {"queen6_6", "queen7_7", "queen8_8", "myciel4", "myciel5",
        "kneser7_2", "kneser7_3", "kneser9_4", "1-FullIns_3", "2-FullIns_3",
        "2-Insertions_3", "3-Insertions_3"};
}

} // namespace eqc
