#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eqc/bounds.hpp"
#include "eqc/coloring.hpp"
#include "eqc/families.hpp"
#include "eqc/graph.hpp"
#include "eqc/oracle.hpp"

using namespace eqc;

namespace {

Graph cycle(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

bool is_clique(const Graph& g, const std::vector<int>& q)
{
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = i + 1; j < q.size(); ++j)
            if (!g.adjacent(q[i], q[j]))
                return false;
    return true;
}

bool is_maximal_clique(const Graph& g, const std::vector<int>& q)
{
    if (!is_clique(g, q))
        return false;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (std::find(q.begin(), q.end(), v) != q.end())
            continue;
        bool adjacent_to_all = true;
        for (int u : q)
            if (!g.adjacent(u, v))
                adjacent_to_all = false;
        if (adjacent_to_all)
            return false;
    }
    return true;
}

// exact maximum clique by enumeration, small graphs only
int brute_max_clique(const Graph& g)
{
    int n = g.num_vertices();
    int best = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> q;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v))
                q.push_back(v);
        if (int(q.size()) > best && is_clique(g, q))
            best = int(q.size());
    }
    return best;
}

} // namespace

TEST_CASE("find_clique on canonical shapes")
{
    CHECK(find_clique(Graph::complete(5)).size() == 5);
    CHECK(find_clique(Graph::star(6)).size() == 2);
    CHECK(find_clique(cycle(5)).size() == 2);
    CHECK(int(find_clique(cycle(5)).size()) == brute_max_clique(cycle(5)));
}

TEST_CASE("find_clique output is always a maximal clique")
{
    std::mt19937 rng(3);
    for (int it = 0; it < 40; ++it) {
        int n = 2 + int(rng() % 30);
        Graph g = Graph::random_gnp(n, 0.2 + 0.2 * double(it % 4), rng());
        auto q = find_clique(g);
        CAPTURE(n);
        CHECK(is_maximal_clique(g, q));
        CHECK(std::is_sorted(q.begin(), q.end()));
    }
}

TEST_CASE("clique-cover lower bound on stars and cliques")
{
    // star K_{1,8}: the center leaves an empty residual, giving
    // ceil(10/2) = 5; a leaf gives a 7-clique cover and only 2
    CHECK(find_eq_lower_bound(Graph::star(8)) == 5);
    CHECK(brute_chi_eq(Graph::star(8)).chi_eq == 5);
    // complete graph: every residual is empty
    CHECK(find_eq_lower_bound(Graph::complete(6)) == 4);
}

TEST_CASE("clique cover partitions the residual exactly")
{
    std::mt19937 rng(17);
    for (int it = 0; it < 25; ++it) {
        int n = 4 + int(rng() % 20);
        Graph g = Graph::random_gnp(n, 0.35, rng());
        for (int v = 0; v < n; ++v) {
            bitset residual(n);
            residual.set_all();
            residual.reset(v);
            residual.subtract(g.neighbors(v));
            auto cover = greedy_clique_cover(g, residual);
            bitset seen(n);
            for (const auto& q : cover) {
                CHECK(is_clique(g, q));
                for (int u : q) {
                    CHECK_FALSE(seen.test(u)); // pairwise disjoint
                    seen.set(u);
                }
            }
            CHECK(seen == residual); // union is exactly V \ N[v]
        }
    }
}

TEST_CASE("ore bound")
{
    CHECK(ore_upper_bound(Graph::star(4)) == 3);
    CHECK(ore_upper_bound(Graph::from_edges(7, {})) == 1);
    CHECK(ore_upper_bound(benchmark_instance("queen6_6")) == 20);
    // published values for the reconstructed families
    CHECK(ore_upper_bound(benchmark_instance("1-FullIns_3")) == 12);
    CHECK(ore_upper_bound(benchmark_instance("2-FullIns_3")) == 16);
    CHECK(ore_upper_bound(benchmark_instance("2-Insertions_3")) == 7);
    CHECK(ore_upper_bound(benchmark_instance("3-Insertions_3")) == 8);
    CHECK(ore_upper_bound(benchmark_instance("myciel4")) == 9);
    CHECK(ore_upper_bound(benchmark_instance("kneser7_3")) == 5);
}

TEST_CASE("naive heuristic on forced instances")
{
    CHECK(num_colors(naive_eqcol(Graph::complete(4))) == 4);
    CHECK(num_colors(naive_eqcol(Graph::from_edges(7, {}))) == 1);
    CHECK(num_colors(naive_eqcol(Graph::star(8))) == 5);
}

TEST_CASE("naive heuristic always yields a proper equitable coloring")
{
    std::mt19937 rng(29);
    for (int it = 0; it < 60; ++it) {
        int n = 2 + int(rng() % 40);
        double p = 0.15 + 0.2 * double(it % 4);
        Graph g = Graph::random_gnp(n, p, rng());
        Coloring coloring = naive_eqcol(g);
        CAPTURE(n);
        CHECK(is_proper(g, coloring));
        CHECK(equity_pairwise(class_sizes(coloring)));
        CHECK(verify_eqcol(g, coloring));
    }
}

TEST_CASE("stars hit the closed form on both bounds")
{
    for (int m = 1; m <= 30; ++m) {
        int expected = (m + 1) / 2 + 1;
        CAPTURE(m);
        CHECK(ore_upper_bound(Graph::star(m)) == expected);
        CHECK(num_colors(naive_eqcol(Graph::star(m))) == expected);
    }
}

TEST_CASE("bounds sandwich the exact optimum on small graphs")
{
    std::mt19937 rng(41);
    for (int it = 0; it < 60; ++it) {
        int n = 2 + int(rng() % 8); // up to 9 vertices
        double p = it % 3 == 0 ? 0.2 : (it % 3 == 1 ? 0.5 : 0.8);
        Graph g = Graph::random_gnp(n, p, rng());
        BoundsReport rep = compute_bounds(g);
        int exact = brute_chi_eq(g).chi_eq;
        CAPTURE(n);
        CHECK(rep.lb() <= exact);
        CHECK(exact <= rep.ub());
        CHECK(rep.lb() <= rep.ub());
        CHECK(int(rep.clique.size()) == rep.lb_clique);
        CHECK(is_maximal_clique(g, rep.clique));
        CHECK(verify_eqcol(g, rep.naive_coloring));
        CHECK(num_colors(rep.naive_coloring) == rep.ub_naive);
    }
}

TEST_CASE("clique-cover bound beats the clique bound on dense graphs")
{
    // averaged relation only; exact table values depend on tie-breaks
    double fc_sum = 0, elb_sum = 0;
    for (int it = 0; it < 8; ++it) {
        Graph g = Graph::random_gnp(125, 0.9, 1000 + it);
        fc_sum += double(find_clique(g).size());
        elb_sum += double(find_eq_lower_bound(g));
    }
    CHECK(elb_sum > fc_sum);
}
