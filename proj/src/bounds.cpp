#include "eqc/bounds.hpp"

#include <chrono>
#include <numeric>
#include <stdexcept>

namespace eqc {

namespace {

// Grow one clique greedily inside `allowed`, starting from `start`.
// Candidates are ranked by score[] (strict max, ties fall to the lowest
// index because bits are scanned in ascending order).
std::vector<int> grow_clique(const Graph& g, int start, const bitset& allowed,
    const std::vector<int>& score)
{
    std::vector<int> clique{start};
    bitset cand = g.neighbors(start);
    cand &= allowed;
    while (cand.any()) {
        int best = -1;
        cand.for_each([&](int u) {
            if (best < 0 || score[u] > score[best])
                best = u;
        });
        clique.push_back(best);
        cand &= g.neighbors(best);
    }
    return clique;
}

} // namespace

std::vector<int> find_clique(const Graph& g)
{
    int n = g.num_vertices();
    if (n < 1)
        throw std::invalid_argument("find_clique: empty graph");
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v)
        deg[v] = g.degree(v);
    bitset all(n);
    all.set_all();

    std::vector<int> best;
    long long best_degsum = -1;
    for (int v = 0; v < n; ++v) {
        auto q = grow_clique(g, v, all, deg);
        std::sort(q.begin(), q.end());
        long long degsum = 0;
        for (int u : q)
            degsum += deg[u];
        if (q.size() > best.size()
            || (q.size() == best.size()
                && (degsum > best_degsum
                    || (degsum == best_degsum && q < best)))) {
            best = std::move(q);
            best_degsum = degsum;
        }
    }
    return best;
}

std::vector<std::vector<int>> greedy_clique_cover(const Graph& g,
    const bitset& vertices)
{
    int n = g.num_vertices();
    std::vector<std::vector<int>> cover;
    std::vector<int> rdeg(n);
    bitset residual = vertices;
    while (residual.any()) {
        int start = -1;
        residual.for_each([&](int u) {
            rdeg[u] = g.neighbors(u).count_and(residual);
            if (start < 0 || rdeg[u] > rdeg[start])
                start = u;
        });
        auto clique = grow_clique(g, start, residual, rdeg);
        for (int u : clique)
            residual.reset(u);
        cover.push_back(std::move(clique));
    }
    return cover;
}

int find_eq_lower_bound(const Graph& g)
{
    int n = g.num_vertices();
    if (n < 1)
        throw std::invalid_argument("find_eq_lower_bound: empty graph");
    int best = 0;
    for (int v = 0; v < n; ++v) {
        bitset residual(n);
        residual.set_all();
        residual.reset(v);
        residual.subtract(g.neighbors(v));
        auto pc = (long long)greedy_clique_cover(g, residual).size();
        best = std::max(best, int((n + 1 + pc + 1) / (pc + 2)));
    }
    return best;
}

int ore_upper_bound(const Graph& g)
{
    if (g.num_edges() == 0)
        return 1;
    int maxsum = 0;
    for (auto [u, v] : g.edges())
        maxsum = std::max(maxsum, g.degree(u) + g.degree(v));
    // ceil((maxsum - 1) / 2) + 1
    return maxsum / 2 + 1;
}

Coloring naive_eqcol(const Graph& g)
{
    int n = g.num_vertices();
    if (n < 1)
        throw std::invalid_argument("naive_eqcol: empty graph");

    // smallest-last ordering
    std::vector<int> rdeg(n), removal;
    removal.reserve(n);
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v)
        rdeg[v] = g.degree(v);
    for (int i = 0; i < n; ++i) {
        int u = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (u < 0 || rdeg[v] < rdeg[u]))
                u = v;
        removal.push_back(u);
        removed[u] = 1;
        g.neighbors(u).for_each([&](int w) {
            if (!removed[w])
                --rdeg[w];
        });
    }

    // greedy coloring in reverse removal order
    Coloring color(n, -1);
    std::vector<char> used(n, 0);
    for (auto it = removal.rbegin(); it != removal.rend(); ++it) {
        int v = *it;
        g.neighbors(v).for_each([&](int w) {
            if (color[w] >= 0)
                used[color[w]] = 1;
        });
        int c = 0;
        while (used[c])
            ++c;
        color[v] = c;
        g.neighbors(v).for_each([&](int w) {
            if (color[w] >= 0)
                used[color[w]] = 0;
        });
    }

    // rebalance until the equity test holds
    std::vector<std::vector<int>> classes(num_colors(color));
    for (int v = 0; v < n; ++v)
        classes[color[v]].push_back(v);

    auto clash = [&](int u, int target) {
        bool hit = false;
        g.neighbors(u).for_each([&](int w) {
            if (color[w] == target)
                hit = true;
        });
        return hit;
    };
    auto move_vertex = [&](int u, int from, int to) {
        auto& src = classes[from];
        src.erase(std::find(src.begin(), src.end(), u));
        auto& dst = classes[to];
        dst.insert(std::lower_bound(dst.begin(), dst.end(), u), u);
        color[u] = to;
    };

    long long guard = (long long)n * n + n;
    for (;;) {
        int k = int(classes.size());
        int largest = 0;
        for (auto& cl : classes)
            largest = std::max(largest, int(cl.size()));
        long long t = std::count_if(classes.begin(), classes.end(),
            [&](auto& cl) { return int(cl.size()) == largest; });
        if (equity_arithmetic(n, largest, t, k))
            break;
        if (--guard < 0)
            throw std::logic_error("naive_eqcol: rebalance failed to terminate");

        // target classes at least two below the maximum, smallest first
        std::vector<int> targets;
        for (int c = 0; c < k; ++c)
            if (int(classes[c].size()) < largest - 1)
                targets.push_back(c);
        std::stable_sort(targets.begin(), targets.end(),
            [&](int a, int b) { return classes[a].size() < classes[b].size(); });

        bool moved = false;
        for (int c = 0; c < k && !moved; ++c) {
            if (int(classes[c].size()) != largest)
                continue;
            for (std::size_t i = 0; i < classes[c].size() && !moved; ++i) {
                int u = classes[c][i];
                for (int d : targets) {
                    if (!clash(u, d)) {
                        move_vertex(u, c, d);
                        moved = true;
                        break;
                    }
                }
            }
        }
        if (!moved) {
            // no feasible re-coloring: open a new class with the first
            // vertex of the first largest class
            for (int c = 0; c < k; ++c)
                if (int(classes[c].size()) == largest) {
                    classes.emplace_back();
                    move_vertex(classes[c].front(), c, k);
                    break;
                }
        }
    }
    return color;
}

BoundsReport compute_bounds(const Graph& g)
{
    auto t0 = std::chrono::steady_clock::now();
    BoundsReport rep;
    rep.clique = find_clique(g);
    rep.lb_clique = int(rep.clique.size());
    rep.lb_eq = find_eq_lower_bound(g);
    rep.ub_ore = ore_upper_bound(g);
    rep.naive_coloring = naive_eqcol(g);
    rep.ub_naive = num_colors(rep.naive_coloring);
    rep.seconds = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - t0)
                      .count();
    return rep;
}

} // namespace eqc
