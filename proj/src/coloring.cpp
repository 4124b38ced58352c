#include "eqc/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqc {

namespace {

std::vector<int> color_histogram(const Coloring& coloring)
{
    int maxc = -1;
    for (int c : coloring) {
        if (c < 0)
            throw std::invalid_argument("coloring: uncolored vertex");
        maxc = std::max(maxc, c);
    }
    std::vector<int> hist(maxc + 1, 0);
    for (int c : coloring)
        ++hist[c];
    return hist;
}

} // namespace

int num_colors(const Coloring& coloring)
{
    if (coloring.empty())
        return 0;
    auto hist = color_histogram(coloring);
    return int(std::count_if(hist.begin(), hist.end(), [](int s) { return s > 0; }));
}

std::vector<int> class_sizes(const Coloring& coloring)
{
    std::vector<int> sizes;
    if (coloring.empty())
        return sizes;
    for (int s : color_histogram(coloring))
        if (s > 0)
            sizes.push_back(s);
    return sizes;
}

bool is_proper(const Graph& g, const Coloring& coloring)
{
    if (int(coloring.size()) != g.num_vertices())
        return false;
    for (auto [u, v] : g.edges())
        if (coloring[u] == coloring[v])
            return false;
    return true;
}

bool equity_pairwise(const std::vector<int>& sizes)
{
    if (sizes.empty())
        return true;
    auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
    return *hi - *lo <= 1;
}

bool equity_arithmetic(long long n, long long largest, long long t, long long k)
{
    return n >= (largest - 1) * k + t;
}

bool verify_eqcol(const Graph& g, const Coloring& coloring)
{
    if (int(coloring.size()) != g.num_vertices() || coloring.empty())
        return false;
    for (int c : coloring)
        if (c < 0 || c >= g.num_vertices())
            return false;
    if (!is_proper(g, coloring))
        return false;
    auto sizes = class_sizes(coloring);
    long long largest = *std::max_element(sizes.begin(), sizes.end());
    long long t = std::count(sizes.begin(), sizes.end(), int(largest));
    return equity_arithmetic(g.num_vertices(), largest, t, (long long)sizes.size());
}

} // namespace eqc
