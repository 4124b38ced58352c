#include "eqc/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqc {

namespace {

// Depth-first enumeration of proper assignments of vertices order[pos..]
// with exactly k target classes, sizes bounded by floor/ceil(n/k). The
// deficit prune discards states where the uncolored remainder cannot fill
// every class up to floor(n/k); together with the cap this makes every
// completed assignment equitable with all k classes nonempty.
class EquitableEnumerator {
public:
    EquitableEnumerator(const Graph& g, int k, std::vector<int> color, int opened)
        : g_(g), k_(k), n_(g.num_vertices()), color_(std::move(color)),
          opened_(opened), size_(k, 0)
    {
        lo_ = n_ / k_;
        hi_ = (n_ + k_ - 1) / k_;
        remaining_ = 0;
        for (int v = 0; v < n_; ++v) {
            if (color_[v] < 0) {
                order_.push_back(v);
                ++remaining_;
            } else {
                ++size_[color_[v]];
            }
        }
    }

    bool run()
    {
        for (int s : size_)
            if (s > hi_)
                return false;
        if (deficit() > remaining_)
            return false;
        return extend(0);
    }

    const std::vector<int>& coloring() const { return color_; }

private:
    int deficit() const
    {
        int need = (k_ - opened_) * lo_;
        for (int c = 0; c < opened_; ++c)
            need += std::max(0, lo_ - size_[c]);
        return need;
    }

    bool extend(std::size_t pos)
    {
        if (pos == order_.size())
            return true;
        int v = order_[pos];
        int cmax = std::min(opened_, k_ - 1);
        for (int c = 0; c <= cmax; ++c) {
            if (size_[c] >= hi_)
                continue;
            bool clash = false;
            g_.neighbors(v).for_each([&](int w) {
                if (color_[w] == c)
                    clash = true;
            });
            if (clash)
                continue;
            int prev_opened = opened_;
            color_[v] = c;
            ++size_[c];
            opened_ = std::max(opened_, c + 1);
            --remaining_;
            if (deficit() <= remaining_ && extend(pos + 1))
                return true; // keep the assignments: they are the witness
            ++remaining_;
            opened_ = prev_opened;
            --size_[c];
            color_[v] = -1;
        }
        return false;
    }

    const Graph& g_;
    int k_, n_;
    std::vector<int> color_;
    int opened_;
    std::vector<int> size_;
    std::vector<int> order_;
    int lo_ = 0, hi_ = 0, remaining_ = 0;
};

} // namespace

OracleResult brute_chi_eq(const Graph& g)
{
    int n = g.num_vertices();
    if (n < 1)
        throw std::invalid_argument("brute_chi_eq: empty graph");
    if (n > 12)
        throw std::invalid_argument("brute_chi_eq: n > 12 rejected");
    for (int k = 1; k <= n; ++k) {
        EquitableEnumerator en(g, k, std::vector<int>(n, -1), 0);
        if (en.run()) {
            OracleResult res;
            res.witness = en.coloring();
            res.chi_eq = k;
            if (num_colors(res.witness) != k || !verify_eqcol(g, res.witness))
                throw std::logic_error("brute_chi_eq: inconsistent witness");
            return res;
        }
    }
    throw std::logic_error("brute_chi_eq: unreachable");
}

bool has_equitable_extension(const Graph& g, const std::vector<int>& partial,
    int min_colors)
{
    int n = g.num_vertices();
    if (n < 1 || n > 10)
        throw std::invalid_argument("has_equitable_extension: n > 10 rejected");
    if (int(partial.size()) != n)
        throw std::invalid_argument("has_equitable_extension: size mismatch");

    int kp = 0;
    for (int c : partial) {
        if (c >= n)
            throw std::invalid_argument("has_equitable_extension: color out of range");
        kp = std::max(kp, c + 1);
    }
    std::vector<int> size(std::max(kp, 1), 0);
    for (int c : partial)
        if (c >= 0)
            ++size[c];
    for (int c = 0; c < kp; ++c)
        if (size[c] == 0)
            throw std::invalid_argument(
                "has_equitable_extension: nonempty classes must form a prefix");
    for (auto [u, v] : g.edges())
        if (partial[u] >= 0 && partial[u] == partial[v])
            throw std::invalid_argument("has_equitable_extension: partial not proper");

    for (int k = std::max({kp, min_colors, 1}); k <= n; ++k) {
        EquitableEnumerator en(g, k, partial, kp);
        if (en.run())
            return true;
    }
    return false;
}

} // namespace eqc
