#include "eqc/solver.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <stdexcept>

namespace eqc {

VertexStrategy parse_vertex_strategy(const std::string& name)
{
    if (name == "dsatur")
        return VertexStrategy::Dsatur;
    if (name == "celim")
        return VertexStrategy::Celim;
    if (name == "pass")
        return VertexStrategy::Pass;
    throw std::invalid_argument("unknown vertex selection strategy: " + name);
}

ColorStrategy parse_color_strategy(const std::string& name)
{
    if (name == "dsatur")
        return ColorStrategy::Dsatur;
    if (name == "bccol")
        return ColorStrategy::Bccol;
    if (name == "order1")
        return ColorStrategy::Order1;
    if (name == "order2")
        return ColorStrategy::Order2;
    throw std::invalid_argument("unknown color selection strategy: " + name);
}

std::string to_string(VertexStrategy vss)
{
    switch (vss) {
    case VertexStrategy::Dsatur: return "dsatur";
    case VertexStrategy::Celim: return "celim";
    case VertexStrategy::Pass: return "pass";
    }
    return "?";
}

std::string to_string(ColorStrategy css)
{
    switch (css) {
    case ColorStrategy::Dsatur: return "dsatur";
    case ColorStrategy::Bccol: return "bccol";
    case ColorStrategy::Order1: return "order1";
    case ColorStrategy::Order2: return "order2";
    }
    return "?";
}

std::string to_string(SolveStatus status)
{
    return status == SolveStatus::Optimal ? "Optimal" : "TimeLimit";
}

PartialColoring::PartialColoring(const Graph& g)
    : g_(&g), color_of_(g.num_vertices(), -1), uncolored_(g.num_vertices()),
      class_size_(g.num_vertices(), 0), size_hist_(g.num_vertices() + 1, 0),
      avail_(g.num_vertices(), bitset(g.num_vertices(), true)),
      sat_(g.num_vertices(), 0),
      neighbor_color_count_(g.num_vertices(),
          std::vector<std::uint16_t>(g.num_vertices(), 0)),
      num_uncolored_(g.num_vertices())
{
    uncolored_.set_all();
}

void PartialColoring::assign(int v, int c)
{
    assert(color_of_[v] < 0 && c >= 0 && c < int(class_size_.size()));
    color_of_[v] = c;
    uncolored_.reset(v);
    --num_uncolored_;

    int s = class_size_[c]++;
    if (s > 0)
        --size_hist_[s];
    ++size_hist_[s + 1];
    if (s + 1 > largest_)
        largest_ = s + 1;
    num_largest_ = size_hist_[largest_];
    if (c + 1 > k_)
        k_ = c + 1;

    bitset::for_each_and(g_->neighbors(v), uncolored_, [&](int w) {
        if (++neighbor_color_count_[w][c] == 1) {
            avail_[w].reset(c);
            ++sat_[w];
        }
    });
}

void PartialColoring::unassign(int v, int c)
{
    assert(color_of_[v] == c);
    bitset::for_each_and(g_->neighbors(v), uncolored_, [&](int w) {
        if (--neighbor_color_count_[w][c] == 0) {
            avail_[w].set(c);
            --sat_[w];
        }
    });

    int s = class_size_[c]--;
    --size_hist_[s];
    if (s > 1)
        ++size_hist_[s - 1];
    if (s == largest_ && size_hist_[s] == 0)
        --largest_;
    num_largest_ = largest_ > 0 ? size_hist_[largest_] : 0;
    if (class_size_[c] == 0) {
        assert(c + 1 == k_); // LIFO discipline keeps nonempty classes a prefix
        --k_;
    }

    color_of_[v] = -1;
    uncolored_.set(v);
    ++num_uncolored_;
}

void PartialColoring::check_counters() const
{
    int n = g_->num_vertices();
    std::vector<int> sizes(n, 0);
    int maxc = -1;
    for (int v = 0; v < n; ++v)
        if (color_of_[v] >= 0) {
            ++sizes[color_of_[v]];
            maxc = std::max(maxc, color_of_[v]);
        }
    if (maxc + 1 != k_)
        throw std::logic_error("partial coloring: k mismatch");
    int largest = 0, num_largest = 0;
    for (int c = 0; c <= maxc; ++c) {
        if (sizes[c] == 0)
            throw std::logic_error("partial coloring: empty class inside prefix");
        if (sizes[c] != class_size_[c])
            throw std::logic_error("partial coloring: class size mismatch");
        largest = std::max(largest, sizes[c]);
    }
    for (int c = 0; c <= maxc; ++c)
        if (sizes[c] == largest)
            ++num_largest;
    if (largest != largest_ || num_largest != num_largest_)
        throw std::logic_error("partial coloring: M/t mismatch");
    for (int v = 0; v < n; ++v) {
        if (!is_uncolored(v))
            continue;
        bitset expect(n, true);
        int distinct = 0;
        for (int c = 0; c < n; ++c) {
            int cnt = 0;
            g_->neighbors(v).for_each([&](int w) {
                if (color_of_[w] == c)
                    ++cnt;
            });
            if (cnt > 0) {
                expect.reset(c);
                ++distinct;
            }
            if (cnt != neighbor_color_count_[v][c])
                throw std::logic_error("partial coloring: neighbor count mismatch");
        }
        if (!(expect == avail_[v]) || distinct != sat_[v])
            throw std::logic_error("partial coloring: availability mismatch");
    }
}

bool can_extend(long long n, long long largest, long long t, long long k,
    long long lb)
{
    return n >= (largest - 1) * std::max(k, lb) + t;
}

namespace {

int color_cap(const PartialColoring& state, int ub)
{
    // candidate colors are 0 .. min(k+1, ub-1) - 1 (at most one fresh
    // color, never reaching the incumbent's color count)
    int cap = std::min(state.k() + 1, ub - 1);
    return std::clamp(cap, 0, state.graph().num_vertices());
}

int select_vertex_impl(const PartialColoring& state, const Graph& g,
    const SolverConfig& cfg, int ub, bitset& tied)
{
    assert(state.num_uncolored() > 0);
    int rho = -1;
    state.uncolored().for_each([&](int u) {
        if (state.saturation(u) > rho)
            rho = state.saturation(u);
    });
    tied.reset_all();
    state.uncolored().for_each([&](int u) {
        if (state.saturation(u) == rho)
            tied.set(u);
    });

    VertexStrategy rule = cfg.vss;
    if (rule == VertexStrategy::Pass && state.k() - rho > cfg.pass_threshold)
        rule = VertexStrategy::Dsatur;
    if (rule == VertexStrategy::Dsatur) {
        int best = -1;
        tied.for_each([&](int u) {
            if (best < 0 || g.degree(u) > g.degree(best))
                best = u;
        });
        return best;
    }

    // celim: shared available colors with uncolored neighbors;
    // pass: the same sum restricted to neighbors tied at maximum saturation
    const bitset& pool
        = rule == VertexStrategy::Celim ? state.uncolored() : tied;
    int cap = color_cap(state, ub);
    int best = -1;
    long long best_score = -1;
    tied.for_each([&](int u) {
        long long score = 0;
        bitset::for_each_and(g.neighbors(u), pool, [&](int w) {
            score += state.avail(u).count_and_prefix(state.avail(w), cap);
        });
        if (score > best_score
            || (score == best_score && g.degree(u) > g.degree(best)))
            best = u, best_score = score;
    });
    return best;
}

void color_order_impl(const PartialColoring& state, int u, ColorStrategy css,
    int ub, std::vector<int>& out)
{
    int k = state.k();
    int cap = color_cap(state, ub);
    out.clear();
    bool fresh = false;
    for (int c = 0; c < cap; ++c) {
        if (!state.avail(u).test(c))
            continue;
        if (c < k)
            out.push_back(c);
        else
            fresh = true; // c == k, the single fresh color in range
    }
    if (css == ColorStrategy::Order1 || css == ColorStrategy::Order2)
        std::stable_sort(out.begin(), out.end(), [&](int a, int b) {
            return state.class_size(a) < state.class_size(b);
        });
    if (fresh) {
        if (css == ColorStrategy::Bccol || css == ColorStrategy::Order2)
            out.insert(out.begin(), k);
        else
            out.push_back(k);
    }
}

class Search {
public:
    Search(const Graph& g, const SolverConfig& cfg, const BoundsReport& bounds,
        const SolveHooks* hooks)
        : g_(g), cfg_(cfg), hooks_(hooks), state_(g), n_(g.num_vertices()),
          lb_(bounds.lb()), tied_(g.num_vertices()),
          order_(g.num_vertices() + 1),
          start_(std::chrono::steady_clock::now())
    {
        best_ = bounds.naive_coloring;
        ub_ = num_colors(best_);
    }

    SolveResult run(const std::vector<int>& clique)
    {
        // with lb = ub the naive coloring is already proved optimal; the
        // trivial variant does not use the lower bound and always searches
        if (cfg_.trivial_mode || lb_ < ub_) {
            for (std::size_t i = 0; i < clique.size(); ++i)
                state_.assign(clique[i], int(i));
            node(1, int(clique.size()), 0);
        }
        SolveResult res;
        res.best_coloring = best_;
        res.ub = ub_;
        res.status = timed_out_ ? SolveStatus::TimeLimit : SolveStatus::Optimal;
        res.nodes = nodes_;
        res.seconds = elapsed();
        res.lb_used = lb_;
        return res;
    }

private:
    double elapsed() const
    {
        return std::chrono::duration<double>(
            std::chrono::steady_clock::now() - start_)
            .count();
    }

    void node(int largest, int num_largest, int depth)
    {
        ++nodes_;
        if ((nodes_ & (time_check_interval_nodes - 1)) == 1
            && elapsed() > cfg_.time_limit_seconds) {
            timed_out_ = true;
            return;
        }
        if (hooks_ && hooks_->verify_counters) {
            state_.check_counters();
            if (state_.largest() != largest || state_.num_largest() != num_largest)
                throw std::logic_error("solver: M/t recursion args diverged");
        }
        if (state_.num_uncolored() == 0) {
            int k = state_.k();
            if (cfg_.trivial_mode
                && !equity_arithmetic(n_, largest, num_largest, k))
                return; // leaf coloring not equitable
            ub_ = k;
            best_ = state_.colors();
            if (hooks_ && hooks_->verify_counters
                && !verify_eqcol(g_, best_))
                throw std::logic_error("solver: incumbent is not an eqcol");
            return;
        }

        int u = select_vertex_impl(state_, g_, cfg_, ub_, tied_);
        int k = state_.k();
        std::vector<int>& order = order_[depth];
        color_order_impl(state_, u, cfg_.css, ub_, order);
        for (int c : order) {
            // the incumbent may have improved since the list was built
            if (c + 2 > ub_)
                continue;

            int size = c < k ? state_.class_size(c) : 0;
            int m2, t2;
            if (c < k) {
                if (size == largest) {
                    m2 = largest + 1;
                    t2 = 1;
                } else if (size == largest - 1) {
                    m2 = largest;
                    t2 = num_largest + 1;
                } else {
                    m2 = largest;
                    t2 = num_largest;
                }
            } else {
                m2 = largest;
                t2 = largest == 1 ? num_largest + 1 : num_largest;
            }
            int k2 = std::max(k, c + 1);

            if (!cfg_.trivial_mode && !can_extend(n_, m2, t2, k2, lb_)) {
                if (hooks_ && hooks_->on_pruned) {
                    state_.assign(u, c);
                    hooks_->on_pruned(state_, lb_);
                    state_.unassign(u, c);
                }
                continue;
            }

            state_.assign(u, c);
            bool feasible = true;
            bitset::for_each_and(g_.neighbors(u), state_.uncolored(),
                [&](int w) {
                    if (feasible && !state_.avail(w).any_prefix(ub_ - 1))
                        feasible = false;
                });
            if (feasible)
                node(m2, t2, depth + 1);
            state_.unassign(u, c);
            if (timed_out_)
                return;
        }
    }

    const Graph& g_;
    const SolverConfig& cfg_;
    const SolveHooks* hooks_;
    PartialColoring state_;
    int n_;
    int lb_;
    bitset tied_;
    std::vector<std::vector<int>> order_; // per-depth candidate buffers
    std::chrono::steady_clock::time_point start_;
    Coloring best_;
    int ub_ = 0;
    long long nodes_ = 0;
    bool timed_out_ = false;
};

} // namespace

int select_vertex(const PartialColoring& state, const Graph& g,
    const SolverConfig& cfg, int ub)
{
    bitset tied(g.num_vertices());
    return select_vertex_impl(state, g, cfg, ub, tied);
}

std::vector<int> color_order(const PartialColoring& state, int u,
    ColorStrategy css, int ub)
{
    std::vector<int> out;
    color_order_impl(state, u, css, ub, out);
    return out;
}

SolveResult solve(const Graph& g, const SolverConfig& cfg,
    const BoundsReport& bounds, const SolveHooks* hooks)
{
    if (g.num_vertices() < 1)
        throw std::invalid_argument("solve: empty graph");
    if (!verify_eqcol(g, bounds.naive_coloring))
        throw std::invalid_argument("solve: seed coloring is not a valid eqcol");
    if (bounds.clique.empty())
        throw std::invalid_argument("solve: empty seed clique");
    bitset common(g.num_vertices());
    common.set_all();
    for (std::size_t i = 0; i < bounds.clique.size(); ++i) {
        int u = bounds.clique[i];
        if (u < 0 || u >= g.num_vertices())
            throw std::invalid_argument("solve: clique vertex out of range");
        for (std::size_t j = i + 1; j < bounds.clique.size(); ++j)
            if (!g.adjacent(u, bounds.clique[j]))
                throw std::invalid_argument("solve: seed is not a clique");
        common &= g.neighbors(u);
    }
    if (common.any())
        throw std::invalid_argument("solve: seed clique is not maximal");

    Search search(g, cfg, bounds, hooks);
    return search.run(bounds.clique);
}

} // namespace eqc
