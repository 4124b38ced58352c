#ifndef EQC_SOLVER_HPP
#define EQC_SOLVER_HPP

#include <functional>
#include <string>
#include <vector>

#include "eqc/bounds.hpp"
#include "eqc/coloring.hpp"
#include "eqc/graph.hpp"

namespace eqc {

enum class VertexStrategy { Dsatur, Celim, Pass };
enum class ColorStrategy { Dsatur, Bccol, Order1, Order2 };
enum class SolveStatus { Optimal, TimeLimit };

VertexStrategy parse_vertex_strategy(const std::string& name); // dsatur|celim|pass
ColorStrategy parse_color_strategy(const std::string& name);   // dsatur|bccol|order1|order2
std::string to_string(VertexStrategy vss);
std::string to_string(ColorStrategy css);
std::string to_string(SolveStatus status);

struct SolverConfig {
    VertexStrategy vss = VertexStrategy::Pass;
    ColorStrategy css = ColorStrategy::Dsatur;
    int pass_threshold = 3;
    // Baseline mode: the equity prune is disabled and equity is only
    // checked at the leaves of the search tree (the lower bound is unused).
    bool trivial_mode = false;
    double time_limit_seconds = 7200.0;
};

struct SolveResult {
    Coloring best_coloring;
    int ub = 0;
    SolveStatus status = SolveStatus::Optimal;
    long long nodes = 0;
    double seconds = 0.0;
    int lb_used = 0;
};

// Mutable search state: color classes, per-vertex availability over colors
// 0..n-1, saturation degrees, and the counters k (nonempty classes),
// largest class size M and its multiplicity t, all maintained
// incrementally. assign/unassign must nest LIFO; nonempty classes always
// form a prefix of the color range.
class PartialColoring {
public:
    explicit PartialColoring(const Graph& g);

    void assign(int v, int c);
    void unassign(int v, int c);

    int k() const { return k_; }
    int largest() const { return largest_; }          // M
    int num_largest() const { return num_largest_; }  // t
    int class_size(int c) const { return class_size_[c]; }
    int color_of(int v) const { return color_of_[v]; }
    bool is_uncolored(int v) const { return color_of_[v] < 0; }
    int num_uncolored() const { return num_uncolored_; }
    const bitset& uncolored() const { return uncolored_; }
    const bitset& avail(int v) const { return avail_[v]; }
    int saturation(int v) const { return sat_[v]; }
    const std::vector<int>& colors() const { return color_of_; }
    const Graph& graph() const { return *g_; }

    // Recomputes every maintained quantity from scratch and throws
    // std::logic_error on any mismatch.
    void check_counters() const;

private:
    const Graph* g_ = nullptr;
    std::vector<int> color_of_;
    bitset uncolored_;
    std::vector<int> class_size_;
    std::vector<int> size_hist_; // classes per nonzero size
    std::vector<bitset> avail_;
    std::vector<int> sat_;
    // colored neighbors per (vertex, color); availability flips exactly
    // when a count crosses zero, which makes unassign an exact inverse
    std::vector<std::vector<std::uint16_t>> neighbor_color_count_;
    int k_ = 0, largest_ = 0, num_largest_ = 0, num_uncolored_ = 0;
};

// Equity prune test (with lb = k this is the exact extension
// characterization): a partial k-coloring with largest class M repeated t
// times can only extend to an equitable coloring with >= lb classes if
// n >= (M-1) * max(k, lb) + t.
bool can_extend(long long n, long long largest, long long t, long long k,
    long long lb);

// Picks the next vertex to branch on among those of maximum saturation.
// ub caps the color range considered by the celim/pass scores.
int select_vertex(const PartialColoring& state, const Graph& g,
    const SolverConfig& cfg, int ub);

// Candidate colors for u, ordered by the color selection strategy. The
// candidate set is {c in F(u) : c <= min(k, ub-2)} (0-based; at most one
// fresh color, never reaching the incumbent's color count).
std::vector<int> color_order(const PartialColoring& state, int u,
    ColorStrategy css, int ub);

// Test instrumentation: on_pruned is invoked with the search state right
// after a branch failed the equity prune (assignment applied, then rolled
// back); verify_counters recomputes the incremental bookkeeping at every
// node.
struct SolveHooks {
    std::function<void(const PartialColoring&, int lb)> on_pruned;
    bool verify_counters = false;
};

// Branch-and-bound for the equitable chromatic number, seeded with the
// bounds report's maximal clique and naive coloring. Returns the optimum
// (status Optimal) or the best incumbent at the time limit. The time check
// runs every 1024 node entries.
SolveResult solve(const Graph& g, const SolverConfig& cfg,
    const BoundsReport& bounds, const SolveHooks* hooks = nullptr);

inline constexpr long long time_check_interval_nodes = 1024;

} // namespace eqc

#endif
