#ifndef EQC_COLORING_HPP
#define EQC_COLORING_HPP

#include <vector>

#include "eqc/graph.hpp"

namespace eqc {

// A full coloring: color per vertex, colors 0-based. Solver and heuristic
// outputs use a contiguous color range 0..k-1.
using Coloring = std::vector<int>;

// Number of distinct colors used (classes are counted as nonempty ones).
int num_colors(const Coloring& coloring);

// Sizes of the nonempty color classes.
std::vector<int> class_sizes(const Coloring& coloring);

bool is_proper(const Graph& g, const Coloring& coloring);

// Pairwise equity: all class sizes differ by at most one.
bool equity_pairwise(const std::vector<int>& sizes);

// Arithmetic equity test over a full k-coloring with largest class M
// repeated t times: n >= (M-1)k + t. Equivalent to the pairwise
// definition for full colorings.
bool equity_arithmetic(long long n, long long largest, long long t, long long k);

// Proper and equitable: no monochromatic edge, and the arithmetic test
// holds over the nonempty classes. Every vertex must be colored.
bool verify_eqcol(const Graph& g, const Coloring& coloring);

} // namespace eqc

#endif
