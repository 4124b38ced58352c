#ifndef EQC_ORACLE_HPP
#define EQC_ORACLE_HPP

#include <vector>

#include "eqc/coloring.hpp"
#include "eqc/graph.hpp"

namespace eqc {

struct OracleResult {
    int chi_eq = 0;
    Coloring witness;
};

// Exhaustive computation of the equitable chromatic number. For k = 1..n,
// enumerates assignments with canonical color first-use (vertex i may only
// open the next unused color) and per-class size caps; returns the first k
// admitting a proper assignment with class sizes differing by at most one.
// Enforces n <= 12. Shares no search code with the solver.
OracleResult brute_chi_eq(const Graph& g);

// Decides exhaustively whether some equitable coloring with at least
// min_colors classes extends the given partial coloring (color per vertex,
// -1 for uncolored; assigned classes must form a nonempty prefix and be
// stable sets). Extensions only add vertices to classes. Enforces n <= 10.
bool has_equitable_extension(const Graph& g, const std::vector<int>& partial,
    int min_colors);

} // namespace eqc

#endif
