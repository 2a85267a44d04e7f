#ifndef QX_BOUNDS_HPP
#define QX_BOUNDS_HPP

#include <optional>

#include "qx/graph.hpp"

namespace qx {

struct BoundReport {
    double value = 0.0;
    std::optional<int> attaining_vertex;  // for vertex-maximized bounds
    double slack = 0.0;                   // value - q(G)
};

// q(G) <= max_u [ d(u) + (1/d(u)) sum_{v in N(u)} d(v) ]. Vertices of
// degree 0 cannot attain the maximum in any graph with an edge and are
// skipped; an edgeless graph is an error.
BoundReport merris_bound(const Graph& g);

// q(G) <= 2 e(G)/(n-1) + n - 2; requires n >= 2.
BoundReport das_bound(const Graph& g);

// For a P_{k+2}-free graph: checks e(G) <= k n / 2, and in the equality
// case additionally that every component is a K_{k+1}. Throws if the
// precondition fails (g contains P_{k+2}).
bool erdos_gallai_check(const Graph& g, int k);

// 1 + d(u) + (n-1)/d(u); valid for C4-free graphs, requires d(u) >= 2.
double proof_local_bound_c4(const Graph& g, int u);

}  // namespace qx

#endif
