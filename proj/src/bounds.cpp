#include "qx/bounds.hpp"

#include <stdexcept>

#include "qx/patterns.hpp"
#include "qx/spectra.hpp"

namespace qx {

BoundReport merris_bound(const Graph& g) {
    BoundReport report;
    for (int u = 0; u < g.order(); ++u) {
        int d = degree(g, u);
        if (d == 0) continue;
        double value = d + static_cast<double>(neighborhood_degree_sum(g, u)) / d;
        if (!report.attaining_vertex || value > report.value) {
            report.value = value;
            report.attaining_vertex = u;
        }
    }
    if (!report.attaining_vertex)
        throw std::invalid_argument("Merris bound is undefined on edgeless graphs");
    report.slack = report.value - q_index(g).value;
    return report;
}

BoundReport das_bound(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw std::invalid_argument("Das bound requires n >= 2");
    BoundReport report;
    report.value = 2.0 * g.edge_count() / (n - 1.0) + n - 2.0;
    report.slack = report.value - q_index(g).value;
    return report;
}

bool erdos_gallai_check(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("path parameter must be positive");
    if (contains_path(g, k + 2))
        throw std::invalid_argument("graph contains P_" + std::to_string(k + 2) +
                                    "; Erdos-Gallai hypothesis violated");
    const long twice_e = 2L * g.edge_count();
    const long kn = static_cast<long>(k) * g.order();
    if (twice_e > kn) return false;
    if (twice_e == kn) {
        // equality must force a disjoint union of K_{k+1}
        for (VertexSet comp : components(g)) {
            int size = set_size(comp);
            if (size != k + 1) return false;
            if (edges_within(g, comp) != size * (size - 1) / 2) return false;
        }
    }
    return true;
}

double proof_local_bound_c4(const Graph& g, int u) {
    int d = degree(g, u);
    if (d < 2) throw std::invalid_argument("local bound requires d(u) >= 2");
    return 1.0 + d + (g.order() - 1.0) / d;
}

}  // namespace qx
