#include "qx/canonical.hpp"

#include <algorithm>

#include "qx/graph6.hpp"

namespace qx {

namespace {

// Ordered partition of the vertex set; cell order carries meaning.
struct Partition {
    std::array<VertexSet, kMaxVertices> cells{};
    int count = 0;
};

// Equitable refinement: split cells by neighbor counts against every cell,
// keeping subcells ordered by ascending count, until stable. Counts are
// label-free, so the refined cell order is isomorphism-invariant.
void refine(const Graph& g, Partition& p) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int s = 0; s < p.count && !changed; ++s) {
            const VertexSet splitter = p.cells[s];
            for (int c = 0; c < p.count && !changed; ++c) {
                const VertexSet cell = p.cells[c];
                if (set_size(cell) <= 1) continue;
                std::array<VertexSet, kMaxVertices + 1> bucket{};
                int lo = kMaxVertices, hi = 0;
                for_each_vertex(cell, [&](int v) {
                    int k = std::popcount(g.neighbors(v) & splitter);
                    bucket[k] |= vertex_bit(v);
                    lo = std::min(lo, k);
                    hi = std::max(hi, k);
                });
                if (lo == hi) continue;
                int pieces = 0;
                std::array<VertexSet, kMaxVertices + 1> split{};
                for (int k = lo; k <= hi; ++k)
                    if (bucket[k]) split[pieces++] = bucket[k];
                for (int i = p.count - 1; i > c; --i)
                    p.cells[i + pieces - 1] = p.cells[i];
                for (int i = 0; i < pieces; ++i) p.cells[c + i] = split[i];
                p.count += pieces - 1;
                changed = true;
            }
        }
    }
}

struct Searcher {
    const Graph& g;
    int n;
    bool have_best = false;
    std::array<std::uint64_t, kMaxVertices> best_rows{};
    std::array<int, kMaxVertices> best_order{};

    // True twins or false twins swap by an automorphism fixing everything
    // else, so only one of them needs to be tried per branch point.
    bool twins(int a, int b) const {
        VertexSet na = g.neighbors(a), nb = g.neighbors(b);
        if (na == nb) return true;
        return (na | vertex_bit(a)) == (nb | vertex_bit(b));
    }

    void step(const Partition& refined) {
        std::array<int, kMaxVertices> order{};
        int fixed = 0;
        while (fixed < refined.count && set_size(refined.cells[fixed]) == 1) {
            order[fixed] = std::countr_zero(refined.cells[fixed]);
            ++fixed;
        }

        // Leading singleton cells pin the first `fixed` positions; compare
        // their adjacency rows against the best encoding so far.
        std::array<std::uint64_t, kMaxVertices> rows{};
        int cmp = 0;
        for (int pos = 1; pos < fixed; ++pos) {
            std::uint64_t r = 0;
            const VertexSet nb = g.neighbors(order[pos]);
            for (int q = 0; q < pos; ++q)
                r = (r << 1) | ((nb >> order[q]) & 1);
            rows[pos] = r;
            if (have_best && cmp == 0) {
                if (r < best_rows[pos]) cmp = -1;
                else if (r > best_rows[pos]) { cmp = 1; break; }
            }
        }
        if (have_best && cmp > 0) return;

        if (fixed == n) {
            if (!have_best || cmp < 0) {
                best_rows = rows;
                best_order = order;
                have_best = true;
            }
            return;
        }

        const VertexSet cell = refined.cells[fixed];
        std::array<int, kMaxVertices> tried{};
        int ntried = 0;
        for_each_vertex(cell, [&](int v) {
            for (int i = 0; i < ntried; ++i)
                if (twins(tried[i], v)) return;
            tried[ntried++] = v;

            Partition child;
            child.count = refined.count + 1;
            for (int i = 0; i < fixed; ++i) child.cells[i] = refined.cells[i];
            child.cells[fixed] = vertex_bit(v);
            child.cells[fixed + 1] = cell & ~vertex_bit(v);
            for (int i = fixed + 1; i < refined.count; ++i)
                child.cells[i + 1] = refined.cells[i];
            refine(g, child);
            step(child);
        });
    }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    const int n = g.order();
    Searcher s{g, n};
    Partition unit;
    unit.cells[0] = g.vertices();
    unit.count = 1;
    refine(g, unit);
    s.step(unit);

    CanonicalForm out;
    out.labeling.assign(n, 0);
    std::vector<int> perm(n);
    for (int pos = 0; pos < n; ++pos) {
        out.labeling[s.best_order[pos]] = pos;
        perm[s.best_order[pos]] = pos;
    }
    out.encoding = encode_graph6(apply_permutation(g, perm));
    return out;
}

std::string canonical_g6(const Graph& g) { return canonical_form(g).encoding; }

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a).encoding == canonical_form(b).encoding;
}

}  // namespace qx
