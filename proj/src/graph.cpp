#include "qx/graph.hpp"

#include <stdexcept>
#include <string>

namespace qx {

namespace {

void check_order(int n) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be in [1, 64], got " +
                                    std::to_string(n));
}

void check_vertex(const Graph& g, int u) {
    if (u < 0 || u >= g.order())
        throw std::out_of_range("vertex index " + std::to_string(u) +
                                " out of range for order " +
                                std::to_string(g.order()));
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : n_(n) {
    check_order(n);
    for (auto [u, v] : edges) set_edge(u, v);
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges)
    : Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

void Graph::set_edge(int u, int v) {
    check_vertex(*this, u);
    check_vertex(*this, v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[u] |= vertex_bit(v);
    adj_[v] |= vertex_bit(u);
}

VertexSet Graph::neighbors(int u) const {
    check_vertex(*this, u);
    return adj_[u];
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(*this, u);
    check_vertex(*this, v);
    return (adj_[u] & vertex_bit(v)) != 0;
}

int Graph::edge_count() const {
    int total = 0;
    for (int u = 0; u < n_; ++u) total += std::popcount(adj_[u]);
    return total / 2;
}

bool Graph::operator==(const Graph& other) const {
    if (n_ != other.n_) return false;
    for (int u = 0; u < n_; ++u)
        if (adj_[u] != other.adj_[u]) return false;
    return true;
}

int degree(const Graph& g, int u) {
    return std::popcount(g.neighbors(u));
}

int edges_within(const Graph& g, VertexSet x) {
    int twice = 0;
    for_each_vertex(x & g.vertices(), [&](int u) {
        twice += std::popcount(g.neighbors(u) & x);
    });
    return twice / 2;
}

int edges_between(const Graph& g, VertexSet x, VertexSet y) {
    if ((x & y) != 0)
        throw std::invalid_argument("edges_between requires disjoint vertex sets");
    int count = 0;
    for_each_vertex(x & g.vertices(), [&](int u) {
        count += std::popcount(g.neighbors(u) & y);
    });
    return count;
}

int neighborhood_degree_sum(const Graph& g, int u) {
    int sum = 0;
    for_each_vertex(g.neighbors(u), [&](int v) { sum += degree(g, v); });
    return sum;
}

Graph add_edge(const Graph& g, int u, int v) {
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    Graph h = g;
    h.adj_[u] |= vertex_bit(v);
    h.adj_[v] |= vertex_bit(u);
    return h;
}

Graph add_vertex(const Graph& g, VertexSet nbrs) {
    int n = g.order();
    if (n + 1 > kMaxVertices) throw std::invalid_argument("graph order cap exceeded");
    if ((nbrs & ~g.vertices()) != 0)
        throw std::invalid_argument("neighbor set references missing vertices");
    Graph h(n + 1);
    for (int u = 0; u < n; ++u) h.adj_[u] = g.adj_[u];
    h.adj_[n] = nbrs;
    for_each_vertex(nbrs, [&](int u) { h.adj_[u] |= vertex_bit(n); });
    return h;
}

Graph remove_vertex(const Graph& g, int w) {
    check_vertex(g, w);
    int n = g.order();
    if (n == 1) throw std::invalid_argument("cannot remove the last vertex");
    Graph h(n - 1);
    const VertexSet low = vertex_bit(w) - 1;
    for (int u = 0; u < n; ++u) {
        if (u == w) continue;
        VertexSet row = g.adj_[u];
        VertexSet squeezed = (row & low) | ((row >> 1) & ~low);
        h.adj_[u < w ? u : u - 1] = squeezed;
    }
    return h;
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
    keep &= g.vertices();
    if (keep == 0) throw std::invalid_argument("induced subgraph must be nonempty");
    std::array<int, kMaxVertices> renumber{};
    int m = 0;
    for_each_vertex(keep, [&](int v) { renumber[v] = m++; });
    Graph h(m);
    for_each_vertex(keep, [&](int u) {
        for_each_vertex(g.neighbors(u) & keep, [&](int v) {
            h.adj_[renumber[u]] |= vertex_bit(renumber[v]);
        });
    });
    return h;
}

Graph apply_permutation(const Graph& g, std::span<const int> perm) {
    int n = g.order();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permutation size mismatch");
    VertexSet seen = 0;
    for (int v : perm) {
        if (v < 0 || v >= n || (seen & vertex_bit(v)))
            throw std::invalid_argument("not a permutation");
        seen |= vertex_bit(v);
    }
    Graph h(n);
    for (int u = 0; u < n; ++u) {
        VertexSet row = 0;
        for_each_vertex(g.adj_[u], [&](int v) { row |= vertex_bit(perm[v]); });
        h.adj_[perm[u]] = row;
    }
    return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    int n = a.order() + b.order();
    check_order(n);
    Graph h(n);
    for (int u = 0; u < a.order(); ++u) h.adj_[u] = a.adj_[u];
    for (int u = 0; u < b.order(); ++u)
        h.adj_[a.order() + u] = b.adj_[u] << a.order();
    return h;
}

bool is_connected(const Graph& g) {
    VertexSet reached = vertex_bit(0);
    for (;;) {
        VertexSet next = reached;
        for_each_vertex(reached, [&](int u) { next |= g.neighbors(u); });
        if (next == reached) break;
        reached = next;
    }
    return reached == g.vertices();
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet left = g.vertices();
    while (left) {
        VertexSet comp = vertex_bit(std::countr_zero(left));
        for (;;) {
            VertexSet next = comp;
            for_each_vertex(comp, [&](int u) { next |= g.neighbors(u); });
            if (next == comp) break;
            comp = next;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

}  // namespace qx
