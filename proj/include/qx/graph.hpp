#ifndef QX_GRAPH_HPP
#define QX_GRAPH_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace qx {

// Hard cap so a neighbor set is a single machine word.
inline constexpr int kMaxVertices = 64;

// Subset of vertex indices 0..n-1 as a bit mask.
using VertexSet = std::uint64_t;

constexpr VertexSet vertex_bit(int u) { return VertexSet{1} << u; }

constexpr VertexSet all_vertices(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr int set_size(VertexSet s) { return std::popcount(s); }

template <typename F>
void for_each_vertex(VertexSet s, F&& f) {
    while (s) {
        f(std::countr_zero(s));
        s &= s - 1;
    }
}

// Undirected simple graph on 1..64 vertices, one adjacency word per vertex.
// Immutable value type: every edit returns a fresh graph.
class Graph {
public:
    explicit Graph(int n);
    Graph(int n, std::span<const std::pair<int, int>> edges);
    Graph(int n, std::initializer_list<std::pair<int, int>> edges);

    int order() const { return n_; }
    VertexSet vertices() const { return all_vertices(n_); }
    VertexSet neighbors(int u) const;
    bool has_edge(int u, int v) const;
    int edge_count() const;

    bool operator==(const Graph& other) const;

private:
    friend Graph add_edge(const Graph&, int, int);
    friend Graph add_vertex(const Graph&, VertexSet);
    friend Graph remove_vertex(const Graph&, int);
    friend Graph induced_subgraph(const Graph&, VertexSet);
    friend Graph apply_permutation(const Graph&, std::span<const int>);
    friend Graph disjoint_union(const Graph&, const Graph&);

    void set_edge(int u, int v);

    int n_;
    std::array<VertexSet, kMaxVertices> adj_{};
};

int degree(const Graph& g, int u);

// Number of edges with both endpoints in x.
int edges_within(const Graph& g, VertexSet x);

// Number of edges joining x to y; x and y must be disjoint.
int edges_between(const Graph& g, VertexSet x, VertexSet y);

// Sum of deg(v) over neighbors v of u.
int neighborhood_degree_sum(const Graph& g, int u);

Graph add_edge(const Graph& g, int u, int v);

// Append a new vertex adjacent to the set nbrs (indices into the old graph).
Graph add_vertex(const Graph& g, VertexSet nbrs);

// Delete vertex w; vertices above w shift down by one.
Graph remove_vertex(const Graph& g, int w);

// Subgraph induced by the nonempty set keep, vertices renumbered in
// ascending order of their original indices.
Graph induced_subgraph(const Graph& g, VertexSet keep);

// perm[v] = new index of vertex v; perm must be a permutation of 0..n-1.
Graph apply_permutation(const Graph& g, std::span<const int> perm);

Graph disjoint_union(const Graph& a, const Graph& b);

bool is_connected(const Graph& g);

// Vertex sets of the connected components, lowest contained index first.
std::vector<VertexSet> components(const Graph& g);

}  // namespace qx

#endif
