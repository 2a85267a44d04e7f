#include "qx/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qx {

PatternQuery parse_pattern(std::string_view token) {
    if (token.size() >= 2) {
        char c = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
        int len = 0;
        bool digits = true;
        for (std::size_t i = 1; i < token.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(token[i]))) { digits = false; break; }
            len = len * 10 + (token[i] - '0');
        }
        if (digits) {
            if (c == 'C' && len >= 3) return {PatternKind::Cycle, len};
            if (c == 'P' && len >= 1) return {PatternKind::Path, len};
        }
    }
    throw std::invalid_argument("cannot parse pattern '" + std::string(token) +
                                "' (expected e.g. C4 or P6)");
}

std::string pattern_name(const PatternQuery& q) {
    return (q.kind == PatternKind::Cycle ? "C" : "P") + std::to_string(q.length);
}

namespace {

// Extend a simple path one vertex at a time; close when it has k vertices
// and the head sees the anchor. `allowed` restricts which vertices may
// appear (used for the min-index symmetry break).
bool cycle_dfs(const Graph& g, int k, int anchor, int head, VertexSet visited,
               int len, VertexSet allowed) {
    if (len == k) return (g.neighbors(head) & vertex_bit(anchor)) != 0;
    bool found = false;
    VertexSet cand = g.neighbors(head) & allowed & ~visited;
    while (cand && !found) {
        int u = std::countr_zero(cand);
        cand &= cand - 1;
        found = cycle_dfs(g, k, anchor, u, visited | vertex_bit(u), len + 1, allowed);
    }
    return found;
}

}  // namespace

bool contains_cycle(const Graph& g, int k) {
    if (k < 3) throw std::invalid_argument("cycle length must be at least 3");
    if (k > g.order()) return false;
    for (int s = 0; s + k <= g.order(); ++s) {
        // s is the minimum-index vertex on the sought cycle.
        VertexSet allowed = g.vertices() & ~(vertex_bit(s) - 1);
        if (cycle_dfs(g, k, s, s, vertex_bit(s), 1, allowed)) return true;
    }
    return false;
}

bool contains_path(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("path order must be at least 1");
    if (k > g.order()) return false;
    if (k == 1) return true;
    std::vector<std::pair<int, VertexSet>> stack;
    for (int s = 0; s < g.order(); ++s) {
        stack.clear();
        stack.emplace_back(s, vertex_bit(s));
        // depth = popcount of the visited mask
        while (!stack.empty()) {
            const int head = stack.back().first;
            const VertexSet visited = stack.back().second;
            stack.pop_back();
            if (set_size(visited) == k) return true;
            VertexSet cand = g.neighbors(head) & ~visited;
            for_each_vertex(cand, [&](int u) {
                stack.emplace_back(u, visited | vertex_bit(u));
            });
        }
    }
    return false;
}

bool is_forbidden_free(const Graph& g, std::span<const PatternQuery> forbidden) {
    for (const auto& q : forbidden) {
        if (q.kind == PatternKind::Cycle) {
            if (contains_cycle(g, q.length)) return false;
        } else {
            if (contains_path(g, q.length)) return false;
        }
    }
    return true;
}

namespace detail {

bool contains_cycle_through(const Graph& g, int k, int v) {
    if (k < 3) throw std::invalid_argument("cycle length must be at least 3");
    if (k > g.order()) return false;
    return cycle_dfs(g, k, v, v, vertex_bit(v), 1, g.vertices());
}

bool contains_cycle_bruteforce(const Graph& g, int k) {
    const int n = g.order();
    if (k > n) return false;
    std::vector<int> subset;
    // iterate all k-subsets via the selection mask
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + k, true);
    do {
        subset.clear();
        for (int i = 0; i < n; ++i)
            if (mask[i]) subset.push_back(i);
        // fix subset[0] first; try every ordering of the rest as a cycle
        std::vector<int> rest(subset.begin() + 1, subset.end());
        std::sort(rest.begin(), rest.end());
        do {
            bool ok = g.has_edge(subset[0], rest.front()) &&
                      g.has_edge(rest.back(), subset[0]);
            for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i)
                ok = g.has_edge(rest[i], rest[i + 1]);
            if (ok) return true;
        } while (std::next_permutation(rest.begin(), rest.end()));
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return false;
}

}  // namespace detail

}  // namespace qx
