#ifndef QX_PATTERNS_HPP
#define QX_PATTERNS_HPP

#include <span>
#include <string_view>
#include <vector>

#include "qx/graph.hpp"

namespace qx {

enum class PatternKind { Cycle, Path };

// Cycles and paths are sought as subgraphs, not induced subgraphs:
// a chord never rescues a graph from containing C_k.
struct PatternQuery {
    PatternKind kind;
    int length;  // number of vertices of the pattern
};

// Parse "C4", "P6", ... (case-insensitive).
PatternQuery parse_pattern(std::string_view token);
std::string pattern_name(const PatternQuery& q);

// True iff g has a cycle on exactly k vertices as a subgraph; k >= 3.
bool contains_cycle(const Graph& g, int k);

// True iff g has a path on k vertices as a subgraph; k >= 1.
bool contains_path(const Graph& g, int k);

bool is_forbidden_free(const Graph& g, std::span<const PatternQuery> forbidden);

namespace detail {

// Restriction of contains_cycle to cycles through a fixed vertex; used by
// the enumerator, where any new cycle must pass through the added vertex.
bool contains_cycle_through(const Graph& g, int k, int v);

// Subset-and-rotation brute force, for audits and tests only.
bool contains_cycle_bruteforce(const Graph& g, int k);

}  // namespace detail

}  // namespace qx

#endif
