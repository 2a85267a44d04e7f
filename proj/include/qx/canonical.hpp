#ifndef QX_CANONICAL_HPP
#define QX_CANONICAL_HPP

#include <string>
#include <vector>

#include "qx/graph.hpp"

namespace qx {

// Isomorphism-invariant encoding: two graphs are isomorphic iff their
// encodings are byte-equal. The encoding is the graph6 string of the
// canonically relabeled graph, so it doubles as an exchange format.
struct CanonicalForm {
    std::string encoding;
    std::vector<int> labeling;  // labeling[v] = canonical position of v
};

CanonicalForm canonical_form(const Graph& g);

// Shorthand for canonical_form(g).encoding.
std::string canonical_g6(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace qx

#endif
