#ifndef QX_FAMILIES_HPP
#define QX_FAMILIES_HPP

#include <string>
#include <string_view>
#include <utility>

#include "qx/graph.hpp"

namespace qx {

enum class FamilyKind {
    Friendship,       // F_n: floor(n/2) triangles through vertex 0; even n adds a pendant
    SplitSnk,         // S_{n,k} = K_k joined to an independent set of n-k
    SplitSnkPlus,     // S_{n,k} plus one edge inside the independent set
    Turan2,           // balanced complete bipartite T_2(n)
    StarPlus,         // star of order n with one extra edge (S_{n,1}^+)
    K1JoinTriangles,  // K_1 joined to (n-1)/3 disjoint triangles
    CompleteKn,
    CycleCn,
    PathPn,
};

struct FamilySpec {
    FamilyKind kind;
    int n;
    int k = 0;  // clique parameter, where applicable
};

// Parse CLI tokens: F:9, S:9,2, S+:10,2, T2:8, SP:7, K1T:7, K:5, C:6, P:4.
FamilySpec parse_family_spec(std::string_view token);
std::string family_name(const FamilySpec& spec);

// Vertex 0 is the dominating/center vertex in families that have one.
Graph build(const FamilySpec& spec);

// Closed form for q(F_n); odd n by the quadratic formula, even n by
// root-finding on the cubic inside its proven bracket. Requires n >= 3.
double q_friendship_closed(int n);

// q(S_{n,2}) = (n + 2 + sqrt(n^2 + 4n - 12)) / 2. Requires n >= 4.
double q_snk2_closed(int n);

// q(K_1 v ((n-1)/3) K_3) = (n + 4 + sqrt((n-4)^2 + 16)) / 2.
// Requires n >= 4 with n = 1 (mod 3).
double q_k1_join_triangles_closed(int n);

// Open interval that provably contains q(F_n): (n + 2/(n-1), n + 2/(n-2))
// for odd n >= 5 and (n + 2/n, n + 2/(n-1)) for even n >= 4.
std::pair<double, double> friendship_bounds(int n);

// Lower bound n + 2 - 4/(n+1) for q(S_{n,2}).
double snk2_lower_bound(int n);

}  // namespace qx

#endif
