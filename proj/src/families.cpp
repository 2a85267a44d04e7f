#include "qx/families.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "qx/spectra.hpp"

namespace qx {

namespace {

[[noreturn]] void bad_spec(const std::string& what) {
    throw std::invalid_argument("invalid family spec: " + what);
}

Graph build_friendship(int n) {
    if (n < 3) bad_spec("friendship graph requires n >= 3");
    Graph g(n);
    const int odd = (n % 2 == 1) ? n : n - 1;
    for (int i = 1; i + 1 < odd; i += 2) {
        g = add_edge(g, 0, i);
        g = add_edge(g, 0, i + 1);
        g = add_edge(g, i, i + 1);
    }
    if (n % 2 == 0) g = add_edge(g, 0, n - 1);  // pendant hanging off the center
    return g;
}

Graph build_snk(int n, int k, bool plus) {
    if (k < 1 || k >= n) bad_spec("S_{n,k} requires 1 <= k < n");
    if (plus && n - k < 2) bad_spec("S_{n,k}+ needs two independent vertices");
    Graph g(n);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < n; ++j) g = add_edge(g, i, j);
    if (plus) g = add_edge(g, k, k + 1);
    return g;
}

Graph build_turan2(int n) {
    if (n < 2) bad_spec("T_2(n) requires n >= 2");
    const int a = (n + 1) / 2;  // part {0..a-1}, part {a..n-1}
    Graph g(n);
    for (int i = 0; i < a; ++i)
        for (int j = a; j < n; ++j) g = add_edge(g, i, j);
    return g;
}

Graph build_star_plus(int n) {
    if (n < 3) bad_spec("S_{n,1}+ requires n >= 3");
    Graph g(n);
    for (int i = 1; i < n; ++i) g = add_edge(g, 0, i);
    return add_edge(g, 1, 2);
}

Graph build_k1_join_triangles(int n) {
    if (n < 4 || n % 3 != 1) bad_spec("K_1 v tK_3 requires n >= 4 with n = 1 (mod 3)");
    Graph g(n);
    for (int i = 1; i < n; ++i) g = add_edge(g, 0, i);
    for (int i = 1; i + 2 < n; i += 3) {
        g = add_edge(g, i, i + 1);
        g = add_edge(g, i, i + 2);
        g = add_edge(g, i + 1, i + 2);
    }
    return g;
}

Graph build_complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g = add_edge(g, i, j);
    return g;
}

Graph build_cycle(int n) {
    if (n < 3) bad_spec("C_n requires n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g = add_edge(g, i, (i + 1) % n);
    return g;
}

Graph build_path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g = add_edge(g, i, i + 1);
    return g;
}

}  // namespace

FamilySpec parse_family_spec(std::string_view token) {
    auto colon = token.find(':');
    if (colon == std::string_view::npos || colon + 1 >= token.size())
        bad_spec("expected '<kind>:<n>[,<k>]', got '" + std::string(token) + "'");
    std::string head(token.substr(0, colon));
    std::string tail(token.substr(colon + 1));

    int n = 0, k = 0;
    bool has_k = false;
    try {
        auto comma = tail.find(',');
        if (comma == std::string::npos) {
            n = std::stoi(tail);
        } else {
            n = std::stoi(tail.substr(0, comma));
            k = std::stoi(tail.substr(comma + 1));
            has_k = true;
        }
    } catch (const std::exception&) {
        bad_spec("cannot parse order in '" + std::string(token) + "'");
    }

    auto need_k = [&](FamilyKind kind) -> FamilySpec {
        if (!has_k) bad_spec("'" + head + "' needs n,k");
        return {kind, n, k};
    };
    auto no_k = [&](FamilyKind kind) -> FamilySpec {
        if (has_k) bad_spec("'" + head + "' takes a single order parameter");
        return {kind, n, 0};
    };

    if (head == "F") return no_k(FamilyKind::Friendship);
    if (head == "S") return need_k(FamilyKind::SplitSnk);
    if (head == "S+") return need_k(FamilyKind::SplitSnkPlus);
    if (head == "T2") return no_k(FamilyKind::Turan2);
    if (head == "SP") return no_k(FamilyKind::StarPlus);
    if (head == "K1T") return no_k(FamilyKind::K1JoinTriangles);
    if (head == "K") return no_k(FamilyKind::CompleteKn);
    if (head == "C") return no_k(FamilyKind::CycleCn);
    if (head == "P") return no_k(FamilyKind::PathPn);
    bad_spec("unknown family kind '" + head + "'");
}

std::string family_name(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::Friendship: return "F_" + std::to_string(spec.n);
        case FamilyKind::SplitSnk:
            return "S_{" + std::to_string(spec.n) + "," + std::to_string(spec.k) + "}";
        case FamilyKind::SplitSnkPlus:
            return "S_{" + std::to_string(spec.n) + "," + std::to_string(spec.k) + "}+";
        case FamilyKind::Turan2: return "T_2(" + std::to_string(spec.n) + ")";
        case FamilyKind::StarPlus: return "S_{" + std::to_string(spec.n) + ",1}+";
        case FamilyKind::K1JoinTriangles:
            return "K_1 v " + std::to_string((spec.n - 1) / 3) + "K_3";
        case FamilyKind::CompleteKn: return "K_" + std::to_string(spec.n);
        case FamilyKind::CycleCn: return "C_" + std::to_string(spec.n);
        case FamilyKind::PathPn: return "P_" + std::to_string(spec.n);
    }
    bad_spec("unreachable");
}

Graph build(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::Friendship: return build_friendship(spec.n);
        case FamilyKind::SplitSnk: return build_snk(spec.n, spec.k, false);
        case FamilyKind::SplitSnkPlus: return build_snk(spec.n, spec.k, true);
        case FamilyKind::Turan2: return build_turan2(spec.n);
        case FamilyKind::StarPlus: return build_star_plus(spec.n);
        case FamilyKind::K1JoinTriangles: return build_k1_join_triangles(spec.n);
        case FamilyKind::CompleteKn: return build_complete(spec.n);
        case FamilyKind::CycleCn: return build_cycle(spec.n);
        case FamilyKind::PathPn: return build_path(spec.n);
    }
    bad_spec("unreachable");
}

double q_friendship_closed(int n) {
    if (n < 3) throw std::invalid_argument("q(F_n) requires n >= 3");
    if (n % 2 == 1) {
        double d = static_cast<double>(n) - 2.0;
        return (n + 2.0 + std::sqrt(d * d + 8.0)) / 2.0;
    }
    // largest root of x^3 - (n+3)x^2 + 3nx - (2n-4), bracketed by the
    // proven interval (n + 2/n, n + 2/(n-1))
    Polynomial cubic({4.0 - 2.0 * n, 3.0 * n, -(n + 3.0), 1.0});
    auto [lo, hi] = friendship_bounds(n);
    return largest_real_root(cubic, lo, hi);
}

double q_snk2_closed(int n) {
    if (n < 4) throw std::invalid_argument("q(S_{n,2}) closed form requires n >= 4");
    double nn = n;
    return (nn + 2.0 + std::sqrt(nn * nn + 4.0 * nn - 12.0)) / 2.0;
}

double q_k1_join_triangles_closed(int n) {
    if (n < 4 || n % 3 != 1)
        throw std::invalid_argument("closed form requires n >= 4 with n = 1 (mod 3)");
    double d = static_cast<double>(n) - 4.0;
    return (n + 4.0 + std::sqrt(d * d + 16.0)) / 2.0;
}

std::pair<double, double> friendship_bounds(int n) {
    if (n % 2 == 1) {
        if (n < 5) throw std::invalid_argument("odd-order bound requires n >= 5");
        return {n + 2.0 / (n - 1.0), n + 2.0 / (n - 2.0)};
    }
    if (n < 4) throw std::invalid_argument("even-order bound requires n >= 4");
    return {n + 2.0 / n, n + 2.0 / (n - 1.0)};
}

double snk2_lower_bound(int n) {
    return n + 2.0 - 4.0 / (n + 1.0);
}

}  // namespace qx
