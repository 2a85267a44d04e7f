#include "qx/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace qx {

namespace {

// Dense symmetric matrix, row-major, order <= 64.
struct SymMatrix {
    int n;
    std::vector<double> a;

    explicit SymMatrix(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_, 0.0) {}
    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

SymMatrix signless_laplacian(const Graph& g) {
    SymMatrix m(g.order());
    for (int u = 0; u < g.order(); ++u) {
        m.at(u, u) = degree(g, u);
        for_each_vertex(g.neighbors(u), [&](int v) { m.at(u, v) = 1.0; });
    }
    return m;
}

SymMatrix adjacency(const Graph& g) {
    SymMatrix m(g.order());
    for (int u = 0; u < g.order(); ++u)
        for_each_vertex(g.neighbors(u), [&](int v) { m.at(u, v) = 1.0; });
    return m;
}

double off_diagonal_frobenius(const SymMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j) s += 2.0 * m.at(i, j) * m.at(i, j);
    return std::sqrt(s);
}

// Cyclic Jacobi on a copy of m; returns the largest eigenvalue and its
// eigenvector (accumulated rotations). Unconditionally convergent for
// symmetric input; the caller never needs more than the extreme pair.
std::pair<double, std::vector<double>> jacobi_largest(SymMatrix m, int max_sweeps,
                                                      int* sweeps_used) {
    const int n = m.n;
    std::vector<double> vecs(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) vecs[static_cast<std::size_t>(i) * n + i] = 1.0;

    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_frobenius(m) <= 1e-12) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = m.at(p, q);
                if (apq == 0.0) continue;
                double theta = (m.at(q, q) - m.at(p, p)) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double mkp = m.at(k, p), mkq = m.at(k, q);
                    m.at(k, p) = c * mkp - s * mkq;
                    m.at(k, q) = s * mkp + c * mkq;
                }
                for (int k = 0; k < n; ++k) {
                    double mpk = m.at(p, k), mqk = m.at(q, k);
                    m.at(p, k) = c * mpk - s * mqk;
                    m.at(q, k) = s * mpk + c * mqk;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = vecs[static_cast<std::size_t>(k) * n + p];
                    double vkq = vecs[static_cast<std::size_t>(k) * n + q];
                    vecs[static_cast<std::size_t>(k) * n + p] = c * vkp - s * vkq;
                    vecs[static_cast<std::size_t>(k) * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    if (sweep >= max_sweeps)
        throw std::runtime_error("Jacobi eigensolver failed to converge");
    if (sweeps_used) *sweeps_used = sweep;

    int best = 0;
    for (int i = 1; i < n; ++i)
        if (m.at(i, i) > m.at(best, best)) best = i;
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = vecs[static_cast<std::size_t>(i) * n + best];
    return {m.at(best, best), v};
}

double residual_inf(const SymMatrix& m, const std::vector<double>& x, double lambda) {
    double worst = 0.0;
    for (int i = 0; i < m.n; ++i) {
        double mx = 0.0;
        for (int j = 0; j < m.n; ++j) mx += m.at(i, j) * x[j];
        worst = std::max(worst, std::abs(mx - lambda * x[i]));
    }
    return worst;
}

// Power iteration with Rayleigh-quotient estimates on a symmetric matrix
// with nonnegative spectrum shift already applied. Falls back to Jacobi
// when the residual stalls (tiny spectral gap) or the cap is reached.
SpectralResult largest_eigenvalue(const SymMatrix& m, double shift,
                                  const SpectralOptions& opts) {
    const int n = m.n;
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n);

    double lambda = 0.0;
    double checkpoint = std::numeric_limits<double>::infinity();
    for (int it = 1; it <= opts.max_power_iterations; ++it) {
        double norm2 = 0.0;
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += m.at(i, j) * x[j];
            y[i] = s;
            norm2 += s * s;
        }
        double rq = 0.0;
        for (int i = 0; i < n; ++i) rq += x[i] * y[i];
        lambda = rq;

        double res = 0.0;
        for (int i = 0; i < n; ++i)
            res = std::max(res, std::abs(y[i] - lambda * x[i]));
        if (res <= opts.tolerance)
            return {lambda - shift, it, res};

        double norm = std::sqrt(norm2);
        if (norm == 0.0)  // x is in the kernel; spectrum is {0}
            return {0.0 - shift, it, 0.0};
        for (int i = 0; i < n; ++i) x[i] = y[i] / norm;

        if (it % 64 == 0) {
            if (res > 0.5 * checkpoint) break;  // stalled, hand over to Jacobi
            checkpoint = res;
        }
    }

    int sweeps = 0;
    auto [val, vec] = jacobi_largest(m, opts.max_jacobi_sweeps, &sweeps);
    return {val - shift, sweeps, residual_inf(m, vec, val)};
}

}  // namespace

SpectralResult q_index(const Graph& g, const SpectralOptions& opts) {
    // Q is entrywise nonnegative and positive semidefinite, so no shift.
    return largest_eigenvalue(signless_laplacian(g), 0.0, opts);
}

SpectralResult mu_index(const Graph& g, const SpectralOptions& opts) {
    // Shift by the maximum degree to keep the dominant eigenvalue on top
    // (bipartite graphs pair mu with -mu).
    SymMatrix m = adjacency(g);
    int delta = 0;
    for (int u = 0; u < g.order(); ++u) delta = std::max(delta, degree(g, u));
    for (int i = 0; i < m.n; ++i) m.at(i, i) += delta;
    return largest_eigenvalue(m, static_cast<double>(delta), opts);
}

Polynomial::Polynomial(std::vector<double> coefficients)
    : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty() || coeffs_.size() > 4)
        throw std::invalid_argument("polynomial degree must be between 0 and 3");
    if (coeffs_.back() == 0.0)
        throw std::invalid_argument("leading coefficient must be nonzero");
}

double Polynomial::operator()(double x) const {
    double v = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
    return v;
}

double Polynomial::derivative_at(double x) const {
    double v = 0.0;
    for (int i = degree(); i >= 1; --i) v = v * x + coeffs_[i] * i;
    return v;
}

double largest_real_root(const Polynomial& p, double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("empty bracket");
    double flo = p(lo), fhi = p(hi);
    if (flo == 0.0) {
        if (fhi == 0.0) throw std::invalid_argument("bracket endpoints both vanish");
    }
    if (flo * fhi > 0.0)
        throw std::invalid_argument("no sign change across the bracket");

    double a = lo, b = hi, fa = flo;
    for (int it = 0; it < 200 && b - a > 1e-13; ++it) {
        double mid = 0.5 * (a + b);
        double fm = p(mid);
        if (fm == 0.0) { a = b = mid; break; }
        if ((fa < 0.0) == (fm < 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    double x = 0.5 * (a + b);
    for (int it = 0; it < 4; ++it) {
        double d = p.derivative_at(x);
        if (d == 0.0) break;
        double step = p(x) / d;
        double nx = x - step;
        if (nx < lo || nx > hi) break;
        x = nx;
        if (std::abs(step) < 1e-14) break;
    }
    return x;
}

namespace {

// Characteristic polynomial det(xI - Q) by Faddeev-LeVerrier over int64;
// exact for integer matrices of this size.
std::vector<std::int64_t> charpoly_int(const Graph& g) {
    const int n = g.order();
    std::vector<std::int64_t> q(static_cast<std::size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u) {
        q[static_cast<std::size_t>(u) * n + u] = degree(g, u);
        for_each_vertex(g.neighbors(u),
                        [&](int v) { q[static_cast<std::size_t>(u) * n + v] = 1; });
    }

    // coeffs[k] multiplies x^k in det(xI - Q); coeffs[n] = 1
    std::vector<std::int64_t> coeffs(n + 1, 0);
    coeffs[n] = 1;
    std::vector<std::int64_t> mk(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) mk[static_cast<std::size_t>(i) * n + i] = 1;

    for (int k = 1; k <= n; ++k) {
        // mk = Q * mk_prev + coeffs[n-k+1]*I was folded in at the end of the
        // previous round; here compute A*Mk and the next coefficient.
        std::vector<std::int64_t> am(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                std::int64_t qil = q[static_cast<std::size_t>(i) * n + l];
                if (qil == 0) continue;
                for (int j = 0; j < n; ++j)
                    am[static_cast<std::size_t>(i) * n + j] +=
                        qil * mk[static_cast<std::size_t>(l) * n + j];
            }
        std::int64_t trace = 0;
        for (int i = 0; i < n; ++i) trace += am[static_cast<std::size_t>(i) * n + i];
        if (trace % k != 0)
            throw std::logic_error("Faddeev-LeVerrier division must be exact");
        coeffs[n - k] = -trace / k;
        mk = am;
        for (int i = 0; i < n; ++i)
            mk[static_cast<std::size_t>(i) * n + i] += coeffs[n - k];
    }
    return coeffs;
}

long double eval_ld(const std::vector<std::int64_t>& c, long double x) {
    long double v = 0.0L;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        v = v * x + static_cast<long double>(*it);
    return v;
}

double bisect_ld(const std::vector<std::int64_t>& c, long double a, long double b) {
    long double fa = eval_ld(c, a);
    for (int it = 0; it < 120 && b - a > 1e-14L; ++it) {
        long double mid = 0.5L * (a + b);
        long double fm = eval_ld(c, mid);
        if (fm == 0.0L) return static_cast<double>(mid);
        if ((fa < 0.0L) == (fm < 0.0L)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    return static_cast<double>(0.5L * (a + b));
}

// Roots with multiplicity of an integer-coefficient polynomial whose roots
// are all real and lie in [lo, hi]: recurse on the derivative, then pick up
// sign changes between consecutive critical points and multiple roots at
// critical points where the polynomial itself (numerically) vanishes.
std::vector<std::pair<double, int>> real_roots(const std::vector<std::int64_t>& c,
                                               double lo, double hi) {
    const int deg = static_cast<int>(c.size()) - 1;
    if (deg <= 0) return {};
    if (deg == 1)
        return {{static_cast<double>(-c[0]) / static_cast<double>(c[1]), 1}};

    std::vector<std::int64_t> dc(deg);
    for (int i = 1; i <= deg; ++i) dc[i - 1] = c[i] * i;
    auto crit = real_roots(dc, lo, hi);

    long double scale = 0.0L;
    long double xm = std::max(std::abs(lo), std::abs(hi));
    long double pw = 1.0L;
    for (std::size_t i = 0; i < c.size(); ++i, pw *= xm)
        scale += std::abs(static_cast<long double>(c[i])) * pw;
    const long double tau = std::max(1e-10L, scale * 1e-14L);

    // cut points: bracket ends plus the interior critical points, each cut
    // carrying the multiplicity it has as a root of the derivative
    std::vector<std::pair<double, int>> cuts{{lo, 0}};
    for (auto [r, m] : crit)
        if (r > lo && r < hi) cuts.emplace_back(r, m);
    cuts.emplace_back(hi, 0);
    std::sort(cuts.begin(), cuts.end());

    std::vector<std::pair<double, int>> roots;
    for (auto [r, m] : cuts)
        if (m > 0 && std::abs(eval_ld(c, r)) <= tau) roots.emplace_back(r, m + 1);

    // between consecutive cuts the polynomial is monotone: a strict sign
    // change isolates exactly one simple root
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double a = cuts[i].first, b = cuts[i + 1].first;
        long double fa = eval_ld(c, a), fb = eval_ld(c, b);
        if (std::abs(fa) <= tau || std::abs(fb) <= tau) continue;
        if ((fa < 0.0L) != (fb < 0.0L))
            roots.emplace_back(bisect_ld(c, a, b), 1);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace

std::vector<double> characteristic_q_eigenvalues_bruteforce(const Graph& g) {
    if (g.order() > 6)
        throw std::invalid_argument("characteristic-polynomial oracle requires n <= 6");
    auto coeffs = charpoly_int(g);
    // Q-spectrum lies in [0, 2n-2]
    auto roots = real_roots(coeffs, -0.5, 2.0 * g.order() - 1.5);
    std::vector<double> out;
    for (auto [r, m] : roots)
        for (int i = 0; i < m; ++i) out.push_back(r);
    if (static_cast<int>(out.size()) != g.order())
        throw std::logic_error("root isolation lost an eigenvalue (found " +
                               std::to_string(out.size()) + " of " +
                               std::to_string(g.order()) + ")");
    return out;
}

}  // namespace qx
