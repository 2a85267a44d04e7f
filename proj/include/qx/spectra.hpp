#ifndef QX_SPECTRA_HPP
#define QX_SPECTRA_HPP

#include <vector>

#include "qx/graph.hpp"

namespace qx {

struct SpectralResult {
    double value = 0.0;
    int iterations = 0;
    double residual = 0.0;  // ||Mx - value*x||_inf at convergence
};

struct SpectralOptions {
    double tolerance = 1e-10;      // residual target for the fast path
    int max_power_iterations = 5000;
    int max_jacobi_sweeps = 100;
};

// Largest eigenvalue of the signless Laplacian Q = D + A.
SpectralResult q_index(const Graph& g, const SpectralOptions& opts = {});

// Largest eigenvalue of the adjacency matrix A.
SpectralResult mu_index(const Graph& g, const SpectralOptions& opts = {});

// Real polynomial of degree <= 3, coefficients[i] multiplies x^i.
class Polynomial {
public:
    explicit Polynomial(std::vector<double> coefficients);
    double operator()(double x) const;
    double derivative_at(double x) const;
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

private:
    std::vector<double> coeffs_;
};

// Root in [lo, hi] to absolute tolerance 1e-12, bisection then Newton
// polish; requires a sign change across the bracket.
double largest_real_root(const Polynomial& p, double lo, double hi);

// All eigenvalues of Q(g), ascending, with multiplicity, obtained by exact
// characteristic-polynomial expansion and derivative-guided root isolation.
// Test oracle, independent of the iterative solvers; requires n <= 6.
std::vector<double> characteristic_q_eigenvalues_bruteforce(const Graph& g);

}  // namespace qx

#endif
