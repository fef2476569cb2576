#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace isospec::spectral {

// Second-order central-difference discretization of -c D^2 + V on (a, b)
// with Dirichlet boundaries; n interior points x_i = a + (i+1) h,
// h = (b-a)/(n+1).  Symmetric tridiagonal with constant off-diagonal.
struct DiscreteHamiltonian {
    double a = 0.0;
    double b = 1.0;
    std::size_t n = 0;
    double scaling = 1.0;  // c
    double step = 0.0;     // h
    std::vector<double> diagonal;  // V(x_i) + 2c/h^2
    double off_diagonal = 0.0;     // -c/h^2

    double x(std::size_t i) const { return a + step * static_cast<double>(i + 1); }
};

struct SpectrumReport {
    std::vector<double> eigenvalues;  // strictly increasing
    std::vector<double> residuals;    // per eigenpair, relative to the matrix scale
    bool converged = true;
    // grid metadata
    double a = 0.0;
    double b = 0.0;
    std::size_t n = 0;
    double scaling = 1.0;
    // optional tags set by callers
    std::string family;
    double gamma = std::numeric_limits<double>::quiet_NaN();
};

// Throws std::domain_error naming the grid point if a potential sample is
// not finite (catches singular-gamma family members).
DiscreteHamiltonian build_hamiltonian(const std::function<double(double)>& potential,
                                      double a, double b, std::size_t n, double scaling);

// k lowest eigenvalues by Sturm-sequence bisection (absolute tolerance
// 1e-10), eigenvectors by inverse iteration for the residual report.
SpectrumReport lowest_eigenvalues(const DiscreteHamiltonian& h, std::size_t k);

// ||(-c D^2 + V - E) psi||_2 / ||psi||_2 on the interior of the grid with a
// 5-point finite-difference Laplacian.
double eigen_residual(const std::function<double(double)>& potential,
                      const std::function<double(double)>& psi,
                      double energy, double a, double b, std::size_t n, double scaling);

}  // namespace isospec::spectral
