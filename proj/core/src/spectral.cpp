#include "isospec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace isospec::spectral {

namespace {

// Number of eigenvalues of the symmetric tridiagonal (diag, off) strictly
// below x, from the signs of the Sturm sequence pivots.
std::size_t count_below(const std::vector<double>& diag, double off_sq, double x) {
    std::size_t count = 0;
    double q = diag[0] - x;
    if (q < 0.0)
        ++count;
    for (std::size_t i = 1; i < diag.size(); ++i) {
        if (q == 0.0)
            q = -1e-300;
        q = diag[i] - x - off_sq / q;
        if (q < 0.0)
            ++count;
    }
    return count;
}

// One inverse-iteration solve (T - lambda) v = w with partial pivoting;
// tridiagonal plus one fill-in superdiagonal.
void shifted_solve(const std::vector<double>& diag, double off, double lambda,
                   std::vector<double>& v) {
    const std::size_t n = diag.size();
    std::vector<double> d(n), e(n, 0.0), f(n, 0.0), sub(n, off);
    for (std::size_t i = 0; i < n; ++i)
        d[i] = diag[i] - lambda;
    for (std::size_t i = 0; i + 1 < n; ++i)
        e[i] = off;

    // forward elimination
    for (std::size_t i = 0; i + 1 < n; ++i) {
        double pivot = d[i];
        double below = sub[i];
        if (std::abs(below) > std::abs(pivot)) {
            std::swap(d[i], sub[i]);
            std::swap(e[i], d[i + 1]);
            std::swap(f[i], e[i + 1]);
            std::swap(v[i], v[i + 1]);
            pivot = d[i];
            below = sub[i];
        }
        if (pivot == 0.0)
            pivot = d[i] = 1e-300;
        const double m = below / pivot;
        d[i + 1] -= m * e[i];
        e[i + 1] -= m * f[i];
        v[i + 1] -= m * v[i];
    }
    // back substitution
    for (std::size_t ii = n; ii-- > 0;) {
        double rhs = v[ii];
        if (ii + 1 < n)
            rhs -= e[ii] * v[ii + 1];
        if (ii + 2 < n)
            rhs -= f[ii] * v[ii + 2];
        const double pivot = d[ii] != 0.0 ? d[ii] : 1e-300;
        v[ii] = rhs / pivot;
    }
}

void normalize(std::vector<double>& v) {
    double norm = 0.0;
    for (double x : v)
        norm += x * x;
    norm = std::sqrt(norm);
    if (norm > 0.0)
        for (double& x : v)
            x /= norm;
}

}  // namespace

DiscreteHamiltonian build_hamiltonian(const std::function<double(double)>& potential,
                                      double a, double b, std::size_t n, double scaling) {
    if (!(a < b) || n < 1)
        throw std::invalid_argument("build_hamiltonian: need a < b and n >= 1");
    DiscreteHamiltonian h;
    h.a = a;
    h.b = b;
    h.n = n;
    h.scaling = scaling;
    h.step = (b - a) / static_cast<double>(n + 1);
    h.off_diagonal = -scaling / (h.step * h.step);
    h.diagonal.resize(n);
    const double kinetic = 2.0 * scaling / (h.step * h.step);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = h.x(i);
        const double v = potential(x);
        if (!std::isfinite(v))
            throw std::domain_error("build_hamiltonian: potential sample is not finite at x = " +
                                    std::to_string(x));
        h.diagonal[i] = v + kinetic;
    }
    return h;
}

SpectrumReport lowest_eigenvalues(const DiscreteHamiltonian& h, std::size_t k) {
    if (k < 1 || k > h.n)
        throw std::invalid_argument("lowest_eigenvalues: k must satisfy 1 <= k <= n");

    const double off = h.off_diagonal;
    const double off_sq = off * off;

    // Gershgorin bounds
    double lo = h.diagonal[0], hi = h.diagonal[0];
    for (double d : h.diagonal) {
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    lo -= 2.0 * std::abs(off);
    hi += 2.0 * std::abs(off);
    const double scale = std::max(std::abs(lo), std::abs(hi));

    SpectrumReport report;
    report.a = h.a;
    report.b = h.b;
    report.n = h.n;
    report.scaling = h.scaling;

    constexpr double kAbsTol = 1e-10;
    for (std::size_t j = 0; j < k; ++j) {
        double left = lo, right = hi;
        for (int iter = 0; iter < 200 && right - left > kAbsTol; ++iter) {
            const double mid = 0.5 * (left + right);
            if (mid <= left || mid >= right)
                break;
            if (count_below(h.diagonal, off_sq, mid) >= j + 1)
                right = mid;
            else
                left = mid;
        }
        report.eigenvalues.push_back(0.5 * (left + right));
    }

    // Residuals via inverse iteration; relative to the spectral scale.
    for (double lambda : report.eigenvalues) {
        std::vector<double> v(h.n);
        for (std::size_t i = 0; i < h.n; ++i)
            v[i] = 1.0 + 0.5 * std::sin(2.3 * static_cast<double>(i + 1));
        normalize(v);
        for (int it = 0; it < 2; ++it) {
            shifted_solve(h.diagonal, off, lambda, v);
            normalize(v);
        }
        double res = 0.0;
        for (std::size_t i = 0; i < h.n; ++i) {
            double t = (h.diagonal[i] - lambda) * v[i];
            if (i > 0)
                t += off * v[i - 1];
            if (i + 1 < h.n)
                t += off * v[i + 1];
            res += t * t;
        }
        report.residuals.push_back(std::sqrt(res) / std::max(scale, 1.0));
    }

    constexpr double kResidualTol = 1e-8;
    for (double r : report.residuals)
        if (!(r < kResidualTol))
            report.converged = false;
    return report;
}

double eigen_residual(const std::function<double(double)>& potential,
                      const std::function<double(double)>& psi,
                      double energy, double a, double b, std::size_t n, double scaling) {
    if (n < 5)
        throw std::invalid_argument("eigen_residual: need at least 5 interior points");
    const double h = (b - a) / static_cast<double>(n + 1);
    std::vector<double> p(n);
    for (std::size_t i = 0; i < n; ++i)
        p[i] = psi(a + h * static_cast<double>(i + 1));

    double num = 0.0, den = 0.0;
    for (std::size_t i = 2; i + 2 < n; ++i) {
        const double lap = (-p[i - 2] + 16.0 * p[i - 1] - 30.0 * p[i] +
                            16.0 * p[i + 1] - p[i + 2]) /
                           (12.0 * h * h);
        const double x = a + h * static_cast<double>(i + 1);
        const double r = -scaling * lap + (potential(x) - energy) * p[i];
        num += r * r;
        den += p[i] * p[i];
    }
    if (den == 0.0)
        throw std::domain_error("eigen_residual: psi vanishes on the grid interior");
    return std::sqrt(num / den);
}

}  // namespace isospec::spectral
