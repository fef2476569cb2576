#include "isospec/hydrogen.hpp"

#include <cmath>
#include <string>

#include "isospec/errors.hpp"
#include "isospec/specfun.hpp"

namespace isospec::hydrogen {

namespace {

void require_state(int n, int ell) {
    if (n < 1 || ell < 0 || ell >= n)
        throw std::invalid_argument("hydrogen: need n >= 1 and 0 <= ell < n, got n = " +
                                    std::to_string(n) + ", ell = " + std::to_string(ell));
}

void require_ell(int ell) {
    if (ell < 1)
        throw std::invalid_argument("hydrogen: ell must be >= 1, got " + std::to_string(ell));
}

void require_regular(int ell, double gamma) {
    if (!is_regular(ell, gamma))
        throw singular_gamma_error(
            "singular gamma = " + std::to_string(gamma) +
            " for ell = " + std::to_string(ell) +
            ": to avoid singularities gamma must be negative or greater than (2l)!(l/2)^(2l+1) = " +
            std::to_string(specfun::gamma_ell(ell)));
}

// d/dr of the reduced function u_{n,l} = r R_{n,l}; uses
// d/dx L_k^a(x) = -L_{k-1}^{a+1}(x).
double reduced_radial_deriv(int n, int ell, double r) {
    const double C = radial_norm_const(n, ell);
    const double x = 2.0 * r / n;
    const double scale = C * std::pow(2.0 / n, ell) * std::exp(-r / n);
    const double L = specfun::assoc_laguerre(n - ell - 1, 2 * ell + 1, x);
    const double Lp = n - ell - 1 >= 1
                          ? -specfun::assoc_laguerre(n - ell - 2, 2 * ell + 2, x)
                          : 0.0;
    return scale * ((ell + 1) * std::pow(r, ell) * L -
                    std::pow(r, ell + 1) * L / n +
                    std::pow(r, ell + 1) * (2.0 / n) * Lp);
}

}  // namespace

double radial_norm_const(int n, int ell) {
    require_state(n, ell);
    // (2/n^2) sqrt((n-l-1)!/(n+l)!)
    return 2.0 / (n * n) *
           std::exp(0.5 * (std::lgamma(n - ell) - std::lgamma(n + ell + 1)));
}

double radial_eigenfunction(int n, int ell, double r) {
    require_state(n, ell);
    if (r < 0.0)
        throw std::invalid_argument("radial_eigenfunction: r must be >= 0");
    const double x = 2.0 * r / n;
    return radial_norm_const(n, ell) * std::pow(x, ell) * std::exp(-r / n) *
           specfun::assoc_laguerre(n - ell - 1, 2 * ell + 1, x);
}

double ladder_coefficient(int n, int ell) {
    return std::sqrt(static_cast<double>(n - ell) * (n + ell)) / (static_cast<double>(n) * ell);
}

double ladder_apply(LadderDirection dir, int n, int ell, double r) {
    if (ell < 1 || ell >= n)
        throw std::invalid_argument("ladder_apply: need 1 <= ell < n, got n = " +
                                    std::to_string(n) + ", ell = " + std::to_string(ell));
    if (!(r > 0.0))
        throw std::invalid_argument("ladder_apply: r must be positive");
    const double phi = static_cast<double>(ell) / r - 1.0 / ell;
    if (dir == LadderDirection::lower) {
        const double u = r * radial_eigenfunction(n, ell, r);
        return (reduced_radial_deriv(n, ell, r) + phi * u) / r;
    }
    const double u = r * radial_eigenfunction(n, ell - 1, r);
    return (-reduced_radial_deriv(n, ell - 1, r) + phi * u) / r;
}

bool is_regular(int ell, double gamma) {
    require_ell(ell);
    return gamma < 0.0 || gamma > specfun::gamma_ell(ell);
}

double beta_ell(int ell, double gamma, double r) {
    require_regular(ell, gamma);
    const double w = std::pow(r, 2 * ell) * std::exp(-2.0 * r / ell);
    return static_cast<double>(ell) / r - 1.0 / ell +
           w / (gamma - specfun::incomplete_pe_integral(ell, r));
}

double potential_at(int ell, double gamma, double r) {
    const double phi = static_cast<double>(ell) / r - 1.0 / ell;
    const double w = std::pow(r, 2 * ell) * std::exp(-2.0 * r / ell);
    const double v = w / (gamma - specfun::incomplete_pe_integral(ell, r));
    // -2/r + l(l-1)/r^2 + d/dr[2v], with d/dr[v] = 2*phi*v + v^2
    return -2.0 / r + static_cast<double>(ell) * (ell - 1) / (r * r) +
           4.0 * phi * v + 2.0 * v * v;
}

double radial_at(int ell, double gamma, double r) {
    return std::pow(r, ell - 1) * std::exp(-r / ell) /
           (gamma - specfun::incomplete_pe_integral(ell, r));
}

double deformed_potential(int ell, double gamma, double r) {
    require_regular(ell, gamma);
    if (!(r > 0.0))
        throw std::invalid_argument("deformed_potential: r must be positive");
    return potential_at(ell, gamma, r);
}

double deformed_radial(int ell, double gamma, double r) {
    require_regular(ell, gamma);
    if (r < 0.0)
        throw std::invalid_argument("deformed_radial: r must be >= 0");
    return radial_at(ell, gamma, r);
}

double norm_const(int ell, double gamma) {
    require_regular(ell, gamma);
    const double G = specfun::gamma_ell(ell);
    return std::sqrt(gamma * (gamma / G - 1.0));
}

double undeformed_norm_target(int ell) {
    require_ell(ell);
    // C_l = C_{l,l-1} = 2/(l^2 sqrt((2l-1)!))
    return radial_norm_const(ell, ell - 1);
}

std::pair<double, double> matched_pair(int ell) {
    require_ell(ell);
    const double C = undeformed_norm_target(ell);
    return darboux::matched_gamma_pair(specfun::gamma_ell(ell), -1, C * C);
}

darboux::SeedSpec seed(int ell) {
    require_ell(ell);
    const double l = ell;
    darboux::SeedSpec s;
    s.domain_min = 0.0;
    s.domain_max = std::numeric_limits<double>::infinity();
    s.f = [l](double r) { return l * (l + 1.0) / (r * r) - 2.0 / r + 1.0 / (l * l); };
    s.F0 = {[l, ell](double r) { return std::pow(r, ell) * std::exp(-r / l); },
            [l, ell](double r) {
                return (l / r - 1.0 / l) * std::pow(r, ell) * std::exp(-r / l);
            }};
    s.phi = {[l](double r) { return l / r - 1.0 / l; },
             [l](double r) { return -l / (r * r); }};
    s.sigma = -1;
    s.energy_offset = -1.0 / (l * l);
    s.scaling = 1.0;
    s.seed_integral = [ell](double r) { return specfun::incomplete_pe_integral(ell, r); };
    s.total_integral = specfun::gamma_ell(ell);
    return s;
}

}  // namespace isospec::hydrogen
