#pragma once

#include <functional>
#include <limits>
#include <utility>

#include "isospec/grid.hpp"

namespace isospec::darboux {

using Fn = std::function<double(double)>;

// Scalar function with an optional analytic derivative.  Without one,
// derivatives fall back to central differences with step
// h = eps^(1/3) * max(1, |x|).
struct Differentiable {
    Fn value;
    Fn derivative;  // empty -> finite differences

    double operator()(double x) const { return value(x); }
    double d(double x) const;
};

// Factorization seed of the one-parameter deformation engine.
//
// F0 is a nodeless solution of -F0'' + f*F0 = 0 on the open domain and phi a
// particular Riccati solution, phi^2 - phi' = f.  sigma = -sign(F0'/F0/phi)
// orients the Bernoulli denominator gamma + sigma * int_a^x F0^2, i.e.
// phi = -sigma * F0'/F0.  Physically F0 is the nodeless eigenfunction of
//   (-c D^2 + V) F0 = E0 F0,   V = c*(phi^2 - sigma*phi') + E0.
struct SeedSpec {
    double domain_min = -std::numeric_limits<double>::infinity();
    double domain_max = std::numeric_limits<double>::infinity();
    Fn f;  // zero-offset potential, equals phi^2 - phi'
    Differentiable F0;
    Differentiable phi;
    int sigma = +1;
    double energy_offset = 0.0;  // E0
    double scaling = 1.0;        // c
    // W(x) = int_a^x F0^2 in closed form; empty -> quadrature fallback.
    Fn seed_integral;
    // S = int_a^b F0^2; NaN -> quadrature fallback.
    double total_integral = std::numeric_limits<double>::quiet_NaN();

    double W(double x) const;
    // V above: the undeformed physical potential carrying F0 at E0.
    double physical_potential(double x) const;
};

// Deformation parameter with its validated regularity flag:
// sigma=+1 regular iff gamma > 0 or gamma < -S,
// sigma=-1 regular iff gamma < 0 or gamma > S;
// boundary values are rejected (norm constant would vanish).
struct GammaParameter {
    double value = 0.0;
    bool regular = false;
};

// S = int over the whole domain, from the seed's closed form or quadrature.
double seed_total_integral(const SeedSpec& seed);

GammaParameter classify_gamma(const SeedSpec& seed, double gamma);

// phi = -F0'/F0.  Throws std::domain_error on a node of F0.
double log_derivative(const Differentiable& F0, double x);

// Pointwise phi^2 - phi' - f sampled on n points of [a, b].
GridFunction riccati_residual(const Differentiable& phi, const Fn& f,
                              double a, double b, std::size_t n);

// v(x) = F0^2 / (gamma + sigma * int_a^x F0^2), the reciprocal of the
// Bernoulli function; satisfies v' = -sigma*(2*phi*v + v^2).
double bernoulli_reciprocal(const SeedSpec& seed, const GammaParameter& gamma, double x);

// Deformed potential V~ = V + 4*c*phi*v + 2*c*v^2
//                       = V - 2*c * d^2/dx^2 log(gamma + sigma*int_a^x F0^2).
double deform_potential(const SeedSpec& seed, const GammaParameter& gamma, double x);

// Unnormalized deformed ground state F0 / (gamma + sigma * int_a^x F0^2),
// an eigenfunction of V~ at E0.
double deform_ground_state(const SeedSpec& seed, const GammaParameter& gamma, double x);

// N(gamma) = sqrt(gamma*(gamma + sigma*S)/S) normalizing the deformed
// ground state to unit L2 norm.
double deformed_norm_const(const SeedSpec& seed, const GammaParameter& gamma);

// The two roots of gamma^2 + sigma*S*gamma - S*target_norm_sq = 0, one in
// each regular branch; at either root N(gamma)^2 = target_norm_sq.
// Returned as (gamma_plus, gamma_minus) with gamma_plus > gamma_minus.
std::pair<double, double> matched_gamma_pair(double S, int sigma, double target_norm_sq);

// Non-parametric Darboux partner c*(phi^2 + phi') + E0.
double partner_potential(const SeedSpec& seed, double x);

// Unchecked pointwise evaluation (no regularity gate).  Used to plot
// singular family members, where poles are expected data.
double deform_potential_at(const SeedSpec& seed, double gamma, double x);
double deform_ground_state_at(const SeedSpec& seed, double gamma, double x);

struct DeformedFamilyMember {
    GammaParameter gamma;
    GridFunction v_tilde;  // deformed potential samples
    GridFunction psi0;     // unnormalized deformed ground state samples
    double norm_const = 0.0;
    double S_total = 0.0;
};

DeformedFamilyMember deform_family_member(const SeedSpec& seed, const GammaParameter& gamma,
                                          double a, double b, std::size_t n);

}  // namespace isospec::darboux
