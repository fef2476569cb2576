#pragma once

#include <utility>

#include "isospec/darboux.hpp"

// One-parameter deformation family of the harmonic oscillator:
// seed F0 = exp(-x^2/2), phi = x, sigma = +1, c = 1/2, ground energy 1/2.
namespace isospec::oscillator {

inline constexpr double scaling = 0.5;
inline constexpr double ground_energy = 0.5;

// gamma regular iff gamma > 0 or gamma < -sqrt(pi).
bool is_regular(double gamma);

// V~(x; gamma) = x^2/2 - d/dx[ exp(-x^2) / (gamma + I(x)) ],
// I(x) = int_{-inf}^x exp(-t^2) dt.
double mielnik_potential(double gamma, double x);

// Psi~0(x; gamma) = exp(-x^2/2) / (gamma + I(x)), unnormalized.
double mielnik_ground_state(double gamma, double x);

// N0(gamma) = sqrt(gamma*(gamma/sqrt(pi) + 1)).
double norm_const(double gamma);

// The gamma pair at which N0 equals the undeformed constant pi^(-1/4):
// roots of gamma^2 + sqrt(pi)*gamma - 1 = 0.
std::pair<double, double> matched_pair();

// General Riccati solution beta = x + exp(-x^2)/(gamma + I(x)) of
// beta' + beta^2 = 1 + x^2.
double beta_general(double gamma, double x);

// Engine seed equivalent to the closed forms above.
darboux::SeedSpec seed();

// Unchecked evaluation, poles allowed (singular-gamma plotting).
double potential_at(double gamma, double x);
double ground_state_at(double gamma, double x);

}  // namespace isospec::oscillator
