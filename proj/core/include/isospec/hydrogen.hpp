#pragma once

#include <utility>

#include "isospec/darboux.hpp"

// Radial Hydrogen problem in units where H_l R = (1/r)[-D^2 + l(l+1)/r^2
// - 2/r] r R = lambda_n R with lambda_n = -1/n^2, and its one-parameter
// deformation seeded on the nodeless reduced function u0 = r^l exp(-r/l)
// (eigenvalue -1/l^2, sigma = -1, c = 1).
namespace isospec::hydrogen {

enum class LadderDirection { lower, raise };

// C_{n,l} = (2/n^2) sqrt((n-l-1)!/(n+l)!).
double radial_norm_const(int n, int ell);

// Normalized R_{n,l}(r) = C_{n,l} (2r/n)^l exp(-r/n) L^{2l+1}_{n-l-1}(2r/n).
double radial_eigenfunction(int n, int ell, double r);

// c_{nl} = sqrt((n-l)(n+l)) / (n*l).
double ladder_coefficient(int n, int ell);

// lower: (1/r)(d/dr + l/r - 1/l)(r R_{n,l})   = c_{nl} R_{n,l-1}
// raise: (1/r)(-d/dr + l/r - 1/l)(r R_{n,l-1}) = c_{nl} R_{n,l}
// Derivatives are analytic.  Requires 1 <= l < n.
double ladder_apply(LadderDirection dir, int n, int ell, double r);

// gamma regular iff gamma < 0 or gamma > Gamma_l = (2l)! (l/2)^(2l+1).
bool is_regular(int ell, double gamma);

// beta_l = l/r - 1/l + r^(2l) exp(-2r/l) / (gamma - Gamma_l(r)), the general
// Riccati solution of -beta' + beta^2 = -2/r + l(l+1)/r^2 + 1/l^2.
double beta_ell(int ell, double gamma, double r);

// V~_{l-1}(r; gamma) = -2/r + l(l-1)/r^2
//                      + d/dr[ 2 r^(2l) exp(-2r/l) / (gamma - Gamma_l(r)) ].
double deformed_potential(int ell, double gamma, double r);

// R~_{l,l-1}(r; gamma) = r^(l-1) exp(-r/l) / (gamma - Gamma_l(r)),
// unnormalized, nodeless, eigenvalue -1/l^2.
double deformed_radial(int ell, double gamma, double r);

// N_l = sqrt(gamma*(gamma/Gamma_l - 1)); N_l^2 int R~^2 r^2 dr = 1.
double norm_const(int ell, double gamma);

// C_l = C_{l,l-1} = 2/(l^2 sqrt((2l-1)!)), the undeformed normalization
// the matched pair reproduces.
double undeformed_norm_target(int ell);

// The gamma pair with N_l = C_l: roots of
// gamma^2 - Gamma_l*gamma - Gamma_l*C_l^2 = 0.
std::pair<double, double> matched_pair(int ell);

// Engine seed equivalent to the closed forms above (reduced coordinates).
darboux::SeedSpec seed(int ell);

// Unchecked evaluation, poles allowed (singular-gamma plotting).
double potential_at(int ell, double gamma, double r);
double radial_at(int ell, double gamma, double r);

}  // namespace isospec::hydrogen
