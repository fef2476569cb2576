#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace isospec::specfun {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;  // absolute
    long evaluations = 0;
};

// Subdivision budget exhausted before the tolerance was met; carries the
// best estimate reached so far.
class quadrature_error : public std::runtime_error {
public:
    quadrature_error(const std::string& what, QuadratureResult best_so_far)
        : std::runtime_error(what), best(best_so_far) {}
    QuadratureResult best;
};

// I(x) = int_{-inf}^x exp(-t^2) dt, strictly increasing, I(inf) = sqrt(pi).
double gauss_integral(double x);

// int_0^r t^(2l) exp(-2t/l) dt for l >= 1, r >= 0 (r = inf allowed).
// Closed form: lower incomplete gamma with integer shape 2l+1.
double incomplete_pe_integral(int ell, double r);

// (2l)! (l/2)^(2l+1), the r -> inf limit of incomplete_pe_integral.
// Throws std::overflow_error once the value exceeds double range.
double gamma_ell(int ell);

// Generalized Laguerre polynomial L_k^alpha(x), degree k, via the
// three-term recurrence in the degree.
double assoc_laguerre(int k, int alpha, double x);

// Globally adaptive Gauss-Kronrod (7,15) integration of f over (a, b);
// a and b may be -inf/+inf.  tol is relative to max(1, |integral|).
// Semi-infinite ranges are truncated where |f| stays below 1e-16 times the
// sampled integrand scale, doubling the cutoff until that holds.
QuadratureResult adaptive_quadrature(const std::function<double(double)>& f,
                                     double a, double b, double tol);

}  // namespace isospec::specfun
