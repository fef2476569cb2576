#include "isospec/darboux.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "isospec/errors.hpp"
#include "isospec/specfun.hpp"

namespace isospec::darboux {

namespace {

std::string regular_domain_text(int sigma, double S) {
    std::ostringstream os;
    if (sigma > 0)
        os << "gamma must lie outside [" << -S << ", 0]";
    else
        os << "gamma must be negative or greater than " << S;
    return os.str();
}

void require_regular(const SeedSpec& seed, const GammaParameter& gamma) {
    if (!gamma.regular) {
        const double S = seed_total_integral(seed);
        throw singular_gamma_error("singular deformation parameter gamma = " +
                                   std::to_string(gamma.value) + "; " +
                                   regular_domain_text(seed.sigma, S));
    }
}

}  // namespace

double Differentiable::d(double x) const {
    if (derivative)
        return derivative(x);
    const double h = std::cbrt(std::numeric_limits<double>::epsilon()) * std::max(1.0, std::abs(x));
    return (value(x + h) - value(x - h)) / (2.0 * h);
}

double SeedSpec::W(double x) const {
    if (seed_integral)
        return seed_integral(x);
    auto sq = [this](double t) { double v = F0(t); return v * v; };
    return specfun::adaptive_quadrature(sq, domain_min, x, 1e-12).value;
}

double SeedSpec::physical_potential(double x) const {
    const double p = phi(x);
    return scaling * (p * p - sigma * phi.d(x)) + energy_offset;
}

double seed_total_integral(const SeedSpec& seed) {
    if (std::isfinite(seed.total_integral))
        return seed.total_integral;
    auto sq = [&seed](double t) { double v = seed.F0(t); return v * v; };
    return specfun::adaptive_quadrature(sq, seed.domain_min, seed.domain_max, 1e-12).value;
}

GammaParameter classify_gamma(const SeedSpec& seed, double gamma) {
    const double S = seed_total_integral(seed);
    // W runs monotonically over (0, S), so the denominator gamma + sigma*W
    // keeps one sign iff gamma avoids the closed interval between 0 and
    // -sigma*S.  Boundary values make N(gamma) = 0 and are rejected too.
    bool regular;
    if (seed.sigma > 0)
        regular = gamma > 0.0 || gamma < -S;
    else
        regular = gamma < 0.0 || gamma > S;
    return GammaParameter{gamma, regular};
}

double log_derivative(const Differentiable& F0, double x) {
    const double value = F0(x);
    if (!std::isfinite(value) || std::abs(value) < std::numeric_limits<double>::min())
        throw std::domain_error("log_derivative: seed solution vanishes at x = " +
                                std::to_string(x) + " (node in the seed)");
    return -F0.d(x) / value;
}

GridFunction riccati_residual(const Differentiable& phi, const Fn& f,
                              double a, double b, std::size_t n) {
    return GridFunction::sample(
        [&](double x) {
            const double p = phi(x);
            return p * p - phi.d(x) - f(x);
        },
        a, b, n);
}

double deform_ground_state_at(const SeedSpec& seed, double gamma, double x) {
    return seed.F0(x) / (gamma + seed.sigma * seed.W(x));
}

double deform_potential_at(const SeedSpec& seed, double gamma, double x) {
    const double F0 = seed.F0(x);
    const double v = F0 * F0 / (gamma + seed.sigma * seed.W(x));
    const double p = seed.phi(x);
    // V~ = V + 4c*phi*v + 2c*v^2; the derivative of the deformation term is
    // folded in through v' = -sigma*(2*phi*v + v^2).
    return seed.physical_potential(x) + seed.scaling * (4.0 * p * v + 2.0 * v * v);
}

double bernoulli_reciprocal(const SeedSpec& seed, const GammaParameter& gamma, double x) {
    require_regular(seed, gamma);
    const double denom = gamma.value + seed.sigma * seed.W(x);
    if (denom == 0.0)
        throw singular_gamma_error("bernoulli_reciprocal: denominator vanishes at x = " +
                                   std::to_string(x));
    const double F0 = seed.F0(x);
    return F0 * F0 / denom;
}

double deform_potential(const SeedSpec& seed, const GammaParameter& gamma, double x) {
    require_regular(seed, gamma);
    return deform_potential_at(seed, gamma.value, x);
}

double deform_ground_state(const SeedSpec& seed, const GammaParameter& gamma, double x) {
    require_regular(seed, gamma);
    return deform_ground_state_at(seed, gamma.value, x);
}

double deformed_norm_const(const SeedSpec& seed, const GammaParameter& gamma) {
    require_regular(seed, gamma);
    const double S = seed_total_integral(seed);
    if (!std::isfinite(S))
        throw std::domain_error("deformed_norm_const: seed is not normalizable (int F0^2 diverges)");
    // Substituting X = int_a^x F0^2 collapses the normalization integral to
    // int_0^S dX/(gamma + sigma X)^2 = S / (gamma*(gamma + sigma*S)).
    return std::sqrt(gamma.value * (gamma.value + seed.sigma * S) / S);
}

std::pair<double, double> matched_gamma_pair(double S, int sigma, double target_norm_sq) {
    if (!(S > 0.0) || !std::isfinite(S))
        throw std::invalid_argument("matched_gamma_pair: S must be positive and finite");
    if (!(target_norm_sq > 0.0))
        throw std::invalid_argument("matched_gamma_pair: target_norm_sq must be positive");
    // gamma^2 + sigma*S*gamma - S*t = 0.  Evaluate the non-cancelling root
    // first, the other via the product of roots -S*t.
    const double b = sigma * S;
    const double sq = std::sqrt(S * S + 4.0 * S * target_norm_sq);
    double gamma_plus, gamma_minus;
    if (b > 0.0) {
        gamma_minus = 0.5 * (-b - sq);
        gamma_plus = -S * target_norm_sq / gamma_minus;
    } else {
        gamma_plus = 0.5 * (-b + sq);
        gamma_minus = -S * target_norm_sq / gamma_plus;
    }
    return {gamma_plus, gamma_minus};
}

double partner_potential(const SeedSpec& seed, double x) {
    const double p = seed.phi(x);
    return seed.scaling * (p * p + seed.phi.d(x)) + seed.energy_offset;
}

DeformedFamilyMember deform_family_member(const SeedSpec& seed, const GammaParameter& gamma,
                                          double a, double b, std::size_t n) {
    require_regular(seed, gamma);
    DeformedFamilyMember member;
    member.gamma = gamma;
    member.v_tilde = GridFunction::sample(
        [&](double x) { return deform_potential_at(seed, gamma.value, x); }, a, b, n);
    member.psi0 = GridFunction::sample(
        [&](double x) { return deform_ground_state_at(seed, gamma.value, x); }, a, b, n);
    member.norm_const = deformed_norm_const(seed, gamma);
    member.S_total = seed_total_integral(seed);
    return member;
}

}  // namespace isospec::darboux
