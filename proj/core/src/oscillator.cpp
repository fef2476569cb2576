#include "isospec/oscillator.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "isospec/errors.hpp"
#include "isospec/specfun.hpp"

namespace isospec::oscillator {

namespace {

constexpr double kSqrtPi = std::numbers::sqrtpi_v<double>;

void require_regular(double gamma) {
    if (!is_regular(gamma))
        throw singular_gamma_error(
            "gamma should not be in [-sqrt(pi), 0]; got gamma = " + std::to_string(gamma));
}

}  // namespace

bool is_regular(double gamma) {
    return gamma > 0.0 || gamma < -kSqrtPi;
}

double potential_at(double gamma, double x) {
    const double v = std::exp(-x * x) / (gamma + specfun::gauss_integral(x));
    return 0.5 * x * x + 2.0 * x * v + v * v;
}

double ground_state_at(double gamma, double x) {
    return std::exp(-0.5 * x * x) / (gamma + specfun::gauss_integral(x));
}

double mielnik_potential(double gamma, double x) {
    require_regular(gamma);
    return potential_at(gamma, x);
}

double mielnik_ground_state(double gamma, double x) {
    require_regular(gamma);
    return ground_state_at(gamma, x);
}

double norm_const(double gamma) {
    require_regular(gamma);
    return std::sqrt(gamma * (gamma / kSqrtPi + 1.0));
}

std::pair<double, double> matched_pair() {
    // target: the undeformed Gaussian normalizes with pi^(-1/4)
    return darboux::matched_gamma_pair(kSqrtPi, +1, 1.0 / kSqrtPi);
}

double beta_general(double gamma, double x) {
    require_regular(gamma);
    return x + std::exp(-x * x) / (gamma + specfun::gauss_integral(x));
}

darboux::SeedSpec seed() {
    darboux::SeedSpec s;
    s.domain_min = -std::numeric_limits<double>::infinity();
    s.domain_max = std::numeric_limits<double>::infinity();
    s.f = [](double x) { return x * x - 1.0; };
    s.F0 = {[](double x) { return std::exp(-0.5 * x * x); },
            [](double x) { return -x * std::exp(-0.5 * x * x); }};
    s.phi = {[](double x) { return x; }, [](double) { return 1.0; }};
    s.sigma = +1;
    s.energy_offset = ground_energy;
    s.scaling = scaling;
    s.seed_integral = [](double x) { return specfun::gauss_integral(x); };
    s.total_integral = kSqrtPi;
    return s;
}

}  // namespace isospec::oscillator
