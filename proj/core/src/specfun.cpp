#include "isospec/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

namespace isospec::specfun {

namespace {

constexpr double kSqrtPi = std::numbers::sqrtpi_v<double>;

// 15-point Kronrod abscissae/weights with the embedded 7-point Gauss rule
// (nonnegative half; the rule is symmetric).
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.02293532201052922, 0.06309209262997855, 0.1047900103222502,
    0.1406532597155259,  0.1690047266392679,  0.1903505780647854,
    0.2044329400752989,  0.2094821410847278};
constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

struct Panel {
    double a, b;
    double value;
    double error;
};

struct PanelOrder {
    bool operator()(const Panel& lhs, const Panel& rhs) const {
        if (lhs.error != rhs.error)
            return lhs.error < rhs.error;
        return lhs.a > rhs.a;  // deterministic tie-break
    }
};

Panel gauss_kronrod_15(const std::function<double(double)>& f, double a, double b,
                       long& evaluations) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double kron = kWgk[7] * f(mid);
    double gauss = kWg[3] * f(mid);
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const double fsum = f(mid - dx) + f(mid + dx);
        kron += kWgk[i] * fsum;
        if (i % 2 == 1)
            gauss += kWg[i / 2] * fsum;
    }
    evaluations += 15;
    return Panel{a, b, kron * half, std::abs(kron - gauss) * half};
}

// Truncation point for a semi-infinite tail starting at `from` going in
// direction `dir`: doubled until |f| < 1e-16 * scale on probe points beyond.
double tail_cutoff(const std::function<double(double)>& f, double from, double dir,
                   double scale, long& evaluations) {
    const double tiny = 1e-16 * scale;
    double reach = 8.0;
    while (reach < 1.0e9) {
        bool quiet = true;
        for (double frac : {1.0, 1.25, 1.5, 2.0}) {
            ++evaluations;
            if (std::abs(f(from + dir * reach * frac)) >= tiny) {
                quiet = false;
                break;
            }
        }
        if (quiet)
            return from + dir * 2.0 * reach;
        reach *= 2.0;
    }
    throw quadrature_error("adaptive_quadrature: integrand does not decay on the infinite tail",
                           QuadratureResult{});
}

}  // namespace

double gauss_integral(double x) {
    if (std::isnan(x))
        return std::numeric_limits<double>::quiet_NaN();
    if (x == std::numeric_limits<double>::infinity())
        return kSqrtPi;
    if (x == -std::numeric_limits<double>::infinity())
        return 0.0;
    // erfc(-x) keeps full relative accuracy on the left tail, where I(x)
    // enters Bernoulli denominators.
    return 0.5 * kSqrtPi * std::erfc(-x);
}

double incomplete_pe_integral(int ell, double r) {
    if (ell < 1)
        throw std::invalid_argument("incomplete_pe_integral: ell must be >= 1");
    if (std::isnan(r) || r < 0.0)
        throw std::invalid_argument("incomplete_pe_integral: r must be >= 0");
    if (r == std::numeric_limits<double>::infinity())
        return gamma_ell(ell);
    if (r == 0.0)
        return 0.0;

    const int m = 2 * ell;                     // polynomial degree
    const double beta = 2.0 / ell;             // exponential rate
    const double z = beta * r;

    if (z < static_cast<double>(m + 1)) {
        // Lower-incomplete-gamma power series: cancellation-free for small z,
        // where the complementary finite sum would lose all digits.
        // int_0^r t^m e^{-bt} dt = r^{m+1} e^{-z} sum_k z^k / ((m+1)...(m+1+k))
        double term = 1.0 / (m + 1);
        double sum = term;
        for (int k = 1; k < 500; ++k) {
            term *= z / (m + 1 + k);
            sum += term;
            if (term < sum * std::numeric_limits<double>::epsilon())
                break;
        }
        return std::pow(r, m + 1) * std::exp(-z) * sum;
    }

    // Integration-by-parts finite sum (2l+1 terms):
    // int_0^r = Gamma_l * (1 - e^{-z} sum_{j=0}^{m} z^j/j!)
    double tail = std::exp(-z);
    double sum = tail;
    for (int j = 1; j <= m; ++j) {
        tail *= z / j;
        sum += tail;
    }
    return gamma_ell(ell) * (1.0 - sum);
}

double gamma_ell(int ell) {
    if (ell < 1)
        throw std::invalid_argument("gamma_ell: ell must be >= 1");
    const double log_value = std::lgamma(2.0 * ell + 1.0) +
                             (2.0 * ell + 1.0) * std::log(0.5 * ell);
    if (log_value > std::log(std::numeric_limits<double>::max()))
        throw std::overflow_error("gamma_ell: (2l)!(l/2)^(2l+1) overflows double for ell = " +
                                  std::to_string(ell));
    double factorial = 1.0;
    for (int j = 2; j <= 2 * ell; ++j)
        factorial *= j;
    return factorial * std::pow(0.5 * ell, 2 * ell + 1);
}

double assoc_laguerre(int k, int alpha, double x) {
    if (k < 0 || alpha < 0)
        throw std::invalid_argument("assoc_laguerre: k and alpha must be >= 0");
    if (k == 0)
        return 1.0;
    double prev = 1.0;
    double cur = 1.0 + alpha - x;
    for (int i = 1; i < k; ++i) {
        const double next = ((2.0 * i + 1.0 + alpha - x) * cur - (i + alpha) * prev) / (i + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

QuadratureResult adaptive_quadrature(const std::function<double(double)>& f,
                                     double a, double b, double tol) {
    if (!(tol > 0.0))
        throw std::invalid_argument("adaptive_quadrature: tol must be positive");
    if (std::isnan(a) || std::isnan(b) || a >= b)
        throw std::invalid_argument("adaptive_quadrature: need a < b");

    long evaluations = 0;

    // Sampled integrand scale over the finite core, for the truncation rule.
    const bool lower_inf = std::isinf(a);
    const bool upper_inf = std::isinf(b);
    double lo = a, hi = b;
    if (lower_inf || upper_inf) {
        const double core_lo = lower_inf ? (upper_inf ? -8.0 : b - 8.0) : a;
        const double core_hi = upper_inf ? (lower_inf ? 8.0 : a + 8.0) : b;
        double scale = 0.0;
        for (int i = 0; i <= 32; ++i) {
            const double x = core_lo + (core_hi - core_lo) * i / 32.0;
            ++evaluations;
            scale = std::max(scale, std::abs(f(x)));
        }
        scale = std::max(scale, 1e-300);
        if (upper_inf)
            hi = tail_cutoff(f, lower_inf ? 0.0 : a, +1.0, scale, evaluations);
        if (lower_inf)
            lo = tail_cutoff(f, upper_inf ? 0.0 : b, -1.0, scale, evaluations);
    }

    constexpr int kMaxPanels = 4000;
    std::priority_queue<Panel, std::vector<Panel>, PanelOrder> panels;
    panels.push(gauss_kronrod_15(f, lo, hi, evaluations));
    double total_value = panels.top().value;
    double total_error = panels.top().error;

    int used = 1;
    while (total_error > tol * std::max(1.0, std::abs(total_value)) && used < kMaxPanels) {
        const Panel worst = panels.top();
        panels.pop();
        total_value -= worst.value;
        total_error -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // panel no longer splittable in double precision
            total_value += worst.value;
            total_error += worst.error;
            panels.push(worst);
            break;
        }
        for (const Panel& half : {gauss_kronrod_15(f, worst.a, mid, evaluations),
                                  gauss_kronrod_15(f, mid, worst.b, evaluations)}) {
            total_value += half.value;
            total_error += half.error;
            panels.push(half);
        }
        ++used;
    }

    QuadratureResult result{total_value, total_error, std::max<long>(evaluations, 1)};
    if (total_error > tol * std::max(1.0, std::abs(total_value)) && used >= kMaxPanels)
        throw quadrature_error("adaptive_quadrature: subdivision budget exhausted, best estimate " +
                                   std::to_string(total_value) + " +- " +
                                   std::to_string(total_error),
                               result);
    return result;
}

}  // namespace isospec::specfun
