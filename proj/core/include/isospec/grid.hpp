#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace isospec {

// Uniform samples of a real function on [a, b]; the numeric carrier used for
// potentials, wavefunctions and pointwise residuals.
struct GridFunction {
    double a = 0.0;
    double b = 1.0;
    std::vector<double> values;

    std::size_t size() const { return values.size(); }

    double step() const {
        return values.size() > 1 ? (b - a) / static_cast<double>(values.size() - 1) : 0.0;
    }

    double x(std::size_t i) const { return a + step() * static_cast<double>(i); }

    static GridFunction sample(const std::function<double(double)>& f,
                               double a, double b, std::size_t n);

    double max_abs() const;

    // Strict sign changes between consecutive samples; entries with
    // |value| <= tol are skipped.
    int sign_changes(double tol = 0.0) const;
};

}  // namespace isospec
