#include "isospec/grid.hpp"

#include <cmath>

namespace isospec {

GridFunction GridFunction::sample(const std::function<double(double)>& f,
                                  double a, double b, std::size_t n) {
    GridFunction g;
    g.a = a;
    g.b = b;
    g.values.resize(n);
    const double h = n > 1 ? (b - a) / static_cast<double>(n - 1) : 0.0;
    for (std::size_t i = 0; i < n; ++i)
        g.values[i] = f(a + h * static_cast<double>(i));
    return g;
}

double GridFunction::max_abs() const {
    double m = 0.0;
    for (double v : values)
        m = std::max(m, std::abs(v));
    return m;
}

int GridFunction::sign_changes(double tol) const {
    int changes = 0;
    double last = 0.0;
    for (double v : values) {
        if (std::abs(v) <= tol)
            continue;
        if (last != 0.0 && v * last < 0.0)
            ++changes;
        last = v;
    }
    return changes;
}

}  // namespace isospec
