#include "isospec/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "isospec/darboux.hpp"
#include "isospec/errors.hpp"
#include "isospec/hydrogen.hpp"
#include "isospec/oscillator.hpp"
#include "isospec/specfun.hpp"
#include "isospec/spectral.hpp"

namespace isospec::cli {

namespace {

using json = nlohmann::ordered_json;
using Fn = std::function<double(double)>;

constexpr double kNormTableTol = 1e-8;
constexpr double kMatchedPairTol = 1e-10;
constexpr double kQuadTol = 1e-10;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string gamma_tag(double gamma) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", gamma);
    std::string tag(buf);
    for (char& c : tag) {
        if (c == '-') c = 'm';
        else if (c == '.') c = 'p';
        else if (c == '+') c = 'P';
    }
    return tag;
}

// The reflectionless one-bound-state well, exposed as the `generic` family:
// seed F0 = sech(x), phi = tanh(x), sigma = +1, c = 1, E0 = -1, S = 2.
// It exercises the seed-generic engine path end to end.
darboux::SeedSpec reflectionless_seed() {
    darboux::SeedSpec s;
    s.f = [](double x) {
        const double sech = 1.0 / std::cosh(x);
        return 1.0 - 2.0 * sech * sech;
    };
    s.F0 = {[](double x) { return 1.0 / std::cosh(x); },
            [](double x) { return -std::tanh(x) / std::cosh(x); }};
    s.phi = {[](double x) { return std::tanh(x); },
             [](double x) {
                 const double sech = 1.0 / std::cosh(x);
                 return sech * sech;
             }};
    s.sigma = +1;
    s.energy_offset = -1.0;
    s.scaling = 1.0;
    s.seed_integral = [](double x) { return 1.0 + std::tanh(x); };
    s.total_integral = 2.0;
    return s;
}

// Uniform view over the three built-in families.
struct FamilyView {
    std::string name;
    int ell = 0;  // hydrogen only
    double scaling = 1.0;

    std::function<bool(double)> regular;
    std::string regular_domain;
    // pointwise evaluation, no regularity gate (poles allowed)
    std::function<double(double, double)> potential_at;  // (gamma, x)
    std::function<double(double, double)> state_at;      // (gamma, x)
    // Bernoulli denominator and F0^2, for pole masking
    std::function<double(double, double)> denom;
    Fn seed_density;  // F0^2(x)
    std::function<double(double)> norm_const;  // checked

    Fn undeformed_potential;  // for verify reference (empty -> exact reference)
    std::function<double(int)> exact_eigenvalue;  // hydrogen: -1/n^2

    double target_norm = 0.0;  // matched-pair target
    std::function<std::pair<double, double>()> matched;

    // defaults
    double deform_min = -5.0, deform_max = 5.0;
    int deform_points = 1001;
    double verify_min = -10.0, verify_max = 10.0;
    int verify_points = 4000, verify_k = 6;
    double verify_tol = 2e-4;
};

FamilyView make_view(Family family, int ell) {
    FamilyView fv;
    switch (family) {
    case Family::oscillator: {
        fv.name = "oscillator";
        fv.scaling = oscillator::scaling;
        fv.regular = [](double g) { return oscillator::is_regular(g); };
        fv.regular_domain = "gamma must lie outside [-sqrt(pi), 0]";
        fv.potential_at = [](double g, double x) { return oscillator::potential_at(g, x); };
        fv.state_at = [](double g, double x) { return oscillator::ground_state_at(g, x); };
        fv.denom = [](double g, double x) { return g + specfun::gauss_integral(x); };
        fv.seed_density = [](double x) { return std::exp(-x * x); };
        fv.norm_const = [](double g) { return oscillator::norm_const(g); };
        fv.undeformed_potential = [](double x) { return 0.5 * x * x; };
        fv.target_norm = std::pow(std::numbers::pi_v<double>, -0.25);
        fv.matched = []() { return oscillator::matched_pair(); };
        break;
    }
    case Family::hydrogen: {
        fv.name = "hydrogen";
        fv.ell = ell;
        fv.scaling = 1.0;
        fv.regular = [ell](double g) { return hydrogen::is_regular(ell, g); };
        fv.regular_domain = "gamma must be negative or greater than " +
                            fmt17(specfun::gamma_ell(ell));
        fv.potential_at = [ell](double g, double r) { return hydrogen::potential_at(ell, g, r); };
        fv.state_at = [ell](double g, double r) { return hydrogen::radial_at(ell, g, r); };
        fv.denom = [ell](double g, double r) {
            return g - specfun::incomplete_pe_integral(ell, r);
        };
        fv.seed_density = [ell](double r) {
            return std::pow(r, 2 * ell) * std::exp(-2.0 * r / ell);
        };
        fv.norm_const = [ell](double g) { return hydrogen::norm_const(ell, g); };
        fv.exact_eigenvalue = [ell](int i) {
            const double n = ell + i;
            return -1.0 / (n * n);
        };
        fv.target_norm = hydrogen::undeformed_norm_target(ell);
        fv.matched = [ell]() { return hydrogen::matched_pair(ell); };
        fv.deform_min = 0.05;
        fv.deform_max = 20.0 * ell;
        fv.verify_min = 0.0;
        fv.verify_max = 120.0;
        fv.verify_points = 12000;
        fv.verify_k = 3;
        fv.verify_tol = 5e-4;
        break;
    }
    case Family::generic: {
        static const darboux::SeedSpec seed = reflectionless_seed();
        fv.name = "generic";
        fv.scaling = seed.scaling;
        fv.regular = [](double g) { return darboux::classify_gamma(seed, g).regular; };
        fv.regular_domain = "gamma must lie outside [-2, 0]";
        fv.potential_at = [](double g, double x) {
            return darboux::deform_potential_at(seed, g, x);
        };
        fv.state_at = [](double g, double x) {
            return darboux::deform_ground_state_at(seed, g, x);
        };
        fv.denom = [](double g, double x) { return g + seed.seed_integral(x); };
        fv.seed_density = [](double x) {
            const double sech = 1.0 / std::cosh(x);
            return sech * sech;
        };
        fv.norm_const = [](double g) {
            return darboux::deformed_norm_const(seed, darboux::classify_gamma(seed, g));
        };
        fv.undeformed_potential = [](double x) {
            const double sech = 1.0 / std::cosh(x);
            return -2.0 * sech * sech;
        };
        fv.target_norm = 1.0 / std::numbers::sqrt2_v<double>;
        fv.matched = []() {
            return darboux::matched_gamma_pair(2.0, +1, 0.5);
        };
        fv.verify_min = -12.0;
        fv.verify_max = 12.0;
        fv.verify_points = 3000;
        fv.verify_k = 4;
        break;
    }
    }
    return fv;
}

// Returns an empty string when the config is well-formed.
std::string validate(const RunConfig& c, bool need_gammas) {
    if (c.family == Family::hydrogen) {
        if (!c.ell)
            return "--ell is required for --family hydrogen";
        if (*c.ell < 1)
            return "--ell must be >= 1";
    } else if (c.ell) {
        return "--ell is only meaningful for --family hydrogen";
    }
    if (need_gammas && c.gammas.empty())
        return "at least one --gamma is required";
    if (c.grid_points != 0) {
        if (c.grid_points < 2)
            return "grid needs at least 2 points";
        if (!(c.grid_min < c.grid_max))
            return "grid min must be below grid max";
    }
    if (c.k < 0)
        return "--k must be positive";
    return {};
}

double norm_quadrature(const RunConfig& c, const FamilyView& fv, double gamma) {
    const double inf = std::numeric_limits<double>::infinity();
    specfun::QuadratureResult q;
    switch (c.family) {
    case Family::oscillator:
        q = specfun::adaptive_quadrature(
            [&](double x) {
                const double p = oscillator::ground_state_at(gamma, x);
                return p * p;
            },
            -inf, inf, kQuadTol);
        break;
    case Family::hydrogen:
        q = specfun::adaptive_quadrature(
            [&](double r) {
                const double p = r * hydrogen::radial_at(fv.ell, gamma, r);
                return p * p;  // R~^2 r^2
            },
            0.0, inf, kQuadTol);
        break;
    case Family::generic:
        q = specfun::adaptive_quadrature(
            [&](double x) {
                const double p = fv.state_at(gamma, x);
                return p * p;
            },
            -inf, inf, kQuadTol);
        break;
    }
    return 1.0 / std::sqrt(q.value);
}

json grid_json(double min, double max, int points) {
    return json{{"min", min}, {"max", max}, {"points", points}};
}

}  // namespace

const char* family_name(Family f) {
    switch (f) {
    case Family::oscillator: return "oscillator";
    case Family::hydrogen: return "hydrogen";
    case Family::generic: return "generic";
    }
    return "unknown";
}

int cmd_deform(const RunConfig& config, std::ostream& diag) {
    if (auto err = validate(config, /*need_gammas=*/true); !err.empty()) {
        diag << "deform: " << err << "\n";
        return exit_usage;
    }
    const FamilyView fv = make_view(config.family, config.ell.value_or(0));

    double lo = fv.deform_min, hi = fv.deform_max;
    int points = fv.deform_points;
    if (config.grid_points != 0) {
        lo = config.grid_min;
        hi = config.grid_max;
        points = config.grid_points;
    }
    if (config.family == Family::hydrogen && !(lo > 0.0)) {
        diag << "deform: hydrogen grid must start at r > 0\n";
        return exit_usage;
    }

    if (config.strict) {
        for (double g : config.gammas)
            if (!fv.regular(g)) {
                diag << "deform: singular gamma = " << g << " rejected (" << fv.regular_domain
                     << ")\n";
                return exit_failure;
            }
    }

    const std::filesystem::path prefix(config.output_prefix);
    if (prefix.has_parent_path())
        std::filesystem::create_directories(prefix.parent_path());

    const double h = (hi - lo) / static_cast<double>(points - 1);
    for (double g : config.gammas) {
        const bool regular = fv.regular(g);
        const double norm = regular ? fv.norm_const(g)
                                    : std::numeric_limits<double>::quiet_NaN();
        const std::string stem = config.output_prefix + fv.name + "_gamma_" + gamma_tag(g);

        // a sample within one grid step of the denominator zero is a pole
        auto pole = [&](double x) {
            return !regular && std::abs(fv.denom(g, x)) < fv.seed_density(x) * h;
        };

        if (config.format == Format::csv) {
            std::ofstream out(stem + ".csv");
            if (!out) {
                diag << "deform: cannot open " << stem << ".csv\n";
                return exit_failure;
            }
            out << "x,V,psi,psi_normalized\n";
            for (int i = 0; i < points; ++i) {
                const double x = lo + h * i;
                const bool masked = pole(x);
                const double V = masked ? std::numeric_limits<double>::quiet_NaN()
                                        : fv.potential_at(g, x);
                const double psi = masked ? std::numeric_limits<double>::quiet_NaN()
                                          : fv.state_at(g, x);
                out << fmt17(x) << ',' << fmt17(V) << ',' << fmt17(psi) << ',';
                if (regular)
                    out << fmt17(norm * psi);
                out << '\n';
            }
        } else {
            json rows = json::array();
            for (int i = 0; i < points; ++i) {
                const double x = lo + h * i;
                const bool masked = pole(x);
                const double V = masked ? std::numeric_limits<double>::quiet_NaN()
                                        : fv.potential_at(g, x);
                const double psi = masked ? std::numeric_limits<double>::quiet_NaN()
                                          : fv.state_at(g, x);
                json row = {x, V, psi};
                if (regular)
                    row.push_back(norm * psi);
                else
                    row.push_back(nullptr);
                rows.push_back(std::move(row));
            }
            json doc{{"family", fv.name}};
            if (config.family == Family::hydrogen)
                doc["ell"] = fv.ell;
            doc["gamma"] = g;
            doc["regular"] = regular;
            if (regular)
                doc["norm_const"] = norm;
            else
                doc["norm_const"] = nullptr;
            doc["grid"] = grid_json(lo, hi, points);
            doc["columns"] = {"x", "V", "psi", "psi_normalized"};
            doc["rows"] = std::move(rows);
            std::ofstream out(stem + ".json");
            if (!out) {
                diag << "deform: cannot open " << stem << ".json\n";
                return exit_failure;
            }
            out << doc.dump(1) << '\n';
        }
    }
    return exit_ok;
}

int cmd_norm_table(const RunConfig& config, std::ostream& out, std::ostream& diag) {
    if (auto err = validate(config, /*need_gammas=*/true); !err.empty()) {
        diag << "norm-table: " << err << "\n";
        return exit_usage;
    }
    const FamilyView fv = make_view(config.family, config.ell.value_or(0));

    for (double g : config.gammas) {
        if (!fv.regular(g)) {
            diag << "norm-table: singular gamma = " << g << "; " << fv.regular_domain << "\n";
            return exit_failure;
        }
    }

    json table = json::array();
    double worst = 0.0;
    for (double g : config.gammas) {
        const double closed = fv.norm_const(g);
        const double quad = norm_quadrature(config, fv, g);
        const double diff = std::abs(closed - quad);
        worst = std::max(worst, diff);
        table.push_back(json{{"gamma", g},
                             {"N_closed_form", closed},
                             {"N_quadrature", quad},
                             {"abs_diff", diff}});
    }
    json doc{{"family", fv.name}};
    if (config.family == Family::hydrogen)
        doc["ell"] = fv.ell;
    doc["tolerance"] = kNormTableTol;
    doc["rows"] = std::move(table);
    doc["pass"] = worst < kNormTableTol;
    out << doc.dump(1) << '\n';
    if (!(worst < kNormTableTol)) {
        diag << "norm-table: worst |N_closed - N_quadrature| = " << worst << "\n";
        return exit_failure;
    }
    return exit_ok;
}

int cmd_matched_pairs(const RunConfig& config, std::ostream& out, std::ostream& diag) {
    if (auto err = validate(config, /*need_gammas=*/false); !err.empty()) {
        diag << "matched-pairs: " << err << "\n";
        return exit_usage;
    }
    const FamilyView fv = make_view(config.family, config.ell.value_or(0));

    const auto [gp, gm] = fv.matched();
    const double np = fv.norm_const(gp);
    const double nm = fv.norm_const(gm);
    const double worst = std::max(std::abs(np - fv.target_norm), std::abs(nm - fv.target_norm));

    json doc{{"family", fv.name}};
    if (config.family == Family::hydrogen)
        doc["ell"] = fv.ell;
    doc["gamma_plus"] = gp;
    doc["gamma_minus"] = gm;
    doc["target_norm"] = fv.target_norm;
    doc["achieved_norms"] = {np, nm};
    doc["max_abs_diff"] = worst;
    doc["pass"] = worst < kMatchedPairTol;
    out << doc.dump(1) << '\n';
    if (!(worst < kMatchedPairTol)) {
        diag << "matched-pairs: achieved norms deviate by " << worst << "\n";
        return exit_failure;
    }
    return exit_ok;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& diag) {
    if (auto err = validate(config, /*need_gammas=*/true); !err.empty()) {
        diag << "verify: " << err << "\n";
        return exit_usage;
    }
    const FamilyView fv = make_view(config.family, config.ell.value_or(0));

    for (double g : config.gammas) {
        if (!fv.regular(g)) {
            diag << "verify: singular gamma = " << g << "; " << fv.regular_domain << "\n";
            return exit_failure;
        }
    }

    double lo = fv.verify_min, hi = fv.verify_max;
    int points = fv.verify_points;
    if (config.grid_points != 0) {
        lo = config.grid_min;
        hi = config.grid_max;
        points = config.grid_points;
    }
    const std::size_t k = config.k > 0 ? static_cast<std::size_t>(config.k)
                                       : static_cast<std::size_t>(fv.verify_k);

    // Reference spectrum: same-grid undeformed numerics, or the exact
    // hydrogen eigenvalues -1/n^2.
    std::vector<double> reference(k);
    std::string reference_kind;
    if (fv.exact_eigenvalue) {
        reference_kind = "exact";
        for (std::size_t i = 0; i < k; ++i)
            reference[i] = fv.exact_eigenvalue(static_cast<int>(i));
    } else {
        reference_kind = "undeformed-numeric";
        const auto h0 = spectral::build_hamiltonian(fv.undeformed_potential, lo, hi,
                                                    static_cast<std::size_t>(points), fv.scaling);
        reference = spectral::lowest_eigenvalues(h0, k).eigenvalues;
    }

    json results = json::array();
    bool all_pass = true;
    double worst = 0.0;
    double worst_gamma = 0.0;
    int worst_level = 0;
    for (double g : config.gammas) {
        const auto ham = spectral::build_hamiltonian(
            [&](double x) { return fv.potential_at(g, x); }, lo, hi,
            static_cast<std::size_t>(points), fv.scaling);
        spectral::SpectrumReport report = spectral::lowest_eigenvalues(ham, k);
        report.family = fv.name;
        report.gamma = g;

        double max_err = 0.0;
        int max_level = 0;
        json errors = json::array();
        for (std::size_t i = 0; i < k; ++i) {
            const double err = std::abs(report.eigenvalues[i] - reference[i]);
            errors.push_back(err);
            if (err > max_err) {
                max_err = err;
                max_level = static_cast<int>(i);
            }
        }
        const bool pass = report.converged && max_err <= fv.verify_tol;
        all_pass = all_pass && pass;
        if (max_err > worst) {
            worst = max_err;
            worst_gamma = g;
            worst_level = max_level;
        }
        results.push_back(json{{"gamma", g},
                               {"eigenvalues", report.eigenvalues},
                               {"residuals", report.residuals},
                               {"converged", report.converged},
                               {"errors", std::move(errors)},
                               {"max_error", max_err},
                               {"pass", pass}});
    }

    json doc{{"family", fv.name}};
    if (config.family == Family::hydrogen)
        doc["ell"] = fv.ell;
    doc["grid"] = grid_json(lo, hi, points);
    doc["k"] = k;
    doc["scaling"] = fv.scaling;
    doc["tolerance"] = fv.verify_tol;
    doc["reference_kind"] = reference_kind;
    doc["reference"] = reference;
    doc["results"] = std::move(results);
    doc["pass"] = all_pass;
    out << doc.dump(1) << '\n';

    if (!all_pass) {
        diag << "verify: worst offender gamma = " << worst_gamma << ", level " << worst_level
             << ", |error| = " << worst << " (tolerance " << fv.verify_tol << ")\n";
        return exit_failure;
    }
    return exit_ok;
}

}  // namespace isospec::cli
