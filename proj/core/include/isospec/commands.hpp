#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace isospec::cli {

enum class Family { oscillator, hydrogen, generic };
enum class Format { csv, json };

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;  // verification / regularity failure
inline constexpr int exit_usage = 2;    // invalid configuration

struct RunConfig {
    Family family = Family::oscillator;
    std::vector<double> gammas;
    std::optional<int> ell;  // required iff family == hydrogen
    // grid_points == 0 -> per-family default grid
    double grid_min = 0.0;
    double grid_max = 0.0;
    int grid_points = 0;
    std::string output_prefix;
    Format format = Format::csv;
    int k = 0;            // verify: eigenvalue count, 0 -> family default
    bool strict = false;  // deform: reject singular gammas
};

const char* family_name(Family f);

// One data file per gamma, rows x,V,psi,psi_normalized.  Pole samples of
// singular members are emitted as non-finite markers and their
// psi_normalized column stays empty.
int cmd_deform(const RunConfig& config, std::ostream& diag);

// JSON array of {gamma, N_closed_form, N_quadrature, abs_diff}; exits
// nonzero unless every abs_diff < 1e-8.
int cmd_norm_table(const RunConfig& config, std::ostream& out, std::ostream& diag);

// JSON {gamma_plus, gamma_minus, target_norm, achieved_norms}.
int cmd_matched_pairs(const RunConfig& config, std::ostream& out, std::ostream& diag);

// JSON isospectrality certificate: per-gamma spectrum report plus pass/fail
// flags against the family tolerance.
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& diag);

}  // namespace isospec::cli
