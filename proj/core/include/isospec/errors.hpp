#pragma once

#include <stdexcept>
#include <string>

namespace isospec {

// Thrown when a deformation parameter lies in the forbidden interval where
// the Bernoulli denominator gamma + sigma*int F0^2 has a zero inside the
// domain, so potential and wavefunction develop poles.
class singular_gamma_error : public std::domain_error {
public:
    explicit singular_gamma_error(const std::string& what)
        : std::domain_error(what) {}
};

}  // namespace isospec
