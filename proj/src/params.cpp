#include "aqg/params.hpp"

#include <cmath>
#include <stdexcept>

namespace aqg {

void validate(const AnisotropyParams& p) {
    if (!(p.alpha > 0.0 && p.alpha < 1.0))
        throw std::invalid_argument("alpha must lie in (0,1)");
    if (!(p.beta > 0.0 && p.beta < 1.0))
        throw std::invalid_argument("beta must lie in (0,1)");
    if (!(p.mu >= 0.0) || !std::isfinite(p.mu))
        throw std::invalid_argument("mu must be finite and >= 0");
    if (!(p.nu >= 0.0) || !std::isfinite(p.nu))
        throw std::invalid_argument("nu must be finite and >= 0");
}

}  // namespace aqg
