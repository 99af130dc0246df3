#pragma once

namespace fzk {

/// Gamma function. Throws DomainError at z = 0, -1, -2, ...
double gamma(double z);

/// 1/Gamma(z), which is entire: exactly 0 at the poles.
double rgamma(double z);

}  // namespace fzk
