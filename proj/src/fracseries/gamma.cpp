#include "fzk/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "fzk/errors.hpp"

namespace fzk {

namespace {

// Lanczos approximation, g = 7, 9 coefficients.
constexpr double kG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_pole(double z) { return z <= 0 && z == std::floor(z); }

double lanczos(double z) {
  // valid for z >= 0.5
  z -= 1;
  double s = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) s += kLanczos[i] / (z + double(i));
  const double t = z + kG + 0.5;
  return std::sqrt(2 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * s;
}

}  // namespace

double gamma(double z) {
  if (is_pole(z)) throw DomainError("gamma pole at " + std::to_string(z));
  if (z == std::floor(z) && z <= 21) {
    double f = 1;
    for (int k = 2; k < int(z); ++k) f *= k;
    return f;
  }
  if (z < 0.5) return std::numbers::pi / (std::sin(std::numbers::pi * z) * lanczos(1 - z));
  return lanczos(z);
}

double rgamma(double z) { return is_pole(z) ? 0.0 : 1.0 / gamma(z); }

}  // namespace fzk
