#pragma once

#include <cstdint>

namespace gkpft {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// GKP comb spacing. Codeword peaks sit on integer multiples of sqrt(pi); a
// shift correction fails once the combined shift leaves the centered
// half-cell [-sqrt(pi)/2, sqrt(pi)/2).
inline constexpr double kSqrtPi = 1.772453850905516027298167483341145183;

// Quadrature-variance unit: vacuum noise is 1/2, so squeezing in dB is
// -10*log10(sigma2 / kVacuumVariance).
inline constexpr double kVacuumVariance = 0.5;

// Fixed default seed so CLI runs without --seed are reproducible.
inline constexpr std::uint64_t kDefaultSeed = 0x5EEDBA5Eull;

}  // namespace gkpft
