#pragma once

#include "sobemb/ext_real.hpp"

namespace sobemb {

// Gamma function for x in (0, 171].  Lanczos approximation, relative error
// below 1e-13 on (0, 30] and below 1e-12 up to the overflow bound.
// Throws std::domain_error for x <= 0 and std::overflow_error for x > 171.
double gamma(double x);

// Hoelder conjugate: 1' = inf, inf' = 1, m' = m/(m-1) otherwise.
// Throws std::domain_error for finite m < 1.
ExtReal conjugate(ExtReal m);

// Sharp Young convolution factor A_m = sqrt(m^{2/m-1} (m-1)^{1-1/m}),
// with A_1 = A_inf = 1.
double young_factor(ExtReal m);

// Best constant in the Riesz-kernel convolution inequality between the
// conjugate-pair Lebesgue spaces, valid for 0 < lambda < N:
//   pi^{lambda/2} Gamma(N/2-lambda/2)/Gamma(N-lambda/2)
//     * (Gamma(N/2)/Gamma(N))^{-1+lambda/N}
double hls_constant(double lambda, int N);

// Best constant for the L^2 variant, valid for N < 2*lambda < 2N:
//   pi^{lambda/2} Gamma(N/2-lambda/2)/Gamma(lambda/2)
//     * sqrt(Gamma(lambda-N/2)/Gamma(3N/2-lambda))
//     * (Gamma(N/2)/Gamma(N))^{-1+lambda/N}
double hls_constant_tilde(double lambda, int N);

}  // namespace sobemb
