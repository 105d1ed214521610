#pragma once

#include <stdexcept>

#include "sobemb/geometry.hpp"

namespace sobemb {

struct QuadratureSettings {
    double rel_tol = 1e-12;     // accepted in [1e-15, 1e-3]
    int max_subdivisions = 60;  // bisection depth cap per angular span
    int nodes_per_panel = 15;   // Gauss-Legendre nodes, in [2, 64]
};

struct PowerIntegral {
    double value = 0.0;
    double error_estimate = 0.0;  // summed panel discrepancies (absolute)
};

// Thrown when the adaptive quadrature hits the subdivision cap before the
// tolerance is met; carries the best value computed so far.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double value, double estimate)
        : std::runtime_error(what), best_value(value), error_estimate(estimate) {}
    double best_value;
    double error_estimate;
};

// I(V, alpha) = integral over V of |x|^alpha dx for a convex polygon V with
// the origin strictly interior and alpha > -2.  The radial part integrates
// in closed form; only the smooth angular factor is quadrature-evaluated,
// adaptively, per edge, with spans split at the foot angle.  Summation is
// performed in sorted, compensated order so the result is deterministic.
PowerIntegral power_integral(const ConvexPolygon& v, double alpha,
                             const QuadratureSettings& s = {});

// || |x|^{1-N} ||_{L^r(V)} = power_integral(V, r(1-N))^{1/r} for N = 2.
// Requires r >= 1 and r(1-N) > -2.
double kernel_norm(const ConvexPolygon& v, double r,
                   const QuadratureSettings& s = {});

// One-dimensional case: V = (-L, L) and the kernel is constant 1, so the
// norm is (2L)^{1/r}.
double kernel_norm_interval(double length, double r);

}  // namespace sobemb
