#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sobemb/embedding.hpp"
#include "sobemb/geometry.hpp"

namespace sobemb {

// Smooth trial function u(x,y) = sin(a pi x + phi1) cos(b pi y + phi2)
// + c (x^2 - y), with analytic gradient.
struct TestFunction {
    int a = 1;          // in {1, 2, 3}
    int b = 1;          // in {1, 2, 3}
    double phi1 = 0.0;  // in [0, 2pi)
    double phi2 = 0.0;
    double c = 0.0;     // in [-1, 1]

    double value(Vec2 pt) const;
    Vec2 gradient(Vec2 pt) const;
};

// Deterministic across platforms: parameters are derived from raw engine
// words, not std distributions.
TestFunction random_test_function(std::mt19937_64& rng);

struct DiscreteNorms {
    double lp_deviation = 0.0;  // ||u - mean||_{L^p}
    double lq_gradient = 0.0;   // ||grad u||_{L^q}
    double lq_full = 0.0;       // Sobolev norm of u at exponent q
    int resolution = 0;
};

// Quadrature of the norms over a fan triangulation refined 4^level times,
// degree-5 rule per cell; the mean is removed with the same rule.  p or q
// equal to inf take the max over quadrature nodes (the Sobolev norm then
// being sup|u| + sup|grad u|).
DiscreteNorms discrete_norms(const ConvexPolygon& piece, const TestFunction& u,
                             const ExponentPair& e, int level);

struct CheckViolation {
    TestFunction fn;
    double lhs = 0.0;
    double rhs = 0.0;
};

struct CheckReport {
    bool pass = false;
    double max_ratio = 0.0;  // max lhs/rhs over non-degenerate trials
    int trials_run = 0;
    int skipped = 0;         // zero-gradient samples filtered out
    std::vector<CheckViolation> violations;
};

inline constexpr std::uint64_t kDefaultVerifySeed = 0x5eb2d1905ull;
inline constexpr double kInequalitySlack = 1e-3;  // absorbs level>=6 quadrature error

// Checks ||u - mean||_{L^p} <= dp * ||grad u||_{L^q} * (1 + slack) for
// random trial functions.  Samples with gradient norm below 1e-8 are
// skipped.
CheckReport poincare_check(const ConvexPolygon& piece, double dp,
                           const ExponentPair& e, int trials,
                           std::uint64_t seed = kDefaultVerifySeed,
                           int level = 6);

// Checks ||u||_{L^p} <= cp * (||u||_q^q + ||grad u||_q^q)^{1/q} with the
// norms summed over the decomposition's pieces.
CheckReport embedding_check(const Decomposition& d, double cp,
                            const ExponentPair& e, int trials,
                            std::uint64_t seed = kDefaultVerifySeed,
                            int level = 6);

}  // namespace sobemb
