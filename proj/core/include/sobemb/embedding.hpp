#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "sobemb/ext_real.hpp"
#include "sobemb/geometry.hpp"
#include "sobemb/quadrature.hpp"

namespace sobemb {

enum class MethodId { HLS1, HLS2, YOUNG, YOUNG_INF, AUTO };

const char* method_name(MethodId m);

// The exponent pair (p, q) of the embedding W^{1,q} -> L^p together with the
// space dimension.
struct ExponentPair {
    ExtReal p;
    ExtReal q;
    int dim = 2;

    // Throws std::domain_error unless p >= 1, q >= 1, dim >= 1.
    void validate() const;

    // r = qp/((q-1)p + q); satisfies 1/p = 1/r + 1/q - 1.  Evaluated with
    // the 1/inf = 0 conventions, e.g. p = inf gives r = q'.
    double young_r() const;

    ExtReal p_conjugate() const;
    ExtReal q_conjugate() const;
};

struct PieceMetrics {
    double diameter = 0.0;
    double measure = 0.0;
    // Needed by the Young-type methods only.
    std::optional<ConvexPolygon> diff_body;
};

PieceMetrics piece_metrics(const ConvexPolygon& piece, bool with_difference_body);

// The rows of the applicability table:
//   HLS1      2 < p <= 2N/(N-1) (N>=2) or 2 < p < inf (N=1),  q >= p/(p-1)
//   HLS2      q = 2, N >= 2, 2 < p < inf (N=2) or 2 < p < 2N/(N-2) (N>=3)
//   YOUNG     1 <= q <= N, q <= p, p < qN/(N-q) (N>q) or p < inf (N=q)
//   YOUNG_INF p = inf, q > N
// The returned list is ordered as above; it may be empty.
std::vector<MethodId> applicable_methods(const ExponentPair& e);

// The four per-piece constants.  Each throws std::domain_error when its
// applicability condition fails.  knorm is the kernel norm over the piece's
// difference body at the method's exponent (young_r() resp. q').
double dp_hls1(const ExponentPair& e, const PieceMetrics& m);
double dp_hls2(const ExponentPair& e, const PieceMetrics& m);
double dp_young(const ExponentPair& e, const PieceMetrics& m, double knorm);
double dp_young_inf(const ExponentPair& e, const PieceMetrics& m, double knorm);

struct PieceReport {
    double diameter = 0.0;
    double measure = 0.0;
    double dp = 0.0;
    MethodId method = MethodId::AUTO;
};

struct EmbeddingResult {
    double c_p = 0.0;
    int n = 1;                    // number of pieces
    double measure_term = 0.0;    // max_i |piece_i|^{1/p-1/q}
    double dp_term = 0.0;         // max_i D_p(piece_i)
    MethodId method = MethodId::AUTO;  // method attaining dp_term
    double quadrature_error = 0.0;     // max relative kernel-integral estimate
    std::vector<PieceReport> per_piece;
};

struct PieceEvaluation {
    PieceMetrics metrics;
    double dp = 0.0;
    MethodId method = MethodId::AUTO;
    double quadrature_error = 0.0;  // relative
};

// Combined constant over a decomposition:
//   c_p = 2^{1-1/q} max(max_i |piece_i|^{1/p-1/q}, max_i D_p(piece_i))
// with 1/inf = 0.  Throws std::invalid_argument on an empty list.
EmbeddingResult combine_cp(const std::vector<PieceEvaluation>& pieces,
                           const ExponentPair& e);

// Nested combination from known per-piece embedding constants:
//   M_{p,q} max_i c_i,  M = 1 when p >= q and n^{1/p-1/q} when p < q.
double combine_cp_nested(const std::vector<double>& cps, const ExponentPair& e,
                         int n);

enum class BuiltinDomain { Square, Triangle };

using DomainSpec = std::variant<BuiltinDomain, Decomposition>;

// For a built-in domain, evaluates the uniform 4^k subdivisions for
// k = 0..k_max and returns the smallest combined constant (the pieces are
// congruent, so one representative is evaluated per k).  For a user
// decomposition the pieces are evaluated as given, with no search.
// method = AUTO picks, per piece, the applicable method with the smallest
// D_p (ties prefer YOUNG, then HLS2, then HLS1).
// Throws std::domain_error when no method is applicable.
EmbeddingResult best_embedding(const DomainSpec& domain, const ExponentPair& e,
                               MethodId method = MethodId::AUTO, int k_max = 5,
                               const QuadratureSettings& qs = {});

// Kernel norm entering the built-in domain evaluation.  For the square the
// difference body of a side-s piece is the centered square of side 2s.  For
// the triangle it is the regular hexagon of side s, and the value is kept
// bit-compatible with the published reference tables, which evaluate the
// hexagon integral over one symmetric half of the body.
double builtin_kernel_norm(BuiltinDomain dom, double side, double r,
                           const QuadratureSettings& qs, double* rel_error);

}  // namespace sobemb
