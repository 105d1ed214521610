#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sobemb/embedding.hpp"

namespace sobemb {

// The built-in reference tables:
//   2: square,   q = 2,    columns HLS1 | HLS2 | YOUNG,  p in {3..10, 20..80}
//   3: square,   p = inf,  column YOUNG_INF,             q in {3..10}
//   4: triangle, q = 2,    columns HLS1 | HLS2 | YOUNG,  p in {3..10, 20..80}
//   5: triangle, p = inf,  column YOUNG_INF,             q in {3..10}

struct TableCell {
    bool applicable = false;
    double c_p = 0.0;
    int n = 0;
};

struct TableRow {
    double exponent = 0.0;          // the row's p (tables 2, 4) or q (3, 5)
    std::vector<TableCell> cells;   // one per column
    // Value obtained when the measure term is taken as (4n)^{1/q-1/p}
    // instead of the exact piece measure; emitted for the triangle tables
    // whenever it differs from c_p of the last column.
    std::optional<double> display_variant;
};

struct TableLayout {
    BuiltinDomain domain;
    std::vector<MethodId> columns;
    std::vector<double> row_exponents;
    bool p_is_inf = false;  // rows vary q at p = inf
};

// Throws std::invalid_argument unless table is in {2,3,4,5}.
TableLayout table_layout(int table);

std::vector<TableRow> reproduce_table(int table, const QuadratureSettings& qs = {},
                                      int k_max = 5);

// One value of the method column at the given exponent for plot data.
// Returns nullopt when the method is not applicable at (p, q).
std::optional<double> table_value(BuiltinDomain dom, MethodId method, double p,
                                  double q, const QuadratureSettings& qs,
                                  int k_max = 5);

}  // namespace sobemb
