#pragma once

#include <cmath>
#include <optional>
#include <vector>

namespace sobemb {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double cross(const Vec2& o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
};

// Strictly convex polygon with counterclockwise vertices.  Construction
// canonicalizes the input: the traversal is reoriented counterclockwise,
// consecutive collinear or duplicate vertices are merged (tolerance 1e-12 on
// unit-scale coordinates), and the vertex list is rotated to start at the
// lexicographically smallest point.  Throws std::invalid_argument if fewer
// than three vertices remain, the traversal is not strictly convex, or any
// coordinate is non-finite.
class ConvexPolygon {
public:
    explicit ConvexPolygon(std::vector<Vec2> vertices);

    const std::vector<Vec2>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }

    double area() const { return area_; }
    double diameter() const;         // max pairwise vertex distance
    Vec2 centroid() const;

    ConvexPolygon translated(const Vec2& t) const;
    ConvexPolygon rotated(double angle) const;  // about the origin
    ConvexPolygon scaled(double s) const;       // about the origin, s > 0

    // Signed distance from the origin to the closest edge line; positive
    // when the origin is strictly inside.
    double origin_clearance() const;

private:
    std::vector<Vec2> verts_;
    double area_ = 0.0;
};

// Minkowski sum P + (-P): the difference body {x - y : x, y in P}.
// Computed by the sorted-edge-vector merge; the result is centrally
// symmetric and contains the origin in its interior.
ConvexPolygon difference_body(const ConvexPolygon& p);

// Area of the intersection of two convex polygons (Sutherland-Hodgman
// clipping); zero when they only share boundary.
double intersection_area(const ConvexPolygon& a, const ConvexPolygon& b);

// A domain split into pairwise interior-disjoint convex pieces, optionally
// carrying the parent outline the pieces are meant to cover.
struct Decomposition {
    std::vector<ConvexPolygon> pieces;
    std::optional<ConvexPolygon> parent;
};

// 4^k congruent axis-aligned squares of side 1/2^k tiling the unit square.
// k must be in [0, 8].
Decomposition subdivide_unit_square(int k);

// 4^k congruent equilateral triangles of side 1/2^k (alternating
// orientation) tiling the triangle (0,0), (1,0), (1/2, sqrt3/2).
// k must be in [0, 8].
Decomposition subdivide_equilateral_triangle(int k);

struct DecompositionReport {
    bool pass = false;
    double covering_defect = 0.0;   // relative, 0 when no parent is given
    double max_overlap = 0.0;       // absolute intersection area
    int overlap_i = -1;             // offending pair, -1 when none
    int overlap_j = -1;
};

// Diagnostic check of the interior-disjointness and covering requirements:
// any pairwise intersection area must stay below 1e-10 x the smaller piece
// area, and, when a parent is present, the piece areas must sum to the
// parent area within 1e-10 relative.
DecompositionReport validate_decomposition(const Decomposition& d);

}  // namespace sobemb
