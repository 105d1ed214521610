#include "sobemb/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sobemb {

namespace {

constexpr double kCanonicalTol = 1e-12;

double coord_scale(const std::vector<Vec2>& vs) {
    double s = 1.0;
    for (const Vec2& v : vs) {
        s = std::max({s, std::fabs(v.x), std::fabs(v.y)});
    }
    return s;
}

double signed_area(const std::vector<Vec2>& vs) {
    double a = 0.0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        a += vs[i].cross(vs[(i + 1) % vs.size()]);
    }
    return 0.5 * a;
}

bool lex_less(const Vec2& a, const Vec2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

}  // namespace

ConvexPolygon::ConvexPolygon(std::vector<Vec2> vertices) {
    for (const Vec2& v : vertices) {
        if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
            throw std::invalid_argument("polygon: non-finite coordinate");
        }
    }
    if (vertices.size() < 3) {
        throw std::invalid_argument("polygon: needs at least 3 vertices");
    }
    if (signed_area(vertices) < 0.0) {
        std::reverse(vertices.begin(), vertices.end());
    }

    const double scale = coord_scale(vertices);
    const double len_tol = kCanonicalTol * scale;
    const double cross_tol = kCanonicalTol * scale * scale;

    // Merge duplicate and collinear vertices until stable.
    std::vector<Vec2> vs = std::move(vertices);
    bool changed = true;
    while (changed && vs.size() >= 3) {
        changed = false;
        std::vector<Vec2> out;
        out.reserve(vs.size());
        const std::size_t n = vs.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2& prev = out.empty() ? vs[(i + n - 1) % n] : out.back();
            const Vec2& cur = vs[i];
            const Vec2& next = vs[(i + 1) % n];
            if ((cur - prev).norm() <= len_tol && i > 0) {
                changed = true;
                continue;
            }
            if (std::fabs((cur - prev).cross(next - cur)) <= cross_tol) {
                changed = true;
                continue;
            }
            out.push_back(cur);
        }
        vs = std::move(out);
    }
    if (vs.size() < 3) {
        throw std::invalid_argument("polygon: degenerate (fewer than 3 vertices after canonicalization)");
    }

    // Strict convexity of the counterclockwise traversal.
    const std::size_t n = vs.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 e1 = vs[(i + 1) % n] - vs[i];
        const Vec2 e2 = vs[(i + 2) % n] - vs[(i + 1) % n];
        if (e1.cross(e2) <= cross_tol) {
            throw std::invalid_argument("polygon: not strictly convex");
        }
    }

    // Canonical start: lexicographically smallest vertex.
    const auto start = std::min_element(vs.begin(), vs.end(), lex_less);
    std::rotate(vs.begin(), start, vs.end());

    verts_ = std::move(vs);
    area_ = signed_area(verts_);
    if (!(area_ > 0.0) || !std::isfinite(area_)) {
        throw std::invalid_argument("polygon: zero or non-finite area");
    }
}

double ConvexPolygon::diameter() const {
    double best = 0.0;
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        for (std::size_t j = i + 1; j < verts_.size(); ++j) {
            best = std::max(best, (verts_[i] - verts_[j]).norm());
        }
    }
    return best;
}

Vec2 ConvexPolygon::centroid() const {
    // Area-weighted centroid via the standard shoelace moments.
    double cx = 0.0, cy = 0.0;
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = verts_[i];
        const Vec2& b = verts_[(i + 1) % n];
        const double w = a.cross(b);
        cx += (a.x + b.x) * w;
        cy += (a.y + b.y) * w;
    }
    return {cx / (6.0 * area_), cy / (6.0 * area_)};
}

ConvexPolygon ConvexPolygon::translated(const Vec2& t) const {
    std::vector<Vec2> vs = verts_;
    for (Vec2& v : vs) v = v + t;
    return ConvexPolygon(std::move(vs));
}

ConvexPolygon ConvexPolygon::rotated(double angle) const {
    const double c = std::cos(angle), s = std::sin(angle);
    std::vector<Vec2> vs = verts_;
    for (Vec2& v : vs) v = {c * v.x - s * v.y, s * v.x + c * v.y};
    return ConvexPolygon(std::move(vs));
}

ConvexPolygon ConvexPolygon::scaled(double s) const {
    if (!(s > 0.0)) {
        throw std::invalid_argument("polygon: scale factor must be positive");
    }
    std::vector<Vec2> vs = verts_;
    for (Vec2& v : vs) v = v * s;
    return ConvexPolygon(std::move(vs));
}

double ConvexPolygon::origin_clearance() const {
    double clearance = std::numeric_limits<double>::infinity();
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = verts_[i];
        const Vec2& b = verts_[(i + 1) % n];
        clearance = std::min(clearance, a.cross(b) / (b - a).norm());
    }
    return clearance;
}

ConvexPolygon difference_body(const ConvexPolygon& p) {
    // Minkowski sum of P and -P.  Both edge sequences are angle-sorted once
    // each polygon starts at its bottom-most vertex, so a two-pointer merge
    // walks the sum's boundary.
    const auto edges_from_bottom = [](const std::vector<Vec2>& vs) {
        const std::size_t n = vs.size();
        std::size_t start = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (vs[i].y < vs[start].y ||
                (vs[i].y == vs[start].y && vs[i].x < vs[start].x)) {
                start = i;
            }
        }
        std::vector<Vec2> edges(n);
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2& a = vs[(start + i) % n];
            const Vec2& b = vs[(start + i + 1) % n];
            edges[i] = b - a;
        }
        return std::pair{vs[start], edges};
    };

    std::vector<Vec2> neg(p.vertices().size());
    for (std::size_t i = 0; i < neg.size(); ++i) {
        neg[i] = -p.vertices()[p.vertices().size() - 1 - i];  // keep ccw order
    }

    const auto [a0, ea] = edges_from_bottom(p.vertices());
    const auto [b0, eb] = edges_from_bottom(neg);

    const auto angle = [](const Vec2& v) {
        double t = std::atan2(v.y, v.x);
        // Edges leave the bottom-most vertex with angles in [0, 2pi).
        if (t < 0.0) t += 2.0 * M_PI;
        return t;
    };

    std::vector<Vec2> verts;
    verts.reserve(ea.size() + eb.size());
    Vec2 cur = a0 + b0;
    std::size_t i = 0, j = 0;
    while (i < ea.size() || j < eb.size()) {
        verts.push_back(cur);
        if (j == eb.size() || (i < ea.size() && angle(ea[i]) <= angle(eb[j]))) {
            cur = cur + ea[i++];
        } else {
            cur = cur + eb[j++];
        }
    }
    return ConvexPolygon(std::move(verts));  // collinear pairs merge here
}

double intersection_area(const ConvexPolygon& a, const ConvexPolygon& b) {
    // Sutherland-Hodgman: clip a against each half-plane of b.
    std::vector<Vec2> poly = a.vertices();
    const std::vector<Vec2>& clip = b.vertices();
    const std::size_t m = clip.size();
    for (std::size_t e = 0; e < m && !poly.empty(); ++e) {
        const Vec2 c0 = clip[e];
        const Vec2 c1 = clip[(e + 1) % m];
        const Vec2 dir = c1 - c0;
        std::vector<Vec2> out;
        out.reserve(poly.size() + 2);
        const std::size_t n = poly.size();
        for (std::size_t k = 0; k < n; ++k) {
            const Vec2& s = poly[k];
            const Vec2& t = poly[(k + 1) % n];
            const double ds = dir.cross(s - c0);
            const double dt = dir.cross(t - c0);
            if (ds >= 0.0) {
                out.push_back(s);
            }
            if ((ds > 0.0 && dt < 0.0) || (ds < 0.0 && dt > 0.0)) {
                out.push_back(s + (t - s) * (ds / (ds - dt)));
            }
        }
        poly = std::move(out);
    }
    if (poly.size() < 3) {
        return 0.0;
    }
    return std::fabs(signed_area(poly));
}

Decomposition subdivide_unit_square(int k) {
    if (k < 0 || k > 8) {
        throw std::invalid_argument("subdivide_unit_square: k must be in [0, 8]");
    }
    const int m = 1 << k;
    const double h = 1.0 / m;
    Decomposition d;
    d.pieces.reserve(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const double x = j * h, y = i * h;
            d.pieces.push_back(ConvexPolygon({{x, y}, {x + h, y}, {x + h, y + h}, {x, y + h}}));
        }
    }
    d.parent = ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    return d;
}

Decomposition subdivide_equilateral_triangle(int k) {
    if (k < 0 || k > 8) {
        throw std::invalid_argument("subdivide_equilateral_triangle: k must be in [0, 8]");
    }
    const int m = 1 << k;
    const double s = 1.0 / m;
    const double hy = s * std::sqrt(3.0) / 2.0;
    Decomposition d;
    d.pieces.reserve(static_cast<std::size_t>(m) * m);
    // Row i holds m-i upright and m-i-1 inverted triangles of side s.
    for (int i = 0; i < m; ++i) {
        const double y = i * hy;
        for (int j = 0; j < m - i; ++j) {
            const double x = j * s + i * s / 2.0;
            d.pieces.push_back(ConvexPolygon(
                {{x, y}, {x + s, y}, {x + s / 2.0, y + hy}}));
            if (j + 1 < m - i) {
                d.pieces.push_back(ConvexPolygon(
                    {{x + s, y}, {x + 1.5 * s, y + hy}, {x + s / 2.0, y + hy}}));
            }
        }
    }
    d.parent = ConvexPolygon({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2.0}});
    return d;
}

DecompositionReport validate_decomposition(const Decomposition& d) {
    DecompositionReport rep;
    if (d.pieces.empty()) {
        return rep;
    }

    double area_sum = 0.0;
    double min_area = std::numeric_limits<double>::infinity();
    struct Box { double x0, y0, x1, y1; };
    std::vector<Box> boxes;
    boxes.reserve(d.pieces.size());
    for (const ConvexPolygon& p : d.pieces) {
        area_sum += p.area();
        min_area = std::min(min_area, p.area());
        Box b{1e300, 1e300, -1e300, -1e300};
        for (const Vec2& v : p.vertices()) {
            b.x0 = std::min(b.x0, v.x); b.y0 = std::min(b.y0, v.y);
            b.x1 = std::max(b.x1, v.x); b.y1 = std::max(b.y1, v.y);
        }
        boxes.push_back(b);
    }

    for (std::size_t i = 0; i < d.pieces.size(); ++i) {
        for (std::size_t j = i + 1; j < d.pieces.size(); ++j) {
            if (boxes[i].x1 < boxes[j].x0 || boxes[j].x1 < boxes[i].x0 ||
                boxes[i].y1 < boxes[j].y0 || boxes[j].y1 < boxes[i].y0) {
                continue;
            }
            const double ov = intersection_area(d.pieces[i], d.pieces[j]);
            if (ov > rep.max_overlap) {
                rep.max_overlap = ov;
                rep.overlap_i = static_cast<int>(i);
                rep.overlap_j = static_cast<int>(j);
            }
        }
    }

    if (d.parent) {
        rep.covering_defect = std::fabs(area_sum - d.parent->area()) / d.parent->area();
    }
    rep.pass = rep.max_overlap <= 1e-10 * min_area && rep.covering_defect <= 1e-10;
    return rep;
}

}  // namespace sobemb
