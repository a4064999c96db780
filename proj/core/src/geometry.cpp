#include "dtri/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dtri {

namespace {

using I128 = __int128;

I128 cross(const Point& a, const Point& b, const Point& c) {
    return I128(b.x - a.x) * I128(c.y - a.y) - I128(b.y - a.y) * I128(c.x - a.x);
}

int sign(I128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace

int orient_sign(const Point& a, const Point& b, const Point& c) {
    return sign(cross(a, b, c));
}

bool on_segment(const Point& a, const Point& b, const Point& c) {
    if (orient_sign(a, b, c) != 0) return false;
    return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    int d1 = orient_sign(c, d, a);
    int d2 = orient_sign(c, d, b);
    int d3 = orient_sign(a, b, c);
    int d4 = orient_sign(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    if (d1 == 0 && on_segment(c, d, a)) return true;
    if (d2 == 0 && on_segment(c, d, b)) return true;
    if (d3 == 0 && on_segment(a, b, c)) return true;
    if (d4 == 0 && on_segment(a, b, d)) return true;
    return false;
}

int in_circle_sign(const Point& a, const Point& b, const Point& c, const Point& d) {
    // 3x3 determinant of the lifted, d-translated points.
    I128 adx = a.x - d.x, ady = a.y - d.y;
    I128 bdx = b.x - d.x, bdy = b.y - d.y;
    I128 cdx = c.x - d.x, cdy = c.y - d.y;
    I128 alift = adx * adx + ady * ady;
    I128 blift = bdx * bdx + bdy * bdy;
    I128 clift = cdx * cdx + cdy * cdy;
    I128 det = alift * (bdx * cdy - bdy * cdx) -
               blift * (adx * cdy - ady * cdx) +
               clift * (adx * bdy - ady * bdx);
    return sign(det);
}

Triangle::Triangle(int x, int y, int z) {
    int v[3] = {x, y, z};
    std::sort(v, v + 3);
    a = v[0];
    b = v[1];
    c = v[2];
}

Polygon Polygon::validate(std::vector<Point> points) {
    const int n = static_cast<int>(points.size());
    if (n < 3)
        throw ValidationError(PolygonDefect::TooFewVertices,
                              "polygon needs at least 3 vertices, got " + std::to_string(n));
    for (int i = 0; i < n; ++i) {
        const Point& p = points[i];
        if (p.x > kMaxCoord || p.x < -kMaxCoord || p.y > kMaxCoord || p.y < -kMaxCoord)
            throw ValidationError(PolygonDefect::CoordinateRange,
                                  "coordinate magnitude at vertex " + std::to_string(i) +
                                      " exceeds " + std::to_string(kMaxCoord),
                                  i);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (points[i] == points[j])
                throw ValidationError(PolygonDefect::DegenerateVertex,
                                      "duplicate vertices " + std::to_string(i) + " and " +
                                          std::to_string(j),
                                      i, j);
    for (int i = 0; i < n; ++i) {
        const Point& a = points[i];
        const Point& b = points[(i + 1) % n];
        const Point& c = points[(i + 2) % n];
        if (orient_sign(a, b, c) == 0)
            throw ValidationError(PolygonDefect::DegenerateVertex,
                                  "collinear consecutive vertices at index " +
                                      std::to_string((i + 1) % n),
                                  (i + 1) % n);
    }
    // Simplicity: non-adjacent edges may not intersect at all; adjacent edges
    // only at the shared endpoint (guaranteed by the collinearity check).
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            const Point& a = points[i];
            const Point& b = points[(i + 1) % n];
            const Point& c = points[j];
            const Point& d = points[(j + 1) % n];
            if (segments_intersect(a, b, c, d))
                throw ValidationError(PolygonDefect::NotSimple,
                                      "edges " + std::to_string(i) + " and " + std::to_string(j) +
                                          " intersect",
                                      i, j);
        }
    }
    I128 area2 = 0;
    for (int i = 0; i < n; ++i) {
        const Point& p = points[i];
        const Point& q = points[(i + 1) % n];
        area2 += I128(p.x) * q.y - I128(q.x) * p.y;
    }
    Polygon poly;
    poly.flipped_ = area2 < 0;
    if (poly.flipped_) std::reverse(points.begin(), points.end());
    poly.vertices_ = std::move(points);
    poly.convex_ = true;
    for (int i = 0; i < n; ++i) {
        if (orient_sign(poly.vertices_[i], poly.vertices_[poly.next(i)],
                        poly.vertices_[poly.next(poly.next(i))]) <= 0) {
            poly.convex_ = false;
            break;
        }
    }
    poly.build_diagonals();
    return poly;
}

bool Polygon::is_boundary_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return j == i + 1 || (i == 0 && j == n() - 1);
}

bool Polygon::is_valid_diagonal(int i, int j) const {
    if (i == j || i < 0 || j < 0 || i >= n() || j >= n()) return false;
    return diag_valid_[static_cast<std::size_t>(i) * n() + j] != 0;
}

bool Polygon::is_chord_or_edge(int i, int j) const {
    return is_boundary_edge(i, j) || is_valid_diagonal(i, j);
}

bool Polygon::diagonal_test(int i, int j) const {
    const int nn = n();
    if (is_boundary_edge(i, j)) return false;
    const Point& a = vertices_[i];
    const Point& b = vertices_[j];
    // No vertex may lie on the open segment.
    for (int w = 0; w < nn; ++w) {
        if (w == i || w == j) continue;
        if (on_segment(a, b, vertices_[w])) return false;
    }
    // No boundary edge not incident to i or j may touch the segment.
    for (int e = 0; e < nn; ++e) {
        int f = next(e);
        if (e == i || e == j || f == i || f == j) continue;
        if (segments_intersect(a, b, vertices_[e], vertices_[f])) return false;
    }
    // Local in-cone test at i: the segment must start towards the interior.
    const Point& ip = vertices_[prev(i)];
    const Point& in = vertices_[next(i)];
    if (orient_sign(ip, a, in) > 0) {
        // convex corner
        if (!(orient_sign(a, b, ip) > 0 && orient_sign(b, a, in) > 0)) return false;
    } else {
        // reflex corner
        if (orient_sign(a, b, in) >= 0 && orient_sign(b, a, ip) >= 0) return false;
    }
    return true;
}

void Polygon::build_diagonals() {
    const int nn = n();
    diag_valid_.assign(static_cast<std::size_t>(nn) * nn, 0);
    for (int i = 0; i < nn; ++i) {
        for (int j = i + 1; j < nn; ++j) {
            if (diagonal_test(i, j)) {
                diag_valid_[static_cast<std::size_t>(i) * nn + j] = 1;
                diag_valid_[static_cast<std::size_t>(j) * nn + i] = 1;
                diagonals_.emplace_back(i, j);
            }
        }
    }
}

bool Polygon::valid_split(int i, int m, int j) const {
    if (!(i < m && m < j)) return false;
    if (!is_chord_or_edge(i, m) || !is_chord_or_edge(m, j) || !is_chord_or_edge(i, j))
        return false;
    const Point& a = vertices_[i];
    const Point& b = vertices_[m];
    const Point& c = vertices_[j];
    if (orient_sign(a, b, c) <= 0) return false;
    for (int w = 0; w < n(); ++w) {
        if (w == i || w == m || w == j) continue;
        const Point& p = vertices_[w];
        if (orient_sign(a, b, p) > 0 && orient_sign(b, c, p) > 0 && orient_sign(c, a, p) > 0)
            return false;
    }
    return true;
}

double Polygon::edge_length(const Diagonal& d) const {
    const Point& a = vertices_[d.i];
    const Point& b = vertices_[d.j];
    double dx = static_cast<double>(a.x - b.x);
    double dy = static_cast<double>(a.y - b.y);
    return std::sqrt(dx * dx + dy * dy);
}

double Polygon::triangle_area2(const Triangle& t) const {
    return static_cast<double>(cross(vertices_[t.a], vertices_[t.b], vertices_[t.c]));
}

namespace {

double corner_angle(const Point& at, const Point& p, const Point& q) {
    double ux = static_cast<double>(p.x - at.x), uy = static_cast<double>(p.y - at.y);
    double vx = static_cast<double>(q.x - at.x), vy = static_cast<double>(q.y - at.y);
    double dot = ux * vx + uy * vy;
    double crs = ux * vy - uy * vx;
    return std::atan2(std::abs(crs), dot);
}

}  // namespace

double Polygon::smallest_angle(const Triangle& t) const {
    const Point& a = vertices_[t.a];
    const Point& b = vertices_[t.b];
    const Point& c = vertices_[t.c];
    return std::min({corner_angle(a, b, c), corner_angle(b, a, c), corner_angle(c, a, b)});
}

double Polygon::largest_angle(const Triangle& t) const {
    const Point& a = vertices_[t.a];
    const Point& b = vertices_[t.b];
    const Point& c = vertices_[t.c];
    return std::max({corner_angle(a, b, c), corner_angle(b, a, c), corner_angle(c, a, b)});
}

SplitTable::SplitTable(const Polygon& poly) : n_(poly.n()) {
    table_.assign(static_cast<std::size_t>(n_) * n_ * n_, 0);
    for (int len = 2; len < n_; ++len) {
        for (int i = 0; i + len < n_; ++i) {
            int j = i + len;
            if (!poly.is_chord_or_edge(i, j)) continue;
            for (int m = i + 1; m < j; ++m) {
                if (poly.valid_split(i, m, j))
                    table_[(static_cast<std::size_t>(i) * n_ + m) * n_ + j] = 1;
            }
        }
    }
}

}  // namespace dtri
