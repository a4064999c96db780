#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "dtri/errors.hpp"

namespace dtri {

using Coord = std::int64_t;

// Coordinates are capped so that the 2x2 orientation and 4x4 in-circle
// determinants fit comfortably in __int128.
inline constexpr Coord kMaxCoord = Coord{1} << 24;

struct Point {
    Coord x = 0;
    Coord y = 0;

    friend bool operator==(const Point& a, const Point& b) = default;
};

// Exact sign of the cross product (b-a) x (c-a): >0 left turn (CCW), <0 right.
int orient_sign(const Point& a, const Point& b, const Point& c);

// True if c lies on the closed segment [a,b] (collinearity required).
bool on_segment(const Point& a, const Point& b, const Point& c);

// True if closed segments [a,b] and [c,d] share at least one point.
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

// Exact in-circle sign for the circle through a,b,c (assumed CCW): >0 iff d is
// strictly inside, 0 iff co-circular, <0 outside.
int in_circle_sign(const Point& a, const Point& b, const Point& c, const Point& d);

// Diagonal endpoints as vertex indices, canonical i < j.
struct Diagonal {
    int i = 0;
    int j = 0;

    Diagonal() = default;
    Diagonal(int a, int b) : i(a < b ? a : b), j(a < b ? b : a) {}

    friend bool operator==(const Diagonal&, const Diagonal&) = default;
    friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

// Triangle on vertex indices, canonical a < b < c.
struct Triangle {
    int a = 0;
    int b = 0;
    int c = 0;

    Triangle() = default;
    Triangle(int x, int y, int z);

    friend bool operator==(const Triangle&, const Triangle&) = default;
    friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

// A simple polygon with integer coordinates, normalized to CCW order.
// Immutable after construction; the diagonal universe is precomputed with
// exact integer predicates.
class Polygon {
public:
    // Validates and normalizes the input chain. Throws ValidationError.
    static Polygon validate(std::vector<Point> points);

    int n() const { return static_cast<int>(vertices_.size()); }
    const Point& vertex(int i) const { return vertices_[i]; }
    const std::vector<Point>& vertices() const { return vertices_; }
    bool orientation_flipped() const { return flipped_; }

    int next(int i) const { return i + 1 == n() ? 0 : i + 1; }
    int prev(int i) const { return i == 0 ? n() - 1 : i - 1; }

    bool is_boundary_edge(int i, int j) const;

    // True iff (i,j) is non-adjacent and the open segment lies strictly
    // inside. Symmetric in i,j; false for boundary edges and out-of-range-free
    // adjacent pairs.
    bool is_valid_diagonal(int i, int j) const;

    // True iff (i,j) is a boundary edge or a valid diagonal: the chords the
    // chain DP may close a sub-polygon with.
    bool is_chord_or_edge(int i, int j) const;

    // All valid diagonals in (i,j)-lexicographic order.
    const std::vector<Diagonal>& diagonal_universe() const { return diagonals_; }

    bool is_convex() const { return convex_; }

    // True iff triangle (i,m,j), i<m<j, is positively oriented, all three
    // sides are chords or edges, and no other vertex lies inside it; such a
    // triangle is contained in the polygon and usable as a DP split.
    bool valid_split(int i, int m, int j) const;

    double edge_length(const Diagonal& d) const;
    double triangle_area2(const Triangle& t) const;  // twice signed area, exact in double for guarded coords
    double smallest_angle(const Triangle& t) const;
    double largest_angle(const Triangle& t) const;

    friend bool operator==(const Polygon& a, const Polygon& b) {
        return a.vertices_ == b.vertices_;
    }

private:
    Polygon() = default;

    void build_diagonals();
    bool diagonal_test(int i, int j) const;

    std::vector<Point> vertices_;
    std::vector<Diagonal> diagonals_;
    std::vector<char> diag_valid_;  // n*n matrix
    bool convex_ = false;
    bool flipped_ = false;
};

using PolygonPtr = std::shared_ptr<const Polygon>;

inline PolygonPtr make_polygon(std::vector<Point> pts) {
    return std::make_shared<const Polygon>(Polygon::validate(std::move(pts)));
}

// Precomputed valid_split table for one polygon; used by the chain DPs and
// the enumeration oracle.
class SplitTable {
public:
    explicit SplitTable(const Polygon& poly);

    bool ok(int i, int m, int j) const {
        return table_[(static_cast<std::size_t>(i) * n_ + m) * n_ + j] != 0;
    }

private:
    int n_;
    std::vector<char> table_;
};

}  // namespace dtri

template <>
struct std::hash<dtri::Diagonal> {
    std::size_t operator()(const dtri::Diagonal& d) const noexcept {
        return std::hash<long long>()((static_cast<long long>(d.i) << 20) ^ d.j);
    }
};
