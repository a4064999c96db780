#include "dtri/instances.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <string>

namespace dtri {

PolygonPtr gen_spiral(int q) {
    if (q < 1) throw BadValues("spiral needs q >= 1");
    // Staircase tube: outer chain O_t, inner chain I_t = O_t + (-1, 1); each
    // chamber between consecutive chain pairs is a convex quadrilateral and
    // the bend chords (O_t, I_t) are forced.
    std::vector<Point> outer = {{0, 0}};
    for (int t = 1; t <= q; ++t) {
        Point prev = outer.back();
        if (t % 2 == 1)
            outer.push_back({prev.x + 3, prev.y});
        else
            outer.push_back({prev.x, prev.y + 3});
    }
    std::vector<Point> pts = outer;
    for (int t = q; t >= 1; --t) pts.push_back({outer[t].x - 1, outer[t].y + 1});
    pts.push_back({0, 1});
    return make_polygon(std::move(pts));
}

KitesInstance gen_kites(const std::vector<std::int64_t>& values) {
    if (values.empty()) throw BadValues("kite polygon needs at least one value");
    for (std::int64_t v : values)
        if (v < 1) throw BadValues("kite values must be positive integers");
    const int m = static_cast<int>(values.size());

    // Tower of kites stacked on the x = 0 axis, alternating lying / standing
    // so each junction quad folds at a reflex tip and is forced. Lying kite:
    // horizontal diagonal 4v (longer), vertical 2v; standing kite rotated.
    struct KiteGeom {
        Point l, b, r, t;
        bool lying;
    };
    std::vector<KiteGeom> kg(m);
    std::int64_t y = 0;
    for (int t = 0; t < m; ++t) {
        std::int64_t v = values[t];
        bool lying = (t % 2 == 0);
        if (t > 0) y += 2 * values[t - 1] + 2 * v;
        KiteGeom& g = kg[t];
        g.lying = lying;
        if (lying) {
            g.l = {-2 * v, y};
            g.b = {0, y - v};
            g.r = {2 * v, y};
            g.t = {0, y + v};
        } else {
            g.l = {-v, y};
            g.b = {0, y - 2 * v};
            g.r = {v, y};
            g.t = {0, y + 2 * v};
        }
    }

    // CCW boundary: right chain bottom-up (B_t, R_t), top cap, left chain
    // top-down (T_t, L_t).
    std::vector<Point> pts;
    std::vector<int> b_idx(m), r_idx(m), t_idx(m), l_idx(m);
    for (int t = 0; t < m; ++t) {
        b_idx[t] = static_cast<int>(pts.size());
        pts.push_back(kg[t].b);
        r_idx[t] = static_cast<int>(pts.size());
        pts.push_back(kg[t].r);
    }
    for (int t = m - 1; t >= 0; --t) {
        t_idx[t] = static_cast<int>(pts.size());
        pts.push_back(kg[t].t);
        l_idx[t] = static_cast<int>(pts.size());
        pts.push_back(kg[t].l);
    }
    PolygonPtr poly = make_polygon(std::move(pts));
    if (poly->orientation_flipped())
        throw InternalError("kite tower boundary was not CCW");

    KitesInstance inst;
    inst.polygon = poly;
    std::map<Diagonal, double> atoms;
    for (int t = 0; t < m; ++t) {
        Diagonal horiz(l_idx[t], r_idx[t]);  // in-plane horizontal
        Diagonal vert(b_idx[t], t_idx[t]);   // in-plane vertical
        KiteGadget kite;
        kite.value = values[t];
        // "Horizontal" names the longer diagonal; standing kites carry it
        // vertically in the plane.
        if (kg[t].lying) {
            kite.horizontal = horiz;
            kite.vertical = vert;
        } else {
            kite.horizontal = vert;
            kite.vertical = horiz;
        }
        atoms[kite.horizontal] = static_cast<double>(values[t]);
        inst.kites.push_back(kite);
    }
    inst.excess = DecomposableMeasure::edge_table("kite-excess", Combiner::Sum, std::move(atoms),
                                                  true, /*total_default_zero=*/true);
    return inst;
}

PolygonPtr gen_convex_regular(int n, std::int64_t scale) {
    if (n < 3) throw BadValues("regular polygon needs n >= 3");
    if (scale < 1) throw BadValues("scale must be positive");
    const double tau = 6.283185307179586476925287;
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) {
        double a = tau * i / n;
        pts.push_back({static_cast<Coord>(std::llround(std::cos(a) * static_cast<double>(scale))),
                       static_cast<Coord>(std::llround(std::sin(a) * static_cast<double>(scale)))});
    }
    try {
        return make_polygon(std::move(pts));
    } catch (const ValidationError& e) {
        throw RoundingCollision("regular " + std::to_string(n) + "-gon degenerates at scale " +
                                std::to_string(scale) + " (" + e.what() + "); use a larger scale");
    }
}

namespace {

bool edges_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
    return segments_intersect(a, b, c, d);
}

double total_length(const std::vector<Point>& pts) {
    double s = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point& a = pts[i];
        const Point& b = pts[(i + 1) % pts.size()];
        s += std::hypot(static_cast<double>(a.x - b.x), static_cast<double>(a.y - b.y));
    }
    return s;
}

}  // namespace

PolygonPtr gen_random_simple(int n, std::uint64_t seed) {
    if (n < 3) throw BadValues("random polygon needs n >= 3");
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt));
        const Coord box = 4 * static_cast<Coord>(n);
        std::uniform_int_distribution<Coord> coord(0, box);
        std::vector<Point> pts;
        while (static_cast<int>(pts.size()) < n) {
            Point p{coord(rng), coord(rng)};
            if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
        }
        // 2-opt uncrossing: every swap strictly shortens the closed tour, so
        // the loop terminates; a generous iteration cap catches degeneracies.
        bool stuck = false;
        for (long long guard = 0;; ++guard) {
            if (guard > 64LL * n * n * n) {
                stuck = true;
                break;
            }
            bool crossed = false;
            for (int i = 0; i < n && !crossed; ++i) {
                for (int j = i + 1; j < n && !crossed; ++j) {
                    int i2 = (i + 1) % n, j2 = (j + 1) % n;
                    if (i == j || i2 == j || j2 == i) continue;
                    if (edges_cross(pts[i], pts[i2], pts[j], pts[j2])) {
                        double before = total_length(pts);
                        std::reverse(pts.begin() + i + 1, pts.begin() + j + 1);
                        crossed = true;
                        if (total_length(pts) >= before) stuck = true;
                    }
                }
            }
            if (!crossed) break;
            if (stuck) break;
        }
        if (stuck) continue;
        try {
            return make_polygon(std::move(pts));
        } catch (const ValidationError&) {
            // collinear or still-degenerate configuration: reseed
        }
    }
    throw InternalError("gen_random_simple failed to produce a simple polygon for n=" +
                        std::to_string(n) + ", seed=" + std::to_string(seed));
}

PolygonPtr generate(const GeneratorSpec& spec) {
    switch (spec.kind) {
        case GeneratorKind::Spiral: return gen_spiral(spec.q);
        case GeneratorKind::Kites: return gen_kites(spec.values).polygon;
        case GeneratorKind::ConvexRegular: return gen_convex_regular(spec.n, spec.scale);
        case GeneratorKind::RandomSimple: return gen_random_simple(spec.n, spec.seed);
    }
    throw InputError("unknown generator kind");
}

}  // namespace dtri
