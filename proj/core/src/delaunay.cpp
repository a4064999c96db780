#include "dtri/delaunay.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "dtri/bct.hpp"
#include "dtri/oracle.hpp"

namespace dtri {

namespace {

struct Side {
    int a, b;  // a < b
    Side(int x, int y) : a(std::min(x, y)), b(std::max(x, y)) {}
    friend auto operator<=>(const Side&, const Side&) = default;
};

// Map each edge (boundary or diagonal) to the opposite vertices of its
// incident triangles.
std::map<Side, std::vector<int>> opposite_map(const std::vector<Triangle>& tris) {
    std::map<Side, std::vector<int>> opp;
    for (const Triangle& t : tris) {
        opp[Side(t.a, t.b)].push_back(t.c);
        opp[Side(t.b, t.c)].push_back(t.a);
        opp[Side(t.a, t.c)].push_back(t.b);
    }
    return opp;
}

// d strictly inside the circumcircle of (a,b,u)? Signs normalized to CCW.
int incircle_oriented(const Polygon& p, int a, int b, int u, int d) {
    if (orient_sign(p.vertex(a), p.vertex(b), p.vertex(u)) > 0)
        return in_circle_sign(p.vertex(a), p.vertex(b), p.vertex(u), p.vertex(d));
    return in_circle_sign(p.vertex(b), p.vertex(a), p.vertex(u), p.vertex(d));
}

}  // namespace

bool is_locally_delaunay(const Triangulation& t) {
    const Polygon& p = *t.polygon();
    auto opp = opposite_map(t.triangles());
    for (const Diagonal& d : t.diagonals()) {
        const auto& o = opp.at(Side(d.i, d.j));
        if (o.size() != 2) throw InternalError("diagonal without two incident triangles");
        if (incircle_oriented(p, d.i, d.j, o[0], o[1]) > 0) return false;
    }
    return true;
}

Triangulation delaunay_triangulation(const PolygonPtr& poly) {
    BctInstance seed;
    seed.polygon = poly;
    seed.weight = DecomposableMeasure::const0();
    seed.quality = DecomposableMeasure::const0();
    seed.k = 1;
    Triangulation t = solve_bct_integer_weight(seed, 0).witnesses.at(0);

    const Polygon& p = *poly;
    const int flip_cap = 10 * p.n() * p.n() + 100;
    for (int iter = 0; iter < flip_cap; ++iter) {
        auto opp = opposite_map(t.triangles());
        const Diagonal* illegal = nullptr;
        const std::vector<int>* o = nullptr;
        for (const Diagonal& d : t.diagonals()) {
            const auto& cand = opp.at(Side(d.i, d.j));
            if (incircle_oriented(p, d.i, d.j, cand[0], cand[1]) > 0) {
                illegal = &d;
                o = &cand;
                break;
            }
        }
        if (!illegal) return t;
        Diagonal flipped((*o)[0], (*o)[1]);
        if (!p.is_valid_diagonal(flipped.i, flipped.j))
            throw InternalError("illegal diagonal is not flippable");
        std::vector<Diagonal> diags;
        for (const Diagonal& d : t.diagonals())
            if (!(d == *illegal)) diags.push_back(d);
        diags.push_back(flipped);
        t = Triangulation::make(poly, std::move(diags));
    }
    throw NotDelaunayTriangulable("edge-flip legalization did not settle within " +
                                  std::to_string(flip_cap) + " flips");
}

CocircularDecomposition cocircular_decomposition(const PolygonPtr& poly) {
    Triangulation ref = delaunay_triangulation(poly);
    const Polygon& p = *poly;
    auto tris = ref.triangles();
    auto opp = opposite_map(tris);

    std::map<Triangle, int> tri_index;
    for (std::size_t i = 0; i < tris.size(); ++i) tri_index[tris[i]] = static_cast<int>(i);

    // Union-find over triangles, merging across exactly co-circular diagonals.
    std::vector<int> parent(tris.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<char> diag_tied(ref.diagonals().size(), 0);
    for (std::size_t di = 0; di < ref.diagonals().size(); ++di) {
        const Diagonal& d = ref.diagonals()[di];
        const auto& o = opp.at(Side(d.i, d.j));
        if (incircle_oriented(p, d.i, d.j, o[0], o[1]) != 0) continue;
        diag_tied[di] = 1;
        int t1 = tri_index.at(Triangle(d.i, d.j, o[0]));
        int t2 = tri_index.at(Triangle(d.i, d.j, o[1]));
        parent[find(t1)] = find(t2);
    }

    std::map<int, std::vector<int>> groups;
    for (std::size_t i = 0; i < tris.size(); ++i)
        groups[find(static_cast<int>(i))].push_back(static_cast<int>(i));

    CocircularDecomposition dec{std::move(ref), {}, {}};
    std::set<Diagonal> internal_all;
    for (const auto& [root, members] : groups) {
        if (members.size() < 2) continue;
        // Boundary walk of the union of member triangles.
        std::map<Side, int> edge_use;
        for (int ti : members) {
            const Triangle& t = tris[ti];
            edge_use[Side(t.a, t.b)]++;
            edge_use[Side(t.b, t.c)]++;
            edge_use[Side(t.a, t.c)]++;
        }
        std::map<int, std::vector<int>> adj;
        for (const auto& [side, uses] : edge_use) {
            if (uses != 1) continue;
            adj[side.a].push_back(side.b);
            adj[side.b].push_back(side.a);
        }
        CocircularSet cs;
        int start = adj.begin()->first;
        int prev = -1, cur = start;
        do {
            cs.cycle.push_back(cur);
            const auto& nb = adj.at(cur);
            if (nb.size() != 2) throw InternalError("co-circular set boundary is not a cycle");
            int nxt = (nb[0] == prev) ? nb[1] : nb[0];
            prev = cur;
            cur = nxt;
        } while (cur != start);
        if (cs.cycle.size() < 4) throw InternalError("co-circular set with fewer than 4 vertices");
        // Normalize to CCW using the signed area of the cycle.
        long long area2 = 0;
        for (std::size_t i = 0; i < cs.cycle.size(); ++i) {
            const Point& a = p.vertex(cs.cycle[i]);
            const Point& b = p.vertex(cs.cycle[(i + 1) % cs.cycle.size()]);
            area2 += a.x * b.y - b.x * a.y;
        }
        if (area2 < 0) std::reverse(cs.cycle.begin(), cs.cycle.end());
        for (const auto& [side, uses] : edge_use) {
            if (uses != 2) continue;
            cs.internal.emplace_back(side.a, side.b);
            internal_all.insert(Diagonal(side.a, side.b));
        }
        std::sort(cs.internal.begin(), cs.internal.end());
        dec.sets.push_back(std::move(cs));
    }
    for (const Diagonal& d : dec.reference.diagonals())
        if (!internal_all.contains(d)) dec.forced.push_back(d);
    return dec;
}

std::int64_t count_delaunay_triangulations(const CocircularDecomposition& dec, std::int64_t cap) {
    std::int64_t total = 1;
    for (const auto& cs : dec.sets) {
        std::int64_t c = catalan(static_cast<int>(cs.cycle.size()) - 2);
        if (total > cap / c) return cap;
        total *= c;
    }
    return total;
}

}  // namespace dtri
