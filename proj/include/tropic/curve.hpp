#pragma once

// Assembly of the complete intersection C = V(f) ∩ V(g) on the standard
// tropical plane: per-quarter-plane hypersurface complexes, exact clipping to
// R^2_{<=0}, embedding, and gluing along the rays X, Y, Z, W.

#include <algorithm>
#include <array>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tropic/errors.hpp"
#include "tropic/feasible.hpp"
#include "tropic/hypersurface.hpp"
#include "tropic/quarter_planes.hpp"
#include "tropic/rational.hpp"
#include "tropic/subdivision.hpp"
#include "tropic/trop_poly.hpp"

namespace tropic {

struct CurveVertex {
    QVec pos;           // in R^3, on the standard tropical plane
    std::string label;  // originating quarter plane ("XY".."ZW") or ray ("X".."W")
};

struct CurveRay {
    size_t v = 0;
    IVec dir;           // primitive integer direction in R^3
    std::string label;  // quarter plane the ray lives in
};

struct TropicalCurveGraph {
    std::vector<CurveVertex> vertices;  // lexicographic by position
    std::vector<std::array<size_t, 2>> edges;
    std::vector<CurveRay> rays;
    long long d = 0, e = 0;  // degrees of (f, g)
    Verdict verdict = Verdict::Smooth;
};

struct CurveTopology {
    long long s = 0;           // components of C' = C minus the ray points
    long long t = 0;           // first Betti number of the closure of C'
    long long genus_of_c = 0;  // first Betti number of C itself
};

inline bool verify_origin_exclusion(const TropPoly& g) {
    return argmax_terms(g, QVec{Rational(0), Rational(0), Rational(0)}).size() == 1;
}

inline std::array<long long, 3> expected_counts(long long d, long long e) {
    return {d * d * e + d * e * e, 3 * d * e * (d + e) / 2 - 2 * d * e, 4 * d * e};
}

inline long long expected_genus(long long d, long long e) {
    return (d * d * e + d * e * e) / 2 - 2 * d * e + 1;
}

namespace detail {

struct UnionFind {
    std::vector<size_t> parent;
    explicit UnionFind(size_t n) : parent(n) {
        for (size_t i = 0; i < n; ++i) parent[i] = i;
    }
    size_t find(size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(size_t a, size_t b) { parent[find(a)] = find(b); }
};

// linear part of iota_q, on integer directions
inline IVec embed_direction(QuarterPlaneId q, const IVec& d) {
    switch (q) {
        case QuarterPlaneId::XY: return {d[0], d[1], 0};
        case QuarterPlaneId::YZ: return {0, d[0], d[1]};
        case QuarterPlaneId::ZX: return {d[1], 0, d[0]};
        case QuarterPlaneId::XW: return {d[0] - d[1], -d[1], -d[1]};
        case QuarterPlaneId::YW: return {-d[1], d[0] - d[1], -d[1]};
        case QuarterPlaneId::ZW: return {-d[1], -d[1], d[0] - d[1]};
    }
    fail(ErrorKind::Internal, "bad quarter plane id");
}

// which plane ray bounds quarter plane q at the given wall (0: s=0, 1: t=0)
inline const char* wall_ray_name(QuarterPlaneId q, int wall) {
    if (wall == 0) {
        switch (q) {
            case QuarterPlaneId::XY: return "Y";
            case QuarterPlaneId::YZ: return "Z";
            case QuarterPlaneId::ZX: return "X";
            default: return "W";
        }
    }
    switch (q) {
        case QuarterPlaneId::XY: case QuarterPlaneId::XW: return "X";
        case QuarterPlaneId::YZ: case QuarterPlaneId::YW: return "Y";
        default: return "Z";
    }
}

struct ClipPiece {
    QVec a;                   // finite end, plane coordinates
    std::optional<QVec> b;    // far end when bounded
    std::optional<IVec> dir;  // primitive plane direction when unbounded
};

// V(p) ∩ R^2_{<=0}, edge by edge
inline std::vector<ClipPiece> clip_complex_to_quadrant(const HypersurfaceComplex& hc) {
    for (const auto& v : hc.vertices)
        if ((v[0] == 0 && v[1] <= 0) || (v[1] == 0 && v[0] <= 0))
            fail(ErrorKind::VertexOnAxis, "restriction vertex on a closed negative axis");

    std::vector<ClipPiece> out;
    for (const auto& e : hc.edges) {
        bool seg = e.shape == EdgeShape::Segment;
        QVec d = seg ? qsub(*e.b, e.a)
                     : QVec{Rational((*e.dir)[0]), Rational((*e.dir)[1])};

        if ((d[0] == 0 && e.a[0] == 0) || (d[1] == 0 && e.a[1] == 0)) {
            // the edge runs inside a wall line; any positive-length overlap
            // with the closed quadrant puts a piece of the curve on a ray
            int other = d[0] == 0 && e.a[0] == 0 ? 1 : 0;
            std::optional<Rational> lo, hi;
            if (e.shape != EdgeShape::Line) lo = Rational(0);
            if (seg) hi = Rational(1);
            Rational bound = -e.a[other] / d[other];
            if (d[other] > 0) {
                if (!hi || bound < *hi) hi = bound;
            } else {
                if (!lo || bound > *lo) lo = bound;
            }
            if (!lo || !hi || *lo < *hi)
                fail(ErrorKind::SegmentOnRay, "curve edge lies along a plane ray");
            continue;
        }

        std::optional<Rational> lo, hi;
        if (e.shape != EdgeShape::Line) lo = Rational(0);
        if (seg) hi = Rational(1);
        bool empty = false;
        for (int i = 0; i < 2 && !empty; ++i) {
            if (d[i] == 0) {
                if (e.a[i] > 0) empty = true;
                continue;
            }
            Rational bound = -e.a[i] / d[i];
            if (d[i] > 0) {
                if (!hi || bound < *hi) hi = bound;
            } else {
                if (!lo || bound > *lo) lo = bound;
            }
        }
        if (empty || (lo && hi && *lo >= *hi)) continue;

        auto at = [&](const Rational& t) {
            return QVec{e.a[0] + t * d[0], e.a[1] + t * d[1]};
        };
        ClipPiece pc;
        if (lo && hi) {
            pc.a = at(*lo);
            pc.b = at(*hi);
        } else if (lo) {
            pc.a = at(*lo);
            pc.dir = *e.dir;
        } else if (hi) {
            pc.a = at(*hi);
            pc.dir = IVec{-(*e.dir)[0], -(*e.dir)[1]};
        } else {
            fail(ErrorKind::Internal, "clipped edge unbounded on both sides");
        }
        out.push_back(std::move(pc));
    }
    return out;
}

// exponent of p_q a term of the homogenization maps to
inline IVec plane_key(QuarterPlaneId q, const IVec& e4) {
    auto zs = zeroed_vars(q);
    IVec key;
    for (int i = 0; i < 4; ++i)
        if (i != zs[0] && i != zs[1]) key.push_back(e4[i]);
    if (q == QuarterPlaneId::ZX) std::swap(key[0], key[1]);
    return key;
}

// Tied slice fibers produce two-dimensional patches of V(g) inside the
// ambient plane of the quarter plane; certified inputs keep them away from
// the closed quadrant, so finding one there is a structural failure.
inline void check_tied_patches(const TropPoly& g, const TropPoly& pq, QuarterPlaneId q) {
    long long m = degree(g);
    std::map<IVec, int> hits;
    for (const auto& [e, c] : g.terms) {
        IVec e4 = e;
        e4.push_back(m - e[0] - e[1] - e[2]);
        IVec key = plane_key(q, e4);
        if (c == pq.terms.at(key)) ++hits[key];
    }
    for (const auto& [key, n] : hits) {
        if (n < 2) continue;
        std::vector<LinIneq2> sys;
        const Rational& ck = pq.terms.at(key);
        for (const auto& [u, cu] : pq.terms) {
            if (u == key) continue;
            sys.push_back({Rational(key[0] - u[0]), Rational(key[1] - u[1]), ck - cu, true});
        }
        push_negative_quadrant(sys);
        if (exact_feasible(sys))
            fail(ErrorKind::Internal, "two-dimensional patch of the curve on a quarter plane");
    }
}

}  // namespace detail

// Builds C = V(f) ∩ V(g) as an embedded graph. f must already be the
// standard plane; quarter-plane pieces are computed independently and glued
// by exact position along X, Y, Z, W.
inline TropicalCurveGraph intersection_curve(const TropPoly& f, const TropPoly& g) {
    require_nonempty(f);
    require_nonempty(g);
    if (f.n_vars != 3 || g.n_vars != 3)
        fail(ErrorKind::WrongDimension, "the intersection curve lives in R^3");

    const std::set<IVec> plane_support = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    std::set<IVec> fsupp;
    bool flat = true;
    for (const auto& [e, c] : f.terms) {
        fsupp.insert(e);
        flat &= c == f.terms.begin()->second;
    }
    if (fsupp != plane_support || !flat)
        fail(ErrorKind::NotAPlane, "f must be normalized to the standard plane");

    SmoothnessCertificate cert = certify_smooth_ci(f, g);
    if (cert.verdict == Verdict::NotWeaklySmooth)
        fail(ErrorKind::NotCertified, "Cayley subdivision has a non-minimal mixed cell");
    if (!verify_origin_exclusion(g))
        fail(ErrorKind::NotCertified, "maximal coefficient of g is not unique");
    long long e = degree(g);
    for (const IVec& corner :
         {IVec{0, 0, 0}, IVec{e, 0, 0}, IVec{0, e, 0}, IVec{0, 0, e}})
        if (!g.terms.count(corner))
            fail(ErrorKind::NotCertified, "Newton polytope of g is not the full simplex");

    auto build_plane = [&g](QuarterPlaneId q) {
        QuarterRestriction r = restrict_to_quarter_plane(g, q);
        detail::check_tied_patches(g, r.poly, q);
        return detail::clip_complex_to_quadrant(hypersurface_complex(r.poly));
    };
    std::array<std::future<std::vector<detail::ClipPiece>>, 6> jobs;
    for (size_t i = 0; i < 6; ++i)
        jobs[i] = std::async(std::launch::async, build_plane, all_quarter_planes[i]);
    std::array<std::vector<detail::ClipPiece>, 6> pieces;
    for (size_t i = 0; i < 6; ++i) pieces[i] = jobs[i].get();

    // merge by exact position
    struct VertInfo {
        std::string label;
        std::set<std::string> planes;  // contributors, wall points only
        int incidences = 0;
    };
    std::map<QVec, VertInfo> verts;
    auto touch = [&](QuarterPlaneId q, const QVec& st) -> const QVec& {
        std::string label;
        if (st[0] == 0 && st[1] == 0)
            fail(ErrorKind::Internal, "curve reaches the origin");
        if (st[0] == 0)
            label = detail::wall_ray_name(q, 0);
        else if (st[1] == 0)
            label = detail::wall_ray_name(q, 1);
        else
            label = quarter_plane_name(q);
        QVec pos = embed_point(q, st);
        auto [it, fresh] = verts.emplace(std::move(pos), VertInfo{label, {}, 0});
        if (!fresh && it->second.label != label)
            fail(ErrorKind::Internal, "conflicting labels at a glued point");
        if (label.size() == 1) it->second.planes.insert(quarter_plane_name(q));
        ++it->second.incidences;
        return it->first;
    };

    std::vector<std::array<QVec, 2>> raw_edges;
    struct RawRay {
        QVec base;
        IVec dir;
        std::string label;
    };
    std::vector<RawRay> raw_rays;
    for (size_t i = 0; i < 6; ++i) {
        QuarterPlaneId q = all_quarter_planes[i];
        for (const auto& pc : pieces[i]) {
            const QVec& a3 = touch(q, pc.a);
            if (pc.b) {
                const QVec& b3 = touch(q, *pc.b);
                raw_edges.push_back({a3, b3});
            } else {
                raw_rays.push_back({a3, detail::embed_direction(q, *pc.dir),
                                    quarter_plane_name(q)});
            }
        }
    }

    // every wall point must be glued by its three quarter planes, once each
    for (const auto& [pos, info] : verts) {
        if (info.label.size() != 1) continue;
        if (info.planes.size() != 3 || info.incidences != 3)
            fail(ErrorKind::GlueMismatch,
                 "ray " + info.label + " point not met by exactly three quarter planes");
    }
    // and the glued points must be the ray walk's crossings
    for (AxisRay ray : {AxisRay::X, AxisRay::Y, AxisRay::Z, AxisRay::W}) {
        const char* name = ray == AxisRay::X   ? "X"
                           : ray == AxisRay::Y ? "Y"
                           : ray == AxisRay::Z ? "Z"
                                               : "W";
        RayHits hits = ray_intersections(g, ray);
        std::set<QVec> expect(hits.points.begin(), hits.points.end());
        std::set<QVec> got;
        for (const auto& [pos, info] : verts)
            if (info.label == name) got.insert(pos);
        if (expect != got)
            fail(ErrorKind::GlueMismatch,
                 std::string("quarter planes disagree with the ray walk on ") + name);
    }

    TropicalCurveGraph c;
    c.d = 1;
    c.e = e;
    c.verdict = cert.verdict;
    std::map<QVec, size_t> ids;
    for (const auto& [pos, info] : verts) {
        ids.emplace(pos, c.vertices.size());
        c.vertices.push_back({pos, info.label});
    }
    for (const auto& [a, b] : raw_edges) {
        size_t i = ids.at(a), j = ids.at(b);
        if (i == j) fail(ErrorKind::Internal, "curve edge with equal endpoints");
        c.edges.push_back({std::min(i, j), std::max(i, j)});
    }
    std::sort(c.edges.begin(), c.edges.end());
    for (const auto& r : raw_rays) c.rays.push_back({ids.at(r.base), r.dir, r.label});
    std::sort(c.rays.begin(), c.rays.end(), [](const CurveRay& a, const CurveRay& b) {
        return std::tie(a.v, a.dir) < std::tie(b.v, b.dir);
    });

    // interior trivalence: quadrant cells are unimodular triangles whenever
    // the pair certifies, so three germs meet at every curve vertex
    std::vector<int> deg(c.vertices.size(), 0);
    for (const auto& [i, j] : c.edges) ++deg[i], ++deg[j];
    for (const auto& r : c.rays) ++deg[r.v];
    for (size_t i = 0; i < c.vertices.size(); ++i)
        if (deg[i] != 3) fail(ErrorKind::Internal, "curve vertex is not trivalent");
    return c;
}

inline std::array<long long, 3> count_cells(const TropicalCurveGraph& c) {
    return {(long long)c.vertices.size(), (long long)c.edges.size(),
            (long long)c.rays.size()};
}

// E - V + 1 on the bounded part; rays never close cycles
inline long long curve_genus(const TropicalCurveGraph& c) {
    if (c.vertices.empty()) fail(ErrorKind::Disconnected, "empty curve");
    detail::UnionFind uf(c.vertices.size());
    for (const auto& [i, j] : c.edges) uf.unite(i, j);
    size_t root = uf.find(0);
    for (size_t i = 1; i < c.vertices.size(); ++i)
        if (uf.find(i) != root) fail(ErrorKind::Disconnected, "curve graph is disconnected");
    return (long long)c.edges.size() - (long long)c.vertices.size() + 1;
}

// Split the curve at its ray points: s counts the components of what
// remains, t their cycles. Rays are kept as edges to fresh leaves so that
// ray-only components still count.
inline CurveTopology components_and_betti(const TropicalCurveGraph& c) {
    std::vector<bool> wall(c.vertices.size());
    for (size_t i = 0; i < c.vertices.size(); ++i)
        wall[i] = c.vertices[i].label.size() == 1;

    size_t n = 0;
    std::vector<size_t> keep(c.vertices.size(), SIZE_MAX);
    for (size_t i = 0; i < c.vertices.size(); ++i)
        if (!wall[i]) keep[i] = n++;
    size_t nodes = n;
    long long edges = 0;
    std::vector<std::array<size_t, 2>> links;
    auto end_node = [&](size_t v) { return wall[v] ? nodes++ : keep[v]; };
    for (const auto& [i, j] : c.edges) {
        size_t a = end_node(i), b = end_node(j);
        links.push_back({a, b});
        ++edges;
    }
    for (const auto& r : c.rays) {
        size_t a = end_node(r.v), b = nodes++;  // leaf at infinity
        links.push_back({a, b});
        ++edges;
    }
    detail::UnionFind uf(nodes);
    for (const auto& [a, b] : links) uf.unite(a, b);
    std::set<size_t> roots;
    for (size_t i = 0; i < nodes; ++i) roots.insert(uf.find(i));

    CurveTopology out;
    out.s = (long long)roots.size();
    out.t = edges - (long long)nodes + out.s;

    detail::UnionFind cf(c.vertices.size());
    for (const auto& [i, j] : c.edges) cf.unite(i, j);
    std::set<size_t> croots;
    for (size_t i = 0; i < c.vertices.size(); ++i) croots.insert(cf.find(i));
    out.genus_of_c = (long long)c.edges.size() - (long long)c.vertices.size() +
                     (long long)croots.size();

    if (c.d == 1 && c.e == 4 && c.verdict == Verdict::Smooth) {
        if (out.s - out.t != 6 || out.t < 0 || out.t > 3)
            fail(ErrorKind::Internal, "(s, t) bookkeeping violates the Euler count");
    }
    return out;
}

}  // namespace tropic
