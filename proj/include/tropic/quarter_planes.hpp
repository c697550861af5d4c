#pragma once

// Restrictions of V(g) to the six quarter planes of the standard tropical
// plane: the marked subcomplex K', the staircase functions u and r, the
// shape of |K'|, the A'/B'/D decomposition of the z=0 slice, and the ray
// monomial paths.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "tropic/errors.hpp"
#include "tropic/feasible.hpp"
#include "tropic/hypersurface.hpp"
#include "tropic/rational.hpp"
#include "tropic/subdivision.hpp"
#include "tropic/trop_poly.hpp"

namespace tropic {

enum class QuarterPlaneId { XY, YZ, ZX, XW, YW, ZW };

inline constexpr std::array<QuarterPlaneId, 6> all_quarter_planes = {
    QuarterPlaneId::XY, QuarterPlaneId::YZ, QuarterPlaneId::ZX,
    QuarterPlaneId::XW, QuarterPlaneId::YW, QuarterPlaneId::ZW};

inline const char* quarter_plane_name(QuarterPlaneId q) {
    switch (q) {
        case QuarterPlaneId::XY: return "XY";
        case QuarterPlaneId::YZ: return "YZ";
        case QuarterPlaneId::ZX: return "ZX";
        case QuarterPlaneId::XW: return "XW";
        case QuarterPlaneId::YW: return "YW";
        case QuarterPlaneId::ZW: return "ZW";
    }
    return "?";
}

// the two of (x, y, z, w) that vanish on the plane's copy of g^h
inline std::array<int, 2> zeroed_vars(QuarterPlaneId q) {
    switch (q) {
        case QuarterPlaneId::XY: return {2, 3};
        case QuarterPlaneId::YZ: return {0, 3};
        case QuarterPlaneId::ZX: return {1, 3};
        case QuarterPlaneId::XW: return {1, 2};
        case QuarterPlaneId::YW: return {0, 2};
        case QuarterPlaneId::ZW: return {0, 1};
    }
    return {0, 0};
}

// the affine map iota from the plane's own coordinates into R^3
inline QVec embed_point(QuarterPlaneId q, const QVec& st) {
    if (st.size() != 2) fail(ErrorKind::WrongDimension, "embedding expects a plane point");
    const Rational& s = st[0];
    const Rational& t = st[1];
    switch (q) {
        case QuarterPlaneId::XY: return {s, t, Rational(0)};
        case QuarterPlaneId::YZ: return {Rational(0), s, t};
        case QuarterPlaneId::ZX: return {t, Rational(0), s};
        case QuarterPlaneId::XW: return {s - t, -t, -t};
        case QuarterPlaneId::YW: return {-t, s - t, -t};
        case QuarterPlaneId::ZW: return {-t, -t, s - t};
    }
    fail(ErrorKind::Internal, "bad quarter plane id");
}

struct QuarterRestriction {
    TropPoly poly;  // two variables, in the plane's own coordinate order
    QuarterPlaneId plane;
};

inline QuarterRestriction restrict_to_quarter_plane(const TropPoly& g, QuarterPlaneId q) {
    require_nonempty(g);
    if (g.n_vars != 3)
        fail(ErrorKind::WrongDimension, "quarter planes restrict 3-variable polynomials");
    TropPoly h = homogenize(g, degree(g));
    auto zs = zeroed_vars(q);
    TropPoly p = slice_restrict(h, {zs[0], zs[1]});
    if (q == QuarterPlaneId::ZX) {  // the slice keeps (x, z); the plane reads (z, x)
        TropPoly swapped;
        swapped.n_vars = 2;
        for (const auto& [e, c] : p.terms) swapped.terms.emplace(IVec{e[1], e[0]}, c);
        p = std::move(swapped);
    }
    return {std::move(p), q};
}

// ------------------------------------------------------ marked subcomplex ----

struct MarkedComplex {
    Subdivision base;
    std::vector<IVec> vertex_points;              // 0-faces, sorted lex
    std::vector<std::array<IVec, 2>> edge_faces;  // 1-faces by their endpoints
    std::vector<size_t> marked_vertices;          // indices into vertex_points
    std::vector<size_t> marked_edges;             // indices into edge_faces
    std::vector<size_t> marked_triangles;         // indices into base.cells
    long long a0 = 0, b0 = 0;                     // origin-domain exponents
};

namespace detail {

// weak inequalities pinning term e as an argmax of p
inline std::vector<LinIneq2> weak_domain_system(const TropPoly& p, const IVec& e) {
    const Rational& ce = p.terms.at(e);
    std::vector<LinIneq2> sys;
    for (const auto& [u, cu] : p.terms) {
        if (u == e) continue;
        sys.push_back({Rational(e[0] - u[0]), Rational(e[1] - u[1]), ce - cu, false});
    }
    return sys;
}

inline void push_negative_quadrant(std::vector<LinIneq2>& sys) {
    sys.push_back({Rational(-1), Rational(0), Rational(0), false});
    sys.push_back({Rational(0), Rational(-1), Rational(0), false});
}

inline bool edge_meets_negative_quadrant(const ComplexEdge& e) {
    QVec d = e.shape == EdgeShape::Segment
                 ? qsub(*e.b, e.a)
                 : QVec{Rational((*e.dir)[0]), Rational((*e.dir)[1])};
    std::vector<LinIneq2> sys;
    // stay on the supporting line: cross(d, p - a) == 0
    Rational c0 = d[1] * e.a[0] - d[0] * e.a[1];
    sys.push_back({-d[1], d[0], c0, false});
    sys.push_back({d[1], -d[0], -c0, false});
    Rational da = d[0] * e.a[0] + d[1] * e.a[1];
    if (e.shape != EdgeShape::Line)  // forward of the base point
        sys.push_back({d[0], d[1], -da, false});
    if (e.shape == EdgeShape::Segment)  // and not past the far endpoint
        sys.push_back({-d[0], -d[1], da + dot(d, d), false});
    push_negative_quadrant(sys);
    return exact_feasible(sys).has_value();
}

}  // namespace detail

// does the closed domain of term e reach R^2_{<=0}?
inline bool domain_meets_negative_quadrant(const TropPoly& p, const IVec& e) {
    auto sys = detail::weak_domain_system(p, e);
    detail::push_negative_quadrant(sys);
    return exact_feasible(sys).has_value();
}

// Marks every face of the dual subdivision whose dual cell of V(p) meets the
// closed negative quadrant. Exact feasibility decides each mark.
inline MarkedComplex marked_subcomplex(const TropPoly& p) {
    HypersurfaceComplex c = hypersurface_complex(p);
    for (const auto& v : c.vertices)
        if ((v[0] == 0 && v[1] <= 0) || (v[1] == 0 && v[0] <= 0))
            fail(ErrorKind::VertexOnAxis, "curve vertex on a closed negative axis");

    MarkedComplex k;
    // A tied origin argmax means the staircases are ill-posed (they will
    // refuse), but the marks themselves are still well defined; fall back to
    // the lex-largest argmax exponent for (a0, b0).
    auto am = argmax_terms(p, QVec{Rational(0), Rational(0)});
    k.a0 = (*am.rbegin())[0];
    k.b0 = (*am.rbegin())[1];

    for (const auto& [e, dom] : c.domains) k.vertex_points.push_back(e);
    for (size_t i = 0; i < k.vertex_points.size(); ++i)
        if (domain_meets_negative_quadrant(p, k.vertex_points[i]))
            k.marked_vertices.push_back(i);

    for (size_t i = 0; i < c.edges.size(); ++i) {
        k.edge_faces.push_back(
            {c.edges[i].dual_members.front(), c.edges[i].dual_members.back()});
        if (detail::edge_meets_negative_quadrant(c.edges[i])) k.marked_edges.push_back(i);
    }

    for (size_t ci = 0; ci < c.subdivision.cells.size(); ++ci) {
        if (c.subdivision.cells[ci].dim != 2) continue;
        const QVec& v = c.vertices[ci];
        if (v[0] <= 0 && v[1] <= 0) k.marked_triangles.push_back(ci);
    }

    k.base = std::move(c.subdivision);
    return k;
}

// --------------------------------------------------------------- staircases ----

struct Staircase {
    std::vector<long long> u;  // u[i], i = 0..a0
    std::vector<long long> r;  // r[j], j = 0..b0
};

namespace detail {

// levels of p whose domain reaches the given closed negative half-axis
inline std::vector<long long> axis_hits(const TropPoly& p, long long level, int coord) {
    std::vector<long long> hits;
    int other = 1 - coord;
    for (const auto& [e, ce] : p.terms) {
        if (e[coord] != level) continue;
        auto sys = weak_domain_system(p, e);
        // on the negative half of the coord-axis: other == 0 and coord <= 0
        LinIneq2 eq{Rational(0), Rational(0), Rational(0), false};
        (other == 0 ? eq.a : eq.b) = Rational(1);
        sys.push_back(eq);
        (other == 0 ? eq.a : eq.b) = Rational(-1);
        sys.push_back(eq);
        LinIneq2 neg{Rational(0), Rational(0), Rational(0), false};
        (coord == 0 ? neg.a : neg.b) = Rational(-1);
        sys.push_back(neg);
        if (exact_feasible(sys)) hits.push_back(e[other]);
    }
    return hits;
}

}  // namespace detail

inline Staircase staircase_functions(const MarkedComplex& k, const TropPoly& p) {
    require_nonempty(p);
    if (p.n_vars != 2) fail(ErrorKind::WrongDimension, "staircases live in the plane");
    if (argmax_terms(p, QVec{Rational(0), Rational(0)}).size() != 1)
        fail(ErrorKind::AmbiguousOrigin, "origin-domain monomial is not unique");
    Staircase s;
    for (long long i = 0; i <= k.a0; ++i) {
        auto hits = detail::axis_hits(p, i, 0);
        if (hits.size() != 1)
            fail(ErrorKind::AmbiguousStaircase,
                 std::string(hits.empty() ? "no" : "several") +
                     " domains meet the negative x-axis at level " + std::to_string(i));
        s.u.push_back(hits.front());
    }
    for (long long j = 0; j <= k.b0; ++j) {
        auto hits = detail::axis_hits(p, j, 1);
        if (hits.size() != 1)
            fail(ErrorKind::AmbiguousStaircase,
                 std::string(hits.empty() ? "no" : "several") +
                     " domains meet the negative y-axis at level " + std::to_string(j));
        s.r.push_back(hits.front());
    }
    return s;
}

// |K'| = Delta_m minus the region above u, the region right of r, and the
// quadrant past (a0, b0) -- compared pointwise on the lattice.
inline bool verify_kprime_shape(const MarkedComplex& k, const Staircase& s) {
    if ((long long)s.u.size() != k.a0 + 1 || (long long)s.r.size() != k.b0 + 1)
        fail(ErrorKind::Internal, "staircase does not match the marked complex");
    long long m = 0;
    for (const auto& c : k.base.cells)
        for (const auto& e : c.members) m = std::max(m, e[0] + e[1]);
    std::set<IVec> marked;
    for (size_t i : k.marked_vertices) marked.insert(k.vertex_points[i]);
    std::set<IVec> predicted;
    for (long long x = 0; x <= m; ++x)
        for (long long y = 0; x + y <= m; ++y) {
            bool above_u = x <= k.a0 && y > s.u[x];
            bool right_of_r = y <= k.b0 && x > s.r[y];
            bool far_corner = x > k.a0 && y > k.b0;
            if (!above_u && !right_of_r && !far_corner) predicted.insert(IVec{x, y});
        }
    return marked == predicted;
}

// U and R as open planar regions, with u and r interpolated linearly between
// integer arguments; their intersection must be empty.
inline bool staircase_regions_disjoint(const MarkedComplex& k, const Staircase& s) {
    auto graph_pieces = [](const std::vector<long long>& f, bool vertical_axis) {
        // vertical_axis: pieces of {0 <= x <= a0, y > f(x)}; otherwise the
        // transposed region {0 <= y <= b0, x > f(y)}
        std::vector<std::vector<LinIneq2>> out;
        if (f.size() == 1) {
            std::vector<LinIneq2> sys;
            Rational bound(-f[0]);
            if (vertical_axis) {
                sys.push_back({Rational(1), Rational(0), Rational(0), false});
                sys.push_back({Rational(-1), Rational(0), Rational(0), false});
                sys.push_back({Rational(0), Rational(1), bound, true});
            } else {
                sys.push_back({Rational(0), Rational(1), Rational(0), false});
                sys.push_back({Rational(0), Rational(-1), Rational(0), false});
                sys.push_back({Rational(1), Rational(0), bound, true});
            }
            out.push_back(std::move(sys));
            return out;
        }
        for (size_t i = 0; i + 1 < f.size(); ++i) {
            Rational lo((long long)i), hi((long long)i + 1);
            Rational slope(f[i + 1] - f[i]);
            Rational c = slope * lo - Rational(f[i]);
            std::vector<LinIneq2> sys;
            if (vertical_axis) {
                sys.push_back({Rational(1), Rational(0), -lo, false});
                sys.push_back({Rational(-1), Rational(0), hi, false});
                sys.push_back({-slope, Rational(1), c, true});
            } else {
                sys.push_back({Rational(0), Rational(1), -lo, false});
                sys.push_back({Rational(0), Rational(-1), hi, false});
                sys.push_back({Rational(1), -slope, c, true});
            }
            out.push_back(std::move(sys));
        }
        return out;
    };
    auto upieces = graph_pieces(s.u, true);
    auto rpieces = graph_pieces(s.r, false);
    for (const auto& up : upieces)
        for (const auto& rp : rpieces) {
            std::vector<LinIneq2> sys = up;
            sys.insert(sys.end(), rp.begin(), rp.end());
            if (exact_feasible(sys)) return false;
        }
    return true;
}

// ------------------------------------------------------------ decomposition ----

struct RestrictionDecomposition {
    std::vector<IVec> a_prime;  // unique fiber max, nonempty domain
    std::vector<IVec> b_prime;  // tied fiber max, nonempty domain
    std::vector<PolyhedralCell2> d_cells;  // the B' domains, in b_prime order
};

inline RestrictionDecomposition restriction_decomposition(const TropPoly& g) {
    require_nonempty(g);
    if (g.n_vars != 3)
        fail(ErrorKind::WrongDimension, "the decomposition slices z=0 in R^3");
    TropPoly gz = slice_restrict(g, {2});
    std::map<IVec, int> fiber_hits;
    for (const auto& [e, c] : g.terms)
        if (c == gz.terms.at(IVec{e[0], e[1]})) ++fiber_hits[IVec{e[0], e[1]}];
    RestrictionDecomposition out;
    for (const auto& [e, c] : gz.terms) {
        auto dom = domain_of_monomial(gz, e);
        if (!dom) continue;
        if (fiber_hits.at(e) == 1) {
            out.a_prime.push_back(e);
        } else {
            out.b_prime.push_back(e);
            out.d_cells.push_back(std::move(*dom));
        }
    }
    return out;
}

// ----------------------------------------------------------- cycle criterion ----

// Marked 0-faces interior to the marked support: every incident 2-cell is
// marked and the point is not on the Newton polytope boundary. Each such
// point is the domain of a monomial enclosed by a cycle of V_-(p).
inline std::set<IVec> enclosed_cycle_domains(const MarkedComplex& k) {
    std::vector<IVec> all;
    for (const auto& c : k.base.cells)
        all.insert(all.end(), c.members.begin(), c.members.end());
    std::vector<IVec> hull = detail::ccw_hull(all);
    std::set<IVec> out;
    if (hull.size() <= 2) return out;

    std::set<size_t> marked_cells(k.marked_triangles.begin(), k.marked_triangles.end());
    std::vector<std::vector<IVec>> corners;
    for (const auto& c : k.base.cells) corners.push_back(detail::ccw_hull(c.members));

    for (size_t vi : k.marked_vertices) {
        const IVec& v = k.vertex_points[vi];
        bool boundary = false;
        for (size_t i = 0; i < hull.size() && !boundary; ++i)
            boundary = detail::lattice_between(hull[i], hull[(i + 1) % hull.size()], v);
        if (boundary) continue;
        bool enclosed = true;
        for (size_t ci = 0; ci < corners.size() && enclosed; ++ci)
            if (std::find(corners[ci].begin(), corners[ci].end(), v) != corners[ci].end())
                enclosed = marked_cells.count(ci) > 0;
        if (enclosed) out.insert(v);
    }
    return out;
}

// ------------------------------------------------------------- ray monomials ----

// Homogenized argmax exponents along a coordinate ray, origin outward.
inline std::vector<IVec> monomial_ray_path(const TropPoly& g, AxisRay ray) {
    long long m = degree(g);
    RayHits hits = ray_intersections(g, ray);
    std::vector<IVec> out;
    out.reserve(hits.path.size());
    for (const auto& e : hits.path)
        out.push_back(IVec{e[0], e[1], e[2], m - e[0] - e[1] - e[2]});
    return out;
}

inline bool check_area_half(const MarkedComplex& k) {
    for (size_t ci : k.marked_triangles)
        if (cell_volume(k.base.cells[ci].members, 2) != Rational(1, 2)) return false;
    return true;
}

}  // namespace tropic
