#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "tropic/errors.hpp"
#include "tropic/feasible.hpp"
#include "tropic/lattice.hpp"
#include "tropic/rational.hpp"
#include "tropic/subdivision.hpp"
#include "tropic/trop_poly.hpp"

namespace tropic {

// A convex cell in the plane, bounded or not: conv(vertices) + cone(rays).
struct PolyhedralCell2 {
    std::vector<QVec> vertices;  // nonempty for nonempty cells
    std::vector<IVec> rays;      // primitive directions
    int dim = 0;
};

enum class EdgeShape { Segment, Ray, Line };

// One 1-cell of the curve together with its dual subdivision edge.
struct ComplexEdge {
    EdgeShape shape = EdgeShape::Segment;
    QVec a;                          // endpoint (Segment/Ray) or base point (Line)
    std::optional<QVec> b;           // second endpoint, Segment only
    std::optional<IVec> dir;         // primitive: Ray outward, Line lex-positive
    int v0 = -1, v1 = -1;            // incident vertex indices, -1 if none
    std::vector<IVec> dual_members;  // support points of the dual edge, sorted
};

// m(σ): lattice length of the dual subdivision edge.
inline Int edge_weight(const ComplexEdge& e) {
    return Int(ivec_gcd(isub(e.dual_members.back(), e.dual_members.front())));
}

struct HypersurfaceComplex {
    Subdivision subdivision;
    std::vector<QVec> vertices;  // vertices[i] is where subdivision.cells[i] ties
    std::vector<ComplexEdge> edges;
    std::map<IVec, PolyhedralCell2> domains;
};

namespace detail {

inline Int icross(const IVec& a, const IVec& b) {
    return Int(a[0]) * b[1] - Int(a[1]) * b[0];
}

inline Rational qcross(const QVec& a, const QVec& b) {
    return a[0] * b[1] - a[1] * b[0];
}

inline QVec qsub(const QVec& a, const QVec& b) { return {a[0] - b[0], a[1] - b[1]}; }

// ccw convex hull of distinct 2-d lattice points (monotone chain)
inline std::vector<IVec> ccw_hull(std::vector<IVec> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    auto turn = [](const IVec& o, const IVec& a, const IVec& b) {
        return icross(isub(a, o), isub(b, o));
    };
    std::vector<IVec> h(2 * pts.size());
    size_t k = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && turn(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && turn(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

inline bool lattice_between(const IVec& a, const IVec& b, const IVec& x) {
    if (icross(isub(b, a), isub(x, a)) != 0) return false;
    Int d = Int(b[0] - a[0]) * (x[0] - a[0]) + Int(b[1] - a[1]) * (x[1] - a[1]);
    Int l = Int(b[0] - a[0]) * (b[0] - a[0]) + Int(b[1] - a[1]) * (b[1] - a[1]);
    return d >= 0 && d <= l;
}

inline IVec primitive_from_rational(const QVec& d) {
    Int l = 1;
    for (const auto& c : d) l = boost::multiprecision::lcm(l, Int(denominator(c)));
    std::vector<Int> iv;
    for (const auto& c : d) iv.push_back(Int(numerator(c)) * (l / Int(denominator(c))));
    Int g = 0;
    for (const auto& c : iv) g = boost::multiprecision::gcd(g, abs(c));
    if (g == 0) fail(ErrorKind::ZeroVector, "direction of a zero vector");
    for (auto& c : iv) c /= g;
    return to_ivec(iv);
}

inline IVec lex_positive(IVec v) {
    for (long long c : v) {
        if (c > 0) return v;
        if (c < 0) return IVec{-v[0], -v[1]};
    }
    fail(ErrorKind::ZeroVector, "direction of a zero vector");
}

// n·x >= c
struct HalfPlane {
    IVec n;
    Rational c;
};

// V-form of an intersection of half-planes, assuming it is nonempty.
inline PolyhedralCell2 vform_from_halfplanes(const std::vector<HalfPlane>& hs) {
    PolyhedralCell2 cell;
    if (hs.empty()) {
        cell.vertices = {QVec{Rational(0), Rational(0)}};
        cell.rays = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        cell.dim = 2;
        return cell;
    }
    bool parallel = true;
    for (size_t i = 1; i < hs.size() && parallel; ++i)
        parallel = icross(hs[0].n, hs[i].n) == 0;

    if (parallel) {
        // every constraint bounds xi = nb.x on a line's worth of freedom
        IVec nb = primitive_vector(hs[0].n);
        IVec u{-nb[1], nb[0]};
        Rational nn(idot(nb, nb));
        std::optional<Rational> lo, hi;
        for (const auto& h : hs) {
            int j = nb[0] != 0 ? 0 : 1;
            // division, not Rational(n, d): cpp_rational's two-arg
            // constructor rejects negative denominators
            Rational k = Rational(h.n[j]) / Rational(nb[j]);
            Rational v = h.c / k;
            if (k > 0) {
                if (!lo || v > *lo) lo = v;
            } else {
                if (!hi || v < *hi) hi = v;
            }
        }
        auto base = [&](const Rational& v) {
            return QVec{v * nb[0] / nn, v * nb[1] / nn};
        };
        cell.rays = {u, IVec{-u[0], -u[1]}};
        if (lo && hi) {
            cell.vertices.push_back(base(*lo));
            if (*hi != *lo) cell.vertices.push_back(base(*hi));
            cell.dim = *hi == *lo ? 1 : 2;
        } else if (lo) {
            cell.vertices.push_back(base(*lo));
            cell.rays.push_back(nb);
            cell.dim = 2;
        } else {
            cell.vertices.push_back(base(*hi));
            cell.rays.push_back(IVec{-nb[0], -nb[1]});
            cell.dim = 2;
        }
        return cell;
    }

    // pointed case: vertices from constraint pairs, rays from the recession cone
    std::set<QVec> verts;
    for (size_t i = 0; i < hs.size(); ++i)
        for (size_t j = i + 1; j < hs.size(); ++j) {
            Int det = icross(hs[i].n, hs[j].n);
            if (det == 0) continue;
            Rational d(det);
            QVec x{(hs[i].c * hs[j].n[1] - hs[j].c * hs[i].n[1]) / d,
                   (Rational(hs[i].n[0]) * hs[j].c - Rational(hs[j].n[0]) * hs[i].c) / d};
            bool ok = true;
            for (const auto& h : hs)
                if (Rational(h.n[0]) * x[0] + Rational(h.n[1]) * x[1] < h.c) {
                    ok = false;
                    break;
                }
            if (ok) verts.insert(x);
        }
    if (verts.empty())
        fail(ErrorKind::Internal, "vform_from_halfplanes: pointed cell without vertices");
    cell.vertices.assign(verts.begin(), verts.end());

    std::set<IVec> cands;
    for (const auto& h : hs) {
        IVec t = primitive_vector(IVec{-h.n[1], h.n[0]});
        for (const IVec& d : {t, IVec{-t[0], -t[1]}}) {
            bool ok = true;
            for (const auto& h2 : hs)
                if (idot(h2.n, d) < 0) {
                    ok = false;
                    break;
                }
            if (ok) cands.insert(d);
        }
    }
    if (!cands.empty()) {
        IVec cw = *cands.begin(), ccw = *cands.begin();
        for (const auto& d : cands) {
            if (icross(d, cw) > 0) cw = d;
            if (icross(ccw, d) > 0) ccw = d;
        }
        cell.rays.push_back(cw);
        if (ccw != cw) cell.rays.push_back(ccw);
    }

    // honest dimension from the generators
    std::vector<QVec> probe = cell.vertices;
    for (const auto& r : cell.rays)
        probe.push_back(QVec{cell.vertices[0][0] + r[0], cell.vertices[0][1] + r[1]});
    cell.dim = 0;
    for (size_t i = 1; i < probe.size() && cell.dim < 2; ++i) {
        QVec d0 = qsub(probe[i], probe[0]);
        if (d0[0] == 0 && d0[1] == 0) continue;
        if (cell.dim == 0) {
            cell.dim = 1;
            continue;
        }
        for (size_t j = 1; j < i; ++j)
            if (qcross(qsub(probe[j], probe[0]), d0) != 0) {
                cell.dim = 2;
                break;
            }
    }
    return cell;
}

}  // namespace detail

// Closure of the region where term e strictly dominates; nullopt when that
// open region is empty.
inline std::optional<PolyhedralCell2> domain_of_monomial(const TropPoly& p,
                                                         const IVec& e) {
    if (p.n_vars != 2) fail(ErrorKind::WrongDimension, "domains live in the plane");
    auto it = p.terms.find(e);
    if (it == p.terms.end())
        fail(ErrorKind::UnknownExponent, "domain of a monomial absent from p");
    std::vector<LinIneq2> strict;
    std::vector<detail::HalfPlane> weak;
    for (const auto& [e2, c2] : p.terms) {
        if (e2 == e) continue;
        IVec n = isub(e, e2);
        Rational rhs = c2 - it->second;
        strict.push_back(
            {Rational(n[0]), Rational(n[1]), it->second - c2, true});
        weak.push_back({n, rhs});
    }
    if (!exact_feasible(strict)) return std::nullopt;
    return detail::vform_from_halfplanes(weak);
}

inline HypersurfaceComplex hypersurface_complex(const TropPoly& p) {
    if (p.n_vars != 2)
        fail(ErrorKind::WrongDimension, "hypersurface complex expects two variables");
    require_nonempty(p);

    HypersurfaceComplex c;
    c.subdivision = regular_subdivision(p);
    const auto& cells = c.subdivision.cells;
    const int rank = cells.front().dim;

    std::set<IVec> corner_exponents;

    if (rank == 0) {
        corner_exponents.insert(cells.front().members.front());
    } else if (rank == 1) {
        for (const auto& cell : cells) {
            const IVec& e1 = cell.members.front();
            const IVec& e2 = cell.members.back();
            corner_exponents.insert(e1);
            corner_exponents.insert(e2);
            IVec n = isub(e1, e2);
            Rational rhs = p.terms.at(e2) - p.terms.at(e1);
            Rational nn(idot(n, n));
            ComplexEdge edge;
            edge.shape = EdgeShape::Line;
            edge.a = QVec{rhs * n[0] / nn, rhs * n[1] / nn};
            edge.dir = detail::lex_positive(primitive_vector(IVec{-n[1], n[0]}));
            edge.dual_members = cell.members;
            c.edges.push_back(std::move(edge));
        }
    } else {
        for (const auto& cell : cells)
            c.vertices.push_back(QVec{-cell.normal[0], -cell.normal[1]});

        std::vector<std::vector<IVec>> hulls;
        for (const auto& cell : cells) hulls.push_back(detail::ccw_hull(cell.members));

        std::map<std::vector<IVec>, std::vector<std::pair<int, int>>> faces;
        for (int ci = 0; ci < (int)cells.size(); ++ci) {
            const auto& hull = hulls[ci];
            for (int k = 0; k < (int)hull.size(); ++k) {
                const IVec& a = hull[k];
                const IVec& b = hull[(k + 1) % hull.size()];
                corner_exponents.insert(a);
                std::vector<IVec> face;
                for (const auto& m : cells[ci].members)
                    if (detail::lattice_between(a, b, m)) face.push_back(m);
                faces[face].push_back({ci, k});
            }
        }
        for (const auto& [face, incident] : faces) {
            ComplexEdge edge;
            edge.dual_members = face;
            if (incident.size() == 2) {
                int i = incident[0].first, j = incident[1].first;
                if (i > j) std::swap(i, j);
                edge.shape = EdgeShape::Segment;
                edge.v0 = i;
                edge.v1 = j;
                edge.a = c.vertices[i];
                edge.b = c.vertices[j];
            } else if (incident.size() == 1) {
                int ci = incident[0].first, k = incident[0].second;
                const auto& hull = hulls[ci];
                const IVec& a = hull[k];
                const IVec& b = hull[(k + 1) % hull.size()];
                QVec centroid(2, Rational(0));
                for (const auto& h : hull) {
                    centroid[0] += h[0];
                    centroid[1] += h[1];
                }
                for (auto& v : centroid) v /= Rational((long long)hull.size());
                IVec rot{-(b[1] - a[1]), b[0] - a[0]};
                Rational side = rot[0] * (centroid[0] - a[0]) + rot[1] * (centroid[1] - a[1]);
                if (side > 0) rot = IVec{-rot[0], -rot[1]};
                edge.shape = EdgeShape::Ray;
                edge.v0 = ci;
                edge.a = c.vertices[ci];
                edge.dir = primitive_vector(rot);
            } else {
                fail(ErrorKind::Internal, "subdivision edge with bad incidence");
            }
            c.edges.push_back(std::move(edge));
        }
        std::sort(c.edges.begin(), c.edges.end(),
                  [](const ComplexEdge& x, const ComplexEdge& y) {
                      return x.dual_members < y.dual_members;
                  });
    }

    for (const auto& e : corner_exponents) {
        auto dom = domain_of_monomial(p, e);
        if (!dom)
            fail(ErrorKind::Internal, "subdivision vertex without a dual domain");
        c.domains.emplace(e, std::move(*dom));
    }
    return c;
}

inline bool check_balancing(const HypersurfaceComplex& c) {
    for (int vi = 0; vi < (int)c.vertices.size(); ++vi) {
        QVec sum(2, Rational(0));
        for (const auto& e : c.edges) {
            IVec dir;
            if (e.shape == EdgeShape::Segment && (e.v0 == vi || e.v1 == vi)) {
                const QVec& other = e.v0 == vi ? *e.b : e.a;
                const QVec& mine = c.vertices[vi];
                dir = detail::primitive_from_rational(detail::qsub(other, mine));
            } else if (e.shape == EdgeShape::Ray && e.v0 == vi) {
                dir = *e.dir;
            } else {
                continue;
            }
            Rational w(edge_weight(e));
            sum[0] += w * dir[0];
            sum[1] += w * dir[1];
        }
        if (sum[0] != 0 || sum[1] != 0) return false;
    }
    return true;
}

inline bool point_on_complex(const HypersurfaceComplex& c, const QVec& x) {
    for (const auto& v : c.vertices)
        if (v == x) return true;
    for (const auto& e : c.edges) {
        QVec d = detail::qsub(x, e.a);
        switch (e.shape) {
            case EdgeShape::Segment: {
                QVec s = detail::qsub(*e.b, e.a);
                if (detail::qcross(s, d) != 0) break;
                Rational t = dot(s, d), len = dot(s, s);
                if (t >= 0 && t <= len) return true;
                break;
            }
            case EdgeShape::Ray: {
                QVec s{Rational((*e.dir)[0]), Rational((*e.dir)[1])};
                if (detail::qcross(s, d) == 0 && dot(s, d) >= 0) return true;
                break;
            }
            case EdgeShape::Line: {
                QVec s{Rational((*e.dir)[0]), Rational((*e.dir)[1])};
                if (detail::qcross(s, d) == 0) return true;
                break;
            }
        }
    }
    return false;
}

// ------------------------------------------------------------- axis rays ----

enum class AxisRay { X, Y, Z, W };

struct RayHits {
    std::vector<QVec> points;  // crossings, ordered by distance from the origin
    std::vector<IVec> path;    // maximal term per sub-interval, origin outward
};

// Breakpoints of s -> g(ray(s)) on the open ray, with the exponent path.
inline RayHits ray_intersections(const TropPoly& g, AxisRay ray) {
    if (g.n_vars != 3) fail(ErrorKind::WrongDimension, "axis rays live in R^3");
    require_nonempty(g);

    // restrict to the ray parameter: value = coef + slope * t
    struct Line {
        long long slope;
        Rational intercept;
        std::vector<IVec> terms;
    };
    std::map<long long, Line> by_slope;
    for (const auto& [e, coef] : g.terms) {
        long long s = 0;
        switch (ray) {
            case AxisRay::X: s = e[0]; break;
            case AxisRay::Y: s = e[1]; break;
            case AxisRay::Z: s = e[2]; break;
            case AxisRay::W: s = e[0] + e[1] + e[2]; break;
        }
        auto it = by_slope.find(s);
        if (it == by_slope.end())
            by_slope.emplace(s, Line{s, coef, {e}});
        else if (coef > it->second.intercept)
            it->second = Line{s, coef, {e}};
        else if (coef == it->second.intercept)
            it->second.terms.push_back(e);
    }
    std::vector<Line> lines;
    for (auto& [s, l] : by_slope) lines.push_back(std::move(l));

    // upper envelope: pieces with ascending slope as t grows
    std::vector<int> st;
    std::vector<std::optional<Rational>> start;  // nullopt = -infinity
    auto tie_at = [&](int j, int i) {
        return (lines[j].intercept - lines[i].intercept) /
               Rational(lines[i].slope - lines[j].slope);
    };
    for (int i = 0; i < (int)lines.size(); ++i) {
        std::optional<Rational> from;
        while (!st.empty()) {
            Rational t0 = tie_at(st.back(), i);
            if (start.back() && t0 <= *start.back()) {
                st.pop_back();
                start.pop_back();
                continue;
            }
            from = t0;
            break;
        }
        st.push_back(i);
        start.push_back(from);
    }

    // clip to the open ray: t < 0 on X, Y, Z; t > 0 on W
    const bool positive = ray == AxisRay::W;
    auto visible = [&](size_t k) {
        std::optional<Rational> lo = start[k];
        std::optional<Rational> hi =
            k + 1 < st.size() ? start[k + 1] : std::optional<Rational>();
        if (positive) return !hi || *hi > 0;  // window (0, inf)
        return !lo || *lo < 0;                // window (-inf, 0)
    };

    std::vector<int> vis;
    std::vector<Rational> breaks;  // interior breakpoints, ascending t
    for (size_t k = 0; k < st.size(); ++k) {
        if (!visible(k)) continue;
        vis.push_back(st[k]);
        if (lines[st[k]].terms.size() > 1)
            fail(ErrorKind::SegmentOnRay, "tied terms share a piece of the ray");
        if (k + 1 < st.size() && visible(k + 1)) {
            const Rational& t = *start[k + 1];
            if (positive ? t > 0 : t < 0) breaks.push_back(t);
        }
    }

    auto embed = [&](const Rational& t) {
        switch (ray) {
            case AxisRay::X: return QVec{t, Rational(0), Rational(0)};
            case AxisRay::Y: return QVec{Rational(0), t, Rational(0)};
            case AxisRay::Z: return QVec{Rational(0), Rational(0), t};
            default: return QVec{t, t, t};
        }
    };

    RayHits out;
    if (positive) {
        for (const auto& t : breaks) out.points.push_back(embed(t));
        for (int l : vis) out.path.push_back(lines[l].terms.front());
    } else {
        for (auto it = breaks.rbegin(); it != breaks.rend(); ++it)
            out.points.push_back(embed(*it));
        for (auto it = vis.rbegin(); it != vis.rend(); ++it)
            out.path.push_back(lines[*it].terms.front());
    }
    return out;
}

}  // namespace tropic
