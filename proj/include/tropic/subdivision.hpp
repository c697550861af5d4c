#pragma once

// Regular subdivisions induced by lifts, normalized volumes, Cayley
// subdivisions and smoothness certification of complete intersections.

#include <algorithm>
#include <optional>
#include <vector>

#include "tropic/hull_engine.hpp"
#include "tropic/lattice.hpp"
#include "tropic/trop_poly.hpp"

namespace tropic {

enum class HullStrategy { Auto, Enumerate, Incremental };

struct SubdivCell {
    std::vector<IVec> members;  // lattice points on the supporting plane, sorted lex
    QVec normal;                // l(x) = normal.x + offset equals the lift on members
    Rational offset;            // and strictly exceeds it elsewhere
    int dim = 0;                // affine dimension of the members
};

struct Subdivision {
    int ambient_dim = 0;
    std::vector<SubdivCell> cells;  // top-dimensional cells, sorted by member lists
};

inline Subdivision regular_subdivision_points(std::vector<IVec> pts, QVec lifts,
                                              HullStrategy strategy = HullStrategy::Auto) {
    if (pts.empty() || pts.size() != lifts.size())
        fail(ErrorKind::Internal, "regular_subdivision_points: bad input sizes");
    const int n = (int)pts[0].size();

    // canonical input order
    std::vector<size_t> order(pts.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return pts[a] < pts[b]; });
    std::vector<IVec> sp(pts.size());
    QVec sl(lifts.size());
    for (size_t i = 0; i < order.size(); ++i) {
        sp[i] = pts[order[i]];
        sl[i] = lifts[order[i]];
        if (i > 0 && sp[i] == sp[i - 1])
            fail(ErrorKind::Internal, "regular_subdivision_points: duplicate point");
    }
    pts = std::move(sp);
    lifts = std::move(sl);

    Subdivision out;
    out.ambient_dim = n;

    detail::AffineMap map = detail::affine_map(pts);
    if (map.rank == 0) {
        SubdivCell c;
        c.members = {pts[0]};
        c.normal.assign(n, Rational(0));
        c.offset = lifts[0];
        c.dim = 0;
        out.cells.push_back(std::move(c));
        return out;
    }

    // scale lifts to integers
    Int den(1);
    for (const auto& h : lifts)
        den = boost::multiprecision::lcm(den, Int(denominator(h)));
    std::vector<Int> ih(lifts.size());
    for (size_t i = 0; i < lifts.size(); ++i)
        ih[i] = Int(numerator(lifts[i])) * (den / Int(denominator(lifts[i])));

    const bool full_dim = map.rank == n;
    std::vector<IVec> work;
    if (full_dim) {
        work = pts;
    } else {
        work.reserve(pts.size());
        for (const auto& p : pts) work.push_back(detail::to_ivec(map.project(p)));
    }

    auto impl_strategy = strategy == HullStrategy::Auto ? detail::HullStrategyImpl::Auto
                         : strategy == HullStrategy::Enumerate
                             ? detail::HullStrategyImpl::Enumerate
                             : detail::HullStrategyImpl::Incremental;
    std::vector<detail::RawCell> raw = detail::upper_cells(work, ih, impl_strategy);

    const Rational scale(den);
    for (const auto& rc : raw) {
        SubdivCell c;
        const int d = map.rank;
        Rational nd(rc.normal[d]);  // positive by construction
        QVec vproj(d);
        for (int k = 0; k < d; ++k) vproj[k] = Rational(-rc.normal[k]) / nd / scale;
        Rational cproj = Rational(rc.offset) / nd / scale;
        if (full_dim) {
            c.normal = vproj;
            c.offset = cproj;
        } else {
            c.normal.assign(n, Rational(0));
            for (int k = 0; k < d; ++k)
                for (int j = 0; j < n; ++j) c.normal[j] += vproj[k] * Rational(map.a[k][j]);
            c.offset = cproj - dot(c.normal, map.origin);
        }
        for (int idx : rc.members) c.members.push_back(pts[idx]);
        std::sort(c.members.begin(), c.members.end());
        c.dim = detail::affine_map(c.members).rank;
        out.cells.push_back(std::move(c));
    }
    std::sort(out.cells.begin(), out.cells.end(),
              [](const SubdivCell& a, const SubdivCell& b) { return a.members < b.members; });

    // defining property, re-checked in ambient coordinates
    for (const auto& c : out.cells) {
        for (size_t i = 0; i < pts.size(); ++i) {
            Rational v = dot(c.normal, pts[i]) + c.offset;
            bool member = std::binary_search(c.members.begin(), c.members.end(), pts[i]);
            if (member ? v != lifts[i] : !(v > lifts[i]))
                fail(ErrorKind::Internal, "cell functional does not support its members");
        }
    }
    return out;
}

inline Subdivision regular_subdivision(const TropPoly& p,
                                       HullStrategy strategy = HullStrategy::Auto) {
    require_nonempty(p);
    std::vector<IVec> pts;
    QVec lifts;
    for (const auto& [e, c] : p.terms) {
        pts.push_back(e);
        lifts.push_back(c);
    }
    return regular_subdivision_points(std::move(pts), std::move(lifts), strategy);
}

inline Rational cell_volume(const std::vector<IVec>& members, int d) {
    if (members.empty()) fail(ErrorKind::DegenerateCell, "no members");
    if (d < 1 || (int)members[0].size() != d)
        fail(ErrorKind::WrongDimension, "volume needs ambient dimension d");
    std::vector<IVec> pts = members;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (detail::affine_map(pts).rank < d)
        fail(ErrorKind::DegenerateCell, "members do not span dimension d");
    Int dsum = 0;
    for (const auto& simplex : detail::triangulate(pts)) {
        std::vector<std::vector<Int>> m(d, std::vector<Int>(d));
        for (int k = 1; k <= d; ++k)
            for (int c = 0; c < d; ++c)
                m[k - 1][c] = Int(pts[simplex[k]][c] - pts[simplex[0]][c]);
        Int det = detail::bareiss_det(m);
        dsum += det < 0 ? Int(-det) : det;
    }
    Int fact = 1;
    for (int i = 2; i <= d; ++i) fact *= i;
    return Rational(dsum, fact);
}

inline bool is_unimodular_triangulation(const Subdivision& s) {
    if (s.ambient_dim != 2) fail(ErrorKind::WrongDimension, "expected a plane subdivision");
    for (const auto& c : s.cells) {
        if (c.members.size() != 3 || c.dim != 2) return false;
        if (cell_volume(c.members, 2) != Rational(1, 2)) return false;
    }
    return true;
}

inline std::vector<IVec> cayley_polytope(const LatticePolytope& p, const LatticePolytope& q) {
    if (p.lattice_points.empty() || q.lattice_points.empty())
        fail(ErrorKind::EmptyPolynomial, "empty polytope");
    if (p.lattice_points[0].size() != 3 || q.lattice_points[0].size() != 3)
        fail(ErrorKind::WrongDimension, "Cayley construction expects dim 3");
    std::vector<IVec> out;
    for (IVec v : p.lattice_points) {
        v.push_back(0);
        out.push_back(std::move(v));
    }
    for (IVec v : q.lattice_points) {
        v.push_back(1);
        out.push_back(std::move(v));
    }
    return out;
}

inline Subdivision cayley_subdivision(const TropPoly& p, const TropPoly& q,
                                      HullStrategy strategy = HullStrategy::Auto) {
    require_nonempty(p);
    require_nonempty(q);
    if (p.n_vars != 3 || q.n_vars != 3)
        fail(ErrorKind::WrongDimension, "Cayley subdivision expects 3 variables");
    std::vector<IVec> pts;
    QVec lifts;
    for (const auto& [e, c] : p.terms) {
        IVec v = e;
        v.push_back(0);
        pts.push_back(std::move(v));
        lifts.push_back(c);
    }
    for (const auto& [e, c] : q.terms) {
        IVec v = e;
        v.push_back(1);
        pts.push_back(std::move(v));
        lifts.push_back(c);
    }
    return regular_subdivision_points(std::move(pts), std::move(lifts), strategy);
}

inline bool is_mixed_cell(const SubdivCell& c) {
    int h0 = 0, h1 = 0;
    for (const auto& m : c.members) {
        if (m.back() == 0) ++h0;
        if (m.back() == 1) ++h1;
    }
    // with distinct lattice points, >= 2 members at a height span >= 1 dim
    return h0 >= 2 && h1 >= 2;
}

enum class Verdict { Smooth, WeaklySmoothOnly, NotWeaklySmooth };

struct SmoothnessCertificate {
    Verdict verdict = Verdict::Smooth;
    std::optional<SubdivCell> witness;  // a 4-cell of volume != 1/24
};

inline SmoothnessCertificate certify_smooth_ci(const TropPoly& f, const TropPoly& g,
                                               HullStrategy strategy = HullStrategy::Auto) {
    require_nonempty(f);
    require_nonempty(g);
    if (f.n_vars != 3 || g.n_vars != 3)
        fail(ErrorKind::WrongDimension, "certification expects 3 variables");

    // Short-circuit: for the standard plane (equal coefficients on support
    // {1,x,y,z}), a tie among g's maximal coefficients forces the Cayley cell
    // dual to the tie point to contain all four plane terms plus every tied
    // term of g: at least 6 members, so its volume cannot be the minimum.
    const std::set<IVec> plane_support = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    std::set<IVec> fsupp;
    for (const auto& [e, c] : f.terms) fsupp.insert(e);
    bool flat_plane = fsupp == plane_support;
    if (flat_plane) {
        const Rational& v = f.terms.begin()->second;
        for (const auto& [e, c] : f.terms) flat_plane &= c == v;
    }
    if (flat_plane) {
        Rational bmax = g.terms.begin()->second;
        for (const auto& [e, c] : g.terms) bmax = std::max(bmax, c);
        std::vector<IVec> tied;
        for (const auto& [e, c] : g.terms)
            if (c == bmax) tied.push_back(e);
        if (tied.size() >= 2) {
            const Rational& v = f.terms.begin()->second;
            SubdivCell w;
            for (const auto& [e, c] : f.terms) {
                IVec m = e;
                m.push_back(0);
                w.members.push_back(std::move(m));
            }
            for (const auto& e : tied) {
                IVec m = e;
                m.push_back(1);
                w.members.push_back(std::move(m));
            }
            std::sort(w.members.begin(), w.members.end());
            w.normal = {0, 0, 0, bmax - v};
            w.offset = v;
            w.dim = 4;
            return {Verdict::NotWeaklySmooth, std::move(w)};
        }
    }

    Subdivision s = cayley_subdivision(f, g, strategy);
    std::optional<SubdivCell> mixed_bad, plain_bad;
    for (const auto& c : s.cells) {
        if (c.dim != 4) continue;
        if (cell_volume(c.members, 4) == Rational(1, 24)) continue;
        if (is_mixed_cell(c)) {
            if (!mixed_bad) mixed_bad = c;
        } else if (!plain_bad) {
            plain_bad = c;
        }
    }
    if (mixed_bad) return {Verdict::NotWeaklySmooth, std::move(mixed_bad)};
    if (plain_bad) return {Verdict::WeaklySmoothOnly, std::move(plain_bad)};
    return {Verdict::Smooth, std::nullopt};
}

}  // namespace tropic
