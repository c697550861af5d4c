#pragma once

// Lattice polytopes: affine rank/projection of integer point sets, exact
// hull membership via a placing triangulation, hull vertices, and lattice
// point enumeration.

#include <algorithm>
#include <vector>

#include "tropic/errors.hpp"
#include "tropic/hull_engine.hpp"
#include "tropic/rational.hpp"

namespace tropic {

struct LatticePolytope {
    std::vector<IVec> vertices;        // extreme points, sorted lex
    std::vector<IVec> lattice_points;  // all lattice points of the hull, sorted lex
};

namespace detail {

// T(p) = A (p - origin) maps the affine span of the input points injectively
// onto Z^rank (up to a fixed integer scale factor).
struct AffineMap {
    int rank = 0;
    IVec origin;
    std::vector<std::vector<Int>> a;        // rank x n
    std::vector<std::vector<Int>> echelon;  // reduced difference rows (span test)
    std::vector<int> pivot_col;

    bool in_span(const IVec& p) const {
        std::vector<Int> x(p.size());
        for (size_t j = 0; j < p.size(); ++j) x[j] = Int(p[j] - origin[j]);
        for (size_t r = 0; r < echelon.size(); ++r) {
            const Int& xv = x[pivot_col[r]];
            if (xv == 0) continue;
            const Int& pv = echelon[r][pivot_col[r]];
            std::vector<Int> nx(x.size());
            for (size_t j = 0; j < x.size(); ++j) nx[j] = pv * x[j] - xv * echelon[r][j];
            x = std::move(nx);
        }
        for (const auto& v : x)
            if (v != 0) return false;
        return true;
    }

    std::vector<Int> project(const IVec& p) const {
        std::vector<Int> t(rank, Int(0));
        for (int r = 0; r < rank; ++r)
            for (size_t j = 0; j < p.size(); ++j) t[r] += a[r][j] * (p[j] - origin[j]);
        return t;
    }
};

inline AffineMap affine_map(const std::vector<IVec>& pts) {
    AffineMap m;
    if (pts.empty()) fail(ErrorKind::Internal, "affine_map: no points");
    const size_t n = pts[0].size();
    m.origin = pts[0];
    std::vector<std::vector<Int>> basis;  // chosen independent difference rows
    for (size_t i = 1; i < pts.size(); ++i) {
        IVec p = pts[i];
        if (m.in_span(p)) continue;
        std::vector<Int> diff(n), red(n);
        for (size_t j = 0; j < n; ++j) diff[j] = Int(p[j] - m.origin[j]);
        // reduce against current echelon rows to find the new pivot column
        red = diff;
        for (size_t r = 0; r < m.echelon.size(); ++r) {
            const Int xv = red[m.pivot_col[r]];
            if (xv == 0) continue;
            const Int& pv = m.echelon[r][m.pivot_col[r]];
            for (size_t j = 0; j < n; ++j) red[j] = pv * red[j] - xv * m.echelon[r][j];
        }
        int pc = -1;
        for (size_t j = 0; j < n; ++j)
            if (red[j] != 0) { pc = (int)j; break; }
        if (pc < 0) fail(ErrorKind::Internal, "affine_map: span test disagrees");
        basis.push_back(std::move(diff));
        m.echelon.push_back(std::move(red));
        m.pivot_col.push_back(pc);
    }
    m.rank = (int)basis.size();
    if (m.rank == 0) return m;
    // A = adj(B_R) Sel_R where B_R is the pivot-column square of the basis
    const int r = m.rank;
    std::vector<std::vector<Int>> br(r, std::vector<Int>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) br[i][j] = basis[i][m.pivot_col[j]];
    // adjugate via cofactors (r <= 4 in this library)
    std::vector<std::vector<Int>> adj(r, std::vector<Int>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            std::vector<std::vector<Int>> minor;
            for (int a = 0; a < r; ++a) {
                if (a == j) continue;
                std::vector<Int> row;
                for (int b = 0; b < r; ++b)
                    if (b != i) row.push_back(br[a][b]);
                minor.push_back(std::move(row));
            }
            Int d = bareiss_det(minor);
            adj[i][j] = ((i + j) % 2 == 0) ? d : Int(-d);
        }
    m.a.assign(r, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) m.a[i][m.pivot_col[j]] = adj[i][j];
    return m;
}

inline IVec to_ivec(const std::vector<Int>& v) {
    IVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] > std::numeric_limits<long long>::max() / 4 ||
            v[i] < std::numeric_limits<long long>::min() / 4)
            fail(ErrorKind::Internal, "projected coordinate overflow");
        out[i] = (long long)v[i];
    }
    return out;
}

// Exact membership q in conv(pts), via one placing triangulation of the
// projected configuration.
class HullMembership {
  public:
    explicit HullMembership(const std::vector<IVec>& pts) : map_(affine_map(pts)) {
        if (map_.rank == 0) return;
        proj_.reserve(pts.size());
        for (const auto& p : pts) proj_.push_back(to_ivec(map_.project(p)));
        simplices_ = triangulate(proj_);
    }

    bool contains(const IVec& q) const {
        if (!map_.in_span(q)) return false;
        if (map_.rank == 0) return true;  // single point, q equals it
        IVec t = to_ivec(map_.project(q));
        const int r = map_.rank;
        for (const auto& s : simplices_) {
            auto det_with = [&](int replace, const IVec& pt) {
                std::vector<std::vector<Int>> mm(r, std::vector<Int>(r));
                for (int k = 1; k <= r; ++k) {
                    const IVec& src = (k == replace) ? pt : proj_[s[k]];
                    const IVec& base = (0 == replace) ? pt : proj_[s[0]];
                    for (int c = 0; c < r; ++c) mm[k - 1][c] = Int(src[c]) - Int(base[c]);
                }
                return bareiss_det(mm);
            };
            Int whole = det_with(-1, t);
            int ws = whole > 0 ? 1 : (whole < 0 ? -1 : 0);
            if (ws == 0) fail(ErrorKind::Internal, "degenerate simplex in triangulation");
            bool inside = true;
            for (int k = 0; k <= r && inside; ++k) {
                Int dk = det_with(k, t);
                inside = (dk == 0) || ((dk > 0 ? 1 : -1) == ws);
            }
            if (inside) return true;
        }
        return false;
    }

  private:
    AffineMap map_;
    std::vector<IVec> proj_;
    std::vector<std::vector<int>> simplices_;
};

}  // namespace detail

inline std::vector<IVec> hull_vertices(std::vector<IVec> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<IVec> verts;
    for (size_t i = 0; i < pts.size(); ++i) {
        std::vector<IVec> others;
        for (size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (!detail::HullMembership(others).contains(pts[i])) verts.push_back(pts[i]);
    }
    return verts;  // already lex-sorted
}

inline std::vector<IVec> hull_lattice_points(const std::vector<IVec>& pts) {
    if (pts.empty()) fail(ErrorKind::Internal, "hull_lattice_points: no points");
    const size_t n = pts[0].size();
    IVec lo = pts[0], hi = pts[0];
    for (const auto& p : pts)
        for (size_t j = 0; j < n; ++j) {
            lo[j] = std::min(lo[j], p[j]);
            hi[j] = std::max(hi[j], p[j]);
        }
    detail::HullMembership hull(pts);
    std::vector<IVec> out;
    IVec cur(n);
    auto rec = [&](auto&& self, size_t j) -> void {
        if (j == n) {
            if (hull.contains(cur)) out.push_back(cur);
            return;
        }
        for (long long v = lo[j]; v <= hi[j]; ++v) {
            cur[j] = v;
            self(self, j + 1);
        }
    };
    rec(rec, 0);
    return out;  // lex order by construction
}

inline LatticePolytope make_lattice_polytope(const std::vector<IVec>& pts) {
    LatticePolytope lp;
    lp.vertices = hull_vertices(pts);
    lp.lattice_points = hull_lattice_points(pts);
    return lp;
}

}  // namespace tropic
