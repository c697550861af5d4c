#pragma once

// Exact upper hulls of lifted integer point configurations.
//
// Two interchangeable strategies produce the same canonical cell list:
//  - Enumerate: test every (d+1)-subset for the supporting-plane property.
//  - Incremental: beneath-beyond insertion inside a huge artificial simplex
//    whose corners sit at lift -M for a symbolic M (so they never interact
//    with the true upper faces), with ties broken by a second symbolic
//    perturbation that lowers later-inserted points infinitesimally.
//
// All arithmetic is integral. A dispatcher picks int64 or arbitrary
// precision from an a-priori determinant bound.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "tropic/errors.hpp"
#include "tropic/rational.hpp"

namespace tropic::detail {

enum class HullStrategyImpl { Auto, Enumerate, Incremental };

// determinant by fraction-free (Bareiss) elimination; exact for integer T
template <class T>
T bareiss_det(std::vector<std::vector<T>> m) {
    const int n = (int)m.size();
    if (n == 0) return T(1);
    T prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) { piv = r; break; }
            if (piv < 0) return T(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c) {
                m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]) / prev;
            }
            m[r][k] = T(0);
        }
        prev = m[k][k];
    }
    T d = m[n - 1][n - 1];
    return sign > 0 ? d : T(-d);
}

template <class T>
int sgn(const T& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// One lifted configuration in engine coordinates. Index layout: points
// 0..d are the artificial simplex corners (lift "-M"), the rest are the
// real points in canonical order. Ranks equal indices: the perturbation
// lowers point i by eps_i with eps_0 >> eps_1 >> ... > 0.
template <class T>
struct LiftedConfig {
    int d = 0;
    std::vector<std::vector<T>> q;  // projected coordinates, size n_aug
    std::vector<T> hfin;            // finite lift part
    std::vector<int> hu;            // lift = hfin - hu * M (hu in {0,1})
};

// cross-product normal of the d-flat through lifted points T0..Td:
// N has d+1 components, N . (x, h) is constant on the flat. Components are
// signed minors of the d x (d+1) matrix of lifted differences.
template <class T>
std::vector<T> lifted_normal(const LiftedConfig<T>& cfg, const std::vector<int>& vs) {
    const int d = cfg.d;
    std::vector<std::vector<T>> rows(d, std::vector<T>(d + 1));
    for (int k = 1; k <= d; ++k) {
        for (int c = 0; c < d; ++c) rows[k - 1][c] = cfg.q[vs[k]][c] - cfg.q[vs[0]][c];
        rows[k - 1][d] = cfg.hfin[vs[k]] - cfg.hfin[vs[0]];
    }
    std::vector<T> n(d + 1);
    for (int c = 0; c <= d; ++c) {
        std::vector<std::vector<T>> minor(d, std::vector<T>(d));
        for (int r = 0; r < d; ++r) {
            int cc = 0;
            for (int col = 0; col <= d; ++col)
                if (col != c) minor[r][cc++] = rows[r][col];
        }
        T det = bareiss_det(minor);
        n[c] = (c % 2 == 0) ? det : T(-det);
    }
    return n;
}

// Sign of the perturbed height of point j over the plane through plane_pts
// (+1 strictly above, -1 strictly below; exact zero cannot survive the
// symbolic perturbation). plane_pts must be projection-independent.
// j == -1 queries the pseudo-point "sum of all initial vertices" given
// explicitly (used only to orient facets against the interior).
template <class T>
struct PlaneQuery {
    std::vector<T> q;
    T hfin;
    T hu;  // may exceed 1 for aggregate pseudo-points
    int rank;  // perturbation rank; <0 = unperturbed pseudo-point
};

template <class T>
int sign_above(const LiftedConfig<T>& cfg, const std::vector<int>& plane_pts,
               const PlaneQuery<T>& query) {
    const int d = cfg.d;
    const int base = plane_pts[0];
    // rows 1..d: plane point diffs; row d+1: query diff
    std::vector<std::vector<T>> proj(d + 1, std::vector<T>(d));
    std::vector<T> dfin(d + 1);
    std::vector<T> du(d + 1);
    for (int k = 1; k <= d; ++k) {
        int a = plane_pts[k];
        for (int c = 0; c < d; ++c) proj[k - 1][c] = cfg.q[a][c] - cfg.q[base][c];
        dfin[k - 1] = cfg.hfin[a] - cfg.hfin[base];
        du[k - 1] = T(cfg.hu[a] - cfg.hu[base]);
    }
    for (int c = 0; c < d; ++c) proj[d][c] = query.q[c] - cfg.q[base][c];
    dfin[d] = query.hfin - cfg.hfin[base];
    du[d] = query.hu - T(cfg.hu[base]);

    // minors of the projected (d+1) x d matrix, dropping one row each
    std::vector<T> minor(d + 1);
    for (int k = 0; k <= d; ++k) {
        std::vector<std::vector<T>> m;
        m.reserve(d);
        for (int r = 0; r <= d; ++r)
            if (r != k) m.push_back(proj[r]);
        minor[k] = bareiss_det(std::move(m));
    }
    const T& vol = minor[d];  // projected volume of the plane points
    if (vol == 0) fail(ErrorKind::Internal, "sign_above: degenerate plane");

    // D = sum_k (-1)^{k+d} dlift_k minor_k  (cofactors along the lift column)
    T D_fin(0), D_u(0);
    for (int k = 0; k <= d; ++k) {
        T c = ((k + d) % 2 == 0) ? minor[k] : T(-minor[k]);
        D_fin += c * dfin[k];
        D_u += c * du[k];
    }
    // lift = hfin - hu*M with M -> +inf
    int s = (D_u != 0) ? -sgn(D_u) : sgn(D_fin);
    if (s != 0) return s * sgn(vol);

    // symbolic eps stage: coefficient of eps_i in D for every involved point
    std::vector<std::pair<int, T>> eps;  // (rank, coefficient)
    T base_coef(0);
    for (int k = 0; k <= d; ++k) {
        T c = ((k + d) % 2 == 0) ? minor[k] : T(-minor[k]);
        int idx_rank = (k == d) ? query.rank : plane_pts[k + 1];
        eps.push_back({idx_rank, c});
        base_coef -= c;
    }
    eps.push_back({base, base_coef});
    std::sort(eps.begin(), eps.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [rank, c] : eps) {
        if (rank < 0) continue;  // pseudo-points are not perturbed
        if (c != 0) return -sgn(c) * sgn(vol);  // lift_i -> lift_i - eps_i
    }
    fail(ErrorKind::Internal, "sign_above: unresolved tie");
}

struct Facet {
    std::vector<int> v;  // sorted vertex indices
    int outward = 0;     // sign_above value on the visible side
    bool alive = true;
};

// Runs beneath-beyond and returns the facets that use no artificial vertex,
// i.e. the upper facets of the real configuration (perturbed: simplicial).
// Real point i of the input appears as engine index d+1+i.
template <class T>
std::vector<std::vector<int>> incremental_upper_facets(
    const std::vector<std::vector<T>>& pts, const std::vector<T>& lifts) {
    const int d = (int)pts[0].size();
    const int n = (int)pts.size();

    LiftedConfig<T> cfg;
    cfg.d = d;
    // artificial simplex {x_j >= -B, sum x_j <= B} strictly containing all
    // real projections
    T maxc(1);
    for (const auto& p : pts)
        for (const auto& c : p) {
            T a = c < 0 ? T(-c) : c;
            if (a > maxc) maxc = a;
        }
    T B = T(2) * T(d + 1) * (maxc + 2);
    for (int i = 0; i <= d; ++i) {
        std::vector<T> corner(d, T(-B));
        if (i > 0) corner[i - 1] += T(d + 1) * B;
        cfg.q.push_back(std::move(corner));
        cfg.hfin.push_back(T(0));
        cfg.hu.push_back(1);
    }
    for (int i = 0; i < n; ++i) {
        cfg.q.push_back(pts[i]);
        cfg.hfin.push_back(lifts[i]);
        cfg.hu.push_back(0);
    }

    // initial simplex: artificial corners + first real point. A point just
    // below that real vertex is strictly interior (the vertical segment down
    // from an apex stays inside) and remains interior as the hull grows; it
    // orients every facet.
    std::vector<int> init;
    for (int i = 0; i <= d + 1; ++i) init.push_back(i);
    PlaneQuery<T> interior;
    interior.q = cfg.q[d + 1];
    interior.hfin = cfg.hfin[d + 1] - 1;
    interior.hu = T(0);
    interior.rank = -1;

    auto make_facet = [&](std::vector<int> vs) {
        std::sort(vs.begin(), vs.end());
        Facet f;
        f.v = std::move(vs);
        f.outward = -sign_above(cfg, f.v, interior);
        return f;
    };

    std::vector<Facet> facets;
    for (int drop = 0; drop <= d + 1; ++drop) {
        std::vector<int> vs;
        for (int i : init)
            if (i != drop) vs.push_back(i);
        facets.push_back(make_facet(std::move(vs)));
    }

    for (int j = d + 2; j < (int)cfg.q.size(); ++j) {
        PlaneQuery<T> query;
        query.q = cfg.q[j];
        query.hfin = cfg.hfin[j];
        query.hu = T(cfg.hu[j]);
        query.rank = j;
        std::vector<int> visible;
        for (int fi = 0; fi < (int)facets.size(); ++fi) {
            if (!facets[fi].alive) continue;
            if (sign_above(cfg, facets[fi].v, query) == facets[fi].outward)
                visible.push_back(fi);
        }
        if (visible.empty()) continue;  // beneath the current hull
        std::map<std::vector<int>, int> ridge_count;
        for (int fi : visible) {
            const auto& vs = facets[fi].v;
            for (int k = 0; k < (int)vs.size(); ++k) {
                std::vector<int> ridge;
                for (int t = 0; t < (int)vs.size(); ++t)
                    if (t != k) ridge.push_back(vs[t]);
                ++ridge_count[ridge];
            }
            facets[fi].alive = false;
        }
        for (auto& [ridge, cnt] : ridge_count) {
            if (cnt != 1) continue;
            std::vector<int> vs = ridge;
            vs.push_back(j);
            facets.push_back(make_facet(std::move(vs)));
        }
    }

    std::vector<std::vector<int>> out;
    for (const auto& f : facets) {
        if (!f.alive) continue;
        bool real = true;
        for (int v : f.v) real &= v > d;
        if (!real) continue;
        std::vector<int> vs;
        for (int v : f.v) vs.push_back(v - (d + 1));
        out.push_back(std::move(vs));
    }
    return out;
}

// A top cell in engine coordinates: supporting plane N.(x,h) = K with
// N_{d+1} > 0, members = equality set. Normals are primitive integers.
struct RawCell {
    std::vector<int> members;   // real indices, sorted
    std::vector<Int> normal;    // d+1 components
    Int offset;                 // K
};

template <class T>
std::optional<RawCell> supporting_cell(const std::vector<std::vector<T>>& pts,
                                       const std::vector<T>& lifts,
                                       const std::vector<int>& subset,
                                       bool validated) {
    const int d = (int)pts[0].size();
    LiftedConfig<T> cfg;
    cfg.d = d;
    cfg.q = pts;
    cfg.hfin = lifts;
    cfg.hu.assign(pts.size(), 0);
    std::vector<T> n = lifted_normal(cfg, subset);
    if (n[d] == 0) return std::nullopt;  // vertical or degenerate
    if (n[d] < 0)
        for (auto& c : n) c = T(-c);
    T k(0);
    for (int c = 0; c < d; ++c) k += n[c] * pts[subset[0]][c];
    k += n[d] * lifts[subset[0]];
    RawCell cell;
    for (int i = 0; i < (int)pts.size(); ++i) {
        T v(0);
        for (int c = 0; c < d; ++c) v += n[c] * pts[i][c];
        v += n[d] * lifts[i];
        if (v == k) {
            cell.members.push_back(i);
        } else if (v > k) {
            if (validated)
                fail(ErrorKind::Internal, "supporting_cell: point above facet plane");
            return std::nullopt;
        }
    }
    cell.normal.resize(d + 1);
    for (int c = 0; c <= d; ++c) cell.normal[c] = Int(n[c]);
    cell.offset = Int(k);
    Int g = 0;
    for (const auto& c : cell.normal) g = boost::multiprecision::gcd(g, abs(c));
    g = boost::multiprecision::gcd(g, abs(cell.offset));
    if (g > 1) {
        for (auto& c : cell.normal) c /= g;
        cell.offset /= g;
    }
    return cell;
}

template <class T>
std::vector<RawCell> upper_cells_impl(const std::vector<std::vector<T>>& pts,
                                      const std::vector<T>& lifts,
                                      HullStrategyImpl strategy) {
    const int d = (int)pts[0].size();
    const int n = (int)pts.size();
    if (strategy == HullStrategyImpl::Auto) {
        // #subsets C(n, d+1) small -> enumeration, else incremental
        double c = 1;
        for (int i = 0; i < d + 1; ++i) c = c * (n - i) / (i + 1);
        strategy = c <= 3000 ? HullStrategyImpl::Enumerate : HullStrategyImpl::Incremental;
    }

    std::map<std::pair<std::vector<Int>, Int>, RawCell> cells;
    auto add = [&](std::optional<RawCell> cell) {
        if (!cell) return;
        cells.try_emplace({cell->normal, cell->offset}, std::move(*cell));
    };

    if (strategy == HullStrategyImpl::Enumerate) {
        std::vector<int> comb;
        auto rec = [&](auto&& self, int start) -> void {
            if ((int)comb.size() == d + 1) {
                add(supporting_cell(pts, lifts, comb, false));
                return;
            }
            for (int i = start; i < n; ++i) {
                comb.push_back(i);
                self(self, i + 1);
                comb.pop_back();
            }
        };
        rec(rec, 0);
    } else {
        for (const auto& facet : incremental_upper_facets(pts, lifts))
            add(supporting_cell(pts, lifts, facet, true));
    }
    if (cells.empty()) fail(ErrorKind::Internal, "upper_cells: no cells found");

    std::vector<RawCell> out;
    for (auto& [key, cell] : cells) out.push_back(std::move(cell));
    std::sort(out.begin(), out.end(),
              [](const RawCell& a, const RawCell& b) { return a.members < b.members; });
    return out;
}

// conservative bound on any determinant the engine can form, to decide
// whether int64 arithmetic is safe
inline bool fits_int64(int d, const Int& maxc, const Int& maxlift) {
    Int row = Int(4) * (d + 1) * (d + 1) * (maxc + 2);  // artificial corner spread
    Int minor = 1;
    for (int i = 0; i < d; ++i) minor *= row * (i + 1);  // crude Hadamard-ish bound
    Int dbound = Int(d + 1) * 2 * (maxlift + d + 2) * minor;
    Int kbound = Int(d + 1) * minor * (row + maxlift + 1);
    Int lim = Int(1) << 61;
    return dbound < lim && kbound < lim;
}

// Entry point on integer points with integer lifts; points distinct and
// affinely spanning dimension d = pts[0].size().
inline std::vector<RawCell> upper_cells(const std::vector<IVec>& pts,
                                        const std::vector<Int>& lifts,
                                        HullStrategyImpl strategy) {
    const int d = (int)pts[0].size();
    Int maxc = 1, maxlift = 1;
    for (const auto& p : pts)
        for (long long c : p) {
            Int a = c < 0 ? -c : c;
            if (a > maxc) maxc = a;
        }
    for (const auto& h : lifts) {
        Int a = h < 0 ? Int(-h) : h;
        if (a > maxlift) maxlift = a;
    }
    if (fits_int64(d, maxc, maxlift)) {
        std::vector<std::vector<long long>> p64(pts.size());
        std::vector<long long> h64(lifts.size());
        for (size_t i = 0; i < pts.size(); ++i)
            p64[i].assign(pts[i].begin(), pts[i].end());
        for (size_t i = 0; i < lifts.size(); ++i)
            h64[i] = (long long)lifts[i];
        return upper_cells_impl(p64, h64, strategy);
    }
    std::vector<std::vector<Int>> pbig(pts.size());
    std::vector<Int> hbig(lifts);
    for (size_t i = 0; i < pts.size(); ++i)
        pbig[i].assign(pts[i].begin(), pts[i].end());
    return upper_cells_impl(pbig, hbig, strategy);
}

// Placing triangulation of the convex hull (flat lifts): returns simplices
// as sorted index lists, each of size d+1.
inline std::vector<std::vector<int>> triangulate(const std::vector<IVec>& pts) {
    const int d = (int)pts[0].size();
    Int maxc = 1;
    for (const auto& p : pts)
        for (long long c : p) {
            Int a = c < 0 ? -c : c;
            if (a > maxc) maxc = a;
        }
    std::vector<std::vector<int>> facets;
    if (fits_int64(d, maxc, Int(1))) {
        std::vector<std::vector<long long>> p64(pts.size());
        for (size_t i = 0; i < pts.size(); ++i)
            p64[i].assign(pts[i].begin(), pts[i].end());
        facets = incremental_upper_facets(p64, std::vector<long long>(pts.size(), 0));
    } else {
        std::vector<std::vector<Int>> pbig(pts.size());
        for (size_t i = 0; i < pts.size(); ++i)
            pbig[i].assign(pts[i].begin(), pts[i].end());
        facets = incremental_upper_facets(pbig, std::vector<Int>(pts.size(), Int(0)));
    }
    for (auto& f : facets) std::sort(f.begin(), f.end());
    std::sort(facets.begin(), facets.end());
    return facets;
}

}  // namespace tropic::detail
