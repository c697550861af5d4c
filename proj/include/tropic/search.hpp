#pragma once

// Randomized verification campaign: generate lifted quartics (or any degree),
// certify, assemble the curve, and run every structural check the library
// knows about. Each attempt draws from its own SplitMix64 stream keyed by
// seed + offset, so reports are reproducible record by record.

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tropic/curve.hpp"
#include "tropic/quarter_planes.hpp"
#include "tropic/rng.hpp"
#include "tropic/skeleton.hpp"

namespace tropic {

enum class CoefficientStyle { Integer, RationalDenominator };

struct SearchConfig {
    uint64_t seed = 0;
    long long attempts = 100;
    long long degree = 4;  // of g; f is always the standard plane
    long long bound = 30;  // jitter amplitude B
    CoefficientStyle style = CoefficientStyle::RationalDenominator;
    long long denominator = 12;        // k, rational style only
    Verdict require = Verdict::Smooth;  // Smooth, or WeaklySmoothOnly to accept both

    bool operator==(const SearchConfig&) const = default;
};

struct InstanceRecord {
    uint64_t offset = 0;
    Verdict verdict = Verdict::NotWeaklySmooth;
    bool certified = false;
    std::string error;  // error kind when some stage threw; empty otherwise
    std::array<long long, 3> counts{0, 0, 0};
    long long genus = 0, s = 0, t = 0;
    std::string skeleton_class;
    std::vector<std::pair<std::string, bool>> checks;

    bool operator==(const InstanceRecord&) const = default;
};

struct RunReport {
    SearchConfig config;
    std::vector<InstanceRecord> records;  // one per attempt, in offset order
    long long certified = 0;
    Rational acceptance_rate = 0;  // certified / attempts, exact
    std::map<std::string, long long> class_histogram;
    bool zero_lollipop = true;   // the headline claim; a miss is a FINDING
    bool all_checks_pass = true;

    bool operator==(const RunReport&) const = default;
};

// Integer style: coefficients uniform in [-B, B]. Rational style: a concave
// quadratic in the interval functionals x, y, z, x+y, y+z, x+y+z with random
// weights, jittered by B-bounded numerators over the configured denominator;
// that family keeps the induced subdivision fine and unimodular often enough
// to sample certified instances at any degree.
inline TropPoly generate_instance(const SearchConfig& cfg, uint64_t offset) {
    SplitMix64 rng(cfg.seed + offset);
    std::array<long long, 6> w{};
    if (cfg.style == CoefficientStyle::RationalDenominator)
        for (auto& x : w) x = rng.range(1, 13);
    TropPoly g;
    g.n_vars = 3;
    for (long long x = 0; x <= cfg.degree; ++x)
        for (long long y = 0; x + y <= cfg.degree; ++y)
            for (long long z = 0; x + y + z <= cfg.degree; ++z) {
                if (cfg.style == CoefficientStyle::Integer) {
                    g.terms[{x, y, z}] = Rational(rng.range(-cfg.bound, cfg.bound));
                    continue;
                }
                long long q = w[0] * x * x + w[1] * y * y + w[2] * z * z +
                              w[3] * (x + y) * (x + y) + w[4] * (y + z) * (y + z) +
                              w[5] * (x + y + z) * (x + y + z);
                g.terms[{x, y, z}] =
                    Rational(-q * cfg.denominator + rng.range(-cfg.bound, cfg.bound)) /
                    Rational(cfg.denominator);
            }
    return g;
}

namespace detail {

// closure: every face of a marked cell is marked; connectivity: marked cells
// form one component under shared-vertex adjacency; and the origin 0-cell is
// marked (it is dual to the domain of the dominant constant-direction term)
inline bool marked_region_wellformed(const MarkedComplex& k) {
    std::set<IVec> marked_pts;
    for (size_t i : k.marked_vertices) marked_pts.insert(k.vertex_points[i]);
    if (!marked_pts.count(IVec{0, 0})) return false;

    std::set<std::array<IVec, 2>> marked_edges;
    for (size_t i : k.marked_edges) {
        const auto& [a, b] = k.edge_faces[i];
        if (!marked_pts.count(a) || !marked_pts.count(b)) return false;
        marked_edges.insert({std::min(a, b), std::max(a, b)});
    }
    std::vector<std::vector<IVec>> corners;
    for (size_t ci : k.marked_triangles) {
        std::vector<IVec> hull = detail::ccw_hull(k.base.cells[ci].members);
        for (size_t j = 0; j < hull.size(); ++j) {
            const IVec& a = hull[j];
            const IVec& b = hull[(j + 1) % hull.size()];
            if (!marked_pts.count(a)) return false;
            if (!marked_edges.count({std::min(a, b), std::max(a, b)})) return false;
        }
        corners.push_back(std::move(hull));
    }

    // connectivity over marked faces, glued at marked vertices
    std::vector<IVec> pts(marked_pts.begin(), marked_pts.end());
    auto vid = [&](const IVec& v) {
        return (size_t)(std::lower_bound(pts.begin(), pts.end(), v) - pts.begin());
    };
    size_t n = pts.size() + k.marked_edges.size() + corners.size();
    UnionFind uf(n);
    size_t next = pts.size();
    for (size_t i : k.marked_edges) {
        uf.unite(next, vid(k.edge_faces[i][0]));
        uf.unite(next, vid(k.edge_faces[i][1]));
        ++next;
    }
    for (const auto& hull : corners) {
        for (const auto& c : hull) uf.unite(next, vid(c));
        ++next;
    }
    for (size_t i = 1; i < n; ++i)
        if (uf.find(i) != uf.find(0)) return false;
    return true;
}

// dominating-coefficient chain along a monomial ray path: strictly
// increasing toward the origin-dominant end (the path's front), with
// non-increasing steps — the upper-hull picture in one dimension
inline bool coefficient_chain_ok(const TropPoly& g, const std::vector<IVec>& path) {
    std::optional<Rational> prev, prev_step;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        Rational c = g.terms.at(IVec{(*it)[0], (*it)[1], (*it)[2]});
        if (prev) {
            Rational step = c - *prev;
            if (step <= 0) return false;
            if (prev_step && step > *prev_step) return false;
            prev_step = step;
        }
        prev = c;
    }
    return true;
}

}  // namespace detail

// The per-instance verification vector, run on every certified instance.
// Populates rec.counts/genus/s/t/skeleton_class on the way.
inline void run_checks(const TropPoly& f, const TropPoly& g, InstanceRecord& rec) {
    auto push = [&](const char* name, bool pass) { rec.checks.emplace_back(name, pass); };
    long long e = degree(g);
    bool smooth = rec.verdict == Verdict::Smooth;

    push("origin_exclusion", verify_origin_exclusion(g));

    IVec ex = *argmax_terms(g, QVec{Rational(0), Rational(0), Rational(0)}).begin();
    long long expect[4] = {ex[0], ex[1], ex[2], e - ex[0] - ex[1] - ex[2]};
    bool rays_ok = true, chain_ok = true;
    long long wall_points = 0;
    AxisRay axes[4] = {AxisRay::X, AxisRay::Y, AxisRay::Z, AxisRay::W};
    for (int i = 0; i < 4; ++i) {
        RayHits hits = ray_intersections(g, axes[i]);
        rays_ok &= (long long)hits.points.size() == expect[i];
        wall_points += (long long)hits.points.size();
        chain_ok &= detail::coefficient_chain_ok(g, monomial_ray_path(g, axes[i]));
    }
    rays_ok &= wall_points == e;
    push("ray_counts", rays_ok);

    bool axis_clear = true, region_ok = true, staircase_ok = chain_ok, area_ok = true;
    long long enclosed = 0;
    for (QuarterPlaneId q : all_quarter_planes) {
        try {
            TropPoly p = restrict_to_quarter_plane(g, q).poly;
            MarkedComplex k = marked_subcomplex(p);
            Staircase st = staircase_functions(k, p);
            region_ok &= verify_kprime_shape(k, st);
            staircase_ok &= staircase_regions_disjoint(k, st);
            region_ok &= detail::marked_region_wellformed(k);
            area_ok &= check_area_half(k);
            enclosed += (long long)enclosed_cycle_domains(k).size();
        } catch (const Error&) {
            axis_clear = region_ok = staircase_ok = area_ok = false;
        }
    }
    push("axis_clearance", axis_clear);
    push("marked_region", region_ok);
    push("staircase", staircase_ok);
    push("area_half", area_ok);

    TropicalCurveGraph c = intersection_curve(f, g);
    rec.counts = count_cells(c);
    rec.genus = curve_genus(c);
    CurveTopology topo = components_and_betti(c);
    rec.s = topo.s;
    rec.t = topo.t;

    push("count_formulas", !smooth || rec.counts == expected_counts(1, e));
    push("genus", (!smooth || rec.genus == expected_genus(1, e)) &&
                      rec.genus == topo.genus_of_c);
    bool topo_ok = topo.s - topo.t == (rec.counts[0] - rec.counts[1]) + 2 * wall_points &&
                   topo.t == enclosed;
    if (smooth && e == 4) topo_ok &= topo.s - topo.t == 6 && topo.t >= 0 && topo.t <= 3;
    push("component_topology", topo_ok);

    Multigraph skel = skeletonize(c);
    Genus3Class cls = classify_genus3(skel);
    rec.skeleton_class = genus3_class_name(cls);
    push("classification", multigraph_genus(skel) == rec.genus &&
                               (!smooth || e != 4 || cls != Genus3Class::Other));
}

inline RunReport run_search(const SearchConfig& cfg) {
    if (cfg.attempts <= 0) fail(ErrorKind::ParseError, "attempts must be positive");
    if (cfg.bound <= 0) fail(ErrorKind::ParseError, "coefficient bound must be positive");
    if (cfg.degree < 1) fail(ErrorKind::ParseError, "degree must be at least 1");
    if (cfg.style == CoefficientStyle::RationalDenominator && cfg.denominator < 1)
        fail(ErrorKind::ParseError, "denominator must be positive");
    if (cfg.require == Verdict::NotWeaklySmooth)
        fail(ErrorKind::ParseError, "require must be smooth or weak");

    TropPoly f = make_poly(3, {{{0, 0, 0}, Rational(0)},
                               {{1, 0, 0}, Rational(0)},
                               {{0, 1, 0}, Rational(0)},
                               {{0, 0, 1}, Rational(0)}});
    RunReport rep;
    rep.config = cfg;
    for (long long off = 0; off < cfg.attempts; ++off) {
        InstanceRecord rec;
        rec.offset = (uint64_t)off;
        TropPoly g = generate_instance(cfg, (uint64_t)off);
        try {
            rec.verdict = certify_smooth_ci(f, g).verdict;
            rec.certified = cfg.require == Verdict::Smooth
                                ? rec.verdict == Verdict::Smooth
                                : rec.verdict != Verdict::NotWeaklySmooth;
            if (rec.certified) run_checks(f, g, rec);
        } catch (const Error& e) {
            rec.error = error_kind_name(e.kind());
        }
        if (rec.certified) {
            ++rep.certified;
            ++rep.class_histogram[rec.skeleton_class.empty() ? "Error"
                                                             : rec.skeleton_class];
            if (rec.skeleton_class == "Lollipop") rep.zero_lollipop = false;
        }
        for (const auto& [name, pass] : rec.checks) rep.all_checks_pass &= pass;
        if (!rec.error.empty()) rep.all_checks_pass = false;
        rep.records.push_back(std::move(rec));
    }
    rep.acceptance_rate = Rational(rep.certified) / Rational(cfg.attempts);
    return rep;
}

}  // namespace tropic
