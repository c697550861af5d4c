#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "matchers.hpp"
#include "oracles.hpp"
#include "tropic/feasible.hpp"
#include "tropic/hypersurface.hpp"

using namespace tropic;

namespace {

TropPoly poly(int n, std::vector<std::pair<IVec, Rational>> ts) {
    return make_poly(n, std::move(ts));
}

QVec pt(Rational x, Rational y) { return QVec{std::move(x), std::move(y)}; }

std::set<IVec> ray_dirs(const HypersurfaceComplex& c) {
    std::set<IVec> out;
    for (const auto& e : c.edges)
        if (e.shape == EdgeShape::Ray) out.insert(*e.dir);
    return out;
}

int count_shape(const HypersurfaceComplex& c, EdgeShape s) {
    int n = 0;
    for (const auto& e : c.edges) n += e.shape == s;
    return n;
}

// Recount the subdivision's face numbers straight from the cells, using only
// oracle helpers: 2-cells, distinct 1-faces (via hull boundary walks), and
// distinct 0-faces (polygon corners / segment endpoints).
struct FaceTally {
    std::set<IVec> zero;
    std::set<std::vector<IVec>> one;
    int two = 0;
};

bool between(const IVec& a, const IVec& b, const IVec& x) {
    Int cr = Int(b[0] - a[0]) * (x[1] - a[1]) - Int(b[1] - a[1]) * (x[0] - a[0]);
    if (cr != 0) return false;
    Int d = Int(b[0] - a[0]) * (x[0] - a[0]) + Int(b[1] - a[1]) * (x[1] - a[1]);
    Int l = Int(b[0] - a[0]) * (b[0] - a[0]) + Int(b[1] - a[1]) * (b[1] - a[1]);
    return d >= 0 && d <= l;
}

FaceTally tally_faces(const Subdivision& s) {
    FaceTally t;
    for (const auto& c : s.cells) {
        if (c.dim == 2) {
            ++t.two;
            auto hull = oracle::hull2d(c.members);
            for (size_t i = 0; i < hull.size(); ++i) {
                const IVec& a = hull[i];
                const IVec& b = hull[(i + 1) % hull.size()];
                t.zero.insert(a);
                std::vector<IVec> face;
                for (const auto& m : c.members)
                    if (between(a, b, m)) face.push_back(m);
                std::sort(face.begin(), face.end());
                t.one.insert(face);
            }
        } else if (c.dim == 1) {
            t.one.insert(c.members);
            t.zero.insert(c.members.front());
            t.zero.insert(c.members.back());
        } else {
            t.zero.insert(c.members.front());
        }
    }
    return t;
}

// Independent balancing check at every complex vertex: weights and directions
// are re-derived from the dual polygon alone (lattice length of each boundary
// edge, rotated to point away from the polygon).
void check_balancing_from_duals(const HypersurfaceComplex& c) {
    for (size_t i = 0; i < c.vertices.size(); ++i) {
        const auto& cell = c.subdivision.cells[i];
        auto hull = oracle::hull2d(cell.members);
        QVec centroid(2, Rational(0));
        for (const auto& h : hull)
            for (int k = 0; k < 2; ++k) centroid[k] += Rational(h[k]);
        for (int k = 0; k < 2; ++k) centroid[k] /= Rational((long long)hull.size());
        QVec sum(2, Rational(0));
        for (size_t j = 0; j < hull.size(); ++j) {
            const IVec& a = hull[j];
            const IVec& b = hull[(j + 1) % hull.size()];
            long long w = ivec_gcd(isub(b, a));
            IVec rot{-(b[1] - a[1]), b[0] - a[0]};
            Rational side = Rational(rot[0]) * (centroid[0] - Rational(a[0])) +
                            Rational(rot[1]) * (centroid[1] - Rational(a[1]));
            REQUIRE(side != 0);
            if (side > 0) rot = IVec{-rot[0], -rot[1]};
            IVec n = primitive_vector(rot);
            for (int k = 0; k < 2; ++k) sum[k] += Rational(w) * Rational(n[k]);
        }
        CHECK(sum[0] == 0);
        CHECK(sum[1] == 0);
    }
}

TropPoly random_poly2(oracle::SplitMix64& rng, int max_deg, int max_terms) {
    while (true) {
        int k = (int)rng.range(1, max_terms);
        std::set<IVec> seen;
        std::vector<std::pair<IVec, Rational>> ts;
        for (int i = 0; i < k; ++i) {
            long long a = rng.range(0, max_deg);
            long long b = rng.range(0, max_deg - a);
            if (!seen.insert(IVec{a, b}).second) continue;
            ts.push_back({IVec{a, b}, Rational(rng.range(-9, 9), rng.range(1, 2))});
        }
        if (!ts.empty()) return poly(2, std::move(ts));
    }
}

}  // namespace

TEST_CASE("exact_feasible decides strict corner systems", "[feasible]") {
    // {x < 0, y < 0}
    auto w = exact_feasible({{Rational(-1), Rational(0), Rational(0), true},
                             {Rational(0), Rational(-1), Rational(0), true}});
    REQUIRE(w.has_value());
    CHECK((*w)[0] == -1);
    CHECK((*w)[1] == -1);

    // {x > 0, x < 0}
    CHECK_FALSE(exact_feasible({{Rational(1), Rational(0), Rational(0), true},
                                {Rational(-1), Rational(0), Rational(0), true}})
                    .has_value());
}

TEST_CASE("exact_feasible boundary and constant cases", "[feasible]") {
    // x >= 0 together with x <= 0 pins x = 0
    auto w = exact_feasible({{Rational(1), Rational(0), Rational(0), false},
                             {Rational(-1), Rational(0), Rational(0), false}});
    REQUIRE(w.has_value());
    CHECK((*w)[0] == 0);

    // strict on one side breaks it
    CHECK_FALSE(exact_feasible({{Rational(1), Rational(0), Rational(0), true},
                                {Rational(-1), Rational(0), Rational(0), false}})
                    .has_value());

    // constant constraints
    CHECK(exact_feasible({{Rational(0), Rational(0), Rational(1), true}}).has_value());
    CHECK(exact_feasible({{Rational(0), Rational(0), Rational(0), false}}).has_value());
    CHECK_FALSE(
        exact_feasible({{Rational(0), Rational(0), Rational(0), true}}).has_value());

    // empty system: anything goes
    CHECK(exact_feasible({}).has_value());
}

TEST_CASE("exact_feasible agrees with sampling oracle", "[feasible][oracle]") {
    oracle::SplitMix64 rng(0xfea51b1eull);
    for (int trial = 0; trial < 60; ++trial) {
        int k = (int)rng.range(1, 5);
        std::vector<LinIneq2> sys;
        std::vector<oracle::Ineq2> osys;
        for (int i = 0; i < k; ++i) {
            Rational a(rng.range(-3, 3)), b(rng.range(-3, 3)),
                c(rng.range(-6, 6), rng.range(1, 2));
            bool strict = rng.range(0, 1) == 1;
            sys.push_back({a, b, c, strict});
            osys.push_back({a, b, c, strict});
        }
        auto exact = exact_feasible(sys);
        auto sampled = oracle::feasible_by_sampling(osys);
        if (sampled) {
            REQUIRE(exact.has_value());
        }
        if (exact) {
            for (const auto& q : osys)
                CHECK(oracle::ineq_holds(q, (*exact)[0], (*exact)[1]));
        }
    }
}

TEST_CASE("primitive_vector scales to coprime coordinates", "[hypersurface]") {
    CHECK(primitive_vector(IVec{4, -2}) == IVec{2, -1});
    CHECK(primitive_vector(IVec{0, 7}) == IVec{0, 1});
    CHECK(primitive_vector(IVec{3, 5}) == IVec{3, 5});
    CHECK_THROWS_MATCHES(primitive_vector(IVec{0, 0}), Error,
                         ErrorKindIs(ErrorKind::ZeroVector));
}

TEST_CASE("tropical line: one vertex, three rays", "[hypersurface]") {
    auto p = poly(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{0, 0}, 0}});
    auto c = hypersurface_complex(p);

    REQUIRE(c.vertices.size() == 1);
    CHECK(c.vertices[0] == pt(0, 0));
    REQUIRE(c.edges.size() == 3);
    CHECK(count_shape(c, EdgeShape::Ray) == 3);
    CHECK(ray_dirs(c) == std::set<IVec>{{-1, 0}, {0, -1}, {1, 1}});
    for (const auto& e : c.edges) {
        CHECK(edge_weight(e) == 1);
        CHECK(e.v0 == 0);
        CHECK(e.a == pt(0, 0));
    }
    CHECK(c.domains.size() == 3);
    CHECK(check_balancing(c));
}

TEST_CASE("x^2+0 gives a weight-two line, no vertices", "[hypersurface]") {
    auto p = poly(2, {{{2, 0}, 0}, {{0, 0}, 0}});
    auto c = hypersurface_complex(p);

    CHECK(c.vertices.empty());
    REQUIRE(c.edges.size() == 1);
    const auto& e = c.edges[0];
    CHECK(e.shape == EdgeShape::Line);
    CHECK(edge_weight(e) == 2);
    CHECK(*e.dir == IVec{0, 1});
    CHECK(e.a[0] == 0);  // base point on the line x = 0
    CHECK(e.dual_members == std::vector<IVec>{{0, 0}, {2, 0}});

    CHECK(point_on_complex(c, pt(0, 5)));
    CHECK(point_on_complex(c, pt(0, Rational(-7, 3))));
    CHECK_FALSE(point_on_complex(c, pt(1, 0)));

    // half-plane domains on the two sides
    REQUIRE(c.domains.count(IVec{0, 0}) == 1);
    const auto& d0 = c.domains.at(IVec{0, 0});
    CHECK(d0.vertices == std::vector<QVec>{pt(0, 0)});
    CHECK(std::set<IVec>(d0.rays.begin(), d0.rays.end()) ==
          std::set<IVec>{{-1, 0}, {0, 1}, {0, -1}});
    const auto& d2 = c.domains.at(IVec{2, 0});
    CHECK(std::set<IVec>(d2.rays.begin(), d2.rays.end()) ==
          std::set<IVec>{{1, 0}, {0, 1}, {0, -1}});

    CHECK(check_balancing(c));  // vacuous: no vertices
}

TEST_CASE("collinear support yields parallel lines and strip domains",
          "[hypersurface]") {
    auto p = poly(2, {{{0, 0}, 0}, {{1, 1}, 0}, {{2, 2}, -1}});
    auto c = hypersurface_complex(p);

    CHECK(c.vertices.empty());
    REQUIRE(c.edges.size() == 2);
    for (const auto& e : c.edges) {
        CHECK(e.shape == EdgeShape::Line);
        CHECK(*e.dir == IVec{1, -1});
        CHECK(edge_weight(e) == 1);
    }
    // x + y = 0 and x + y = 1
    CHECK(point_on_complex(c, pt(3, -3)));
    CHECK(point_on_complex(c, pt(Rational(1, 2), Rational(1, 2))));
    CHECK_FALSE(point_on_complex(c, pt(Rational(1, 4), 0)));

    const auto& mid = c.domains.at(IVec{1, 1});
    CHECK(mid.vertices.size() == 2);
    CHECK(std::set<IVec>(mid.rays.begin(), mid.rays.end()) ==
          std::set<IVec>{{1, -1}, {-1, 1}});
    CHECK(c.domains.size() == 3);
}

TEST_CASE("raised-corner square: one bounded edge between two vertices",
          "[hypersurface]") {
    auto p = poly(2, {{{0, 0}, 0}, {{1, 0}, 0}, {{0, 1}, 0}, {{1, 1}, 1}});
    auto c = hypersurface_complex(p);

    REQUIRE(c.vertices.size() == 2);
    std::set<std::vector<Rational>> vs(c.vertices.begin(), c.vertices.end());
    CHECK(vs == std::set<std::vector<Rational>>{pt(-1, 0), pt(0, -1)});

    REQUIRE(count_shape(c, EdgeShape::Segment) == 1);
    CHECK(count_shape(c, EdgeShape::Ray) == 4);
    for (const auto& e : c.edges) {
        CHECK(edge_weight(e) == 1);
        if (e.shape == EdgeShape::Segment) {
            CHECK(e.dual_members == std::vector<IVec>{{0, 0}, {1, 1}});
            CHECK(e.v0 != e.v1);
        }
    }
    CHECK(ray_dirs(c) == std::set<IVec>{{-1, 0}, {0, -1}, {0, 1}, {1, 0}});
    CHECK(check_balancing(c));
    check_balancing_from_duals(c);
}

TEST_CASE("generic degree-3 curve from a strictly concave lift", "[hypersurface]") {
    std::vector<std::pair<IVec, Rational>> ts;
    for (long long a = 0; a <= 3; ++a)
        for (long long b = 0; b + a <= 3; ++b)
            ts.push_back({IVec{a, b}, Rational(-(a * a + a * b + b * b))});
    auto p = poly(2, ts);

    REQUIRE(is_unimodular_triangulation(regular_subdivision(p)));
    auto c = hypersurface_complex(p);
    CHECK(c.vertices.size() == 9);
    CHECK(count_shape(c, EdgeShape::Ray) == 9);
    CHECK(count_shape(c, EdgeShape::Segment) == 9);
    CHECK(c.domains.size() == 10);

    std::map<IVec, int> per_dir;
    for (const auto& e : c.edges)
        if (e.shape == EdgeShape::Ray) ++per_dir[*e.dir];
    CHECK(per_dir[IVec{-1, 0}] == 3);
    CHECK(per_dir[IVec{0, -1}] == 3);
    CHECK(per_dir[IVec{1, 1}] == 3);

    CHECK(check_balancing(c));
    check_balancing_from_duals(c);
}

TEST_CASE("domain_of_monomial matches half-plane descriptions", "[hypersurface]") {
    auto p = poly(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{0, 0}, 0}});

    auto d00 = domain_of_monomial(p, IVec{0, 0});
    REQUIRE(d00.has_value());
    CHECK(d00->vertices == std::vector<QVec>{pt(0, 0)});
    CHECK(std::set<IVec>(d00->rays.begin(), d00->rays.end()) ==
          std::set<IVec>{{-1, 0}, {0, -1}});

    auto d10 = domain_of_monomial(p, IVec{1, 0});
    REQUIRE(d10.has_value());
    CHECK(d10->vertices == std::vector<QVec>{pt(0, 0)});
    CHECK(std::set<IVec>(d10->rays.begin(), d10->rays.end()) ==
          std::set<IVec>{{0, -1}, {1, 1}});

    // max(0, 2x) >= x - 5 everywhere: the middle monomial owns no region
    auto q = poly(2, {{{0, 0}, 0}, {{2, 0}, 0}, {{1, 0}, -5}});
    CHECK_FALSE(domain_of_monomial(q, IVec{1, 0}).has_value());

    CHECK_THROWS_MATCHES(domain_of_monomial(p, IVec{5, 5}), Error,
                         ErrorKindIs(ErrorKind::UnknownExponent));
}

TEST_CASE("ray_intersections walks the envelope on each axis", "[hypersurface]") {
    // g(t,0,0) = max(3+2t, 2+t, 0): crossings at t=-1 and t=-2
    auto g = poly(3, {{{2, 0, 0}, 3}, {{1, 0, 0}, 2}, {{0, 0, 0}, 0}});
    auto hits = ray_intersections(g, AxisRay::X);
    REQUIRE(hits.points.size() == 2);
    CHECK(hits.points[0] == QVec{Rational(-1), Rational(0), Rational(0)});
    CHECK(hits.points[1] == QVec{Rational(-2), Rational(0), Rational(0)});
    CHECK(hits.path ==
          std::vector<IVec>{{2, 0, 0}, {1, 0, 0}, {0, 0, 0}});

    auto gy = poly(3, {{{0, 2, 0}, 3}, {{0, 1, 0}, 2}, {{0, 0, 0}, 0}});
    auto hy = ray_intersections(gy, AxisRay::Y);
    REQUIRE(hy.points.size() == 2);
    CHECK(hy.points[0] == QVec{Rational(0), Rational(-1), Rational(0)});
    CHECK(hy.points[1] == QVec{Rational(0), Rational(-2), Rational(0)});

    auto gz = poly(3, {{{0, 0, 2}, 3}, {{0, 0, 1}, 2}, {{0, 0, 0}, 0}});
    auto hz = ray_intersections(gz, AxisRay::Z);
    REQUIRE(hz.points.size() == 2);
    CHECK(hz.points[0] == QVec{Rational(0), Rational(0), Rational(-1)});
    CHECK(hz.points[1] == QVec{Rational(0), Rational(0), Rational(-2)});
}

TEST_CASE("ray_intersections on W uses the diagonal substitution",
          "[hypersurface]") {
    // g(t,t,t) = max(0, t-1, 2t-3): crossings at t=1 and t=2
    auto g = poly(3, {{{0, 0, 0}, 0}, {{1, 0, 0}, -1}, {{0, 1, 1}, -3}});
    auto hits = ray_intersections(g, AxisRay::W);
    REQUIRE(hits.points.size() == 2);
    CHECK(hits.points[0] == QVec{Rational(1), Rational(1), Rational(1)});
    CHECK(hits.points[1] == QVec{Rational(2), Rational(2), Rational(2)});
    CHECK(hits.path ==
          std::vector<IVec>{{0, 0, 0}, {1, 0, 0}, {0, 1, 1}});
}

TEST_CASE("ray_intersections detects segments and empty crossings",
          "[hypersurface]") {
    // slope-1 class carries two tied terms and owns part of the negative axis
    auto bad = poly(3, {{{1, 0, 0}, 0}, {{1, 1, 0}, 0}, {{0, 0, 0}, -5}});
    CHECK_THROWS_MATCHES(ray_intersections(bad, AxisRay::X), Error,
                         ErrorKindIs(ErrorKind::SegmentOnRay));

    // same tie never reaches the envelope on the open ray: no error, no hits
    auto ok = poly(3, {{{1, 0, 0}, 0}, {{1, 1, 0}, 0}, {{0, 0, 0}, 5}});
    auto hits = ray_intersections(ok, AxisRay::X);
    CHECK(hits.points.empty());
    CHECK(hits.path == std::vector<IVec>{{0, 0, 0}});

    CHECK_THROWS_MATCHES(ray_intersections(poly(2, {{{0, 0}, 0}}), AxisRay::X),
                         Error, ErrorKindIs(ErrorKind::WrongDimension));
    CHECK_THROWS_MATCHES(ray_intersections(TropPoly{3, {}}, AxisRay::X), Error,
                         ErrorKindIs(ErrorKind::EmptyPolynomial));
}

TEST_CASE("complex rejects the empty polynomial", "[hypersurface]") {
    CHECK_THROWS_MATCHES(hypersurface_complex(TropPoly{2, {}}), Error,
                         ErrorKindIs(ErrorKind::EmptyPolynomial));
    CHECK_THROWS_MATCHES(hypersurface_complex(poly(3, {{{0, 0, 0}, 0}})), Error,
                         ErrorKindIs(ErrorKind::WrongDimension));
}

TEST_CASE("single-term polynomial: empty curve, one full-plane domain",
          "[hypersurface]") {
    auto p = poly(2, {{{3, 1}, Rational(7, 2)}});
    auto c = hypersurface_complex(p);
    CHECK(c.vertices.empty());
    CHECK(c.edges.empty());
    REQUIRE(c.domains.size() == 1);
    CHECK(c.domains.begin()->first == IVec{3, 1});
    CHECK_FALSE(point_on_complex(c, pt(0, 0)));
}

TEST_CASE("duality counts and balancing on random curves",
          "[hypersurface][oracle]") {
    oracle::SplitMix64 rng(0xd0a11717ull);
    for (int trial = 0; trial < 50; ++trial) {
        auto p = random_poly2(rng, 5, 10);
        auto c = hypersurface_complex(p);
        auto t = tally_faces(c.subdivision);

        CHECK((int)c.vertices.size() == t.two);
        CHECK(c.edges.size() == t.one.size());
        CHECK(c.domains.size() == t.zero.size());

        CHECK(check_balancing(c));
        check_balancing_from_duals(c);

        // every bounded edge joins the duals of exactly its two incident cells
        for (const auto& e : c.edges) {
            if (e.shape != EdgeShape::Segment) continue;
            const auto& m0 = c.subdivision.cells[e.v0].members;
            const auto& m1 = c.subdivision.cells[e.v1].members;
            std::vector<IVec> inter;
            std::set_intersection(m0.begin(), m0.end(), m1.begin(), m1.end(),
                                  std::back_inserter(inter));
            CHECK(inter == e.dual_members);
        }

        // domains are honest: vertices and vertex+ray probes satisfy every
        // weak inequality of their monomial
        for (const auto& [mono, cell] : c.domains) {
            REQUIRE(!cell.vertices.empty());
            Rational cm = p.terms.at(mono);
            auto value_ok = [&](const QVec& x) {
                Rational vm = cm + dot(x, mono);
                for (const auto& [e2, c2] : p.terms)
                    if (c2 + dot(x, e2) > vm) return false;
                return true;
            };
            for (const auto& v : cell.vertices) {
                CHECK(value_ok(v));
                for (const auto& r : cell.rays) {
                    QVec probe = v;
                    for (int k = 0; k < 2; ++k) probe[k] += Rational(3) * r[k];
                    CHECK(value_ok(probe));
                }
            }
        }
    }
}

TEST_CASE("argmax ties coincide with curve membership on a grid",
          "[hypersurface][oracle]") {
    oracle::SplitMix64 rng(0x9e1d5a3cull);
    std::vector<TropPoly> sample;
    for (int trial = 0; trial < 8; ++trial) sample.push_back(random_poly2(rng, 4, 7));
    sample.push_back(poly(2, {{{2, 0}, 0}, {{0, 0}, 0}}));
    sample.push_back(poly(2, {{{1, 1}, Rational(1, 2)}}));
    for (const auto& p : sample) {
        auto c = hypersurface_complex(p);
        for (long long i = -3; i <= 3; ++i)
            for (long long j = -3; j <= 3; ++j) {
                QVec x = pt(Rational(2 * i + 1, 2), Rational(2 * j + 1, 2));
                CHECK(on_hypersurface(p, x) == point_on_complex(c, x));
                QVec y = pt(Rational(i), Rational(j));
                CHECK(on_hypersurface(p, y) == point_on_complex(c, y));
            }
    }
}
