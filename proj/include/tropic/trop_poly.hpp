#pragma once

// Tropical polynomials over the exact rationals, max-plus convention.
// A term map {exponent -> coefficient}; an absent monomial means -inf, and
// the all-absent polynomial is the -inf polynomial (rejected by geometry).

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "tropic/errors.hpp"
#include "tropic/lattice.hpp"
#include "tropic/rational.hpp"

namespace tropic {

struct TropPoly {
    int n_vars = 0;
    std::map<IVec, Rational> terms;

    friend bool operator==(const TropPoly& a, const TropPoly& b) {
        return a.n_vars == b.n_vars && a.terms == b.terms;
    }
};

inline TropPoly make_poly(int n_vars, std::vector<std::pair<IVec, Rational>> ts) {
    if (n_vars < 1) fail(ErrorKind::ParseError, "n_vars must be positive");
    TropPoly p;
    p.n_vars = n_vars;
    for (auto& [e, c] : ts) {
        if ((int)e.size() != n_vars)
            fail(ErrorKind::ParseError, "exponent arity does not match n_vars");
        for (long long x : e)
            if (x < 0) fail(ErrorKind::ParseError, "negative exponent");
        if (!p.terms.emplace(std::move(e), std::move(c)).second)
            fail(ErrorKind::ParseError, "duplicate exponent");
    }
    return p;
}

inline void require_nonempty(const TropPoly& p) {
    if (p.terms.empty())
        fail(ErrorKind::EmptyPolynomial, "the -inf polynomial has no finite geometry");
}

inline long long degree(const TropPoly& p) {
    require_nonempty(p);
    long long deg = 0;
    for (const auto& [e, c] : p.terms) {
        long long s = 0;
        for (long long x : e) s += x;
        deg = std::max(deg, s);
    }
    return deg;
}

inline Rational evaluate(const TropPoly& p, const QVec& x) {
    require_nonempty(p);
    if ((int)x.size() != p.n_vars)
        fail(ErrorKind::WrongDimension, "evaluation point arity mismatch");
    bool first = true;
    Rational best;
    for (const auto& [e, c] : p.terms) {
        Rational v = c + dot(x, e);
        if (first || v > best) best = v;
        first = false;
    }
    return best;
}

inline std::set<IVec> argmax_terms(const TropPoly& p, const QVec& x) {
    Rational best = evaluate(p, x);
    std::set<IVec> out;
    for (const auto& [e, c] : p.terms)
        if (c + dot(x, e) == best) out.insert(e);
    return out;
}

// x is on the tropical hypersurface V(p) iff the maximum is attained twice
inline bool on_hypersurface(const TropPoly& p, const QVec& x) {
    return argmax_terms(p, x).size() >= 2;
}

inline LatticePolytope newton_polytope(const TropPoly& p) {
    require_nonempty(p);
    std::vector<IVec> supp;
    for (const auto& [e, c] : p.terms) supp.push_back(e);
    return make_lattice_polytope(supp);
}

inline TropPoly homogenize(const TropPoly& p, long long m) {
    if (m < degree(p)) fail(ErrorKind::DegreeTooSmall, "m below the degree");
    TropPoly h;
    h.n_vars = p.n_vars + 1;
    for (const auto& [e, c] : p.terms) {
        IVec he = e;
        long long s = 0;
        for (long long x : e) s += x;
        he.push_back(m - s);
        h.terms.emplace(std::move(he), c);
    }
    return h;
}

inline TropPoly dehomogenize(const TropPoly& p) {
    require_nonempty(p);
    if (p.n_vars < 2) fail(ErrorKind::WrongDimension, "nothing to dehomogenize");
    TropPoly q;
    q.n_vars = p.n_vars - 1;
    for (const auto& [e, c] : p.terms) {
        IVec qe(e.begin(), e.end() - 1);
        if (!q.terms.emplace(std::move(qe), c).second)
            fail(ErrorKind::ParseError, "dehomogenize: exponent collision");
    }
    return q;
}

// substitute 0 for the listed variables and drop them; coefficients of a
// residual exponent are the fiberwise maxima
inline TropPoly slice_restrict(const TropPoly& p, const std::set<int>& fixed_vars) {
    require_nonempty(p);
    for (int v : fixed_vars)
        if (v < 0 || v >= p.n_vars)
            fail(ErrorKind::WrongDimension, "fixed variable out of range");
    if ((int)fixed_vars.size() >= p.n_vars)
        fail(ErrorKind::WrongDimension, "cannot fix every variable");
    TropPoly q;
    q.n_vars = p.n_vars - (int)fixed_vars.size();
    for (const auto& [e, c] : p.terms) {
        IVec qe;
        for (int j = 0; j < p.n_vars; ++j)
            if (!fixed_vars.count(j)) qe.push_back(e[j]);
        auto [it, fresh] = q.terms.emplace(std::move(qe), c);
        if (!fresh && c > it->second) it->second = c;
    }
    return q;
}

// translate so that V(f) becomes the standard tropical plane V(x+y+z+0)
inline std::pair<QVec, TropPoly> normalize_to_standard_plane(const TropPoly& f,
                                                             const TropPoly& g) {
    const std::set<IVec> plane_support = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    std::set<IVec> supp;
    for (const auto& [e, c] : f.terms) supp.insert(e);
    if (f.n_vars != 3 || supp != plane_support)
        fail(ErrorKind::NotAPlane, "support must be {1, x, y, z}");
    const Rational& a0 = f.terms.at({0, 0, 0});
    QVec t = {a0 - f.terms.at({1, 0, 0}), a0 - f.terms.at({0, 1, 0}),
              a0 - f.terms.at({0, 0, 1})};
    require_nonempty(g);
    if (g.n_vars != 3) fail(ErrorKind::WrongDimension, "g must have 3 variables");
    TropPoly g2;
    g2.n_vars = 3;
    for (const auto& [e, c] : g.terms) g2.terms.emplace(e, c + dot(t, e));
    return {t, g2};
}

}  // namespace tropic
