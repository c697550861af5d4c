#pragma once

// Deterministic SVG writers for the 2D objects: dual subdivisions, marked
// subcomplexes, and hypersurface complexes. Every coordinate goes through
// decimal_string, so the output bytes depend only on the input object and
// never on floating-point formatting.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tropic/errors.hpp"
#include "tropic/hypersurface.hpp"
#include "tropic/quarter_planes.hpp"
#include "tropic/rational.hpp"
#include "tropic/subdivision.hpp"

namespace tropic {

namespace detail {

// Exact bounding frame. SVG's y axis points down, so emission negates y;
// the frame tracks mathematical coordinates and flips only when printing.
struct SvgFrame {
    Rational lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
    bool any = false;

    void grow(const Rational& x, const Rational& y) {
        if (!any) {
            lo_x = hi_x = x;
            lo_y = hi_y = y;
            any = true;
            return;
        }
        lo_x = std::min(lo_x, x);
        hi_x = std::max(hi_x, x);
        lo_y = std::min(lo_y, y);
        hi_y = std::max(hi_y, y);
    }
    void grow(const QVec& p) { grow(p[0], p[1]); }
    void grow(const IVec& p) { grow(Rational(p[0]), Rational(p[1])); }

    void pad() {
        if (!any) grow(Rational(0), Rational(0));
        Rational m = std::max(Rational(span() / 10), Rational(1));
        lo_x -= m;
        hi_x += m;
        lo_y -= m;
        hi_y += m;
    }

    Rational span() const { return std::max(Rational(hi_x - lo_x), Rational(hi_y - lo_y)); }

    // boundary point of a + t*dir, t >= 0, for a inside the frame
    QVec exit_point(const QVec& a, const IVec& dir) const {
        std::optional<Rational> t;
        auto shrink = [&](const Rational& cand) {
            if (!t || cand < *t) t = cand;
        };
        if (dir[0] > 0) shrink((hi_x - a[0]) / Rational(dir[0]));
        if (dir[0] < 0) shrink((lo_x - a[0]) / Rational(dir[0]));
        if (dir[1] > 0) shrink((hi_y - a[1]) / Rational(dir[1]));
        if (dir[1] < 0) shrink((lo_y - a[1]) / Rational(dir[1]));
        if (!t) fail(ErrorKind::ZeroVector, "ray with zero direction");
        Rational tv = std::max(*t, Rational(0));
        return {a[0] + tv * Rational(dir[0]), a[1] + tv * Rational(dir[1])};
    }
};

inline std::string svg_num(const Rational& v) { return decimal_string(v, 6); }

inline std::string svg_open(const SvgFrame& f) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + svg_num(f.lo_x) + " " +
           svg_num(-f.hi_y) + " " + svg_num(f.hi_x - f.lo_x) + " " + svg_num(f.hi_y - f.lo_y) +
           "\">\n";
}

inline std::string svg_line(const QVec& a, const QVec& b, const std::string& cls) {
    return "<line class=\"" + cls + "\" x1=\"" + svg_num(a[0]) + "\" y1=\"" + svg_num(-a[1]) +
           "\" x2=\"" + svg_num(b[0]) + "\" y2=\"" + svg_num(-b[1]) + "\"/>\n";
}

inline std::string svg_dot(const QVec& p, const Rational& r, const std::string& cls) {
    return "<circle class=\"" + cls + "\" cx=\"" + svg_num(p[0]) + "\" cy=\"" + svg_num(-p[1]) +
           "\" r=\"" + svg_num(r) + "\"/>\n";
}

// one <path> per cell; degenerate hulls degrade to a segment or a dot path
inline std::string svg_cell_path(const std::vector<IVec>& hull, const std::string& fill) {
    std::string d;
    for (size_t i = 0; i < hull.size(); ++i) {
        d += (i == 0 ? "M" : " L");
        d += svg_num(Rational(hull[i][0])) + " " + svg_num(Rational(-hull[i][1]));
    }
    if (hull.size() >= 3) d += " Z";
    return "<path fill=\"" + fill + "\" d=\"" + d + "\"/>\n";
}

inline std::string svg_style(const Rational& span) {
    std::string sw = svg_num(span / 200);
    std::string bold = svg_num(span * 3 / 200);
    return "<style>\npath{stroke:#334;stroke-width:" + sw +
           ";stroke-linejoin:round;}\nline{stroke:#334;stroke-width:" + sw +
           ";}\nline.stair{stroke:#b40;stroke-width:" + bold +
           ";stroke-linecap:round;}\nline.ray{stroke-dasharray:" + bold + ";}\ncircle{fill:#334;}\ncircle.mark{fill:#b40;}\n</style>\n";
}

inline std::string svg_hatch_defs(const Rational& span) {
    std::string w = svg_num(span / 40);
    std::string sw = svg_num(span / 120);
    return "<defs>\n<pattern id=\"hatch\" width=\"" + w + "\" height=\"" + w +
           "\" patternTransform=\"rotate(45)\" patternUnits=\"userSpaceOnUse\">\n<line x1=\"0\" "
           "y1=\"0\" x2=\"0\" y2=\"" +
           w + "\" stroke=\"#b40\" stroke-width=\"" + sw + "\"/>\n</pattern>\n</defs>\n";
}

}  // namespace detail

inline std::string render_subdivision_svg(const Subdivision& s) {
    if (s.ambient_dim != 2)
        fail(ErrorKind::WrongDimension, "SVG rendering draws 2-dimensional subdivisions");
    detail::SvgFrame f;
    for (const auto& c : s.cells)
        for (const auto& m : c.members) f.grow(m);
    f.pad();
    std::string out = detail::svg_open(f) + detail::svg_style(f.span());
    for (const auto& c : s.cells) out += detail::svg_cell_path(detail::ccw_hull(c.members), "#e8ecf7");
    out += "</svg>\n";
    return out;
}

inline std::string render_marked_complex_svg(const MarkedComplex& k) {
    if (k.base.ambient_dim != 2)
        fail(ErrorKind::WrongDimension, "SVG rendering draws 2-dimensional complexes");
    detail::SvgFrame f;
    for (const auto& p : k.vertex_points) f.grow(p);
    for (const auto& c : k.base.cells)
        for (const auto& m : c.members) f.grow(m);
    f.pad();
    std::set<size_t> hot(k.marked_triangles.begin(), k.marked_triangles.end());
    std::string out = detail::svg_open(f) + detail::svg_style(f.span()) +
                      detail::svg_hatch_defs(f.span());
    for (size_t i = 0; i < k.base.cells.size(); ++i)
        out += detail::svg_cell_path(detail::ccw_hull(k.base.cells[i].members),
                                     hot.count(i) ? "url(#hatch)" : "#f6f6f4");
    // the staircase boundary: marked 1-faces drawn over the fills
    for (size_t i : k.marked_edges) {
        const auto& e = k.edge_faces.at(i);
        out += detail::svg_line({Rational(e[0][0]), Rational(e[0][1])},
                                {Rational(e[1][0]), Rational(e[1][1])}, "stair");
    }
    Rational r = f.span() / 80;
    for (size_t i : k.marked_vertices) {
        const auto& p = k.vertex_points.at(i);
        out += detail::svg_dot({Rational(p[0]), Rational(p[1])}, r, "mark");
    }
    out += "</svg>\n";
    return out;
}

inline std::string render_complex_svg(const HypersurfaceComplex& hc) {
    if (hc.subdivision.ambient_dim != 2)
        fail(ErrorKind::WrongDimension, "SVG rendering draws plane curves");
    for (const auto& v : hc.vertices)
        if (v.size() != 2) fail(ErrorKind::WrongDimension, "SVG rendering draws plane curves");
    detail::SvgFrame f;
    for (const auto& v : hc.vertices) f.grow(v);
    for (const auto& e : hc.edges) {
        f.grow(e.a);
        if (e.b) f.grow(*e.b);
    }
    f.pad();
    std::string out = detail::svg_open(f) + detail::svg_style(f.span());
    for (const auto& e : hc.edges) {
        switch (e.shape) {
            case EdgeShape::Segment:
                out += detail::svg_line(e.a, *e.b, "seg");
                break;
            case EdgeShape::Ray:
                out += detail::svg_line(e.a, f.exit_point(e.a, *e.dir), "ray");
                break;
            case EdgeShape::Line: {
                IVec back{-(*e.dir)[0], -(*e.dir)[1]};
                out += detail::svg_line(f.exit_point(e.a, back), f.exit_point(e.a, *e.dir), "ray");
                break;
            }
        }
    }
    Rational r = f.span() / 100;
    for (const auto& v : hc.vertices) out += detail::svg_dot(v, r, "vx");
    out += "</svg>\n";
    return out;
}

}  // namespace tropic
