#pragma once

// JSON (de)serialization. All rationals travel as strings "p/q" (or "p"
// when integral) so output is exact and byte-stable; nlohmann::json keeps
// object keys sorted, which makes every dump deterministic.

#include <string>
#include <vector>

#include <json.hpp>

#include "tropic/curve.hpp"
#include "tropic/hypersurface.hpp"
#include "tropic/quarter_planes.hpp"
#include "tropic/search.hpp"
#include "tropic/skeleton.hpp"
#include "tropic/subdivision.hpp"
#include "tropic/trop_poly.hpp"

namespace tropic {

using Json = nlohmann::json;

inline Json rational_to_json(const Rational& r) { return format_rational(r); }

inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational((long long)j.get<int64_t>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    fail(ErrorKind::ParseError, "expected a rational as string or integer");
}

inline Json poly_to_json(const TropPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms) {
        Json t;
        t["exp"] = e;
        t["coef"] = rational_to_json(c);
        terms.push_back(std::move(t));
    }
    return Json{{"n_vars", p.n_vars}, {"terms", std::move(terms)}};
}

inline TropPoly poly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n_vars") || !j.contains("terms"))
        fail(ErrorKind::ParseError, "polynomial JSON needs n_vars and terms");
    if (!j["n_vars"].is_number_integer())
        fail(ErrorKind::ParseError, "n_vars must be an integer");
    std::vector<std::pair<IVec, Rational>> ts;
    if (!j["terms"].is_array()) fail(ErrorKind::ParseError, "terms must be an array");
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("exp") || !t.contains("coef"))
            fail(ErrorKind::ParseError, "term JSON needs exp and coef");
        if (!t["exp"].is_array()) fail(ErrorKind::ParseError, "exp must be an array");
        IVec e;
        for (const auto& x : t["exp"]) {
            if (!x.is_number_integer()) fail(ErrorKind::ParseError, "exponent must be integer");
            e.push_back(x.get<int64_t>());
        }
        ts.push_back({std::move(e), rational_from_json(t["coef"])});
    }
    return make_poly(j["n_vars"].get<int>(), std::move(ts));
}

inline Json cell_to_json(const SubdivCell& c) {
    Json members = Json::array();
    for (const auto& m : c.members) members.push_back(m);
    Json normal = Json::array();
    for (const auto& v : c.normal) normal.push_back(rational_to_json(v));
    return Json{{"members", std::move(members)},
                {"normal", std::move(normal)},
                {"offset", rational_to_json(c.offset)}};
}

inline Json subdivision_to_json(const Subdivision& s) {
    Json cells = Json::array();
    for (const auto& c : s.cells) cells.push_back(cell_to_json(c));
    return Json{{"ambient_dim", s.ambient_dim}, {"cells", std::move(cells)}};
}

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Smooth: return "Smooth";
        case Verdict::WeaklySmoothOnly: return "WeaklySmoothOnly";
        case Verdict::NotWeaklySmooth: return "NotWeaklySmooth";
    }
    fail(ErrorKind::Internal, "unknown verdict");
}

inline Json certificate_to_json(const SmoothnessCertificate& c) {
    Json j{{"verdict", verdict_name(c.verdict)}};
    j["witness"] = c.witness ? cell_to_json(*c.witness) : Json(nullptr);
    return j;
}

inline Verdict verdict_from_name(const std::string& s) {
    if (s == "Smooth") return Verdict::Smooth;
    if (s == "WeaklySmoothOnly") return Verdict::WeaklySmoothOnly;
    if (s == "NotWeaklySmooth") return Verdict::NotWeaklySmooth;
    fail(ErrorKind::ParseError, "unknown verdict: " + s);
}

inline Json qvec_to_json(const QVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(rational_to_json(x));
    return a;
}

inline QVec qvec_from_json(const Json& j) {
    if (!j.is_array()) fail(ErrorKind::ParseError, "expected an array of rationals");
    QVec v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

inline IVec ivec_from_json(const Json& j) {
    if (!j.is_array()) fail(ErrorKind::ParseError, "expected an integer array");
    IVec v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) fail(ErrorKind::ParseError, "expected an integer entry");
        v.push_back(x.get<int64_t>());
    }
    return v;
}

inline SubdivCell cell_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("members") || !j.contains("normal") || !j.contains("offset"))
        fail(ErrorKind::ParseError, "cell JSON needs members, normal, offset");
    SubdivCell c;
    if (!j["members"].is_array()) fail(ErrorKind::ParseError, "members must be an array");
    for (const auto& m : j["members"]) c.members.push_back(ivec_from_json(m));
    c.normal = qvec_from_json(j["normal"]);
    c.offset = rational_from_json(j["offset"]);
    return c;
}

inline Subdivision subdivision_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("cells"))
        fail(ErrorKind::ParseError, "subdivision JSON needs ambient_dim and cells");
    Subdivision s;
    s.ambient_dim = j["ambient_dim"].get<int>();
    if (!j["cells"].is_array()) fail(ErrorKind::ParseError, "cells must be an array");
    for (const auto& c : j["cells"]) s.cells.push_back(cell_from_json(c));
    return s;
}

// --------------------------------------------------- hypersurface complexes ----

inline const char* edge_shape_name(EdgeShape s) {
    switch (s) {
        case EdgeShape::Segment: return "segment";
        case EdgeShape::Ray: return "ray";
        case EdgeShape::Line: return "line";
    }
    fail(ErrorKind::Internal, "unknown edge shape");
}

inline EdgeShape edge_shape_from_name(const std::string& s) {
    if (s == "segment") return EdgeShape::Segment;
    if (s == "ray") return EdgeShape::Ray;
    if (s == "line") return EdgeShape::Line;
    fail(ErrorKind::ParseError, "unknown edge shape: " + s);
}

inline Json complex_to_json(const HypersurfaceComplex& hc) {
    Json edges = Json::array();
    for (const auto& e : hc.edges) {
        Json je;
        je["shape"] = edge_shape_name(e.shape);
        je["a"] = qvec_to_json(e.a);
        je["b"] = e.b ? qvec_to_json(*e.b) : Json(nullptr);
        je["dir"] = e.dir ? Json(*e.dir) : Json(nullptr);
        je["v0"] = e.v0;
        je["v1"] = e.v1;
        Json dm = Json::array();
        for (const auto& m : e.dual_members) dm.push_back(m);
        je["dual_members"] = std::move(dm);
        edges.push_back(std::move(je));
    }
    Json verts = Json::array();
    for (const auto& v : hc.vertices) verts.push_back(qvec_to_json(v));
    Json domains = Json::array();
    for (const auto& [e, cell] : hc.domains) {
        Json jd;
        jd["exp"] = e;
        Json cv = Json::array();
        for (const auto& p : cell.vertices) cv.push_back(qvec_to_json(p));
        jd["vertices"] = std::move(cv);
        Json cr = Json::array();
        for (const auto& r : cell.rays) cr.push_back(r);
        jd["rays"] = std::move(cr);
        jd["dim"] = cell.dim;
        domains.push_back(std::move(jd));
    }
    return Json{{"subdivision", subdivision_to_json(hc.subdivision)},
                {"vertices", std::move(verts)},
                {"edges", std::move(edges)},
                {"domains", std::move(domains)}};
}

inline HypersurfaceComplex complex_from_json(const Json& j) {
    for (const char* k : {"subdivision", "vertices", "edges", "domains"})
        if (!j.is_object() || !j.contains(k))
            fail(ErrorKind::ParseError, std::string("complex JSON needs ") + k);
    HypersurfaceComplex hc;
    hc.subdivision = subdivision_from_json(j["subdivision"]);
    for (const auto& v : j["vertices"]) hc.vertices.push_back(qvec_from_json(v));
    for (const auto& je : j["edges"]) {
        ComplexEdge e;
        e.shape = edge_shape_from_name(je.at("shape").get<std::string>());
        e.a = qvec_from_json(je.at("a"));
        if (!je.at("b").is_null()) e.b = qvec_from_json(je.at("b"));
        if (!je.at("dir").is_null()) e.dir = ivec_from_json(je.at("dir"));
        e.v0 = je.at("v0").get<int>();
        e.v1 = je.at("v1").get<int>();
        for (const auto& m : je.at("dual_members")) e.dual_members.push_back(ivec_from_json(m));
        hc.edges.push_back(std::move(e));
    }
    for (const auto& jd : j["domains"]) {
        PolyhedralCell2 cell;
        for (const auto& p : jd.at("vertices")) cell.vertices.push_back(qvec_from_json(p));
        for (const auto& r : jd.at("rays")) cell.rays.push_back(ivec_from_json(r));
        cell.dim = jd.at("dim").get<int>();
        hc.domains.emplace(ivec_from_json(jd.at("exp")), std::move(cell));
    }
    return hc;
}

// ---------------------------------------------------------- marked complexes ----

inline Json marked_complex_to_json(const MarkedComplex& k) {
    Json vp = Json::array();
    for (const auto& p : k.vertex_points) vp.push_back(p);
    Json ef = Json::array();
    for (const auto& e : k.edge_faces) ef.push_back(Json::array({e[0], e[1]}));
    return Json{{"base", subdivision_to_json(k.base)},
                {"vertex_points", std::move(vp)},
                {"edge_faces", std::move(ef)},
                {"marked_vertices", k.marked_vertices},
                {"marked_edges", k.marked_edges},
                {"marked_triangles", k.marked_triangles},
                {"a0", k.a0},
                {"b0", k.b0}};
}

inline MarkedComplex marked_complex_from_json(const Json& j) {
    for (const char* key : {"base", "vertex_points", "edge_faces", "marked_vertices",
                            "marked_edges", "marked_triangles", "a0", "b0"})
        if (!j.is_object() || !j.contains(key))
            fail(ErrorKind::ParseError, std::string("marked complex JSON needs ") + key);
    MarkedComplex k;
    k.base = subdivision_from_json(j["base"]);
    for (const auto& p : j["vertex_points"]) k.vertex_points.push_back(ivec_from_json(p));
    for (const auto& e : j["edge_faces"]) {
        if (!e.is_array() || e.size() != 2)
            fail(ErrorKind::ParseError, "edge face must list two points");
        k.edge_faces.push_back({ivec_from_json(e[0]), ivec_from_json(e[1])});
    }
    k.marked_vertices = j["marked_vertices"].get<std::vector<size_t>>();
    k.marked_edges = j["marked_edges"].get<std::vector<size_t>>();
    k.marked_triangles = j["marked_triangles"].get<std::vector<size_t>>();
    k.a0 = j["a0"].get<long long>();
    k.b0 = j["b0"].get<long long>();
    return k;
}

// ----------------------------------------------------------- curves, graphs ----

inline Json curve_to_json(const TropicalCurveGraph& c) {
    Json verts = Json::array();
    for (const auto& v : c.vertices)
        verts.push_back(Json{{"pos", qvec_to_json(v.pos)}, {"label", v.label}});
    Json edges = Json::array();
    for (const auto& e : c.edges) edges.push_back(Json::array({e[0], e[1]}));
    Json rays = Json::array();
    for (const auto& r : c.rays)
        rays.push_back(Json{{"v", r.v}, {"dir", r.dir}, {"label", r.label}});
    return Json{{"d", c.d},
                {"e", c.e},
                {"verdict", verdict_name(c.verdict)},
                {"vertices", std::move(verts)},
                {"edges", std::move(edges)},
                {"rays", std::move(rays)}};
}

inline TropicalCurveGraph curve_from_json(const Json& j) {
    for (const char* k : {"d", "e", "verdict", "vertices", "edges", "rays"})
        if (!j.is_object() || !j.contains(k))
            fail(ErrorKind::ParseError, std::string("curve JSON needs ") + k);
    TropicalCurveGraph c;
    c.d = j["d"].get<long long>();
    c.e = j["e"].get<long long>();
    c.verdict = verdict_from_name(j["verdict"].get<std::string>());
    for (const auto& jv : j["vertices"]) {
        CurveVertex v;
        v.pos = qvec_from_json(jv.at("pos"));
        v.label = jv.at("label").get<std::string>();
        c.vertices.push_back(std::move(v));
    }
    for (const auto& je : j["edges"]) {
        if (!je.is_array() || je.size() != 2)
            fail(ErrorKind::ParseError, "curve edge must be an index pair");
        c.edges.push_back({je[0].get<size_t>(), je[1].get<size_t>()});
    }
    for (const auto& jr : j["rays"]) {
        CurveRay r;
        r.v = jr.at("v").get<size_t>();
        r.dir = ivec_from_json(jr.at("dir"));
        r.label = jr.at("label").get<std::string>();
        c.rays.push_back(std::move(r));
    }
    return c;
}

inline Json multigraph_to_json(const Multigraph& m) {
    Json edges = Json::array();
    for (const auto& e : m.edges) edges.push_back(Json::array({e[0], e[1]}));
    return Json{{"vertices", m.n}, {"edges", std::move(edges)}};
}

inline Multigraph multigraph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        fail(ErrorKind::ParseError, "multigraph JSON needs vertices and edges");
    Multigraph m;
    m.n = j["vertices"].get<size_t>();
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            fail(ErrorKind::ParseError, "multigraph edge must be an index pair");
        m.edges.push_back({e[0].get<size_t>(), e[1].get<size_t>()});
    }
    return m;
}

// -------------------------------------------------------------- run reports ----

inline constexpr long long report_schema_version = 1;

inline const char* style_name(CoefficientStyle s) {
    return s == CoefficientStyle::Integer ? "integer" : "rational";
}

inline CoefficientStyle style_from_name(const std::string& s) {
    if (s == "integer") return CoefficientStyle::Integer;
    if (s == "rational") return CoefficientStyle::RationalDenominator;
    fail(ErrorKind::ParseError, "unknown coefficient style: " + s);
}

inline Json search_config_to_json(const SearchConfig& c) {
    return Json{{"seed", c.seed},           {"attempts", c.attempts},
                {"degree", c.degree},       {"bound", c.bound},
                {"style", style_name(c.style)}, {"denominator", c.denominator},
                {"require", verdict_name(c.require)}};
}

inline SearchConfig search_config_from_json(const Json& j) {
    for (const char* k : {"seed", "attempts", "degree", "bound", "style", "denominator", "require"})
        if (!j.is_object() || !j.contains(k))
            fail(ErrorKind::ParseError, std::string("search config JSON needs ") + k);
    SearchConfig c;
    c.seed = j["seed"].get<uint64_t>();
    c.attempts = j["attempts"].get<long long>();
    c.degree = j["degree"].get<long long>();
    c.bound = j["bound"].get<long long>();
    c.style = style_from_name(j["style"].get<std::string>());
    c.denominator = j["denominator"].get<long long>();
    c.require = verdict_from_name(j["require"].get<std::string>());
    return c;
}

inline Json instance_record_to_json(const InstanceRecord& r) {
    Json checks = Json::array();
    for (const auto& [name, pass] : r.checks)
        checks.push_back(Json{{"name", name}, {"pass", pass}});
    return Json{{"offset", r.offset},
                {"verdict", verdict_name(r.verdict)},
                {"certified", r.certified},
                {"error", r.error},
                {"counts", r.counts},
                {"genus", r.genus},
                {"s", r.s},
                {"t", r.t},
                {"skeleton_class", r.skeleton_class},
                {"checks", std::move(checks)}};
}

inline InstanceRecord instance_record_from_json(const Json& j) {
    InstanceRecord r;
    r.offset = j.at("offset").get<uint64_t>();
    r.verdict = verdict_from_name(j.at("verdict").get<std::string>());
    r.certified = j.at("certified").get<bool>();
    r.error = j.at("error").get<std::string>();
    auto cs = j.at("counts").get<std::vector<long long>>();
    if (cs.size() != 3) fail(ErrorKind::ParseError, "counts must have three entries");
    r.counts = {cs[0], cs[1], cs[2]};
    r.genus = j.at("genus").get<long long>();
    r.s = j.at("s").get<long long>();
    r.t = j.at("t").get<long long>();
    r.skeleton_class = j.at("skeleton_class").get<std::string>();
    for (const auto& c : j.at("checks"))
        r.checks.emplace_back(c.at("name").get<std::string>(), c.at("pass").get<bool>());
    return r;
}

inline Json report_to_json(const RunReport& r) {
    Json records = Json::array();
    for (const auto& rec : r.records) records.push_back(instance_record_to_json(rec));
    return Json{{"schema_version", report_schema_version},
                {"config", search_config_to_json(r.config)},
                {"records", std::move(records)},
                {"certified", r.certified},
                {"acceptance_rate", rational_to_json(r.acceptance_rate)},
                {"class_histogram", r.class_histogram},
                {"zero_lollipop", r.zero_lollipop},
                {"all_checks_pass", r.all_checks_pass}};
}

inline RunReport report_from_json(const Json& j) {
    for (const char* k : {"schema_version", "config", "records", "certified", "acceptance_rate",
                          "class_histogram", "zero_lollipop", "all_checks_pass"})
        if (!j.is_object() || !j.contains(k))
            fail(ErrorKind::ParseError, std::string("report JSON needs ") + k);
    if (j["schema_version"].get<long long>() != report_schema_version)
        fail(ErrorKind::ParseError, "unsupported report schema version");
    RunReport r;
    r.config = search_config_from_json(j["config"]);
    for (const auto& rec : j["records"]) r.records.push_back(instance_record_from_json(rec));
    r.certified = j["certified"].get<long long>();
    r.acceptance_rate = rational_from_json(j["acceptance_rate"]);
    r.class_histogram = j["class_histogram"].get<std::map<std::string, long long>>();
    r.zero_lollipop = j["zero_lollipop"].get<bool>();
    r.all_checks_pass = j["all_checks_pass"].get<bool>();
    return r;
}

}  // namespace tropic
