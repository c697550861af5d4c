// Command-line front end. Every subcommand reads polynomial (or object) JSON
// and writes JSON or SVG deterministically: identical inputs give identical
// bytes.
//
// Exit codes: 0 success, 1 usage/parse, 2 precondition violation, 3 internal.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tropic/json_io.hpp"
#include "tropic/svg.hpp"

namespace {

using namespace tropic;

int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::ParseError:
            return 1;
        case ErrorKind::Internal:
        case ErrorKind::GlueMismatch:
            return 3;
        default:
            return 2;
    }
}

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) fail(ErrorKind::ParseError, "invalid JSON in " + path);
    return j;
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) fail(ErrorKind::ParseError, "cannot write " + out_path);
    out << text << "\n";
}

QuarterPlaneId plane_from_name(const std::string& s) {
    for (QuarterPlaneId q : all_quarter_planes)
        if (s == quarter_plane_name(q)) return q;
    fail(ErrorKind::ParseError, "unknown quarter plane: " + s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tropical plane curves: subdivisions, smoothness, skeletons"};
    app.require_subcommand(1);

    std::string in_path, in_path_g, out_path, format = "json", restrict_plane;
    bool full_complex = false;

    auto* subdivide = app.add_subcommand("subdivide", "regular subdivision dual to V(p)");
    subdivide->add_option("input", in_path, "polynomial JSON")->required();
    subdivide->add_flag("--complex", full_complex, "emit the full hypersurface complex");
    subdivide->add_option("--format", format, "json or svg")
        ->check(CLI::IsMember({"json", "svg"}));
    subdivide->add_option("--out", out_path, "output file (default stdout)");

    auto* certify = app.add_subcommand("certify", "smoothness certificate for V(f) cap V(g)");
    certify->add_option("f", in_path, "plane polynomial JSON")->required();
    certify->add_option("g", in_path_g, "second polynomial JSON")->required();
    certify->add_option("--out", out_path, "output file (default stdout)");

    auto* curve = app.add_subcommand("curve", "assemble V(f) cap V(g) as a graph in R^3");
    curve->add_option("f", in_path, "plane polynomial JSON")->required();
    curve->add_option("g", in_path_g, "second polynomial JSON")->required();
    curve->add_option("--restrict", restrict_plane,
                      "emit the marked subcomplex of g on one quarter plane (XY..ZW)");
    curve->add_option("--out", out_path, "output file (default stdout)");

    auto* skeleton = app.add_subcommand("skeleton", "prune a curve to its skeleton multigraph");
    skeleton->add_option("input", in_path, "curve JSON")->required();
    skeleton->add_option("--out", out_path, "output file (default stdout)");

    SearchConfig cfg;
    std::string require_word = "smooth", style_word = "rational";
    auto* search = app.add_subcommand("search", "randomized certified-instance search");
    search->add_option("--seed", cfg.seed, "campaign seed");
    search->add_option("--attempts", cfg.attempts, "number of instances to try");
    search->add_option("--bound", cfg.bound, "coefficient (jitter) bound");
    search->add_option("--degree", cfg.degree, "degree of g");
    search->add_option("--require", require_word, "smooth or weak")
        ->check(CLI::IsMember({"smooth", "weak"}));
    search->add_option("--style", style_word, "integer or rational coefficients")
        ->check(CLI::IsMember({"integer", "rational"}));
    search->add_option("--denominator", cfg.denominator, "rational-style denominator");
    search->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));
    search->add_option("--out", out_path, "output file (default stdout)");

    auto* render = app.add_subcommand("render", "draw a 2D object (subdivision, marked "
                                                "subcomplex, or hypersurface complex)");
    render->add_option("input", in_path, "object JSON")->required();
    render->add_option("--format", format, "svg or json (validate and re-emit)")
        ->check(CLI::IsMember({"json", "svg"}));
    render->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (subdivide->parsed()) {
            TropPoly p = poly_from_json(read_json(in_path));
            if (full_complex) {
                HypersurfaceComplex hc = hypersurface_complex(p);
                write_output(out_path, format == "svg" ? render_complex_svg(hc)
                                                       : complex_to_json(hc).dump(2));
            } else {
                Subdivision s = regular_subdivision(p);
                write_output(out_path, format == "svg" ? render_subdivision_svg(s)
                                                       : subdivision_to_json(s).dump(2));
            }
        } else if (certify->parsed()) {
            SmoothnessCertificate cert = certify_smooth_ci(
                poly_from_json(read_json(in_path)), poly_from_json(read_json(in_path_g)));
            write_output(out_path, certificate_to_json(cert).dump(2));
        } else if (curve->parsed()) {
            TropPoly f = poly_from_json(read_json(in_path));
            TropPoly g = poly_from_json(read_json(in_path_g));
            if (!restrict_plane.empty()) {
                QuarterPlaneId q = plane_from_name(restrict_plane);
                MarkedComplex k = marked_subcomplex(restrict_to_quarter_plane(g, q).poly);
                write_output(out_path, marked_complex_to_json(k).dump(2));
                return 0;
            }
            SmoothnessCertificate cert = certify_smooth_ci(f, g);
            if (cert.verdict == Verdict::NotWeaklySmooth) {
                write_output(out_path, certificate_to_json(cert).dump(2));
                std::cerr << "not certified: the dual witness cell blocks assembly\n";
                return 2;
            }
            TropicalCurveGraph c = intersection_curve(f, g);
            CurveTopology topo = components_and_betti(c);
            Json j = curve_to_json(c);
            j["topology"] = Json{{"s", topo.s}, {"t", topo.t}, {"genus", topo.genus_of_c}};
            j["counts"] = count_cells(c);
            write_output(out_path, j.dump(2));
        } else if (skeleton->parsed()) {
            TropicalCurveGraph c = curve_from_json(read_json(in_path));
            Multigraph m = skeletonize(c);
            Json j = multigraph_to_json(m);
            j["genus"] = multigraph_genus(m);
            j["class"] = genus3_class_name(classify_genus3(m));
            write_output(out_path, j.dump(2));
        } else if (search->parsed()) {
            cfg.require = require_word == "smooth" ? Verdict::Smooth : Verdict::WeaklySmoothOnly;
            cfg.style = style_from_name(style_word);
            RunReport report = run_search(cfg);
            if (!report.zero_lollipop)
                std::cerr << "FINDING: a lollipop skeleton appeared; see the report records\n";
            write_output(out_path, report_to_json(report).dump(2));
        } else if (render->parsed()) {
            Json j = read_json(in_path);
            if (!j.is_object()) fail(ErrorKind::ParseError, "expected an object to render");
            if (j.contains("base")) {
                MarkedComplex k = marked_complex_from_json(j);
                write_output(out_path, format == "json" ? marked_complex_to_json(k).dump(2)
                                                        : render_marked_complex_svg(k));
            } else if (j.contains("domains")) {
                HypersurfaceComplex hc = complex_from_json(j);
                write_output(out_path, format == "json" ? complex_to_json(hc).dump(2)
                                                        : render_complex_svg(hc));
            } else if (j.contains("ambient_dim")) {
                Subdivision s = subdivision_from_json(j);
                write_output(out_path, format == "json" ? subdivision_to_json(s).dump(2)
                                                        : render_subdivision_svg(s));
            } else if (j.contains("rays")) {
                fail(ErrorKind::WrongDimension,
                     "curves live in R^3; render a --restrict output or a 2-variable complex");
            } else {
                fail(ErrorKind::ParseError, "unrecognized object JSON");
            }
        }
    } catch (const Error& e) {
        std::cerr << "error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
