#include "sfrope/curve_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sfrope/generator.hpp"
#include "sfrope/thickness.hpp"

namespace sfrope {

using nlohmann::json;

namespace {

json vec_to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

Vec3 vec_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() ||
        !j[2].is_number())
        throw ParseError(std::string(what) + " must be an array of three numbers");
    return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

double num_from_json(const json& j, const char* what) {
    if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
    return j.get<double>();
}

} // namespace

std::string serialize_curve_json(const CurveSpec& spec) {
    json root;
    root["format_version"] = 1;
    if (spec.meta) {
        root["family"] = spec.meta->family == SolutionId::Family::closed ? "closed" : "open";
        root["n"] = spec.meta->n;
        root["k"] = spec.meta->k;
    }
    root["closed"] = spec.closed;
    json arcs = json::array();
    for (const auto& a : spec.arcs) {
        json ja;
        ja["axis"] = vec_to_json(a.axis.vec());
        ja["rho"] = a.rho;
        ja["e1"] = vec_to_json(a.e1.vec());
        ja["e2"] = vec_to_json(a.e2.vec());
        ja["t0"] = a.t0;
        ja["sweep"] = a.sweep;
        arcs.push_back(std::move(ja));
    }
    root["arcs"] = std::move(arcs);
    return root.dump(2) + "\n";
}

CurveSpec parse_curve_json(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ParseError("curve file must be a JSON object");
    if (!root.contains("format_version") || !root["format_version"].is_number_integer() ||
        root["format_version"].get<int>() != 1)
        throw ParseError("unsupported or missing format_version (expected 1)");
    if (!root.contains("closed") || !root["closed"].is_boolean())
        throw ParseError("missing boolean field 'closed'");
    if (!root.contains("arcs") || !root["arcs"].is_array() || root["arcs"].empty())
        throw ParseError("missing non-empty array field 'arcs'");

    CurveSpec spec;
    spec.closed = root["closed"].get<bool>();
    if (root.contains("family")) {
        SolutionId id;
        std::string fam = root["family"].is_string() ? root["family"].get<std::string>() : "";
        if (fam == "closed") id.family = SolutionId::Family::closed;
        else if (fam == "open") id.family = SolutionId::Family::open;
        else throw ParseError("family must be 'closed' or 'open'");
        if (!root.contains("n") || !root["n"].is_number_integer())
            throw ParseError("family metadata requires integer 'n'");
        id.n = root["n"].get<int>();
        if (root.contains("k")) {
            if (!root["k"].is_number_integer()) throw ParseError("'k' must be an integer");
            id.k = root["k"].get<int>();
        }
        spec.meta = id;
    }
    try {
        for (const auto& ja : root["arcs"]) {
            if (!ja.is_object()) throw ParseError("each arc must be a JSON object");
            for (const char* key : {"axis", "rho", "e1", "e2", "t0", "sweep"})
                if (!ja.contains(key))
                    throw ParseError(std::string("arc is missing field '") + key + "'");
            spec.arcs.emplace_back(UnitVec(vec_from_json(ja["axis"], "axis")),
                                   num_from_json(ja["rho"], "rho"),
                                   UnitVec(vec_from_json(ja["e1"], "e1")),
                                   UnitVec(vec_from_json(ja["e2"], "e2")),
                                   num_from_json(ja["t0"], "t0"),
                                   num_from_json(ja["sweep"], "sweep"));
        }
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string("invalid arc data: ") + e.what());
    }
    return spec;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw IoError("failed writing '" + path + "'");
}

void save_curve_json(const CurveSpec& spec, const std::string& path) {
    write_text_file(path, serialize_curve_json(spec));
}

CurveSpec load_curve_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_curve_json(ss.str());
}

namespace {

std::string fmt(double v) {
    char buf[64];
    // normalize negative zero so output stays deterministic across code paths
    if (v == 0.0) v = 0.0;
    std::snprintf(buf, sizeof buf, "%.9f", v);
    return buf;
}

double display_tube_radius(const CurveSpec& spec) {
    if (spec.meta) {
        return spec.meta->family == SolutionId::Family::closed
                   ? closed_thickness(spec.meta->n)
                   : open_thickness(spec.meta->n);
    }
    // unlabeled curve: measure on a light sampling
    return thickness_accelerated(sample_curve(spec, 600)).delta;
}

} // namespace

std::string export_obj(const CurveSpec& spec, std::size_t samples_per_arc) {
    SampledCurve c = sample_curve_per_arc(spec, samples_per_arc);
    std::ostringstream os;
    os << "# polyline export, " << c.size() << " vertices, "
       << (spec.closed ? "closed" : "open") << " curve\n";
    for (const auto& p : c.points)
        os << "v " << fmt(p.x()) << " " << fmt(p.y()) << " " << fmt(p.z()) << "\n";
    os << "l";
    for (std::size_t i = 1; i <= c.size(); ++i) os << " " << i;
    if (spec.closed) os << " 1";
    os << "\n";
    return os.str();
}

std::string export_ply(const CurveSpec& spec, std::size_t samples_per_arc) {
    constexpr int kSides = 16;
    double radius = display_tube_radius(spec);

    // sample positions and exact tangents arc by arc
    std::vector<UnitVec> pts;
    std::vector<Vec3> tans;
    for (const auto& a : spec.arcs) {
        for (std::size_t j = 0; j < samples_per_arc; ++j) {
            double t = a.t0 + a.sweep * double(j) / double(samples_per_arc);
            pts.push_back(a.point_unchecked(t));
            Vec3 d = a.e2.vec() * std::cos(t) - a.e1.vec() * std::sin(t);
            tans.push_back(a.sweep < 0 ? -d : d);
        }
    }
    if (!spec.closed) {
        const Arc& a = spec.arcs.back();
        double t = a.t0 + a.sweep;
        pts.push_back(a.point_unchecked(t));
        Vec3 d = a.e2.vec() * std::cos(t) - a.e1.vec() * std::sin(t);
        tans.push_back(a.sweep < 0 ? -d : d);
    }

    std::size_t m = pts.size();
    std::size_t rings = m;
    std::size_t quads = spec.closed ? m : m - 1;
    std::ostringstream os;
    os << "ply\nformat ascii 1.0\n";
    os << "element vertex " << rings * kSides << "\n";
    os << "property float x\nproperty float y\nproperty float z\n";
    os << "element face " << quads * kSides * 2 << "\n";
    os << "property list uchar int vertex_indices\nend_header\n";
    for (std::size_t i = 0; i < m; ++i) {
        const Vec3& p = pts[i].vec();
        UnitVec tangent{tans[i]};
        // cross-section frame: radial direction and its in-sphere-tangent mate
        Vec3 n1 = p;
        Vec3 n2 = tangent.vec().cross(p);
        for (int s = 0; s < kSides; ++s) {
            double ang = 2.0 * kPi * s / kSides;
            Vec3 v = p + (n1 * std::cos(ang) + n2 * std::sin(ang)) * radius;
            os << fmt(v.x) << " " << fmt(v.y) << " " << fmt(v.z) << "\n";
        }
    }
    auto vid = [&](std::size_t ring, int side) {
        return long(ring % rings) * kSides + (side % kSides);
    };
    for (std::size_t q = 0; q < quads; ++q) {
        for (int s = 0; s < kSides; ++s) {
            long a0 = vid(q, s), a1 = vid(q, s + 1);
            long b0 = vid(q + 1, s), b1 = vid(q + 1, s + 1);
            os << "3 " << a0 << " " << b0 << " " << b1 << "\n";
            os << "3 " << a0 << " " << b1 << " " << a1 << "\n";
        }
    }
    return os.str();
}

namespace {

struct Vec2 {
    double x = 0.0, y = 0.0;
};

// One hemisphere view: orthographic projection along the view axis (+y or -y)
// into SVG coordinates (x right, z up on screen).
struct HemiView {
    double sign; // +1: seen from +y (keeps y >= 0); -1: from -y
    double cx, cy, scale;

    Vec2 project(const Vec3& p) const {
        // mirror x in the -y view so both views read like a globe turned around
        return {cx + scale * p.x * sign, cy - scale * p.z};
    }
};

void svg_ellipse_chunk(std::ostringstream& os, const HemiView& vw, const Arc& arc,
                       double ta, double tb) {
    Vec3 c3 = arc.axis.vec() * std::cos(arc.rho);
    Vec3 u3 = arc.e1.vec() * std::sin(arc.rho);
    Vec3 v3 = arc.e2.vec() * std::sin(arc.rho);
    Vec2 c = vw.project(c3);
    // projected conjugate semi-diameters, already in SVG coordinates
    Vec2 u{vw.scale * u3.x * vw.sign, -vw.scale * u3.z};
    Vec2 v{vw.scale * v3.x * vw.sign, -vw.scale * v3.z};

    auto at = [&](double t) {
        return Vec2{c.x + u.x * std::cos(t) + v.x * std::sin(t),
                    c.y + u.y * std::cos(t) + v.y * std::sin(t)};
    };
    Vec2 p1 = at(ta), p2 = at(tb);

    double a = u.x * u.x + v.x * v.x;
    double bq = u.x * u.y + v.x * v.y;
    double cq = u.y * u.y + v.y * v.y;
    double tr = a + cq;
    double disc = std::sqrt(std::max(0.0, (a - cq) * (a - cq) + 4.0 * bq * bq));
    double rx = std::sqrt(std::max(0.0, 0.5 * (tr + disc)));
    double ry = std::sqrt(std::max(0.0, 0.5 * (tr - disc)));
    if (ry < 1e-6) { // edge-on circle: the projection collapses to a segment
        os << "L " << fmt(p2.x) << " " << fmt(p2.y) << " ";
        return;
    }
    double phi_deg = 0.5 * std::atan2(2.0 * bq, a - cq) * 180.0 / kPi;
    double det = u.x * v.y - u.y * v.x;
    int sweep_flag = ((tb > ta) == (det > 0.0)) ? 1 : 0;
    os << "A " << fmt(rx) << " " << fmt(ry) << " " << fmt(phi_deg) << " 0 " << sweep_flag << " "
       << fmt(p2.x) << " " << fmt(p2.y) << " ";
}

// Sub-intervals of [t0, t0+sweep] where the arc lies on the view's hemisphere.
std::vector<std::pair<double, double>> visible_intervals(const Arc& arc, double sign) {
    double lo = std::min(arc.t0, arc.t0 + arc.sweep);
    double hi = std::max(arc.t0, arc.t0 + arc.sweep);
    // y(t) = A + B cos t + C sin t, visibility: sign * y(t) >= 0
    double A = sign * arc.axis.y() * std::cos(arc.rho);
    double B = sign * arc.e1.y() * std::sin(arc.rho);
    double C = sign * arc.e2.y() * std::sin(arc.rho);
    double amp = std::hypot(B, C);
    std::vector<std::pair<double, double>> out;
    if (amp < 1e-14) {
        if (A >= -1e-14) out.emplace_back(lo, hi);
        return out;
    }
    double ratio = -A / amp;
    if (ratio <= -1.0) { out.emplace_back(lo, hi); return out; }
    if (ratio >= 1.0) return out;
    double delta = std::atan2(C, B);
    double alpha = std::acos(ratio); // visible: t in [delta - alpha, delta + alpha] mod 2pi
    double start = delta - alpha;
    // cover [lo, hi] with shifted copies of the visible window
    double k0 = std::floor((lo - start) / (2.0 * kPi)) - 1.0;
    for (double k = k0;; k += 1.0) {
        double wa = start + 2.0 * kPi * k;
        double wb = wa + 2.0 * alpha;
        if (wa > hi) break;
        double s = std::max(lo, wa), e = std::min(hi, wb);
        if (e - s > 1e-12) out.emplace_back(s, e);
    }
    return out;
}

void svg_draw_arc(std::ostringstream& os, const HemiView& vw, const Arc& arc) {
    for (auto [sa, sb] : visible_intervals(arc, vw.sign)) {
        // respect the arc's own traversal direction within the interval
        double ta = arc.sweep >= 0 ? sa : sb;
        double tb = arc.sweep >= 0 ? sb : sa;
        int chunks = std::max(1, int(std::ceil(std::abs(tb - ta) / (kPi / 2.0))));
        Vec3 c3 = arc.axis.vec() * std::cos(arc.rho);
        Vec3 u3 = arc.e1.vec() * std::sin(arc.rho);
        Vec3 v3 = arc.e2.vec() * std::sin(arc.rho);
        Vec3 start3 = c3 + u3 * std::cos(ta) + v3 * std::sin(ta);
        Vec2 p = vw.project(start3);
        os << "M " << fmt(p.x) << " " << fmt(p.y) << " ";
        for (int q = 0; q < chunks; ++q) {
            double qa = ta + (tb - ta) * double(q) / chunks;
            double qb = ta + (tb - ta) * double(q + 1) / chunks;
            svg_ellipse_chunk(os, vw, arc, qa, qb);
        }
    }
}

} // namespace

std::string export_svg(const CurveSpec& spec) {
    const double R = 100.0;
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"520\" height=\"280\" "
          "viewBox=\"0 0 520 280\">\n";
    os << "  <rect width=\"520\" height=\"280\" fill=\"white\"/>\n";
    HemiView views[2] = {{+1.0, 130.0, 130.0, R}, {-1.0, 390.0, 130.0, R}};
    const char* labels[2] = {"view from +y (eastern hemisphere)",
                             "view from -y (western hemisphere)"};
    for (int i = 0; i < 2; ++i) {
        const HemiView& vw = views[i];
        os << "  <circle cx=\"" << fmt(vw.cx) << "\" cy=\"" << fmt(vw.cy) << "\" r=\"" << fmt(R)
           << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
        os << "  <path fill=\"none\" stroke=\"#1f4e99\" stroke-width=\"1.5\" d=\"";
        std::ostringstream path;
        for (const auto& a : spec.arcs) svg_draw_arc(path, vw, a);
        os << path.str() << "\"/>\n";
        os << "  <text x=\"" << fmt(vw.cx) << "\" y=\"255\" text-anchor=\"middle\" "
              "font-family=\"sans-serif\" font-size=\"12\" fill=\"#444444\">"
           << labels[i] << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace sfrope
