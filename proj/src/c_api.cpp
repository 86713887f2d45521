#include "sfrope.h"

#include <cstring>
#include <string>

#include "sfrope/curve.hpp"
#include "sfrope/curve_io.hpp"
#include "sfrope/generator.hpp"
#include "sfrope/thickness.hpp"
#include "sfrope/verifier.hpp"

struct sfr_curve {
    sfrope::CurveSpec spec;
};

struct sfr_samples {
    sfrope::SampledCurve curve;
};

struct sfr_fingerprint {
    sfrope::Fingerprint fp;
};

namespace {

thread_local std::string g_last_error;

sfr_status status_from(const sfrope::Error& e) {
    g_last_error = e.what();
    switch (e.code()) {
        case sfrope::ErrorCode::io: return SFR_ERROR_IO;
        case sfrope::ErrorCode::not_coprime: return SFR_ERROR_NOT_COPRIME;
        case sfrope::ErrorCode::invalid_argument: return SFR_ERROR_INVALID_ARGUMENT;
        case sfrope::ErrorCode::parse: return SFR_ERROR_PARSE;
        case sfrope::ErrorCode::construction_failed: return SFR_ERROR_CONSTRUCTION;
        case sfrope::ErrorCode::degenerate_input: return SFR_ERROR_DEGENERATE;
        case sfrope::ErrorCode::internal: return SFR_ERROR_INTERNAL;
    }
    return SFR_ERROR_INTERNAL;
}

sfr_status fail_arg(const char* what) {
    g_last_error = what;
    return SFR_ERROR_INVALID_ARGUMENT;
}

template <typename Fn>
sfr_status guarded(Fn&& fn) {
    try {
        fn();
        return SFR_OK;
    } catch (const sfrope::Error& e) {
        return status_from(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SFR_ERROR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return SFR_ERROR_INTERNAL;
    }
}

} // namespace

extern "C" {

const char* sfr_error_message(void) { return g_last_error.c_str(); }

sfr_status sfr_generate_closed(int n, int k, sfr_curve** out, int* components_out) {
    if (!out) return fail_arg("out must not be NULL");
    *out = nullptr;
    if (components_out) *components_out = 0;
    try {
        *out = new sfr_curve{sfrope::generate_closed(n, k)};
        return SFR_OK;
    } catch (const sfrope::NotCoprimeError& e) {
        if (components_out) *components_out = e.component_count;
        return status_from(e);
    } catch (const sfrope::Error& e) {
        return status_from(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SFR_ERROR_INTERNAL;
    }
}

sfr_status sfr_generate_open(int n, int k, sfr_curve** out) {
    if (!out) return fail_arg("out must not be NULL");
    *out = nullptr;
    return guarded([&] { *out = new sfr_curve{sfrope::generate_open(n, k)}; });
}

void sfr_curve_free(sfr_curve* c) { delete c; }

sfr_status sfr_curve_arc_count(const sfr_curve* c, size_t* out) {
    if (!c || !out) return fail_arg("NULL argument");
    *out = c->spec.arcs.size();
    return SFR_OK;
}

sfr_status sfr_curve_is_closed(const sfr_curve* c, int* out) {
    if (!c || !out) return fail_arg("NULL argument");
    *out = c->spec.closed ? 1 : 0;
    return SFR_OK;
}

sfr_status sfr_curve_length(const sfr_curve* c, double* out) {
    if (!c || !out) return fail_arg("NULL argument");
    *out = c->spec.total_arc_length();
    return SFR_OK;
}

sfr_status sfr_curve_meta(const sfr_curve* c, int* family, int* n, int* k) {
    if (!c) return fail_arg("NULL curve");
    int fam = 0, nn = 0, kk = 0;
    if (c->spec.meta) {
        fam = c->spec.meta->family == sfrope::SolutionId::Family::closed ? 1 : 2;
        nn = c->spec.meta->n;
        kk = c->spec.meta->k;
    }
    if (family) *family = fam;
    if (n) *n = nn;
    if (k) *k = kk;
    return SFR_OK;
}

sfr_status sfr_curve_endpoint_geometry(const sfr_curve* c, int* kind, double* distance) {
    if (!c) return fail_arg("NULL curve");
    return guarded([&] {
        auto g = sfrope::endpoint_geometry(c->spec);
        if (kind) *kind = int(g.kind);
        if (distance) *distance = g.distance;
    });
}

sfr_status sfr_curve_check_c1_simplicity(const sfr_curve* c, size_t samples_per_arc,
                                         int* pass, double* max_tangent_mismatch,
                                         double* min_nonadjacent_separation) {
    if (!c) return fail_arg("NULL curve");
    return guarded([&] {
        auto rep = sfrope::c1_and_simplicity_check(c->spec, samples_per_arc);
        if (pass) *pass = rep.pass() ? 1 : 0;
        if (max_tangent_mismatch) *max_tangent_mismatch = rep.max_tangent_mismatch;
        if (min_nonadjacent_separation)
            *min_nonadjacent_separation = rep.min_nonadjacent_separation;
    });
}

sfr_status sfr_curve_save_json(const sfr_curve* c, const char* path) {
    if (!c || !path) return fail_arg("NULL argument");
    return guarded([&] { sfrope::save_curve_json(c->spec, path); });
}

sfr_status sfr_curve_load_json(const char* path, sfr_curve** out) {
    if (!path || !out) return fail_arg("NULL argument");
    *out = nullptr;
    return guarded([&] { *out = new sfr_curve{sfrope::load_curve_json(path)}; });
}

sfr_status sfr_curve_export_obj(const sfr_curve* c, const char* path, size_t samples_per_arc) {
    if (!c || !path) return fail_arg("NULL argument");
    return guarded(
        [&] { sfrope::write_text_file(path, sfrope::export_obj(c->spec, samples_per_arc)); });
}

sfr_status sfr_curve_export_ply(const sfr_curve* c, const char* path, size_t samples_per_arc) {
    if (!c || !path) return fail_arg("NULL argument");
    return guarded(
        [&] { sfrope::write_text_file(path, sfrope::export_ply(c->spec, samples_per_arc)); });
}

sfr_status sfr_curve_export_svg(const sfr_curve* c, const char* path) {
    if (!c || !path) return fail_arg("NULL argument");
    return guarded([&] { sfrope::write_text_file(path, sfrope::export_svg(c->spec)); });
}

sfr_status sfr_curve_sample(const sfr_curve* c, size_t total, sfr_samples** out) {
    if (!c || !out) return fail_arg("NULL argument");
    *out = nullptr;
    return guarded([&] { *out = new sfr_samples{sfrope::sample_curve(c->spec, total)}; });
}

sfr_status sfr_curve_sample_per_arc(const sfr_curve* c, size_t per_arc, sfr_samples** out) {
    if (!c || !out) return fail_arg("NULL argument");
    *out = nullptr;
    return guarded([&] { *out = new sfr_samples{sfrope::sample_curve_per_arc(c->spec, per_arc)}; });
}

sfr_status sfr_samples_create(const double* xyz, size_t count, int closed, sfr_samples** out) {
    if (!xyz || !out) return fail_arg("NULL argument");
    *out = nullptr;
    return guarded([&] {
        std::vector<sfrope::UnitVec> pts;
        pts.reserve(count);
        for (size_t i = 0; i < count; ++i)
            pts.emplace_back(sfrope::Vec3(xyz[3 * i], xyz[3 * i + 1], xyz[3 * i + 2]));
        *out = new sfr_samples{sfrope::SampledCurve::from_points(std::move(pts), closed != 0)};
    });
}

sfr_status sfr_samples_count(const sfr_samples* s, size_t* out) {
    if (!s || !out) return fail_arg("NULL argument");
    *out = s->curve.size();
    return SFR_OK;
}

sfr_status sfr_samples_get(const sfr_samples* s, size_t index, double* x, double* y, double* z) {
    if (!s) return fail_arg("NULL samples");
    if (index >= s->curve.size()) return fail_arg("sample index out of range");
    const auto& p = s->curve.points[index];
    if (x) *x = p.x();
    if (y) *y = p.y();
    if (z) *z = p.z();
    return SFR_OK;
}

void sfr_samples_free(sfr_samples* s) { delete s; }

sfr_status sfr_thickness(const sfr_samples* s, sfr_engine engine, sfr_thickness_report* out) {
    if (!s || !out) return fail_arg("NULL argument");
    return guarded([&] {
        sfrope::ThicknessReport rep = engine == SFR_ENGINE_BRUTEFORCE
                                          ? sfrope::thickness_bruteforce(s->curve)
                                          : sfrope::thickness_accelerated(s->curve);
        out->delta = rep.delta;
        out->spherical_theta = rep.spherical_theta;
        for (int i = 0; i < 3; ++i) out->witness[i] = rep.witness[i];
    });
}

sfr_status sfr_fgb_check(const sfr_samples* s, double theta, double tolerance,
                         sfr_fgb_report* out) {
    if (!s || !out) return fail_arg("NULL argument");
    return guarded([&] {
        sfrope::FgbReport rep = sfrope::fgb_check(s->curve, theta, tolerance);
        out->pass = rep.pass ? 1 : 0;
        out->worst_clearance = rep.worst_clearance;
        out->worst_sample = rep.worst_sample;
        out->worst_side = rep.worst_side;
        out->worst_violator = rep.worst_violator;
    });
}

sfr_status sfr_coverage(const sfr_samples* s, double theta, size_t grid_size,
                        double tolerance, sfr_coverage_report* out) {
    if (!s || !out) return fail_arg("NULL argument");
    return guarded([&] {
        auto grid = sfrope::sample_sphere_fibonacci(grid_size);
        sfrope::CoverageReport rep = sfrope::coverage_report(s->curve, theta, grid, tolerance);
        out->theta = rep.theta;
        out->grid_size = rep.grid_size;
        out->max_gap = rep.max_gap;
        out->covered_fraction = rep.covered_fraction;
        out->tube_area_estimate = rep.tube_area_estimate;
        out->curve_length = rep.curve_length;
        out->sphere_filling = rep.sphere_filling ? 1 : 0;
    });
}

sfr_status sfr_tube_area_check(const sfr_samples* s, double theta, size_t mc_points,
                               uint64_t seed, double* area_estimate, double* law_value,
                               double* relative_error) {
    if (!s) return fail_arg("NULL samples");
    return guarded([&] {
        auto res = sfrope::tube_area_law(s->curve, theta, mc_points, seed);
        if (area_estimate) *area_estimate = res.area_estimate;
        if (law_value) *law_value = res.law_value;
        if (relative_error) *relative_error = res.relative_error;
    });
}

sfr_status sfr_totient(int n, int* out) {
    if (!out) return fail_arg("NULL out");
    return guarded([&] { *out = sfrope::totient_scan(n); });
}

sfr_status sfr_admissible_k(int n, int* buffer, size_t capacity, size_t* count) {
    if (!count) return fail_arg("NULL count");
    return guarded([&] {
        auto e = sfrope::enumerate_solutions(n);
        *count = e.admissible_k.size();
        if (buffer) {
            size_t w = std::min(capacity, e.admissible_k.size());
            for (size_t i = 0; i < w; ++i) buffer[i] = e.admissible_k[i];
        }
    });
}

sfr_status sfr_seam_components(int n, int k, int* out) {
    if (!out) return fail_arg("NULL out");
    return guarded([&] { *out = sfrope::seam_permutation(n, k).component_count; });
}

sfr_status sfr_analytic_length(int family_is_open, int n, double* out) {
    if (!out) return fail_arg("NULL out");
    return guarded([&] {
        *out = sfrope::analytic_length(
            family_is_open ? sfrope::FamilyKind::open : sfrope::FamilyKind::closed, n);
    });
}

sfr_status sfr_fingerprint_compute(const sfr_curve* c, sfr_fingerprint** out) {
    if (!c || !out) return fail_arg("NULL argument");
    *out = nullptr;
    return guarded([&] { *out = new sfr_fingerprint{sfrope::congruence_fingerprint(c->spec)}; });
}

sfr_status sfr_fingerprint_equal(const sfr_fingerprint* a, const sfr_fingerprint* b, int* out) {
    if (!a || !b || !out) return fail_arg("NULL argument");
    *out = a->fp.equivalent(b->fp) ? 1 : 0;
    return SFR_OK;
}

void sfr_fingerprint_free(sfr_fingerprint* f) { delete f; }

} // extern "C"
