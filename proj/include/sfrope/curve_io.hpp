#ifndef SFROPE_CURVE_IO_HPP
#define SFROPE_CURVE_IO_HPP

#include <string>

#include "sfrope/curve.hpp"

namespace sfrope {

/// CurveFileV1: JSON with format_version 1, optional family/n/k metadata,
/// the closed flag, and the exact arc list (axis, rho, e1, e2, t0, sweep).
/// Doubles are written as shortest round-trip decimals, so
/// parse(serialize(spec)) reproduces every field exactly and re-serialization
/// is byte-identical.
std::string serialize_curve_json(const CurveSpec& spec);
CurveSpec parse_curve_json(const std::string& text);

void save_curve_json(const CurveSpec& spec, const std::string& path);
CurveSpec load_curve_json(const std::string& path);

/// Wavefront OBJ polyline of the sampled curve (deterministic output).
std::string export_obj(const CurveSpec& spec, std::size_t samples_per_arc);

/// ASCII PLY tube mesh for display: 16-sided cross-sections of Euclidean
/// radius equal to the curve's thickness sin(theta) (from metadata when
/// present, else measured). Display-only; never part of a measurement path.
std::string export_ply(const CurveSpec& spec, std::size_t samples_per_arc);

/// SVG 1.1 with two orthographic hemisphere views (from +y and -y), the
/// great-circle outline, and the curve's arcs drawn as projected ellipse
/// segments. Deterministic: fixed float formatting, no timestamps.
std::string export_svg(const CurveSpec& spec);

void write_text_file(const std::string& path, const std::string& content);

} // namespace sfrope

#endif
