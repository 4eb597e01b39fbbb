#pragma once

// Witness path serialization: csv, Wavefront obj (3D only) and json.

#include <cstdio>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "cubegeo/surface.hpp"

namespace cubegeo {

enum class PathFormat { Json, Csv, Obj };

inline PathFormat parse_path_format(const std::string& s) {
  if (s == "json") return PathFormat::Json;
  if (s == "csv") return PathFormat::Csv;
  if (s == "obj") return PathFormat::Obj;
  throw std::invalid_argument("unknown path format '" + s + "' (json|csv|obj)");
}

/// 17 significant digits: enough to round-trip any double.
inline std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string path_to_csv(const GeodesicPath& path) {
  std::string out;
  for (const auto& v : path.vertices()) {
    for (std::size_t i = 0; i < v.dim(); ++i) out += (i ? "," : "") + format_number(v[i]);
    out += '\n';
  }
  return out;
}

inline std::string path_to_obj(const GeodesicPath& path) {
  if (path.dim() != 3) {
    throw std::invalid_argument("obj export needs a 3-dimensional path, got n = " +
                                std::to_string(path.dim()));
  }
  std::string out;
  for (const auto& v : path.vertices()) {
    out += "v " + format_number(v[0]) + " " + format_number(v[1]) + " " + format_number(v[2]) + "\n";
  }
  out += "l";
  for (std::size_t k = 1; k <= path.size(); ++k) out += " " + std::to_string(k);
  return out + "\n";
}

inline nlohmann::json path_to_json(const GeodesicPath& path) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const auto& v : path.vertices()) vertices.push_back(v.coords());
  return {{"vertices", vertices}, {"leg_lengths", path.leg_lengths()}, {"total", path.total_length()}};
}

inline std::string export_path(const GeodesicPath& path, PathFormat fmt) {
  switch (fmt) {
    case PathFormat::Csv: return path_to_csv(path);
    case PathFormat::Obj: return path_to_obj(path);
    case PathFormat::Json: break;
  }
  return path_to_json(path).dump(2) + "\n";
}

}  // namespace cubegeo
