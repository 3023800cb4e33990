#pragma once

#include "srm/surface.hpp"

namespace srm {

inline constexpr const char* kSchemaVersion = "srm-v1";

/// Load a manifold definition file (JSON, schema "srm-v1").
/// Either {"builtin": "heisenberg", "n": 1} / {"builtin": "rototranslation"}
/// or explicit frame component expressions in the x1..xn grammar:
/// { "schema":"srm-v1", "kind":"manifold", "dim":3,
///   "horizontal_frame":[["1","0","-x2/2"],["0","1","x1/2"]],
///   "vertical_frame":[["0","0","1"]],
///   "rigidity_partition":[[1]], "rigid":true,
///   "dilation":{"weights":[2],"generator":["x1","x2","2*x3"]} }
ManifoldModel load_manifold_file(const std::string& path);

/// Load a surface definition file (JSON, schema "srm-v1"). Variants:
///   {"type":"level_set","expression":"x3 - x1*x2/2","domain":{"lo":[...],"hi":[...]}}
///   {"type":"bubble","L":1.0,"n":2}
///   {"type":"immersion","components":["x1","0","x2"],"domain":{...}}
///   {"type":"builtin","name":"vertical-plane-h1" | "roto-plane" | "sharp-example", ...}
Hypersurface load_surface_file(const std::string& path, const ManifoldModel& m);

ManifoldModel manifold_from_json_text(const std::string& text);
Hypersurface surface_from_json_text(const std::string& text, const ManifoldModel& m);

/// FNV-1a digest of a file's bytes, hex-encoded (report envelopes).
std::string file_digest(const std::string& path);

} // namespace srm
