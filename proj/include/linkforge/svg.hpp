#pragma once

#include <optional>
#include <string>

#include "linkforge/collision.hpp"

namespace linkforge {

struct RenderOptions {
  std::optional<double> t;  // pose sample; none = trace only
  bool at_inf = false;      // render the limit pose instead of t
  bool trace = false;       // overlay the pen point's curve
  int trace_samples = 720;
};

// One SVG frame. The viewBox is fixed across frames: union of all joint
// trajectories' bounding boxes, padded 10%. Coordinates use 12
// significant digits. Layer assignment (when given) maps to brightness:
// lower layers darker.
std::string render_svg(const Linkage& l,
                       const std::optional<LayerAssignment>& layers,
                       const RenderOptions& opt);

}  // namespace linkforge
