#pragma once

#include <string>
#include <vector>

#include "lamlab/alliance.hpp"
#include "lamlab/lamination.hpp"

namespace lamlab {

struct RenderOptions {
  enum class Geometry { Straight, Hyperbolic };

  Geometry geometry = Geometry::Straight;
  Rational stroke_width{1, 500};
  // Drawn after the leaves in a second style.
  std::vector<Chord> highlight;
};

// SVG 1.1 picture of the closed unit disk: circle outline, then leaves in
// canonical order. Angle x sits at (cos 2 pi x, sin 2 pi x); coordinates use
// fixed 9-decimal output so identical input gives identical bytes.
std::string to_svg(const FiniteLamination& lam, const RenderOptions& opts = {});

// grid_q x grid_q raster of the (t, s) chart: one cell per parameter pair,
// colored weak, strong, or crossing. Crossing cells are recomputed from the
// parameters; every valid cell needs a record. Throws InvalidArgument on
// empty input, off-grid or crossing records, and missing cells.
std::string survey_raster(const std::vector<SurveyRecord>& records, unsigned grid_q);

}  // namespace lamlab
