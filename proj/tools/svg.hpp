#pragma once

#include <string>
#include <vector>

#include "kgwell/eigensolver.hpp"

namespace kgwell::cli {

/// Standalone SVG: the well V(y) as a polyline, each state's psi drawn
/// around a dashed baseline at its energy.
std::string render_svg(double m_bar, double v_bar, const std::vector<BoundState>& states,
                       double y_plot);

} // namespace kgwell::cli
