#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "packcert/packing/packing.hpp"

namespace packcert::shell {

struct SvgOptions {
  int rows = 1;
  int cols = 1;
  /// Contact segments to overlay, drawn in every tile.
  std::vector<packing::Contact> contacts;
  double scale = 100.0;
};

/// One circle per disc per tile, a fill per radius class and the outline of
/// the fundamental cell. Coordinates are printed with 6 decimals, so the
/// output is byte-stable. Throws std::invalid_argument for zero tiles.
std::string render_svg(const packing::PeriodicPacking& p, const SvgOptions& options = {});

}  // namespace packcert::shell
