#pragma once

#include <string>

#include "tdpp/blockfactor.hpp"

namespace tdpp {

/// Unit square with the region's boxes shaded and labeled, and gridlines at
/// every box endpoint. The y axis points up. Output depends only on the region.
std::string render_region_svg(const Region& region);

}  // namespace tdpp
