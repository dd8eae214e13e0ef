#pragma once

// Drawings of paths, heaps and animals. SVG output commits to structure
// only: one polyline per path (catastrophes as extra lines of class
// "catastrophe"), one rect of class "dimer" per dimer, one rect of class
// "cell" per animal cell.

#include <string>

#include "polyheap/io.hpp"

namespace polyheap {

std::string render_svg(const Object& o);
std::string render_ascii(const Object& o);

}  // namespace polyheap
