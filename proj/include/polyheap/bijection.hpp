#pragma once

// Half-pyramids <-> Motzkin excursions (omega), pyramids <-> excursions with
// catastrophes at altitude 0 (psi), stacked heaps <-> excursions with
// catastrophes (phi).

#include <string>
#include <string_view>
#include <vector>

#include "polyheap/heaps.hpp"
#include "polyheap/paths.hpp"

namespace polyheap {

/// One stretch of a cat-mode path ending in a catastrophe taken at altitude
/// gap >= 1. Indices point into the full token string.
struct Segment {
  std::size_t begin = 0;        // first token of the stretch
  std::size_t catastrophe = 0;  // index of the closing high C
  int gap = 0;                  // its altitude
  /// climbs[j]: the last step from altitude j to j+1 before the closing C.
  std::vector<std::size_t> climbs;
};

struct SegmentParse {
  std::vector<Segment> segments;  // left to right; one per high catastrophe
  std::size_t tail_begin = 0;     // start of the trailing stretch (no high C)
};

/// Throws InvalidPath unless `tokens` is a cat-mode excursion.
SegmentParse parse_segments(std::string_view tokens);

/// Strict half-pyramid -> plain excursion of length size-1.
CatPath omega(const Heap& q);
/// Minimal dimer at position 0. Throws InvalidPath.
Heap omega_inv(std::string_view tokens);

/// Strict pyramid -> cat0 excursion; one C per column of right width.
CatPath psi(const Heap& p);
/// Minimal dimer at position 0. Throws InvalidPath.
Heap psi_inv(std::string_view tokens);

/// Stacked heap -> cat excursion of length size-1. Throws NotStacked, or
/// RightWidthTooSmall if a factor runs out of half-pyramids.
CatPath phi(const Heap& h);
/// Rebuilds each pyramidal factor on its own and composes them. Canonical.
Heap phi_inv(std::string_view tokens);
/// Same heap, one drop per token into a single board. Canonical.
Heap phi_inv_streaming(std::string_view tokens);

}  // namespace polyheap
