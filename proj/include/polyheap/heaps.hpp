#pragma once

// Heaps of dimers on the line. A dimer at `pos` occupies columns pos and
// pos+1, so two dimers overlap iff their positions differ by at most one.

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <unordered_map>
#include <variant>
#include <vector>

namespace polyheap {

struct Dimer {
  int pos = 0;
  int level = 0;

  friend bool operator==(const Dimer&, const Dimer&) = default;
  /// Canonical order: by level, then by position.
  friend std::strong_ordering operator<=>(const Dimer& a, const Dimer& b) {
    if (auto c = a.level <=> b.level; c != 0) return c;
    return a.pos <=> b.pos;
  }
};

constexpr bool overlaps(const Dimer& a, const Dimer& b) {
  return a.pos - b.pos <= 1 && b.pos - a.pos <= 1;
}

/// A fallen heap: every dimer above level 0 rests on an overlapping dimer one
/// level below. Dimers are kept sorted in canonical order at the positions
/// they were built with; equality is modulo horizontal translation.
class Heap {
 public:
  Heap() = default;
  /// Throws Collision on duplicate or overlapping same-level dimers and
  /// NotFallen on unsupported ones.
  explicit Heap(std::vector<Dimer> dimers);

  const std::vector<Dimer>& dimers() const noexcept { return dimers_; }
  std::size_t size() const noexcept { return dimers_.size(); }
  bool empty() const noexcept { return dimers_.empty(); }

  int min_pos() const;
  int max_pos() const;
  /// Level-0 dimers, left to right.
  std::vector<Dimer> minimal_dimers() const;
  bool contains(const Dimer& d) const;

  Heap translated(int dx) const;
  /// Translated so that the minimum position is 0.
  Heap canonical() const;

  friend bool operator==(const Heap& a, const Heap& b);

 private:
  struct Trusted {};
  Heap(std::vector<Dimer> dimers, Trusted) : dimers_(std::move(dimers)) {}

  std::vector<Dimer> dimers_;

  friend class HeapBuilder;
};

/// Drop board: each dropped dimer lands one level above the highest
/// overlapping dimer already placed, or at level 0.
class HeapBuilder {
 public:
  HeapBuilder() = default;
  explicit HeapBuilder(const Heap& base);

  int drop(int pos);
  std::size_t size() const noexcept { return dimers_.size(); }
  /// Heap in the builder's own frame (no translation).
  Heap build() const;

 private:
  int top(int pos) const;

  std::unordered_map<int, int> top_;
  std::vector<Dimer> dimers_;
};

/// Drops dimers in ascending (level hint, pos) order; result is canonical.
Heap refall(std::vector<Dimer> hints);
/// Same, but keeps positions untranslated.
Heap refall_in_frame(std::vector<Dimer> hints);

struct HeapFlags {
  bool strict = false;
  bool connected = false;
  bool pyramid = false;
  bool half_pyramid = false;
  bool stacked = false;

  friend bool operator==(const HeapFlags&, const HeapFlags&) = default;
};

bool is_strict(const Heap& h);
/// The occupied columns form one contiguous block.
bool is_connected(const Heap& h);
bool is_pyramid(const Heap& h);
bool is_half_pyramid(const Heap& h);
HeapFlags classify(const Heap& h);

/// Number of occupied columns.
int width(const Heap& h);
/// Columns strictly right of the minimal dimer; throws NotAPyramid.
int right_width(const Heap& p);

/// Drops `b`, shifted by `offset`, onto `h`. The result keeps h's frame.
Heap compose(const Heap& h, const Heap& b, int offset);

/// Dimers of `h` lying above some seed in the heap order (transitive
/// "overlaps and is higher"), seeds included. Returned in canonical order.
std::vector<Dimer> upward_closure(const Heap& h, std::span<const Dimer> seeds);

/// Left-to-right pyramidal factors P_1..P_k, each kept at its positions in
/// the input frame, and the gaps  l_i = min_pos(P_{i+1}) - minimal(P_i) - 1.
struct Factorization {
  std::vector<Heap> factors;
  std::vector<int> gaps;
};

/// Throws NotStrict / NotConnected.
Factorization pyramidal_factors(const Heap& h);

// Outcome of splitting a strict half-pyramid at its minimal dimer.
struct SingleDimer {};
struct EastSplit {        // nothing else in the minimal dimer's position
  Heap rest;              // refallen, minimal dimer one position left
};
struct NorthEastSplit {   // cut at the lowest other dimer in that position
  Heap lower;             // refallen, minimal dimer one position left
  Heap upper;             // refallen, minimal dimer in the same position
};
using HalfPyramidSplit = std::variant<SingleDimer, EastSplit, NorthEastSplit>;

/// Throws NotHalfPyramid / NotStrict.
HalfPyramidSplit split_half_pyramid(const Heap& q);

struct AlreadyHalf {};
struct PyramidSplit {
  Heap half;  // contains the minimal dimer, not refallen
  Heap rest;  // refallen pyramid, minimal dimer one position right
};
using PyramidDecomposition = std::variant<AlreadyHalf, PyramidSplit>;

/// Throws NotAPyramid / NotStrict.
PyramidDecomposition split_pyramid(const Heap& p);

/// Flags an enumerated heap must carry; unset fields are unconstrained.
struct HeapFilter {
  bool strict = false;
  bool connected = false;
  bool pyramid = false;
  bool half_pyramid = false;
  bool stacked = false;

  bool accepts(const HeapFlags& f) const;
};

inline constexpr int kMaxEnumeratedHeapSize = 9;

/// All fallen heaps of `size` dimers up to translation whose positions fit a
/// window of 2*size columns, filtered; canonical and sorted. Throws
/// SizeTooLarge above kMaxEnumeratedHeapSize.
std::vector<Heap> enumerate_heaps(int size, HeapFilter filter);

}  // namespace polyheap
