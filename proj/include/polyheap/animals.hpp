#pragma once

// Square-lattice animals and the 45-degree rotation to heaps of dimers:
// cell (i, j) becomes a dimer at pos i - j dropped in order of i + j.

#include <compare>
#include <vector>

#include "polyheap/heaps.hpp"

namespace polyheap {

struct Cell {
  int i = 0;
  int j = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Nonempty 4-connected set of cells, translated so min i = min j = 0 and
/// sorted lexicographically. Equality is modulo translation.
class Animal {
 public:
  /// Throws InvalidInput (empty, duplicate cells) or NotConnected.
  explicit Animal(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }

  friend bool operator==(const Animal&, const Animal&) = default;
  friend auto operator<=>(const Animal&, const Animal&) = default;

 private:
  std::vector<Cell> cells_;
};

/// V: rotate and let the dimers fall. Canonical heap.
Heap animal_to_heap(const Animal& a);

/// V-bar on strict connected heaps: pyramids map cell by cell; with several
/// factors the image of the pushed-up part is slid down the diagonal onto
/// the rightmost pyramid's cells until the two touch. Throws NotStrict,
/// NotConnected, ParityViolation, PushDownFailed.
Animal heap_to_animal(const Heap& h);

/// Some cell reaches every cell by north (0,+1) and east (+1,0) steps.
bool is_directed(const Animal& a);
bool is_stacked_directed(const Animal& a);

/// Directed animals with source (0,0); sorted.
std::vector<Animal> enumerate_directed_animals(int size);
/// All fixed polyominoes of the given size; sorted. Throws SizeTooLarge above 10.
std::vector<Animal> enumerate_animals(int size);

}  // namespace polyheap
