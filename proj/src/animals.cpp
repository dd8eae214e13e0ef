#include "polyheap/animals.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <string>
#include <unordered_set>

#include "polyheap/error.hpp"

namespace polyheap {

namespace {

std::uint64_t key(const Cell& c) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.i)) << 32) | static_cast<std::uint32_t>(c.j);
}

using CellSet = std::unordered_set<std::uint64_t>;

CellSet to_set(const std::vector<Cell>& cells) {
  CellSet s;
  s.reserve(cells.size() * 2);
  for (const Cell& c : cells) s.insert(key(c));
  return s;
}

constexpr Cell kSteps[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

bool connected(const std::vector<Cell>& cells) {
  const CellSet all = to_set(cells);
  CellSet seen{key(cells[0])};
  std::vector<Cell> work{cells[0]};
  while (!work.empty()) {
    const Cell c = work.back();
    work.pop_back();
    for (const Cell& s : kSteps) {
      const Cell n{c.i + s.i, c.j + s.j};
      if (all.count(key(n)) && seen.insert(key(n)).second) work.push_back(n);
    }
  }
  return seen.size() == cells.size();
}

std::vector<Cell> normalized(std::vector<Cell> cells) {
  int mi = INT_MAX, mj = INT_MAX;
  for (const Cell& c : cells) {
    mi = std::min(mi, c.i);
    mj = std::min(mj, c.j);
  }
  for (Cell& c : cells) {
    c.i -= mi;
    c.j -= mj;
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

int hint(const Cell& c) { return c.i + c.j; }

// Cells whose rotation reproduces `h` in its own frame (pos = i - j).
std::vector<Cell> cells_in_frame(const Heap& h) {
  const std::vector<Dimer> mins = h.minimal_dimers();
  if (mins.size() == 1) {
    const int m = mins[0].pos;
    std::vector<Cell> out;
    out.reserve(h.size());
    for (const Dimer& d : h.dimers()) {
      const int s = d.level + m;  // i + j
      if ((s + d.pos) % 2 != 0) {
        throw Error(ErrorCode::ParityViolation, "dimer (" + std::to_string(d.pos) + "," + std::to_string(d.level) +
                                                    ") has the wrong parity for its pyramid");
      }
      out.push_back({(s + d.pos) / 2, (s - d.pos) / 2});
    }
    return out;
  }

  const std::vector<Dimer> lifted = upward_closure(h, std::span<const Dimer>(mins.data(), mins.size() - 1));
  std::vector<Dimer> bottom;
  std::set_difference(h.dimers().begin(), h.dimers().end(), lifted.begin(), lifted.end(), std::back_inserter(bottom));
  const std::vector<Cell> upper = cells_in_frame(refall_in_frame(lifted));
  const std::vector<Cell> lower = cells_in_frame(Heap(bottom));

  const CellSet fixed = to_set(lower);
  int lower_min = INT_MAX, lower_max = INT_MIN, upper_min = INT_MAX, upper_max = INT_MIN;
  for (const Cell& c : lower) {
    lower_min = std::min(lower_min, hint(c));
    lower_max = std::max(lower_max, hint(c));
  }
  for (const Cell& c : upper) {
    upper_min = std::min(upper_min, hint(c));
    upper_max = std::max(upper_max, hint(c));
  }

  // Sliding by t along (1,1) keeps every position and raises hints by 2t.
  for (int t = (lower_max - upper_min) / 2 + 2;; --t) {
    if (upper_max + 2 * t < lower_min - 1) {
      throw Error(ErrorCode::PushDownFailed, "pushed-up part slid past the rightmost pyramid");
    }
    bool touching = false;
    for (const Cell& c : upper) {
      const Cell moved{c.i + t, c.j + t};
      if (fixed.count(key(moved))) {
        throw Error(ErrorCode::PushDownFailed, "pushed-up part overlapped before touching");
      }
      for (const Cell& s : kSteps) {
        if (fixed.count(key({moved.i + s.i, moved.j + s.j}))) touching = true;
      }
    }
    if (touching) {
      std::vector<Cell> out = lower;
      for (const Cell& c : upper) out.push_back({c.i + t, c.j + t});
      return out;
    }
  }
}

template <class Grow>
std::vector<Animal> grow_layers(int size, Grow grow) {
  if (size <= 0) return {};
  std::set<std::vector<Cell>> layer{{Cell{0, 0}}};
  for (int s = 1; s < size; ++s) {
    std::set<std::vector<Cell>> next;
    for (const auto& cells : layer) {
      const CellSet present = to_set(cells);
      std::set<Cell> candidates;
      for (const Cell& c : cells) grow(c, candidates);
      for (const Cell& n : candidates) {
        if (present.count(key(n))) continue;
        std::vector<Cell> grown = cells;
        grown.push_back(n);
        next.insert(normalized(std::move(grown)));
      }
    }
    layer = std::move(next);
  }
  std::vector<Animal> out;
  out.reserve(layer.size());
  for (const auto& cells : layer) out.emplace_back(cells);
  return out;
}

}  // namespace

Animal::Animal(std::vector<Cell> cells) {
  if (cells.empty()) throw Error(ErrorCode::InvalidInput, "animal has no cells");
  cells_ = normalized(std::move(cells));
  if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end()) {
    throw Error(ErrorCode::InvalidInput, "duplicate cell");
  }
  if (!connected(cells_)) throw Error(ErrorCode::NotConnected, "cells are not 4-connected");
}

Heap animal_to_heap(const Animal& a) {
  std::vector<Dimer> hints;
  hints.reserve(a.size());
  for (const Cell& c : a.cells()) hints.push_back({c.i - c.j, c.i + c.j});
  return refall(std::move(hints));
}

Animal heap_to_animal(const Heap& h) {
  if (h.empty()) throw Error(ErrorCode::InvalidInput, "empty heap");
  if (!is_strict(h)) throw Error(ErrorCode::NotStrict, "heap has a dimer directly above another");
  if (!is_connected(h)) throw Error(ErrorCode::NotConnected, "projection has a gap");
  return Animal(cells_in_frame(h));
}

bool is_directed(const Animal& a) {
  const auto& cells = a.cells();
  int low = INT_MAX;
  for (const Cell& c : cells) low = std::min(low, hint(c));
  std::vector<Cell> sources;
  for (const Cell& c : cells)
    if (hint(c) == low) sources.push_back(c);
  if (sources.size() != 1) return false;
  const CellSet all = to_set(cells);
  CellSet seen{key(sources[0])};
  std::vector<Cell> work{sources[0]};
  while (!work.empty()) {
    const Cell c = work.back();
    work.pop_back();
    for (const Cell& n : {Cell{c.i + 1, c.j}, Cell{c.i, c.j + 1}}) {
      if (all.count(key(n)) && seen.insert(key(n)).second) work.push_back(n);
    }
  }
  return seen.size() == cells.size();
}

bool is_stacked_directed(const Animal& a) {
  const Heap h = animal_to_heap(a);
  if (!classify(h).stacked) return false;
  return heap_to_animal(h) == a;
}

std::vector<Animal> enumerate_directed_animals(int size) {
  return grow_layers(size, [](const Cell& c, std::set<Cell>& out) {
    out.insert({c.i + 1, c.j});
    out.insert({c.i, c.j + 1});
  });
}

std::vector<Animal> enumerate_animals(int size) {
  if (size > 10) throw Error(ErrorCode::SizeTooLarge, "polyomino enumeration is capped at size 10");
  return grow_layers(size, [](const Cell& c, std::set<Cell>& out) {
    for (const Cell& s : kSteps) out.insert({c.i + s.i, c.j + s.j});
  });
}

}  // namespace polyheap
