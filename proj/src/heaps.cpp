#include "polyheap/heaps.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>
#include <string>
#include <unordered_set>

#include "polyheap/error.hpp"

namespace polyheap {

namespace {

std::uint64_t key(int pos, int level) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(pos)) << 32) |
         static_cast<std::uint32_t>(level);
}

std::string show(const Dimer& d) {
  return "(" + std::to_string(d.pos) + "," + std::to_string(d.level) + ")";
}

// Membership lookups plus, per position, the dimers sorted by level.
class HeapIndex {
 public:
  explicit HeapIndex(const std::vector<Dimer>& dimers) {
    index_.reserve(dimers.size() * 2);
    for (std::size_t i = 0; i < dimers.size(); ++i) {
      index_.emplace(key(dimers[i].pos, dimers[i].level), i);
      columns_[dimers[i].pos].push_back({dimers[i].level, i});
    }
    for (auto& [pos, col] : columns_) std::sort(col.begin(), col.end());
  }

  bool contains(int pos, int level) const { return index_.count(key(pos, level)) != 0; }
  std::size_t find(int pos, int level) const {
    auto it = index_.find(key(pos, level));
    return it == index_.end() ? SIZE_MAX : it->second;
  }
  // (level, index) pairs at `pos`, ascending by level
  const std::vector<std::pair<int, std::size_t>>* column(int pos) const {
    auto it = columns_.find(pos);
    return it == columns_.end() ? nullptr : &it->second;
  }

 private:
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::map<int, std::vector<std::pair<int, std::size_t>>> columns_;
};

std::vector<Dimer> minus(const std::vector<Dimer>& all, const std::vector<Dimer>& removed) {
  std::vector<Dimer> out;
  out.reserve(all.size());
  std::set_difference(all.begin(), all.end(), removed.begin(), removed.end(), std::back_inserter(out));
  return out;
}

void require_strict(const Heap& h) {
  if (!is_strict(h)) throw Error(ErrorCode::NotStrict, "heap has a dimer directly above another");
}

}  // namespace

// ---------------------------------------------------------------------------
// Heap

Heap::Heap(std::vector<Dimer> dimers) : dimers_(std::move(dimers)) {
  std::sort(dimers_.begin(), dimers_.end());
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(dimers_.size() * 2);
  for (const Dimer& d : dimers_) {
    if (d.level < 0) throw Error(ErrorCode::NotFallen, "negative level at " + show(d));
    seen.insert(key(d.pos, d.level));
  }
  if (seen.size() != dimers_.size()) throw Error(ErrorCode::Collision, "duplicate dimer");
  for (const Dimer& d : dimers_) {
    if (seen.count(key(d.pos + 1, d.level)))
      throw Error(ErrorCode::Collision, "overlapping dimers at one level near " + show(d));
    if (d.level == 0) continue;
    const bool supported = seen.count(key(d.pos - 1, d.level - 1)) || seen.count(key(d.pos, d.level - 1)) ||
                           seen.count(key(d.pos + 1, d.level - 1));
    if (!supported) throw Error(ErrorCode::NotFallen, "unsupported dimer " + show(d));
  }
}

int Heap::min_pos() const {
  if (dimers_.empty()) return 0;
  return std::min_element(dimers_.begin(), dimers_.end(),
                          [](const Dimer& a, const Dimer& b) { return a.pos < b.pos; })
      ->pos;
}

int Heap::max_pos() const {
  if (dimers_.empty()) return 0;
  return std::max_element(dimers_.begin(), dimers_.end(),
                          [](const Dimer& a, const Dimer& b) { return a.pos < b.pos; })
      ->pos;
}

std::vector<Dimer> Heap::minimal_dimers() const {
  std::vector<Dimer> out;
  for (const Dimer& d : dimers_) {
    if (d.level != 0) break;
    out.push_back(d);
  }
  return out;
}

bool Heap::contains(const Dimer& d) const { return std::binary_search(dimers_.begin(), dimers_.end(), d); }

Heap Heap::translated(int dx) const {
  std::vector<Dimer> out = dimers_;
  for (Dimer& d : out) d.pos += dx;
  return Heap(std::move(out), Trusted{});
}

Heap Heap::canonical() const { return translated(-min_pos()); }

bool operator==(const Heap& a, const Heap& b) {
  if (a.size() != b.size()) return false;
  const int dx = b.min_pos() - a.min_pos();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.dimers_[i].level != b.dimers_[i].level || a.dimers_[i].pos + dx != b.dimers_[i].pos) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// HeapBuilder

HeapBuilder::HeapBuilder(const Heap& base) : dimers_(base.dimers()) {
  for (const Dimer& d : dimers_) {
    auto [it, inserted] = top_.emplace(d.pos, d.level);
    if (!inserted) it->second = std::max(it->second, d.level);
  }
}

int HeapBuilder::top(int pos) const {
  auto it = top_.find(pos);
  return it == top_.end() ? -1 : it->second;
}

int HeapBuilder::drop(int pos) {
  const int level = 1 + std::max({top(pos - 1), top(pos), top(pos + 1)});
  top_[pos] = level;
  dimers_.push_back({pos, level});
  return level;
}

Heap HeapBuilder::build() const {
  std::vector<Dimer> sorted = dimers_;
  std::sort(sorted.begin(), sorted.end());
  return Heap(std::move(sorted), Heap::Trusted{});
}

Heap refall_in_frame(std::vector<Dimer> hints) {
  std::sort(hints.begin(), hints.end());
  HeapBuilder b;
  for (const Dimer& d : hints) b.drop(d.pos);
  return b.build();
}

Heap refall(std::vector<Dimer> hints) { return refall_in_frame(std::move(hints)).canonical(); }

// ---------------------------------------------------------------------------
// Classification

bool is_strict(const Heap& h) {
  std::unordered_set<std::uint64_t> seen;
  for (const Dimer& d : h.dimers()) seen.insert(key(d.pos, d.level));
  for (const Dimer& d : h.dimers())
    if (seen.count(key(d.pos, d.level + 1))) return false;
  return true;
}

bool is_connected(const Heap& h) {
  if (h.empty()) return false;
  std::vector<int> pos;
  pos.reserve(h.size());
  for (const Dimer& d : h.dimers()) pos.push_back(d.pos);
  std::sort(pos.begin(), pos.end());
  for (std::size_t i = 1; i < pos.size(); ++i)
    if (pos[i] - pos[i - 1] > 2) return false;
  return true;
}

bool is_pyramid(const Heap& h) {
  return h.size() >= 1 && (h.size() == 1 || h.dimers()[1].level != 0);
}

bool is_half_pyramid(const Heap& h) {
  return is_pyramid(h) && h.dimers()[0].pos == h.max_pos();
}

HeapFlags classify(const Heap& h) {
  HeapFlags f;
  f.strict = is_strict(h);
  f.connected = is_connected(h);
  f.pyramid = is_pyramid(h);
  f.half_pyramid = is_half_pyramid(h);
  if (f.strict && f.connected) {
    const Factorization fac = pyramidal_factors(h);
    f.stacked = true;
    for (std::size_t i = 0; i + 1 < fac.factors.size(); ++i) {
      if (right_width(fac.factors[i]) < fac.gaps[i]) {
        f.stacked = false;
        break;
      }
    }
  }
  return f;
}

int width(const Heap& h) {
  std::set<int> columns;
  for (const Dimer& d : h.dimers()) {
    columns.insert(d.pos);
    columns.insert(d.pos + 1);
  }
  return static_cast<int>(columns.size());
}

int right_width(const Heap& p) {
  if (!is_pyramid(p)) throw Error(ErrorCode::NotAPyramid, "right width needs a single minimal dimer");
  return p.max_pos() - p.dimers()[0].pos;
}

Heap compose(const Heap& h, const Heap& b, int offset) {
  HeapBuilder builder(h);
  for (const Dimer& d : b.dimers()) builder.drop(d.pos + offset);
  return builder.build();
}

std::vector<Dimer> upward_closure(const Heap& h, std::span<const Dimer> seeds) {
  const auto& dimers = h.dimers();
  const HeapIndex index(dimers);
  std::vector<char> member(dimers.size(), 0);
  std::vector<std::size_t> work;
  auto add = [&](std::size_t i) {
    if (member[i]) return;
    member[i] = 1;
    work.push_back(i);
  };
  for (const Dimer& s : seeds) {
    const std::size_t i = index.find(s.pos, s.level);
    if (i == SIZE_MAX) throw Error(ErrorCode::InvalidInput, "closure seed " + show(s) + " not in heap");
    add(i);
  }
  while (!work.empty()) {
    const Dimer d = dimers[work.back()];
    work.pop_back();
    for (int x = d.pos - 1; x <= d.pos + 1; ++x) {
      const auto* col = index.column(x);
      if (!col) continue;
      auto it = std::upper_bound(col->begin(), col->end(), std::pair<int, std::size_t>{d.level, SIZE_MAX});
      for (; it != col->end(); ++it) {
        if (member[it->second]) break;  // everything above it is already queued
        add(it->second);
      }
    }
  }
  std::vector<Dimer> out;
  for (std::size_t i = 0; i < dimers.size(); ++i)
    if (member[i]) out.push_back(dimers[i]);
  return out;
}

Factorization pyramidal_factors(const Heap& h) {
  require_strict(h);
  if (!is_connected(h)) throw Error(ErrorCode::NotConnected, "projection has a gap");
  std::vector<Heap> reversed;
  Heap current = h;
  while (true) {
    const std::vector<Dimer> mins = current.minimal_dimers();
    if (mins.size() <= 1) {
      reversed.push_back(current);
      break;
    }
    const std::vector<Dimer> lifted =
        upward_closure(current, std::span<const Dimer>(mins.data(), mins.size() - 1));
    reversed.push_back(Heap(minus(current.dimers(), lifted)));
    current = refall_in_frame(lifted);
  }
  Factorization f;
  f.factors.assign(reversed.rbegin(), reversed.rend());
  for (std::size_t i = 0; i + 1 < f.factors.size(); ++i)
    f.gaps.push_back(f.factors[i + 1].min_pos() - f.factors[i].dimers()[0].pos - 1);
  return f;
}

HalfPyramidSplit split_half_pyramid(const Heap& q) {
  if (!is_half_pyramid(q)) throw Error(ErrorCode::NotHalfPyramid, "minimal dimer is not rightmost");
  require_strict(q);
  if (q.size() == 1) return SingleDimer{};
  const Dimer base = q.dimers()[0];
  std::vector<Dimer> above(q.dimers().begin() + 1, q.dimers().end());
  auto same_pos = std::find_if(above.begin(), above.end(), [&](const Dimer& d) { return d.pos == base.pos; });
  if (same_pos == above.end()) return EastSplit{refall_in_frame(above)};
  const Dimer cut = *same_pos;  // canonical order: the lowest one
  const std::vector<Dimer> upper = upward_closure(q, std::span<const Dimer>(&cut, 1));
  return NorthEastSplit{refall_in_frame(minus(above, upper)), refall_in_frame(upper)};
}

PyramidDecomposition split_pyramid(const Heap& p) {
  if (!is_pyramid(p)) throw Error(ErrorCode::NotAPyramid, "heap has several minimal dimers");
  require_strict(p);
  if (right_width(p) == 0) return AlreadyHalf{};
  const int target = p.dimers()[0].pos + 1;
  auto it = std::find_if(p.dimers().begin(), p.dimers().end(), [&](const Dimer& d) { return d.pos == target; });
  if (it == p.dimers().end()) {
    throw Error(ErrorCode::NotConnected, "pyramid has right width but nothing next to its minimal dimer");
  }
  const Dimer cut = *it;
  const std::vector<Dimer> upper = upward_closure(p, std::span<const Dimer>(&cut, 1));
  return PyramidSplit{Heap(minus(p.dimers(), upper)), refall_in_frame(upper)};
}

// ---------------------------------------------------------------------------
// Exhaustive oracle

bool HeapFilter::accepts(const HeapFlags& f) const {
  return (!strict || f.strict) && (!connected || f.connected) && (!pyramid || f.pyramid) &&
         (!half_pyramid || f.half_pyramid) && (!stacked || f.stacked);
}

namespace {

struct DimerVectorHash {
  std::size_t operator()(const std::vector<Dimer>& v) const noexcept {
    std::size_t h = v.size();
    for (const Dimer& d : v) h = h * 1000003u ^ key(d.pos, d.level);
    return h;
  }
};

}  // namespace

std::vector<Heap> enumerate_heaps(int size, HeapFilter filter) {
  if (size > kMaxEnumeratedHeapSize) {
    throw Error(ErrorCode::SizeTooLarge,
                "exhaustive heap enumeration is capped at size " + std::to_string(kMaxEnumeratedHeapSize));
  }
  if (size <= 0) return {};
  // Removing a maximal dimer keeps each layer inside the window, and these
  // properties survive that removal, so they may prune intermediate layers.
  const bool keep_strict = filter.strict || filter.stacked;
  const bool keep_pyramid = filter.pyramid || filter.half_pyramid;
  const bool keep_half = filter.half_pyramid;
  const int span_limit = 2 * size - 2;

  using Layer = std::unordered_set<std::vector<Dimer>, DimerVectorHash>;
  Layer layer{{Dimer{0, 0}}};
  for (int s = 1; s < size; ++s) {
    Layer next;
    for (const auto& dimers : layer) {
      int lo = INT_MAX, hi = INT_MIN, base_pos = dimers[0].pos;
      for (const Dimer& d : dimers) {
        lo = std::min(lo, d.pos);
        hi = std::max(hi, d.pos);
      }
      for (int x = hi - span_limit; x <= lo + span_limit; ++x) {
        int level = 0;
        bool below_same_pos = false;
        for (const Dimer& d : dimers) {
          if (d.pos - x <= 1 && x - d.pos <= 1) level = std::max(level, d.level + 1);
        }
        for (const Dimer& d : dimers)
          if (d.pos == x && d.level == level - 1) below_same_pos = true;
        if (keep_strict && below_same_pos) continue;
        if (keep_pyramid && level == 0) continue;
        if (keep_half && x > base_pos) continue;
        std::vector<Dimer> grown = dimers;
        grown.push_back({x, level});
        std::sort(grown.begin(), grown.end());
        const int shift = std::min(lo, x);
        for (Dimer& d : grown) d.pos -= shift;
        next.insert(std::move(grown));
      }
    }
    layer = std::move(next);
  }

  std::vector<std::vector<Dimer>> sorted(layer.begin(), layer.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Heap> out;
  for (auto& dimers : sorted) {
    Heap h(std::move(dimers));
    if (filter.accepts(classify(h))) out.push_back(std::move(h));
  }
  return out;
}

}  // namespace polyheap
