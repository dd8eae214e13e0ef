#include "polyheap/bijection.hpp"

#include <algorithm>
#include <climits>
#include <string>
#include <variant>

#include "polyheap/error.hpp"

namespace polyheap {

namespace {

void require_mode(std::string_view tokens, PathMode mode) {
  try {
    validate(tokens, mode);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidPath, std::string(mode_name(mode)) + " path rejected (" + e.what() + ")");
  }
}

void omega_rec(const Heap& q, std::string& out) {
  const HalfPyramidSplit split = split_half_pyramid(q);
  if (const auto* e = std::get_if<EastSplit>(&split)) {
    out.push_back('F');
    omega_rec(e->rest, out);
  } else if (const auto* ne = std::get_if<NorthEastSplit>(&split)) {
    out.push_back('U');
    omega_rec(ne->lower, out);
    out.push_back('D');
    omega_rec(ne->upper, out);
  }
}

void psi_into(const Heap& p, std::string& out) {
  Heap cur = p;
  while (true) {
    PyramidDecomposition d = split_pyramid(cur);
    auto* s = std::get_if<PyramidSplit>(&d);
    if (!s) break;
    omega_rec(s->half, out);
    out.push_back('C');
    cur = std::move(s->rest);
  }
  omega_rec(cur, out);
}

// Drops a pyramid's dimers, token by token, with the minimal dimer at `start`.
// Works for cat0 stretches; the caller guarantees validity.
class PyramidStream {
 public:
  PyramidStream(HeapBuilder& board, int start) : board_(board), base_(start), c_(start) { drop(); }

  void feed(char t) {
    switch (t) {
      case 'F': --c_; break;
      case 'U':
        stack_.push_back(c_);
        --c_;
        break;
      case 'D':
        c_ = stack_.back();
        stack_.pop_back();
        break;
      case 'C':
        c_ = ++base_;
        break;
    }
    drop();
  }

 private:
  void drop() { board_.drop(c_); }

  HeapBuilder& board_;
  int base_;
  int c_;
  std::vector<int> stack_;
};

Heap stream_pyramid(std::string_view tokens) {
  HeapBuilder board;
  PyramidStream s(board, 0);
  for (char t : tokens) s.feed(t);
  return board.build();
}

}  // namespace

SegmentParse parse_segments(std::string_view tokens) {
  require_mode(tokens, PathMode::Cat);
  SegmentParse parse;
  std::vector<std::size_t> last_up;
  std::size_t begin = 0;
  int h = 0;
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    switch (tokens[k]) {
      case 'U':
        if (last_up.size() <= static_cast<std::size_t>(h)) last_up.resize(static_cast<std::size_t>(h) + 1);
        last_up[static_cast<std::size_t>(h)] = k;
        ++h;
        break;
      case 'D': --h; break;
      case 'C':
        if (h >= 1) {
          Segment s;
          s.begin = begin;
          s.catastrophe = k;
          s.gap = h;
          s.climbs.assign(last_up.begin(), last_up.begin() + h);
          parse.segments.push_back(std::move(s));
          begin = k + 1;
        }
        h = 0;
        break;
      default: break;
    }
  }
  parse.tail_begin = begin;
  return parse;
}

CatPath omega(const Heap& q) {
  CatPath path;
  omega_rec(q, path.tokens);
  return path;
}

Heap omega_inv(std::string_view tokens) {
  require_mode(tokens, PathMode::Plain);
  return stream_pyramid(tokens);
}

CatPath psi(const Heap& p) {
  CatPath path;
  psi_into(p, path.tokens);
  return path;
}

Heap psi_inv(std::string_view tokens) {
  require_mode(tokens, PathMode::Cat0);
  return stream_pyramid(tokens);
}

CatPath phi(const Heap& h) {
  if (!classify(h).stacked) throw Error(ErrorCode::NotStacked, "heap is not a stacked pyramid");
  const Factorization f = pyramidal_factors(h);
  CatPath path;
  psi_into(f.factors.back(), path.tokens);
  for (std::size_t i = f.factors.size() - 1; i-- > 0;) {
    Heap cur = f.factors[i];
    for (int j = 0; j < f.gaps[i]; ++j) {
      PyramidDecomposition d = split_pyramid(cur);
      auto* s = std::get_if<PyramidSplit>(&d);
      if (!s) {
        throw Error(ErrorCode::RightWidthTooSmall,
                    "factor " + std::to_string(i + 1) + " has right width below its gap " + std::to_string(f.gaps[i]));
      }
      path.tokens.push_back('U');
      omega_rec(s->half, path.tokens);
      cur = std::move(s->rest);
    }
    path.tokens.push_back('C');
    psi_into(cur, path.tokens);
  }
  return path;
}

Heap phi_inv(std::string_view tokens) {
  const SegmentParse parse = parse_segments(tokens);
  auto stretch = [&](std::size_t from, std::size_t to) { return tokens.substr(from, to - from); };
  const std::size_t first_end = parse.segments.empty() ? tokens.size() : parse.segments[0].climbs[0];
  Heap acc = stream_pyramid(stretch(0, first_end));
  int left = acc.min_pos();
  for (std::size_t s = 0; s < parse.segments.size(); ++s) {
    const Segment& seg = parse.segments[s];
    const int gap = seg.gap;
    const int m = left - gap - 1;
    auto piece_end = [&](int j) { return j + 1 < gap ? seg.climbs[static_cast<std::size_t>(j) + 1] : seg.catastrophe; };
    Heap factor = stream_pyramid(stretch(seg.climbs[0] + 1, piece_end(0))).translated(m);
    for (int j = 1; j < gap; ++j) {
      factor = compose(factor, stream_pyramid(stretch(seg.climbs[static_cast<std::size_t>(j)] + 1, piece_end(j))), m + j);
    }
    const std::size_t next_end = s + 1 < parse.segments.size() ? parse.segments[s + 1].climbs[0] : tokens.size();
    factor = compose(factor, stream_pyramid(stretch(seg.catastrophe + 1, next_end)), m + gap);
    left = factor.min_pos();
    acc = compose(acc, factor, 0);
  }
  return acc.canonical();
}

Heap phi_inv_streaming(std::string_view tokens) {
  const SegmentParse parse = parse_segments(tokens);
  // role[k]: 0 ordinary token, 1 opens a new factor, 2 later climb, 3 high C
  std::vector<char> role(tokens.size(), 0);
  std::vector<int> gap_at(tokens.size(), 0);
  for (const Segment& seg : parse.segments) {
    role[seg.climbs[0]] = 1;
    gap_at[seg.climbs[0]] = seg.gap;
    for (std::size_t j = 1; j < seg.climbs.size(); ++j) role[seg.climbs[j]] = 2;
    role[seg.catastrophe] = 3;
  }
  HeapBuilder board;
  int base = 0, c = 0;
  int factor_left = 0;
  std::vector<int> stack;
  auto drop = [&] {
    board.drop(c);
    factor_left = std::min(factor_left, c);
  };
  drop();
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    const char t = tokens[k];
    if (role[k] == 1) {
      base = c = factor_left - gap_at[k] - 1;
      factor_left = INT_MAX;
      stack.clear();
    } else if (role[k] == 2 || role[k] == 3 || t == 'C') {
      c = ++base;
    } else if (t == 'F') {
      --c;
    } else if (t == 'U') {
      stack.push_back(c);
      --c;
    } else {
      c = stack.back();
      stack.pop_back();
    }
    drop();
  }
  return board.build().canonical();
}

}  // namespace polyheap
