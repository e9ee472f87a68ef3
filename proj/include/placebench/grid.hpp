#pragma once

#include <vector>

#include "placebench/common.hpp"
#include "placebench/geometry.hpp"

namespace placebench {

// Per-cell occupancy of the uniform square generation grid. Macro interiors
// are opaque; macro boundary cells double as pin slots, each usable by at
// most one net. Standard-cell centers host any number of pins.
enum class CellState : std::uint8_t {
  Unassigned,
  MacroInterior,
  MacroBoundary,
  StandardCell,
  WhiteSpace,
};

class Grid {
 public:
  Grid(int w, int h)
      : w_(w),
        h_(h),
        cells_(std::size_t(w) * h, CellState::Unassigned),
        macro_of_(std::size_t(w) * h, -1),
        pin_used_(std::size_t(w) * h, 0) {
    if (w < 1 || h < 1) throw Error("grid dimensions must be positive");
  }

  int width() const { return w_; }
  int height() const { return h_; }
  long cell_count() const { return long(w_) * h_; }

  bool in_bounds(int x, int y) const {
    return x >= 0 && x < w_ && y >= 0 && y < h_;
  }
  bool in_bounds(GridPoint p) const { return in_bounds(p.x, p.y); }

  std::size_t index(int x, int y) const { return std::size_t(y) * w_ + x; }
  GridPoint point(std::size_t idx) const {
    return {int(idx % w_), int(idx / w_)};
  }

  CellState state(int x, int y) const { return cells_[index(x, y)]; }
  CellState state(GridPoint p) const { return state(p.x, p.y); }

  void set_state(int x, int y, CellState s) { cells_[index(x, y)] = s; }

  int macro_at(int x, int y) const { return macro_of_[index(x, y)]; }

  bool pin_used(GridPoint p) const { return pin_used_[index(p.x, p.y)] != 0; }
  void mark_pin_used(GridPoint p) { pin_used_[index(p.x, p.y)] = 1; }

  // Usable as a pin location: a standard cell, or a free macro-boundary slot.
  bool pin_slot_free(GridPoint p) const {
    CellState s = state(p);
    if (s == CellState::StandardCell) return true;
    return s == CellState::MacroBoundary && !pin_used(p);
  }

  bool is_white(GridPoint p) const { return state(p) == CellState::WhiteSpace; }
  bool is_macro(GridPoint p) const {
    CellState s = state(p);
    return s == CellState::MacroInterior || s == CellState::MacroBoundary;
  }

  int add_macro(const Rect& r) {
    int id = int(macro_rects_.size());
    macro_rects_.push_back(r);
    for (int y = r.lo.y; y <= r.hi.y; ++y)
      for (int x = r.lo.x; x <= r.hi.x; ++x) {
        bool edge = x == r.lo.x || x == r.hi.x || y == r.lo.y || y == r.hi.y;
        cells_[index(x, y)] =
            edge ? CellState::MacroBoundary : CellState::MacroInterior;
        macro_of_[index(x, y)] = id;
      }
    return id;
  }

  const std::vector<Rect>& macro_rects() const { return macro_rects_; }

  template <typename Fn>
  void for_each_neighbor(GridPoint p, Fn&& fn) const {
    if (p.x > 0) fn(GridPoint{p.x - 1, p.y});
    if (p.x + 1 < w_) fn(GridPoint{p.x + 1, p.y});
    if (p.y > 0) fn(GridPoint{p.x, p.y - 1});
    if (p.y + 1 < h_) fn(GridPoint{p.x, p.y + 1});
  }

  long count(CellState s) const {
    long n = 0;
    for (CellState c : cells_)
      if (c == s) ++n;
    return n;
  }

 private:
  int w_, h_;
  std::vector<CellState> cells_;
  std::vector<int> macro_of_;
  std::vector<std::uint8_t> pin_used_;
  std::vector<Rect> macro_rects_;
};

// Number of 4-connected components among non-white cells; the generators'
// postcondition is exactly one.
inline int nonwhite_component_count(const Grid& g) {
  std::vector<std::uint8_t> seen(std::size_t(g.width()) * g.height(), 0);
  std::vector<GridPoint> stack;
  int components = 0;
  for (int y = 0; y < g.height(); ++y)
    for (int x = 0; x < g.width(); ++x) {
      GridPoint start{x, y};
      if (g.is_white(start) || seen[g.index(x, y)]) continue;
      ++components;
      seen[g.index(x, y)] = 1;
      stack.assign(1, start);
      while (!stack.empty()) {
        GridPoint p = stack.back();
        stack.pop_back();
        g.for_each_neighbor(p, [&](GridPoint q) {
          if (!g.is_white(q) && !seen[g.index(q.x, q.y)]) {
            seen[g.index(q.x, q.y)] = 1;
            stack.push_back(q);
          }
        });
      }
    }
  return components;
}

}  // namespace placebench
