#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "placebench/common.hpp"
#include "placebench/geometry.hpp"
#include "placebench/netlist.hpp"
#include "placebench/placement.hpp"

namespace placebench {

// Half-perimeter of the net's pin bounding box.
inline double hpwl(const Netlist& nl, const Placement& pl, const Net& net) {
  RealBox box;
  for (const Pin& pin : net.pins) {
    RealPoint p = pl.pin_position(nl, pin);
    box.add(p.x, p.y);
  }
  return box.empty() ? 0.0 : box.half_perimeter();
}

inline long hpwl_cells(std::span<const GridPoint> pins) {
  IntBox box;
  for (GridPoint p : pins) box.add(p.x, p.y);
  return box.empty() ? 0 : box.half_perimeter();
}

// Sum over nets in id order. Compensated summation keeps real-valued inputs
// bit-reproducible independent of magnitude ordering.
inline double total_hpwl(const Netlist& nl, const Placement& pl) {
  double sum = 0.0, carry = 0.0;
  for (const Net& net : nl.nets) {
    double y = hpwl(nl, pl, net) - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return sum;
}

// Smallest r with r*r >= t, in exact integer arithmetic.
inline long ceil_isqrt(long t) {
  long r = long(std::sqrt(double(t)));
  while (r > 0 && (r - 1) * (r - 1) >= t) --r;
  while (r * r < t) ++r;
  return r;
}

// Minimum HPWL of a t-pin net whose pins occupy distinct cells of a uniform
// square grid: pack the t cells into the rectangle of least half-perimeter,
// r = ceil(sqrt(t)), s = ceil(t/r), giving r + s - 2 grid units.
inline int min_hpwl(long t) {
  if (t < 1) throw Error("min_hpwl requires a positive pin count");
  long r = ceil_isqrt(t);
  long s = (t + r - 1) / r;
  return int(r + s - 2);
}

// Number of distinct N-step box enlargement sequences over {n,s,e,w}, i.e.
// multisets of size N over four symbols: (N^3 + 6N^2 + 11N + 6)/6.
inline long p4_sequences(long n) {
  if (n < 0) throw Error("p4_sequences requires N >= 0");
  return (n * n * n + 6 * n * n + 11 * n + 6) / 6;
}

// A pin pair whose own bounding box equals the whole net's bounding box.
// Only the two diagonal corner pairings can qualify, so a placed net has
// zero, one, or two equivalent edges.
struct EquivalentEdge {
  int pin_a = -1;  // pin indices within the net
  int pin_b = -1;
  GridPoint a;     // resolved cells, a at one corner, b at the opposite one
  GridPoint b;

  // Compatibility with chain directions; degenerate (flat) boxes allow both.
  bool rising() const {
    long dx = long(b.x) - a.x, dy = long(b.y) - a.y;
    return dx * dy >= 0;
  }
  bool falling() const {
    long dx = long(b.x) - a.x, dy = long(b.y) - a.y;
    return dx * dy <= 0;
  }
};

inline std::vector<EquivalentEdge> equivalent_edges(
    std::span<const GridPoint> pins) {
  std::vector<EquivalentEdge> out;
  if (pins.size() < 2) return out;
  IntBox box;
  for (GridPoint p : pins) box.add(p.x, p.y);

  auto pin_at = [&](long x, long y) {
    for (int i = 0; i < int(pins.size()); ++i)
      if (pins[i].x == x && pins[i].y == y) return i;
    return -1;
  };

  const GridPoint corners[2][2] = {
      {{int(box.xmin), int(box.ymin)}, {int(box.xmax), int(box.ymax)}},
      {{int(box.xmin), int(box.ymax)}, {int(box.xmax), int(box.ymin)}}};
  for (int d = 0; d < 2; ++d) {
    GridPoint ca = corners[d][0], cb = corners[d][1];
    if (d == 1 && ca == corners[0][0] && cb == corners[0][1]) continue;
    if (d == 1 && ca == corners[0][1] && cb == corners[0][0]) continue;
    int ia = pin_at(ca.x, ca.y);
    int ib = pin_at(cb.x, cb.y);
    if (ca == cb) {
      // Degenerate box: need two distinct pins at the same location.
      ib = -1;
      for (int i = ia + 1; i < int(pins.size()); ++i)
        if (pins[i] == ca) {
          ib = i;
          break;
        }
    }
    if (ia >= 0 && ib >= 0 && ia != ib)
      out.push_back(EquivalentEdge{ia, ib, ca, cb});
  }
  return out;
}

inline std::vector<GridPoint> resolve_pin_cells(const Netlist& nl,
                                                const Placement& pl,
                                                const Net& net) {
  std::vector<GridPoint> cells;
  cells.reserve(net.pins.size());
  for (const Pin& pin : net.pins) cells.push_back(pl.pin_cell(nl, pin));
  return cells;
}

inline std::vector<EquivalentEdge> equivalent_edges(const Netlist& nl,
                                                    const Placement& pl,
                                                    const Net& net) {
  std::vector<GridPoint> cells = resolve_pin_cells(nl, pl, net);
  return equivalent_edges(std::span<const GridPoint>(cells));
}

// A path is monotone iff every step keeps both coordinates from moving away
// from the final vertex. Each vertex must land between its predecessor and
// the terminal in both axes; shrinking distance alone would still admit
// steps that cross the terminal coordinate and land symmetrically beyond it.
inline bool is_monotone(std::span<const GridPoint> path) {
  if (path.size() < 2) throw Error("monotonicity needs at least two vertices");
  const GridPoint end = path.back();
  for (std::size_t i = 1; i < path.size(); ++i) {
    long px = long(end.x) - path[i - 1].x, cx = long(end.x) - path[i].x;
    long py = long(end.y) - path[i - 1].y, cy = long(end.y) - path[i].y;
    if (std::abs(cx) > std::abs(px) || cx * px < 0) return false;
    if (std::abs(cy) > std::abs(py) || cy * py < 0) return false;
  }
  return true;
}

// Equivalent characterization: terminal Manhattan distance equals the sum of
// edge lengths. Kept separate so tests can assert the equivalence.
inline bool is_monotone_by_length(std::span<const GridPoint> path) {
  if (path.size() < 2) throw Error("monotonicity needs at least two vertices");
  long sum = 0;
  for (std::size_t i = 1; i < path.size(); ++i)
    sum += manhattan(path[i - 1], path[i]);
  return sum == manhattan(path.front(), path.back());
}

// True when the placed net attains the grid lower bound for its pin count.
inline bool is_local_net(const Netlist& nl, const Placement& pl,
                         const Net& net) {
  std::vector<GridPoint> cells = resolve_pin_cells(nl, pl, net);
  return hpwl_cells(cells) == min_hpwl(net.degree());
}

}  // namespace placebench
