#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace placebench {

// Integer grid coordinates. A point names a grid cell (or the cell's center
// pin slot, depending on context).
struct GridPoint {
  int x = 0;
  int y = 0;

  friend bool operator==(GridPoint a, GridPoint b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(GridPoint a, GridPoint b) { return !(a == b); }
  friend bool operator<(GridPoint a, GridPoint b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
};

inline long manhattan(GridPoint a, GridPoint b) {
  return std::abs(long(a.x) - long(b.x)) + std::abs(long(a.y) - long(b.y));
}

// Inclusive rectangle of grid cells.
struct Rect {
  GridPoint lo;
  GridPoint hi;

  int width() const { return hi.x - lo.x + 1; }
  int height() const { return hi.y - lo.y + 1; }
  long area() const { return long(width()) * long(height()); }
  int half_perimeter() const { return (hi.x - lo.x) + (hi.y - lo.y); }

  bool contains(GridPoint p) const {
    return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
  }
  bool intersects(const Rect& o) const {
    return lo.x <= o.hi.x && o.lo.x <= hi.x && lo.y <= o.hi.y && o.lo.y <= hi.y;
  }
  friend bool operator==(const Rect& a, const Rect& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }

  static Rect spanning(GridPoint a, GridPoint b) {
    return Rect{{std::min(a.x, b.x), std::min(a.y, b.y)},
                {std::max(a.x, b.x), std::max(a.y, b.y)}};
  }
};

struct RealPoint {
  double x = 0.0;
  double y = 0.0;
};

struct RealRect {
  double xmin = 0.0, ymin = 0.0, xmax = 0.0, ymax = 0.0;
  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
  double half_perimeter() const { return width() + height(); }
};

// Running bounding box over a stream of points.
template <typename T>
struct BoundingBox {
  T xmin = std::numeric_limits<T>::max();
  T xmax = std::numeric_limits<T>::lowest();
  T ymin = std::numeric_limits<T>::max();
  T ymax = std::numeric_limits<T>::lowest();

  void add(T x, T y) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  bool empty() const { return xmax < xmin; }
  T half_perimeter() const { return (xmax - xmin) + (ymax - ymin); }
};

using IntBox = BoundingBox<long>;
using RealBox = BoundingBox<double>;

}  // namespace placebench
