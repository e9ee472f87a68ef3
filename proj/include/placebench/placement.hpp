#pragma once

#include <cmath>
#include <vector>

#include "placebench/common.hpp"
#include "placebench/geometry.hpp"
#include "placebench/netlist.hpp"

namespace placebench {

// Module positions (lower-left corners) over the netlist's region, plus the
// coordinate-frame metadata needed to convert between external units and
// grid units. Generated placements are grid-integral with unit = row_height;
// parsed placements are arbitrary reals.
class Placement {
 public:
  Placement() = default;
  explicit Placement(std::size_t module_count)
      : pos_(module_count), placed_(module_count, 0) {}

  double unit = 1.0;        // length of one grid cell in placement units
  double row_height = 1.0;  // standard-cell row height in placement units

  void resize(std::size_t n) {
    pos_.resize(n);
    placed_.resize(n, 0);
  }

  void set(int module, double x, double y) {
    pos_[module] = {x, y};
    placed_[module] = 1;
  }

  bool is_placed(int module) const { return placed_[module] != 0; }
  RealPoint position(int module) const { return pos_[module]; }
  std::size_t size() const { return pos_.size(); }

  // Pin location = module center + pin offset.
  RealPoint pin_position(const Netlist& nl, const Pin& pin) const {
    if (!is_placed(pin.module))
      throw Error("module " + nl.modules[pin.module].name + " is not placed");
    const Module& m = nl.modules[pin.module];
    RealPoint p = pos_[pin.module];
    return {p.x + m.width * 0.5 + pin.dx, p.y + m.height * 0.5 + pin.dy};
  }

  // Grid cell hosting the pin. Requires a grid-integral frame: the pin must
  // sit at a cell center (i + 0.5, j + 0.5 in grid units).
  GridPoint pin_cell(const Netlist& nl, const Pin& pin) const {
    RealPoint p = pin_position(nl, pin);
    double gx = p.x / unit, gy = p.y / unit;
    int cx = int(std::floor(gx));
    int cy = int(std::floor(gy));
    if (std::abs(gx - cx - 0.5) > 1e-6 || std::abs(gy - cy - 0.5) > 1e-6)
      throw Error("pin of net on module " + nl.modules[pin.module].name +
                  " is not grid-integral");
    return {cx, cy};
  }

  bool grid_integral(const Netlist& nl) const {
    for (const Net& net : nl.nets)
      for (const Pin& pin : net.pins) {
        if (!is_placed(pin.module)) return false;
        RealPoint p = pin_position(nl, pin);
        double gx = p.x / unit, gy = p.y / unit;
        if (std::abs(gx - std::floor(gx) - 0.5) > 1e-6 ||
            std::abs(gy - std::floor(gy) - 0.5) > 1e-6)
          return false;
      }
    return true;
  }

 private:
  std::vector<RealPoint> pos_;
  std::vector<char> placed_;
};

}  // namespace placebench
