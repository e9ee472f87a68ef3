#pragma once

// Shared fixture builders for the unit suites.

#include <string>
#include <vector>

#include "placebench/geometry.hpp"
#include "placebench/netlist.hpp"
#include "placebench/placement.hpp"

namespace placebench::testing {

struct PlacedNetlist {
  Netlist nl;
  Placement pl;
};

inline int add_cell(PlacedNetlist& f, int x, int y,
                    const std::string& name = "") {
  Module m;
  m.name = name.empty() ? "c" + std::to_string(f.nl.modules.size()) : name;
  int idx = f.nl.add_module(m);
  f.pl.resize(f.nl.modules.size());
  f.pl.set(idx, double(x), double(y));
  return idx;
}

inline int add_net_over(PlacedNetlist& f, const std::vector<int>& modules,
                        const std::string& name = "") {
  Net n;
  n.name = name.empty() ? "n" + std::to_string(f.nl.nets.size()) : name;
  for (int m : modules) n.pins.push_back(Pin{m, 0.0, 0.0, 'I'});
  return f.nl.add_net(std::move(n));
}

// One 1x1 cell per point plus a single net connecting them all.
inline PlacedNetlist point_net(const std::vector<GridPoint>& cells) {
  PlacedNetlist f;
  std::vector<int> idx;
  for (GridPoint c : cells) idx.push_back(add_cell(f, c.x, c.y));
  add_net_over(f, idx);
  return f;
}

}  // namespace placebench::testing
