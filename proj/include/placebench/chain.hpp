#pragma once

#include <string>
#include <vector>

#include "placebench/hpwl.hpp"
#include "placebench/netlist.hpp"
#include "placebench/placement.hpp"

namespace placebench {

// A hyperpath whose equivalent path is monotone. With its two terminals held
// fixed, no placement of the member nets can make the chain shorter than the
// terminals' HPWL, which is what makes chains usable as optimality
// certificates for nonlocal nets.
struct MonotoneChain {
  int id = -1;
  std::vector<int> nets;               // net indices, in path order
  std::vector<GridPoint> equivalent_path;  // v_0 .. v_n, nets.size() + 1 points
  GridPoint start;
  GridPoint end;
};

struct ChainReport {
  bool valid = false;
  long length = 0;         // sum of member-net HPWLs
  long terminal_hpwl = 0;  // HPWL of the terminal pair
  std::string why;         // first failed condition, empty when valid
};

// Checks, in order: path/terminal consistency, each path edge is an
// equivalent edge of its net, consecutive nets share exactly the path's
// common vertex (as a module), the path is monotone, and the chain length
// equals the terminal HPWL.
inline ChainReport validate_chain(const MonotoneChain& chain,
                                  const Netlist& nl, const Placement& pl) {
  ChainReport rep;
  const auto& path = chain.equivalent_path;
  if (chain.nets.empty() || path.size() != chain.nets.size() + 1) {
    rep.why = "path vertex count does not match net count";
    return rep;
  }
  if (!(path.front() == chain.start) || !(path.back() == chain.end)) {
    rep.why = "path endpoints differ from chain terminals";
    return rep;
  }
  rep.terminal_hpwl = manhattan(chain.start, chain.end);

  std::vector<std::vector<GridPoint>> cells;
  cells.reserve(chain.nets.size());
  for (std::size_t i = 0; i < chain.nets.size(); ++i) {
    int n = chain.nets[i];
    if (n < 0 || n >= int(nl.nets.size()))
      throw Error("chain references missing net " + std::to_string(n));
    cells.push_back(resolve_pin_cells(nl, pl, nl.nets[n]));

    bool edge_ok = false;
    for (const EquivalentEdge& e :
         equivalent_edges(std::span<const GridPoint>(cells.back()))) {
      if ((e.a == path[i] && e.b == path[i + 1]) ||
          (e.a == path[i + 1] && e.b == path[i])) {
        edge_ok = true;
        break;
      }
    }
    if (!edge_ok) {
      rep.why = "path edge " + std::to_string(i) +
                " is not an equivalent edge of net " + nl.nets[n].name;
      return rep;
    }
    rep.length += hpwl_cells(cells.back());
  }

  for (std::size_t i = 0; i + 1 < chain.nets.size(); ++i) {
    const Net& a = nl.nets[chain.nets[i]];
    const Net& b = nl.nets[chain.nets[i + 1]];
    int shared = -1, shared_count = 0;
    for (const Pin& pa : a.pins)
      for (const Pin& pb : b.pins)
        if (pa.module == pb.module && pa.module != shared) {
          shared = pa.module;
          ++shared_count;
        }
    if (shared_count != 1) {
      rep.why = "nets " + a.name + " and " + b.name + " share " +
                std::to_string(shared_count) + " modules, expected 1";
      return rep;
    }
    bool at_vertex = false;
    for (std::size_t k = 0; k < a.pins.size(); ++k)
      if (a.pins[k].module == shared && cells[i][k] == path[i + 1])
        at_vertex = true;
    if (!at_vertex) {
      rep.why = "shared module of nets " + a.name + ", " + b.name +
                " is not at the common path vertex";
      return rep;
    }
  }

  if (!is_monotone(std::span<const GridPoint>(path))) {
    rep.why = "equivalent path is not monotone";
    return rep;
  }
  if (rep.length != rep.terminal_hpwl) {
    rep.why = "chain length " + std::to_string(rep.length) +
              " != terminal HPWL " + std::to_string(rep.terminal_hpwl);
    return rep;
  }
  rep.valid = true;
  return rep;
}

}  // namespace placebench
