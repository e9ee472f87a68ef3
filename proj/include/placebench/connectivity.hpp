#pragma once

#include <numeric>
#include <vector>

#include "placebench/netlist.hpp"

namespace placebench {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

struct ConnectivityReport {
  bool connected = false;
  int component_count = 0;
};

// Hypergraph connectivity: modules joined when they share a net.
inline ConnectivityReport connectivity_check(const Netlist& nl) {
  int n = int(nl.modules.size());
  if (n == 0) return {true, 0};
  UnionFind uf(n);
  int components = n;
  for (const Net& net : nl.nets)
    for (std::size_t i = 1; i < net.pins.size(); ++i)
      if (uf.unite(net.pins[0].module, net.pins[i].module)) --components;
  return {components == 1, components};
}

}  // namespace placebench
