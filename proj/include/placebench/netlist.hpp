#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "placebench/common.hpp"
#include "placebench/geometry.hpp"

namespace placebench {

// A macro is any module taller than the standard-cell row; terminals are
// fixed I/O objects (pads). Kind is orthogonal to movability: fixed macros
// keep kind Macro.
enum class ModuleKind : std::uint8_t { StandardCell, Macro, Terminal };

struct Module {
  std::string name;
  ModuleKind kind = ModuleKind::StandardCell;
  double width = 1.0;   // in placement units
  double height = 1.0;
  bool movable = true;
};

// One connection point: owning module plus offset of the pin from the
// module's center.
struct Pin {
  int module = -1;
  double dx = 0.0;
  double dy = 0.0;
  char direction = 'I';
};

struct Net {
  std::string name;
  std::vector<Pin> pins;
  int degree() const { return int(pins.size()); }
};

// Hypergraph of modules and nets over a placement region.
class Netlist {
 public:
  std::vector<Module> modules;
  std::vector<Net> nets;
  RealRect region;

  int add_module(Module m) {
    int idx = int(modules.size());
    by_name_[m.name] = idx;
    modules.push_back(std::move(m));
    return idx;
  }

  int add_net(Net n) {
    for (const Pin& p : n.pins) {
      if (p.module < 0 || p.module >= int(modules.size()))
        throw Error("net " + n.name + " references unknown module index");
    }
    nets.push_back(std::move(n));
    return int(nets.size()) - 1;
  }

  // -1 when absent.
  int module_index(const std::string& name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? -1 : it->second;
  }

  long pin_count() const {
    long n = 0;
    for (const Net& net : nets) n += net.degree();
    return n;
  }

  void rebuild_name_index() {
    by_name_.clear();
    for (int i = 0; i < int(modules.size()); ++i) by_name_[modules[i].name] = i;
  }

 private:
  std::unordered_map<std::string, int> by_name_;
};

// Target number of nets per degree; mutable budget during generation.
class DegreeHistogram {
 public:
  DegreeHistogram() = default;
  explicit DegreeHistogram(std::vector<long> counts)
      : counts_(std::move(counts)) {}

  long operator[](int degree) const {
    return degree >= 0 && degree < int(counts_.size()) ? counts_[degree] : 0;
  }

  void add(int degree, long n = 1) {
    if (degree < 0) throw Error("negative net degree");
    if (degree >= int(counts_.size())) counts_.resize(degree + 1, 0);
    counts_[degree] += n;
    if (counts_[degree] < 0) throw Error("degree histogram went negative");
  }

  void take(int degree) { add(degree, -1); }

  int max_degree() const {
    for (int d = int(counts_.size()) - 1; d >= 0; --d)
      if (counts_[d] > 0) return d;
    return 0;
  }

  // Largest degree in [lo, hi] with remaining budget, or 0.
  int largest_in(int lo, int hi) const {
    hi = std::min(hi, int(counts_.size()) - 1);
    for (int d = hi; d >= lo; --d)
      if (counts_[d] > 0) return d;
    return 0;
  }

  long total_nets() const {
    long n = 0;
    for (long c : counts_) n += c;
    return n;
  }

  long total_pins() const {
    long n = 0;
    for (int d = 0; d < int(counts_.size()); ++d) n += d * counts_[d];
    return n;
  }

  bool empty() const { return total_nets() == 0; }
  int size() const { return int(counts_.size()); }
  const std::vector<long>& counts() const { return counts_; }

  friend bool operator==(const DegreeHistogram& a, const DegreeHistogram& b) {
    int n = std::max(a.size(), b.size());
    for (int d = 0; d < n; ++d)
      if (a[d] != b[d]) return false;
    return true;
  }

 private:
  std::vector<long> counts_;
};

}  // namespace placebench
