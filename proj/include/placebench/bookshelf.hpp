#pragma once

// Bookshelf placement-benchmark family: .aux, .nodes, .nets, .pl, .scl (and
// a pass-through .wts). Grammar follows the ISPD 2005/2006 suites:
// whitespace-separated records, '#' comments, "key : value" headers,
// "NetDegree : k" blocks with one pin line per connection.

#include <cctype>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "placebench/common.hpp"
#include "placebench/netlist.hpp"
#include "placebench/placement.hpp"

namespace placebench {

struct CoreRow {
  double y = 0.0;
  double height = 1.0;
  double site_width = 1.0;
  double site_spacing = 1.0;
  double origin_x = 0.0;
  long num_sites = 0;
  std::string orient = "1";
  std::string symmetry = "1";
};

// Verbatim tokens that carry no meaning for us but must survive a
// parse/write round trip.
struct NodeAnnotation {
  std::string node_token;  // "", "terminal" or "terminal_NI"
  std::string pl_suffix;   // "", "/FIXED" or "/FIXED_NI"
  std::string orient = "N";
};

struct BenchmarkBundle {
  std::string name;
  Netlist netlist;
  Placement placement;
  std::vector<CoreRow> rows;
  std::vector<NodeAnnotation> annotations;
  std::vector<std::string> warnings;
  std::filesystem::path source_aux;

  double row_height() const {
    return rows.empty() ? 1.0 : rows.front().height;
  }
};

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) {
      std::string_view t = line.substr(start, i - start);
      if (t.front() == '#') break;  // comment to end of line
      toks.push_back(t);
    }
  }
  return toks;
}

inline double to_number(std::string_view t, const std::string& file,
                        int line) {
  double v = 0.0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (*first == '+') ++first;  // from_chars rejects leading '+'
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || p != last)
    throw ParseError(file, line, "expected a number, got '" + std::string(t) +
                                     "'");
  return v;
}

// Line reader that skips blanks, comments, and the "UCLA <kind> 1.0" header.
class RecordReader {
 public:
  explicit RecordReader(const std::filesystem::path& path)
      : file_(path.string()), in_(path) {
    if (!in_) throw Error("cannot open " + file_);
  }

  bool next(std::vector<std::string_view>& toks) {
    while (std::getline(in_, line_)) {
      ++lineno_;
      toks = split_tokens(line_);
      if (toks.empty()) continue;
      if (toks[0] == "UCLA") continue;
      return true;
    }
    return false;
  }

  const std::string& file() const { return file_; }
  int lineno() const { return lineno_; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(file_, lineno_, msg);
  }

 private:
  std::string file_;
  std::ifstream in_;
  std::string line_;
  int lineno_ = 0;
};

// "key : value ..." → tokens after the colon, or empty if key mismatch.
inline bool match_key(const std::vector<std::string_view>& toks,
                      std::string_view key,
                      std::vector<std::string_view>& values) {
  if (toks.empty() || toks[0] != key) return false;
  std::size_t i = 1;
  if (i < toks.size() && toks[i] == ":") ++i;
  values.assign(toks.begin() + i, toks.end());
  return true;
}

inline std::string fmt_num(double v) {
  if (v == long(v) && std::abs(v) < 9.0e15) return std::to_string(long(v));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace detail

inline void parse_nodes(const std::filesystem::path& path,
                        BenchmarkBundle& bundle) {
  detail::RecordReader rd(path);
  std::vector<std::string_view> toks, vals;
  long declared_nodes = -1, declared_terminals = -1;
  while (rd.next(toks)) {
    if (detail::match_key(toks, "NumNodes", vals)) {
      declared_nodes = long(detail::to_number(vals[0], rd.file(), rd.lineno()));
      continue;
    }
    if (detail::match_key(toks, "NumTerminals", vals)) {
      declared_terminals =
          long(detail::to_number(vals[0], rd.file(), rd.lineno()));
      continue;
    }
    if (toks.size() < 3) rd.fail("node record needs name, width, height");
    Module m;
    m.name = std::string(toks[0]);
    m.width = detail::to_number(toks[1], rd.file(), rd.lineno());
    m.height = detail::to_number(toks[2], rd.file(), rd.lineno());
    NodeAnnotation ann;
    if (toks.size() > 3) {
      ann.node_token = std::string(toks[3]);
      if (ann.node_token != "terminal" && ann.node_token != "terminal_NI")
        rd.fail("unknown node attribute '" + ann.node_token + "'");
      m.movable = false;
    }
    if (bundle.netlist.module_index(m.name) >= 0)
      rd.fail("duplicate node '" + m.name + "'");
    bundle.netlist.add_module(std::move(m));
    bundle.annotations.push_back(std::move(ann));
  }
  long n = long(bundle.netlist.modules.size());
  if (declared_nodes >= 0 && declared_nodes != n)
    throw Error(path.string() + ": NumNodes " + std::to_string(declared_nodes) +
                " does not match " + std::to_string(n) + " records");
  (void)declared_terminals;
}

inline void parse_nets(const std::filesystem::path& path,
                       BenchmarkBundle& bundle) {
  detail::RecordReader rd(path);
  std::vector<std::string_view> toks, vals;
  while (rd.next(toks)) {
    if (detail::match_key(toks, "NumNets", vals) ||
        detail::match_key(toks, "NumPins", vals))
      continue;
    if (!detail::match_key(toks, "NetDegree", vals))
      rd.fail("expected NetDegree record");
    if (vals.empty()) rd.fail("NetDegree without a pin count");
    int degree = int(detail::to_number(vals[0], rd.file(), rd.lineno()));
    Net net;
    net.name = vals.size() > 1 ? std::string(vals[1])
                               : "n" + std::to_string(bundle.netlist.nets.size());
    for (int k = 0; k < degree; ++k) {
      if (!rd.next(toks)) rd.fail("net " + net.name + " truncated");
      Pin pin;
      int idx = bundle.netlist.module_index(std::string(toks[0]));
      if (idx < 0)
        rd.fail("net " + net.name + " references undeclared node '" +
                std::string(toks[0]) + "'");
      pin.module = idx;
      std::size_t i = 1;
      if (i < toks.size() && toks[i] != ":") pin.direction = toks[i++][0];
      if (i < toks.size() && toks[i] == ":") {
        ++i;
        if (i < toks.size())
          pin.dx = detail::to_number(toks[i++], rd.file(), rd.lineno());
        if (i < toks.size())
          pin.dy = detail::to_number(toks[i++], rd.file(), rd.lineno());
      }
      net.pins.push_back(pin);
    }
    if (net.degree() < 2) {
      bundle.warnings.push_back("dropped net " + net.name +
                                " with degree < 2");
      continue;
    }
    bundle.netlist.add_net(std::move(net));
  }
}

inline void parse_pl(const std::filesystem::path& path,
                     BenchmarkBundle& bundle) {
  detail::RecordReader rd(path);
  std::vector<std::string_view> toks;
  bundle.placement.resize(bundle.netlist.modules.size());
  while (rd.next(toks)) {
    if (toks.size() < 3) rd.fail("placement record needs name, x, y");
    int idx = bundle.netlist.module_index(std::string(toks[0]));
    if (idx < 0)
      rd.fail("placement references undeclared node '" + std::string(toks[0]) +
              "'");
    double x = detail::to_number(toks[1], rd.file(), rd.lineno());
    double y = detail::to_number(toks[2], rd.file(), rd.lineno());
    bundle.placement.set(idx, x, y);
    std::size_t i = 3;
    if (i < toks.size() && toks[i] == ":") ++i;
    if (i < toks.size() && toks[i] != "/FIXED" && toks[i] != "/FIXED_NI")
      bundle.annotations[idx].orient = std::string(toks[i++]);
    if (i < toks.size()) {
      bundle.annotations[idx].pl_suffix = std::string(toks[i]);
      bundle.netlist.modules[idx].movable = false;
    }
  }
}

inline void parse_scl(const std::filesystem::path& path,
                      BenchmarkBundle& bundle) {
  detail::RecordReader rd(path);
  std::vector<std::string_view> toks, vals;
  while (rd.next(toks)) {
    if (detail::match_key(toks, "NumRows", vals)) continue;
    if (toks[0] == "CoreRow") {
      CoreRow row;
      while (rd.next(toks)) {
        if (toks[0] == "End") break;
        if (detail::match_key(toks, "Coordinate", vals))
          row.y = detail::to_number(vals[0], rd.file(), rd.lineno());
        else if (detail::match_key(toks, "Height", vals))
          row.height = detail::to_number(vals[0], rd.file(), rd.lineno());
        else if (detail::match_key(toks, "Sitewidth", vals))
          row.site_width = detail::to_number(vals[0], rd.file(), rd.lineno());
        else if (detail::match_key(toks, "Sitespacing", vals))
          row.site_spacing =
              detail::to_number(vals[0], rd.file(), rd.lineno());
        else if (detail::match_key(toks, "Siteorient", vals))
          row.orient = std::string(vals[0]);
        else if (detail::match_key(toks, "Sitesymmetry", vals))
          row.symmetry = std::string(vals[0]);
        else if (detail::match_key(toks, "SubrowOrigin", vals)) {
          row.origin_x = detail::to_number(vals[0], rd.file(), rd.lineno());
          // trailing "NumSites : n" on the same line
          for (std::size_t i = 1; i + 1 < vals.size(); ++i)
            if (vals[i] == "NumSites")
              row.num_sites = long(detail::to_number(
                  vals[i + 1] == ":" ? vals[i + 2] : vals[i + 1], rd.file(),
                  rd.lineno()));
            else if (vals[i] == ":")
              continue;
        } else if (detail::match_key(toks, "NumSites", vals))
          row.num_sites = long(detail::to_number(vals[0], rd.file(),
                                                 rd.lineno()));
      }
      bundle.rows.push_back(row);
    }
  }
}

// Classify module kinds once rows are known: anything taller than the row
// height is a macro, remaining fixed nodes are terminals (pads).
inline void classify_modules(BenchmarkBundle& bundle) {
  double rh = bundle.row_height();
  for (std::size_t i = 0; i < bundle.netlist.modules.size(); ++i) {
    Module& m = bundle.netlist.modules[i];
    if (m.height > rh + 1e-9)
      m.kind = ModuleKind::Macro;
    else if (!bundle.annotations[i].node_token.empty())
      m.kind = ModuleKind::Terminal;
    else
      m.kind = ModuleKind::StandardCell;
  }
}

inline void compute_region(BenchmarkBundle& bundle) {
  RealBox box;
  for (const CoreRow& r : bundle.rows) {
    box.add(r.origin_x, r.y);
    box.add(r.origin_x + r.num_sites * r.site_spacing, r.y + r.height);
  }
  if (!box.empty())
    bundle.netlist.region = {box.xmin, box.ymin, box.xmax, box.ymax};
}

inline BenchmarkBundle parse_bundle(const std::filesystem::path& aux_path) {
  detail::RecordReader rd(aux_path);
  std::vector<std::string_view> toks;
  if (!rd.next(toks)) rd.fail("empty .aux file");
  std::filesystem::path dir = aux_path.parent_path();
  std::filesystem::path nodes, nets, pl, scl;
  for (const auto& t : toks) {
    std::filesystem::path p = dir / std::string(t);
    if (t.ends_with(".nodes")) nodes = p;
    else if (t.ends_with(".nets")) nets = p;
    else if (t.ends_with(".pl")) pl = p;
    else if (t.ends_with(".scl")) scl = p;
  }
  if (nodes.empty() || nets.empty() || pl.empty())
    rd.fail(".aux must list .nodes, .nets and .pl files");

  BenchmarkBundle bundle;
  bundle.source_aux = aux_path;
  bundle.name = aux_path.stem().string();
  parse_nodes(nodes, bundle);
  if (!scl.empty()) parse_scl(scl, bundle);
  parse_nets(nets, bundle);
  parse_pl(pl, bundle);
  classify_modules(bundle);
  compute_region(bundle);
  if (std::abs(bundle.row_height() -
               (bundle.rows.empty() ? 1.0 : bundle.rows.front().site_width)) <
      1e-9) {
    bundle.placement.unit = bundle.row_height();
    bundle.placement.row_height = bundle.row_height();
  } else {
    bundle.placement.unit = 1.0;
    bundle.placement.row_height = bundle.row_height();
  }
  return bundle;
}

// Emits the five-file bundle with deterministic ordering and formatting;
// writing, re-parsing, and writing again is byte-identical.
inline std::vector<std::filesystem::path> write_bundle(
    const BenchmarkBundle& bundle, const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const std::string& name = bundle.name;
  std::vector<fs::path> written;

  auto open = [&](const std::string& ext) {
    fs::path p = dir / (name + ext);
    written.push_back(p);
    std::ofstream out(p);
    if (!out) throw Error("cannot write " + p.string());
    return out;
  };

  {
    std::ofstream out = open(".aux");
    out << "RowBasedPlacement : " << name << ".nodes " << name << ".nets "
        << name << ".wts " << name << ".pl " << name << ".scl\n";
  }

  const Netlist& nl = bundle.netlist;
  long terminals = 0;
  for (const Module& m : nl.modules)
    if (!m.movable) ++terminals;

  {
    std::ofstream out = open(".nodes");
    out << "UCLA nodes 1.0\n\n";
    out << "NumNodes : " << nl.modules.size() << "\n";
    out << "NumTerminals : " << terminals << "\n";
    for (std::size_t i = 0; i < nl.modules.size(); ++i) {
      const Module& m = nl.modules[i];
      out << "\t" << m.name << "\t" << detail::fmt_num(m.width) << "\t"
          << detail::fmt_num(m.height);
      const std::string& tok = bundle.annotations[i].node_token;
      if (!tok.empty()) out << "\t" << tok;
      out << "\n";
    }
  }

  {
    std::ofstream out = open(".nets");
    out << "UCLA nets 1.0\n\n";
    out << "NumNets : " << nl.nets.size() << "\n";
    out << "NumPins : " << nl.pin_count() << "\n";
    for (const Net& net : nl.nets) {
      out << "NetDegree : " << net.degree() << "\t" << net.name << "\n";
      for (const Pin& p : net.pins)
        out << "\t" << nl.modules[p.module].name << "\t" << p.direction
            << " : " << detail::fmt_num(p.dx) << "\t" << detail::fmt_num(p.dy)
            << "\n";
    }
  }

  {
    std::ofstream out = open(".wts");
    out << "UCLA wts 1.0\n";
  }

  {
    std::ofstream out = open(".pl");
    out << "UCLA pl 1.0\n\n";
    for (std::size_t i = 0; i < nl.modules.size(); ++i) {
      const Module& m = nl.modules[i];
      RealPoint p =
          bundle.placement.is_placed(int(i)) ? bundle.placement.position(int(i))
                                             : RealPoint{0, 0};
      out << m.name << "\t" << detail::fmt_num(p.x) << "\t"
          << detail::fmt_num(p.y) << "\t: " << bundle.annotations[i].orient;
      const std::string& suffix = bundle.annotations[i].pl_suffix;
      if (!suffix.empty()) out << " " << suffix;
      out << "\n";
    }
  }

  {
    std::ofstream out = open(".scl");
    out << "UCLA scl 1.0\n\n";
    out << "NumRows : " << bundle.rows.size() << "\n";
    for (const CoreRow& r : bundle.rows) {
      out << "CoreRow Horizontal\n";
      out << "  Coordinate : " << detail::fmt_num(r.y) << "\n";
      out << "  Height : " << detail::fmt_num(r.height) << "\n";
      out << "  Sitewidth : " << detail::fmt_num(r.site_width) << "\n";
      out << "  Sitespacing : " << detail::fmt_num(r.site_spacing) << "\n";
      out << "  Siteorient : " << r.orient << "\n";
      out << "  Sitesymmetry : " << r.symmetry << "\n";
      out << "  SubrowOrigin : " << detail::fmt_num(r.origin_x)
          << "\tNumSites : " << r.num_sites << "\n";
      out << "End\n";
    }
  }

  return written;
}

inline DegreeHistogram extract_degree_histogram(const Netlist& nl) {
  DegreeHistogram h;
  for (const Net& net : nl.nets) h.add(net.degree());
  return h;
}

}  // namespace placebench
