#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "placebench/common.hpp"
#include "placebench/netlist.hpp"

namespace placebench {

// One row per net: what the placement attains and what any placement could
// attain at best. Chained nets carry the chain id; their bound equals their
// attained length because the chain as a whole is pinned by its terminals.
struct NetCertRecord {
  int degree = 0;
  long attained = 0;
  long bound = 0;
  int chain_id = -1;  // -1 = local / unchained
};

struct ChainSummary {
  int id = -1;
  long terminal_hpwl = 0;
  int net_count = 0;
};

// Near-optimality certificate for a (netlist, placement) pair. All lengths
// are in grid units; `scale` converts to the emitted bundle's coordinates.
struct OptimalityCertificate {
  std::string benchmark;
  std::string generator;  // "ms" or "mc"
  std::uint64_t seed = 0;
  int grid_w = 0;
  int grid_h = 0;
  double scale = 1.0;
  double utilization_target = 0.0;  // 0 = not utilization-driven
  double residual_sov = 0.0;        // benchmark's own SOV/bin after generation
  std::vector<NetCertRecord> nets;  // indexed like the netlist
  std::vector<ChainSummary> chains;
  std::vector<std::pair<int, long>> unmet_degrees;  // degree, missing count
  nlohmann::json params;  // generator configuration, free-form

  long total_attained() const {
    long t = 0;
    for (const NetCertRecord& r : nets) t += r.attained;
    return t;
  }
  long total_bound() const {
    long t = 0;
    for (const NetCertRecord& r : nets) t += r.bound;
    return t;
  }
  double rho() const {
    long b = total_bound();
    if (b <= 0) throw Error("certificate has a non-positive bound total");
    return double(total_attained()) / double(b);
  }
};

inline void write_certificate(const OptimalityCertificate& cert,
                              const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);

  nlohmann::json j;
  j["benchmark"] = cert.benchmark;
  j["generator"] = cert.generator;
  j["seed"] = cert.seed;
  j["grid"] = {cert.grid_w, cert.grid_h};
  j["scale"] = cert.scale;
  j["utilization_target"] = cert.utilization_target;
  j["residual_sov"] = cert.residual_sov;
  j["total_attained"] = cert.total_attained();
  j["total_bound"] = cert.total_bound();
  j["rho"] = cert.rho();
  j["net_count"] = cert.nets.size();
  j["params"] = cert.params;
  nlohmann::json jchains = nlohmann::json::array();
  for (const ChainSummary& c : cert.chains)
    jchains.push_back({{"id", c.id},
                       {"terminal_hpwl", c.terminal_hpwl},
                       {"net_count", c.net_count}});
  j["chains"] = jchains;
  nlohmann::json junmet = nlohmann::json::array();
  for (auto [deg, n] : cert.unmet_degrees)
    junmet.push_back({{"degree", deg}, {"count", n}});
  j["unmet_degrees"] = junmet;

  std::ofstream jf(dir / (cert.benchmark + ".cert.json"));
  if (!jf) throw Error("cannot write certificate json");
  jf << j.dump(2) << "\n";

  std::ofstream cf(dir / (cert.benchmark + ".cert.csv"));
  if (!cf) throw Error("cannot write certificate csv");
  cf << "net,degree,attained,bound,chain\n";
  for (std::size_t i = 0; i < cert.nets.size(); ++i) {
    const NetCertRecord& r = cert.nets[i];
    cf << i << "," << r.degree << "," << r.attained << "," << r.bound << ",";
    if (r.chain_id < 0)
      cf << "local";
    else
      cf << r.chain_id;
    cf << "\n";
  }
}

inline OptimalityCertificate read_certificate(
    const std::filesystem::path& json_path) {
  std::ifstream jf(json_path);
  if (!jf) throw Error("cannot open " + json_path.string());
  nlohmann::json j = nlohmann::json::parse(jf);

  OptimalityCertificate cert;
  cert.benchmark = j.at("benchmark").get<std::string>();
  cert.generator = j.value("generator", std::string());
  cert.seed = j.value("seed", std::uint64_t(0));
  if (j.contains("grid")) {
    cert.grid_w = j["grid"][0].get<int>();
    cert.grid_h = j["grid"][1].get<int>();
  }
  cert.scale = j.value("scale", 1.0);
  cert.utilization_target = j.value("utilization_target", 0.0);
  cert.residual_sov = j.value("residual_sov", 0.0);
  cert.params = j.value("params", nlohmann::json::object());
  for (const auto& c : j.value("chains", nlohmann::json::array()))
    cert.chains.push_back(ChainSummary{c.at("id").get<int>(),
                                       c.at("terminal_hpwl").get<long>(),
                                       c.at("net_count").get<int>()});
  for (const auto& u : j.value("unmet_degrees", nlohmann::json::array()))
    cert.unmet_degrees.emplace_back(u.at("degree").get<int>(),
                                    u.at("count").get<long>());

  std::filesystem::path csv = json_path;
  csv.replace_extension(".csv");  // *.cert.json -> *.cert.csv
  std::ifstream cf(csv);
  if (cf) {
    std::string line;
    std::getline(cf, line);  // header
    while (std::getline(cf, line)) {
      if (line.empty()) continue;
      NetCertRecord r;
      std::size_t p0 = line.find(',');
      std::size_t p1 = line.find(',', p0 + 1);
      std::size_t p2 = line.find(',', p1 + 1);
      std::size_t p3 = line.find(',', p2 + 1);
      r.degree = std::stoi(line.substr(p0 + 1, p1 - p0 - 1));
      r.attained = std::stol(line.substr(p1 + 1, p2 - p1 - 1));
      r.bound = std::stol(line.substr(p2 + 1, p3 - p2 - 1));
      std::string chain = line.substr(p3 + 1);
      r.chain_id = chain == "local" ? -1 : std::stoi(chain);
      cert.nets.push_back(r);
    }
  }
  return cert;
}

}  // namespace placebench
