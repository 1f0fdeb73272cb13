#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "camonoid/instance.hpp"

namespace camonoid {

struct OrbitSummary {
  Code rep = 0;
  std::string config;         // rendered representative
  std::size_t size = 0;
  std::size_t class_index = 0;  // 1-based
  std::size_t stabilizer_order = 0;
  friend bool operator==(const OrbitSummary&, const OrbitSummary&) = default;
};

struct ClassSummary {
  std::size_t index = 0;  // 1-based
  std::size_t rep_order = 0;
  std::uint64_t rep_bits = 0;
  std::size_t conjugates = 0;
  std::size_t alpha = 0;
  friend bool operator==(const ClassSummary&, const ClassSummary&) = default;
};

struct OracleSummary {
  std::uint64_t ca_size = 0;
  std::uint64_t ica_size = 0;
  std::optional<bool> generation_matches;
  std::optional<std::size_t> exhaustive_relative_rank;
  friend bool operator==(const OracleSummary&, const OracleSummary&) = default;
};

struct AnalysisReport {
  std::string group;
  std::size_t n = 0;
  unsigned q = 0;
  bool abelian = true;
  std::optional<std::string> note;
  std::vector<OrbitSummary> orbits;
  std::vector<std::size_t> orbit_sizes;  // ascending
  std::vector<ClassSummary> classes;
  std::vector<std::size_t> alpha;
  std::size_t edge_count = 0;   // |E_G|, loops included
  std::size_t hasse_edges = 0;  // covering pairs only
  std::string ica_structure;
  std::string ica_simplified;
  std::string ica_order;  // decimal
  std::optional<std::size_t> relative_rank;
  std::vector<std::string> generators;  // provenance of U
  std::vector<std::size_t> alpha_one_classes;
  std::optional<std::size_t> group_rank;
  std::optional<long long> rank_bound_tight;
  std::optional<long long> rank_bound_coarse;
  std::optional<long long> rank_bound_with_ica;
  std::size_t certificate_violations = 0;
  std::size_t index_two_checked = 0;
  std::size_t divisibility_checked = 0;
  std::optional<OracleSummary> oracle;
  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct AnalyzeOptions {
  std::optional<std::size_t> ica_rank;
  /// Also run the enumeration oracles when within their guards.
  bool oracle = false;
  std::size_t cap = std::size_t{1} << 20;
};

AnalysisReport analyze(const Instance& inst, const AnalyzeOptions& opts = {});

void to_json(nlohmann::json& j, const AnalysisReport& r);
void from_json(const nlohmann::json& j, AnalysisReport& r);

std::string render_text(const AnalysisReport& r);

/// Classes and the full edge set, one per line.
std::string render_lattice(const SubgroupLattice& lattice);
/// Hasse diagram as a DOT digraph; nodes labeled by representative order.
std::string render_lattice_dot(const SubgroupLattice& lattice);

}  // namespace camonoid
