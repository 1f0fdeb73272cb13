#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "camonoid/closure_oracle.hpp"
#include "camonoid/instance.hpp"
#include "camonoid/transformation.hpp"

namespace camonoid {

// Class indices in this module are 1-based in reports and provenance
// strings (class 1 is G itself) and 0-based in function arguments.

/// x_i: least representative of the least orbit in class i; y_i: the
/// representative of the second orbit when alpha_i >= 2.
struct ClassReps {
  std::vector<std::optional<Code>> x;
  std::vector<std::optional<Code>> y;
};

ClassReps fixed_class_reps(const Instance& inst);

/// |E_G| minus the number of classes i >= 2 with alpha_i = 1. Throws
/// NotAbelian, or InputError when q < 2.
std::size_t relative_rank(const Instance& inst);

struct Generator {
  Transformation map;
  std::string provenance;  // "edge i->j" or "loop i"
  std::size_t from = 0;    // 0-based classes
  std::size_t to = 0;
  bool is_loop() const { return from == to; }
};

/// tau(x_i, x_j) for every edge i != j of E_G, then tau(x_i, y_i) for every
/// class with alpha_i >= 2. Throws NotAbelian.
std::vector<Generator> generating_set_U(const Instance& inst);

std::vector<Transformation> maps_of(const std::vector<Generator>& gens);

struct RankBounds {
  long long tight = 0;
  long long coarse = 0;
  std::size_t group_rank = 0;
  /// relative_rank + the supplied bound on Rank(ICA).
  std::optional<long long> with_ica_rank;
};

RankBounds rank_upper_bound(const Instance& inst,
                            std::optional<std::size_t> ica_rank = {});

struct RankReport {
  std::size_t relative_rank = 0;
  std::size_t edge_count = 0;
  std::vector<Generator> U;
  RankBounds bounds;
  std::vector<std::size_t> alpha_one_classes;  // 1-based, all >= 2
};

RankReport rank_report(const Instance& inst,
                       std::optional<std::size_t> ica_rank = {});

struct CertificateEntry {
  std::size_t class_index = 0;  // 1-based
  std::size_t index = 0;        // [G:H]
  std::size_t alpha = 0;
  bool index_two_applies = false;
  bool index_two_ok = true;
  bool divisibility_applies = false;
  bool divisibility_ok = true;
};

struct CertificateReport {
  std::vector<CertificateEntry> entries;
  std::size_t violations = 0;
};

/// Index 2: alpha = 1 iff q = 2. alpha = 1 (H != G): q divides [G:H].
CertificateReport alpha_one_certificates(const Instance& inst);

struct SmallMemoryReport {
  std::size_t local_rules = 0;
  std::size_t distinct_maps = 0;
  std::size_t closure_size = 0;
  std::uint64_t ca_size = 0;
  bool proper = false;
  bool sigma_absent = false;
  bool holds() const { return proper && sigma_absent; }
};

/// Closes every CA induced by a local rule on a proper subset of G and
/// checks that (0 -> 1) is never reached. Throws SpaceTooLarge past the
/// enumeration guard.
SmallMemoryReport small_memory_closure_check(
    const Instance& inst, std::uint64_t guard = kDefaultEnumerateGuard,
    std::size_t cap = kDefaultClosureCap, Exec exec = Exec::parallel);

/// True when the non-singleton kernel blocks of t are exactly pairs
/// {a, b} with a in xG and b in yG, covering both orbits.
bool pairs_orbits(const Transformation& t, const ConfigSpace& space, Code x,
                  Code y);

struct NecessityWitness {
  std::size_t class_index = 0;  // 1-based
  std::size_t closure_size = 0;
  std::size_t offending = 0;    // elements with the pairing kernel
  bool holds() const { return offending == 0; }
};

/// For every loop generator of U, scans closure(ICA u U minus it) for a
/// map whose kernel pairs x_iG with y_iG.
std::vector<NecessityWitness> necessity_witnesses(
    const Instance& inst, std::uint64_t guard = kDefaultEnumerateGuard,
    std::size_t cap = kDefaultClosureCap, Exec exec = Exec::parallel);

}  // namespace camonoid
