#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "camonoid/closure_oracle.hpp"
#include "camonoid/instance.hpp"

namespace camonoid {

enum class CheckStatus { pass, fail, skip };

const char* to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t guard = kDefaultEnumerateGuard;
  std::size_t cap = kDefaultClosureCap;
  /// Run the exhaustive relative-rank oracle.
  bool exhaustive_rank = true;
  /// Run the closure-based checks (generation, necessity, small memory).
  bool closures = true;
  Exec exec = Exec::parallel;
};

/// Every per-instance check. Guard violations become skips.
std::vector<CheckResult> verify_instance(const Instance& inst,
                                         const VerifyOptions& opts = {});

bool all_passed(const std::vector<CheckResult>& results);

// Individual properties, shared with the test suites. Each returns an empty
// string on success, else a description of the first failure.

std::string check_action_axioms(const ConfigSpace& space);
std::string check_orbit_stabilizer(const Instance& inst);
/// Orbit preservation, constants-to-constants and the orbit permutation
/// property over every member of `ca`.
std::string check_ca_orbit_properties(const Instance& inst,
                                      const MonoidSet& ca);
/// tau_xy exists iff [G_x] <= [G_y], and is an equivariant idempotent.
/// With `ca`, existence is also compared with the maps in `ca`.
std::string check_tau_existence(const Instance& inst,
                                const MonoidSet* ca = nullptr);

}  // namespace camonoid
