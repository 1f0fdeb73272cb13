#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "camonoid/instance.hpp"
#include "camonoid/monoid_set.hpp"
#include "camonoid/parallel.hpp"
#include "camonoid/transformation.hpp"

namespace camonoid {

/// Default limit on |CA(G;A)| = q^(q^n) for full enumeration.
inline constexpr std::uint64_t kDefaultEnumerateGuard = std::uint64_t{1} << 20;
/// Default limit on the number of elements a closure may reach.
inline constexpr std::size_t kDefaultClosureCap = std::size_t{1} << 20;

/// q^(q^n) when it fits in 64 bits.
std::optional<std::uint64_t> ca_cardinality(unsigned q, std::size_t n);

/// Every equivariant map, built by sending each orbit representative to a
/// code fixed by its stabilizer. Throws SpaceTooLarge past `guard`.
MonoidSet enumerate_ca(const Instance& inst,
                       std::uint64_t guard = kDefaultEnumerateGuard,
                       Exec exec = Exec::parallel);

/// The bijective members of `ca`.
MonoidSet invertible_members(const MonoidSet& ca);

MonoidSet enumerate_ica(const Instance& inst,
                        std::uint64_t guard = kDefaultEnumerateGuard,
                        Exec exec = Exec::parallel);

/// Submonoid generated by `gens` (plus the identity), by breadth-first
/// expansion with products on both sides. Throws CapExceeded once more than
/// `cap` elements are reached.
MonoidSet closure(std::span<const Transformation> gens, std::size_t degree,
                  std::size_t cap = kDefaultClosureCap,
                  Exec exec = Exec::parallel);

/// A subset of a finite group of transformations that generates it, chosen
/// greedily in insertion order.
std::vector<Transformation> generating_subset(const MonoidSet& group,
                                              Exec exec = Exec::parallel);

struct RankSearchOptions {
  /// Restrict candidates to one element per ICA double coset and require a
  /// representative for every minimal kernel type. Without pruning every
  /// subset of non-invertible maps is tried.
  bool prune = true;
  std::uint64_t enumerate_guard = kDefaultEnumerateGuard;
  /// Maximum number of closure evaluations before CapExceeded.
  std::size_t max_evaluations = 200000;
  std::size_t max_k = 16;
  Exec exec = Exec::parallel;
};

struct RankSearchResult {
  std::size_t rank = 0;
  /// Number of ICA-orbits of minimal kernels (pruned mode only): no set of
  /// fewer additions can generate.
  std::size_t lower_bound = 0;
  std::size_t evaluations = 0;
  std::size_t double_cosets = 0;
  std::vector<Transformation> witness;
};

/// Smallest k such that some k-subset V of CA(G;A) has
/// closure(ICA u V) = CA(G;A), by exhaustive search in increasing k.
RankSearchResult exhaustive_relative_rank(const Instance& inst,
                                          const RankSearchOptions& opts = {});

}  // namespace camonoid
