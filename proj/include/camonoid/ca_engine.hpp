#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "camonoid/config_space.hpp"
#include "camonoid/parallel.hpp"
#include "camonoid/transformation.hpp"

namespace camonoid {

/// A memory set S (strictly ascending element indices) and a local function
/// on A^S. Pattern codes are base q over S in memory order, least
/// significant digit first.
struct LocalRule {
  std::vector<Element> memory;
  std::vector<unsigned> table;
};

/// (g)(x)tau = table[pattern of x read at s.g for s in S].
/// Throws BadTableLength or InputError for a malformed rule.
Transformation from_local_rule(const LocalRule& rule, const ConfigSpace& space);

/// Local rule with memory set G whose induced map is t (only meaningful
/// for equivariant t).
LocalRule to_full_memory_rule(const Transformation& t,
                              const ConfigSpace& space);

bool is_equivariant(const Transformation& t, const ConfigSpace& space,
                    Exec exec = Exec::parallel);

/// Essential coordinates of the full-memory local function. Throws
/// NotEquivariant.
std::vector<Element> minimal_memory_set(const Transformation& t,
                                        const ConfigSpace& space);

/// The local rule of t on its minimal memory set.
LocalRule minimal_local_rule(const Transformation& t, const ConfigSpace& space);

/// x -> x.g; a cellular automaton whenever G is abelian.
Transformation shift(const ConfigSpace& space, Element g);

/// The idempotent (B -> a).
Transformation collapse(std::size_t degree, std::span<const Code> from,
                        Code to);

/// Idempotent sending x.h to y.gh, g the least witness of
/// G_x <= g^{-1} G_y g, fixing everything outside xG. Throws SameOrbit or
/// StabilizerNotDominated.
Transformation tau_xy(const ConfigSpace& space, Code x, Code y);

/// Involution exchanging xG and yG through x.h <-> y.ch, c the least
/// element with G_x = c^{-1} G_y c. Identity when xG = yG. Throws
/// ClassMismatch.
Transformation swap_orbits(const ConfigSpace& space, Code x, Code y);

struct WeightCensus {
  std::uint64_t weight = 0;       // sum of k-weights over non-constants
  std::uint64_t closed_form = 0;  // n(q-1)(q^{n-1}-1)
  std::uint64_t per_cell = 0;     // weight / n
  bool divisible_by_n = false;
  bool per_cell_divisible_by_q = false;

  bool holds() const {
    return weight == closed_form && divisible_by_n && !per_cell_divisible_by_q;
  }
};

/// Requires q >= 2 and n >= 2 (InputError otherwise).
WeightCensus weight_census(const ConfigSpace& space, unsigned k);

/// Local-rule document: `n q`, the memory line, then q^|S| symbols.
struct LocalRuleDocument {
  std::size_t n = 0;
  unsigned q = 0;
  LocalRule rule;
};

LocalRuleDocument read_local_rule(std::istream& in);
void write_local_rule(std::ostream& out, const LocalRuleDocument& doc);

}  // namespace camonoid
