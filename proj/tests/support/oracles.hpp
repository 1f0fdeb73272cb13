#pragma once

// Brute-force reference implementations. They read only the Cayley table
// and recompute everything from definitions, so they share no code paths
// with the library beyond FiniteGroup::mul.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "camonoid/group.hpp"

namespace oracle {

using camonoid::Element;
using camonoid::FiniteGroup;
using Map = std::vector<std::uint32_t>;

Element inverse(const FiniteGroup& g, Element a);

/// Every subset closed under the product that contains the identity.
std::vector<std::uint64_t> subgroups(const FiniteGroup& g);

std::uint64_t conjugate(const FiniteGroup& g, std::uint64_t h, Element x);

/// Partition of the subgroups into conjugacy classes, each sorted.
std::set<std::set<std::uint64_t>> conjugacy_partition(const FiniteGroup& g);

/// H1 <= x^{-1} H2 x for some x.
bool class_le(const FiniteGroup& g, std::uint64_t h1, std::uint64_t h2);

std::vector<unsigned> digits(std::uint32_t code, std::size_t n, unsigned q);
std::uint32_t encode(const std::vector<unsigned>& d, unsigned q);

/// x.g from (h)(x.g) = (h g^{-1})x.
std::uint32_t act(const FiniteGroup& g, unsigned q, std::uint32_t x, Element a);

std::uint32_t space_size(std::size_t n, unsigned q);

/// Orbits as sorted code lists, ordered by least member.
std::vector<std::vector<std::uint32_t>> orbits(const FiniteGroup& g, unsigned q);

std::uint64_t stabilizer(const FiniteGroup& g, unsigned q, std::uint32_t x);

bool equivariant(const FiniteGroup& g, unsigned q, const Map& f);

/// All CA as maps induced by local rules with memory G, evaluated directly.
std::set<Map> all_ca(const FiniteGroup& g, unsigned q);

bool bijective(const Map& f);

/// Submonoid generated by `gens` together with the identity.
std::set<Map> closure(const std::vector<Map>& gens, std::size_t degree);

/// Sum over non-constant x of #{h : (h)x != k}.
std::uint64_t weight(std::size_t n, unsigned q, unsigned k);

/// The group of the given name in the test corpus: "cyclic:N",
/// "cyclic:AxcyclicB", or "s3" (read from the data directory).
FiniteGroup corpus_group(const std::string& name);

/// cyclic 2-8, products of two cyclics up to order 16, s3.
std::vector<std::string> corpus();

}  // namespace oracle
