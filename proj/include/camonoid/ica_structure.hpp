#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "camonoid/instance.hpp"

namespace camonoid {

using BigInt = boost::multiprecision::cpp_int;

/// The permutations of an orbit O commuting with the action of G, realised
/// by the invertible CA that fix O setwise.
struct OrbitCentralizer {
  std::size_t orbit = 0;
  /// |C(G^O)|: number of y in O with G_y = G_x for the representative x.
  std::size_t order = 0;
  std::vector<Code> elements;
  /// Intersection of the stabilizers of all points of O.
  Subgroup pointwise_stab;
  /// |N_G(G_x)| / |G_x|, which must equal `order`.
  std::size_t normalizer_quotient = 0;
};

OrbitCentralizer orbit_centralizer(const Instance& inst, std::size_t orbit);

struct IcaFactor {
  std::size_t class_index = 0;
  std::size_t centralizer_order = 1;
  std::size_t alpha = 0;
  std::string centralizer_label;  // e.g. "Z2xZ2", "1", or "G6"
  /// Invariant factors of C_i when it is abelian.
  std::optional<std::vector<std::size_t>> invariants;
  std::string label;              // e.g. "Z2xZ2 wr S2"
};

/// ICA(G;A) as a product of wreath products C_i wr Sym(alpha_i), one per
/// conjugacy class of subgroups.
struct IcaDecomposition {
  std::vector<IcaFactor> factors;
  BigInt total_order = 1;  // prod |C_i|^alpha_i * alpha_i!

  /// Factors in class order, runs of equal factors written as a power:
  /// "(1 wr S2) x (Z2 wr S1)^3 x (Z2xZ2 wr S2)".
  std::string structure() const;
  /// Same group with trivial wreaths unfolded and cyclic factors collected:
  /// "(Z2)^4 x (Z2xZ2 wr S2)".
  std::string simplified() const;
};

IcaDecomposition ica_decomposition(const Instance& inst);

/// Invariant factors d1 | d2 | ... of N_G(H)/H when that quotient is
/// abelian; empty optional otherwise. The trivial group yields {}.
std::optional<std::vector<std::size_t>> normalizer_quotient_invariants(
    const FiniteGroup& g, const Subgroup& h);

/// "1" for no factors, else "Z<d1>xZ<d2>...".
std::string abelian_label(const std::vector<std::size_t>& invariants);

}  // namespace camonoid
