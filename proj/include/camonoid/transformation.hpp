#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "camonoid/config_space.hpp"

namespace camonoid {

/// A full map on configuration codes: map[x] is the image of x.
class Transformation {
 public:
  Transformation() = default;
  explicit Transformation(std::vector<Code> map) : map_(std::move(map)) {}
  static Transformation identity(std::size_t degree);

  std::size_t degree() const { return map_.size(); }
  Code operator[](Code x) const { return map_[x]; }
  Code& operator[](Code x) { return map_[x]; }
  std::span<const Code> view() const { return map_; }
  const std::vector<Code>& codes() const { return map_; }

  bool is_bijective() const;

  friend bool operator==(const Transformation&, const Transformation&) = default;
  friend auto operator<=>(const Transformation& a, const Transformation& b) {
    return a.map_ <=> b.map_;
  }

 private:
  std::vector<Code> map_;
};

/// Application order: x -> (x)first -> ((x)first)second.
Transformation compose(const Transformation& first,
                       const Transformation& second);
inline bool is_invertible(const Transformation& t) { return t.is_bijective(); }

/// 64-bit hash of a map array.
std::uint64_t hash_codes(std::span<const Code> codes);

/// Writes the image codes space-separated on one line.
void write_transformation(std::ostream& out, const Transformation& t);
/// Reads one map per non-empty, non-comment line.
std::vector<Transformation> read_transformations(std::istream& in);

/// Partition of the domain by equal image; blocks sorted ascending and
/// ordered by their minimal element.
struct KernelPartition {
  std::vector<std::vector<Code>> blocks;

  friend bool operator==(const KernelPartition&,
                         const KernelPartition&) = default;
};

KernelPartition kernel(const Transformation& t);

/// Kernel as a restricted-growth label vector: label[x] is the index of the
/// block of x, blocks numbered by first occurrence.
std::vector<std::uint32_t> kernel_labels(std::span<const Code> map);

}  // namespace camonoid
