#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "camonoid/transformation.hpp"

namespace camonoid {

/// A deduplicated set of transformations of one degree, stored as one flat
/// array of image codes in insertion order. Lookups hash the raw map and
/// resolve collisions by full comparison. Concurrent const access is safe.
class MonoidSet {
 public:
  explicit MonoidSet(std::size_t degree);

  std::size_t degree() const { return degree_; }
  std::size_t size() const { return hashes_.size(); }
  bool empty() const { return hashes_.empty(); }

  std::span<const Code> element(std::size_t i) const {
    return {store_.data() + i * degree_, degree_};
  }
  Transformation transformation(std::size_t i) const;

  std::optional<std::size_t> find(std::span<const Code> map) const {
    return find(map, hash_codes(map));
  }
  std::optional<std::size_t> find(std::span<const Code> map,
                                  std::uint64_t hash) const;
  bool contains(std::span<const Code> map) const {
    return find(map).has_value();
  }
  bool contains(const Transformation& t) const { return contains(t.view()); }

  /// Returns (index, inserted).
  std::pair<std::size_t, bool> insert(std::span<const Code> map);
  std::pair<std::size_t, bool> insert(const Transformation& t) {
    return insert(t.view());
  }

  void reserve(std::size_t n);

  /// Elements in lexicographic order of their map arrays.
  std::vector<Transformation> sorted() const;
  /// Set equality, independent of insertion order.
  bool same_elements(const MonoidSet& other) const;

 private:
  void grow();
  std::size_t slot_for(std::span<const Code> map, std::uint64_t hash) const;

  static constexpr std::uint32_t kEmpty = 0xffffffffu;

  std::size_t degree_;
  std::vector<Code> store_;
  std::vector<std::uint64_t> hashes_;
  std::vector<std::uint32_t> slots_;
};

}  // namespace camonoid
