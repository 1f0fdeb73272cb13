#include "camonoid/monoid_set.hpp"

#include <algorithm>
#include <bit>

namespace camonoid {

MonoidSet::MonoidSet(std::size_t degree) : degree_(degree), slots_(64, kEmpty) {}

Transformation MonoidSet::transformation(std::size_t i) const {
  const auto e = element(i);
  return Transformation(std::vector<Code>(e.begin(), e.end()));
}

std::size_t MonoidSet::slot_for(std::span<const Code> map,
                                std::uint64_t hash) const {
  const std::size_t mask = slots_.size() - 1;
  std::size_t s = static_cast<std::size_t>(hash) & mask;
  while (true) {
    const std::uint32_t idx = slots_[s];
    if (idx == kEmpty) return s;
    if (hashes_[idx] == hash &&
        std::equal(map.begin(), map.end(), element(idx).begin())) {
      return s;
    }
    s = (s + 1) & mask;
  }
}

std::optional<std::size_t> MonoidSet::find(std::span<const Code> map,
                                           std::uint64_t hash) const {
  const std::uint32_t idx = slots_[slot_for(map, hash)];
  if (idx == kEmpty) return std::nullopt;
  return idx;
}

std::pair<std::size_t, bool> MonoidSet::insert(std::span<const Code> map) {
  const std::uint64_t hash = hash_codes(map);
  std::size_t s = slot_for(map, hash);
  if (slots_[s] != kEmpty) return {slots_[s], false};
  if ((size() + 1) * 2 > slots_.size()) {
    grow();
    s = slot_for(map, hash);
  }
  const auto idx = static_cast<std::uint32_t>(size());
  store_.insert(store_.end(), map.begin(), map.end());
  hashes_.push_back(hash);
  slots_[s] = idx;
  return {idx, true};
}

void MonoidSet::reserve(std::size_t n) {
  store_.reserve(n * degree_);
  hashes_.reserve(n);
  const std::size_t want = std::bit_ceil(std::max<std::size_t>(64, n * 2));
  if (want > slots_.size()) {
    slots_.assign(want, kEmpty);
    const std::size_t mask = want - 1;
    for (std::uint32_t i = 0; i < hashes_.size(); ++i) {
      std::size_t s = static_cast<std::size_t>(hashes_[i]) & mask;
      while (slots_[s] != kEmpty) s = (s + 1) & mask;
      slots_[s] = i;
    }
  }
}

void MonoidSet::grow() { reserve(slots_.size()); }

std::vector<Transformation> MonoidSet::sorted() const {
  std::vector<Transformation> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(transformation(i));
  std::sort(out.begin(), out.end());
  return out;
}

bool MonoidSet::same_elements(const MonoidSet& other) const {
  if (degree_ != other.degree_ || size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!other.find(element(i), hashes_[i])) return false;
  }
  return true;
}

}  // namespace camonoid
