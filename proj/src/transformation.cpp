#include "camonoid/transformation.hpp"

#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>

#include "camonoid/errors.hpp"

namespace camonoid {

Transformation Transformation::identity(std::size_t degree) {
  std::vector<Code> m(degree);
  std::iota(m.begin(), m.end(), Code{0});
  return Transformation(std::move(m));
}

bool Transformation::is_bijective() const {
  std::vector<char> hit(map_.size(), 0);
  for (Code y : map_) {
    if (y >= map_.size() || hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

Transformation compose(const Transformation& first,
                       const Transformation& second) {
  std::vector<Code> m(first.degree());
  for (std::size_t x = 0; x < m.size(); ++x) m[x] = second[first[x]];
  return Transformation(std::move(m));
}

std::uint64_t hash_codes(std::span<const Code> codes) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ codes.size();
  for (Code c : codes) {
    h ^= c;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 32;
  }
  return h;
}

void write_transformation(std::ostream& out, const Transformation& t) {
  for (std::size_t i = 0; i < t.degree(); ++i) {
    if (i) out << ' ';
    out << t[static_cast<Code>(i)];
  }
  out << '\n';
}

std::vector<Transformation> read_transformations(std::istream& in) {
  std::vector<Transformation> out;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream is(line);
    std::vector<Code> m;
    long long v = 0;
    while (is >> v) {
      if (v < 0) {
        throw InputError("negative image code on line " +
                         std::to_string(lineno));
      }
      m.push_back(static_cast<Code>(v));
    }
    if (!is.eof()) {
      throw InputError("non-integer token on line " + std::to_string(lineno));
    }
    for (Code y : m) {
      if (y >= m.size()) {
        throw InputError("image code " + std::to_string(y) +
                         " out of range on line " + std::to_string(lineno));
      }
    }
    if (!out.empty() && out.front().degree() != m.size()) {
      throw InputError("line " + std::to_string(lineno) +
                       " has a different degree from the first map");
    }
    out.emplace_back(std::move(m));
  }
  return out;
}

KernelPartition kernel(const Transformation& t) {
  const auto labels = kernel_labels(t.view());
  KernelPartition k;
  for (std::size_t x = 0; x < labels.size(); ++x) {
    if (labels[x] == k.blocks.size()) k.blocks.emplace_back();
    k.blocks[labels[x]].push_back(static_cast<Code>(x));
  }
  return k;
}

std::vector<std::uint32_t> kernel_labels(std::span<const Code> map) {
  std::unordered_map<Code, std::uint32_t> block;
  std::vector<std::uint32_t> labels(map.size());
  for (std::size_t x = 0; x < map.size(); ++x) {
    auto [it, fresh] =
        block.try_emplace(map[x], static_cast<std::uint32_t>(block.size()));
    labels[x] = it->second;
  }
  return labels;
}

}  // namespace camonoid
