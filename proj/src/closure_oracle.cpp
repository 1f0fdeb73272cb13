#include "camonoid/closure_oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "camonoid/errors.hpp"
#include "camonoid/kernels.hpp"

namespace camonoid {

std::optional<std::uint64_t> ca_cardinality(unsigned q, std::size_t n) {
  std::uint64_t qn = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (qn > 64) return std::nullopt;
    qn *= q;
  }
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < qn; ++i) {
    if (q != 0 && total > UINT64_MAX / q) return std::nullopt;
    total *= q;
  }
  return total;
}

MonoidSet enumerate_ca(const Instance& inst, std::uint64_t guard, Exec exec) {
  const auto expected = ca_cardinality(inst.q(), inst.n());
  if (!expected || *expected > guard) {
    throw SpaceTooLarge("|CA(G;A)| = " + std::to_string(inst.q()) + "^(" +
                        std::to_string(inst.q()) + "^" +
                        std::to_string(inst.n()) +
                        ") exceeds the enumeration guard of " +
                        std::to_string(guard));
  }
  const auto plan = kernels::make_equivariant_plan(inst.space, inst.orbits);
  std::uint64_t total = 1;
  for (const auto& rep : plan.reps) total *= rep.images.size();
  if (total != *expected) {
    throw InvariantViolation("product of fix counts " + std::to_string(total) +
                             " differs from q^(q^n) = " +
                             std::to_string(*expected));
  }

  const std::size_t d = inst.space.size();
  MonoidSet out(d);
  out.reserve(static_cast<std::size_t>(total));
  constexpr std::uint64_t kBlock = 4096;
  std::vector<Code> buffer;
  for (std::uint64_t begin = 0; begin < total; begin += kBlock) {
    const std::uint64_t end = std::min(total, begin + kBlock);
    buffer.resize(static_cast<std::size_t>(end - begin) * d);
    if (exec == Exec::serial) {
      kernels::serial::fill_equivariant_maps(plan, begin, end, buffer);
    } else {
      kernels::omp::fill_equivariant_maps(plan, begin, end, buffer);
    }
    for (std::uint64_t i = 0; i < end - begin; ++i) {
      const std::span<const Code> row(buffer.data() + i * d, d);
      if (!out.insert(row).second) {
        throw InvariantViolation("equivariant map enumerated twice");
      }
    }
  }
  return out;
}

MonoidSet invertible_members(const MonoidSet& ca) {
  MonoidSet out(ca.degree());
  std::vector<char> hit(ca.degree());
  for (std::size_t i = 0; i < ca.size(); ++i) {
    const auto e = ca.element(i);
    std::fill(hit.begin(), hit.end(), 0);
    bool bijective = true;
    for (Code y : e) {
      if (hit[y]) {
        bijective = false;
        break;
      }
      hit[y] = 1;
    }
    if (bijective) out.insert(e);
  }
  return out;
}

MonoidSet enumerate_ica(const Instance& inst, std::uint64_t guard, Exec exec) {
  return invertible_members(enumerate_ca(inst, guard, exec));
}

MonoidSet closure(std::span<const Transformation> gens, std::size_t degree,
                  std::size_t cap, Exec exec) {
  for (const auto& g : gens) {
    if (g.degree() != degree) {
      throw InputError("closure generators must share one degree");
    }
  }
  MonoidSet set(degree);
  set.insert(Transformation::identity(degree));
  std::vector<std::uint32_t> frontier;
  for (const auto& g : gens) {
    if (auto [idx, fresh] = set.insert(g); fresh) {
      frontier.push_back(static_cast<std::uint32_t>(idx));
    }
  }
  auto check_cap = [&] {
    if (set.size() > cap) {
      throw CapExceeded("closure exceeded the cap of " + std::to_string(cap) +
                        " elements");
    }
  };
  check_cap();

  constexpr std::size_t kChunk = 1024;
  std::vector<std::vector<Code>> candidates;
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (std::size_t begin = 0; begin < frontier.size(); begin += kChunk) {
      const std::size_t end = std::min(frontier.size(), begin + kChunk);
      const std::span<const std::uint32_t> chunk(frontier.data() + begin,
                                                 end - begin);
      if (exec == Exec::serial) {
        kernels::serial::expand(set, chunk, gens, candidates);
      } else {
        kernels::omp::expand(set, chunk, gens, candidates);
      }
      // Merge in frontier order so the result does not depend on threads.
      for (const auto& list : candidates) {
        for (std::size_t off = 0; off < list.size(); off += degree) {
          const std::span<const Code> m(list.data() + off, degree);
          if (auto [idx, fresh] = set.insert(m); fresh) {
            next.push_back(static_cast<std::uint32_t>(idx));
          }
        }
        check_cap();
      }
    }
    frontier = std::move(next);
  }
  return set;
}

std::vector<Transformation> generating_subset(const MonoidSet& group,
                                              Exec exec) {
  std::vector<Transformation> gens;
  if (group.empty()) return gens;
  MonoidSet current = closure(gens, group.degree(), group.size(), exec);
  for (std::size_t i = 0; i < group.size() && current.size() < group.size();
       ++i) {
    if (current.contains(group.element(i))) continue;
    gens.push_back(group.transformation(i));
    current = closure(gens, group.degree(), group.size(), exec);
  }
  return gens;
}

namespace {

struct DisjointSets {
  std::vector<std::uint32_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

/// Calls visit(indices) for each k-subset of [0, m) in lexicographic order;
/// stops early when visit returns true. Returns whether it stopped.
bool for_each_combination(std::size_t m, std::size_t k,
                          const std::function<bool(std::span<const std::size_t>)>& visit) {
  if (k > m) return false;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// b is a strictly finer partition than a (same domain, label vectors).
bool strictly_finer(std::span<const Code> fine, std::size_t fine_blocks,
                    std::span<const Code> coarse, std::size_t coarse_blocks) {
  if (fine_blocks <= coarse_blocks) return false;
  std::vector<Code> to(fine_blocks, UINT32_MAX);
  for (std::size_t x = 0; x < fine.size(); ++x) {
    if (to[fine[x]] == UINT32_MAX) {
      to[fine[x]] = coarse[x];
    } else if (to[fine[x]] != coarse[x]) {
      return false;
    }
  }
  return true;
}

std::size_t block_count(std::span<const Code> labels) {
  return labels.empty()
             ? 0
             : static_cast<std::size_t>(
                   *std::max_element(labels.begin(), labels.end())) + 1;
}

}  // namespace

RankSearchResult exhaustive_relative_rank(const Instance& inst,
                                          const RankSearchOptions& opts) {
  const MonoidSet ca = enumerate_ca(inst, opts.enumerate_guard, opts.exec);
  const MonoidSet ica = invertible_members(ca);
  const auto ica_gens = generating_subset(ica, opts.exec);
  const std::size_t d = ca.degree();

  std::vector<std::uint32_t> non_invertible;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (!ica.contains(ca.element(i))) {
      non_invertible.push_back(static_cast<std::uint32_t>(i));
    }
  }

  RankSearchResult result;
  auto generates = [&](const std::vector<Transformation>& extra) {
    if (++result.evaluations > opts.max_evaluations) {
      throw CapExceeded("relative-rank search exceeded " +
                        std::to_string(opts.max_evaluations) +
                        " closure evaluations");
    }
    std::vector<Transformation> gens = ica_gens;
    gens.insert(gens.end(), extra.begin(), extra.end());
    return closure(gens, d, ca.size(), opts.exec).size() == ca.size();
  };

  if (!opts.prune) {
    for (std::size_t k = 0; k <= opts.max_k; ++k) {
      std::vector<Transformation> chosen;
      const bool found = for_each_combination(
          non_invertible.size(), k, [&](std::span<const std::size_t> idx) {
            chosen.clear();
            for (auto i : idx) chosen.push_back(ca.transformation(non_invertible[i]));
            return generates(chosen);
          });
      if (found) {
        result.rank = k;
        result.witness = chosen;
        return result;
      }
    }
    throw CapExceeded("no generating extension up to max_k");
  }

  // ICA double cosets: v ~ u.v and v ~ v.u for u in a generating set of ICA.
  DisjointSets cosets(ca.size());
  std::vector<Code> buf(d);
  for (std::uint32_t v : non_invertible) {
    const auto vm = ca.element(v);
    for (const auto& u : ica_gens) {
      for (std::size_t x = 0; x < d; ++x) buf[x] = vm[u[static_cast<Code>(x)]];
      cosets.unite(v, static_cast<std::uint32_t>(*ca.find(buf)));
      for (std::size_t x = 0; x < d; ++x) buf[x] = u[vm[x]];
      cosets.unite(v, static_cast<std::uint32_t>(*ca.find(buf)));
    }
  }
  // Lexicographically least member of each double coset.
  std::vector<std::uint32_t> best(ca.size(), UINT32_MAX);
  for (std::uint32_t v : non_invertible) {
    const auto root = cosets.find(v);
    if (best[root] == UINT32_MAX ||
        std::lexicographical_compare(ca.element(v).begin(), ca.element(v).end(),
                                     ca.element(best[root]).begin(),
                                     ca.element(best[root]).end())) {
      best[root] = v;
    }
  }
  std::vector<std::uint32_t> reps;
  for (std::uint32_t v : non_invertible) {
    if (cosets.find(v) == v) reps.push_back(best[v]);
  }
  std::sort(reps.begin(), reps.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::lexicographical_compare(ca.element(a).begin(),
                                        ca.element(a).end(),
                                        ca.element(b).begin(),
                                        ca.element(b).end());
  });
  result.double_cosets = reps.size();

  // Distinct kernels of non-invertible maps, and the minimal ones among
  // them under refinement. A product whose first non-unit factor is v has a
  // kernel coarser than ker(u.v) for a unit u, so every minimal kernel type
  // must be realised by some added generator.
  MonoidSet kernels(d);
  std::vector<std::uint32_t> kernel_of(ca.size(), UINT32_MAX);
  for (std::uint32_t v : non_invertible) {
    const auto labels = kernel_labels(ca.element(v));
    kernel_of[v] = static_cast<std::uint32_t>(kernels.insert(labels).first);
  }
  std::vector<std::size_t> blocks(kernels.size());
  for (std::size_t k = 0; k < kernels.size(); ++k) {
    blocks[k] = block_count(kernels.element(k));
  }
  std::vector<char> minimal(kernels.size(), 1);
  for (std::size_t a = 0; a < kernels.size(); ++a) {
    for (std::size_t b = 0; b < kernels.size() && minimal[a]; ++b) {
      if (strictly_finer(kernels.element(b), blocks[b], kernels.element(a),
                         blocks[a])) {
        minimal[a] = 0;
      }
    }
  }
  // Group minimal kernels into ICA orbits: K.u has labels x -> K(u(x)).
  DisjointSets types(kernels.size());
  std::vector<Code> moved(d);
  for (std::size_t k = 0; k < kernels.size(); ++k) {
    if (!minimal[k]) continue;
    const auto labels = kernels.element(k);
    for (const auto& u : ica_gens) {
      for (std::size_t x = 0; x < d; ++x) moved[x] = labels[u[static_cast<Code>(x)]];
      const auto canon = kernel_labels(moved);
      const auto other = kernels.find(canon);
      if (!other) {
        throw InvariantViolation("ICA image of a kernel is not a kernel");
      }
      types.unite(static_cast<std::uint32_t>(k),
                  static_cast<std::uint32_t>(*other));
    }
  }
  std::vector<std::uint32_t> type_roots;
  for (std::size_t k = 0; k < kernels.size(); ++k) {
    if (minimal[k] && types.find(static_cast<std::uint32_t>(k)) == k) {
      type_roots.push_back(static_cast<std::uint32_t>(k));
    }
  }
  std::vector<std::vector<std::uint32_t>> candidates(type_roots.size());
  for (std::uint32_t r : reps) {
    const auto kid = kernel_of[r];
    if (!minimal[kid]) continue;
    const auto root = types.find(kid);
    const auto pos = std::find(type_roots.begin(), type_roots.end(), root) -
                     type_roots.begin();
    candidates[static_cast<std::size_t>(pos)].push_back(r);
  }
  for (const auto& c : candidates) {
    if (c.empty()) {
      throw InvariantViolation("minimal kernel type without a representative");
    }
  }
  result.lower_bound = type_roots.size();

  // One representative per minimal kernel type, plus `extra` free choices.
  for (std::size_t k = result.lower_bound; k <= opts.max_k; ++k) {
    const std::size_t extra = k - result.lower_bound;
    std::vector<std::size_t> pick(candidates.size(), 0);
    std::vector<Transformation> chosen;
    while (true) {
      std::vector<Transformation> base;
      for (std::size_t t = 0; t < candidates.size(); ++t) {
        base.push_back(ca.transformation(candidates[t][pick[t]]));
      }
      const bool found = for_each_combination(
          reps.size(), extra, [&](std::span<const std::size_t> idx) {
            chosen = base;
            for (auto i : idx) chosen.push_back(ca.transformation(reps[i]));
            return generates(chosen);
          });
      if (found) {
        result.rank = k;
        result.witness = chosen;
        return result;
      }
      std::size_t t = 0;
      while (t < pick.size() && ++pick[t] == candidates[t].size()) pick[t++] = 0;
      if (t == pick.size()) break;
    }
  }
  throw CapExceeded("no generating extension up to max_k");
}

}  // namespace camonoid
