#include "camonoid/rank_analysis.hpp"

#include <algorithm>

#include "camonoid/ca_engine.hpp"
#include "camonoid/errors.hpp"

namespace camonoid {

namespace {

void require_abelian(const Instance& inst) {
  if (!inst.group.is_abelian()) {
    throw NotAbelian("the relative-rank formula needs an abelian group");
  }
  if (inst.q() < 2) throw InputError("alphabet must have at least 2 symbols");
}

std::uint64_t require_in_guard(const Instance& inst, std::uint64_t guard) {
  const auto total = ca_cardinality(inst.q(), inst.n());
  if (!total || *total > guard) {
    throw SpaceTooLarge("|CA| = q^(q^n) exceeds the enumeration guard");
  }
  return *total;
}

std::string one_based(std::size_t i) { return std::to_string(i + 1); }

}  // namespace

ClassReps fixed_class_reps(const Instance& inst) {
  const std::size_t r = inst.lattice.size();
  ClassReps reps;
  reps.x.resize(r);
  reps.y.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    const auto orbits = inst.orbits.orbits_in_class(i);
    if (orbits.size() >= 1) reps.x[i] = inst.orbits.reps[orbits[0]];
    if (orbits.size() >= 2) reps.y[i] = inst.orbits.reps[orbits[1]];
  }
  return reps;
}

std::size_t relative_rank(const Instance& inst) {
  require_abelian(inst);
  const auto& alpha = inst.orbits.alpha;
  if (alpha[0] != inst.q()) {
    throw InvariantViolation("alpha of the class of G is not q");
  }
  std::size_t ones = 0;
  for (std::size_t i = 1; i < alpha.size(); ++i) ones += alpha[i] == 1;
  return inst.lattice.edges.size() - ones;
}

std::vector<Generator> generating_set_U(const Instance& inst) {
  require_abelian(inst);
  const auto reps = fixed_class_reps(inst);
  std::vector<Generator> out;
  for (auto [i, j] : inst.lattice.edges) {
    if (i == j) continue;
    if (!reps.x[i] || !reps.x[j]) {
      throw InvariantViolation("class without orbits in an abelian instance");
    }
    out.push_back({tau_xy(inst.space, *reps.x[i], *reps.x[j]),
                   "edge " + one_based(i) + "->" + one_based(j), i, j});
  }
  for (std::size_t i = 0; i < inst.lattice.size(); ++i) {
    if (inst.orbits.alpha[i] < 2) continue;
    out.push_back({tau_xy(inst.space, *reps.x[i], *reps.y[i]),
                   "loop " + one_based(i), i, i});
  }
  return out;
}

std::vector<Transformation> maps_of(const std::vector<Generator>& gens) {
  std::vector<Transformation> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.map);
  return out;
}

RankBounds rank_upper_bound(const Instance& inst,
                            std::optional<std::size_t> ica_rank) {
  require_abelian(inst);
  RankBounds b;
  b.group_rank = group_rank(inst.group);
  const long long m = static_cast<long long>(b.group_rank);
  const long long r = static_cast<long long>(inst.lattice.size());
  const long long edges = static_cast<long long>(inst.lattice.edges.size());
  const auto& alpha = inst.orbits.alpha;
  long long sum_m_alpha = 0;
  long long deltas = 0;
  for (std::size_t i = 1; i < alpha.size(); ++i) {
    sum_m_alpha += m * static_cast<long long>(alpha[i]);
    deltas += 3 * (alpha[i] == 1) + (alpha[i] == 2);
  }
  b.tight = sum_m_alpha + 2 * r + edges - (inst.q() == 2 ? 1 : 0) - deltas;
  b.coarse = sum_m_alpha + 2 * r + r * r;
  if (ica_rank) {
    b.with_ica_rank =
        static_cast<long long>(relative_rank(inst) + *ica_rank);
  }
  return b;
}

RankReport rank_report(const Instance& inst,
                       std::optional<std::size_t> ica_rank) {
  RankReport rep;
  rep.relative_rank = relative_rank(inst);
  rep.edge_count = inst.lattice.edges.size();
  rep.U = generating_set_U(inst);
  rep.bounds = rank_upper_bound(inst, ica_rank);
  for (std::size_t i = 1; i < inst.orbits.alpha.size(); ++i) {
    if (inst.orbits.alpha[i] == 1) rep.alpha_one_classes.push_back(i + 1);
  }
  if (rep.U.size() != rep.relative_rank) {
    throw InvariantViolation("|U| differs from the relative rank");
  }
  return rep;
}

CertificateReport alpha_one_certificates(const Instance& inst) {
  CertificateReport rep;
  const std::size_t n = inst.n();
  const unsigned q = inst.q();
  for (std::size_t i = 0; i < inst.lattice.size(); ++i) {
    CertificateEntry e;
    e.class_index = i + 1;
    e.index = n / inst.lattice.classes[i].rep.order();
    e.alpha = inst.orbits.alpha[i];
    if (e.index == 2) {
      e.index_two_applies = true;
      e.index_two_ok = (e.alpha == 1) == (q == 2);
    }
    if (i > 0 && e.alpha == 1) {
      e.divisibility_applies = true;
      e.divisibility_ok = e.index % q == 0;
    }
    rep.violations += !e.index_two_ok;
    rep.violations += !e.divisibility_ok;
    rep.entries.push_back(e);
  }
  return rep;
}

SmallMemoryReport small_memory_closure_check(const Instance& inst,
                                             std::uint64_t guard,
                                             std::size_t cap, Exec exec) {
  SmallMemoryReport rep;
  rep.ca_size = require_in_guard(inst, guard);
  const std::size_t n = inst.n();
  const unsigned q = inst.q();
  const auto& space = inst.space;
  MonoidSet maps(space.size());
  for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    LocalRule rule;
    for (Element g = 0; g < n; ++g) {
      if ((mask >> g) & 1u) rule.memory.push_back(g);
    }
    std::size_t patterns = 1;
    for (std::size_t i = 0; i < rule.memory.size(); ++i) patterns *= q;
    rule.table.assign(patterns, 0);
    // Odometer over all local tables.
    while (true) {
      maps.insert(from_local_rule(rule, space));
      ++rep.local_rules;
      std::size_t k = 0;
      while (k < patterns && ++rule.table[k] == q) rule.table[k++] = 0;
      if (k == patterns) break;
    }
  }
  rep.distinct_maps = maps.size();
  const auto gens = maps.sorted();
  const auto closed = closure(gens, space.size(), cap, exec);
  rep.closure_size = closed.size();
  rep.proper = closed.size() < rep.ca_size;
  const Code zero[] = {space.constant(0)};
  rep.sigma_absent =
      !closed.contains(collapse(space.size(), zero, space.constant(1)));
  return rep;
}

bool pairs_orbits(const Transformation& t, const ConfigSpace& space, Code x,
                  Code y) {
  const auto xs = orbit_of(space, x);
  const auto ys = orbit_of(space, y);
  auto in = [](const std::vector<Code>& v, Code c) {
    return std::binary_search(v.begin(), v.end(), c);
  };
  const auto labels = kernel_labels(t.view());
  std::vector<std::uint32_t> block_size(space.size(), 0);
  for (auto l : labels) ++block_size[l];
  for (Code c = 0; c < space.size(); ++c) {
    const bool special = in(xs, c) || in(ys, c);
    const auto size = block_size[labels[c]];
    if (!special) {
      if (size != 1) return false;
      continue;
    }
    if (size != 2) return false;
  }
  // Each pair has one end in each orbit.
  std::vector<int> seen(space.size(), 0);
  for (Code c : xs) ++seen[labels[c]];
  for (Code c : ys) {
    if (seen[labels[c]] != 1) return false;
  }
  return true;
}

std::vector<NecessityWitness> necessity_witnesses(const Instance& inst,
                                                  std::uint64_t guard,
                                                  std::size_t cap,
                                                  Exec exec) {
  require_in_guard(inst, guard);
  const auto U = generating_set_U(inst);
  const auto reps = fixed_class_reps(inst);
  const auto icagens = generating_subset(enumerate_ica(inst, guard, exec), exec);
  std::vector<NecessityWitness> out;
  for (std::size_t k = 0; k < U.size(); ++k) {
    if (!U[k].is_loop()) continue;
    const std::size_t i = U[k].from;
    std::vector<Transformation> gens = icagens;
    for (std::size_t j = 0; j < U.size(); ++j) {
      if (j != k) gens.push_back(U[j].map);
    }
    const auto closed = closure(gens, inst.space.size(), cap, exec);
    NecessityWitness w;
    w.class_index = i + 1;
    w.closure_size = closed.size();
    for (std::size_t e = 0; e < closed.size(); ++e) {
      const Transformation t = closed.transformation(e);
      if (pairs_orbits(t, inst.space, *reps.x[i], *reps.y[i])) ++w.offending;
    }
    out.push_back(w);
  }
  return out;
}

}  // namespace camonoid
