#include "camonoid/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "camonoid/ca_engine.hpp"
#include "camonoid/errors.hpp"
#include "camonoid/ica_structure.hpp"
#include "camonoid/rank_analysis.hpp"

namespace camonoid {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "PASS";
    case CheckStatus::fail:
      return "FAIL";
    case CheckStatus::skip:
      return "SKIP";
  }
  return "?";
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::none_of(results.begin(), results.end(), [](const auto& r) {
    return r.status == CheckStatus::fail;
  });
}

std::string check_action_axioms(const ConfigSpace& space) {
  const auto& g = space.group();
  for (Code x = 0; x < space.size(); ++x) {
    if (space.act(x, 0) != x) return "x.e != x for x = " + std::to_string(x);
    for (Element a = 0; a < g.order(); ++a) {
      for (Element b = 0; b < g.order(); ++b) {
        if (space.act(space.act(x, a), b) != space.act(x, g.mul(a, b))) {
          return "(x.g).h != x.(gh) for x = " + std::to_string(x);
        }
      }
    }
  }
  return {};
}

std::string check_orbit_stabilizer(const Instance& inst) {
  const auto& t = inst.orbits;
  std::size_t total = 0;
  for (std::size_t o = 0; o < t.orbit_count(); ++o) {
    if (t.orbit_size[o] * t.stab[o].order() != inst.n()) {
      return "|xG| |G_x| != |G| for orbit " + std::to_string(o);
    }
    total += t.orbit_size[o];
  }
  if (total != inst.space.size()) return "orbit sizes do not sum to q^n";
  std::size_t alpha_sum = 0;
  for (auto a : t.alpha) alpha_sum += a;
  if (alpha_sum != t.orbit_count()) return "alpha does not sum to the orbit count";
  return {};
}

std::string check_ca_orbit_properties(const Instance& inst,
                                      const MonoidSet& ca) {
  const auto& space = inst.space;
  const auto& t = inst.orbits;
  std::vector<std::vector<Code>> orbits(t.orbit_count());
  for (Code x = 0; x < space.size(); ++x) orbits[t.orbit_id[x]].push_back(x);
  for (std::size_t e = 0; e < ca.size(); ++e) {
    const auto f = ca.element(e);
    for (unsigned k = 0; k < space.q(); ++k) {
      if (!space.is_constant(f[space.constant(k)])) {
        return "a CA sends a constant to a non-constant";
      }
    }
    for (std::size_t o = 0; o < orbits.size(); ++o) {
      // Image of an orbit is an orbit.
      const auto target = t.orbit_id[f[orbits[o][0]]];
      std::vector<Code> image;
      for (Code x : orbits[o]) {
        if (t.orbit_id[f[x]] != target) return "a CA splits an orbit";
        image.push_back(f[x]);
      }
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      if (image.size() != orbits[target].size()) {
        return "image of an orbit is not a whole orbit";
      }
      if (target == o && image.size() != orbits[o].size()) {
        return "a CA fixing an orbit is not a permutation of it";
      }
    }
  }
  return {};
}

std::string check_tau_existence(const Instance& inst, const MonoidSet* ca) {
  const auto& space = inst.space;
  const auto& t = inst.orbits;
  const auto& lat = inst.lattice;
  std::vector<Code> picks;
  // With the full CA set every orbit is checked; otherwise two per class.
  if (ca) {
    picks = t.reps;
  } else {
    for (std::size_t i = 0; i < lat.size(); ++i) {
      const auto orbits = t.orbits_in_class(i);
      for (std::size_t k = 0; k < std::min<std::size_t>(2, orbits.size()); ++k) {
        picks.push_back(t.reps[orbits[k]]);
      }
    }
  }
  // reach[a][b]: some CA sends orbit a into orbit b.
  std::vector<std::vector<char>> reach;
  if (ca) {
    reach.assign(t.orbit_count(), std::vector<char>(t.orbit_count(), 0));
    for (std::size_t e = 0; e < ca->size(); ++e) {
      const auto f = ca->element(e);
      for (std::size_t o = 0; o < t.orbit_count(); ++o) {
        reach[o][t.orbit_id[f[t.reps[o]]]] = 1;
      }
    }
  }
  for (Code x : picks) {
    for (Code y : picks) {
      if (x == y) continue;
      const bool expect = lat.le(t.block_of[t.orbit_id[x]],
                                 t.block_of[t.orbit_id[y]]);
      std::ostringstream where;
      where << " (x = " << x << ", y = " << y << ")";
      bool built = false;
      try {
        const auto tau = tau_xy(space, x, y);
        built = true;
        if (!is_equivariant(tau, space)) return "tau_xy is not a CA" + where.str();
        if (compose(tau, tau) != tau) return "tau_xy is not idempotent" + where.str();
        if (t.orbit_id[tau[x]] != t.orbit_id[y]) {
          return "tau_xy does not reach yG" + where.str();
        }
      } catch (const StabilizerNotDominated&) {
      }
      if (built != expect) return "tau_xy existence disagrees with the order" + where.str();
      if (ca) {
        const bool found = reach[t.orbit_id[x]][t.orbit_id[y]];
        if (found != expect) {
          return "some CA maps xG onto yG exactly when the order fails" +
                 where.str();
        }
      }
    }
  }
  return {};
}

namespace {

struct Runner {
  std::vector<CheckResult> results;

  // `body` returns an empty string on success. Guard errors become skips.
  void run(const std::string& name, const std::function<std::string()>& body) {
    CheckResult r{name, CheckStatus::pass, {}};
    try {
      r.detail = body();
      if (r.detail.rfind("skip:", 0) == 0) {
        r.status = CheckStatus::skip;
        r.detail = r.detail.substr(6);
      } else if (!r.detail.empty()) {
        r.status = CheckStatus::fail;
      }
    } catch (const GuardError& e) {
      r.status = CheckStatus::skip;
      r.detail = std::string("guard: ") + e.what();
    } catch (const std::exception& e) {
      r.status = CheckStatus::fail;
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }
};

}  // namespace

std::vector<CheckResult> verify_instance(const Instance& inst,
                                         const VerifyOptions& opts) {
  Runner run;
  const auto& space = inst.space;
  const bool abelian = inst.group.is_abelian();
  const std::string not_abelian = "skip: group is not abelian";

  std::optional<MonoidSet> ca;
  auto need_ca = [&]() -> const MonoidSet& {
    if (!ca) ca = enumerate_ca(inst, opts.guard, opts.exec);
    return *ca;
  };

  run.run("action axioms", [&] { return check_action_axioms(space); });
  run.run("orbit-stabilizer", [&] { return check_orbit_stabilizer(inst); });
  run.run("alpha certificates", [&]() -> std::string {
    const auto c = alpha_one_certificates(inst);
    if (c.violations) return std::to_string(c.violations) + " violations";
    return {};
  });
  run.run("weight census", [&]() -> std::string {
    if (inst.n() < 2 || inst.q() < 2) return "skip: needs n >= 2 and q >= 2";
    for (unsigned k = 0; k < inst.q(); ++k) {
      const auto w = weight_census(space, k);
      if (!w.holds()) {
        return "k = " + std::to_string(k) + ": weight " +
               std::to_string(w.weight) + " vs " + std::to_string(w.closed_form);
      }
    }
    return {};
  });
  run.run("tau existence", [&] { return check_tau_existence(inst); });
  run.run("CA cardinality", [&]() -> std::string {
    const auto& set = need_ca();
    std::uint64_t product = 1;
    for (const auto& h : inst.orbits.stab) product *= space.fix_count(h);
    const auto expect = ca_cardinality(inst.q(), inst.n());
    if (set.size() != *expect || product != *expect) {
      return "|CA| = " + std::to_string(set.size()) + ", q^(q^n) = " +
             std::to_string(*expect) + ", product = " + std::to_string(product);
    }
    return {};
  });
  run.run("ICA order", [&]() -> std::string {
    const auto ica = invertible_members(need_ca());
    const auto d = ica_decomposition(inst);
    if (BigInt(ica.size()) != d.total_order) {
      return "|ICA| = " + std::to_string(ica.size()) + ", formula " +
             d.total_order.str();
    }
    return {};
  });
  run.run("CA orbit properties", [&] {
    return check_ca_orbit_properties(inst, need_ca());
  });
  run.run("tau existence vs CA", [&] {
    return check_tau_existence(inst, &need_ca());
  });
  run.run("no-divisor corollary", [&]() -> std::string {
    if (!abelian) return not_abelian;
    if (inst.n() % inst.q() == 0) return "skip: q divides |G|";
    if (relative_rank(inst) != inst.lattice.edges.size()) {
      return "relative rank differs from |E_G|";
    }
    return {};
  });

  if (opts.closures) {
    run.run("generation sufficiency", [&]() -> std::string {
      if (!abelian) return not_abelian;
      const auto& set = need_ca();
      auto gens = generating_subset(invertible_members(set), opts.exec);
      for (auto& u : maps_of(generating_set_U(inst))) gens.push_back(u);
      const auto closed = closure(gens, space.size(), opts.cap, opts.exec);
      if (!closed.same_elements(set)) {
        return "closure has " + std::to_string(closed.size()) + " of " +
               std::to_string(set.size());
      }
      return {};
    });
    run.run("generator necessity", [&]() -> std::string {
      if (!abelian) return not_abelian;
      for (const auto& w : necessity_witnesses(inst, opts.guard, opts.cap,
                                               opts.exec)) {
        if (!w.holds()) {
          return "class " + std::to_string(w.class_index) + ": " +
                 std::to_string(w.offending) + " pairing kernels";
        }
      }
      return {};
    });
    run.run("small memory closure", [&]() -> std::string {
      const auto r = small_memory_closure_check(inst, opts.guard, opts.cap,
                                                opts.exec);
      if (!r.proper) return "closure is all of CA";
      if (!r.sigma_absent) return "(0 -> 1) is generated";
      return {};
    });
  }
  if (opts.exhaustive_rank) {
    run.run("relative rank vs oracle", [&]() -> std::string {
      if (!abelian) return not_abelian;
      RankSearchOptions ro;
      ro.enumerate_guard = opts.guard;
      ro.exec = opts.exec;
      const auto found = exhaustive_relative_rank(inst, ro);
      const auto formula = relative_rank(inst);
      if (found.rank != formula) {
        return "oracle " + std::to_string(found.rank) + ", formula " +
               std::to_string(formula);
      }
      return {};
    });
  }
  return run.results;
}

}  // namespace camonoid
