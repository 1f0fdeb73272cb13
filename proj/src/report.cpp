#include "camonoid/report.hpp"

#include <algorithm>
#include <sstream>

#include "camonoid/closure_oracle.hpp"
#include "camonoid/ica_structure.hpp"
#include "camonoid/rank_analysis.hpp"

namespace camonoid {

using nlohmann::json;

AnalysisReport analyze(const Instance& inst, const AnalyzeOptions& opts) {
  AnalysisReport r;
  const auto& space = inst.space;
  const auto& t = inst.orbits;
  r.group = inst.group.name();
  r.n = inst.n();
  r.q = inst.q();
  r.abelian = inst.group.is_abelian();
  if (r.n == 1) r.note = "n = 1: CA(G;A) = Tran(A) and ICA(G;A) = Sym(A)";

  for (std::size_t o = 0; o < t.orbit_count(); ++o) {
    auto config = space.render_matrix(t.reps[o]);
    std::replace(config.begin(), config.end(), '\n', '/');
    r.orbits.push_back({t.reps[o], config,
                        t.orbit_size[o], t.block_of[o] + 1,
                        t.stab[o].order()});
  }
  r.orbit_sizes = t.sorted_sizes();
  for (std::size_t i = 0; i < inst.lattice.size(); ++i) {
    const auto& c = inst.lattice.classes[i];
    r.classes.push_back({i + 1, c.rep.order(), c.rep.bits(), c.members.size(),
                         t.alpha[i]});
  }
  r.alpha = t.alpha;
  r.edge_count = inst.lattice.edges.size();
  r.hasse_edges = inst.lattice.hasse_edges().size();

  const auto d = ica_decomposition(inst);
  r.ica_structure = d.structure();
  r.ica_simplified = d.simplified();
  r.ica_order = d.total_order.str();

  if (r.abelian && r.q >= 2) {
    const auto rank = rank_report(inst, opts.ica_rank);
    r.relative_rank = rank.relative_rank;
    for (const auto& g : rank.U) r.generators.push_back(g.provenance);
    r.alpha_one_classes = rank.alpha_one_classes;
    r.group_rank = rank.bounds.group_rank;
    r.rank_bound_tight = rank.bounds.tight;
    r.rank_bound_coarse = rank.bounds.coarse;
    r.rank_bound_with_ica = rank.bounds.with_ica_rank;
  }

  const auto cert = alpha_one_certificates(inst);
  r.certificate_violations = cert.violations;
  for (const auto& e : cert.entries) {
    r.index_two_checked += e.index_two_applies;
    r.divisibility_checked += e.divisibility_applies;
  }

  if (opts.oracle) {
    const auto total = ca_cardinality(r.q, r.n);
    if (total && *total <= kDefaultEnumerateGuard) {
      OracleSummary o;
      const auto ica = enumerate_ica(inst);
      o.ca_size = *total;
      o.ica_size = ica.size();
      if (r.relative_rank) {
        auto gens = generating_subset(ica);
        for (auto& u : maps_of(generating_set_U(inst))) gens.push_back(u);
        o.generation_matches =
            closure(gens, space.size(), opts.cap).size() == *total;
        o.exhaustive_relative_rank = exhaustive_relative_rank(inst).rank;
      }
      r.oracle = o;
    }
  }
  return r;
}

namespace {

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> get_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

void to_json(json& j, const AnalysisReport& r) {
  json orbits = json::array();
  for (const auto& o : r.orbits) {
    orbits.push_back({{"rep", o.rep},
                      {"config", o.config},
                      {"size", o.size},
                      {"class", o.class_index},
                      {"stabilizer_order", o.stabilizer_order}});
  }
  json classes = json::array();
  for (const auto& c : r.classes) {
    classes.push_back({{"index", c.index},
                       {"rep_order", c.rep_order},
                       {"rep_bits", c.rep_bits},
                       {"conjugates", c.conjugates},
                       {"alpha", c.alpha}});
  }
  json oracle = nullptr;
  if (r.oracle) {
    oracle = {{"ca_size", r.oracle->ca_size},
              {"ica_size", r.oracle->ica_size},
              {"generation_matches", opt(r.oracle->generation_matches)},
              {"exhaustive_relative_rank",
               opt(r.oracle->exhaustive_relative_rank)}};
  }
  j = {{"group", r.group},
       {"n", r.n},
       {"q", r.q},
       {"abelian", r.abelian},
       {"note", opt(r.note)},
       {"orbit_count", r.orbits.size()},
       {"orbits", orbits},
       {"orbit_sizes", r.orbit_sizes},
       {"class_count", r.classes.size()},
       {"classes", classes},
       {"alpha", r.alpha},
       {"edge_count", r.edge_count},
       {"hasse_edges", r.hasse_edges},
       {"ica_structure", r.ica_structure},
       {"ica_simplified", r.ica_simplified},
       {"ica_order", r.ica_order},
       {"relative_rank", opt(r.relative_rank)},
       {"generators", r.generators},
       {"alpha_one_classes", r.alpha_one_classes},
       {"group_rank", opt(r.group_rank)},
       {"rank_bound_tight", opt(r.rank_bound_tight)},
       {"rank_bound_coarse", opt(r.rank_bound_coarse)},
       {"rank_bound_with_ica", opt(r.rank_bound_with_ica)},
       {"certificates",
        {{"violations", r.certificate_violations},
         {"index_two_checked", r.index_two_checked},
         {"divisibility_checked", r.divisibility_checked}}},
       {"oracle", oracle}};
}

void from_json(const json& j, AnalysisReport& r) {
  r = {};
  j.at("group").get_to(r.group);
  j.at("n").get_to(r.n);
  j.at("q").get_to(r.q);
  j.at("abelian").get_to(r.abelian);
  r.note = get_opt<std::string>(j, "note");
  for (const auto& o : j.at("orbits")) {
    r.orbits.push_back({o.at("rep").get<Code>(), o.at("config").get<std::string>(),
                        o.at("size").get<std::size_t>(),
                        o.at("class").get<std::size_t>(),
                        o.at("stabilizer_order").get<std::size_t>()});
  }
  j.at("orbit_sizes").get_to(r.orbit_sizes);
  for (const auto& c : j.at("classes")) {
    r.classes.push_back({c.at("index").get<std::size_t>(),
                         c.at("rep_order").get<std::size_t>(),
                         c.at("rep_bits").get<std::uint64_t>(),
                         c.at("conjugates").get<std::size_t>(),
                         c.at("alpha").get<std::size_t>()});
  }
  j.at("alpha").get_to(r.alpha);
  j.at("edge_count").get_to(r.edge_count);
  j.at("hasse_edges").get_to(r.hasse_edges);
  j.at("ica_structure").get_to(r.ica_structure);
  j.at("ica_simplified").get_to(r.ica_simplified);
  j.at("ica_order").get_to(r.ica_order);
  r.relative_rank = get_opt<std::size_t>(j, "relative_rank");
  j.at("generators").get_to(r.generators);
  j.at("alpha_one_classes").get_to(r.alpha_one_classes);
  r.group_rank = get_opt<std::size_t>(j, "group_rank");
  r.rank_bound_tight = get_opt<long long>(j, "rank_bound_tight");
  r.rank_bound_coarse = get_opt<long long>(j, "rank_bound_coarse");
  r.rank_bound_with_ica = get_opt<long long>(j, "rank_bound_with_ica");
  const auto& c = j.at("certificates");
  c.at("violations").get_to(r.certificate_violations);
  c.at("index_two_checked").get_to(r.index_two_checked);
  c.at("divisibility_checked").get_to(r.divisibility_checked);
  if (j.contains("oracle") && !j.at("oracle").is_null()) {
    const auto& o = j.at("oracle");
    OracleSummary s;
    o.at("ca_size").get_to(s.ca_size);
    o.at("ica_size").get_to(s.ica_size);
    s.generation_matches = get_opt<bool>(o, "generation_matches");
    s.exhaustive_relative_rank =
        get_opt<std::size_t>(o, "exhaustive_relative_rank");
    r.oracle = s;
  }
}

namespace {

template <typename T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

}  // namespace

std::string render_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "group " << r.group << "  n = " << r.n << "  q = " << r.q
     << (r.abelian ? "  abelian" : "  nonabelian") << '\n';
  if (r.note) os << "note: " << *r.note << '\n';
  os << "orbits: " << r.orbits.size() << "  sizes (" << join(r.orbit_sizes)
     << ")\n";
  for (const auto& o : r.orbits) {
    os << "  rep " << o.rep << "  " << o.config << "  size " << o.size
       << "  |stab| " << o.stabilizer_order << "  class " << o.class_index
       << '\n';
  }
  os << "subgroup classes: " << r.classes.size() << '\n';
  for (const auto& c : r.classes) {
    os << "  [" << c.index << "] order " << c.rep_order << "  conjugates "
       << c.conjugates << "  alpha " << c.alpha << '\n';
  }
  os << "alpha = (" << join(r.alpha) << ")\n";
  os << "|E_G| = " << r.edge_count << "  (hasse edges " << r.hasse_edges
     << ")\n";
  os << "ICA: " << r.ica_structure << '\n';
  os << "   = " << r.ica_simplified << '\n';
  os << "|ICA| = " << r.ica_order << '\n';
  if (r.relative_rank) {
    os << "relative rank: " << *r.relative_rank << '\n';
    os << "U: " << join(r.generators, "; ") << '\n';
    os << "alpha_i = 1 classes (i >= 2): "
       << (r.alpha_one_classes.empty() ? "none" : join(r.alpha_one_classes))
       << '\n';
    os << "group rank m = " << *r.group_rank << '\n';
    os << "rank bound (tight): " << *r.rank_bound_tight << '\n';
    os << "rank bound (coarse): " << *r.rank_bound_coarse << '\n';
    if (r.rank_bound_with_ica) {
      os << "rank bound (relative + ICA): " << *r.rank_bound_with_ica << '\n';
    }
  } else {
    os << "relative rank: not computed (nonabelian group)\n";
  }
  os << "certificates: " << r.certificate_violations << " violations  ("
     << r.index_two_checked << " index-2, " << r.divisibility_checked
     << " divisibility)\n";
  if (r.oracle) {
    os << "oracle |CA| = " << r.oracle->ca_size << "  |ICA| = "
       << r.oracle->ica_size << '\n';
    if (r.oracle->generation_matches) {
      os << "oracle <ICA u U> = CA: "
         << (*r.oracle->generation_matches ? "yes" : "no") << '\n';
    }
    if (r.oracle->exhaustive_relative_rank) {
      os << "oracle relative rank: " << *r.oracle->exhaustive_relative_rank
         << '\n';
    }
  }
  return os.str();
}

std::string render_lattice(const SubgroupLattice& lattice) {
  std::ostringstream os;
  os << "classes: " << lattice.size() << '\n';
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto& c = lattice.classes[i];
    os << "  [" << i + 1 << "] order " << c.rep.order() << "  conjugates "
       << c.members.size() << "  rep {" << join(c.rep.members()) << "}\n";
  }
  const auto hasse = lattice.hasse_edges();
  os << "edges: " << lattice.edges.size() << " (loops included), hasse "
     << hasse.size() << '\n';
  for (auto [i, j] : lattice.edges) {
    os << "  [" << i + 1 << "] <= [" << j + 1 << "]\n";
  }
  return os.str();
}

std::string render_lattice_dot(const SubgroupLattice& lattice) {
  std::ostringstream os;
  os << "digraph lattice {\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    os << "  c" << i + 1 << " [label=\"" << lattice.classes[i].rep.order()
       << "\"];\n";
  }
  for (auto [i, j] : lattice.hasse_edges()) {
    os << "  c" << j + 1 << " -> c" << i + 1 << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace camonoid
