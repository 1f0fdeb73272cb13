// camonoid: analyze the monoid of cellular automata over a finite group.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "camonoid/ca_engine.hpp"
#include "camonoid/closure_oracle.hpp"
#include "camonoid/errors.hpp"
#include "camonoid/parallel.hpp"
#include "camonoid/rank_analysis.hpp"
#include "camonoid/report.hpp"
#include "camonoid/verify.hpp"

using namespace camonoid;
using nlohmann::json;

namespace {

struct Globals {
  bool json = false;
  std::size_t cap = kDefaultClosureCap;
  int threads = 0;
};

Instance make_instance(const std::string& spec, unsigned q) {
  if (q < 2) throw InputError("q must be at least 2");
  return Instance(load_group(spec), q);
}

int cmd_analyze(const Globals& g, const std::string& spec, unsigned q,
                std::optional<std::size_t> ica_rank, bool oracle) {
  const Instance inst = make_instance(spec, q);
  AnalyzeOptions opts;
  opts.ica_rank = ica_rank;
  opts.oracle = oracle;
  opts.cap = g.cap;
  const auto report = analyze(inst, opts);
  if (g.json) {
    std::cout << json(report).dump(2) << '\n';
  } else {
    std::cout << render_text(report);
  }
  return report.certificate_violations ? 3 : 0;
}

int cmd_verify(const Globals& g, const std::string& spec, unsigned q,
               bool no_rank, bool no_closures) {
  const Instance inst = make_instance(spec, q);
  VerifyOptions opts;
  opts.cap = g.cap;
  opts.exhaustive_rank = !no_rank;
  opts.closures = !no_closures;
  const auto results = verify_instance(inst, opts);
  if (g.json) {
    json out = json::array();
    for (const auto& r : results) {
      out.push_back({{"check", r.name},
                     {"status", to_string(r.status)},
                     {"detail", r.detail}});
    }
    std::cout << out.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      std::cout << to_string(r.status) << "  " << r.name;
      if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
      std::cout << '\n';
    }
  }
  return all_passed(results) ? 0 : 3;
}

int cmd_lattice(const Globals& g, const std::string& spec, bool dot) {
  const auto group = load_group(spec);
  const auto lattice = conjugacy_classes(group);
  if (dot) {
    std::cout << render_lattice_dot(lattice);
  } else if (g.json) {
    json classes = json::array();
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      const auto& c = lattice.classes[i];
      classes.push_back({{"index", i + 1},
                         {"rep_order", c.rep.order()},
                         {"rep", c.rep.members()},
                         {"conjugates", c.members.size()}});
    }
    json edges = json::array();
    for (auto [i, j] : lattice.edges) edges.push_back({i + 1, j + 1});
    json hasse = json::array();
    for (auto [i, j] : lattice.hasse_edges()) hasse.push_back({i + 1, j + 1});
    std::cout << json{{"group", group.name()},
                      {"class_count", lattice.size()},
                      {"classes", classes},
                      {"edge_count", lattice.edges.size()},
                      {"edges", edges},
                      {"hasse_edges", hasse}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << render_lattice(lattice);
  }
  return 0;
}

int cmd_closure(const Globals& g, const std::string& spec, unsigned q,
                const std::string& set, const std::string& gens_file,
                bool dump) {
  const Instance inst = make_instance(spec, q);
  const std::size_t degree = inst.space.size();
  std::optional<MonoidSet> result;
  if (set == "ca") {
    result = enumerate_ca(inst);
  } else if (set == "ica") {
    result = enumerate_ica(inst);
  } else if (set == "generated") {
    auto gens = generating_subset(enumerate_ica(inst));
    for (auto& u : maps_of(generating_set_U(inst))) gens.push_back(u);
    result = closure(gens, degree, g.cap);
  } else if (set == "small") {
    const auto r = small_memory_closure_check(inst, kDefaultEnumerateGuard, g.cap);
    if (g.json) {
      std::cout << json{{"set", set},
                        {"local_rules", r.local_rules},
                        {"distinct_maps", r.distinct_maps},
                        {"size", r.closure_size},
                        {"ca_size", r.ca_size},
                        {"proper", r.proper},
                        {"sigma_absent", r.sigma_absent}}
                       .dump(2)
                << '\n';
    } else {
      std::cout << "local rules on proper subsets: " << r.local_rules << " ("
                << r.distinct_maps << " distinct maps)\n"
                << "closure size: " << r.closure_size << " of " << r.ca_size
                << '\n'
                << "proper submonoid: " << (r.proper ? "yes" : "no") << '\n'
                << "(0 -> 1) absent: " << (r.sigma_absent ? "yes" : "no")
                << '\n';
    }
    return r.holds() ? 0 : 3;
  } else {
    if (gens_file.empty()) throw InputError("--set file needs --gens");
    std::ifstream in(gens_file);
    if (!in) throw InputError("cannot open " + gens_file);
    const auto gens = read_transformations(in);
    for (const auto& t : gens) {
      if (t.degree() != degree) {
        throw InputError("generator degree does not match q^n");
      }
    }
    result = closure(gens, degree, g.cap);
  }
  if (g.json && !dump) {
    std::cout << json{{"set", set}, {"size", result->size()}}.dump(2) << '\n';
  } else if (!dump) {
    std::cout << set << ": " << result->size() << " elements\n";
  } else {
    for (const auto& t : result->sorted()) write_transformation(std::cout, t);
  }
  return 0;
}

int cmd_memoryset(const Globals& g, const std::string& spec,
                  const std::string& rule_file, bool do_export) {
  const auto group = load_group(spec);
  std::ifstream in(rule_file);
  if (!in) throw InputError("cannot open " + rule_file);
  const auto doc = read_local_rule(in);
  if (doc.n != group.order()) {
    throw InputError("rule is for n = " + std::to_string(doc.n) +
                     " but the group has order " + std::to_string(group.order()));
  }
  const ConfigSpace space(group, doc.q);
  const auto t = from_local_rule(doc.rule, space);
  const auto rule = minimal_local_rule(t, space);
  if (do_export) {
    write_local_rule(std::cout, {doc.n, doc.q, rule});
  } else if (g.json) {
    std::cout << json{{"memory", doc.rule.memory},
                      {"minimal_memory", rule.memory}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "minimal memory set: {";
    for (std::size_t i = 0; i < rule.memory.size(); ++i) {
      std::cout << (i ? ", " : "") << rule.memory[i];
    }
    std::cout << "}\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cellular automata over finite groups: orbits, ICA, ranks"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--cap", g.cap, "closure size cap");
  app.add_option("--threads", g.threads, "OpenMP threads (0 = default)");

  std::string spec;
  unsigned q = 2;

  auto* analyze = app.add_subcommand("analyze", "orbit, ICA and rank report");
  analyze->add_option("group", spec, "group spec or Cayley-table file")->required();
  analyze->add_option("q", q, "alphabet size")->required();
  std::optional<std::size_t> ica_rank;
  bool oracle = false;
  analyze->add_option("--ica-rank", ica_rank, "known bound on Rank(ICA)");
  analyze->add_flag("--oracle", oracle, "also run the enumeration oracles");

  auto* verify = app.add_subcommand("verify", "run every check on an instance");
  verify->add_option("group", spec)->required();
  verify->add_option("q", q)->required();
  bool no_rank = false;
  bool no_closures = false;
  verify->add_flag("--no-rank", no_rank, "skip the exhaustive rank search");
  verify->add_flag("--no-closures", no_closures, "skip closure checks");

  auto* lattice = app.add_subcommand("lattice", "conjugacy classes of subgroups");
  lattice->add_option("group", spec)->required();
  bool dot = false;
  lattice->add_flag("--dot", dot, "emit the Hasse diagram as DOT");

  auto* closure_cmd = app.add_subcommand("closure", "enumerate a submonoid");
  closure_cmd->add_option("group", spec)->required();
  closure_cmd->add_option("q", q)->required();
  std::string set = "ca";
  std::string gens_file;
  bool dump = false;
  closure_cmd->add_option("--set", set)
      ->check(CLI::IsMember({"ca", "ica", "generated", "small", "file"}));
  closure_cmd->add_option("--gens", gens_file, "generators, one map per line");
  closure_cmd->add_flag("--dump", dump, "print every element");

  auto* memoryset = app.add_subcommand("memoryset", "minimal memory set of a rule");
  memoryset->add_option("group", spec)->required();
  std::string rule_file;
  memoryset->add_option("rule", rule_file, "local-rule document")->required();
  bool do_export = false;
  memoryset->add_flag("--export", do_export,
                      "write the rule on its minimal memory set");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (g.threads > 0) set_threads(g.threads);
    if (!gens_file.empty()) set = "file";
    if (*analyze) return cmd_analyze(g, spec, q, ica_rank, oracle);
    if (*verify) return cmd_verify(g, spec, q, no_rank, no_closures);
    if (*lattice) return cmd_lattice(g, spec, dot);
    if (*closure_cmd) return cmd_closure(g, spec, q, set, gens_file, dump);
    if (*memoryset) return cmd_memoryset(g, spec, rule_file, do_export);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(e.exit_code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
