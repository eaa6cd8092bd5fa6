#include "arkit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "arkit/audit.hpp"
#include "arkit/error.hpp"
#include "arkit/extremal.hpp"
#include "arkit/harness.hpp"
#include "arkit/json_io.hpp"
#include "arkit/matching.hpp"
#include "arkit/rainbow.hpp"
#include "arkit/structure.hpp"

namespace arkit::cli {

namespace {

struct Options {
  int n = 0;
  int s = 0;
  int k = 0;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::optional<std::int64_t> budget_ms;
  std::optional<std::uint64_t> node_limit;
  bool permissive = false;
  bool json = false;
  bool all_records = false;
  std::string output;
  std::string input;
  std::string variant;
  int s_min = 2;
  int s_max = 60;
  int n_cap = 400;
};

// What a leaf command produced: text for the output sink and an exit code.
struct Outcome {
  std::string text;
  int code = kExitOk;
};

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

SearchBudget budget_of(const Options& o) {
  SearchBudget b;
  if (o.budget_ms) b.time_limit = std::chrono::milliseconds(*o.budget_ms);
  b.node_limit = o.node_limit;
  return b;
}

ExtremalVariant variant_of(const std::string& name) {
  return name == "h1" ? ExtremalVariant::kH1 : ExtremalVariant::kH2;
}

std::string certificate_lines(const RainbowCertificate& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Edge& e = c.edges.edges[i];
    out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + " " +
           std::to_string(c.colors[i]) + "\n";
  }
  return out;
}

std::string mono_text(const std::optional<MonoStructureCertificate>& c) {
  if (!c) return "none\n";
  std::string out = "color=" + std::to_string(c->color) + "\n";
  if (c->kind == MonoKind::kClique) {
    out += "clique=" + join_ints(c->clique_vertices) + "\n";
  } else {
    out += "A=" + join_ints(c->a_set) + "\nB=" + join_ints(c->b_set) + "\n";
  }
  return out;
}

Outcome formula_ex(const Options& o) {
  std::int64_t v = turan_matching(o.n, o.k);
  if (o.json) return {dump(Json{{"n", o.n}, {"k", o.k}, {"ex", v}})};
  return {std::to_string(v) + "\n"};
}

Outcome formula_ar(const Options& o) {
  std::int64_t v = anti_ramsey_matching(o.n, o.s);
  if (o.json) return {dump(Json{{"n", o.n}, {"s", o.s}, {"ar", v}})};
  return {std::to_string(v) + "\n"};
}

Outcome formula_g(const Options& o) {
  ThresholdValues t = threshold_g(o.n, o.s);
  if (o.json) return {dump(to_json(t))};
  return {"g1=" + std::to_string(t.g1) + " g2=" + std::to_string(t.g2) +
          " g=" + std::to_string(t.g) + "\n"};
}

Outcome construct_extremal(const Options& o) {
  const ExtremalVariant v = variant_of(o.variant);
  std::string text = serialize(construct_extremal_coloring(o.n, o.s, v, o.permissive));
  if (!extremal_in_regime(o.n, o.s, v))
    text += "# permissive: (n, s) lies outside the " + std::string(to_string(v)) + " regime\n";
  return {text};
}

Outcome construct_turan(const Options& o) { return {serialize(construct_turan_graph(o.n, o.s))}; }

Outcome construct_rainbow_plus_one(const Options& o) {
  Graph base = read_graph_file(o.input);
  return {serialize(rainbow_plus_one(base.order(), base))};
}

Outcome rainbow_max(const Options& o) {
  ColoredGraph h = read_colored_graph_file(o.input);
  RainbowResult r = max_rainbow_matching(h, budget_of(o));
  const bool exact = r.status == SearchStatus::kExact;
  const int code = exact ? kExitOk : kExitTooLarge;
  if (o.json) {
    Json j = to_json(r.best);
    j["status"] = exact ? "exact" : "inconclusive";
    j["nodes"] = r.nodes;
    return {dump(j), code};
  }
  std::string text = (exact ? "size=" : "size>=") + std::to_string(r.best.size()) + "\n";
  if (!exact) text += "inconclusive: budget exhausted\n";
  return {text + certificate_lines(r.best), code};
}

Outcome rainbow_decide(const Options& o) {
  ColoredGraph h = read_colored_graph_file(o.input);
  RainbowDecision d = has_rainbow_matching(h, o.k, budget_of(o));
  const bool exact = d.status == SearchStatus::kExact;
  const int code = exact || d.found ? kExitOk : kExitTooLarge;
  if (o.json) {
    Json j{{"k", o.k},
           {"status", d.found || exact ? "exact" : "inconclusive"},
           {"found", d.found},
           {"nodes", d.nodes}};
    j["certificate"] = d.certificate ? to_json(*d.certificate) : Json{{"found", false}};
    return {dump(j), code};
  }
  if (d.found) return {"found=true\n" + certificate_lines(*d.certificate), code};
  return {exact ? "found=false\n" : "inconclusive\n", code};
}

Outcome decompose(const Options& o) {
  Graph g = read_graph_file(o.input);
  BergeWitness w = berge_witness(g);
  GEDecomposition ge = gallai_edmonds(g);
  if (o.json) {
    Json j = to_json(w);
    j["gallai_edmonds"] = to_json(ge);
    return {dump(j)};
  }
  std::string text = "nu=" + std::to_string(w.nu) + "\n";
  text += "T=" + join_ints(w.T) + "\n";
  for (const auto& comp : w.odd_components) text += "odd " + join_ints(comp) + "\n";
  text += "D=" + join_ints(ge.D.to_vector()) + "\n";
  text += "A=" + join_ints(ge.A.to_vector()) + "\n";
  text += "C=" + join_ints(ge.C.to_vector()) + "\n";
  return {text};
}

Outcome detect_clique(const Options& o) {
  ColoredGraph h = read_colored_graph_file(o.input);
  auto c = find_mono_clique(h, o.k);
  return {o.json ? dump(to_json(c)) : mono_text(c)};
}

Outcome detect_join(const Options& o) {
  ColoredGraph h = read_colored_graph_file(o.input);
  auto c = find_mono_join(h, o.s);
  return {o.json ? dump(to_json(c)) : mono_text(c)};
}

Outcome detect_verdict(const Options& o) {
  ColoredGraph h = read_colored_graph_file(o.input);
  if (!o.permissive && h.order() < theorem_min_n(o.s))
    throw RangeError("strict mode requires n >= max(2s+5, 40); pass --permissive for smaller n");
  TheoremReport r = theorem_verdict(
      h, o.s, o.permissive ? VerdictMode::kPermissive : VerdictMode::kStrict, budget_of(o));
  int code = kExitOk;
  if (r.verdict == Verdict::kCounterexample) code = kExitViolation;
  if (r.verdict == Verdict::kInconclusive) code = kExitTooLarge;
  if (o.json) return {dump(to_json(r)), code};
  auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream os;
  os << "colors=" << r.color_count << " g=" << r.g << "\n";
  os << "hypothesis_colors=" << yes_no(r.hypothesis_colors) << "\n";
  os << "hypothesis_rainbow="
     << (r.hypothesis_rainbow ? yes_no(*r.hypothesis_rainbow) : "unknown") << "\n";
  os << "conclusion_clique=" << yes_no(r.conclusion_clique()) << "\n";
  os << "conclusion_join=" << yes_no(r.conclusion_join()) << "\n";
  os << "verdict=" << to_string(r.verdict) << "\n";
  return {os.str(), code};
}

Outcome audit(const Options& o) {
  AuditReport r = audit_proof_inequalities(o.s_min, o.s_max, o.n_cap);
  const int code = r.violations().empty() ? kExitOk : kExitViolation;
  return {o.json ? dump(to_json(r, o.all_records)) : audit_table(r), code};
}

int probe_code(const ProbeReport& r) {
  if (!r.counterexamples.empty()) return kExitViolation;
  if (r.base && !r.base->tight()) return kExitViolation;
  if (r.inconclusive > 0) return kExitTooLarge;
  return kExitOk;
}

Outcome probe_boundary(const Options& o) {
  ProbeReport r = recolor_boundary_probe(o.n, o.s, variant_of(o.variant), budget_of(o));
  return {o.json ? dump(to_json(r)) : probe_table(r), probe_code(r)};
}

Outcome probe_random(const Options& o) {
  RandomSearchOptions opts;
  opts.permissive = o.permissive;
  if (o.node_limit) opts.node_limit = *o.node_limit;
  ProbeReport r = random_stability_search(o.n, o.s, o.samples, o.seed, opts);
  if (o.json) return {dump(to_json(r)), probe_code(r)};
  std::ostringstream os;
  os << probe_table(r) << "hash=" << std::hex << report_hash(r) << "\n";
  return {os.str(), probe_code(r)};
}

Outcome oracle_ex(const Options& o) {
  std::int64_t v = oracle_turan(o.n, o.k);
  if (o.json) return {dump(Json{{"n", o.n}, {"k", o.k}, {"ex", v}})};
  return {std::to_string(v) + "\n"};
}

Outcome oracle_ar(const Options& o) {
  int v = oracle_anti_ramsey(o.n, o.s);
  if (o.json) return {dump(Json{{"n", o.n}, {"s", o.s}, {"ar", v}})};
  return {std::to_string(v) + "\n"};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  std::function<Outcome(const Options&)> action;

  CLI::App app{"arkit: rainbow matchings and anti-Ramsey toolkit", "arkit"};
  app.require_subcommand(1);

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::function<Outcome(const Options&)> fn) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->add_flag("--json", o.json, "Machine-readable JSON output");
    sub->add_option("-o,--output", o.output, "Write output to this file");
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto need_n = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Number of vertices")->required()->check(CLI::NonNegativeNumber);
  };
  auto need_s = [&](CLI::App* sub) { sub->add_option("--s", o.s, "Matching parameter s")->required(); };
  auto need_k = [&](CLI::App* sub, const std::string& help) {
    sub->add_option("--k", o.k, help)->required();
  };
  auto need_file = [&](CLI::App* sub) {
    sub->add_option("file", o.input, "Input document")->required();
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget-ms", o.budget_ms, "Time budget per search (ms)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--node-limit", o.node_limit, "Node budget per search");
  };

  CLI::App* formula = app.add_subcommand("formula", "Closed-form values");
  formula->require_subcommand(1);
  {
    CLI::App* ex = leaf(formula, "ex", "ex(n, M_k)", formula_ex);
    need_n(ex);
    need_k(ex, "Matching size k");
    CLI::App* ar = leaf(formula, "ar", "ar(n, M_s)", formula_ar);
    need_n(ar);
    need_s(ar);
    CLI::App* g = leaf(formula, "g", "Colour threshold g(n, s)", formula_g);
    need_n(g);
    need_s(g);
  }

  CLI::App* construct = app.add_subcommand("construct", "Emit extremal graphs and colourings");
  construct->require_subcommand(1);
  for (const char* name : {"h1", "h2"}) {
    CLI::App* sub = leaf(construct, name, std::string("Tight colouring ") + name, construct_extremal);
    sub->callback([&action, &o, name] {
      o.variant = name;
      action = construct_extremal;
    });
    need_n(sub);
    need_s(sub);
    sub->add_flag("--permissive", o.permissive, "Allow parameters outside the regime");
  }
  {
    CLI::App* t = leaf(construct, "turan", "K_s joined to an independent set", construct_turan);
    need_n(t);
    need_s(t);
    CLI::App* r = leaf(construct, "rainbow-plus-one",
                       "Rainbow copy of a graph plus one extra colour", construct_rainbow_plus_one);
    need_file(r);
  }

  CLI::App* rainbow = app.add_subcommand("rainbow", "Rainbow matching search");
  rainbow->require_subcommand(1);
  {
    CLI::App* mx = leaf(rainbow, "max", "Maximum rainbow matching", rainbow_max);
    need_file(mx);
    add_budget(mx);
    CLI::App* dc = leaf(rainbow, "decide", "Is there a rainbow matching of size k?", rainbow_decide);
    need_file(dc);
    need_k(dc, "Matching size k");
    add_budget(dc);
  }

  need_file(leaf(&app, "decompose", "Gallai-Edmonds decomposition and Berge witness", decompose));

  CLI::App* detect = app.add_subcommand("detect", "Monochromatic structure detection");
  detect->require_subcommand(1);
  {
    CLI::App* c = leaf(detect, "mono-clique", "Monochromatic clique on k vertices", detect_clique);
    need_file(c);
    need_k(c, "Clique order");
    CLI::App* j = leaf(detect, "mono-join", "Monochromatic K_{n-2s-1} v empty_{2s+1}", detect_join);
    need_file(j);
    need_s(j);
    CLI::App* v = leaf(detect, "verdict", "Evaluate the stability statement", detect_verdict);
    need_file(v);
    need_s(v);
    add_budget(v);
    v->add_flag("--permissive", o.permissive, "Accept n below max(2s+5, 40)");
  }

  {
    CLI::App* a = leaf(&app, "audit", "Re-check the proof's counting inequalities", audit);
    a->add_option("--s-min", o.s_min, "Smallest s")->capture_default_str();
    a->add_option("--s-max", o.s_max, "Largest s")->capture_default_str();
    a->add_option("--n-cap", o.n_cap, "Largest n")->capture_default_str();
    a->add_flag("--all-records", o.all_records, "Include every record in JSON output");
  }

  CLI::App* probe = app.add_subcommand("probe", "Boundary and random stress probes");
  probe->require_subcommand(1);
  {
    CLI::App* b = leaf(probe, "boundary", "Recolour each colour-0 edge of H1/H2", probe_boundary);
    b->add_option("variant", o.variant, "h1 or h2")->required()->check(CLI::IsMember({"h1", "h2"}));
    need_n(b);
    need_s(b);
    add_budget(b);
    CLI::App* r = leaf(probe, "random", "Seeded mutation-walk search", probe_random);
    need_n(r);
    need_s(r);
    r->add_option("--samples", o.samples, "Number of trials")->capture_default_str();
    r->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
    r->add_option("--node-limit", o.node_limit, "Node budget per rainbow search");
    r->add_flag("--permissive", o.permissive, "Accept n below max(2s+5, 40)");
  }

  CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive oracles for tiny n");
  oracle->require_subcommand(1);
  {
    CLI::App* ex = leaf(oracle, "ex", "ex(n, M_k) by enumeration (n <= 7)", oracle_ex);
    need_n(ex);
    need_k(ex, "Matching size k");
    CLI::App* ar = leaf(oracle, "ar", "ar(n, M_s) by enumeration (n <= 5)", oracle_ar);
    need_n(ar);
    need_s(ar);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (!action) {
    err << "arkit: no command given\n";
    return kExitUsage;
  }

  Outcome result;
  try {
    result = action(o);
  } catch (const TooLargeError& e) {
    err << "arkit: instance too large: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const RangeError& e) {
    err << "arkit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "arkit: " << o.input << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "arkit: " << e.what() << "\n";
    return kExitUsage;
  }

  if (o.output.empty()) {
    out << result.text;
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file || !(file << result.text)) {
      err << "arkit: cannot write " << o.output << "\n";
      return kExitUsage;
    }
  }
  return result.code;
}

}  // namespace arkit::cli
