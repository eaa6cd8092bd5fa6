#include "arkit/json_io.hpp"

#include <iomanip>
#include <map>
#include <sstream>

namespace arkit {

namespace {

Json edge_list(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

Json vertex_list(const VertexSet& set) { return set.to_vector(); }

}  // namespace

Json to_json(const BergeWitness& w) {
  return Json{{"T", w.T}, {"odd_components", w.odd_components}, {"nu", w.nu}};
}

Json to_json(const GEDecomposition& ge) {
  return Json{{"D", vertex_list(ge.D)},
              {"A", vertex_list(ge.A)},
              {"C", vertex_list(ge.C)},
              {"components_of_D", ge.components_of_D},
              {"nu", ge.nu}};
}

Json to_json(const RainbowCertificate& c) {
  return Json{{"size", c.size()}, {"edges", edge_list(c.edges.edges)}, {"colors", c.colors}};
}

Json to_json(const std::optional<MonoStructureCertificate>& c) {
  if (!c) return Json{{"found", false}};
  Json out{{"found", true}};
  out["kind"] = c->kind == MonoKind::kClique ? "clique" : "join";
  out["color"] = c->color;
  if (c->kind == MonoKind::kClique) {
    out["clique_vertices"] = c->clique_vertices;
  } else {
    out["A_set"] = c->a_set;
    out["B_set"] = c->b_set;
  }
  return out;
}

Json to_json(const TheoremReport& r) {
  Json out{{"n", r.n},
           {"s", r.s},
           {"mode", r.mode == VerdictMode::kStrict ? "strict" : "permissive"},
           {"in_theorem_range", r.in_theorem_range},
           {"color_count", r.color_count},
           {"g", r.g},
           {"hypothesis_colors", r.hypothesis_colors}};
  out["hypothesis_rainbow"] = r.hypothesis_rainbow ? Json(*r.hypothesis_rainbow) : Json();
  out["rainbow_witness"] =
      r.rainbow_witness ? to_json(*r.rainbow_witness) : Json{{"found", false}};
  out["conclusion_clique"] = r.conclusion_clique();
  out["conclusion_join"] = r.conclusion_join();
  out["clique"] = to_json(r.clique);
  out["join"] = to_json(r.join);
  out["verdict"] = to_string(r.verdict);
  out["search_nodes"] = r.search_nodes;
  return out;
}

Json to_json(const ThresholdValues& t) {
  return Json{{"g1", t.g1},
              {"g2", t.g2},
              {"g", t.g},
              {"regime", to_string(t.regime)},
              {"in_range", t.in_range}};
}

Json to_json(const AuditReport& r, bool all_records) {
  Json out{{"s_min", r.s_min}, {"s_max", r.s_max}, {"n_cap", r.n_cap}, {"cells", r.cells},
           {"records", r.records.size()}};
  Json summary = Json::object();
  for (const auto& [id, cs] : r.summary()) {
    summary[id] = Json{{"count", cs.count},
                       {"failures", cs.failures},
                       {"min_margin", cs.min_margin},
                       {"min_margin_at", {{"n", cs.min_margin_n}, {"s", cs.min_margin_s}}}};
  }
  out["summary"] = std::move(summary);
  auto record_json = [](const AuditRecord& rec) {
    Json j{{"check", rec.check_id}, {"n", rec.n}, {"s", rec.s}};
    j["param"] = rec.param ? Json(*rec.param) : Json();
    j["lhs"] = rec.lhs;
    j["relation"] = to_string(rec.relation);
    j["rhs"] = rec.rhs;
    j["pass"] = rec.pass;
    return j;
  };
  Json violations = Json::array();
  for (const AuditRecord& rec : r.violations()) violations.push_back(record_json(rec));
  out["violations"] = std::move(violations);
  if (all_records) {
    Json all = Json::array();
    for (const AuditRecord& rec : r.records) all.push_back(record_json(rec));
    out["all_records"] = std::move(all);
  }
  return out;
}

Json to_json(const ProbeReport& r) {
  Json out{{"instance", r.instance}, {"n", r.n}, {"s", r.s}, {"trials", r.trials}};
  if (r.base) {
    const BaseCheck& b = *r.base;
    out["base"] = Json{{"color_count", b.color_count},
                       {"g", b.g},
                       {"rainbow_free", b.rainbow_free ? Json(*b.rainbow_free) : Json()},
                       {"clique_absent", b.clique_absent},
                       {"join_absent", b.join_absent},
                       {"tight", b.tight()}};
  }
  Json outcomes = Json::array();
  for (const ProbeTrial& t : r.outcomes) {
    Json j{{"index", t.index}};
    if (t.recolored) j["recolored"] = {t.recolored->u, t.recolored->v};
    if (!t.base.empty()) {
      j["seed"] = t.seed;
      j["base"] = t.base;
      j["accepted_mutations"] = t.accepted_mutations;
      j["rejected_mutations"] = t.rejected_mutations;
    }
    j["color_count"] = t.color_count;
    j["evaluated"] = t.evaluated;
    j["rainbow_found"] = t.rainbow_found ? Json(*t.rainbow_found) : Json();
    j["clique_found"] = t.clique_found;
    j["join_found"] = t.join_found;
    j["verdict"] = t.verdict ? Json(to_string(*t.verdict)) : Json();
    j["inconclusive"] = t.inconclusive;
    outcomes.push_back(std::move(j));
  }
  out["outcomes"] = std::move(outcomes);
  out["counterexamples"] = r.counterexamples;
  out["observations"] = r.observations;
  out["inconclusive"] = r.inconclusive;
  return out;
}

std::string audit_table(const AuditReport& r) {
  std::ostringstream os;
  os << "audit s=" << r.s_min << ".." << r.s_max << " n<=" << r.n_cap << " cells=" << r.cells
     << " records=" << r.records.size() << "\n";
  os << std::left << std::setw(34) << "check" << std::right << std::setw(9) << "count"
     << std::setw(9) << "fail" << std::setw(14) << "min margin" << "  at (n,s)\n";
  for (const auto& [id, cs] : r.summary()) {
    os << std::left << std::setw(34) << id << std::right << std::setw(9) << cs.count
       << std::setw(9) << cs.failures << std::setw(14) << cs.min_margin << "  ("
       << cs.min_margin_n << "," << cs.min_margin_s << ")\n";
  }
  os << "violations=" << r.violations().size() << "\n";
  return os.str();
}

std::string probe_table(const ProbeReport& r) {
  std::ostringstream os;
  os << r.instance << "\n";
  if (r.base) {
    os << "base: colors=" << r.base->color_count << " g=" << r.base->g << " rainbow_free="
       << (r.base->rainbow_free ? (*r.base->rainbow_free ? "yes" : "no") : "unknown")
       << " clique=" << (r.base->clique_absent ? "none" : "found")
       << " join=" << (r.base->join_absent ? "none" : "found")
       << " tight=" << (r.base->tight() ? "yes" : "no") << "\n";
  }
  std::size_t evaluated = 0;
  std::map<std::string_view, std::size_t> by_verdict;
  for (const ProbeTrial& t : r.outcomes) {
    if (!t.evaluated) continue;
    ++evaluated;
    ++by_verdict[to_string(*t.verdict)];
  }
  os << "trials=" << r.trials << " evaluated=" << evaluated << "\n";
  for (const auto& [v, count] : by_verdict) os << "  " << std::left << std::setw(26) << v << count << "\n";
  os << "counterexamples=" << r.counterexamples.size()
     << " observations=" << r.observations.size() << " inconclusive=" << r.inconclusive << "\n";
  return os.str();
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t report_hash(const ProbeReport& r) { return fnv1a64(to_json(r).dump()); }

}  // namespace arkit
