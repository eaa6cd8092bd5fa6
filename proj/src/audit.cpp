#include "arkit/audit.hpp"

#include <algorithm>
#include <functional>

#include "arkit/colored_graph.hpp"
#include "arkit/error.hpp"
#include "arkit/extremal.hpp"
#include "arkit/parallel.hpp"

namespace arkit {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::kLess: return "<";
    case Relation::kEqual: return "=";
    case Relation::kGreater: return ">";
    case Relation::kGreaterEqual: return ">=";
  }
  return "?";
}

std::int64_t AuditRecord::margin() const {
  switch (relation) {
    case Relation::kLess: return rhs - lhs - 1;
    case Relation::kGreater: return lhs - rhs - 1;
    case Relation::kGreaterEqual: return lhs - rhs;
    case Relation::kEqual: return lhs == rhs ? 0 : -1;
  }
  return -1;
}

std::int64_t proof_f(std::int64_t n, std::int64_t s, std::int64_t t) {
  return choose2(n) - choose2(n - t) + choose2(2 * s + 3 - 2 * t);
}

std::int64_t proof_f_expanded_doubled(std::int64_t n, std::int64_t s, std::int64_t t) {
  return 3 * t * t + (2 * n - 8 * s - 11) * t + 4 * s * s + 10 * s + 6;
}

std::int64_t proof_h1(std::int64_t n, std::int64_t s, std::int64_t j) {
  return choose2(s - 1) + (s - 1 - j) * (n - s + 1) + j * (j + 6) + 10;
}

std::int64_t proof_h2(std::int64_t n, std::int64_t s, std::int64_t j) {
  return choose2(s + 1) + (s + 1 - j) * (n - s - 1) + j * (j + 2) + 3;
}

std::int64_t proof_h3(std::int64_t n, std::int64_t s, std::int64_t j) {
  return choose2(s) + (s - j) * (n - s) + j * (j + 4) + 3;
}

std::int64_t proof_p1(std::int64_t n, std::int64_t s, std::int64_t t) {
  const std::int64_t m = s - t;
  return std::max(choose2(2 * m + 1), m * (m + 3) + choose2(m)) + (t + 1) +
         t * (n - t) + choose2(t);
}

std::int64_t proof_p2(std::int64_t n, std::int64_t s, std::int64_t t) {
  return choose2(2 * s - 2 * t + 3) + (t - 1) * (n - t + 1) + choose2(t - 1) + 1;
}

namespace {

class CellAuditor {
 public:
  CellAuditor(int n, int s, std::vector<AuditRecord>& out)
      : n_(n), s_(s), out_(out), th_(threshold_g(n, s)) {}

  void run() {
    const std::int64_t n = n_, s = s_;
    const std::int64_t g1 = th_.g1, g2 = th_.g2, g = th_.g;

    // g > max{g1 - 3, C(2s-1,2) + 2} = ex(n, M_s) + 2 = ar(n, M_{s+1}).
    check("threshold.middle_is_ex_plus_2", std::max(g1 - 3, choose2(2 * s - 1) + 2),
          Relation::kEqual, turan_matching(n, s) + 2);
    check("threshold.g_exceeds_ar", g, Relation::kGreater, anti_ramsey_matching(n, s + 1));

    // f(n, t): definition versus expanded quadratic on [0, s+1].
    {
      std::int64_t t_bad = -1;
      for (std::int64_t t = 0; t <= s + 1 && t_bad < 0; ++t)
        if (2 * proof_f(n, s, t) != proof_f_expanded_doubled(n, s, t)) t_bad = t;
      std::int64_t t_report = t_bad < 0 ? s + 1 : t_bad;
      check("f.expanded_form", 2 * proof_f(n, s, t_report), Relation::kEqual,
            proof_f_expanded_doubled(n, s, t_report), t_report);
    }

    // |T| = t in [4, s-2]: f(n, t) stays below g.
    check("f_range.t0_bound", choose2(2 * s - 1) + 10, Relation::kLess, g2);
    if (s >= 6) {
      auto [arg, value] = range_max(4, s - 2, [&](std::int64_t t) { return proof_f(n, s, t); });
      check("f_range.f_max", value, Relation::kLess, g, arg);
      const std::int64_t f4 = proof_f(n, s, 4), fs2 = proof_f(n, s, s - 2);
      check("f_range.f4_closed", 2 * f4, Relation::kEqual, 8 * n + 4 * s * s - 22 * s + 10);
      check("f_range.fs2_closed", 2 * fs2, Relation::kEqual,
            2 * n * s - 4 * n - s * s + 3 * s + 40);
      if (2 * n >= 5 * s + 3) {
        check("f_range.endpoints_below_g1", std::max(f4, fs2), Relation::kLess, g1);
      } else {
        check("f_range.small_n_forces_s_gt_15", s, Relation::kGreater, 15);
        check("f_range.f4_dominates", f4, Relation::kGreaterEqual, fs2);
        check("f_range.f4_below_g2", f4, Relation::kLess, g2);
      }
    }

    // Small t in {1,2,3} with t <= s-2; the t = 3 branch needs s >= 5.
    if (s >= 4) {
      check("small_t.t1_bound", choose2(2 * s - 3) + n + 9, Relation::kLess, g2);
      check("small_t.t1_g2_plus_1", choose2(2 * s - 1) + n + 2, Relation::kEqual, g2 + 1);
      check("small_t.t2_count", choose2(2 * s - 3) + 3 + 2 * (n - 2) + 1, Relation::kEqual,
            2 * n + 2 * s * s - 7 * s + 6);
      check("small_t.t2_bound", 2 * n + 2 * s * s - 7 * s + 6, Relation::kLess, g);
    }
    if (s >= 5) {
      check("small_t.t3_count", choose2(2 * s - 5) + 3 + 3 * (n - 3) + 3, Relation::kEqual,
            3 * n + 2 * s * s - 11 * s + 12);
      check("small_t.t3_bound", 3 * n + 2 * s * s - 11 * s + 12, Relation::kLess, g);
    }

    // t = 1 edge counts.
    check("t_one.v1_count", g2 - (n - 2 * s - 2) - 2, Relation::kEqual, 2 * s * s - s + 2);
    check("t_one.v1_exceeds_ex", 2 * s * s - s + 2, Relation::kGreater,
          turan_matching(2 * s + 2, s));
    check("t_one.sub12_count", g2 - (n - 2 * s - 2) - 2 * s - 2, Relation::kGreater,
          choose2(2 * s - 1));
    check("t_one.sub12_isolated_bound",
          choose2(2 * s - 1) + (2 * s - 1) + 2 + (n - 2 * s - 2) + 1, Relation::kEqual,
          choose2(2 * s - 1) + n);
    if (n == 2 * s + 6) {
      check("t_one.n2s6_count", g2 - (n - 1) - 1, Relation::kEqual, choose2(2 * s - 1) + 1);
      check("t_one.n2s6_exceeds_ex", choose2(2 * s - 1) + 1, Relation::kGreater,
            turan_matching(2 * s + 1, s));
    }
    if (n == 2 * s + 5) {
      check("t_one.n2s5_identity", choose2(2 * s) + 6, Relation::kEqual, choose2(2 * s - 1) + n);
      check("t_one.n2s5_count", g2 - 3 - 2 * s - 2, Relation::kEqual, choose2(2 * s - 1) + 1);
      check("t_one.n2s5_exceeds_ex", choose2(2 * s - 1) + 1, Relation::kGreater,
            turan_matching(2 * s, s));
    }

    // h1 on [1, s-1].
    {
      auto [arg, value] = range_max(1, s - 1, [&](std::int64_t j) { return proof_h1(n, s, j); });
      check("h1.max", value, Relation::kLess, g, arg);
      check("h1.first_below_g1", proof_h1(n, s, 1), Relation::kLess, g1, 1);
      check("h1.last_below_g2", proof_h1(n, s, s - 1), Relation::kLess, g2, s - 1);
      check("h1.last_closed", 2 * proof_h1(n, s, s - 1), Relation::kEqual,
            3 * s * s + 5 * s + 12, s - 1);
    }

    // h2 on [3, s+1].
    check("h2.v2_edge_count", g1 - choose2(s - 1) - (s - 1) * (n - s + 1),
          Relation::kEqual, 5);
    {
      auto [arg, value] = range_max(3, s + 1, [&](std::int64_t j) { return proof_h2(n, s, j); });
      check("h2.max", value, Relation::kLess, g, arg);
      check("h2.first_below_g1", proof_h2(n, s, 3), Relation::kLess, g1, 3);
      check("h2.last_below_g2", proof_h2(n, s, s + 1), Relation::kLess, g2, s + 1);
      check("h2.first_closed", 2 * proof_h2(n, s, 3), Relation::kEqual,
            2 * n * s - 4 * n - s * s + 3 * s + 40, 3);
      check("h2.last_closed", 2 * proof_h2(n, s, s + 1), Relation::kEqual,
            3 * s * s + 9 * s + 12, s + 1);
    }

    // h3 on [2, s].
    check("h3.v1_degree", g1 - choose2(s) - (s - 1) * (n - s) - 3, Relation::kEqual, 2);
    {
      auto [arg, value] = range_max(2, s, [&](std::int64_t j) { return proof_h3(n, s, j); });
      check("h3.max", value, Relation::kLess, g, arg);
      check("h3.first_below_g1", proof_h3(n, s, 2), Relation::kLess, g1, 2);
      check("h3.last_below_g2", proof_h3(n, s, s), Relation::kLess, g2, s);
    }

    // p1, p2 for t in {2, 3}, t <= s-2.
    if (s >= 5) {
      check("p.t3_count", choose2(2 * s - 3) + n - 2 * s + 3 + 3 * (2 * s - 3),
            Relation::kEqual, n + 2 * s * s - 3 * s);
      check("p.t3_below_g2", n + 2 * s * s - 3 * s, Relation::kLess, g2);
    }
    for (std::int64_t t : {2, 3}) {
      if (s - t < 2) continue;
      const std::int64_t p1 = proof_p1(n, s, t);
      check("p.p1_below_g", p1, Relation::kLess, g, t);
      const std::int64_t tail = (t + 1) + t * (n - t) + choose2(t);
      if (s - t >= 3) {
        check("p.p1_wide_branch", p1, Relation::kEqual,
              choose2(2 * (s - t) + 1) + tail, t);
      } else {
        check("p.p1_narrow_form", p1, Relation::kEqual, 12 + t + t * (n - t) + choose2(t), t);
        check("p.p1_narrow_below_g1", p1, Relation::kLess, g1, t);
      }
    }
    check("p.p2_t2_is_g2_minus_1", proof_p2(n, s, 2), Relation::kEqual, g2 - 1, 2);
    if (s >= 5) {
      check("p.p2_t3_closed", proof_p2(n, s, 3), Relation::kEqual,
            choose2(2 * s - 3) + 2 * n - 2, 3);
      check("p.p2_t3_below_g", proof_p2(n, s, 3), Relation::kLess, g, 3);
    }
  }

 private:
  template <typename Fn>
  static std::pair<std::int64_t, std::int64_t> range_max(std::int64_t lo, std::int64_t hi,
                                                         Fn&& fn) {
    std::int64_t arg = lo, best = fn(lo);
    for (std::int64_t x = lo + 1; x <= hi; ++x) {
      std::int64_t v = fn(x);
      if (v > best) {
        best = v;
        arg = x;
      }
    }
    return {arg, best};
  }

  void check(std::string_view id, std::int64_t lhs, Relation rel, std::int64_t rhs,
             std::optional<std::int64_t> param = std::nullopt) {
    bool pass = false;
    switch (rel) {
      case Relation::kLess: pass = lhs < rhs; break;
      case Relation::kEqual: pass = lhs == rhs; break;
      case Relation::kGreater: pass = lhs > rhs; break;
      case Relation::kGreaterEqual: pass = lhs >= rhs; break;
    }
    AuditRecord r;
    r.check_id = id;
    r.n = n_;
    r.s = s_;
    if (param) r.param = static_cast<int>(*param);
    r.lhs = lhs;
    r.rhs = rhs;
    r.relation = rel;
    r.pass = pass;
    out_.push_back(r);
  }

  int n_;
  int s_;
  std::vector<AuditRecord>& out_;
  ThresholdValues th_;
};

}  // namespace

std::vector<AuditRecord> AuditReport::violations() const {
  std::vector<AuditRecord> out;
  std::copy_if(records.begin(), records.end(), std::back_inserter(out),
               [](const AuditRecord& r) { return !r.pass; });
  return out;
}

std::map<std::string, CheckSummary> AuditReport::summary() const {
  std::map<std::string, CheckSummary> out;
  for (const AuditRecord& r : records) {
    auto [it, inserted] = out.try_emplace(std::string(r.check_id));
    CheckSummary& cs = it->second;
    std::int64_t m = r.margin();
    if (inserted || m < cs.min_margin) {
      cs.min_margin = m;
      cs.min_margin_n = r.n;
      cs.min_margin_s = r.s;
    }
    ++cs.count;
    if (!r.pass) ++cs.failures;
  }
  return out;
}

AuditReport audit_proof_inequalities(int s_min, int s_max, int n_cap) {
  if (s_min < 2 || s_max > kAuditMaxS || s_min > s_max)
    throw RangeError("audit requires 2 <= s_min <= s_max <= 200");
  if (n_cap > kAuditMaxNCap) throw RangeError("audit n_cap too large");
  AuditReport report;
  report.s_min = s_min;
  report.s_max = s_max;
  report.n_cap = n_cap;

  const int rows = s_max - s_min + 1;
  std::vector<std::vector<AuditRecord>> per_s(rows);
  std::vector<std::size_t> cells(rows, 0);
  parallel_for(static_cast<std::size_t>(rows), [&](std::size_t i) {
    const int s = s_min + static_cast<int>(i);
    for (int n = static_cast<int>(theorem_min_n(s)); n <= n_cap; ++n) {
      CellAuditor(n, s, per_s[i]).run();
      ++cells[i];
    }
  });
  for (int i = 0; i < rows; ++i) {
    report.cells += cells[i];
    report.records.insert(report.records.end(), per_s[i].begin(), per_s[i].end());
  }
  return report;
}

}  // namespace arkit
