#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arkit {

enum class Relation { kLess, kEqual, kGreater, kGreaterEqual };

std::string_view to_string(Relation r);

struct AuditRecord {
  std::string_view check_id;  // points at a static literal
  int n = 0;
  int s = 0;
  std::optional<int> param;  // t or j where the check ranges over one
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  Relation relation = Relation::kLess;
  bool pass = false;

  // Slack by which the relation holds (0 for equalities that hold, negative
  // when violated).
  std::int64_t margin() const;
};

struct CheckSummary {
  std::size_t count = 0;
  std::size_t failures = 0;
  std::int64_t min_margin = 0;
  int min_margin_n = 0;
  int min_margin_s = 0;
};

struct AuditReport {
  int s_min = 0;
  int s_max = 0;
  int n_cap = 0;
  std::size_t cells = 0;
  std::vector<AuditRecord> records;  // sorted by (s, n) cell, then check order

  std::vector<AuditRecord> violations() const;
  std::map<std::string, CheckSummary> summary() const;
};

inline constexpr int kAuditMaxS = 200;
inline constexpr int kAuditMaxNCap = 100000;

// Re-verifies, in exact integer arithmetic, every counting inequality and
// identity used by the stability proof, for s in [s_min, s_max] and
// n in [max(2s+5, 40), n_cap]. Range maxima are taken directly over the
// integer parameter range; endpoint bounds are checked separately.
AuditReport audit_proof_inequalities(int s_min, int s_max, int n_cap);

// The proof's edge-count bound for |T| = t:
// C(n,2) - C(n-t,2) + C(2s+3-2t,2).
std::int64_t proof_f(std::int64_t n, std::int64_t s, std::int64_t t);
// Twice the expanded quadratic 3/2 t^2 + (n - 4s - 11/2) t + 2s^2 + 5s + 3.
std::int64_t proof_f_expanded_doubled(std::int64_t n, std::int64_t s, std::int64_t t);
std::int64_t proof_h1(std::int64_t n, std::int64_t s, std::int64_t j);
std::int64_t proof_h2(std::int64_t n, std::int64_t s, std::int64_t j);
std::int64_t proof_h3(std::int64_t n, std::int64_t s, std::int64_t j);
std::int64_t proof_p1(std::int64_t n, std::int64_t s, std::int64_t t);
std::int64_t proof_p2(std::int64_t n, std::int64_t s, std::int64_t t);

}  // namespace arkit
