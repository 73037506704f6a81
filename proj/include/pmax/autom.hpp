#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pmax/derivation.hpp"
#include "pmax/group_map.hpp"
#include "pmax/maxclass.hpp"
#include "pmax/report.hpp"

namespace pmax {

/// Sampling budgets and thresholds for the verification drivers. Every value
/// is echoed in the reports.
struct DriverBudget {
  std::uint64_t seed = 0x5eed'b1ac'6b42'0001ull;
  /// Pair sets (u, v) up to this size are enumerated completely.
  std::int64_t exhaustive_pairs = 1'000'000;
  /// Seeded pairs checked when a pair set is too large.
  std::int64_t sampled_pairs = 1'000;
  /// Commutation checks for the abelian family: all pairs up to this many, else this many seeded pairs.
  std::int64_t commute_pairs = 10'000;
  /// Closure of H under composition: exhaustive when |A| <= this.
  std::int64_t closure_exhaustive_order = 125;
  std::int64_t closure_samples = 1'000;
  /// Family members conjugated by each test automorphism (all of them when the family is smaller).
  std::int64_t conjugation_members = 20'000;
  /// Seeded members of the larger family used as conjugators.
  int conjugating_members = 5;
  unsigned threads = 0;  // 0 = hardware concurrency
  bool timings = false;
};

enum class Outcome { Pass, Violation, Refused };

const char* to_string(Outcome o);

struct VerificationReport {
  Report report;
  Outcome outcome = Outcome::Pass;
  /// 0 pass, 2 theorem violation, 3 precondition refusal.
  int exit_code() const;
};

/// phi_{u,v}: s -> s u, s_1 -> s_1 v, built as 1 + delta. `target` lives on a
/// standard-chain group. Throws ValidationFailed / TheoremViolation per ctx.
GroupMap phi(const TargetPtr& target, const Element& u, const Element& v, Context ctx = Context::Exploratory);

/// Automorphisms enumerated with their parameters.
struct AutFamily {
  std::string description;
  int claimed_order_exponent = 0;
  std::vector<Element> parameters;  // v for phi_{1,v}
  std::vector<GroupMap> members;
  Report closure;  // composition closure checks
};

/// H = { phi_{1,v} : v in A } on a standard-chain profile, with its closure
/// under composition checked exhaustively or on seeded pairs.
AutFamily build_H(const MaxClassProfile& standard_profile, const DriverBudget& budget = {});

/// Trivial intersection of H with Inn(G) by scanning g in <s> G_{n-1}.
/// Throws PreconditionRefused when r <= 2.
Report h_cap_inn_check(const MaxClassProfile& standard_profile);

/// Every (u, v) in G_2 x G_2 gives an automorphism s -> s u, s_1 -> s_1 v.
VerificationReport verify_thm_metabelian(GroupPtr g, const DriverBudget& budget = {});

/// Aut(G) has a subgroup of order p^ceil((3n - 2p + 5) / 2) for p >= 5, n > p + 1.
VerificationReport verify_thm_main1(GroupPtr g, const DriverBudget& budget = {});

/// Aut(G) has an abelian normal subgroup of order p^(n - 2p + 7) for p >= 5, n > p + 1.
VerificationReport verify_thm_main2(GroupPtr g, const DriverBudget& budget = {});

/// ceil((3n - 2p + 5) / 2)
int main1_bound_exponent(int p, int n);

}  // namespace pmax
