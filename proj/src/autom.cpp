#include "pmax/autom.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <random>
#include <thread>

#include "pmax/blackburn.hpp"
#include "pmax/error.hpp"

namespace pmax {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Violation: return "violation";
    case Outcome::Refused: return "refused";
  }
  return "?";
}

int VerificationReport::exit_code() const {
  switch (outcome) {
    case Outcome::Pass: return 0;
    case Outcome::Violation: return 2;
    case Outcome::Refused: return 3;
  }
  return 2;
}

int main1_bound_exponent(int p, int n) {
  const int num = 3 * n - 2 * p + 5;
  return num >= 0 ? (num + 1) / 2 : -((-num) / 2);
}

namespace {

using Clock = std::chrono::steady_clock;

struct ScanFailure {
  std::int64_t index;
  std::string witness;
};

using ScanFn = std::function<std::optional<std::string>(std::int64_t)>;

// Runs fn over [0, count) and returns the lowest failing index. Workers take
// chunks in order and skip chunks past the best failure seen so far.
std::optional<ScanFailure> scan(std::int64_t count, unsigned threads, const ScanFn& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  constexpr std::int64_t kChunk = 256;
  if (threads <= 1 || count < 2 * kChunk) {
    for (std::int64_t i = 0; i < count; ++i)
      if (auto w = fn(i)) return ScanFailure{i, *w};
    return std::nullopt;
  }
  std::atomic<std::int64_t> next{0};
  std::atomic<std::int64_t> best{count};
  std::mutex mu;
  std::string best_witness;
  std::exception_ptr error;
  auto worker = [&] {
    try {
      for (;;) {
        const std::int64_t start = next.fetch_add(kChunk);
        if (start >= count || start >= best.load()) return;
        const std::int64_t stop = std::min(count, start + kChunk);
        for (std::int64_t i = start; i < stop; ++i)
          if (auto w = fn(i)) {
            std::lock_guard lock(mu);
            if (i < best.load()) {
              best.store(i);
              best_witness = *w;
            }
            break;
          }
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!error) error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  if (best.load() < count) return ScanFailure{best.load(), best_witness};
  return std::nullopt;
}

// Mixed-radix index of x in the basis order used by Subgroup::element_at.
std::int64_t index_in(const PcGroup& g, const Subgroup& h, Element x) {
  std::int64_t idx = 0;
  for (std::size_t k = 0; k < h.basis().size(); ++k) {
    const int c = x[h.pivots()[k]];
    idx = idx * g.p() + c;
    if (c != 0) x = g.multiply(g.power(h.basis()[k], -c), x);
  }
  if (!x.is_identity()) throw Error(ErrorKind::InvalidInput, "element outside subgroup");
  return idx;
}

// p^k, or -1 when it exceeds `cap`.
std::int64_t bounded_power(int p, int k, std::int64_t cap) {
  std::int64_t v = 1;
  for (int i = 0; i < k; ++i) {
    if (v > cap / p) return -1;
    v *= p;
  }
  return v;
}

Element random_element(const PcGroup& g, const Subgroup& h, std::mt19937_64& rng) {
  std::vector<int> c(h.basis().size());
  for (auto& x : c) x = static_cast<int>(rng() % static_cast<std::uint64_t>(g.p()));
  return h.element_at(g, c);
}

nlohmann::ordered_json budget_json(const DriverBudget& b) {
  nlohmann::ordered_json j;
  j["exhaustive_pairs"] = b.exhaustive_pairs;
  j["sampled_pairs"] = b.sampled_pairs;
  j["commute_pairs"] = b.commute_pairs;
  j["closure_exhaustive_order"] = b.closure_exhaustive_order;
  j["closure_samples"] = b.closure_samples;
  j["conjugation_members"] = b.conjugation_members;
  j["conjugating_members"] = b.conjugating_members;
  return j;
}

struct Prepared {
  MaxClassProfile profile;  // on the standardized group
  bool relabelled = false;
};

Prepared prepare(const GroupPtr& g) {
  MaxClassProfile first = analyze(g);
  GroupPtr sg = standardize(first);
  Prepared out;
  const auto& a = sg->presentation();
  const auto& b = g->presentation();
  for (int j = 0; j < a.n() && !out.relabelled; ++j) {
    out.relabelled = !(a.power_tail(j) == b.power_tail(j));
    for (int i = 0; i < j && !out.relabelled; ++i) out.relabelled = !(a.commutator_tail(j, i) == b.commutator_tail(j, i));
  }
  out.profile = analyze(sg);
  return out;
}

void echo_profile(Report& rep, const MaxClassProfile& prof, const DriverBudget& budget) {
  rep.set("p", prof.p);
  rep.set("n", prof.n);
  rep.set("l", prof.l);
  rep.set("r", prof.r);
  rep.set("t", prof.t);
  rep.set("metabelian", prof.metabelian);
  rep.set("seed", budget.seed);
  rep.set("budgets", budget_json(budget));
}

class Timer {
 public:
  explicit Timer(bool on) : on_(on) {}
  void lap(const std::string& stage) {
    if (!on_) return;
    const auto now = Clock::now();
    laps_[stage] = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }
  void emit(Report& rep) const {
    if (on_) rep.set("timings_ms", laps_);
  }

 private:
  bool on_;
  Clock::time_point last_ = Clock::now();
  nlohmann::ordered_json laps_ = nlohmann::ordered_json::object();
};

std::string pair_text(const Element& u, const Element& v) {
  return "u=" + u.to_string() + " v=" + v.to_string();
}

// Validates phi_{u,v} and checks that (u, v) can be read back from the images.
std::optional<std::string> validate_pair(const MaxClassProfile& prof, const TargetPtr& target, const Element& u,
                                         const Element& v) {
  const PcGroup& g = *prof.group;
  try {
    GroupMap m = phi(target, u, v, Context::TheoremDriver);
    if (!m.is_automorphism()) return pair_text(u, v) + ": endomorphism is not onto";
    if (!(g.multiply(g.invert(prof.s), m.apply(prof.s)) == u) ||
        !(g.multiply(g.invert(prof.s1), m.apply(prof.s1)) == v))
      return pair_text(u, v) + ": parameters not recoverable from images";
  } catch (const Error& e) {
    return pair_text(u, v) + ": " + e.what();
  }
  return std::nullopt;
}

// Validates phi_{u,v} for u, v in `a`: every pair, or seeded samples plus the u = 1 slice.
void validate_pair_family(Report& rep, const std::string& name, const MaxClassProfile& prof, const Subgroup& a,
                          const DriverBudget& budget, std::int64_t& checked, bool& exhaustive) {
  const PcGroup& g = *prof.group;
  TargetPtr target = make_target(prof.group, a);
  const int k = a.order_exponent();
  const std::int64_t pairs = bounded_power(g.p(), 2 * k, budget.exhaustive_pairs);
  exhaustive = pairs >= 0;
  std::optional<ScanFailure> fail;
  std::vector<std::pair<Element, Element>> sample;
  if (exhaustive) {
    const std::int64_t size = bounded_power(g.p(), k, budget.exhaustive_pairs);
    fail = scan(pairs, budget.threads, [&](std::int64_t i) {
      return validate_pair(prof, target, a.element_at(g, i / size), a.element_at(g, i % size));
    });
    checked = pairs;
  } else {
    std::mt19937_64 rng(budget.seed);
    for (std::int64_t i = 0; i < budget.sampled_pairs; ++i) {
      Element u = random_element(g, a, rng);
      sample.emplace_back(u, random_element(g, a, rng));
    }
    const std::int64_t slice = bounded_power(g.p(), k, budget.exhaustive_pairs);
    if (slice >= 0)
      for (std::int64_t i = 0; i < slice; ++i) sample.emplace_back(g.identity(), a.element_at(g, i));
    fail = scan(static_cast<std::int64_t>(sample.size()), budget.threads, [&](std::int64_t i) {
      const auto& [u, v] = sample[static_cast<std::size_t>(i)];
      return validate_pair(prof, target, u, v);
    });
    checked = static_cast<std::int64_t>(sample.size());
    rep.set(name + "_v_slice", slice >= 0);
  }
  rep.set(name + "_mode", exhaustive ? "exhaustive" : "sampled");
  rep.set(name + "_checked", checked);
  rep.check(name + " validate", !fail, fail ? fail->witness : std::string{});
}

VerificationReport refused(Report rep, const std::string& why) {
  rep.set("refusal", why);
  rep.set("outcome", to_string(Outcome::Refused));
  rep.check("preconditions", false, why);
  return {std::move(rep), Outcome::Refused};
}

VerificationReport finish(Report rep) {
  const Outcome o = rep.passed() ? Outcome::Pass : Outcome::Violation;
  rep.set("outcome", to_string(o));
  if (o == Outcome::Violation) rep.set("witness", rep.first_failure());
  return {std::move(rep), o};
}

// Theorem preconditions shared by the two main drivers.
std::optional<std::string> main_preconditions(const PcGroup& g) {
  if (g.p() < 5) return "requires p >= 5 (got p = " + std::to_string(g.p()) + ")";
  if (g.n() <= g.p() + 1)
    return "requires n > p + 1 (got p = " + std::to_string(g.p()) + ", n = " + std::to_string(g.n()) + ")";
  return std::nullopt;
}

}  // namespace

GroupMap phi(const TargetPtr& target, const Element& u, const Element& v, Context ctx) {
  return make_derivation(target, u, v, ctx).one_plus();
}

AutFamily build_H(const MaxClassProfile& prof, const DriverBudget& budget) {
  const PcGroup& g = *prof.group;
  const Subgroup& a = prof.A;
  AutFamily fam;
  fam.description = "H = { phi_{1,v} : v in G_" + std::to_string(prof.r) + " }";
  fam.claimed_order_exponent = prof.n - prof.r;
  const std::int64_t size = bounded_power(g.p(), a.order_exponent(), budget.exhaustive_pairs);
  if (size < 0) throw Error(ErrorKind::InvalidInput, "H too large to enumerate within the pair budget");
  TargetPtr target = make_target(prof.group, a);
  fam.parameters.reserve(static_cast<std::size_t>(size));
  fam.members.reserve(static_cast<std::size_t>(size));
  for (std::int64_t i = 0; i < size; ++i) {
    fam.parameters.push_back(a.element_at(g, i));
    fam.members.push_back(phi(target, g.identity(), fam.parameters.back(), Context::TheoremDriver));
  }

  Report& rep = fam.closure;
  rep = Report("h-closure");
  rep.set("members", size);
  rep.check("order", a.order_exponent() == fam.claimed_order_exponent,
            "|A| = p^" + std::to_string(a.order_exponent()));
  const Element s1_inv = g.invert(prof.s1);
  auto distinct = scan(size, budget.threads, [&](std::int64_t i) -> std::optional<std::string> {
    const GroupMap& m = fam.members[static_cast<std::size_t>(i)];
    if (!(m.apply(prof.s) == prof.s)) return "phi moves s for v=" + fam.parameters[i].to_string();
    if (index_in(g, a, g.multiply(s1_inv, m.apply(prof.s1))) != i)
      return "phi parameter not recoverable for v=" + fam.parameters[i].to_string();
    return std::nullopt;
  });
  rep.check("distinct members", !distinct, distinct ? distinct->witness : std::string{});

  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  const bool exhaustive = size <= budget.closure_exhaustive_order;
  if (exhaustive) {
    for (std::int64_t i = 0; i < size; ++i)
      for (std::int64_t j = 0; j < size; ++j) pairs.emplace_back(i, j);
  } else {
    std::mt19937_64 rng(budget.seed ^ 0x4855ull);
    for (std::int64_t k = 0; k < budget.closure_samples; ++k) {
      const auto i = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(size));
      const auto j = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(size));
      pairs.emplace_back(i, j);
    }
  }
  auto fail = scan(static_cast<std::int64_t>(pairs.size()), budget.threads,
                   [&](std::int64_t k) -> std::optional<std::string> {
                     const auto [i, j] = pairs[static_cast<std::size_t>(k)];
                     const GroupMap c = fam.members[i].then(fam.members[j]);
                     const std::string w = "v=" + fam.parameters[i].to_string() + " w=" + fam.parameters[j].to_string();
                     if (!(c.apply(prof.s) == prof.s)) return w + ": composite moves s";
                     const Element v2 = g.multiply(s1_inv, c.apply(prof.s1));
                     if (!a.contains(g, v2)) return w + ": composite leaves H";
                     if (!(c == fam.members[index_in(g, a, v2)])) return w + ": composite differs from its member";
                     return std::nullopt;
                   });
  rep.set("closure_mode", exhaustive ? "exhaustive" : "sampled");
  rep.set("closure_pairs", static_cast<std::int64_t>(pairs.size()));
  rep.check("closed under composition", !fail, fail ? fail->witness : std::string{});
  return fam;
}

Report h_cap_inn_check(const MaxClassProfile& prof) {
  if (prof.r <= 2)
    throw Error(ErrorKind::PreconditionRefused,
                "r = 2: the metabelian case is covered by the metabelian theorem (verify metabelian)");
  const PcGroup& g = *prof.group;
  const int n = prof.n;
  Report rep("h-cap-inn");
  const Subgroup& last = prof.term(n - 1);
  const Subgroup whole = Subgroup::whole(g);
  const Subgroup center = centralizer_mod(g, whole, Subgroup::trivial(g));
  rep.check("center is G_{n-1}", center == last, "|Z(G)| = p^" + std::to_string(center.order_exponent()));
  const Element s_arr[] = {prof.s};
  const Subgroup cs = centralizer_mod(g, Subgroup::generated(g, s_arr), Subgroup::trivial(g));
  std::vector<Element> cs_gens{prof.s};
  for (const auto& b : last.basis()) cs_gens.push_back(b);
  rep.check("C_G(s) = <s, G_{n-1}>", cs == Subgroup::generated(g, cs_gens),
            "|C_G(s)| = p^" + std::to_string(cs.order_exponent()));

  const auto zs = last.elements(g);
  int candidates = 0;
  int nontrivial = 0;
  std::string bad;
  for (int i = 0; i < g.p(); ++i) {
    const Element si = g.power(prof.s, i);
    for (const auto& z : zs) {
      ++candidates;
      const Element cand = g.multiply(si, z);
      const Element v = g.commutator(prof.s1, cand);
      if (v.is_identity()) continue;
      ++nontrivial;
      const bool in_g2_not_g3 = prof.term(2).contains(g, v) && !prof.term(3).contains(g, v);
      if (bad.empty() && (!in_g2_not_g3 || prof.A.contains(g, v)))
        bad = "g=" + cand.to_string() + " gives v=" + v.to_string();
    }
  }
  rep.set("candidates", candidates);
  rep.set("nontrivial_values", nontrivial);
  rep.check("no nontrivial value in A", bad.empty(), bad);
  return rep;
}

VerificationReport verify_thm_metabelian(GroupPtr gp, const DriverBudget& budget) {
  Report rep("verify-metabelian");
  Timer timer(budget.timings);
  Prepared prep;
  try {
    prep = prepare(gp);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Inconsistent) throw;
    rep.set("seed", budget.seed);
    rep.set("budgets", budget_json(budget));
    return refused(std::move(rep), e.what());
  }
  const MaxClassProfile& prof = prep.profile;
  echo_profile(rep, prof, budget);
  rep.set("standardized", prep.relabelled);
  if (!prof.metabelian) return refused(std::move(rep), "group is not metabelian ([G_2, G_2] != 1)");
  timer.lap("analysis");

  std::int64_t checked = 0;
  bool exhaustive = false;
  validate_pair_family(rep, "pairs", prof, prof.term(2), budget, checked, exhaustive);
  timer.lap("pairs");
  const int achieved = 2 * prof.term(2).order_exponent();
  rep.set("certification", exhaustive ? "exhaustive" : "sampled");
  rep.set("achieved_exponent", achieved);
  rep.check("achieved exponent is 2n-4", achieved == 2 * prof.n - 4);
  timer.emit(rep);
  return finish(std::move(rep));
}

VerificationReport verify_thm_main1(GroupPtr gp, const DriverBudget& budget) {
  Report rep("verify-main1");
  Timer timer(budget.timings);
  const int p = gp->p();
  const int n = gp->n();
  const int bound = main1_bound_exponent(p, n);
  rep.set("required_exponent", bound);
  if (auto why = main_preconditions(*gp)) {
    rep.set("seed", budget.seed);
    rep.set("budgets", budget_json(budget));
    return refused(std::move(rep), *why);
  }
  Prepared prep;
  try {
    prep = prepare(gp);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Inconsistent) throw;
    rep.set("seed", budget.seed);
    rep.set("budgets", budget_json(budget));
    return refused(std::move(rep), e.what());
  }
  const MaxClassProfile& prof = prep.profile;
  const PcGroup& g = *prof.group;
  echo_profile(rep, prof, budget);
  rep.set("standardized", prep.relabelled);
  timer.lap("analysis");

  if (prof.r == 2) {
    rep.set("branch", "metabelian");
    VerificationReport sub = verify_thm_metabelian(gp, budget);
    if (sub.outcome == Outcome::Refused) {
      rep.absorb(sub.report, "metabelian.");
      return refused(std::move(rep), "metabelian branch refused: " +
                                         sub.report.fields().value("refusal", std::string{}));
    }
    rep.absorb(sub.report, "metabelian.");
    const int achieved = 2 * n - 4;
    rep.set("certification", sub.report.fields().value("certification", std::string{}));
    rep.set("achieved_exponent", achieved);
    rep.check("achieved >= required", achieved >= bound,
              std::to_string(achieved) + " vs " + std::to_string(bound));
    timer.lap("metabelian");
    timer.emit(rep);
    return finish(std::move(rep));
  }

  rep.set("branch", "nonmetabelian");
  const int l = prof.l;
  const int r = prof.r;
  rep.check("A = G_r abelian", prof.A.is_abelian(g));

  std::string sim;
  for (int i = r; i < n && sim.empty(); ++i) {
    const Element si = prof.s_(i);
    if (!g.commutator(si, prof.s1).is_identity()) sim = "[s" + std::to_string(i) + ", s1] != 1";
    else if (!(g.commutator(si, prof.s) == prof.s_(i + 1)))
      sim = "[s" + std::to_string(i) + ", s] != s" + std::to_string(i + 1);
  }
  rep.check("module similarity for i >= r", sim.empty(), sim);
  rep.absorb(verify_exponent_relations(prof), "expo.");
  timer.lap("structure");

  {
    const int k = l + 2;
    GroupPtr bb = build_blackburn_pc(p, n);
    GroupPtr q = PcGroup::make_checked(quotient_by_term(g, k));
    GroupPtr q2 = PcGroup::make_checked(quotient_by_term(*bb, k));
    std::vector<Element> fwd, back;
    for (int i = 0; i < k; ++i) {
      fwd.push_back(q2->generator(i));
      back.push_back(q->generator(i));
    }
    auto v1 = find_violated_relation(*q, *q2, fwd);
    auto v2 = find_violated_relation(*q2, *q, back);
    const bool onto = generates_modulo(*q2, q2->frattini(), fwd) && generates_modulo(*q, q->frattini(), back);
    std::string why;
    if (v1) why = "G/N -> G'/N' breaks " + v1->relation;
    else if (v2) why = "G'/N' -> G/N breaks " + v2->relation;
    else if (!onto) why = "dictionary is not onto";
    rep.set("quotient_order_exponent", k);
    rep.check("G/G_{l+2} isomorphic to G'/G'_{l+2}", why.empty(), why);
  }
  timer.lap("quotient");

  std::int64_t checked = 0;
  bool exhaustive = false;
  validate_pair_family(rep, "pairs", prof, prof.A, budget, checked, exhaustive);
  rep.set("certification", exhaustive ? "exhaustive" : "sampled");
  timer.lap("pairs");

  try {
    AutFamily h = build_H(prof, budget);
    rep.set("H_order_exponent", h.claimed_order_exponent);
    rep.absorb(h.closure, "H.");
  } catch (const Error& e) {
    rep.check("H", false, e.what());
  }
  rep.absorb(h_cap_inn_check(prof), "h_cap_inn.");
  timer.lap("H");

  const int c = n + l;
  rep.set("achieved_exponent", c);
  rep.check("2l >= n - 2p + 5", 2 * l >= n - 2 * p + 5,
            "2l = " + std::to_string(2 * l) + ", n - 2p + 5 = " + std::to_string(n - 2 * p + 5));
  rep.check("achieved >= required", c >= bound, std::to_string(c) + " vs " + std::to_string(bound));
  timer.emit(rep);
  return finish(std::move(rep));
}

VerificationReport verify_thm_main2(GroupPtr gp, const DriverBudget& budget) {
  Report rep("verify-main2");
  Timer timer(budget.timings);
  const int p = gp->p();
  const int n = gp->n();
  const int bound = n - 2 * p + 7;
  rep.set("required_exponent", bound);
  if (auto why = main_preconditions(*gp)) {
    rep.set("seed", budget.seed);
    rep.set("budgets", budget_json(budget));
    return refused(std::move(rep), *why);
  }
  Prepared prep;
  try {
    prep = prepare(gp);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Inconsistent) throw;
    rep.set("seed", budget.seed);
    rep.set("budgets", budget_json(budget));
    return refused(std::move(rep), e.what());
  }
  const MaxClassProfile& prof = prep.profile;
  const PcGroup& g = *prof.group;
  echo_profile(rep, prof, budget);
  rep.set("standardized", prep.relabelled);
  timer.lap("analysis");

  const int t = prof.t;
  const Subgroup& gt = prof.term(t);
  const int k = gt.order_exponent();
  const int achieved = 2 * k;
  rep.set("achieved_exponent", achieved);
  rep.check("n - t + 1 <= t", n - t + 1 <= t);
  rep.check("|G_t| = p^(n-t)", k == n - t);

  TargetPtr target;
  try {
    target = make_target(prof.group, gt);
  } catch (const Error& e) {
    rep.check("G_t abelian normal", false, e.what());
    return finish(std::move(rep));
  }
  const std::int64_t size = bounded_power(p, k, budget.exhaustive_pairs);
  const std::int64_t fam = size < 0 ? -1 : bounded_power(p, 2 * k, budget.exhaustive_pairs);
  if (fam < 0) {
    rep.check("family enumerable", false, "|G_t|^2 exceeds the pair budget");
    return finish(std::move(rep));
  }
  rep.set("family_size", fam);

  // Members indexed by iu * size + iv.
  std::vector<std::optional<GroupMap>> members(static_cast<std::size_t>(fam));
  const Element s_inv = g.invert(prof.s);
  const Element s1_inv = g.invert(prof.s1);
  auto built = scan(fam, budget.threads, [&](std::int64_t i) -> std::optional<std::string> {
    const Element u = gt.element_at(g, i / size);
    const Element v = gt.element_at(g, i % size);
    try {
      GroupMap m = phi(target, u, v, Context::TheoremDriver);
      if (!m.is_automorphism()) return pair_text(u, v) + ": not onto";
      for (const auto& b : gt.basis())
        if (!(m.apply(b) == b)) return pair_text(u, v) + ": G_t not in kernel at " + b.to_string();
      members[static_cast<std::size_t>(i)] = std::move(m);
    } catch (const Error& e) {
      return pair_text(u, v) + ": " + e.what();
    }
    return std::nullopt;
  });
  rep.check("family validates with G_t in every kernel", !built, built ? built->witness : std::string{});
  timer.lap("family");
  if (built) {
    timer.emit(rep);
    return finish(std::move(rep));
  }
  auto member = [&](std::int64_t i) -> const GroupMap& { return *members[static_cast<std::size_t>(i)]; };
  // Parameters (u, v) of a map fixing the cosets s G_t and s_1 G_t, or -1.
  auto index_of_map = [&](const GroupMap& m) -> std::int64_t {
    const Element u = g.multiply(s_inv, m.apply(prof.s));
    const Element v = g.multiply(s1_inv, m.apply(prof.s1));
    if (!gt.contains(g, u) || !gt.contains(g, v)) return -1;
    return index_in(g, gt, u) * size + index_in(g, gt, v);
  };
  auto sum_index = [&](std::int64_t a, std::int64_t b) {
    const Element u = g.multiply(gt.element_at(g, a / size), gt.element_at(g, b / size));
    const Element v = g.multiply(gt.element_at(g, a % size), gt.element_at(g, b % size));
    return index_in(g, gt, u) * size + index_in(g, gt, v);
  };

  {
    auto fail = scan(fam, budget.threads, [&](std::int64_t i) -> std::optional<std::string> {
      if (index_of_map(member(i)) != i) return "member " + std::to_string(i) + " parameters not recoverable";
      return std::nullopt;
    });
    rep.check("members pairwise distinct", !fail, fail ? fail->witness : std::string{});
  }

  // Abelian group under composition: all pairs when affordable, otherwise a
  // generator certificate plus seeded pairs.
  auto pair_check = [&](std::int64_t a, std::int64_t b) -> std::optional<std::string> {
    const GroupMap ab = member(a).then(member(b));
    if (!(ab == member(b).then(member(a))))
      return "members " + std::to_string(a) + ", " + std::to_string(b) + " do not commute";
    if (!(ab == member(sum_index(a, b))))
      return "members " + std::to_string(a) + ", " + std::to_string(b) + ": composite is not phi_{uu',vv'}";
    return std::nullopt;
  };
  const std::int64_t all_pairs = fam <= budget.commute_pairs ? fam * fam : -1;
  if (all_pairs >= 0 && all_pairs <= budget.commute_pairs) {
    auto fail = scan(all_pairs, budget.threads, [&](std::int64_t i) { return pair_check(i / fam, i % fam); });
    rep.set("commutation_mode", "exhaustive");
    rep.set("commutation_pairs", all_pairs);
    rep.check("abelian under composition", !fail, fail ? fail->witness : std::string{});
  } else {
    std::vector<std::int64_t> gens;
    for (int b = 0; b < k; ++b) {
      const std::int64_t unit = bounded_power(p, k - 1 - b, fam);
      gens.push_back(unit * size);  // phi_{b,1}
      gens.push_back(unit);         // phi_{1,b}
    }
    std::string bad;
    for (std::size_t a = 0; a < gens.size() && bad.empty(); ++a)
      for (std::size_t b = 0; b < gens.size() && bad.empty(); ++b)
        if (auto w = pair_check(gens[a], gens[b])) bad = *w;
    rep.check("generators commute", bad.empty(), bad);
    auto hom = scan(fam, budget.threads, [&](std::int64_t i) -> std::optional<std::string> {
      for (auto gi : gens)
        if (!(member(i).then(member(gi)) == member(sum_index(i, gi))))
          return "member " + std::to_string(i) + " times generator " + std::to_string(gi) + " leaves the law";
      return std::nullopt;
    });
    rep.check("composition law on every member and generator", !hom, hom ? hom->witness : std::string{});
    std::mt19937_64 rng(budget.seed ^ 0xab1ull);
    std::vector<std::pair<std::int64_t, std::int64_t>> sample;
    for (std::int64_t i = 0; i < budget.commute_pairs; ++i) {
      const auto a = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(fam));
      sample.emplace_back(a, static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(fam)));
    }
    auto fail = scan(static_cast<std::int64_t>(sample.size()), budget.threads, [&](std::int64_t i) {
      return pair_check(sample[static_cast<std::size_t>(i)].first, sample[static_cast<std::size_t>(i)].second);
    });
    rep.set("commutation_mode", "generators+sampled");
    rep.set("commutation_pairs", static_cast<std::int64_t>(sample.size()));
    rep.check("abelian under composition", !fail, fail ? fail->witness : std::string{});
  }
  timer.lap("commutation");

  // Closure under conjugation by inner(s), inner(s_1) and seeded phi_{u,v}, u, v in A.
  struct Conjugator {
    std::string name;
    GroupMap map, inverse;
  };
  std::vector<Conjugator> conj;
  conj.push_back({"inner(s)", inner_automorphism(prof.group, prof.s), inner_automorphism(prof.group, s_inv)});
  conj.push_back({"inner(s1)", inner_automorphism(prof.group, prof.s1), inner_automorphism(prof.group, s1_inv)});
  {
    std::mt19937_64 rng(budget.seed ^ 0xc0ull);
    TargetPtr ta = make_target(prof.group, prof.A);
    for (int i = 0; i < budget.conjugating_members; ++i) {
      const Element u = random_element(g, prof.A, rng);
      const Element v = random_element(g, prof.A, rng);
      GroupMap m = phi(ta, u, v, Context::TheoremDriver);
      GroupMap inv = map_inverse(m);
      conj.push_back({"phi(" + pair_text(u, v) + ")", std::move(m), std::move(inv)});
    }
  }
  std::vector<std::int64_t> targets;
  const bool all_members = fam <= budget.conjugation_members;
  if (all_members) {
    for (std::int64_t i = 0; i < fam; ++i) targets.push_back(i);
  } else {
    std::mt19937_64 rng(budget.seed ^ 0xc1ull);
    for (std::int64_t i = 0; i < budget.conjugation_members; ++i)
      targets.push_back(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(fam)));
  }
  for (const auto& c : conj) {
    auto fail = scan(static_cast<std::int64_t>(targets.size()), budget.threads,
                     [&](std::int64_t i) -> std::optional<std::string> {
                       const std::int64_t idx = targets[static_cast<std::size_t>(i)];
                       const GroupMap psi = c.inverse.then(member(idx)).then(c.map);
                       const std::int64_t j = index_of_map(psi);
                       if (j < 0) return "member " + std::to_string(idx) + ": conjugate leaves the G_t cosets";
                       if (!(psi == member(j))) return "member " + std::to_string(idx) + ": conjugate not in family";
                       return std::nullopt;
                     });
    rep.check("closed under " + c.name, !fail, fail ? fail->witness : std::string{});
  }
  rep.set("conjugation_mode", all_members ? "exhaustive" : "sampled");
  rep.set("conjugators", static_cast<std::int64_t>(conj.size()));
  timer.lap("conjugation");

  rep.check("2(n - t) >= n - 2p + 7", achieved >= bound,
            std::to_string(achieved) + " vs " + std::to_string(bound));
  timer.emit(rep);
  return finish(std::move(rep));
}

}  // namespace pmax
