#pragma once

#include <memory>
#include <vector>

#include "pmax/group_map.hpp"
#include "pmax/report.hpp"
#include "pmax/subgroup.hpp"

namespace pmax {

/// Who is asking for a derivation. A validation failure is an ordinary
/// outcome when exploring, but a theorem violation inside a driver.
enum class Context { Exploratory, TheoremDriver };

/// An abelian normal subgroup A, checked once and shared by derivations into it.
class DerivationTarget {
 public:
  /// Throws InvalidInput unless A is abelian and normal in G.
  DerivationTarget(GroupPtr group, Subgroup a);

  const GroupPtr& group() const { return group_; }
  const Subgroup& subgroup() const { return a_; }
  bool contains(const Element& x) const { return a_.contains(*group_, x); }

 private:
  GroupPtr group_;
  Subgroup a_;
};

using TargetPtr = std::shared_ptr<const DerivationTarget>;

TargetPtr make_target(GroupPtr group, Subgroup a);

/// A derivation delta: G -> A for the conjugation action, (gh)delta = (g delta)^h (h delta).
///
/// Stored as its values on the pc generators together with the validated
/// endomorphism 1 + delta, through which every evaluation goes.
class Derivation {
 public:
  /// delta = -1 + alpha for an endomorphism alpha that moves each generator
  /// within its A-coset. Throws ValidationFailed (TheoremViolation in driver
  /// context) if alpha is not an endomorphism.
  static Derivation from_generator_values(TargetPtr target, std::vector<Element> values,
                                          Context ctx = Context::Exploratory);
  static Derivation from_endomorphism(TargetPtr target, const GroupMap& alpha);
  static Derivation zero(TargetPtr target);

  const TargetPtr& target() const { return target_; }
  const PcGroup& group() const { return *target_->group(); }
  const std::vector<Element>& values() const { return values_; }

  /// g delta = g^-1 (g alpha)
  Element eval(const Element& g) const;
  /// The endomorphism 1 + delta.
  const GroupMap& one_plus() const { return alpha_; }

  bool is_zero() const;

  friend bool operator==(const Derivation& a, const Derivation& b) { return a.values_ == b.values_; }

 private:
  Derivation(TargetPtr target, std::vector<Element> values, GroupMap alpha)
      : target_(std::move(target)), values_(std::move(values)), alpha_(std::move(alpha)) {}

  TargetPtr target_;
  std::vector<Element> values_;
  GroupMap alpha_;
};

/// True when a_{i+1} = [a_i, a_1] for 2 <= i < n, i.e. the pc generators are
/// s, s_1, s_2, ... with s_{i+1} = [s_i, s].
bool is_standard_chain(const PcGroup& g);

/// Images of all pc generators of a standard-chain group for a map with
/// s -> s_image, s_1 -> s1_image, extended by s_{i+1} -> [s_i image, s image].
std::vector<Element> extend_standard_images(const PcGroup& g, const Element& s_image, const Element& s1_image);

/// The derivation with s delta = u and s_1 delta = v, built as -1 + alpha for
/// alpha: s -> s u, s_1 -> s_1 v. Requires a standard-chain group and u, v in A.
Derivation make_derivation(TargetPtr target, const Element& u, const Element& v,
                           Context ctx = Context::Exploratory);

/// Pointwise product of values (the "+" of maps into A).
Derivation add(const Derivation& a, const Derivation& b);
Derivation negate(const Derivation& a);
/// a + b + ab, where ab is left-to-right composition g -> (g a) b.
Derivation bullet(const Derivation& a, const Derivation& b);

/// g -> (g a) b. Not a derivation in general, so exposed as a plain function.
Element compose_eval(const Derivation& a, const Derivation& b, const Element& g);

/// True when delta vanishes on A, i.e. delta lies in Der(G/A, A).
bool vanishes_on_target(const Derivation& d);

/// Fixed points of 1 + delta. A subgroup, not necessarily normal.
Subgroup kernel_of(const Derivation& d);

/// For delta into gamma_r (abelian): checks gamma_i delta within gamma_{i+r-1}
/// on every basis element of gamma_i, one check per i.
Report check_lemma_down(const Derivation& d, const SeriesChain& lcs, int r);

}  // namespace pmax
