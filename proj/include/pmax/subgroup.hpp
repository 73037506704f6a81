#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "pmax/pcgroup.hpp"

namespace pmax {

/// Subgroup given by an induced pcgs in reduced echelon form.
///
/// Every basis element has leading exponent 1 and zeros at the other pivot
/// positions; that makes the basis canonical, so equal subgroups have equal
/// bases. |H| = p^order_exponent() with order_exponent() == basis().size().
class Subgroup {
 public:
  Subgroup() = default;
  /// Trivial subgroup of a group with n generators.
  explicit Subgroup(int n);

  static Subgroup trivial(const PcGroup& g) { return Subgroup(g.n()); }
  static Subgroup whole(const PcGroup& g);

  /// <gens>, or its normal closure when `normal` is set.
  static Subgroup generated(const PcGroup& g, std::span<const Element> gens, bool normal = false);
  static Subgroup normal_closure(const PcGroup& g, std::span<const Element> gens) {
    return generated(g, gens, true);
  }
  /// <a_{from+1}, ..., a_n> (0-based `from`).
  static Subgroup tail_span(const PcGroup& g, int from);

  int order_exponent() const { return static_cast<int>(basis_.size()); }
  bool is_trivial() const { return basis_.empty(); }
  const std::vector<Element>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  int ambient_rank() const { return n_; }

  /// Canonical coset representative: zero at every pivot, r = g * h for some h in H.
  Element sift(const PcGroup& g, Element x) const;
  bool contains(const PcGroup& g, const Element& x) const;
  bool contains(const PcGroup& g, const Subgroup& other) const;
  bool is_normal(const PcGroup& g) const;
  bool is_abelian(const PcGroup& g) const;

  /// All elements, in lexicographic order of the basis exponents. Guarded by `limit`.
  std::vector<Element> elements(const PcGroup& g, long long limit = 10'000'000) const;
  /// Element b_1^{c_1} ... b_k^{c_k} for a coefficient vector of length order_exponent().
  Element element_at(const PcGroup& g, std::span<const int> coeffs) const;
  /// Element indexed by 0 <= index < p^k in mixed radix.
  Element element_at(const PcGroup& g, long long index) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }

 private:
  friend class SubgroupBuilder;
  int n_ = 0;
  std::vector<Element> basis_;  // sorted by pivot
  std::vector<int> pivots_;
};

/// [H, K] as a normal subgroup (normal closure of basis commutators).
Subgroup commutator_subgroup(const PcGroup& g, const Subgroup& h, const Subgroup& k);

/// Largest subgroup satisfying `pred`, found by descending the pcgs and
/// scanning canonical coset representatives. The set {x : pred(x)} must be
/// a subgroup. Throws InvalidInput if a level needs more than `scan_limit` candidates.
Subgroup subgroup_by_predicate(const PcGroup& g, const std::function<bool(const Element&)>& pred,
                               long long scan_limit = 50'000'000);

/// {x in G : [h, x] in K for every basis element h of H}.
Subgroup centralizer_mod(const PcGroup& g, const Subgroup& h, const Subgroup& k);

/// Descending series with gamma(1) = whole group. Terms past the end are trivial.
class SeriesChain {
 public:
  SeriesChain() = default;
  explicit SeriesChain(std::vector<Subgroup> terms)
      : terms_(std::move(terms)), trivial_(terms_.empty() ? 0 : terms_.front().ambient_rank()) {}

  int length() const { return static_cast<int>(terms_.size()); }
  /// 1-based; returns the trivial subgroup beyond the last stored term.
  const Subgroup& term(int i) const;
  std::vector<int> order_exponents() const;
  const std::vector<Subgroup>& terms() const { return terms_; }

 private:
  std::vector<Subgroup> terms_;
  Subgroup trivial_;
};

/// gamma_1 = G, gamma_{i+1} = [gamma_i, G], stopping at (and including) the trivial term.
SeriesChain lower_central_series(const PcGroup& g);

/// Nilpotency class = number of nontrivial terms.
int nilpotency_class(const SeriesChain& lcs);

/// Quotient by <a_{k+1}, ..., a_n>. Requires that subgroup to be normal.
PcPresentation quotient_by_term(const PcGroup& g, int k);

/// Frattini subgroup G^p [G, G].
Subgroup frattini_subgroup(const PcGroup& g);

/// True when `base` together with `extra` generates G. `base` must be a normal
/// subgroup containing the Frattini subgroup.
bool generates_modulo(const PcGroup& g, const Subgroup& base, std::span<const Element> extra);

}  // namespace pmax
