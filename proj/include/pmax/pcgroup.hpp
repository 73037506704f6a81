#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "pmax/element.hpp"
#include "pmax/presentation.hpp"

namespace pmax {

class Subgroup;

/// Outcome of the overlap tests run by PcGroup::consistency_check.
struct ConsistencyReport {
  bool passed = true;
  int overlaps_checked = 0;
  std::string failing_overlap;  // empty when passed
  Element lhs, rhs;             // the two disagreeing normal forms
};

/// Collector for a weighted pc presentation.
///
/// Multiplication works by collection from the left: to append a_g^e to a
/// normal form u*w (w supported above g) we form u*a_g^e followed by the
/// conjugate w^(a_g^e), using a precomputed table of a_j^(a_g^e). The
/// weighted support rule guarantees termination even for inconsistent input,
/// which is what lets consistency_check run on untrusted presentations.
///
/// Instances are immutable after construction and safe to share.
class PcGroup {
 public:
  /// Builds the collector. Structural validation only; call
  /// consistency_check (or use make_checked) before trusting the arithmetic.
  explicit PcGroup(PcPresentation presentation);

  /// Builds and requires a passing consistency check (Error Inconsistent).
  static std::shared_ptr<const PcGroup> make_checked(PcPresentation presentation);

  const PcPresentation& presentation() const { return pres_; }
  int p() const { return pres_.p(); }
  int n() const { return pres_.n(); }

  Element identity() const { return Element(n()); }
  Element generator(int i, int exponent = 1) const;

  Element collect(const Word& w) const;
  Element multiply(const Element& a, const Element& b) const;
  Element invert(const Element& a) const;
  Element power(const Element& a, long long k) const;
  /// [a, b] = a^-1 b^-1 a b
  Element commutator(const Element& a, const Element& b) const;
  /// a^b = b^-1 a b
  Element conjugate(const Element& a, const Element& b) const;
  long long element_order(const Element& a) const;

  /// In-place right multiplication, r <- r * x.
  void multiply_into(Element& r, const Element& x) const;

  ConsistencyReport consistency_check() const;

  /// Exponent vector -> element with range checks.
  Element element(std::span<const int> exps) const;

  /// Frattini subgroup, computed on first use.
  const Subgroup& frattini() const;

 private:
  void mul_gen(Element& r, int g, int e) const;
  const Element& conj(int g, int j, int e) const;

  PcPresentation pres_;
  std::vector<Element> conj_;      // a_j^(a_g^e), index (g*n + j)*p + e
  std::vector<Element> inv_gens_;  // a_i^-1
  mutable std::once_flag frattini_once_;
  mutable std::shared_ptr<const Subgroup> frattini_;
};

using GroupPtr = std::shared_ptr<const PcGroup>;

}  // namespace pmax
