#pragma once

#include <string>
#include <vector>

#include "pmax/element.hpp"

namespace pmax {

/// Weighted power-commutator presentation of a group of order p^n.
///
/// Generators a_1..a_n are stored 0-based. The relations are
///   a_i^p = power_tail(i)              (support on indices > i)
///   [a_j, a_i] = commutator_tail(j, i)  for j > i (support on indices > j)
/// with [x, y] = x^-1 y^-1 x y. Plain data; see PcGroup for arithmetic.
class PcPresentation {
 public:
  PcPresentation() = default;
  /// Presentation of the elementary abelian group of order p^n.
  PcPresentation(int p, int n);

  int p() const { return p_; }
  int n() const { return n_; }

  const Element& power_tail(int i) const { return power_tails_.at(static_cast<std::size_t>(i)); }
  const Element& commutator_tail(int j, int i) const;

  void set_power_tail(int i, const Element& tail);
  void set_commutator_tail(int j, int i, const Element& tail);

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  std::string label(int i) const;

  /// Checks primality, caps, residue ranges and the weighted support rule.
  /// Throws Error(InvalidInput) on the first violation.
  void validate() const;

  /// Presentation on the first k generators with every tail truncated.
  PcPresentation truncated(int k) const;

  friend bool operator==(const PcPresentation&, const PcPresentation&) = default;

 private:
  std::size_t pair_index(int j, int i) const;

  int p_ = 2;
  int n_ = 0;
  std::vector<Element> power_tails_;
  std::vector<Element> commutator_tails_;  // packed, j > i
  std::vector<std::string> labels_;
};

bool is_prime(long long v);

}  // namespace pmax
