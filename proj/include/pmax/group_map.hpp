#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pmax/pcgroup.hpp"

namespace pmax {

enum class MapKind { Unvalidated, Endomorphism, Automorphism, Inner };

const char* to_string(MapKind kind);

/// A map G -> G given by the images of the pc generators.
///
/// Composition is written left to right: (a.then(b))(x) = b(a(x)).
class GroupMap {
 public:
  GroupMap(GroupPtr group, std::vector<Element> images, MapKind kind = MapKind::Unvalidated);

  static GroupMap identity(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  const std::vector<Element>& images() const { return images_; }
  const Element& image(int i) const { return images_.at(static_cast<std::size_t>(i)); }
  MapKind kind() const { return kind_; }
  bool is_endomorphism() const { return kind_ != MapKind::Unvalidated; }
  bool is_automorphism() const { return kind_ == MapKind::Automorphism || kind_ == MapKind::Inner; }
  /// The conjugating element for kind Inner.
  const std::optional<Element>& inner_element() const { return inner_; }

  /// Image of a normal-form element: product of image(i)^{x_i}.
  Element apply(const Element& x) const;

  /// x -> next(this(x)). Kind is the weaker of the two (inner composes to inner).
  GroupMap then(const GroupMap& next) const;

  bool is_identity() const;

  friend bool operator==(const GroupMap& a, const GroupMap& b) { return a.images_ == b.images_; }

 private:
  friend GroupMap inner_automorphism(GroupPtr, const Element&);
  GroupPtr group_;
  std::vector<Element> images_;
  MapKind kind_;
  std::optional<Element> inner_;
};

struct RelationViolation {
  std::string relation;  // e.g. "[s2,s] = s3"
  Element lhs, rhs;
};

/// First defining relation not respected by the substitution, if any.
std::optional<RelationViolation> find_violated_relation(const PcGroup& g, std::span<const Element> images);
/// Relations of `source` evaluated on images in `target`.
std::optional<RelationViolation> find_violated_relation(const PcGroup& source, const PcGroup& target,
                                                        std::span<const Element> images);

/// Validates generator images against every defining relation. Returns a map
/// of kind Endomorphism, or Automorphism when the images also generate G
/// (tested modulo the Frattini subgroup). Throws Error(HomCheckFailed) naming
/// the violated relation.
GroupMap check_homomorphism(GroupPtr group, std::vector<Element> images);

/// Non-throwing variant.
std::optional<GroupMap> try_homomorphism(GroupPtr group, std::vector<Element> images);

/// x -> x^g.
GroupMap inner_automorphism(GroupPtr group, const Element& g);

/// Repeated self-composition; k >= 0.
GroupMap map_power(const GroupMap& a, long long k);

/// Order of an automorphism (a power of p for the maps built here).
/// Throws InvalidInput if no identity power is reached within `limit` steps.
long long map_order(const GroupMap& a, long long limit = 1'000'000);

/// Inverse of an automorphism as a^(order - 1).
GroupMap map_inverse(const GroupMap& a);

}  // namespace pmax
