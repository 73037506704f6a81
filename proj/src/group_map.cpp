#include "pmax/group_map.hpp"

#include "pmax/error.hpp"
#include "pmax/subgroup.hpp"

namespace pmax {

const char* to_string(MapKind kind) {
  switch (kind) {
    case MapKind::Unvalidated: return "unvalidated";
    case MapKind::Endomorphism: return "endomorphism";
    case MapKind::Automorphism: return "automorphism";
    case MapKind::Inner: return "inner";
  }
  return "?";
}

GroupMap::GroupMap(GroupPtr group, std::vector<Element> images, MapKind kind)
    : group_(std::move(group)), images_(std::move(images)), kind_(kind) {
  if (!group_ || static_cast<int>(images_.size()) != group_->n())
    throw Error(ErrorKind::InvalidInput, "need exactly one image per generator");
  for (const auto& im : images_)
    if (im.size() != group_->n()) throw Error(ErrorKind::InvalidInput, "image has wrong length");
}

GroupMap GroupMap::identity(GroupPtr group) {
  std::vector<Element> images;
  for (int i = 0; i < group->n(); ++i) images.push_back(group->generator(i));
  GroupMap m(group, std::move(images), MapKind::Inner);
  m.inner_ = group->identity();
  return m;
}

Element GroupMap::apply(const Element& x) const {
  const PcGroup& g = *group_;
  Element r = g.identity();
  for (int i = 0; i < g.n(); ++i)
    if (x[i] != 0) g.multiply_into(r, x[i] == 1 ? images_[static_cast<std::size_t>(i)]
                                                : g.power(images_[static_cast<std::size_t>(i)], x[i]));
  return r;
}

GroupMap GroupMap::then(const GroupMap& next) const {
  std::vector<Element> images;
  images.reserve(images_.size());
  for (const auto& im : images_) images.push_back(next.apply(im));
  MapKind kind = MapKind::Unvalidated;
  if (is_endomorphism() && next.is_endomorphism()) {
    kind = MapKind::Endomorphism;
    if (is_automorphism() && next.is_automorphism()) kind = MapKind::Automorphism;
    if (kind_ == MapKind::Inner && next.kind_ == MapKind::Inner) kind = MapKind::Inner;
  }
  GroupMap out(group_, std::move(images), kind);
  if (kind == MapKind::Inner) out.inner_ = group_->multiply(*inner_, *next.inner_);
  return out;
}

bool GroupMap::is_identity() const {
  for (int i = 0; i < group_->n(); ++i)
    if (!(images_[static_cast<std::size_t>(i)] == group_->generator(i))) return false;
  return true;
}

std::optional<RelationViolation> find_violated_relation(const PcGroup& g, std::span<const Element> images) {
  return find_violated_relation(g, g, images);
}

std::optional<RelationViolation> find_violated_relation(const PcGroup& source, const PcGroup& g,
                                                        std::span<const Element> images) {
  const int n = source.n();
  const int p = source.p();
  if (p != g.p()) throw Error(ErrorKind::InvalidInput, "groups for different primes");
  if (static_cast<int>(images.size()) != n) throw Error(ErrorKind::InvalidInput, "need one image per generator");
  for (const auto& im : images)
    if (im.size() != g.n()) throw Error(ErrorKind::InvalidInput, "image has wrong length");
  // powers[i][e] = images[i]^e for 0 <= e < p
  std::vector<std::vector<Element>> powers(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto& row = powers[static_cast<std::size_t>(i)];
    row.reserve(static_cast<std::size_t>(p));
    row.push_back(g.identity());
    for (int e = 1; e < p; ++e) row.push_back(g.multiply(row.back(), images[static_cast<std::size_t>(i)]));
  }
  auto image_of = [&](const Element& x) {
    Element r = g.identity();
    for (int i = 0; i < n; ++i)
      if (x[i] != 0) g.multiply_into(r, powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(x[i])]);
    return r;
  };
  const auto& pres = source.presentation();
  for (int i = 0; i < n; ++i) {
    const Element lhs = g.multiply(powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(p - 1)],
                                   images[static_cast<std::size_t>(i)]);
    const Element rhs = image_of(pres.power_tail(i));
    if (!(lhs == rhs)) return RelationViolation{pres.label(i) + "^p = " + pres.power_tail(i).to_string(), lhs, rhs};
  }
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      const Element lhs = g.commutator(images[static_cast<std::size_t>(j)], images[static_cast<std::size_t>(i)]);
      const Element rhs = image_of(pres.commutator_tail(j, i));
      if (!(lhs == rhs))
        return RelationViolation{"[" + pres.label(j) + "," + pres.label(i) + "] = " +
                                     pres.commutator_tail(j, i).to_string(),
                                 lhs, rhs};
    }
  return std::nullopt;
}

std::optional<GroupMap> try_homomorphism(GroupPtr group, std::vector<Element> images) {
  if (find_violated_relation(*group, images)) return std::nullopt;
  const bool onto = generates_modulo(*group, group->frattini(), images);
  return GroupMap(group, std::move(images), onto ? MapKind::Automorphism : MapKind::Endomorphism);
}

GroupMap check_homomorphism(GroupPtr group, std::vector<Element> images) {
  if (auto v = find_violated_relation(*group, images))
    throw Error(ErrorKind::HomCheckFailed, "relation " + v->relation + " maps to " + v->lhs.to_string() +
                                               " vs " + v->rhs.to_string());
  const bool onto = generates_modulo(*group, group->frattini(), images);
  return GroupMap(group, std::move(images), onto ? MapKind::Automorphism : MapKind::Endomorphism);
}

GroupMap inner_automorphism(GroupPtr group, const Element& g) {
  std::vector<Element> images;
  for (int i = 0; i < group->n(); ++i) images.push_back(group->conjugate(group->generator(i), g));
  GroupMap m(group, std::move(images), MapKind::Inner);
  m.inner_ = g;
  return m;
}

GroupMap map_power(const GroupMap& a, long long k) {
  if (k < 0) throw Error(ErrorKind::InvalidInput, "negative map power");
  GroupMap result = GroupMap::identity(a.group());
  GroupMap base = a;
  while (k > 0) {
    if (k & 1) result = result.then(base);
    k >>= 1;
    if (k > 0) base = base.then(base);
  }
  return result;
}

long long map_order(const GroupMap& a, long long limit) {
  GroupMap x = a;
  for (long long k = 1; k <= limit; ++k) {
    if (x.is_identity()) return k;
    x = x.then(a);
  }
  throw Error(ErrorKind::InvalidInput, "map order exceeds limit");
}

GroupMap map_inverse(const GroupMap& a) {
  if (!a.is_automorphism()) throw Error(ErrorKind::InvalidInput, "inverse requires an automorphism");
  if (a.kind() == MapKind::Inner && a.inner_element())
    return inner_automorphism(a.group(), a.group()->invert(*a.inner_element()));
  GroupMap inv = map_power(a, map_order(a) - 1);
  return GroupMap(a.group(), inv.images(), MapKind::Automorphism);
}

}  // namespace pmax
