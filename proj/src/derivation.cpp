#include "pmax/derivation.hpp"

#include "pmax/error.hpp"

namespace pmax {

DerivationTarget::DerivationTarget(GroupPtr group, Subgroup a) : group_(std::move(group)), a_(std::move(a)) {
  if (!a_.is_abelian(*group_)) throw Error(ErrorKind::InvalidInput, "derivation target is not abelian");
  if (!a_.is_normal(*group_)) throw Error(ErrorKind::InvalidInput, "derivation target is not normal");
}

TargetPtr make_target(GroupPtr group, Subgroup a) {
  return std::make_shared<const DerivationTarget>(std::move(group), std::move(a));
}

Derivation Derivation::from_generator_values(TargetPtr target, std::vector<Element> values, Context ctx) {
  const PcGroup& g = *target->group();
  if (static_cast<int>(values.size()) != g.n()) throw Error(ErrorKind::InvalidInput, "one value per generator");
  std::vector<Element> images;
  images.reserve(values.size());
  for (int k = 0; k < g.n(); ++k) {
    if (!target->contains(values[static_cast<std::size_t>(k)]))
      throw Error(ErrorKind::InvalidInput, "derivation value outside the target subgroup");
    images.push_back(g.multiply(g.generator(k), values[static_cast<std::size_t>(k)]));
  }
  if (auto v = find_violated_relation(g, images)) {
    const auto kind = ctx == Context::TheoremDriver ? ErrorKind::TheoremViolation : ErrorKind::ValidationFailed;
    throw Error(kind, "1 + delta breaks relation " + v->relation);
  }
  const bool onto = generates_modulo(g, g.frattini(), images);
  GroupMap alpha(target->group(), std::move(images), onto ? MapKind::Automorphism : MapKind::Endomorphism);
  return Derivation(std::move(target), std::move(values), std::move(alpha));
}

Derivation Derivation::from_endomorphism(TargetPtr target, const GroupMap& alpha) {
  const PcGroup& g = *target->group();
  std::vector<Element> values;
  for (int k = 0; k < g.n(); ++k) values.push_back(g.multiply(g.invert(g.generator(k)), alpha.image(k)));
  return from_generator_values(std::move(target), std::move(values));
}

Derivation Derivation::zero(TargetPtr target) {
  const GroupPtr& g = target->group();
  std::vector<Element> values(static_cast<std::size_t>(g->n()), g->identity());
  return Derivation(std::move(target), std::move(values), GroupMap::identity(g));
}

Element Derivation::eval(const Element& x) const {
  const PcGroup& g = group();
  return g.multiply(g.invert(x), alpha_.apply(x));
}

bool Derivation::is_zero() const {
  for (const auto& v : values_)
    if (!v.is_identity()) return false;
  return true;
}

bool is_standard_chain(const PcGroup& g) {
  for (int i = 1; i + 1 < g.n(); ++i)
    if (!(g.commutator(g.generator(i), g.generator(0)) == g.generator(i + 1))) return false;
  return true;
}

std::vector<Element> extend_standard_images(const PcGroup& g, const Element& s_image, const Element& s1_image) {
  std::vector<Element> images{s_image};
  if (g.n() > 1) images.push_back(s1_image);
  for (int i = 2; i < g.n(); ++i) images.push_back(g.commutator(images.back(), s_image));
  return images;
}

Derivation make_derivation(TargetPtr target, const Element& u, const Element& v, Context ctx) {
  const PcGroup& g = *target->group();
  if (g.n() < 2) throw Error(ErrorKind::InvalidInput, "need at least two generators");
  if (!is_standard_chain(g))
    throw Error(ErrorKind::InvalidInput, "generators do not form a standard chain s, s_1, s_2, ...");
  if (!target->contains(u) || !target->contains(v))
    throw Error(ErrorKind::InvalidInput, "u and v must lie in the target subgroup");
  auto images = extend_standard_images(g, g.multiply(g.generator(0), u), g.multiply(g.generator(1), v));
  std::vector<Element> values;
  for (int k = 0; k < g.n(); ++k) values.push_back(g.multiply(g.invert(g.generator(k)), images[static_cast<std::size_t>(k)]));
  // Values on s_2, s_3, ... may leave A when alpha is not an endomorphism;
  // that is a validation failure, not bad input.
  for (const auto& val : values)
    if (!target->contains(val)) {
      const auto kind = ctx == Context::TheoremDriver ? ErrorKind::TheoremViolation : ErrorKind::ValidationFailed;
      throw Error(kind, "extended map does not act trivially modulo the target");
    }
  return Derivation::from_generator_values(std::move(target), std::move(values), ctx);
}

namespace {

void require_same_target(const Derivation& a, const Derivation& b) {
  if (a.target() != b.target() &&
      !(a.target()->group() == b.target()->group() && a.target()->subgroup() == b.target()->subgroup()))
    throw Error(ErrorKind::InvalidInput, "derivations have different targets");
}

Derivation rebuild(const Derivation& like, std::vector<Element> values) {
  // closed operations: a failure here is a bug, never a legitimate outcome
  try {
    return Derivation::from_generator_values(like.target(), std::move(values));
  } catch (const Error& e) {
    throw Error(ErrorKind::ValidationFailed, std::string("closure of Der(G,A) broken: ") + e.what());
  }
}

}  // namespace

Derivation add(const Derivation& a, const Derivation& b) {
  require_same_target(a, b);
  const PcGroup& g = a.group();
  std::vector<Element> values;
  for (std::size_t k = 0; k < a.values().size(); ++k) values.push_back(g.multiply(a.values()[k], b.values()[k]));
  return rebuild(a, std::move(values));
}

Derivation negate(const Derivation& a) {
  const PcGroup& g = a.group();
  std::vector<Element> values;
  for (const auto& v : a.values()) values.push_back(g.invert(v));
  return rebuild(a, std::move(values));
}

Element compose_eval(const Derivation& a, const Derivation& b, const Element& x) { return b.eval(a.eval(x)); }

Derivation bullet(const Derivation& a, const Derivation& b) {
  require_same_target(a, b);
  const PcGroup& g = a.group();
  std::vector<Element> values;
  for (std::size_t k = 0; k < a.values().size(); ++k) {
    Element v = g.multiply(a.values()[k], b.values()[k]);
    g.multiply_into(v, b.eval(a.values()[k]));
    values.push_back(v);
  }
  return rebuild(a, std::move(values));
}

bool vanishes_on_target(const Derivation& d) {
  for (const auto& x : d.target()->subgroup().basis())
    if (!d.eval(x).is_identity()) return false;
  return true;
}

Subgroup kernel_of(const Derivation& d) {
  const PcGroup& g = d.group();
  return subgroup_by_predicate(g, [&](const Element& x) { return d.one_plus().apply(x) == x; });
}

Report check_lemma_down(const Derivation& d, const SeriesChain& lcs, int r) {
  Report rep("lemma_down");
  rep.set("r", r);
  const PcGroup& g = d.group();
  for (int i = 1; i <= lcs.length(); ++i) {
    const Subgroup& target = lcs.term(i + r - 1);
    std::string witness;
    for (const auto& x : lcs.term(i).basis()) {
      if (!target.contains(g, d.eval(x))) {
        witness = "basis element " + x.to_string() + " maps outside gamma_" + std::to_string(i + r - 1);
        break;
      }
    }
    rep.check("gamma_" + std::to_string(i) + " delta <= gamma_" + std::to_string(i + r - 1), witness.empty(),
              witness);
  }
  return rep;
}

}  // namespace pmax
