#include "pmax/subgroup.hpp"

#include <deque>

#include "pmax/error.hpp"

namespace pmax {

namespace {

int inverse_mod(int a, int p) {
  // p is prime and small; Fermat
  long long r = 1, b = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<int>(r);
}

}  // namespace

/// Incremental induced-pcgs construction.
class SubgroupBuilder {
 public:
  SubgroupBuilder(const PcGroup& g, bool normal) : g_(g), normal_(normal), slots_(static_cast<std::size_t>(g.n())) {}

  void seed(const Subgroup& h) {
    for (std::size_t i = 0; i < h.basis_.size(); ++i)
      slots_[static_cast<std::size_t>(h.pivots_[i])] = h.basis_[i];
  }

  Element sift(Element x) const {
    for (int i = 0; i < g_.n(); ++i) {
      const auto& b = slots_[static_cast<std::size_t>(i)];
      if (x[i] != 0 && b) g_.multiply_into(x, g_.power(*b, g_.p() - x[i]));
    }
    return x;
  }

  void add(std::span<const Element> gens) {
    std::deque<Element> queue(gens.begin(), gens.end());
    while (!queue.empty()) {
      Element x = sift(queue.front());
      queue.pop_front();
      const int lead = x.leading_index();
      if (lead == g_.n()) continue;
      x = g_.power(x, inverse_mod(x[lead], g_.p()));
      queue.push_back(g_.power(x, g_.p()));
      for (const auto& b : slots_)
        if (b) queue.push_back(g_.commutator(x, *b));
      if (normal_)
        for (int k = 0; k < g_.n(); ++k) queue.push_back(g_.commutator(x, g_.generator(k)));
      slots_[static_cast<std::size_t>(lead)] = std::move(x);
    }
  }

  // Echelon insertion without closure; valid when the seed already contains
  // every power and commutator of the inserted elements.
  void insert_plain(Element x) {
    x = sift(x);
    const int lead = x.leading_index();
    if (lead == g_.n()) return;
    slots_[static_cast<std::size_t>(lead)] = g_.power(x, inverse_mod(x[lead], g_.p()));
  }

  Subgroup finish() {
    const int p = g_.p();
    for (int i = 0; i < g_.n(); ++i) {
      if (!slots_[static_cast<std::size_t>(i)]) continue;
      const Element& bi = *slots_[static_cast<std::size_t>(i)];
      for (int j = 0; j < i; ++j) {
        auto& bj = slots_[static_cast<std::size_t>(j)];
        if (bj && (*bj)[i] != 0) g_.multiply_into(*bj, g_.power(bi, p - (*bj)[i]));
      }
    }
    Subgroup h(g_.n());
    for (int i = 0; i < g_.n(); ++i)
      if (slots_[static_cast<std::size_t>(i)]) {
        h.basis_.push_back(*slots_[static_cast<std::size_t>(i)]);
        h.pivots_.push_back(i);
      }
    return h;
  }

 private:
  const PcGroup& g_;
  bool normal_;
  std::vector<std::optional<Element>> slots_;
};

Subgroup::Subgroup(int n) : n_(n) {}

Subgroup Subgroup::whole(const PcGroup& g) { return tail_span(g, 0); }

Subgroup Subgroup::tail_span(const PcGroup& g, int from) {
  Subgroup h(g.n());
  for (int i = std::max(from, 0); i < g.n(); ++i) {
    h.basis_.push_back(g.generator(i));
    h.pivots_.push_back(i);
  }
  return h;
}

Subgroup Subgroup::generated(const PcGroup& g, std::span<const Element> gens, bool normal) {
  SubgroupBuilder b(g, normal);
  b.add(gens);
  return b.finish();
}

Element Subgroup::sift(const PcGroup& g, Element x) const {
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const int i = pivots_[k];
    if (x[i] != 0) g.multiply_into(x, g.power(basis_[k], g.p() - x[i]));
  }
  return x;
}

bool Subgroup::contains(const PcGroup& g, const Element& x) const { return sift(g, x).is_identity(); }

bool Subgroup::contains(const PcGroup& g, const Subgroup& other) const {
  if (other.order_exponent() > order_exponent()) return false;
  for (const auto& b : other.basis_)
    if (!contains(g, b)) return false;
  return true;
}

bool Subgroup::is_normal(const PcGroup& g) const {
  for (const auto& b : basis_)
    for (int k = 0; k < g.n(); ++k)
      if (!contains(g, g.conjugate(b, g.generator(k)))) return false;
  return true;
}

bool Subgroup::is_abelian(const PcGroup& g) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!g.commutator(basis_[i], basis_[j]).is_identity()) return false;
  return true;
}

Element Subgroup::element_at(const PcGroup& g, std::span<const int> coeffs) const {
  if (coeffs.size() != basis_.size()) throw Error(ErrorKind::InvalidInput, "coefficient count");
  Element r = g.identity();
  for (std::size_t k = 0; k < basis_.size(); ++k)
    if (coeffs[k] != 0) g.multiply_into(r, g.power(basis_[k], coeffs[k]));
  return r;
}

Element Subgroup::element_at(const PcGroup& g, long long index) const {
  std::vector<int> coeffs(basis_.size());
  for (std::size_t k = basis_.size(); k-- > 0;) {
    coeffs[k] = static_cast<int>(index % g.p());
    index /= g.p();
  }
  return element_at(g, coeffs);
}

std::vector<Element> Subgroup::elements(const PcGroup& g, long long limit) const {
  long long count = 1;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    count *= g.p();
    if (count > limit) throw Error(ErrorKind::InvalidInput, "subgroup too large to enumerate");
  }
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long long idx = 0; idx < count; ++idx) out.push_back(element_at(g, idx));
  return out;
}

Subgroup commutator_subgroup(const PcGroup& g, const Subgroup& h, const Subgroup& k) {
  std::vector<Element> gens;
  for (const auto& x : h.basis())
    for (const auto& y : k.basis()) gens.push_back(g.commutator(x, y));
  return Subgroup::normal_closure(g, gens);
}

Subgroup subgroup_by_predicate(const PcGroup& g, const std::function<bool(const Element&)>& pred,
                               long long scan_limit) {
  const int n = g.n();
  const int p = g.p();
  Subgroup current(n);
  for (int k = n - 1; k >= 0; --k) {
    std::vector<int> free;
    std::vector<bool> pivot(static_cast<std::size_t>(n), false);
    for (int piv : current.pivots()) pivot[static_cast<std::size_t>(piv)] = true;
    for (int j = k + 1; j < n; ++j)
      if (!pivot[static_cast<std::size_t>(j)]) free.push_back(j);
    long long count = 1;
    for (std::size_t m = 0; m < free.size(); ++m) {
      count *= p;
      if (count > scan_limit) throw Error(ErrorKind::InvalidInput, "coset scan exceeds limit");
    }
    for (long long idx = 0; idx < count; ++idx) {
      Element cand = g.generator(k);
      long long rest = idx;
      for (int j : free) {
        cand.set(j, static_cast<int>(rest % p));
        rest /= p;
      }
      if (pred(cand)) {
        std::vector<Element> gens = current.basis();
        gens.push_back(cand);
        current = Subgroup::generated(g, gens);
        break;
      }
    }
  }
  return current;
}

Subgroup centralizer_mod(const PcGroup& g, const Subgroup& h, const Subgroup& k) {
  if (!h.contains(g, k)) throw Error(ErrorKind::InvalidInput, "centralizer_mod: K is not contained in H");
  if (!k.is_normal(g)) throw Error(ErrorKind::InvalidInput, "centralizer_mod: K is not normal");
  return subgroup_by_predicate(g, [&](const Element& x) {
    for (const auto& b : h.basis())
      if (!k.contains(g, g.commutator(b, x))) return false;
    return true;
  });
}

const Subgroup& SeriesChain::term(int i) const {
  if (i < 1) throw Error(ErrorKind::InvalidInput, "series index must be >= 1");
  if (i <= length()) return terms_[static_cast<std::size_t>(i - 1)];
  return trivial_;
}

std::vector<int> SeriesChain::order_exponents() const {
  std::vector<int> out;
  for (const auto& t : terms_) out.push_back(t.order_exponent());
  return out;
}

SeriesChain lower_central_series(const PcGroup& g) {
  std::vector<Subgroup> terms{Subgroup::whole(g)};
  while (!terms.back().is_trivial()) {
    std::vector<Element> gens;
    for (const auto& b : terms.back().basis())
      for (int k = 0; k < g.n(); ++k) gens.push_back(g.commutator(b, g.generator(k)));
    Subgroup next = Subgroup::normal_closure(g, gens);
    if (next == terms.back()) break;  // not nilpotent; cannot happen for p-groups
    terms.push_back(std::move(next));
  }
  return SeriesChain(std::move(terms));
}

int nilpotency_class(const SeriesChain& lcs) {
  int c = 0;
  for (const auto& t : lcs.terms())
    if (!t.is_trivial()) ++c;
  return c;
}

PcPresentation quotient_by_term(const PcGroup& g, int k) {
  if (k < 0 || k > g.n()) throw Error(ErrorKind::InvalidInput, "quotient index out of range");
  if (!Subgroup::tail_span(g, k).is_normal(g))
    throw Error(ErrorKind::InvalidInput, "generators beyond the cut do not span a normal subgroup");
  return g.presentation().truncated(k);
}

const Subgroup& PcGroup::frattini() const {
  std::call_once(frattini_once_, [this] { frattini_ = std::make_shared<const Subgroup>(frattini_subgroup(*this)); });
  return *frattini_;
}

bool generates_modulo(const PcGroup& g, const Subgroup& base, std::span<const Element> extra) {
  SubgroupBuilder b(g, false);
  b.seed(base);
  for (const auto& x : extra) b.insert_plain(x);
  return b.finish().order_exponent() == g.n();
}

Subgroup frattini_subgroup(const PcGroup& g) {
  std::vector<Element> gens;
  for (int i = 0; i < g.n(); ++i) {
    gens.push_back(g.power(g.generator(i), g.p()));
    for (int j = 0; j < i; ++j) gens.push_back(g.commutator(g.generator(i), g.generator(j)));
  }
  return Subgroup::normal_closure(g, gens);
}

}  // namespace pmax
