#include "pmax/pcgroup.hpp"

#include "pmax/error.hpp"

namespace pmax {

PcGroup::PcGroup(PcPresentation presentation) : pres_(std::move(presentation)) {
  pres_.validate();
  const int n = pres_.n();
  const int p = pres_.p();
  conj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * static_cast<std::size_t>(p),
               Element(n));
  // Rows for g only use rows for larger generators, so fill bottom-up.
  for (int g = n - 1; g >= 0; --g) {
    for (int j = g + 1; j < n; ++j) {
      Element c = pres_.commutator_tail(j, g);
      c.set(j, 1);
      conj_[(static_cast<std::size_t>(g) * n + j) * p + 1] = c;
    }
    for (int e = 2; e < p; ++e) {
      for (int j = g + 1; j < n; ++j) {
        const Element& prev = conj(g, j, e - 1);
        Element r(n);
        for (int k = g + 1; k < n; ++k)
          for (int m = 0; m < prev[k]; ++m) multiply_into(r, conj(g, k, 1));
        conj_[(static_cast<std::size_t>(g) * n + j) * p + e] = r;
      }
    }
  }
  inv_gens_.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) inv_gens_.push_back(invert(generator(i)));
}

std::shared_ptr<const PcGroup> PcGroup::make_checked(PcPresentation presentation) {
  auto g = std::make_shared<const PcGroup>(std::move(presentation));
  auto report = g->consistency_check();
  if (!report.passed) throw Error(ErrorKind::Inconsistent, "overlap " + report.failing_overlap);
  return g;
}

const Element& PcGroup::conj(int g, int j, int e) const {
  return conj_[(static_cast<std::size_t>(g) * n() + j) * p() + e];
}

Element PcGroup::generator(int i, int exponent) const {
  if (i < 0 || i >= n()) throw Error(ErrorKind::InvalidInput, "generator index out of range");
  return Element::generator(n(), i, exponent);
}

Element PcGroup::element(std::span<const int> exps) const {
  if (static_cast<int>(exps.size()) != n()) throw Error(ErrorKind::InvalidInput, "exponent vector length");
  for (int v : exps)
    if (v < 0 || v >= p()) throw Error(ErrorKind::InvalidInput, "exponent not reduced mod p");
  return Element(n(), exps);
}

void PcGroup::mul_gen(Element& r, int g, int e) const {
  const int p = pres_.p();
  const int last = r.last_index();
  if (last <= g) {
    const int v = r[g] + e;
    if (v < p) {
      r.set(g, v);
    } else {
      r.set(g, v - p);
      multiply_into(r, pres_.power_tail(g));
    }
    return;
  }
  // r = u * w with w supported above g; r * a_g^e = u * a_g^e * w^(a_g^e)
  const Element w = r;
  r.truncate_from(g + 1);
  const int v = r[g] + e;
  if (v < p) {
    r.set(g, v);
  } else {
    r.set(g, v - p);
    multiply_into(r, pres_.power_tail(g));
  }
  for (int j = g + 1; j <= last; ++j) {
    if (w[j] == 0) continue;
    const Element& c = conj(g, j, e);
    for (int m = 0; m < w[j]; ++m) multiply_into(r, c);
  }
}

void PcGroup::multiply_into(Element& r, const Element& x) const {
  for (int i = 0; i < x.size(); ++i)
    if (x[i] != 0) mul_gen(r, i, x[i]);
}

Element PcGroup::multiply(const Element& a, const Element& b) const {
  Element r = a;
  multiply_into(r, b);
  return r;
}

Element PcGroup::collect(const Word& w) const {
  Element r = identity();
  for (const auto& [g, e] : w) {
    if (g < 0 || g >= n()) throw Error(ErrorKind::InvalidInput, "word letter index out of range");
    if (e == 0) continue;
    if (e > 0 && e < 4LL * p()) {
      for (long long left = e; left > 0;) {
        const int chunk = static_cast<int>(std::min<long long>(left, p() - 1));
        mul_gen(r, g, chunk);
        left -= chunk;
      }
    } else if (e < 0 && -e < 4LL * p()) {
      for (long long m = 0; m < -e; ++m) multiply_into(r, inv_gens_[static_cast<std::size_t>(g)]);
    } else {
      multiply_into(r, power(generator(g), e));
    }
  }
  return r;
}

Element PcGroup::invert(const Element& a) const {
  Element y = a;
  Element result = identity();
  for (int i = 0; i < n(); ++i) {
    if (y[i] == 0) continue;
    const int k = p() - y[i];
    mul_gen(y, i, k);
    mul_gen(result, i, k);
  }
  return result;
}

Element PcGroup::power(const Element& a, long long k) const {
  Element base = k < 0 ? invert(a) : a;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1 : static_cast<unsigned long long>(k);
  Element result = identity();
  while (e != 0) {
    if (e & 1u) multiply_into(result, base);
    e >>= 1;
    if (e != 0) base = multiply(base, base);
  }
  return result;
}

Element PcGroup::commutator(const Element& a, const Element& b) const {
  Element r = invert(a);
  multiply_into(r, invert(b));
  multiply_into(r, a);
  multiply_into(r, b);
  return r;
}

Element PcGroup::conjugate(const Element& a, const Element& b) const {
  Element r = invert(b);
  multiply_into(r, a);
  multiply_into(r, b);
  return r;
}

long long PcGroup::element_order(const Element& a) const {
  long long order = 1;
  Element x = a;
  while (!x.is_identity()) {
    x = power(x, p());
    order *= p();
  }
  return order;
}

ConsistencyReport PcGroup::consistency_check() const {
  ConsistencyReport report;
  const int n = this->n();
  const int p = this->p();
  auto gen = [&](int i, int e = 1) { return Element::generator(n, i, e); };
  auto name = [&](int i) { return pres_.label(i); };
  auto compare = [&](const Element& lhs, const Element& rhs, const std::string& what) {
    ++report.overlaps_checked;
    if (lhs == rhs) return true;
    report.passed = false;
    report.failing_overlap = what;
    report.lhs = lhs;
    report.rhs = rhs;
    return false;
  };

  for (int k = n - 1; k >= 0; --k)
    for (int j = k - 1; j >= 0; --j)
      for (int i = j - 1; i >= 0; --i) {
        const Element lhs = multiply(multiply(gen(k), gen(j)), gen(i));
        const Element rhs = multiply(gen(k), multiply(gen(j), gen(i)));
        if (!compare(lhs, rhs, "(" + name(k) + " " + name(j) + ") " + name(i) + " = " + name(k) + " (" +
                                   name(j) + " " + name(i) + ")"))
          return report;
      }
  for (int j = n - 1; j >= 0; --j)
    for (int i = j - 1; i >= 0; --i) {
      const Element lhs = multiply(pres_.power_tail(j), gen(i));
      const Element rhs = multiply(gen(j, p - 1), multiply(gen(j), gen(i)));
      if (!compare(lhs, rhs, "(" + name(j) + "^p) " + name(i) + " = " + name(j) + "^(p-1) (" + name(j) +
                                 " " + name(i) + ")"))
        return report;
    }
  for (int j = n - 1; j >= 0; --j)
    for (int i = j - 1; i >= 0; --i) {
      const Element lhs = multiply(gen(j), pres_.power_tail(i));
      const Element rhs = multiply(multiply(gen(j), gen(i, p - 1)), gen(i));
      if (!compare(lhs, rhs, name(j) + " (" + name(i) + "^p) = (" + name(j) + " " + name(i) + "^(p-1)) " +
                                 name(i)))
        return report;
    }
  for (int i = 0; i < n; ++i) {
    const Element lhs = multiply(pres_.power_tail(i), gen(i));
    const Element rhs = multiply(gen(i), pres_.power_tail(i));
    if (!compare(lhs, rhs, "(" + name(i) + "^p) " + name(i) + " = " + name(i) + " (" + name(i) + "^p)"))
      return report;
  }
  return report;
}

}  // namespace pmax
