#include "pmax/ring_module.hpp"

#include "pmax/element.hpp"
#include "pmax/error.hpp"
#include "pmax/presentation.hpp"

namespace pmax {

namespace {

std::int64_t mod(__int128 v, std::int64_t m) {
  __int128 r = v % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

}  // namespace

RingModule::RingModule(int p, int n) : p_(p), n_(n) {
  if (!is_prime(p) || p < 3 || p > 61) throw Error(ErrorKind::InvalidInput, "p must be a prime in 3..61");
  if (n < 2 || n > kMaxGens) throw Error(ErrorKind::InvalidInput, "n must lie in 2..64");
  binom_.assign(static_cast<std::size_t>(p + 1), 1);
  for (int k = 1; k <= p; ++k)
    binom_[static_cast<std::size_t>(k)] = static_cast<std::int64_t>(
        static_cast<__int128>(binom_[static_cast<std::size_t>(k - 1)]) * (p - k + 1) / k);
  const int e = std::max(1, (n - 1 + p - 2) / (p - 1));
  modulus_ = 1;
  for (int i = 0; i < e; ++i) modulus_ *= p;
}

RingModule::Vector RingModule::basis(int i) const {
  Vector v = zero();
  v.at(static_cast<std::size_t>(i)) = 1;
  return v;
}

RingModule::Vector RingModule::reduce(std::span<const std::int64_t> raw) const {
  const int d = dimension();
  if (static_cast<int>(raw.size()) != d) throw Error(ErrorKind::InvalidInput, "ring vector length");
  std::vector<std::int64_t> c(raw.begin(), raw.end());
  for (auto& x : c) x = mod(x, modulus_);
  Vector out(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    const std::int64_t q = c[static_cast<std::size_t>(i)] / p_;
    out[static_cast<std::size_t>(i)] = static_cast<int>(c[static_cast<std::size_t>(i)] % p_);
    if (q == 0) continue;
    for (int k = 2; k <= p_ && i + k - 1 < d; ++k) {
      auto& target = c[static_cast<std::size_t>(i + k - 1)];
      target = mod(static_cast<__int128>(target) - static_cast<__int128>(q) * binom_[static_cast<std::size_t>(k)],
                   modulus_);
    }
  }
  return out;
}

RingModule::Vector RingModule::add(const Vector& a, const Vector& b) const {
  std::vector<std::int64_t> raw(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) raw[i] = std::int64_t{a[i]} + b.at(i);
  return reduce(raw);
}

RingModule::Vector RingModule::negate(const Vector& a) const { return scale(a, -1); }

RingModule::Vector RingModule::scale(const Vector& a, std::int64_t k) const {
  std::vector<std::int64_t> raw(a.size());
  const std::int64_t km = mod(k, modulus_);
  for (std::size_t i = 0; i < a.size(); ++i) raw[i] = mod(static_cast<__int128>(a[i]) * km, modulus_);
  return reduce(raw);
}

RingModule::Vector RingModule::theta_multiply(const Vector& a) const {
  std::vector<std::int64_t> raw(a.begin(), a.end());
  for (std::size_t i = 1; i < a.size(); ++i) raw[i] += a[i - 1];
  return reduce(raw);
}

RingModule::Vector RingModule::multiply_by_polynomial(const Vector& a, std::span<const std::int64_t> poly) const {
  const int d = dimension();
  std::vector<std::int64_t> raw(static_cast<std::size_t>(d), 0);
  for (int i = 0; i < d; ++i) {
    if (a[static_cast<std::size_t>(i)] == 0) continue;
    for (int m = 0; m < static_cast<int>(poly.size()) && i + m < d; ++m) {
      auto& t = raw[static_cast<std::size_t>(i + m)];
      t = mod(static_cast<__int128>(t) +
                  static_cast<__int128>(a[static_cast<std::size_t>(i)]) * mod(poly[static_cast<std::size_t>(m)], modulus_),
              modulus_);
    }
  }
  return reduce(raw);
}

std::vector<std::int64_t> RingModule::theta_to_x(std::span<const std::int64_t> poly) const {
  // theta^k = sum_m C(k, m) x^m
  std::vector<std::int64_t> out(static_cast<std::size_t>(std::max<std::size_t>(poly.size(), 1)), 0);
  std::vector<std::int64_t> row{1};  // binomial row C(k, .) mod modulus
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if (k > 0) {
      std::vector<std::int64_t> next(row.size() + 1, 0);
      for (std::size_t m = 0; m < row.size(); ++m) {
        next[m] = mod(static_cast<__int128>(next[m]) + row[m], modulus_);
        next[m + 1] = mod(static_cast<__int128>(next[m + 1]) + row[m], modulus_);
      }
      row = std::move(next);
    }
    for (std::size_t m = 0; m < row.size() && m < out.size(); ++m)
      out[m] = mod(static_cast<__int128>(out[m]) + static_cast<__int128>(poly[k]) * row[m], modulus_);
  }
  return out;
}

std::int64_t RingModule::cardinality() const {
  std::int64_t c = 1;
  for (int i = 0; i < dimension(); ++i) {
    if (c > INT64_MAX / p_) return -1;
    c *= p_;
  }
  return c;
}

}  // namespace pmax
