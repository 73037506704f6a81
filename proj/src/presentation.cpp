#include "pmax/presentation.hpp"

#include "pmax/error.hpp"

namespace pmax {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid input";
    case ErrorKind::Inconsistent: return "inconsistent presentation";
    case ErrorKind::NotMaximalClass: return "not of maximal class";
    case ErrorKind::HomCheckFailed: return "homomorphism check failed";
    case ErrorKind::ValidationFailed: return "validation failed";
    case ErrorKind::TheoremViolation: return "theorem violation";
    case ErrorKind::PreconditionRefused: return "precondition refused";
  }
  return "error";
}

bool is_prime(long long v) {
  if (v < 2) return false;
  for (long long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

PcPresentation::PcPresentation(int p, int n) : p_(p), n_(n) {
  if (n < 0 || n > kMaxGens) throw Error(ErrorKind::InvalidInput, "generator count out of range");
  power_tails_.assign(static_cast<std::size_t>(n), Element(n));
  commutator_tails_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2,
                           Element(n));
}

std::size_t PcPresentation::pair_index(int j, int i) const {
  if (!(0 <= i && i < j && j < n_))
    throw Error(ErrorKind::InvalidInput, "commutator pair out of range");
  return static_cast<std::size_t>(j) * static_cast<std::size_t>(j - 1) / 2 + static_cast<std::size_t>(i);
}

const Element& PcPresentation::commutator_tail(int j, int i) const {
  return commutator_tails_[pair_index(j, i)];
}

void PcPresentation::set_power_tail(int i, const Element& tail) {
  if (i < 0 || i >= n_ || tail.size() != n_)
    throw Error(ErrorKind::InvalidInput, "power tail out of range");
  power_tails_[static_cast<std::size_t>(i)] = tail;
}

void PcPresentation::set_commutator_tail(int j, int i, const Element& tail) {
  if (tail.size() != n_) throw Error(ErrorKind::InvalidInput, "commutator tail has wrong length");
  commutator_tails_[pair_index(j, i)] = tail;
}

void PcPresentation::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_)
    throw Error(ErrorKind::InvalidInput, "label count differs from generator count");
  labels_ = std::move(labels);
}

std::string PcPresentation::label(int i) const {
  if (!labels_.empty()) return labels_.at(static_cast<std::size_t>(i));
  return "a" + std::to_string(i + 1);
}

void PcPresentation::validate() const {
  if (!is_prime(p_) || p_ < 3 || p_ > 61)
    throw Error(ErrorKind::InvalidInput, "p must be a prime with 3 <= p <= 61");
  if (n_ < 1 || n_ > kMaxGens) throw Error(ErrorKind::InvalidInput, "n must lie in 1..64");
  auto check = [&](const Element& t, int first_allowed, const std::string& what) {
    if (t.size() != n_) throw Error(ErrorKind::InvalidInput, what + ": wrong length");
    for (int k = 0; k < n_; ++k) {
      if (t[k] >= p_) throw Error(ErrorKind::InvalidInput, what + ": entry not reduced mod p");
      if (t[k] != 0 && k < first_allowed)
        throw Error(ErrorKind::InvalidInput, what + ": support violates weight order");
    }
  };
  for (int i = 0; i < n_; ++i) check(power_tail(i), i + 1, "power tail of " + label(i));
  for (int j = 1; j < n_; ++j)
    for (int i = 0; i < j; ++i)
      check(commutator_tail(j, i), j + 1, "commutator tail [" + label(j) + "," + label(i) + "]");
}

PcPresentation PcPresentation::truncated(int k) const {
  if (k < 0 || k > n_) throw Error(ErrorKind::InvalidInput, "truncation index out of range");
  PcPresentation q(p_, k);
  auto cut = [&](const Element& t) {
    Element r(k);
    for (int m = 0; m < k; ++m) r.set(m, t[m]);
    return r;
  };
  for (int i = 0; i < k; ++i) q.set_power_tail(i, cut(power_tail(i)));
  for (int j = 1; j < k; ++j)
    for (int i = 0; i < j; ++i) q.set_commutator_tail(j, i, cut(commutator_tail(j, i)));
  if (!labels_.empty()) q.labels_.assign(labels_.begin(), labels_.begin() + k);
  return q;
}

}  // namespace pmax
