#include "pmax/element.hpp"

#include <sstream>
#include <stdexcept>

namespace pmax {

Element::Element(int n, std::span<const int> exps) : size_(static_cast<std::uint8_t>(n)) {
  if (n < 0 || n > kMaxGens || static_cast<int>(exps.size()) != n)
    throw std::invalid_argument("element length mismatch");
  for (int i = 0; i < n; ++i) set(i, exps[static_cast<std::size_t>(i)]);
}

Element Element::generator(int n, int index, int exponent) {
  Element e(n);
  e.set(index, exponent);
  return e;
}

bool Element::is_identity() const { return leading_index() == size_; }

int Element::leading_index() const {
  for (int i = 0; i < size_; ++i)
    if (exps_[static_cast<std::size_t>(i)] != 0) return i;
  return size_;
}

int Element::last_index() const {
  for (int i = size_ - 1; i >= 0; --i)
    if (exps_[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

void Element::truncate_from(int from) {
  for (int i = std::max(from, 0); i < size_; ++i) exps_[static_cast<std::size_t>(i)] = 0;
}

std::vector<int> Element::to_vector() const {
  return std::vector<int>(exps_.begin(), exps_.begin() + size_);
}

std::string Element::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < size_; ++i) os << (i ? " " : "") << int(exps_[static_cast<std::size_t>(i)]);
  os << ']';
  return os.str();
}

std::size_t Element::hash() const {
  // FNV-1a over the used prefix
  std::size_t h = 1469598103934665603ull;
  for (int i = 0; i < size_; ++i) {
    h ^= exps_[static_cast<std::size_t>(i)];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace pmax
