#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace pmax {

/// Hard cap on the number of pc generators.
inline constexpr int kMaxGens = 64;

/// Group element as a normal-form exponent vector a_1^{e_1} ... a_n^{e_n}.
/// Entries are residues in [0, p). Index 0 is generator a_1.
class Element {
 public:
  Element() = default;
  explicit Element(int n) : size_(static_cast<std::uint8_t>(n)) {}
  Element(int n, std::span<const int> exps);

  static Element identity(int n) { return Element(n); }
  static Element generator(int n, int index, int exponent = 1);

  int size() const { return size_; }
  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  void set(int i, int value) { exps_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(value); }

  bool is_identity() const;
  /// First index with a nonzero exponent, or size() for the identity.
  int leading_index() const;
  /// Largest index with a nonzero exponent, or -1 for the identity.
  int last_index() const;

  /// Zero every coordinate at index >= from.
  void truncate_from(int from);

  std::vector<int> to_vector() const;
  std::string to_string() const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.size_ == b.size_ &&
           std::equal(a.exps_.begin(), a.exps_.begin() + a.size_, b.exps_.begin());
  }
  friend bool operator<(const Element& a, const Element& b) {
    return std::lexicographical_compare(a.exps_.begin(), a.exps_.begin() + a.size_,
                                        b.exps_.begin(), b.exps_.begin() + b.size_);
  }

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxGens> exps_{};
  std::uint8_t size_ = 0;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const { return e.hash(); }
};

/// A single letter of a word: generator index (0-based) and signed exponent.
struct Letter {
  int generator = 0;
  long long exponent = 1;
};

using Word = std::vector<Letter>;

}  // namespace pmax
