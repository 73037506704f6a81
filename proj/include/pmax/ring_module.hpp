#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace pmax {

/// Additive group of Z[theta]/(theta-1)^{n-1}, theta a primitive p-th root of unity.
///
/// Coordinates are taken over b_i = (theta-1)^{i-1}, i = 1..n-1 (stored
/// 0-based). A vector is in normal form when every coordinate lies in [0, p);
/// the relation p b_i = -sum_{k=2}^{p} C(p,k) b_{i+k-1} (higher terms dropped)
/// reduces anything else. Since p is (theta-1)^{p-1} times a unit, p^E kills
/// the module for E = ceil((n-1)/(p-1)), which bounds intermediate values.
class RingModule {
 public:
  using Vector = std::vector<int>;

  RingModule(int p, int n);

  int p() const { return p_; }
  int n() const { return n_; }
  int dimension() const { return n_ - 1; }
  /// p^E with p^E M = 0.
  std::int64_t exponent_modulus() const { return modulus_; }
  std::int64_t binomial(int k) const { return binom_.at(static_cast<std::size_t>(k)); }

  Vector zero() const { return Vector(static_cast<std::size_t>(dimension()), 0); }
  /// b_{i+1} (0-based i).
  Vector basis(int i) const;

  /// Normal form of sum raw[i] b_{i+1}.
  Vector reduce(std::span<const std::int64_t> raw) const;

  Vector add(const Vector& a, const Vector& b) const;
  Vector negate(const Vector& a) const;
  Vector scale(const Vector& a, std::int64_t k) const;
  /// Multiplication by theta = 1 + (theta-1): b_i -> b_i + b_{i+1}.
  Vector theta_multiply(const Vector& a) const;
  /// Multiplication by sum poly[m] (theta-1)^m.
  Vector multiply_by_polynomial(const Vector& a, std::span<const std::int64_t> poly_in_x) const;

  /// Converts sum c[k] theta^k to coefficients in powers of (theta-1).
  std::vector<std::int64_t> theta_to_x(std::span<const std::int64_t> poly_in_theta) const;

  /// Number of elements, p^{n-1}, or -1 if it overflows 64 bits.
  std::int64_t cardinality() const;

 private:
  int p_;
  int n_;
  std::int64_t modulus_;
  std::vector<std::int64_t> binom_;  // C(p, k), k = 0..p
};

}  // namespace pmax
