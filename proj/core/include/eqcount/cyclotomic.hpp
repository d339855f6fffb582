#pragma once

#include <optional>
#include <vector>

#include "eqcount/bigint.hpp"

namespace eqcount {

/// Exact element of Z[zeta_delta]. The working representative lives in the
/// group ring Z[x]/(x^delta - 1), so adding roots and multiplying by a root
/// are index rotations; reduction modulo the cyclotomic polynomial Phi_delta
/// happens only where canonical coordinates are needed (zero test, exact
/// division, integer extraction).
class CyclotomicInt {
 public:
  explicit CyclotomicInt(int order);

  int order() const { return order_; }

  /// Adds count * zeta^root_power (root_power taken mod order).
  void accumulate(long long root_power, const BigInt& count);

  CyclotomicInt& operator+=(const CyclotomicInt& other);

  /// Multiplication by zeta^e.
  CyclotomicInt times_root(long long e) const;

  /// The automorphism zeta -> zeta^{-1} (complex conjugation).
  CyclotomicInt conjugate() const;

  bool is_zero() const;

  bool divisible_by(const BigInt& c) const;

  /// Exact division by a rational integer; throws IntegrityError otherwise.
  CyclotomicInt div_exact(const BigInt& c) const;

  /// Canonical coordinates in the power basis 1, zeta, ..., zeta^{phi-1}.
  std::vector<BigInt> reduced() const;

  /// Present iff the value is a rational integer.
  std::optional<BigInt> as_integer() const;

  bool operator==(const CyclotomicInt& other) const;

 private:
  int order_;
  std::vector<BigInt> coeffs_;  // length order_, index i = coefficient of zeta^i
};

}  // namespace eqcount
