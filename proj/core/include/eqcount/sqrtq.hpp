#pragma once

#include "eqcount/bigint.hpp"
#include "eqcount/gf.hpp"

namespace eqcount {

/// Accumulator for integer combinations of half powers of q. Terms are
/// coef * q^{half/2}. When s is even, sqrt(q) = p^{s/2} is an integer and
/// everything folds into one value; when s is odd a surviving sqrt(q)
/// coefficient means the formula lost integrality, which is a bug.
class SqrtScaled {
 public:
  SqrtScaled(long long p, int s) : p_(p), s_(s) {}

  void add_term(const BigInt& coef, long long half_exponent) {
    if (half_exponent < 0) throw std::invalid_argument("negative half exponent");
    if (s_ % 2 == 0) {
      BigInt rootq = 1;
      for (int i = 0; i < s_ / 2; ++i) rootq *= p_;
      BigInt v = coef;
      for (long long i = 0; i < half_exponent; ++i) v *= rootq;
      even_ += v;
      return;
    }
    BigInt q = 1;
    for (int i = 0; i < s_; ++i) q *= p_;
    BigInt v = coef;
    for (long long i = 0; i < half_exponent / 2; ++i) v *= q;
    if (half_exponent % 2 == 0)
      even_ += v;
    else
      odd_ += v;
  }

  BigInt finalize() const {
    if (odd_ != 0)
      throw IntegrityError("sqrt(q) coefficient did not cancel");
    return even_;
  }

 private:
  long long p_;
  int s_;
  BigInt even_ = 0;
  BigInt odd_ = 0;  // coefficient of sqrt(q), s odd only
};

inline BigInt bigint_pow(const BigInt& base, long long e) {
  BigInt r = 1, b = base;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

}  // namespace eqcount
