#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace eqcount {

/// Thrown when an exactness assertion inside a formula fails (half powers of
/// sqrt(q) that do not cancel, cyclotomic divisions that are not exact, ...).
/// Firing one of these always indicates an implementation bug, never bad input.
struct IntegrityError : std::logic_error {
  using std::logic_error::logic_error;
};

/// A fully materialized finite field F_{p^s} with exp/log tables over a fixed
/// primitive element. Elements are encoded as integers in [0, q): the base-p
/// digits of the encoding are the polynomial coefficients modulo the chosen
/// irreducible modulus, constant term in the least significant digit.
///
/// Canonical choices (when not supplied): the modulus is the monic irreducible
/// of degree s whose non-leading coefficient encoding is smallest, and the
/// generator is the element of smallest encoding with multiplicative order
/// q - 1. This keeps encodings reproducible across runs.
///
/// Immutable after build(); concurrent reads are safe.
class FieldTable {
 public:
  static constexpr long long kMaxQ = 1 << 17;

  static FieldTable build(long long p, int s,
                          const std::vector<int>* modulus = nullptr);

  long long p = 0;
  int s = 0;
  long long q = 0;
  std::vector<int> modulus;   // size s+1, constant term first, monic
  int generator = 0;          // element encoding of g
  std::vector<int> exp_table; // size q-1, exp_table[t] = g^t
  std::vector<int> log_table; // size q, log_table[0] = -1

  int add(int x, int y) const;
  int neg(int x) const;
  int sub(int x, int y) const { return add(x, neg(y)); }

  int mul(int x, int y) const {
    if (x == 0 || y == 0) return 0;
    return exp_table[(log_table[x] + log_table[y]) % (q - 1)];
  }

  /// Table-free polynomial multiplication mod (p, modulus). Slow path kept as
  /// an independent cross-check of the exp/log tables.
  int mul_poly(int x, int y) const;

  int pow_elem(int x, long long e) const;

  int dlog(int x) const {
    if (x == 0) throw std::domain_error("dlog of zero");
    return log_table[x];
  }

  /// g^t for any integer t (reduced mod q-1).
  int exp_of(long long t) const {
    long long r = t % (q - 1);
    if (r < 0) r += q - 1;
    return exp_table[r];
  }

  /// Quadratic character: +1 square, -1 nonsquare, 0 at zero. Odd p only.
  int eta(int x) const {
    if (p == 2) throw std::domain_error("eta undefined in characteristic 2");
    if (x == 0) return 0;
    return log_table[x] % 2 == 0 ? 1 : -1;
  }

  bool is_kth_power(int x, long long t) const {
    if (x == 0) throw std::domain_error("is_kth_power of zero");
    return log_table[x] % t == 0;
  }

  int element_from_int(long long c) const {
    if (c < 0 || c >= q) throw std::out_of_range("element encoding out of range");
    return static_cast<int>(c);
  }

  int neg_one() const { return q % 2 == 0 ? 1 : exp_table[(q - 1) / 2]; }
};

/// Process-wide cache of canonical fields, keyed by (p, s). Thread-safe.
const FieldTable& field_cache(long long p, int s);

bool is_prime(long long n);

}  // namespace eqcount
