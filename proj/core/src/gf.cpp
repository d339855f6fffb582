#include "eqcount/gf.hpp"

#include <map>
#include <mutex>

namespace eqcount {
namespace {

using Poly = std::vector<int>;  // coefficients, constant term first

Poly digits_of(long long c, int n, long long p) {
  Poly d(n);
  for (int i = 0; i < n; ++i) {
    d[i] = static_cast<int>(c % p);
    c /= p;
  }
  return d;
}

long long encode(const Poly& d, long long p) {
  long long c = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) c = c * p + d[i];
  return c;
}

// In-place remainder of a by monic-leading b over F_p.
void poly_rem(Poly& a, const Poly& b, long long p) {
  int db = static_cast<int>(b.size()) - 1;
  while (db > 0 && b[db] == 0) --db;
  long long lead = b[db];
  // modular inverse of the leading coefficient
  long long inv = 1, base = lead % p, e = p - 2;
  while (e) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
    e >>= 1;
  }
  for (int da = static_cast<int>(a.size()) - 1; da >= db; --da) {
    long long c = a[da] * inv % p;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      long long v = (a[da - db + j] - c * b[j]) % p;
      if (v < 0) v += p;
      a[da - db + j] = static_cast<int>(v);
    }
  }
}

bool is_zero_poly(const Poly& a) {
  for (int c : a)
    if (c != 0) return false;
  return true;
}

bool is_irreducible(const Poly& f, long long p) {
  int s = static_cast<int>(f.size()) - 1;
  for (int deg = 1; deg <= s / 2; ++deg) {
    long long count = 1;
    for (int i = 0; i < deg; ++i) count *= p;
    for (long long c = 0; c < count; ++c) {
      Poly div = digits_of(c, deg, p);
      div.push_back(1);
      Poly r = f;
      poly_rem(r, div, p);
      if (is_zero_poly(r)) return false;
    }
  }
  return true;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> fs;
  for (long long r = 2; r * r <= n; ++r) {
    if (n % r == 0) {
      fs.push_back(r);
      while (n % r == 0) n /= r;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long r = 2; r * r <= n; ++r)
    if (n % r == 0) return false;
  return true;
}

int FieldTable::add(int x, int y) const {
  if (s == 1) return static_cast<int>((x + y) % p);
  if (p == 2) return x ^ y;
  long long res = 0, mult = 1, xx = x, yy = y;
  for (int i = 0; i < s; ++i) {
    res += (xx % p + yy % p) % p * mult;
    mult *= p;
    xx /= p;
    yy /= p;
  }
  return static_cast<int>(res);
}

int FieldTable::neg(int x) const {
  if (p == 2) return x;
  long long res = 0, mult = 1, xx = x;
  for (int i = 0; i < s; ++i) {
    res += (p - xx % p) % p * mult;
    mult *= p;
    xx /= p;
  }
  return static_cast<int>(res);
}

int FieldTable::mul_poly(int x, int y) const {
  Poly dx = digits_of(x, s, p), dy = digits_of(y, s, p);
  Poly prod(2 * s - 1, 0);
  for (int i = 0; i < s; ++i) {
    if (dx[i] == 0) continue;
    for (int j = 0; j < s; ++j)
      prod[i + j] = static_cast<int>((prod[i + j] + 1LL * dx[i] * dy[j]) % p);
  }
  if (s > 1) poly_rem(prod, modulus, p);
  prod.resize(s);
  return static_cast<int>(encode(prod, p));
}

int FieldTable::pow_elem(int x, long long e) const {
  if (x == 0) {
    if (e == 0) return 1;
    if (e < 0) throw std::domain_error("negative power of zero");
    return 0;
  }
  long long t = log_table[x] % (q - 1);
  long long r = static_cast<long long>(
      (static_cast<__int128>(t) * (e % (q - 1)) % (q - 1) + (q - 1)) % (q - 1));
  return exp_table[r];
}

FieldTable FieldTable::build(long long p, int s, const std::vector<int>* modulus) {
  if (!is_prime(p)) throw std::invalid_argument("p is not prime");
  if (s < 1) throw std::invalid_argument("s must be positive");
  long long q = 1;
  for (int i = 0; i < s; ++i) {
    q *= p;
    if (q > kMaxQ) throw std::invalid_argument("q exceeds implementation bound");
  }

  FieldTable F;
  F.p = p;
  F.s = s;
  F.q = q;

  if (modulus != nullptr) {
    if (static_cast<int>(modulus->size()) != s + 1 || modulus->back() != 1)
      throw std::invalid_argument("modulus must be monic of degree s");
    for (int c : *modulus)
      if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (s > 1 && !is_irreducible(*modulus, p))
      throw std::invalid_argument("supplied modulus is reducible");
    F.modulus = *modulus;
  } else if (s == 1) {
    F.modulus = {0, 1};  // x
  } else {
    // Smallest monic irreducible: candidates ordered by the integer encoding
    // of the non-leading coefficients (constant term least significant).
    for (long long c = 0;; ++c) {
      if (c >= q) throw std::logic_error("no irreducible polynomial found");
      Poly f = digits_of(c, s, p);
      f.push_back(1);
      if (is_irreducible(f, p)) {
        F.modulus = f;
        break;
      }
    }
  }

  // Table-free exponentiation for the generator search.
  auto pow_slow = [&](int x, long long e) {
    int r = 1;
    int base = x;
    while (e) {
      if (e & 1) r = F.mul_poly(r, base);
      base = F.mul_poly(base, base);
      e >>= 1;
    }
    return r;
  };

  if (q == 2) {
    F.generator = 1;
  } else {
    auto factors = prime_factors(q - 1);
    for (int c = 2; c < q; ++c) {
      bool primitive = true;
      for (long long r : factors) {
        if (pow_slow(c, (q - 1) / r) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        F.generator = c;
        break;
      }
    }
    if (F.generator == 0) throw std::logic_error("no primitive element found");
  }

  F.exp_table.assign(q - 1, 1);
  F.log_table.assign(q, -1);
  F.log_table[1] = 0;
  for (long long t = 1; t < q - 1; ++t) {
    F.exp_table[t] = F.mul_poly(F.exp_table[t - 1], F.generator);
    if (F.log_table[F.exp_table[t]] != -1)
      throw std::logic_error("generator order is less than q-1");
    F.log_table[F.exp_table[t]] = static_cast<int>(t);
  }
  return F;
}

const FieldTable& field_cache(long long p, int s) {
  static std::mutex mu;
  static std::map<std::pair<long long, int>, FieldTable> cache;
  std::scoped_lock lock(mu);
  auto key = std::make_pair(p, s);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, FieldTable::build(p, s)).first;
  return it->second;
}

}  // namespace eqcount
