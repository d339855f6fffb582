#include "eqcount/numth.hpp"

#include <numeric>
#include <stdexcept>

namespace eqcount {

long long gcd_all(std::span<const long long> xs) {
  long long g = 0;
  for (long long x : xs) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

long long lcm_all(std::span<const long long> xs) {
  if (xs.empty()) throw std::invalid_argument("lcm_all of empty sequence");
  long long l = 1;
  for (long long x : xs) {
    if (x <= 0) throw std::invalid_argument("lcm_all requires positive entries");
    l = std::lcm(l, x);
  }
  return l;
}

BigInt lcm_all_big(std::span<const long long> xs) {
  if (xs.empty()) throw std::invalid_argument("lcm_all of empty sequence");
  BigInt l = 1;
  for (long long x : xs) {
    if (x <= 0) throw std::invalid_argument("lcm_all requires positive entries");
    l = l / gcd(l, BigInt(x)) * x;
  }
  return l;
}

long long i_count(std::span<const long long> vs) {
  int r = static_cast<int>(vs.size());
  if (r < 1 || r > 30) throw std::invalid_argument("i_count arity out of range");
  for (long long v : vs)
    if (v < 1) throw std::invalid_argument("i_count requires positive entries");
  long long total = (r % 2 == 0) ? 1 : -1;
  for (unsigned mask = 1; mask < (1u << r); ++mask) {
    long long prod = 1, l = 1;
    int t = 0;
    for (int j = 0; j < r; ++j) {
      if (mask >> j & 1) {
        prod *= vs[j];
        l = std::lcm(l, vs[j]);
        ++t;
      }
    }
    long long term = prod / l;
    total += ((r - t) % 2 == 0) ? term : -term;
  }
  return total;
}

long long i_count_product(std::span<const long long> vs) {
  int r = static_cast<int>(vs.size());
  long long prod = 1;
  for (long long v : vs) {
    prod *= v;
    if (prod > 100'000'000) throw std::invalid_argument("i_count_product: product too large");
  }
  long long total = 0;
  for (long long t = 0; t < prod; ++t) {
    long long term = 1;
    for (long long v : vs)
      if (t % v == 0) term *= 1 - v;
    total += term;
  }
  long long sign = (r % 2 == 0) ? 1 : -1;
  if ((sign * total) % prod != 0)
    throw std::logic_error("i_count_product: non-integral result");
  return sign * total / prod;
}

long long sym_poly(int j, std::span<const int> zs) {
  int n = static_cast<int>(zs.size());
  if (j < 0 || j > n) throw std::out_of_range("sym_poly index out of range");
  std::vector<long long> e(n + 1, 0);
  e[0] = 1;
  for (int z : zs)
    for (int i = n; i >= 1; --i) e[i] += z * e[i - 1];
  return e[j];
}

std::vector<long long> cyclotomic_poly(int delta) {
  if (delta < 1) throw std::invalid_argument("cyclotomic_poly order must be positive");
  // x^delta - 1 divided by Phi_e for every proper divisor e.
  std::vector<long long> f(delta + 1, 0);
  f[0] = -1;
  f[delta] = 1;
  for (int e = 1; e < delta; ++e) {
    if (delta % e != 0) continue;
    std::vector<long long> phi = cyclotomic_poly(e);
    // exact division f / phi, phi monic
    std::vector<long long> quot(f.size() - phi.size() + 1, 0);
    std::vector<long long> rem = f;
    for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
      long long c = rem[i + phi.size() - 1];
      quot[i] = c;
      if (c == 0) continue;
      for (size_t j = 0; j < phi.size(); ++j) rem[i + j] -= c * phi[j];
    }
    for (long long c : rem)
      if (c != 0) throw std::logic_error("cyclotomic division not exact");
    f = quot;
  }
  return f;
}

long long euler_phi(long long n) {
  long long result = n;
  for (long long r = 2; r * r <= n; ++r) {
    if (n % r == 0) {
      result -= result / r;
      while (n % r == 0) n /= r;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace eqcount
