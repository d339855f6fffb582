#include "eqcount/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "eqcount/gf.hpp"
#include "eqcount/numth.hpp"

namespace eqcount {
namespace {

const std::vector<long long>& cached_phi(int delta) {
  static std::mutex mu;
  static std::map<int, std::vector<long long>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(delta);
  if (it == cache.end()) it = cache.emplace(delta, cyclotomic_poly(delta)).first;
  return it->second;
}

}  // namespace

CyclotomicInt::CyclotomicInt(int order) : order_(order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  coeffs_.assign(order, BigInt(0));
}

void CyclotomicInt::accumulate(long long root_power, const BigInt& count) {
  long long i = root_power % order_;
  if (i < 0) i += order_;
  coeffs_[i] += count;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& other) {
  if (other.order_ != order_) throw std::invalid_argument("cyclotomic order mismatch");
  for (int i = 0; i < order_; ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CyclotomicInt CyclotomicInt::times_root(long long e) const {
  CyclotomicInt out(order_);
  long long shift = e % order_;
  if (shift < 0) shift += order_;
  for (int i = 0; i < order_; ++i)
    out.coeffs_[(i + shift) % order_] = coeffs_[i];
  return out;
}

CyclotomicInt CyclotomicInt::conjugate() const {
  CyclotomicInt out(order_);
  for (int i = 0; i < order_; ++i)
    out.coeffs_[(order_ - i) % order_] = coeffs_[i];
  return out;
}

std::vector<BigInt> CyclotomicInt::reduced() const {
  const auto& phi = cached_phi(order_);
  int deg = static_cast<int>(phi.size()) - 1;  // = euler_phi(order_)
  std::vector<BigInt> rem = coeffs_;
  for (int i = order_ - 1; i >= deg; --i) {
    if (rem[i] == 0) continue;
    BigInt c = rem[i];
    rem[i] = 0;
    for (int j = 0; j < deg; ++j) rem[i - deg + j] -= c * phi[j];
  }
  rem.resize(deg);
  return rem;
}

bool CyclotomicInt::is_zero() const {
  for (const BigInt& c : reduced())
    if (c != 0) return false;
  return true;
}

bool CyclotomicInt::divisible_by(const BigInt& c) const {
  if (c == 0) throw std::invalid_argument("division by zero");
  for (const BigInt& x : reduced())
    if (x % c != 0) return false;
  return true;
}

CyclotomicInt CyclotomicInt::div_exact(const BigInt& c) const {
  if (c == 0) throw std::invalid_argument("division by zero");
  auto red = reduced();
  CyclotomicInt out(order_);
  for (size_t i = 0; i < red.size(); ++i) {
    if (red[i] % c != 0)
      throw IntegrityError("cyclotomic division is not exact");
    out.coeffs_[i] = red[i] / c;
  }
  return out;
}

std::optional<BigInt> CyclotomicInt::as_integer() const {
  auto red = reduced();
  for (size_t i = 1; i < red.size(); ++i)
    if (red[i] != 0) return std::nullopt;
  return red.empty() ? BigInt(0) : red[0];
}

bool CyclotomicInt::operator==(const CyclotomicInt& other) const {
  if (order_ != other.order_) return false;
  return reduced() == other.reduced();
}

}  // namespace eqcount
