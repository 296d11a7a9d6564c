#pragma once

#include <cstdint>
#include <stdexcept>

namespace isoclass {

/// Arithmetic context for the prime field F_p, 2 <= p <= 2^16.
/// Residues are plain machine integers in [0, p).
class PrimeField {
 public:
  explicit PrimeField(int p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("PrimeField: modulus must be a prime in [2, 65536]");
  }

  int p() const { return p_; }

  int add(int a, int b) const { return (a + b) % p_; }
  int sub(int a, int b) const { return (a - b % p_ + p_) % p_; }
  int mul(int a, int b) const { return int(std::int64_t(a) * b % p_); }
  int neg(int a) const { return (p_ - a % p_) % p_; }

  int pow(int a, long long e) const {
    a %= p_;
    if (a < 0) a += p_;
    int r = 1;
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  int inv(int a) const {
    a %= p_;
    if (a < 0) a += p_;
    if (a == 0) throw std::domain_error("PrimeField::inv: zero has no inverse");
    return pow(a, p_ - 2);
  }

  /// Reduce an arbitrary integer into [0, p).
  int reduce(long long a) const {
    long long r = a % p_;
    return int(r < 0 ? r + p_ : r);
  }

  static bool is_prime(int m) {
    if (m < 2 || m > 65536) return false;
    for (int d = 2; d * d <= m; ++d)
      if (m % d == 0) return false;
    return true;
  }

 private:
  int p_;
};

}  // namespace isoclass
