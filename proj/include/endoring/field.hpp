#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace endoring {

using Coeff = std::uint32_t;

/// Arithmetic in the prime field F_p. All values are kept in [0, p).
class PrimeField {
 public:
  static constexpr Coeff kDefaultPrime = 32003;

  explicit PrimeField(Coeff p = kDefaultPrime) : p_(p) {
    if (p < 2 || p >= (Coeff{1} << 31) || !is_prime(p)) {
      throw std::invalid_argument("field modulus must be a prime below 2^31, got " +
                                  std::to_string(p));
    }
  }

  Coeff prime() const { return p_; }

  Coeff add(Coeff a, Coeff b) const {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>((std::uint64_t{a} * b) % p_);
  }
  Coeff pow(Coeff a, std::uint64_t e) const {
    std::uint64_t r = 1, b = a % p_;
    while (e != 0) {
      if (e & 1U) r = (r * b) % p_;
      b = (b * b) % p_;
      e >>= 1U;
    }
    return static_cast<Coeff>(r);
  }
  Coeff inv(Coeff a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
    return pow(a, p_ - 2);
  }

  /// Reduces a signed integer into [0, p).
  Coeff from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Coeff>(r);
  }

  /// Symmetric representative in (-p/2, p/2], used for printing.
  std::int64_t to_signed(Coeff a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

  static bool is_prime(Coeff n) {
    if (n < 2) return false;
    for (Coeff d = 2; std::uint64_t{d} * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  }

 private:
  Coeff p_;
};

}  // namespace endoring
