#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "endoring/field.hpp"

namespace endoring {

/// Dense univariate polynomial over F_p, coefficients from degree 0 upward.
/// The coefficient vector never has a trailing zero; the zero polynomial is empty.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Coeff> c) : c_(std::move(c)) { trim(); }
  static UPoly constant(Coeff a) { return UPoly(std::vector<Coeff>{a}); }
  static UPoly x() { return UPoly(std::vector<Coeff>{0, 1}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Coeff lead() const { return c_.back(); }
  Coeff operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<Coeff>& coeffs() const { return c_; }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  /// Orders by degree, then coefficients from low to high degree.
  friend bool operator<(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    return a.c_ < b.c_;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Coeff> c_;
};

UPoly add(const PrimeField& F, const UPoly& a, const UPoly& b);
UPoly sub(const PrimeField& F, const UPoly& a, const UPoly& b);
UPoly mul(const PrimeField& F, const UPoly& a, const UPoly& b);
UPoly scale(const PrimeField& F, const UPoly& a, Coeff s);
UPoly monic(const PrimeField& F, const UPoly& a);
/// Quotient and remainder; b must be nonzero.
std::pair<UPoly, UPoly> divmod(const PrimeField& F, const UPoly& a, const UPoly& b);
UPoly mod(const PrimeField& F, const UPoly& a, const UPoly& b);
UPoly gcd(const PrimeField& F, UPoly a, UPoly b);
/// Returns (g, s, t) with s*a + t*b = g = monic gcd(a, b).
struct ExtGcd {
  UPoly g, s, t;
};
ExtGcd ext_gcd(const PrimeField& F, const UPoly& a, const UPoly& b);
UPoly derivative(const PrimeField& F, const UPoly& a);
UPoly powmod(const PrimeField& F, const UPoly& base, std::uint64_t e, const UPoly& m);

/// Monic irreducible factors with multiplicities, sorted ascending.
std::vector<std::pair<UPoly, int>> factor(const PrimeField& F, const UPoly& f, std::uint64_t seed);

}  // namespace endoring
