#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "endoring/field.hpp"

namespace endoring {

inline constexpr std::size_t kMaxVariables = 16;

/// Dense exponent vector with a cached (weighted) total degree.
///
/// Unused trailing slots are always zero, so comparisons may scan the
/// full array without knowing the variable count.
struct Monomial {
  std::array<std::uint8_t, kMaxVariables> exp{};
  std::int32_t degree = 0;

  bool is_one() const { return degree == 0 && exp == std::array<std::uint8_t, kMaxVariables>{}; }

  /// True when `this` divides `other`.
  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exp[i] > other.exp[i]) return false;
    }
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree == b.degree && a.exp == b.exp;
  }
};

/// Graded reverse lexicographic comparison: >0 if a > b, <0 if a < b.
inline int compare(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree > b.degree ? 1 : -1;
  for (std::size_t i = kMaxVariables; i-- > 0;) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
  }
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b);
/// a / b, requires b | a.
Monomial operator/(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// F_p[x_1..x_n] with a fixed graded reverse lexicographic order.
/// Variable weights default to 1.
class Ring {
 public:
  Ring(PrimeField field, std::vector<std::string> names, std::vector<int> weights = {});

  const PrimeField& field() const { return field_; }
  Coeff prime() const { return field_.prime(); }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  bool standard_grading() const;

  std::optional<std::size_t> index_of(std::string_view name) const;

  Monomial one() const { return Monomial{}; }
  Monomial variable(std::size_t i) const;
  Monomial lcm(const Monomial& a, const Monomial& b) const;
  std::int32_t degree_of(const std::array<std::uint8_t, kMaxVariables>& exp) const;

  /// All monomials of the given weighted degree, in decreasing order.
  std::vector<Monomial> monomials_of_degree(int degree) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.field_ == b.field_ && a.names_ == b.names_ && a.weights_ == b.weights_;
  }

 private:
  PrimeField field_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names, Coeff prime = PrimeField::kDefaultPrime,
                  std::vector<int> weights = {});

/// Throws RingMismatch unless both rings are equal.
void require_same_ring(const Ring& a, const Ring& b);

struct Term {
  Monomial mono;
  Coeff coeff;
};

/// Result of a homogeneity query. The zero polynomial is homogeneous of every degree.
struct Homogeneity {
  enum class Kind { kZero, kHomogeneous, kInhomogeneous };
  Kind kind = Kind::kZero;
  int degree = 0;

  bool homogeneous() const { return kind != Kind::kInhomogeneous; }
};

/// Sparse polynomial: nonzero terms strictly decreasing in the monomial order.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const RingPtr& ring, Coeff c);
  static Polynomial from_int(const RingPtr& ring, std::int64_t c);
  static Polynomial variable(const RingPtr& ring, std::size_t i);
  static Polynomial monomial(const RingPtr& ring, const Monomial& m, Coeff c = 1);
  /// Sorts and combines arbitrary terms into canonical form.
  static Polynomial from_terms(const RingPtr& ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }
  Coeff constant_coefficient() const;
  /// Coefficient of a given monomial (0 if absent).
  Coeff coefficient(const Monomial& m) const;
  /// Highest total degree among the terms (0 for the zero polynomial).
  int total_degree() const;

  Homogeneity homogeneity() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial scaled(Coeff c) const;
  Polynomial mul_term(const Monomial& m, Coeff c) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// Terms of the given total degree only.
  Polynomial homogeneous_part(int degree) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Convenience wrapper around Polynomial::homogeneity.
Homogeneity is_homogeneous(const Polynomial& f);

struct Factor {
  Polynomial factor;
  int multiplicity;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed5eedULL;

/// Factors a polynomial in at most one variable into monic irreducibles.
/// Output is sorted by degree, then by coefficient vector (low degree first).
/// The product of factor^multiplicity equals the monic normalization of f.
std::vector<Factor> factor_univariate(const Polynomial& f, std::uint64_t seed = kDefaultSeed);

}  // namespace endoring
