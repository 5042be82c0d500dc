#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "endoring/polyring.hpp"

namespace endoring {

/// Graded free module R(-d_1) ⊕ ... ⊕ R(-d_r); basis vector i has degree degrees[i].
struct FreeModule {
  std::vector<int> degrees;

  std::size_t rank() const { return degrees.size(); }
  friend bool operator==(const FreeModule&, const FreeModule&) = default;
};

struct ModuleTerm {
  Monomial mono;
  std::uint32_t pos;
  Coeff coeff;
};

/// Position-over-term: a lower position index is larger; ties broken by degrevlex.
inline int compare(const ModuleTerm& a, const ModuleTerm& b) {
  if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
  return compare(a.mono, b.mono);
}

/// Element of a free module R^rank, stored as one sorted term list.
class VectorPoly {
 public:
  VectorPoly(RingPtr ring, std::size_t rank) : ring_(std::move(ring)), rank_(rank) {}

  static VectorPoly unit(const RingPtr& ring, std::size_t rank, std::size_t pos);
  static VectorPoly from_entries(const RingPtr& ring, const std::vector<Polynomial>& entries);
  static VectorPoly from_terms(const RingPtr& ring, std::size_t rank, std::vector<ModuleTerm> terms);
  /// Trusts that `terms` is already canonical (sorted, no zeros, no duplicates).
  static VectorPoly from_sorted_terms(const RingPtr& ring, std::size_t rank,
                                      std::vector<ModuleTerm> terms);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const std::vector<ModuleTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const ModuleTerm& leading() const { return terms_.front(); }

  Polynomial entry(std::size_t pos) const;
  std::vector<Polynomial> entries() const;

  /// Homogeneity with respect to the generator degrees of `ambient`.
  Homogeneity homogeneity(const FreeModule& ambient) const;

  VectorPoly& operator+=(const VectorPoly& o);
  VectorPoly& operator-=(const VectorPoly& o);
  friend VectorPoly operator+(VectorPoly a, const VectorPoly& b) { return a += b; }
  friend VectorPoly operator-(VectorPoly a, const VectorPoly& b) { return a -= b; }
  VectorPoly operator-() const { return scaled(ring_->field().neg(1)); }
  VectorPoly scaled(Coeff c) const;
  VectorPoly mul_term(const Monomial& m, Coeff c) const;
  VectorPoly operator*(const Polynomial& f) const;

  /// Moves every position p to p + offset inside a module of rank new_rank.
  VectorPoly embedded(std::size_t new_rank, std::size_t offset) const;
  /// Keeps positions in [begin, end), renumbered from 0.
  VectorPoly restricted(std::size_t begin, std::size_t end) const;

  std::string to_string() const;
  friend bool operator==(const VectorPoly& a, const VectorPoly& b);

 private:
  RingPtr ring_;
  std::size_t rank_;
  std::vector<ModuleTerm> terms_;
};

/// v = Σ quotients[k] · basis[k] + remainder.
struct MembershipCertificate {
  std::vector<Polynomial> coefficients;
  VectorPoly remainder;

  bool member() const { return remainder.is_zero(); }
};

namespace detail {
struct GbData;
}

/// Gröbner basis of a homogeneous submodule of a graded free module.
///
/// The engine is homogeneous-only and works degree by degree with the normal
/// selection strategy and the Gebauer–Möller criteria. Generators may be
/// "tracked": each tracked generator carries a cofactor slot, which yields
/// lifts onto the generators and the syzygies among them. Untracked
/// generators are used for reduction only, so syzygies and lifts of the
/// tracked part are computed modulo the untracked submodule.
class GroebnerBasis {
 public:
  struct Options {
    bool track = false;
    /// Explicit degrees for generators; needed when some generator is zero.
    std::optional<std::vector<int>> degrees;
  };

  GroebnerBasis(RingPtr ring, FreeModule ambient, std::vector<VectorPoly> gens)
      : GroebnerBasis(std::move(ring), std::move(ambient), std::move(gens), {}, Options{}) {}
  GroebnerBasis(RingPtr ring, FreeModule ambient, std::vector<VectorPoly> gens, Options options)
      : GroebnerBasis(std::move(ring), std::move(ambient), std::move(gens), {}, std::move(options)) {}
  /// `tracked` generators get cofactor slots; `untracked` ones only reduce.
  GroebnerBasis(RingPtr ring, FreeModule ambient, std::vector<VectorPoly> tracked,
                std::vector<VectorPoly> untracked, Options options);

  const RingPtr& ring() const;
  const FreeModule& ambient() const;
  /// Completed basis (monic leading terms), in insertion order.
  const std::vector<VectorPoly>& elements() const;
  /// Tracked generators, as given.
  const std::vector<VectorPoly>& generators() const;
  const std::vector<int>& generator_degrees() const;
  bool tracked() const;

  /// Indices of tracked generators that survive reduction at their own degree;
  /// together they minimally generate the submodule (modulo the untracked part).
  const std::vector<std::size_t>& minimal_generator_indices() const;

  VectorPoly normal_form(const VectorPoly& v) const;
  MembershipCertificate membership(const VectorPoly& v) const;
  bool contains(const VectorPoly& v) const { return normal_form(v).is_zero(); }
  /// Coefficients c with v ≡ Σ c_j · generators()[j] modulo the untracked part,
  /// or nullopt when v is not in the submodule. Requires tracking.
  std::optional<std::vector<Polynomial>> lift(const VectorPoly& v) const;
  /// Generators of {a : Σ a_j · generators()[j] ∈ untracked submodule}, as vectors
  /// in the free module with degrees generator_degrees(). Requires tracking.
  const std::vector<VectorPoly>& syzygies() const;

  /// Leading monomials grouped by position.
  std::vector<std::vector<Monomial>> leading_monomials() const;

  /// Number of S-pairs reduced during completion.
  std::uint64_t spair_count() const;

 private:
  std::shared_ptr<const detail::GbData> data_;
};

/// Buchberger completion of `gens` inside `ambient`.
GroebnerBasis buchberger(const RingPtr& ring, const FreeModule& ambient, std::vector<VectorPoly> gens);
VectorPoly normal_form(const VectorPoly& v, const GroebnerBasis& gb);
MembershipCertificate membership(const VectorPoly& v, const GroebnerBasis& gb);
/// Generators of the syzygy module of the ordered list `gens`.
std::vector<VectorPoly> syzygy_basis(const RingPtr& ring, const FreeModule& ambient,
                                     std::vector<VectorPoly> gens,
                                     std::optional<std::vector<int>> degrees = std::nullopt);
/// A minimal homogeneous generating subset (order preserved) of the submodule spanned by gens.
std::vector<VectorPoly> minimal_generators(const RingPtr& ring, const FreeModule& ambient,
                                           std::vector<VectorPoly> gens);

/// Throws InhomogeneousError if v is not homogeneous; returns its degree (nullopt for 0).
std::optional<int> homogeneous_degree(const VectorPoly& v, const FreeModule& ambient);

}  // namespace endoring
