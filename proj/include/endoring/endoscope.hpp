#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "endoring/fpmodule.hpp"
#include "endoring/linalg.hpp"

namespace endoring {

/// Λ = End(E) as a module with its composition product.
class EndAlgebra {
 public:
  /// Minimalizes E first; the algebra refers to the minimal presentation.
  explicit EndAlgebra(const FPModule& e);

  const FPModule& module() const { return hom_.source(); }
  const HomModule& hom() const { return hom_; }
  /// Λ as a finitely presented module (minimal).
  const FPModule& underlying() const { return hom_.module(); }
  const std::vector<ModuleMorphism>& witnesses() const { return hom_.witnesses(); }
  /// Coordinates of id_E over the generators of Λ.
  const VectorPoly& identity() const { return identity_; }

  /// Coordinates of f∘g.
  VectorPoly product(const VectorPoly& f, const VectorPoly& g) const;
  /// id∘w = w = w∘id for every witness, checked by membership.
  bool verify_unit_law() const;

  /// Homogeneous element of Λ of the given degree with random coefficients;
  /// the zero morphism when Λ vanishes in that degree.
  ModuleMorphism random_element(int degree, std::uint64_t seed) const;

 private:
  HomModule hom_;
  VectorPoly identity_;
};

EndAlgebra end_algebra(const FPModule& e);

/// J₀ = Hom(E, mE), the kernel of Λ → Hom(E, E/mE).
Embedding j0(const EndAlgebra& lambda);
/// J₁ = image of E*⊗E → Λ.
Embedding j1(const EndAlgebra& lambda);
/// Every generator of `sub` lies in the image of `super` (both embedded in Λ).
bool contained_in(const Embedding& sub, const Embedding& super);

/// Λ/J₀ realized inside M_n(k), n = ν(E), acting on E/mE.
struct BarAlgebra {
  std::size_t n = 0;
  std::vector<Matrix> basis;
  bool contains_identity = false;

  std::size_t dim() const { return basis.size(); }
};

/// k-span of the constant parts of the witnesses of Λ. Requires a minimal presentation.
BarAlgebra bar_algebra(const EndAlgebra& lambda);
/// k-span of the given n×n matrices closed under products (the unital algebra they generate
/// when `with_identity` is set).
BarAlgebra matrix_algebra(const PrimeField& F, std::size_t n, const std::vector<Matrix>& gens,
                          bool with_identity = true);
/// Constant part of a morphism between minimally presented modules, as a ν(target)×ν(source) matrix.
Matrix constant_part(const ModuleMorphism& f);

/// Basis of the Jacobson radical by the trace form of the regular representation.
/// Throws PreconditionError unless p > dim A; the result is checked to be nilpotent.
std::vector<Matrix> fd_radical(const PrimeField& F, const BarAlgebra& a);

struct BlockDecomposition {
  std::size_t num_blocks = 0;
  std::vector<std::size_t> block_dims;
};

/// Blocks of the semisimple quotient A / rad.
BlockDecomposition simple_blocks(const PrimeField& F, const BarAlgebra& a, const std::vector<Matrix>& radical);

struct RadicalProfile {
  std::size_t dim_bar = 0;
  std::size_t dim_radical = 0;
  std::size_t num_blocks = 0;
  std::vector<std::size_t> block_dims;
  bool is_local = false;
};

RadicalProfile radical_profile(const PrimeField& F, const BarAlgebra& a);
/// Throws PreconditionError for the zero module.
RadicalProfile is_local_module(const FPModule& e);

/// φ(E) ⊂ m·F where F is the target.
bool is_small(const ModuleMorphism& f);

struct TransitionReport {
  bool holds = true;
  std::size_t pairs_checked = 0;
  std::string failure;  // first offending pair, if any
};

/// b∘a and a∘b are small for all witness pairs a: E₁ → E₂, b: E₂ → E₁.
TransitionReport check_transition(const FPModule& e1, const FPModule& e2);

struct RadicalBlock {
  std::string name;
  std::size_t generators = 0;  // bar images checked
  std::size_t bar_dim = 0;     // dimension of their span
  bool in_radical = true;
};

struct RadicalBlockProfile {
  TransitionReport transition;
  /// False when the transition conditions fail; the blocks are then not computed.
  bool applicable = false;
  std::vector<RadicalBlock> blocks;
  RadicalProfile profile;  // of E₁ ⊕ E₂
  /// The four blocks span the bar-level radical exactly.
  bool spans_radical = false;
  bool pass() const;
};

RadicalBlockProfile radical_block_profile(const FPModule& e1, const FPModule& e2);

/// Σ (−1)^i trace of the constant part of the lift of φ to the minimal resolution.
/// Endomorphisms of nonzero degree have trace 0.
Coeff endomorphism_trace(const ModuleMorphism& phi);

struct TraceCheck {
  std::size_t pairs = 0;
  std::size_t failures = 0;
  bool pass() const { return failures == 0; }
};

/// tr(f∘g) = tr(g∘f) on random pairs of degrees d and −d.
TraceCheck check_trace_commutes(const EndAlgebra& lambda, std::size_t pairs, std::uint64_t seed);

struct SpotReport {
  std::string name;
  HilbertFunction left;
  HilbertFunction right;
  bool pass = false;
  std::string note;
};

struct SequenceReport {
  std::string id;
  /// "pass", "fail" or "skipped".
  std::string status;
  std::vector<SpotReport> spots;
  std::string note;
  bool pass() const { return status != "fail"; }
};

/// coker(E*⊗E → End E) against Tor₁(D(E), E).
SequenceReport verify_ausbr0(const FPModule& e, std::optional<DegreeWindow> window = std::nullopt);
/// ker and coker of E*⊗X → Hom(E, X) against Tor₂(D(E), X) and Tor₁(D(E), X).
SequenceReport verify_adual(const FPModule& e, const FPModule& x, std::optional<DegreeWindow> window = std::nullopt);
/// E = k-th syzygy of a perfect M: E*⊗E → End E is injective with cokernel like End M.
SequenceReport verify_perfect_syzygy_sequence(const FPModule& m, std::size_t k,
                                              std::optional<DegreeWindow> window = std::nullopt);

struct OneRelationBounds {
  std::size_t beta0 = 0;
  std::size_t beta1 = 0;
  std::size_t lower = 0;  // β₀β₁ − β₀ + 1
  std::size_t upper = 0;  // β₀β₁ + 1
  bool holds = false;
};

struct DeterminantalObservation {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t formula = 0;  // n·C(m, n+1) + 1
  bool matches_product = false;  // formula == ν(E)ν(E*) + 1
  bool matches_end = false;      // formula == ν(Λ)
};

struct BoundReport {
  std::size_t nu_module = 0;
  std::size_t nu_dual = 0;
  std::size_t nu_end = 0;
  std::size_t upper = 0;  // ν(E)ν(E*) + 1
  bool upper_holds = false;
  std::optional<OneRelationBounds> one_relation;
  std::optional<DeterminantalObservation> determinantal;
  /// Hard assertions only; the determinantal comparison is informational.
  bool pass() const { return upper_holds && (!one_relation || one_relation->holds); }
};

struct BoundContext {
  /// Entries of the relation column of a one-relation module.
  std::optional<std::vector<Polynomial>> one_relation_ideal;
  /// (n, m) of a generic determinantal module.
  std::optional<std::pair<std::size_t, std::size_t>> determinantal;
};

BoundReport generator_bound_report(const FPModule& e, const BoundContext& context = {});

}  // namespace endoring
