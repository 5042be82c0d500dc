#pragma once

#include <cstddef>
#include <vector>

#include "endoring/fpmodule.hpp"

namespace endoring {

/// F_p[x1..xn].
RingPtr koszul_ring(std::size_t n, Coeff prime = PrimeField::kDefaultPrime);

/// Koszul complex on the variables of `ring`, as the minimal resolution of R/(x1..xn).
///
/// K_i has the i-subsets of the variables as basis, ordered lexicographically, all in
/// degree i. d(e_S) = Σ_k (-1)^k x_{s_k} e_{S \ s_k} for S = {s_0 < s_1 < ...}.
Resolution koszul_complex(const RingPtr& ring);
Resolution koszul_complex(std::size_t n, Coeff prime = PrimeField::kDefaultPrime);

/// Z_i = ker(d_i: K_i -> K_{i-1}) for 1 ≤ i ≤ n-1, minimally presented.
FPModule koszul_cycles(std::size_t n, std::size_t i, Coeff prime = PrimeField::kDefaultPrime);

struct OneRelationModule {
  FPModule module;
  std::vector<Polynomial> ideal;  // I = ideal of the entries
};

/// coker(R -> R^n) for a column of homogeneous entries of equal degree.
OneRelationModule one_relation_module(const std::vector<Polynomial>& entries);

struct DeterminantalModule {
  FPModule module;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Polynomial> maximal_minors;
  /// n < m and m ≥ 3, the range in which the source states reflexivity.
  bool claimed_reflexive = false;
};

/// coker(φ: R^n -> R^m) over F_p[x_ij] with φ the generic m×n matrix (x_ij in row j, column i).
DeterminantalModule generic_determinantal(std::size_t n, std::size_t m, Coeff prime = PrimeField::kDefaultPrime);

struct Perfection {
  std::size_t grade = 0;
  std::size_t projective_dimension = 0;
  bool perfect() const { return grade == projective_dimension; }
};

/// Grade as the smallest i with Ext^i(M, R) ≠ 0, next to the projective dimension.
Perfection perfection(const FPModule& m);

/// Image of the k-th differential of the minimal resolution of M (its k-th syzygy).
/// Requires M perfect and 1 ≤ k < pd M.
FPModule perfect_syzygy(const FPModule& m, std::size_t k);

}  // namespace endoring
