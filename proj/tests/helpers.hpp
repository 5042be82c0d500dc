#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "endoring/fpmodule.hpp"
#include "endoring/groebner.hpp"
#include "endoring/polyring.hpp"

namespace testing {

using namespace endoring;

inline Polynomial P(const RingPtr& r, std::string_view s) { return parse_polynomial(s, r); }

inline VectorPoly V(const RingPtr& r, std::initializer_list<std::string_view> entries) {
  std::vector<Polynomial> ps;
  for (auto e : entries) ps.push_back(P(r, e));
  return VectorPoly::from_entries(r, ps);
}

/// R/(gens) as a cyclic module in degree 0.
inline FPModule cyclic(const RingPtr& r, std::initializer_list<std::string_view> gens) {
  std::vector<std::vector<Polynomial>> cols;
  for (auto g : gens) cols.push_back({P(r, g)});
  return make_module(r, {0}, cols);
}

/// The ideal generated by gens, as a module.
inline FPModule ideal_module(const RingPtr& r, std::initializer_list<std::string_view> gens) {
  std::vector<VectorPoly> vs;
  std::vector<int> degs;
  for (auto g : gens) {
    vs.push_back(V(r, {g}));
    degs.push_back(P(r, g).leading().mono.degree);
  }
  return Subquotient(r, FreeModule{{0}}, vs, degs, {}).module();
}

inline std::vector<long> hf_values(const FPModule& m, int lo, int hi) {
  return hilbert_function(m, lo, hi).values;
}

/// Random homogeneous polynomial of degree d, with roughly `density` of the monomials present.
inline Polynomial random_homogeneous(const RingPtr& r, int d, std::mt19937_64& rng, double density = 0.5) {
  std::vector<Term> terms;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<Coeff> coeff(1, r->prime() - 1);
  if (d < 0) return Polynomial(r);
  for (const auto& m : r->monomials_of_degree(d)) {
    if (coin(rng) < density) terms.push_back({m, coeff(rng)});
  }
  return Polynomial::from_terms(r, std::move(terms));
}

inline VectorPoly random_vector(const RingPtr& r, const FreeModule& F, int d, std::mt19937_64& rng,
                                double density = 0.5) {
  std::vector<Polynomial> entries;
  for (int deg : F.degrees) entries.push_back(random_homogeneous(r, d - deg, rng, density));
  return VectorPoly::from_entries(r, entries);
}

/// Σ coeffs[k] · vecs[k].
inline VectorPoly combine(const RingPtr& r, std::size_t rank, const std::vector<Polynomial>& coeffs,
                          const std::vector<VectorPoly>& vecs) {
  VectorPoly out(r, rank);
  for (std::size_t k = 0; k < coeffs.size(); ++k) out += vecs[k] * coeffs[k];
  return out;
}

}  // namespace testing
