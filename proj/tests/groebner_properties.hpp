#pragma once

// Randomized Gröbner property suite, shared by the unit tests and the
// acceptance binary. Every check is against the degreewise oracle or a
// direct re-evaluation, never against another Gröbner computation.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "oracle.hpp"

namespace testing {

struct PropertyStats {
  int cases = 0;
  int checks = 0;
  int failures = 0;
  std::vector<std::string> messages;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (messages.size() < 20) messages.push_back(what);
  }
};

inline std::size_t standard_count(const RingPtr& ring, const FreeModule& F, const GroebnerBasis& gb, int d) {
  auto leads = gb.leading_monomials();
  std::size_t count = 0;
  for (std::size_t i = 0; i < F.rank(); ++i) {
    for (const auto& m : ring->monomials_of_degree(d - F.degrees[i])) {
      if (std::none_of(leads[i].begin(), leads[i].end(), [&](const Monomial& l) { return l.divides(m); })) ++count;
    }
  }
  return count;
}

inline PropertyStats run_groebner_properties(std::uint64_t seed, int cases) {
  PropertyStats st;
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  const std::vector<std::vector<std::string>> var_sets = {{"x", "y"}, {"x", "y", "z"}};

  for (int c = 0; c < cases; ++c) {
    ++st.cases;
    const std::string tag = "case " + std::to_string(c) + ": ";
    auto ring = make_ring(var_sets[static_cast<std::size_t>(pick(0, 1))]);
    FreeModule F;
    int rank = pick(1, 2);
    for (int i = 0; i < rank; ++i) F.degrees.push_back(pick(0, 1));
    int ngens = pick(1, 4);
    std::vector<VectorPoly> gens;
    std::vector<int> degs;
    while (static_cast<int>(gens.size()) < ngens) {
      int d = pick(1, 4);
      auto v = random_vector(ring, F, d, rng, 0.4);
      if (v.is_zero()) continue;
      gens.push_back(v);
      degs.push_back(d);
    }
    const int top = *std::max_element(degs.begin(), degs.end()) + 2;

    GroebnerBasis gb(ring, F, gens);
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    GroebnerBasis gb2(ring, F, shuffled);

    // The leading terms span a complement of the submodule in every degree.
    for (int d = 0; d <= top; ++d) {
      st.expect(standard_count(ring, F, gb, d) == oracle::quotient_dim(ring, F, gens, d),
                tag + "Gröbner basis incomplete in degree " + std::to_string(d));
    }
    for (const auto& e : gb.elements()) st.expect(oracle::in_span(ring, F, gens, e), tag + "basis element outside submodule");

    // Confluence and certificates on random vectors.
    for (int k = 0; k < 2; ++k) {
      auto v = random_vector(ring, F, pick(0, 4), rng, 0.5);
      auto n1 = gb.normal_form(v), n2 = gb2.normal_form(v);
      st.expect(n1 == n2, tag + "normal form depends on generator order");
      st.expect(gb.normal_form(n1) == n1, tag + "normal form is not idempotent");
      auto leads = gb.leading_monomials();
      for (const auto& t : n1.terms()) {
        bool divisible = std::any_of(leads[t.pos].begin(), leads[t.pos].end(),
                                     [&](const Monomial& l) { return l.divides(t.mono); });
        st.expect(!divisible, tag + "normal form has a reducible term");
      }
      st.expect(oracle::in_span(ring, F, gens, v - n1), tag + "v - NF(v) outside submodule");
      auto cert = gb.membership(v);
      st.expect(combine(ring, F.rank(), cert.coefficients, gb.elements()) + cert.remainder == v,
                tag + "certificate identity fails");
      st.expect(cert.member() == oracle::in_span(ring, F, gens, v), tag + "membership verdict disagrees with oracle");
    }

    // Constructed members lift onto the original generators.
    {
      int d = *std::max_element(degs.begin(), degs.end()) + pick(0, 1);
      std::vector<Polynomial> coeffs;
      for (int dg : degs) coeffs.push_back(random_homogeneous(ring, d - dg, rng, 0.5));
      auto v = combine(ring, F.rank(), coeffs, gens);
      GroebnerBasis tracked(ring, F, gens, GroebnerBasis::Options{true, degs});
      st.expect(gb.membership(v).member(), tag + "constructed member rejected");
      auto lift = tracked.lift(v);
      st.expect(lift.has_value() && combine(ring, F.rank(), *lift, gens) == v, tag + "lift does not reproduce v");

      // Syzygies: sound, and complete against the oracle.
      const auto& syz = tracked.syzygies();
      FreeModule G{degs};
      for (const auto& s : syz) {
        st.expect(combine(ring, F.rank(), s.entries(), gens).is_zero(), tag + "syzygy does not vanish");
      }
      for (int e = 0; e <= top + 1; ++e) {
        st.expect(oracle::span_dim(ring, G, syz, e) == oracle::syzygy_dim(ring, F, gens, degs, e),
                  tag + "syzygy module incomplete in degree " + std::to_string(e));
      }
    }

    // Minimal generators generate and are irredundant.
    {
      auto mins = minimal_generators(ring, F, gens);
      for (int d = 0; d <= top; ++d) {
        st.expect(oracle::span_dim(ring, F, mins, d) == oracle::span_dim(ring, F, gens, d),
                  tag + "minimal generators lose part of the submodule");
      }
      for (std::size_t k = 0; k < mins.size(); ++k) {
        auto others = mins;
        others.erase(others.begin() + static_cast<std::ptrdiff_t>(k));
        st.expect(!oracle::in_span(ring, F, others, mins[k]), tag + "redundant minimal generator");
      }
    }
  }
  return st;
}

}  // namespace testing
