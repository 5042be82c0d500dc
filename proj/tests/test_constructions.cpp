#include "doctest.h"
#include "endoring/constructions.hpp"
#include "endoring/errors.hpp"
#include "helpers.hpp"

using namespace endoring;
using testing::hf_values;
using testing::P;

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

FPModule maximal_ideal_quotient(const RingPtr& r) {
  std::vector<std::vector<Polynomial>> cols;
  for (std::size_t i = 0; i < r->nvars(); ++i) cols.push_back({Polynomial::variable(r, i)});
  return make_module(r, {0}, cols);
}

}  // namespace

TEST_CASE("Koszul complexes") {
  auto k1 = koszul_complex(1);
  CHECK(k1.betti() == std::vector<std::size_t>{1, 1});
  auto k2 = koszul_complex(2);
  CHECK(k2.betti() == std::vector<std::size_t>{1, 2, 1});
  const auto& r2 = k2.ring;
  CHECK(k2.differentials[0][0] == testing::V(r2, {"x1"}));
  CHECK(k2.differentials[0][1] == testing::V(r2, {"x2"}));
  CHECK(k2.differentials[1][0] == testing::V(r2, {"-x2", "x1"}));
  for (std::size_t n = 1; n <= 5; ++n) {
    auto k = koszul_complex(n);
    for (std::size_t i = 0; i <= n; ++i) CHECK(k.modules[i].rank() == binomial(n, i));
    CHECK(k.is_minimal());
    for (std::size_t i = 0; i + 1 < k.differentials.size(); ++i) {
      CHECK(compose(k.differential(i), k.differential(i + 1)).is_zero());
    }
  }
}

TEST_CASE("Koszul complexes are exact in positive spots") {
  for (std::size_t n = 2; n <= 5; ++n) {
    auto k = koszul_complex(n);
    for (std::size_t i = 1; i < n; ++i) {
      auto z = kernel_of(k.differential(i - 1)).module;
      auto b = image_of(k.differential(i)).module;
      CHECK(hf_values(z, 0, n + 3) == hf_values(b, 0, n + 3));
    }
    CHECK(kernel_of(k.differential(n - 1)).module.is_zero());
    // The resolution computed from scratch has the same Betti numbers.
    CHECK(free_resolution(maximal_ideal_quotient(k.ring)).betti() == k.betti());
  }
}

TEST_CASE("Koszul cycles") {
  auto z13 = koszul_cycles(3, 1);
  CHECK(nu(z13) == 3);
  CHECK(rank(z13) == 2);
  CHECK(nu(koszul_cycles(5, 1)) == 10);
  for (std::size_t n = 2; n <= 5; ++n) {
    auto top = koszul_cycles(n, n - 1);
    CHECK(nu(top) == 1);
    CHECK(top.is_free());
    CHECK(has_free_summand(top));
    for (std::size_t i = 1; i + 2 <= n; ++i) {
      auto z = koszul_cycles(n, i);
      CHECK(nu(z) == binomial(n, i + 1));
      CHECK_FALSE(has_free_summand(z));
    }
  }
  CHECK_THROWS_AS(koszul_cycles(3, 0), PreconditionError);
  CHECK_THROWS_AS(koszul_cycles(3, 3), PreconditionError);
}

TEST_CASE("one-relation modules") {
  auto r = make_ring({"x", "y", "z"});
  auto e = one_relation_module({P(r, "x"), P(r, "y"), P(r, "z")});
  CHECK(nu(e.module) == 3);
  CHECK(e.ideal.size() == 3);
  auto e1 = ext(e.module, 1);
  CHECK(hilbert_function(e1, -3, 3).total() == 1);
  CHECK(hf_values(e1, -3, 3) == hf_values(auslander_dual(e.module), -3, 3));

  auto r2 = make_ring({"x", "y"});
  CHECK(rank(one_relation_module({P(r2, "x"), P(r2, "y")}).module) == 1);
  CHECK(nu(one_relation_module({P(r, "x^2"), P(r, "y^2"), P(r, "z^2")}).module) == 3);
  CHECK_THROWS_AS(one_relation_module({P(r, "x"), P(r, "y^2")}), InhomogeneousError);
  CHECK_THROWS_AS(one_relation_module({P(r, "x")}), PreconditionError);
}

TEST_CASE("generic determinantal modules") {
  auto d11 = generic_determinantal(1, 1);
  auto r11 = d11.module.ring();
  CHECK(hf_values(d11.module, 0, 3) == hf_values(make_module(r11, {0}, {{P(r11, "x11")}}), 0, 3));
  auto d12 = generic_determinantal(1, 2);
  CHECK(nu(d12.module) == 2);
  CHECK(rank(d12.module) == 1);
  auto d23 = generic_determinantal(2, 3);
  CHECK(nu(d23.module) == 3);
  CHECK(rank(d23.module) == 1);
  CHECK(d23.maximal_minors.size() == 3);
  CHECK(d23.claimed_reflexive);
  CHECK(d23.module.ring()->nvars() == 6);
  CHECK_THROWS_AS(generic_determinantal(3, 2), PreconditionError);
}

TEST_CASE("generic_determinantal(2,3) is the ideal of maximal minors") {
  // Hilbert–Burch: coker of the generic 3×2 matrix is isomorphic to I_2(φ)
  // up to a shift, so its dual is free of rank one and it is not reflexive.
  auto d = generic_determinantal(2, 3);
  const auto& r = d.module.ring();
  std::vector<VectorPoly> minors;
  for (const auto& f : d.maximal_minors) minors.push_back(VectorPoly::from_entries(r, {f}));
  auto ideal = Subquotient(r, FreeModule{{0}}, minors, {2, 2, 2}, {}).module();
  auto shifted = hf_values(ideal, 2, 8);
  CHECK(hf_values(d.module, 0, 6) == shifted);
  CHECK(nu(dual(d.module).module()) == 1);
  CHECK_FALSE(is_reflexive(d.module));
  CHECK(is_reflexive(generic_determinantal(2, 4).module));
}

TEST_CASE("perfection and perfect syzygies") {
  auto r = make_ring({"x", "y", "z"});
  auto k = maximal_ideal_quotient(r);
  auto p = perfection(k);
  CHECK(p.grade == 3);
  CHECK(p.projective_dimension == 3);
  CHECK(p.perfect());
  auto e2 = perfect_syzygy(k, 2);
  CHECK(nu(e2) == 3);
  CHECK(hf_values(e2, 0, 6) == hf_values(koszul_cycles(3, 1, r->prime()), 0, 6));

  auto r2 = make_ring({"x", "y"});
  auto e1 = perfect_syzygy(maximal_ideal_quotient(r2), 1);
  CHECK(hf_values(e1, 0, 6) == hf_values(testing::ideal_module(r2, {"x", "y"}), 0, 6));

  auto notperfect = make_module(r, {0}, {{P(r, "x*y")}, {P(r, "x*z")}});
  CHECK_FALSE(perfection(notperfect).perfect());
  CHECK_THROWS_AS(perfect_syzygy(notperfect, 1), PreconditionError);
  CHECK_THROWS_AS(perfect_syzygy(k, 3), PreconditionError);
  CHECK_THROWS_AS(perfect_syzygy(k, 0), PreconditionError);
}

TEST_CASE("perfect syzygies of R/(x1..xn) are Koszul cycles") {
  for (std::size_t n = 2; n <= 5; ++n) {
    auto kc = koszul_complex(n);
    auto m = maximal_ideal_quotient(kc.ring);
    for (std::size_t k = 2; k < n; ++k) {
      CHECK(hf_values(perfect_syzygy(m, k), 0, n + 4) == hf_values(koszul_cycles(n, k - 1), 0, n + 4));
    }
    CHECK(nu(perfect_syzygy(m, 1)) == n);
  }
  auto m5 = maximal_ideal_quotient(koszul_ring(5));
  CHECK(nu(perfect_syzygy(m5, 2)) == 10);
}
