#include "doctest.h"
#include "endoring/errors.hpp"
#include "groebner_properties.hpp"

using namespace endoring;
using testing::P;
using testing::V;

namespace {
FreeModule R1() { return FreeModule{{0}}; }
}  // namespace

TEST_CASE("single generator with a weighted variable") {
  auto r = make_ring({"x", "y"}, PrimeField::kDefaultPrime, {1, 2});
  GroebnerBasis gb(r, R1(), {V(r, {"x^2 - y"})});
  REQUIRE(gb.elements().size() == 1);
  CHECK(gb.elements()[0] == V(r, {"x^2 - y"}));
  CHECK(gb.spair_count() == 0);
}

TEST_CASE("inhomogeneous input is rejected") {
  auto r = make_ring({"x", "y"});
  CHECK_THROWS_AS(GroebnerBasis(r, R1(), {V(r, {"x^2 - y"})}), InhomogeneousError);
}

TEST_CASE("coprime leading terms") {
  auto r = make_ring({"x", "y"});
  GroebnerBasis gb(r, R1(), {V(r, {"x"}), V(r, {"y"})});
  REQUIRE(gb.elements().size() == 2);
  CHECK(gb.elements()[0] == V(r, {"x"}));
  CHECK(gb.elements()[1] == V(r, {"y"}));
}

TEST_CASE("x^2+xy, xy+y^2 against the degreewise oracle") {
  auto r = make_ring({"x", "y"});
  std::vector<VectorPoly> gens{V(r, {"x^2 + x*y"}), V(r, {"x*y + y^2"})};
  GroebnerBasis gb(r, R1(), gens);
  CHECK(gb.contains(gens[0]));
  CHECK(gb.contains(gens[1]));
  CHECK_FALSE(gb.contains(V(r, {"x^3"})));
  CHECK_FALSE(gb.contains(V(r, {"y^3"})));
  CHECK_FALSE(oracle::in_span(r, R1(), gens, V(r, {"x^3"})));
  CHECK_FALSE(oracle::in_span(r, R1(), gens, V(r, {"y^3"})));
  // (x + y)·x·... : x^2 y + x y^2 = y(x^2 + xy) lies in the ideal.
  CHECK(gb.contains(V(r, {"x^2*y + x*y^2"})));
  for (int d = 0; d <= 4; ++d) {
    CHECK(testing::standard_count(r, R1(), gb, d) == oracle::quotient_dim(r, R1(), gens, d));
  }
}

TEST_CASE("normal form examples") {
  auto r = make_ring({"x", "y", "w"});
  GroebnerBasis gb(r, R1(), {V(r, {"x^2 - y*w"})});
  CHECK(gb.normal_form(VectorPoly(r, 1)).is_zero());
  CHECK(gb.normal_form(V(r, {"x^2 - y*w"})).is_zero());
  CHECK(gb.normal_form(V(r, {"x^2*y"})) == V(r, {"y^2*w"}));
  auto other = make_ring({"x"});
  CHECK_THROWS_AS(gb.normal_form(V(other, {"x"})), RingMismatch);
  CHECK_THROWS_AS(gb.normal_form(V(r, {"x", "y"})), RingMismatch);
}

TEST_CASE("membership certificates") {
  auto r = make_ring({"x", "y"});
  std::vector<VectorPoly> gens{V(r, {"x", "y^2"}), V(r, {"y", "0"})};
  FreeModule F{{1, 0}};
  GroebnerBasis gb(r, F, gens);
  auto c0 = gb.membership(gens[0]);
  CHECK(c0.member());
  CHECK(testing::combine(r, 2, c0.coefficients, gb.elements()) == gens[0]);

  auto v = gens[0].mul_term(r->variable(0), 1) + gens[1].mul_term(r->variable(1), 1);
  auto cv = gb.membership(v);
  CHECK(cv.member());
  CHECK(testing::combine(r, 2, cv.coefficients, gb.elements()) == v);

  GroebnerBasis ideal(r, R1(), {V(r, {"x"}), V(r, {"y"})});
  auto c1 = ideal.membership(V(r, {"1"}));
  CHECK_FALSE(c1.member());
  CHECK(c1.remainder == V(r, {"1"}));
}

TEST_CASE("syzygies of (x, y)") {
  auto r = make_ring({"x", "y"});
  std::vector<VectorPoly> gens{V(r, {"x"}), V(r, {"y"})};
  auto syz = syzygy_basis(r, R1(), gens);
  REQUIRE(syz.size() == 1);
  CHECK((syz[0] == V(r, {"y", "-x"}) || syz[0] == V(r, {"-y", "x"})));
}

TEST_CASE("a nonzerodivisor has no syzygies") {
  auto r = make_ring({"x", "y"});
  CHECK(syzygy_basis(r, R1(), {V(r, {"x"})}).empty());
}

TEST_CASE("syzygies of (x, y, z) are the Koszul relations") {
  auto r = make_ring({"x", "y", "z"});
  std::vector<VectorPoly> gens{V(r, {"x"}), V(r, {"y"}), V(r, {"z"})};
  auto syz = syzygy_basis(r, R1(), gens);
  FreeModule G{{1, 1, 1}};
  for (const auto& s : syz) CHECK(testing::combine(r, 1, s.entries(), gens).is_zero());
  auto mins = minimal_generators(r, G, syz);
  CHECK(mins.size() == 3);
  std::vector<VectorPoly> koszul{V(r, {"y", "-x", "0"}), V(r, {"z", "0", "-x"}), V(r, {"0", "z", "-y"})};
  for (const auto& k : koszul) CHECK(oracle::in_span(r, G, syz, k));
  for (int d = 0; d <= 4; ++d) {
    CHECK(oracle::span_dim(r, G, syz, d) == oracle::syzygy_dim(r, R1(), gens, {1, 1, 1}, d));
  }
}

TEST_CASE("zero generators need explicit degrees") {
  auto r = make_ring({"x", "y"});
  std::vector<VectorPoly> gens{V(r, {"x"}), VectorPoly(r, 1)};
  auto syz = syzygy_basis(r, R1(), gens, std::vector<int>{1, 3});
  REQUIRE(syz.size() == 1);
  CHECK(syz[0] == VectorPoly::unit(r, 2, 1));
}

TEST_CASE("untracked generators: syzygies and lifts modulo them") {
  auto r = make_ring({"x", "y"});
  // Modulo (y), the syzygies of (x) are the multiples of y.
  GroebnerBasis gb(r, R1(), {V(r, {"x"})}, {V(r, {"y"})}, GroebnerBasis::Options{true, std::nullopt});
  REQUIRE(gb.syzygies().size() == 1);
  CHECK((gb.syzygies()[0] == V(r, {"y"}) || gb.syzygies()[0] == V(r, {"-y"})));
  auto lift = gb.lift(V(r, {"x^2 + x*y + y^2"}));
  REQUIRE(lift.has_value());
  CHECK(oracle::in_span(r, R1(), {V(r, {"y"})}, V(r, {"x^2 + x*y + y^2"}) - V(r, {"x"}) * (*lift)[0]));
  CHECK_FALSE(gb.lift(V(r, {"1"})).has_value());
}

TEST_CASE("determinism: identical inputs give identical bases") {
  auto r = make_ring({"x", "y", "z"});
  std::vector<VectorPoly> gens{V(r, {"x^2 + y*z"}), V(r, {"x*y - z^2"}), V(r, {"y^3 + x*z^2"})};
  GroebnerBasis a(r, R1(), gens), b(r, R1(), gens);
  REQUIRE(a.elements().size() == b.elements().size());
  for (std::size_t i = 0; i < a.elements().size(); ++i) CHECK(a.elements()[i] == b.elements()[i]);
  CHECK(a.spair_count() == b.spair_count());
}

TEST_CASE("randomized property suite") {
  auto st = testing::run_groebner_properties(20240601, 1000);
  for (const auto& m : st.messages) MESSAGE(m);
  CHECK(st.cases == 1000);
  CHECK(st.failures == 0);
}
