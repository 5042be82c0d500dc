#include <random>

#include "doctest.h"
#include "endoring/constructions.hpp"
#include "endoring/endoscope.hpp"
#include "endoring/errors.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace endoring;
using testing::cyclic;
using testing::hf_values;
using testing::P;

namespace {

Matrix mat(std::size_t n, std::initializer_list<Coeff> entries) {
  return Matrix::from_flat(n, n, DenseVector(entries));
}

Matrix unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m.at(i, j) = 1;
  return m;
}

FPModule free_module(const RingPtr& r, std::size_t n) { return FPModule::free(r, std::vector<int>(n, 0)); }

FPModule residue_field(const RingPtr& r) {
  std::vector<std::vector<Polynomial>> cols;
  for (std::size_t i = 0; i < r->nvars(); ++i) cols.push_back({Polynomial::variable(r, i)});
  return make_module(r, {0}, cols);
}

}  // namespace

TEST_CASE("dense linear algebra") {
  PrimeField F(7);
  auto a = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}, 3);
  CHECK(rank(F, a) == 2);
  auto ker = kernel(F, a);
  REQUIRE(ker.size() == 1);
  CHECK(apply(F, a, ker[0]) == DenseVector{0, 0, 0});
  auto x = solve(F, a, {6, 5, 2});
  REQUIRE(x);
  CHECK(apply(F, a, *x) == DenseVector{6, 5, 2});
  CHECK_FALSE(solve(F, a, {1, 0, 0}));

  Span s(F, 3);
  CHECK(s.insert({1, 1, 0}));
  CHECK(s.insert({0, 1, 1}));
  CHECK_FALSE(s.insert({1, 2, 1}));
  auto c = s.coordinates({2, 5, 3});
  REQUIRE(c);
  CHECK(*c == DenseVector{2, 3});
  CHECK_FALSE(s.coordinates({1, 0, 0}));
}

TEST_CASE("endomorphism algebras") {
  auto r = make_ring({"x", "y", "z"});
  EndAlgebra free2(free_module(r, 2));
  CHECK(free2.underlying().num_generators() == 4);
  CHECK(free2.underlying().is_free());
  CHECK(free2.verify_unit_law());

  auto r1 = make_ring({"x"});
  auto rx = cyclic(r1, {"x"});
  EndAlgebra lx(rx);
  CHECK(lx.underlying().num_generators() == 1);
  CHECK(hf_values(lx.underlying(), -2, 4) == hf_values(rx, -2, 4));
  CHECK(lx.verify_unit_law());

  auto z13 = koszul_cycles(3, 1);
  EndAlgebra l3(z13);
  CHECK(l3.verify_unit_law());
  for (int d = -2; d <= 2; ++d) {
    CHECK(hilbert_function(l3.underlying(), d, d).at(d) == static_cast<long>(oracle::hom_dim(z13, z13, d)));
  }
  // The identity coordinates multiply as a unit.
  for (std::size_t k = 0; k < l3.witnesses().size(); ++k) {
    auto unit = l3.underlying().unit(k);
    for (const auto& prod : {l3.product(l3.identity(), unit), l3.product(unit, l3.identity())}) {
      auto f = l3.hom().morphism(prod);
      const auto& w = l3.witnesses()[k];
      for (std::size_t j = 0; j < w.images().size(); ++j) CHECK(z13.is_zero_element(f.images()[j] - w.images()[j]));
    }
  }

  auto z15 = koszul_cycles(5, 1);
  EndAlgebra l5(z15);
  auto nu_end = l5.underlying().num_generators();
  CHECK(nu_end <= 10 * nu(dual(z15).module()) + 1);
  CHECK(nu_end <= 51);
  CHECK(l5.verify_unit_law());
  CHECK(hilbert_function(l5.underlying(), 0, 0).at(0) == static_cast<long>(oracle::hom_dim(z15, z15, 0)));
}

TEST_CASE("radical subideals J0 and J1") {
  auto r = make_ring({"x", "y"});
  EndAlgebra free2(free_module(r, 2));
  auto j0f = j0(free2);
  auto j1f = j1(free2);
  auto hl = hf_values(free2.underlying(), 0, 3);
  CHECK(hf_values(j1f.module, 0, 3) == hl);
  auto hj0 = hf_values(j0f.module, 0, 3);
  CHECK(hj0[0] == 0);
  for (std::size_t d = 1; d < hl.size(); ++d) CHECK(hj0[d] == hl[d]);
  CHECK_FALSE(contained_in(j1f, j0f));
  CHECK(contained_in(j0f, j1f));

  auto z13 = koszul_cycles(3, 1);
  REQUIRE_FALSE(has_free_summand(z13));
  EndAlgebra l3(z13);
  auto a = j1(l3);
  auto b = j0(l3);
  CHECK(contained_in(a, b));

  auto r1 = make_ring({"x"});
  EndAlgebra lx(cyclic(r1, {"x"}));
  auto j = j0(lx);
  CHECK(hilbert_function(lx.underlying(), -1, 3).total() - hilbert_function(j.module, -1, 3).total() == 1);
}

TEST_CASE("bar algebras") {
  auto r = make_ring({"x", "y"});
  const PrimeField& F = r->field();
  auto b2 = bar_algebra(EndAlgebra(free_module(r, 2)));
  CHECK(b2.dim() == 4);
  CHECK(b2.contains_identity);

  auto mixed = direct_sum(FPModule::free(r, {0}), cyclic(r, {"x"}));
  auto bm = bar_algebra(EndAlgebra(mixed));
  CHECK(bm.dim() == 3);
  Span s(F, 4);
  for (const auto& m : bm.basis) s.insert(m.flat());
  CHECK(s.contains(unit_matrix(2, 1, 0).flat()));
  CHECK(s.contains(unit_matrix(2, 0, 0).flat()));
  CHECK(s.contains(unit_matrix(2, 1, 1).flat()));
  CHECK_FALSE(s.contains(unit_matrix(2, 0, 1).flat()));

  CHECK(bar_algebra(EndAlgebra(cyclic(r, {"x"}))).dim() == 1);
}

TEST_CASE("finite-dimensional radicals and blocks") {
  PrimeField F;
  auto m2 = matrix_algebra(F, 2, {unit_matrix(2, 0, 1), unit_matrix(2, 1, 0)});
  CHECK(m2.dim() == 4);
  CHECK(fd_radical(F, m2).empty());
  CHECK(simple_blocks(F, m2, {}).num_blocks == 1);

  auto lower = matrix_algebra(F, 2, {unit_matrix(2, 1, 0), unit_matrix(2, 0, 0)});
  CHECK(lower.dim() == 3);
  auto rad = fd_radical(F, lower);
  REQUIRE(rad.size() == 1);
  CHECK(rad[0].at(0, 0) == 0);
  CHECK(rad[0].at(0, 1) == 0);
  CHECK(rad[0].at(1, 1) == 0);
  CHECK(rad[0].at(1, 0) != 0);
  auto blocks = simple_blocks(F, lower, rad);
  CHECK(blocks.num_blocks == 2);
  CHECK(blocks.block_dims == std::vector<std::size_t>{1, 1});

  auto jordan = matrix_algebra(F, 2, {unit_matrix(2, 0, 1)});
  CHECK(jordan.dim() == 2);
  CHECK(fd_radical(F, jordan).size() == 1);
  CHECK(radical_profile(F, jordan).is_local);

  auto diag = matrix_algebra(F, 2, {unit_matrix(2, 0, 0)});
  CHECK(simple_blocks(F, diag, fd_radical(F, diag)).num_blocks == 2);

  // F_{p^2} as the span of 1 and a companion matrix of t² − 2 (2 is a non-square mod 32003
  // exactly when 32003 ≡ ±3 mod 8; 32003 ≡ 3 mod 8).
  auto field = matrix_algebra(F, 2, {mat(2, {0, 2, 1, 0})});
  auto pf = radical_profile(F, field);
  CHECK(pf.dim_bar == 2);
  CHECK(pf.num_blocks == 1);
  CHECK(pf.block_dims == std::vector<std::size_t>{2});
  // F_p × F_{p^2} in block-diagonal 3×3 form.
  auto prod = matrix_algebra(F, 3, {mat(3, {1, 0, 0, 0, 0, 0, 0, 0, 0}), mat(3, {0, 0, 0, 0, 0, 2, 0, 1, 0})});
  auto pp = radical_profile(F, prod);
  CHECK(pp.num_blocks == 2);
  CHECK(pp.block_dims == std::vector<std::size_t>{1, 2});
  CHECK(pp.dim_radical == 0);

  PrimeField small(3);
  auto m2small = matrix_algebra(small, 2, {unit_matrix(2, 0, 1), unit_matrix(2, 1, 0)});
  CHECK_THROWS_AS(fd_radical(small, m2small), PreconditionError);
}

TEST_CASE("locality") {
  auto r = make_ring({"x", "y", "z"});
  for (std::size_t n = 1; n <= 3; ++n) {
    auto p = is_local_module(free_module(r, n));
    CHECK(p.is_local);
    CHECK(p.dim_bar == n * n);
    CHECK(p.dim_radical == 0);
  }
  auto mixed = is_local_module(direct_sum(FPModule::free(r, {0}), cyclic(r, {"x"})));
  CHECK_FALSE(mixed.is_local);
  CHECK(mixed.num_blocks == 2);
  CHECK(mixed.dim_radical == 1);
  CHECK_FALSE(is_local_module(direct_sum(cyclic(r, {"x"}), cyclic(r, {"y"}))).is_local);
  CHECK(is_local_module(koszul_cycles(3, 1)).is_local);
  CHECK(is_local_module(koszul_cycles(5, 1)).is_local);
  CHECK(is_local_module(one_relation_module({P(r, "x"), P(r, "y"), P(r, "z")}).module).is_local);
  CHECK_THROWS_AS(is_local_module(FPModule::zero(r)), PreconditionError);
  auto collapsing = make_module(r, {0}, {{Polynomial::constant(r, 1)}});
  CHECK_THROWS_AS(is_local_module(collapsing), PreconditionError);
}

TEST_CASE("small maps and transition conditions") {
  auto r = make_ring({"x", "y"});
  auto rr = FPModule::free(r, {0});
  CHECK(is_small(ModuleMorphism::zero(rr, rr)));
  CHECK_FALSE(is_small(ModuleMorphism::identity(rr)));
  CHECK(is_small(ModuleMorphism(rr, rr, {testing::V(r, {"x"})}, 1)));

  auto t = check_transition(cyclic(r, {"x"}), cyclic(r, {"y"}));
  CHECK(t.holds);
  CHECK(t.pairs_checked == 0);
  auto bad = check_transition(rr, rr);
  CHECK_FALSE(bad.holds);
  CHECK_FALSE(bad.failure.empty());
}

TEST_CASE("radical block profiles") {
  auto r = make_ring({"x", "y", "z"});
  auto rr = FPModule::free(r, {0});
  auto p = radical_block_profile(rr, cyclic(r, {"x"}));
  CHECK(p.applicable);
  CHECK(p.pass());
  CHECK(p.spans_radical);
  REQUIRE(p.blocks.size() == 4);
  CHECK(p.blocks[2].name == "Hom(E1,E2)");
  CHECK(p.blocks[2].bar_dim == 1);
  CHECK(p.blocks[1].bar_dim == 0);
  CHECK(p.profile.dim_radical == 1);

  auto same = radical_block_profile(rr, rr);
  CHECK_FALSE(same.applicable);
  CHECK_FALSE(same.pass());

  auto q = radical_block_profile(koszul_cycles(3, 1, r->prime()), residue_field(koszul_ring(3)));
  CHECK(q.applicable);
  CHECK(q.pass());
}

TEST_CASE("endomorphism traces") {
  auto z13 = koszul_cycles(3, 1);
  const PrimeField& F = z13.ring()->field();
  EndAlgebra l(z13);
  auto id = ModuleMorphism::identity(l.module());
  CHECK(endomorphism_trace(id) == 2);
  CHECK(endomorphism_trace(ModuleMorphism::zero(l.module(), l.module())) == 0);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Coeff> coeff(0, F.prime() - 1);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = l.random_element(0, rng());
    auto g = l.random_element(0, rng());
    CHECK(endomorphism_trace(compose(f, g)) == endomorphism_trace(compose(g, f)));
    Coeff a = coeff(rng);
    Coeff b = coeff(rng);
    auto lin = add(scale(f, Polynomial::constant(z13.ring(), a)), scale(g, Polynomial::constant(z13.ring(), b)));
    CHECK(endomorphism_trace(lin) ==
          F.add(F.mul(a, endomorphism_trace(f)), F.mul(b, endomorphism_trace(g))));
  }

  auto r = make_ring({"x", "y"});
  auto free2 = FPModule::free(r, {0, 0});
  auto c = ModuleMorphism(free2, free2, {testing::V(r, {"3", "0"}), testing::V(r, {"1", "3"})}, 0);
  CHECK(endomorphism_trace(c) == 6);
  auto rx = cyclic(r, {"x"});
  CHECK(endomorphism_trace(ModuleMorphism::identity(rx)) == 0);
  // Mixed degrees: a degree-one map has trace zero by degree reasons.
  auto mixed = FPModule::free(r, {0, 1});
  CHECK(endomorphism_trace(ModuleMorphism(mixed, mixed, {testing::V(r, {"0", "1"}), testing::V(r, {"0", "0"})}, 1)) == 0);
  CHECK(endomorphism_trace(ModuleMorphism::identity(mixed)) == 2);
  // A non-minimal presentation of R/(x) ⊕ R.
  auto padded = make_module(r, {0, 0, 0}, {{P(r, "1"), P(r, "0"), P(r, "-1")}, {P(r, "x"), P(r, "0"), P(r, "0")}});
  CHECK(endomorphism_trace(ModuleMorphism::identity(padded)) == 1);
}

TEST_CASE("sequence (2.3)-type comparisons") {
  auto r = make_ring({"x", "y", "z"});
  auto f = verify_ausbr0(FPModule::free(r, {0, 1}));
  CHECK(f.pass());
  CHECK(f.spots.at(0).left.total() == 0);

  for (std::size_t i : {1, 2}) {
    auto rep = verify_ausbr0(koszul_cycles(5, i));
    CHECK(rep.status == "pass");
    CHECK(rep.spots.at(0).left.total() == 1);
  }
  auto orm = verify_ausbr0(one_relation_module({P(r, "x"), P(r, "y"), P(r, "z")}).module);
  CHECK(orm.pass());
  CHECK(orm.spots.at(0).left.total() == 1);
}

TEST_CASE("Auslander dual sequences") {
  auto r = make_ring({"x", "y", "z"});
  auto free2 = FPModule::free(r, {0, 2});
  auto rep = verify_adual(free2, cyclic(r, {"x", "y^2"}));
  CHECK(rep.pass());
  for (const auto& s : rep.spots) CHECK(s.left.total() == 0);

  auto r1 = make_ring({"x"});
  auto rx = cyclic(r1, {"x"});
  auto a = verify_adual(rx, rx);
  CHECK(a.pass());
  CHECK(a.spots.at(0).right == hilbert_function(tor(auslander_dual(rx), rx, 2), a.spots[0].right.lo, a.spots[0].right.hi));
  CHECK(a.spots.at(1).left.total() == 1);

  auto z13 = koszul_cycles(3, 1);
  CHECK(verify_adual(z13, residue_field(z13.ring())).pass());

  // A deliberately wrong window still compares equal sides honestly.
  auto narrow = verify_adual(rx, rx, DegreeWindow{5, 6});
  CHECK(narrow.pass());
}

TEST_CASE("perfect syzygy sequences") {
  auto r = make_ring({"x", "y", "z"});
  auto m = residue_field(r);
  auto rep = verify_perfect_syzygy_sequence(m, 2);
  CHECK(rep.status == "pass");
  CHECK(rep.spots.at(1).left.total() == 1);

  auto r4 = koszul_ring(4);
  CHECK(verify_perfect_syzygy_sequence(residue_field(r4), 2).status == "pass");

  auto r2 = make_ring({"x", "y"});
  auto e1 = verify_perfect_syzygy_sequence(residue_field(r2), 1);
  CHECK(e1.status == "pass");
  CHECK(e1.spots.at(1).right == hilbert_function(cyclic(r2, {"x", "y"}), e1.spots[1].right.lo, e1.spots[1].right.hi));

  auto skipped = verify_perfect_syzygy_sequence(m, 3);
  CHECK(skipped.status == "skipped");
  CHECK(skipped.pass());
  CHECK_FALSE(skipped.note.empty());
  CHECK(verify_perfect_syzygy_sequence(make_module(r, {0}, {{P(r, "x*y")}, {P(r, "x*z")}}), 1).status == "skipped");
}

TEST_CASE("generator bounds") {
  auto r = make_ring({"x", "y", "z"});
  auto free1 = generator_bound_report(FPModule::free(r, {0}));
  CHECK(free1.nu_end == 1);
  CHECK(free1.upper == 2);
  CHECK(free1.pass());

  auto orm = one_relation_module({P(r, "x"), P(r, "y"), P(r, "z")});
  BoundContext ctx;
  ctx.one_relation_ideal = orm.ideal;
  auto rep = generator_bound_report(orm.module, ctx);
  REQUIRE(rep.one_relation);
  CHECK(rep.one_relation->beta0 == 3);
  CHECK(rep.one_relation->beta1 == 3);
  CHECK(rep.one_relation->lower == 7);
  CHECK(rep.one_relation->upper == 10);
  CHECK(rep.nu_end >= 7);
  CHECK(rep.nu_end <= 10);
  CHECK(rep.pass());

  auto det = generic_determinantal(2, 3);
  BoundContext dctx;
  dctx.determinantal = std::make_pair(std::size_t{2}, std::size_t{3});
  auto drep = generator_bound_report(det.module, dctx);
  REQUIRE(drep.determinantal);
  CHECK(drep.determinantal->formula == 3);
  CHECK(drep.upper_holds);

  // Two cyclic summands with disjoint annihilators: End has two generators but the dual vanishes.
  auto split = generator_bound_report(direct_sum(cyclic(r, {"x"}), cyclic(r, {"y"})));
  CHECK(split.nu_dual == 0);
  CHECK(split.nu_end == 2);
  CHECK_FALSE(split.upper_holds);
}
