#include "endoring/endoscope.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "endoring/constructions.hpp"
#include "endoring/errors.hpp"
#include "endoring/univariate.hpp"

namespace endoring {

namespace {

FPModule minimal(const FPModule& e) { return minimalize(e).module; }

/// f and g agree modulo the relations of their common target.
bool same_morphism(const ModuleMorphism& f, const ModuleMorphism& g) {
  if (f.images().size() != g.images().size()) return false;
  for (std::size_t j = 0; j < f.images().size(); ++j) {
    if (!f.target().is_zero_element(f.images()[j] - g.images()[j])) return false;
  }
  return true;
}

Matrix flat_matrix(std::size_t n, const DenseVector& v) { return Matrix::from_flat(n, n, v); }

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Λ = End(E)

EndAlgebra::EndAlgebra(const FPModule& e)
    : hom_([&] {
        FPModule m = minimal(e);
        return HomModule(m, m);
      }()),
      identity_(hom_.coordinates(ModuleMorphism::identity(hom_.source()))) {}

VectorPoly EndAlgebra::product(const VectorPoly& f, const VectorPoly& g) const {
  return hom_.coordinates(compose(hom_.morphism(f), hom_.morphism(g)));
}

bool EndAlgebra::verify_unit_law() const {
  auto id = hom_.morphism(identity_);
  if (!same_morphism(id, ModuleMorphism::identity(module()))) return false;
  for (const auto& w : witnesses()) {
    if (!same_morphism(compose(id, w), w) || !same_morphism(compose(w, id), w)) return false;
  }
  return true;
}

ModuleMorphism EndAlgebra::random_element(int degree, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  const RingPtr& ring = module().ring();
  const PrimeField& F = ring->field();
  std::uniform_int_distribution<Coeff> coeff(0, F.prime() - 1);
  std::vector<VectorPoly> images(module().num_generators(), module().zero_vector());
  for (const auto& w : witnesses()) {
    if (w.shift() > degree) continue;
    std::vector<Term> terms;
    for (const auto& m : ring->monomials_of_degree(degree - w.shift())) terms.push_back({m, coeff(rng)});
    Polynomial c = Polynomial::from_terms(ring, std::move(terms));
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < images.size(); ++j) images[j] += w.images()[j] * c;
  }
  for (auto& v : images) v = module().normal_form(v);
  return ModuleMorphism::unchecked(module(), module(), std::move(images), degree);
}

EndAlgebra end_algebra(const FPModule& e) { return EndAlgebra(e); }

// ---------------------------------------------------------------------------
// Radical subideals

Embedding j0(const EndAlgebra& lambda) {
  const FPModule& e = lambda.module();
  FPModule bar = reduction_mod_max(e);
  HomModule to_bar(e, bar);
  std::vector<VectorPoly> images;
  for (const auto& w : lambda.witnesses()) {
    images.push_back(to_bar.coordinates(ModuleMorphism::unchecked(e, bar, w.images(), w.shift())));
  }
  return kernel_of(ModuleMorphism(lambda.underlying(), to_bar.module(), std::move(images), 0));
}

Embedding j1(const EndAlgebra& lambda) { return image_of(natural_hom_map(lambda.hom()).map); }

bool contained_in(const Embedding& sub, const Embedding& super) {
  const FPModule& amb = super.inclusion.target();
  std::vector<VectorPoly> gens;
  for (const auto& v : super.inclusion.images()) {
    if (!v.is_zero()) gens.push_back(v);
  }
  GroebnerBasis gb(amb.ring(), amb.ambient(), std::move(gens), amb.relations(), GroebnerBasis::Options{});
  for (const auto& v : sub.inclusion.images()) {
    if (!gb.contains(v)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Bar algebra

Matrix constant_part(const ModuleMorphism& f) {
  Matrix m(f.target().num_generators(), f.source().num_generators());
  for (std::size_t j = 0; j < f.images().size(); ++j) {
    for (const auto& t : f.images()[j].terms()) {
      if (t.mono.is_one()) m.at(t.pos, j) = t.coeff;
    }
  }
  return m;
}

BarAlgebra matrix_algebra(const PrimeField& F, std::size_t n, const std::vector<Matrix>& gens, bool with_identity) {
  Span span(F, n * n);
  if (with_identity && n > 0) span.insert(Matrix::identity(n).flat());
  for (const auto& g : gens) {
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("generator is not an n×n matrix");
    span.insert(g.flat());
  }
  // Close under products; every new element is multiplied against the whole basis.
  for (std::size_t i = 0; i < span.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Matrix a = flat_matrix(n, span.basis()[i]);
      Matrix b = flat_matrix(n, span.basis()[j]);
      span.insert(multiply(F, a, b).flat());
      span.insert(multiply(F, b, a).flat());
    }
  }
  BarAlgebra out;
  out.n = n;
  for (const auto& v : span.basis()) out.basis.push_back(flat_matrix(n, v));
  out.contains_identity = n > 0 && span.contains(Matrix::identity(n).flat());
  return out;
}

BarAlgebra bar_algebra(const EndAlgebra& lambda) {
  const FPModule& e = lambda.module();
  if (!e.is_minimal()) throw PreconditionError("bar algebra needs a minimal presentation");
  const PrimeField& F = e.ring()->field();
  const std::size_t n = e.num_generators();
  Span span(F, n * n);
  for (const auto& w : lambda.witnesses()) span.insert(constant_part(w).flat());
  for (std::size_t i = 0; i < span.size(); ++i) {
    for (std::size_t j = 0; j < span.size(); ++j) {
      auto prod = multiply(F, flat_matrix(n, span.basis()[i]), flat_matrix(n, span.basis()[j]));
      if (!span.contains(prod.flat())) throw InternalError("constant parts of End(E) are not closed under products");
    }
  }
  BarAlgebra out;
  out.n = n;
  for (const auto& v : span.basis()) out.basis.push_back(flat_matrix(n, v));
  out.contains_identity = n == 0 || span.contains(Matrix::identity(n).flat());
  if (!out.contains_identity) throw InternalError("identity of E has no constant part in End(E)");
  return out;
}

// ---------------------------------------------------------------------------
// Radical and blocks

namespace {

/// A finite-dimensional algebra given by a basis of matrices, with coordinates.
struct AlgebraCoords {
  const PrimeField& F;
  std::size_t n;
  Span span;

  AlgebraCoords(const PrimeField& field, const BarAlgebra& a) : F(field), n(a.n), span(field, a.n * a.n) {
    for (const auto& m : a.basis) span.insert(m.flat());
  }

  DenseVector coords(const Matrix& m) const {
    auto c = span.coordinates(m.flat());
    if (!c) throw InternalError("product left the algebra");
    return *c;
  }
  Matrix element(const DenseVector& x) const {
    Matrix m(n, n);
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k]) m = add(F, m, scale(F, flat_matrix(n, span.basis()[k]), x[k]));
    }
    return m;
  }
};

std::vector<Matrix> span_products(const PrimeField& F, std::size_t n, const std::vector<Matrix>& a,
                                  const std::vector<Matrix>& b) {
  Span span(F, n * n);
  for (const auto& x : a) {
    for (const auto& y : b) span.insert(multiply(F, x, y).flat());
  }
  std::vector<Matrix> out;
  for (const auto& v : span.basis()) out.push_back(flat_matrix(n, v));
  return out;
}

}  // namespace

std::vector<Matrix> fd_radical(const PrimeField& F, const BarAlgebra& a) {
  const std::size_t d = a.dim();
  if (d == 0) return {};
  if (F.prime() <= d) {
    throw PreconditionError("trace-form radical needs p > dim A = " + std::to_string(d) + "; raise the prime");
  }
  AlgebraCoords alg(F, a);
  // c[i][j] = coordinates of a_i a_j
  std::vector<std::vector<DenseVector>> c(d, std::vector<DenseVector>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) c[i][j] = alg.coords(multiply(F, a.basis[i], a.basis[j]));
  }
  // tr(L_{a_k}) = Σ_j coefficient of a_j in a_k a_j
  DenseVector tr(d, 0);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t j = 0; j < d; ++j) tr[k] = F.add(tr[k], c[k][j][j]);
  }
  Matrix form(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Coeff t = 0;
      for (std::size_t k = 0; k < d; ++k) t = F.add(t, F.mul(c[i][j][k], tr[k]));
      form.at(i, j) = t;
    }
  }
  std::vector<Matrix> rad;
  for (const auto& x : kernel(F, form)) rad.push_back(alg.element(x));

  Span rad_span(F, a.n * a.n);
  for (const auto& r : rad) rad_span.insert(r.flat());
  for (const auto& r : rad) {
    for (const auto& b : a.basis) {
      if (!rad_span.contains(multiply(F, r, b).flat()) || !rad_span.contains(multiply(F, b, r).flat())) {
        throw InternalError("trace-form kernel is not a two-sided ideal");
      }
    }
  }
  auto power = rad;
  for (std::size_t step = 0; !power.empty(); ++step) {
    if (step > d) throw InternalError("trace-form kernel is not nilpotent");
    power = span_products(F, a.n, power, rad);
  }
  return rad;
}

namespace {

/// The semisimple quotient S = A / rad in coordinates over a complement basis.
struct Semisimple {
  const PrimeField& F;
  std::size_t s = 0;
  std::vector<std::vector<DenseVector>> table;  // table[i][j] = q_i q_j
  DenseVector one;

  DenseVector mul(const DenseVector& x, const DenseVector& y) const {
    DenseVector out(s, 0);
    for (std::size_t i = 0; i < s; ++i) {
      if (!x[i]) continue;
      for (std::size_t j = 0; j < s; ++j) {
        if (!y[j]) continue;
        Coeff f = F.mul(x[i], y[j]);
        for (std::size_t k = 0; k < s; ++k) out[k] = F.add(out[k], F.mul(f, table[i][j][k]));
      }
    }
    return out;
  }
  DenseVector pow(DenseVector x, std::uint64_t e) const {
    DenseVector r = one;
    while (e) {
      if (e & 1U) r = mul(r, x);
      x = mul(x, x);
      e >>= 1U;
    }
    return r;
  }
  DenseVector combine(Coeff a, const DenseVector& x, Coeff b, const DenseVector& y) const {
    DenseVector out(s);
    for (std::size_t k = 0; k < s; ++k) out[k] = F.add(F.mul(a, x[k]), F.mul(b, y[k]));
    return out;
  }
  /// p(x) with the constant term taken as a multiple of `unit`.
  DenseVector evaluate(const UPoly& p, const DenseVector& x, const DenseVector& unit) const {
    DenseVector acc(s, 0);
    for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = combine(1, mul(acc, x), p[k], unit);
    return acc;
  }
};

UPoly to_upoly(const Polynomial& f) {
  std::vector<Coeff> c(static_cast<std::size_t>(f.total_degree()) + 1, 0);
  for (const auto& t : f.terms()) c[static_cast<std::size_t>(t.mono.degree)] = t.coeff;
  return UPoly(std::move(c));
}

Polynomial from_upoly(const RingPtr& ring, const UPoly& u) {
  std::vector<Term> terms;
  Monomial m = ring->one();
  for (std::size_t k = 0; k < u.coeffs().size(); ++k) {
    if (u[k]) terms.push_back({m, u[k]});
    m = m * ring->variable(0);
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace

BlockDecomposition simple_blocks(const PrimeField& F, const BarAlgebra& a, const std::vector<Matrix>& radical) {
  BlockDecomposition out;
  const std::size_t nn = a.n * a.n;
  Span all(F, nn);
  for (const auto& r : radical) all.insert(r.flat());
  const std::size_t r = all.size();
  std::vector<Matrix> complement;
  for (const auto& b : a.basis) {
    if (all.insert(b.flat())) complement.push_back(b);
  }
  Semisimple S{F, 0, {}, {}};
  S.s = complement.size();
  if (S.s == 0) return out;
  if (!a.contains_identity) throw PreconditionError("block decomposition needs a unital algebra");
  auto project = [&](const Matrix& m) {
    auto c = all.coordinates(m.flat());
    if (!c) throw InternalError("element left the algebra");
    return DenseVector(c->begin() + static_cast<std::ptrdiff_t>(r), c->end());
  };
  S.table.assign(S.s, std::vector<DenseVector>(S.s));
  for (std::size_t i = 0; i < S.s; ++i) {
    for (std::size_t j = 0; j < S.s; ++j) S.table[i][j] = project(multiply(F, complement[i], complement[j]));
  }
  S.one = project(Matrix::identity(a.n));

  // Center: Σ y_j (q_j q_i − q_i q_j) = 0 for every i.
  Matrix eq(S.s * S.s, S.s);
  for (std::size_t i = 0; i < S.s; ++i) {
    for (std::size_t j = 0; j < S.s; ++j) {
      for (std::size_t k = 0; k < S.s; ++k) eq.at(i * S.s + k, j) = F.sub(S.table[j][i][k], S.table[i][j][k]);
    }
  }
  auto center = kernel(F, eq);

  // Frobenius-fixed part of the center: a product of copies of F_p, one per block.
  Span zspan(F, S.s);
  for (const auto& z : center) zspan.insert(z);
  Matrix frob(center.size(), center.size());
  for (std::size_t j = 0; j < center.size(); ++j) {
    auto c = zspan.coordinates(S.pow(center[j], F.prime()));
    if (!c) throw InternalError("Frobenius left the center");
    for (std::size_t i = 0; i < center.size(); ++i) frob.at(i, j) = F.sub((*c)[i], i == j ? 1 : 0);
  }
  std::vector<DenseVector> split;
  for (const auto& x : kernel(F, frob)) {
    DenseVector z(S.s, 0);
    for (std::size_t k = 0; k < x.size(); ++k) z = S.combine(1, z, x[k], center[k]);
    split.push_back(std::move(z));
  }

  auto ring = make_ring({"t"}, F.prime());
  std::vector<DenseVector> leaves;
  std::function<void(const DenseVector&)> refine = [&](const DenseVector& e) {
    Span local(F, S.s);
    local.insert(e);
    std::optional<DenseVector> b;
    for (const auto& z : split) {
      auto ez = S.mul(e, z);
      if (local.insert(ez) && !b) b = ez;
    }
    if (!b) {
      leaves.push_back(e);
      return;
    }
    // Minimal polynomial of b inside eZ, whose unit is e.
    Span powers(F, S.s);
    std::vector<DenseVector> pw{e};
    powers.insert(e);
    std::vector<Coeff> minpoly;
    for (;;) {
      DenseVector next = S.mul(pw.back(), *b);
      auto c = powers.coordinates(next);
      if (c) {
        for (Coeff x : *c) minpoly.push_back(F.neg(x));
        minpoly.push_back(1);
        break;
      }
      powers.insert(next);
      pw.push_back(std::move(next));
    }
    UPoly m(minpoly);
    auto factors = factor_univariate(from_upoly(ring, m));
    if (factors.size() < 2) throw InternalError("split element has an irreducible minimal polynomial");
    for (const auto& f : factors) {
      if (f.multiplicity != 1) throw InternalError("minimal polynomial in a semisimple algebra is not squarefree");
      UPoly fi = to_upoly(f.factor);
      UPoly gi = divmod(F, m, fi).first;
      auto eg = ext_gcd(F, gi, fi);  // s·gi + t·fi = 1
      UPoly h = mod(F, mul(F, eg.s, gi), m);
      refine(S.evaluate(h, *b, e));
    }
  };
  refine(S.one);
  if (leaves.size() != split.size()) throw InternalError("idempotent splitting disagrees with the Frobenius count");

  out.num_blocks = leaves.size();
  for (const auto& e : leaves) {
    Span block(F, S.s);
    for (std::size_t i = 0; i < S.s; ++i) {
      DenseVector q(S.s, 0);
      q[i] = 1;
      block.insert(S.mul(q, e));
    }
    out.block_dims.push_back(block.size());
  }
  std::sort(out.block_dims.begin(), out.block_dims.end());
  return out;
}

RadicalProfile radical_profile(const PrimeField& F, const BarAlgebra& a) {
  auto rad = fd_radical(F, a);
  auto blocks = simple_blocks(F, a, rad);
  RadicalProfile p;
  p.dim_bar = a.dim();
  p.dim_radical = rad.size();
  p.num_blocks = blocks.num_blocks;
  p.block_dims = blocks.block_dims;
  p.is_local = p.num_blocks == 1;
  std::size_t total = p.dim_radical;
  for (auto d : p.block_dims) total += d;
  if (total != p.dim_bar) throw InternalError("block dimensions do not add up to the algebra dimension");
  return p;
}

RadicalProfile is_local_module(const FPModule& e) {
  FPModule m = minimal(e);
  if (m.num_generators() == 0) throw PreconditionError("locality is undefined for the zero module");
  EndAlgebra lambda(m);
  return radical_profile(m.ring()->field(), bar_algebra(lambda));
}

// ---------------------------------------------------------------------------
// Small maps and transition conditions

bool is_small(const ModuleMorphism& f) {
  FPModule bar = reduction_mod_max(f.target());
  return std::all_of(f.images().begin(), f.images().end(), [&](const VectorPoly& v) { return bar.is_zero_element(v); });
}

TransitionReport check_transition(const FPModule& e1, const FPModule& e2) {
  FPModule a = minimal(e1);
  FPModule b = minimal(e2);
  HomModule h12(a, b);
  HomModule h21(b, a);
  FPModule bar_a = reduction_mod_max(a);
  FPModule bar_b = reduction_mod_max(b);
  auto small_in = [](const FPModule& bar, const ModuleMorphism& f) {
    return std::all_of(f.images().begin(), f.images().end(), [&](const VectorPoly& v) { return bar.is_zero_element(v); });
  };
  TransitionReport rep;
  for (std::size_t i = 0; i < h12.witnesses().size(); ++i) {
    for (std::size_t j = 0; j < h21.witnesses().size(); ++j) {
      const auto& f = h12.witnesses()[i];
      const auto& g = h21.witnesses()[j];
      ++rep.pairs_checked;
      if (!small_in(bar_a, compose(g, f)) || !small_in(bar_b, compose(f, g))) {
        rep.holds = false;
        rep.failure = "Hom(E1,E2) generator " + std::to_string(i) + " with Hom(E2,E1) generator " + std::to_string(j);
        return rep;
      }
    }
  }
  return rep;
}

bool RadicalBlockProfile::pass() const {
  return applicable && std::all_of(blocks.begin(), blocks.end(), [](const RadicalBlock& b) { return b.in_radical; });
}

RadicalBlockProfile radical_block_profile(const FPModule& e1, const FPModule& e2) {
  RadicalBlockProfile out;
  out.transition = check_transition(e1, e2);
  if (!out.transition.holds) return out;
  out.applicable = true;

  FPModule a = minimal(e1);
  FPModule b = minimal(e2);
  const std::size_t n1 = a.num_generators();
  const std::size_t n2 = b.num_generators();
  const std::size_t n = n1 + n2;
  const PrimeField& F = a.ring()->field();
  EndAlgebra lambda(direct_sum(a, b));
  if (lambda.module().num_generators() != n) throw InternalError("direct sum of minimal modules is not minimal");
  auto bar = bar_algebra(lambda);
  auto rad = fd_radical(F, bar);
  out.profile = radical_profile(F, bar);
  Span rad_span(F, n * n);
  for (const auto& r : rad) rad_span.insert(r.flat());

  auto place = [&](const Matrix& m, std::size_t row0, std::size_t col0) {
    Matrix big(n, n);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) big.at(row0 + i, col0 + j) = m.at(i, j);
    }
    return big;
  };
  Span total(F, n * n);
  auto add_block = [&](std::string name, const std::vector<Matrix>& mats) {
    RadicalBlock blk;
    blk.name = std::move(name);
    blk.generators = mats.size();
    Span s(F, n * n);
    for (const auto& m : mats) {
      s.insert(m.flat());
      total.insert(m.flat());
      blk.in_radical = blk.in_radical && rad_span.contains(m.flat());
    }
    blk.bar_dim = s.size();
    out.blocks.push_back(std::move(blk));
  };

  std::vector<Matrix> mats;
  for (const auto& r : fd_radical(F, bar_algebra(EndAlgebra(a)))) mats.push_back(place(r, 0, 0));
  add_block("J(E1)", mats);
  mats.clear();
  HomModule h21(b, a);
  for (const auto& w : h21.witnesses()) mats.push_back(place(constant_part(w), 0, n1));
  add_block("Hom(E2,E1)", mats);
  mats.clear();
  HomModule h12(a, b);
  for (const auto& w : h12.witnesses()) mats.push_back(place(constant_part(w), n1, 0));
  add_block("Hom(E1,E2)", mats);
  mats.clear();
  for (const auto& r : fd_radical(F, bar_algebra(EndAlgebra(b)))) mats.push_back(place(r, n1, n1));
  add_block("J(E2)", mats);

  out.spans_radical = total.size() == rad_span.size() &&
                      std::all_of(out.blocks.begin(), out.blocks.end(), [](const RadicalBlock& b) { return b.in_radical; });
  return out;
}

// ---------------------------------------------------------------------------
// Trace

Coeff endomorphism_trace(const ModuleMorphism& phi) {
  if (phi.source().ambient() != phi.target().ambient() ||
      phi.source().relations().size() != phi.target().relations().size()) {
    throw PreconditionError("trace needs an endomorphism");
  }
  if (phi.shift() != 0) return 0;
  auto mz = minimalize(phi.source());
  ModuleMorphism psi = compose(mz.to_minimal, compose(phi, mz.from_minimal));
  const RingPtr& ring = mz.module.ring();
  const PrimeField& F = ring->field();
  auto res = free_resolution(mz.module);
  if (!res.complete) throw InternalError("resolution did not terminate");
  if (res.modules[0] != mz.module.ambient()) throw InternalError("resolution does not start at the presentation");

  auto diagonal = [&](const std::vector<VectorPoly>& maps) {
    Coeff t = 0;
    for (std::size_t c = 0; c < maps.size(); ++c) {
      for (const auto& term : maps[c].terms()) {
        if (term.pos == c && term.mono.is_one()) t = F.add(t, term.coeff);
      }
    }
    return t;
  };
  std::vector<VectorPoly> cur = psi.images();
  Coeff trace = diagonal(cur);
  for (std::size_t i = 0; i < res.differentials.size(); ++i) {
    const auto& cols = res.differentials[i];
    const FreeModule& lower = res.modules[i];
    const FreeModule& upper = res.modules[i + 1];
    GroebnerBasis gb(ring, lower, cols, GroebnerBasis::Options{true, upper.degrees});
    std::vector<VectorPoly> next;
    for (const auto& col : cols) {
      VectorPoly v(ring, lower.rank());
      for (const auto& t : col.terms()) v += cur[t.pos].mul_term(t.mono, t.coeff);
      auto lifted = gb.lift(v);
      if (!lifted) throw InternalError("chain map does not lift along the resolution");
      next.push_back(VectorPoly::from_entries(ring, *lifted));
    }
    Coeff t = diagonal(next);
    trace = i % 2 == 0 ? F.sub(trace, t) : F.add(trace, t);
    cur = std::move(next);
  }
  return trace;
}

TraceCheck check_trace_commutes(const EndAlgebra& lambda, std::size_t pairs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int low = 0;
  for (const auto& w : lambda.witnesses()) low = std::min(low, w.shift());
  std::uniform_int_distribution<int> pick(low, -low);
  TraceCheck out;
  for (std::size_t k = 0; k < pairs; ++k) {
    int d = pick(rng);
    auto f = lambda.random_element(d, rng());
    auto g = lambda.random_element(-d, rng());
    ++out.pairs;
    if (endomorphism_trace(compose(f, g)) != endomorphism_trace(compose(g, f))) ++out.failures;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sequence verification

namespace {

SpotReport compare_spot(std::string name, const FPModule& left, const FPModule& right, const DegreeWindow& w) {
  SpotReport s;
  s.name = std::move(name);
  s.left = hilbert_function(left, w.lo, w.hi);
  s.right = hilbert_function(right, w.lo, w.hi);
  s.pass = s.left == s.right;
  return s;
}

void finish(SequenceReport& r) {
  bool ok = std::all_of(r.spots.begin(), r.spots.end(), [](const SpotReport& s) { return s.pass; });
  r.status = ok ? "pass" : "fail";
}

}  // namespace

SequenceReport verify_ausbr0(const FPModule& e, std::optional<DegreeWindow> window) {
  FPModule m = minimal(e);
  auto nat = natural_hom_map(m, m);
  FPModule c = cokernel_of(nat.map).module;
  FPModule t = tor(auslander_dual(m), m, 1);
  auto w = window.value_or(default_window({c, t}));
  SequenceReport r;
  r.id = "ausbr0";
  r.spots.push_back(compare_spot("coker(E*⊗E → End E) ~ Tor_1(D(E), E)", c, t, w));
  finish(r);
  return r;
}

SequenceReport verify_adual(const FPModule& e, const FPModule& x, std::optional<DegreeWindow> window) {
  FPModule m = minimal(e);
  auto nat = natural_hom_map(m, x);
  FPModule k = kernel_of(nat.map).module;
  FPModule c = cokernel_of(nat.map).module;
  FPModule d = auslander_dual(m);
  FPModule t2 = tor(d, x, 2);
  FPModule t1 = tor(d, x, 1);
  auto w = window.value_or(default_window({k, c, t1, t2}));
  SequenceReport r;
  r.id = "adual";
  r.spots.push_back(compare_spot("ker(E*⊗X → Hom(E,X)) ~ Tor_2(D(E), X)", k, t2, w));
  r.spots.push_back(compare_spot("coker(E*⊗X → Hom(E,X)) ~ Tor_1(D(E), X)", c, t1, w));
  finish(r);
  return r;
}

SequenceReport verify_perfect_syzygy_sequence(const FPModule& mod, std::size_t k, std::optional<DegreeWindow> window) {
  SequenceReport r;
  r.id = "perfect-syzygy";
  FPModule e = FPModule::zero(mod.ring());
  try {
    e = perfect_syzygy(mod, k);
  } catch (const PreconditionError& err) {
    r.status = "skipped";
    r.note = err.what();
    return r;
  }
  auto nat = natural_hom_map(e, e);
  FPModule ker = kernel_of(nat.map).module;
  FPModule c = cokernel_of(nat.map).module;
  FPModule end_m = hom(mod, mod).module();
  auto w = window.value_or(default_window({c, end_m}));
  auto inj = compare_spot("ker(E*⊗E → End E) = 0", ker, FPModule::zero(mod.ring()), w);
  inj.pass = ker.num_generators() == 0;
  if (!inj.pass) inj.note = "kernel has " + std::to_string(ker.num_generators()) + " generators";
  r.spots.push_back(std::move(inj));
  r.spots.push_back(compare_spot("coker(E*⊗E → End E) ~ End M", c, end_m, w));
  finish(r);
  return r;
}

// ---------------------------------------------------------------------------
// Generator bounds

BoundReport generator_bound_report(const FPModule& e, const BoundContext& context) {
  FPModule m = minimal(e);
  BoundReport rep;
  rep.nu_module = m.num_generators();
  rep.nu_dual = dual(m).module().num_generators();
  rep.nu_end = hom(m, m).module().num_generators();
  rep.upper = rep.nu_module * rep.nu_dual + 1;
  rep.upper_holds = rep.nu_end <= rep.upper;
  if (context.one_relation_ideal) {
    const RingPtr& ring = m.ring();
    std::vector<VectorPoly> gens;
    std::vector<int> degs;
    for (const auto& f : *context.one_relation_ideal) {
      if (f.is_zero()) continue;
      gens.push_back(VectorPoly::from_entries(ring, {f}));
      degs.push_back(f.total_degree());
    }
    FPModule ideal = Subquotient(ring, FreeModule{{0}}, std::move(gens), std::move(degs), {}).module();
    auto betti = free_resolution(ideal, 1).betti();
    OneRelationBounds b;
    b.beta0 = betti.at(0);
    b.beta1 = betti.size() > 1 ? betti[1] : 0;
    b.lower = b.beta0 * b.beta1 + 1 >= b.beta0 ? b.beta0 * b.beta1 + 1 - b.beta0 : 0;
    b.upper = b.beta0 * b.beta1 + 1;
    b.holds = b.lower <= rep.nu_end && rep.nu_end <= b.upper;
    rep.one_relation = b;
  }
  if (context.determinantal) {
    DeterminantalObservation o;
    o.n = context.determinantal->first;
    o.m = context.determinantal->second;
    o.formula = o.n * binomial(o.m, o.n + 1) + 1;
    o.matches_product = o.formula == rep.upper;
    o.matches_end = o.formula == rep.nu_end;
    rep.determinantal = o;
  }
  return rep;
}

}  // namespace endoring
