#include "endoring/fpmodule.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "endoring/errors.hpp"

namespace endoring {

namespace {

std::vector<int> degrees_of(const std::vector<VectorPoly>& vs, const FreeModule& ambient) {
  std::vector<int> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(homogeneous_degree(v, ambient).value_or(0));
  return out;
}

std::vector<VectorPoly> drop_zero(std::vector<VectorPoly> vs) {
  std::erase_if(vs, [](const VectorPoly& v) { return v.is_zero(); });
  return vs;
}

/// Σ_t t · images[t.pos] for v = Σ_t t.
VectorPoly apply_matrix(const VectorPoly& v, const std::vector<VectorPoly>& images, const RingPtr& ring,
                        std::size_t target_rank) {
  const PrimeField& F = ring->field();
  std::vector<ModuleTerm> terms;
  for (const auto& t : v.terms()) {
    for (const auto& s : images[t.pos].terms()) {
      terms.push_back({t.mono * s.mono, s.pos, F.mul(t.coeff, s.coeff)});
    }
  }
  return VectorPoly::from_terms(ring, target_rank, std::move(terms));
}

template <typename Map>
VectorPoly remap(const VectorPoly& v, std::size_t new_rank, Map pos_map) {
  std::vector<ModuleTerm> terms;
  terms.reserve(v.terms().size());
  for (const auto& t : v.terms()) terms.push_back({t.mono, static_cast<std::uint32_t>(pos_map(t.pos)), t.coeff});
  return VectorPoly::from_terms(v.ring(), new_rank, std::move(terms));
}

std::vector<VectorPoly> units(const RingPtr& ring, std::size_t rank) {
  std::vector<VectorPoly> out;
  out.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) out.push_back(VectorPoly::unit(ring, rank, i));
  return out;
}

bool has_unit_entry(const VectorPoly& v) {
  return std::any_of(v.terms().begin(), v.terms().end(), [](const ModuleTerm& t) { return t.mono.is_one(); });
}

/// Result of minimalizing a raw presentation.
struct RawMinimal {
  FreeModule ambient;
  std::vector<VectorPoly> relations;
  std::vector<VectorPoly> to_minimal;   // original generator j in minimal coordinates
  std::vector<std::size_t> survivors;   // original index of minimal generator k
  std::optional<GroebnerBasis> gb;
};

RawMinimal minimalize_raw(const RingPtr& ring, const FreeModule& ambient, std::vector<VectorPoly> rels) {
  const PrimeField& F = ring->field();
  const std::size_t r = ambient.rank();
  rels = drop_zero(std::move(rels));
  std::vector<VectorPoly> expr = units(ring, r);
  std::vector<bool> dead(r, false);

  for (;;) {
    std::size_t q = rels.size();
    const ModuleTerm* pivot_term = nullptr;
    for (std::size_t k = 0; k < rels.size() && !pivot_term; ++k) {
      for (const auto& t : rels[k].terms()) {
        if (t.mono.is_one()) {
          pivot_term = &t;
          q = k;
          break;
        }
      }
    }
    if (!pivot_term) break;
    const std::size_t i = pivot_term->pos;
    const Coeff cinv = F.inv(pivot_term->coeff);
    VectorPoly pivot = rels[q];
    rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(q));
    auto eliminate = [&](VectorPoly& v) {
      Polynomial f = v.entry(i);
      if (f.is_zero()) return;
      v -= pivot * f.scaled(cinv);
    };
    for (auto& v : rels) eliminate(v);
    for (auto& v : expr) eliminate(v);
    dead[i] = true;
    rels = drop_zero(std::move(rels));
  }

  RawMinimal out;
  std::vector<std::size_t> new_index(r, 0);
  for (std::size_t j = 0; j < r; ++j) {
    if (dead[j]) continue;
    new_index[j] = out.survivors.size();
    out.survivors.push_back(j);
    out.ambient.degrees.push_back(ambient.degrees[j]);
  }
  const std::size_t m = out.survivors.size();
  auto pos_map = [&](std::size_t p) { return new_index[p]; };
  for (auto& v : rels) v = remap(v, m, pos_map);
  for (auto& v : expr) out.to_minimal.push_back(remap(v, m, pos_map));
  GroebnerBasis gb(ring, out.ambient, rels);
  for (std::size_t k : gb.minimal_generator_indices()) out.relations.push_back(rels[k]);
  out.gb = std::move(gb);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// FPModule

FPModule::FPModule(RingPtr ring, FreeModule ambient, std::vector<VectorPoly> relations) {
  for (std::size_t c = 0; c < relations.size(); ++c) {
    const auto& v = relations[c];
    require_same_ring(*ring, *v.ring());
    if (v.rank() != ambient.rank()) throw RingMismatch("relation rank differs from the number of generators");
    if (!v.homogeneity(ambient).homogeneous()) {
      std::string entry;
      int want = v.leading().mono.degree + ambient.degrees[v.leading().pos];
      for (std::size_t i = 0; i < ambient.rank() && entry.empty(); ++i) {
        Polynomial f = v.entry(i);
        for (const auto& t : f.terms()) {
          if (t.mono.degree + ambient.degrees[i] != want) {
            entry = "entry " + std::to_string(i) + " (" + f.to_string() + ")";
            break;
          }
        }
      }
      throw InhomogeneousError("relation column " + std::to_string(c) + " is not homogeneous: " + entry);
    }
  }
  relations = drop_zero(std::move(relations));
  GroebnerBasis gb(ring, ambient, relations);
  bool minimal = gb.minimal_generator_indices().size() == relations.size() &&
                 std::none_of(relations.begin(), relations.end(), has_unit_entry);
  d_ = std::make_shared<const Data>(
      Data{std::move(ring), std::move(ambient), std::move(relations), std::move(gb), minimal});
}

FPModule::FPModule(RingPtr ring, FreeModule ambient, std::vector<VectorPoly> relations, GroebnerBasis gb,
                   bool minimal)
    : d_(std::make_shared<const Data>(
          Data{std::move(ring), std::move(ambient), std::move(relations), std::move(gb), minimal})) {}

FPModule FPModule::free(const RingPtr& ring, std::vector<int> degrees) {
  FreeModule ambient{std::move(degrees)};
  GroebnerBasis gb(ring, ambient, {});
  return FPModule(ring, std::move(ambient), {}, std::move(gb), true);
}

std::vector<int> FPModule::relation_degrees() const { return degrees_of(relations(), ambient()); }

bool FPModule::is_free() const { return minimalize(*this).module.relations().empty(); }

bool FPModule::is_zero() const {
  for (std::size_t i = 0; i < num_generators(); ++i) {
    if (!groebner().contains(unit(i))) return false;
  }
  return true;
}

std::string FPModule::describe() const {
  std::ostringstream os;
  os << "module with " << num_generators() << " generator(s) in degrees [";
  for (std::size_t i = 0; i < ambient().degrees.size(); ++i) os << (i ? "," : "") << ambient().degrees[i];
  os << "] and " << relations().size() << " relation(s)";
  return os.str();
}

FPModule make_module(const RingPtr& ring, std::vector<int> generator_degrees,
                     const std::vector<std::vector<Polynomial>>& relation_columns) {
  FreeModule ambient{std::move(generator_degrees)};
  std::vector<VectorPoly> rels;
  for (const auto& col : relation_columns) {
    if (col.size() != ambient.rank()) {
      throw PreconditionError("relation column has " + std::to_string(col.size()) + " entries, expected " +
                              std::to_string(ambient.rank()));
    }
    rels.push_back(VectorPoly::from_entries(ring, col));
  }
  return FPModule(ring, std::move(ambient), std::move(rels));
}

// ---------------------------------------------------------------------------
// ModuleMorphism

ModuleMorphism::ModuleMorphism(FPModule source, FPModule target, std::vector<VectorPoly> images, int shift)
    : ModuleMorphism(std::move(source), std::move(target), std::move(images), shift, true) {}

ModuleMorphism::ModuleMorphism(FPModule source, FPModule target, std::vector<VectorPoly> images, int shift,
                               bool check)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)), shift_(shift) {
  require_same_ring(*source_.ring(), *target_.ring());
  if (images_.size() != source_.num_generators()) {
    throw PreconditionError("morphism needs one image per source generator");
  }
  for (std::size_t j = 0; j < images_.size(); ++j) {
    const auto& v = images_[j];
    require_same_ring(*source_.ring(), *v.ring());
    if (v.rank() != target_.num_generators()) throw RingMismatch("image rank differs from target generators");
    if (!check) continue;
    auto deg = homogeneous_degree(v, target_.ambient());
    if (deg && *deg != source_.ambient().degrees[j] + shift_) {
      throw InhomogeneousError("image of generator " + std::to_string(j) + " has degree " + std::to_string(*deg) +
                               ", expected " + std::to_string(source_.ambient().degrees[j] + shift_));
    }
  }
  if (!check) return;
  for (std::size_t c = 0; c < source_.relations().size(); ++c) {
    if (!target_.is_zero_element(apply(source_.relations()[c]))) {
      throw PreconditionError("morphism is not well defined: relation " + std::to_string(c) +
                              " does not map into the target relations");
    }
  }
}

ModuleMorphism ModuleMorphism::unchecked(FPModule source, FPModule target, std::vector<VectorPoly> images,
                                         int shift) {
  return ModuleMorphism(std::move(source), std::move(target), std::move(images), shift, false);
}

ModuleMorphism ModuleMorphism::identity(const FPModule& m) {
  return unchecked(m, m, units(m.ring(), m.num_generators()), 0);
}

ModuleMorphism ModuleMorphism::zero(const FPModule& source, const FPModule& target, int shift) {
  return unchecked(source, target,
                   std::vector<VectorPoly>(source.num_generators(), target.zero_vector()), shift);
}

VectorPoly ModuleMorphism::apply(const VectorPoly& v) const {
  if (v.rank() != source_.num_generators()) throw RingMismatch("vector rank differs from source generators");
  return apply_matrix(v, images_, target_.ring(), target_.num_generators());
}

bool ModuleMorphism::is_zero() const {
  return std::all_of(images_.begin(), images_.end(),
                     [&](const VectorPoly& v) { return target_.is_zero_element(v); });
}

ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f) {
  if (f.target().ambient() != g.source().ambient()) {
    throw RingMismatch("composition: target of f differs from source of g");
  }
  std::vector<VectorPoly> images;
  images.reserve(f.images().size());
  for (const auto& v : f.images()) images.push_back(g.target().normal_form(g.apply(v)));
  return ModuleMorphism::unchecked(f.source(), g.target(), std::move(images), f.shift() + g.shift());
}

ModuleMorphism add(const ModuleMorphism& f, const ModuleMorphism& g) {
  if (f.source().ambient() != g.source().ambient() || f.target().ambient() != g.target().ambient()) {
    throw RingMismatch("sum of morphisms with different source or target");
  }
  bool f_zero = std::all_of(f.images().begin(), f.images().end(), [](const VectorPoly& v) { return v.is_zero(); });
  bool g_zero = std::all_of(g.images().begin(), g.images().end(), [](const VectorPoly& v) { return v.is_zero(); });
  if (f_zero) return g;
  if (g_zero) return f;
  if (f.shift() != g.shift()) throw InhomogeneousError("sum of morphisms of different degrees");
  std::vector<VectorPoly> images;
  for (std::size_t j = 0; j < f.images().size(); ++j) images.push_back(f.images()[j] + g.images()[j]);
  return ModuleMorphism::unchecked(f.source(), f.target(), std::move(images), f.shift());
}

ModuleMorphism scale(const ModuleMorphism& f, const Polynomial& c) {
  auto h = c.homogeneity();
  if (!h.homogeneous()) throw InhomogeneousError("scaling a morphism by an inhomogeneous polynomial");
  std::vector<VectorPoly> images;
  for (const auto& v : f.images()) images.push_back(v * c);
  int shift = h.kind == Homogeneity::Kind::kZero ? f.shift() : f.shift() + h.degree;
  return ModuleMorphism::unchecked(f.source(), f.target(), std::move(images), shift);
}

// ---------------------------------------------------------------------------
// Minimalization

Minimalization minimalize(const FPModule& m) {
  if (m.is_minimal()) {
    return {m, ModuleMorphism::identity(m), ModuleMorphism::identity(m)};
  }
  auto raw = minimalize_raw(m.ring(), m.ambient(), m.relations());
  FPModule min(m.ring(), raw.ambient, raw.relations, std::move(*raw.gb), true);
  std::vector<VectorPoly> back;
  for (std::size_t j : raw.survivors) back.push_back(m.unit(j));
  auto to = ModuleMorphism::unchecked(m, min, std::move(raw.to_minimal), 0);
  auto from = ModuleMorphism::unchecked(min, m, std::move(back), 0);
  return {std::move(min), std::move(to), std::move(from)};
}

std::size_t nu(const FPModule& m) { return minimalize(m).module.num_generators(); }

// ---------------------------------------------------------------------------
// Subquotient

Subquotient::Subquotient(const RingPtr& ring, FreeModule ambient, std::vector<VectorPoly> gens,
                         std::vector<int> gen_degrees, std::vector<VectorPoly> rels)
    : ambient_(std::move(ambient)),
      lift_gb_(std::make_shared<const GroebnerBasis>(
          ring, ambient_, std::move(gens), std::move(rels),
          GroebnerBasis::Options{true, gen_degrees})),
      module_(FPModule::zero(ring)) {
  FreeModule raw_ambient{std::move(gen_degrees)};
  auto raw = minimalize_raw(ring, raw_ambient, lift_gb_->syzygies());
  to_minimal_ = std::move(raw.to_minimal);
  for (std::size_t j : raw.survivors) generators_.push_back(lift_gb_->generators()[j]);
  module_ = FPModule(ring, std::move(raw.ambient), std::move(raw.relations), std::move(*raw.gb), true);
}

std::optional<VectorPoly> Subquotient::coordinates(const VectorPoly& v) const {
  auto lift = lift_gb_->lift(v);
  if (!lift) return std::nullopt;
  const RingPtr& ring = module_.ring();
  std::vector<ModuleTerm> terms;
  const PrimeField& F = ring->field();
  for (std::size_t j = 0; j < lift->size(); ++j) {
    for (const auto& a : (*lift)[j].terms()) {
      for (const auto& b : to_minimal_[j].terms()) terms.push_back({a.mono * b.mono, b.pos, F.mul(a.coeff, b.coeff)});
    }
  }
  return module_.normal_form(VectorPoly::from_terms(ring, module_.num_generators(), std::move(terms)));
}

VectorPoly Subquotient::ambient_vector(const VectorPoly& coords) const {
  return apply_matrix(coords, generators_, module_.ring(), ambient_.rank());
}

// ---------------------------------------------------------------------------
// Kernels, images, cokernels

namespace {

/// {a : Σ a_j images[j] ∈ <rels>} as vectors over the source generators.
std::vector<VectorPoly> preimage_generators(const RingPtr& ring, const FreeModule& source,
                                            const std::vector<VectorPoly>& images, int shift,
                                            const FreeModule& target, const std::vector<VectorPoly>& rels) {
  if (target.rank() == 0) return units(ring, source.rank());
  std::vector<int> degs;
  for (int d : source.degrees) degs.push_back(d + shift);
  GroebnerBasis gb(ring, target, images, rels, GroebnerBasis::Options{true, degs});
  return gb.syzygies();
}

}  // namespace

Embedding kernel_of(const ModuleMorphism& f) {
  const FPModule& a = f.source();
  const FPModule& b = f.target();
  auto pre = preimage_generators(a.ring(), a.ambient(), f.images(), f.shift(), b.ambient(), b.relations());
  auto degs = degrees_of(pre, a.ambient());
  Subquotient sq(a.ring(), a.ambient(), std::move(pre), std::move(degs), a.relations());
  return {sq.module(), ModuleMorphism::unchecked(sq.module(), a, sq.generators(), 0)};
}

Embedding image_of(const ModuleMorphism& f) {
  const FPModule& b = f.target();
  std::vector<int> degs;
  for (int d : f.source().ambient().degrees) degs.push_back(d + f.shift());
  Subquotient sq(b.ring(), b.ambient(), f.images(), std::move(degs), b.relations());
  return {sq.module(), ModuleMorphism::unchecked(sq.module(), b, sq.generators(), 0)};
}

Projection cokernel_of(const ModuleMorphism& f) {
  const FPModule& b = f.target();
  auto rels = b.relations();
  rels.insert(rels.end(), f.images().begin(), f.images().end());
  FPModule raw(b.ring(), b.ambient(), std::move(rels));
  auto mz = minimalize(raw);
  return {mz.module, ModuleMorphism::unchecked(b, mz.module, mz.to_minimal.images(), 0)};
}

bool is_injective(const ModuleMorphism& f) { return kernel_of(f).module.num_generators() == 0; }

bool is_surjective(const ModuleMorphism& f) {
  const FPModule& b = f.target();
  auto gens = b.relations();
  gens.insert(gens.end(), f.images().begin(), f.images().end());
  GroebnerBasis gb(b.ring(), b.ambient(), std::move(gens));
  for (std::size_t i = 0; i < b.num_generators(); ++i) {
    if (!gb.contains(b.unit(i))) return false;
  }
  return true;
}

bool is_isomorphism(const ModuleMorphism& f) { return is_surjective(f) && is_injective(f); }

// ---------------------------------------------------------------------------
// Constructions on modules

FPModule direct_sum(const FPModule& a, const FPModule& b) {
  require_same_ring(*a.ring(), *b.ring());
  FreeModule amb = a.ambient();
  amb.degrees.insert(amb.degrees.end(), b.ambient().degrees.begin(), b.ambient().degrees.end());
  const std::size_t n = amb.rank();
  std::vector<VectorPoly> rels;
  for (const auto& r : a.relations()) rels.push_back(r.embedded(n, 0));
  for (const auto& r : b.relations()) rels.push_back(r.embedded(n, a.num_generators()));
  return FPModule(a.ring(), std::move(amb), std::move(rels));
}

FPModule tensor(const FPModule& a, const FPModule& b) {
  require_same_ring(*a.ring(), *b.ring());
  const std::size_t na = a.num_generators();
  const std::size_t nb = b.num_generators();
  FreeModule amb;
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) amb.degrees.push_back(a.ambient().degrees[i] + b.ambient().degrees[j]);
  }
  const std::size_t n = na * nb;
  std::vector<VectorPoly> rels;
  for (const auto& r : a.relations()) {
    for (std::size_t j = 0; j < nb; ++j) rels.push_back(remap(r, n, [&](std::size_t i) { return i * nb + j; }));
  }
  for (std::size_t i = 0; i < na; ++i) {
    for (const auto& s : b.relations()) rels.push_back(remap(s, n, [&](std::size_t j) { return i * nb + j; }));
  }
  return FPModule(a.ring(), std::move(amb), std::move(rels));
}

FPModule reduction_mod_max(const FPModule& m) {
  auto rels = m.relations();
  const RingPtr& ring = m.ring();
  for (std::size_t i = 0; i < m.num_generators(); ++i) {
    for (std::size_t v = 0; v < ring->nvars(); ++v) rels.push_back(m.unit(i).mul_term(ring->variable(v), 1));
  }
  return FPModule(ring, m.ambient(), std::move(rels));
}

// ---------------------------------------------------------------------------
// Hom

HomModule::HomModule(FPModule source, FPModule target) : source_(std::move(source)), target_(std::move(target)) {
  require_same_ring(*source_.ring(), *target_.ring());
  const RingPtr& ring = source_.ring();
  const std::size_t g = target_.num_generators();
  const std::size_t f0 = source_.num_generators();
  const auto& src_rels = source_.relations();
  const std::size_t f1 = src_rels.size();
  const auto src_rel_degs = source_.relation_degrees();

  // B ⊗ F0* and B ⊗ F1*, position (a, b) at a·g + b.
  FreeModule h0;
  for (std::size_t a = 0; a < f0; ++a) {
    for (std::size_t b = 0; b < g; ++b) h0.degrees.push_back(target_.ambient().degrees[b] - source_.ambient().degrees[a]);
  }
  FreeModule h1;
  for (std::size_t c = 0; c < f1; ++c) {
    for (std::size_t b = 0; b < g; ++b) h1.degrees.push_back(target_.ambient().degrees[b] - src_rel_degs[c]);
  }
  auto tensor_rels = [&](std::size_t copies) {
    std::vector<VectorPoly> out;
    for (std::size_t a = 0; a < copies; ++a) {
      for (const auto& p : target_.relations()) {
        out.push_back(remap(p, copies * g, [&](std::size_t b) { return a * g + b; }));
      }
    }
    return out;
  };
  // (a, b) ↦ Σ_c φ_{a,c} (c, b)
  std::vector<std::vector<ModuleTerm>> image_terms(f0 * g);
  for (std::size_t c = 0; c < f1; ++c) {
    for (const auto& t : src_rels[c].terms()) {
      for (std::size_t b = 0; b < g; ++b) {
        image_terms[t.pos * g + b].push_back({t.mono, static_cast<std::uint32_t>(c * g + b), t.coeff});
      }
    }
  }
  std::vector<VectorPoly> images;
  images.reserve(image_terms.size());
  for (auto& terms : image_terms) images.push_back(VectorPoly::from_terms(ring, f1 * g, std::move(terms)));

  auto kernel = preimage_generators(ring, h0, images, 0, h1, tensor_rels(f1));
  auto degs = degrees_of(kernel, h0);
  sq_ = std::make_shared<const Subquotient>(ring, h0, std::move(kernel), std::move(degs), tensor_rels(f0));

  const auto& mod_degrees = sq_->module().ambient().degrees;
  for (std::size_t k = 0; k < sq_->generators().size(); ++k) {
    const auto& w = sq_->generators()[k];
    std::vector<VectorPoly> imgs;
    for (std::size_t a = 0; a < f0; ++a) imgs.push_back(w.restricted(a * g, (a + 1) * g));
    witnesses_.emplace_back(source_, target_, std::move(imgs), mod_degrees[k]);
  }
}

VectorPoly HomModule::vectorize(const ModuleMorphism& f) const {
  const std::size_t g = target_.num_generators();
  if (f.source().ambient() != source_.ambient() || f.target().ambient() != target_.ambient()) {
    throw RingMismatch("morphism does not go between the modules of this Hom");
  }
  std::vector<ModuleTerm> terms;
  for (std::size_t a = 0; a < f.images().size(); ++a) {
    for (const auto& t : f.images()[a].terms()) {
      terms.push_back({t.mono, static_cast<std::uint32_t>(a * g + t.pos), t.coeff});
    }
  }
  return VectorPoly::from_sorted_terms(source_.ring(), source_.num_generators() * g, std::move(terms));
}

VectorPoly HomModule::coordinates(const ModuleMorphism& f) const {
  auto c = sq_->coordinates(vectorize(f));
  if (!c) throw InternalError("morphism does not lift to the generators of Hom");
  return *c;
}

ModuleMorphism HomModule::morphism(const VectorPoly& coords) const {
  const std::size_t g = target_.num_generators();
  auto deg = homogeneous_degree(coords, module().ambient());
  if (!deg) return ModuleMorphism::zero(source_, target_);
  VectorPoly w = sq_->ambient_vector(coords);
  std::vector<VectorPoly> imgs;
  for (std::size_t a = 0; a < source_.num_generators(); ++a) {
    imgs.push_back(target_.normal_form(w.restricted(a * g, (a + 1) * g)));
  }
  return ModuleMorphism::unchecked(source_, target_, std::move(imgs), *deg);
}

HomModule hom(const FPModule& a, const FPModule& b) { return HomModule(a, b); }

HomModule dual(const FPModule& e) { return HomModule(e, FPModule::free(e.ring(), {0})); }

FPModule auslander_dual(const FPModule& e) {
  const FPModule m = minimalize(e).module;
  const auto rel_degs = m.relation_degrees();
  FreeModule amb;
  for (int d : rel_degs) amb.degrees.push_back(-d);
  std::vector<std::vector<ModuleTerm>> rows(m.num_generators());
  for (std::size_t c = 0; c < m.relations().size(); ++c) {
    for (const auto& t : m.relations()[c].terms()) rows[t.pos].push_back({t.mono, static_cast<std::uint32_t>(c), t.coeff});
  }
  std::vector<VectorPoly> rels;
  for (auto& r : rows) rels.push_back(VectorPoly::from_terms(m.ring(), amb.rank(), std::move(r)));
  return minimalize(FPModule(m.ring(), std::move(amb), std::move(rels))).module;
}

// ---------------------------------------------------------------------------
// Resolutions, Ext, Tor

std::vector<std::size_t> Resolution::betti() const {
  std::vector<std::size_t> out;
  for (const auto& f : modules) out.push_back(f.rank());
  return out;
}

ModuleMorphism Resolution::differential(std::size_t i) const {
  auto src = FPModule::free(ring, modules.at(i + 1).degrees);
  auto tgt = FPModule::free(ring, modules.at(i).degrees);
  return ModuleMorphism::unchecked(src, tgt, differentials.at(i), 0);
}

bool Resolution::is_minimal() const {
  for (const auto& cols : differentials) {
    if (std::any_of(cols.begin(), cols.end(), has_unit_entry)) return false;
  }
  return true;
}

Resolution free_resolution(const FPModule& e, std::size_t max_length) {
  const FPModule m = minimalize(e).module;
  Resolution res;
  res.ring = m.ring();
  res.modules.push_back(m.ambient());
  std::vector<VectorPoly> cols = m.relations();
  for (;;) {
    if (cols.empty()) {
      res.complete = true;
      break;
    }
    if (res.length() == max_length) break;
    const FreeModule& cur = res.modules.back();
    FreeModule next{degrees_of(cols, cur)};
    GroebnerBasis gb(res.ring, cur, cols, GroebnerBasis::Options{true, next.degrees});
    res.differentials.push_back(std::move(cols));
    cols = minimal_generators(res.ring, next, gb.syzygies());
    res.modules.push_back(std::move(next));
  }
  return res;
}

Resolution free_resolution(const FPModule& e) { return free_resolution(e, e.ring()->nvars() + 1); }

namespace {

/// ker(out) / (im(in) + rels) at a middle free module. `out_target` empty means out = 0.
Subquotient homology(const RingPtr& ring, const FreeModule& mid, std::vector<VectorPoly> mid_rels,
                     const std::vector<VectorPoly>& in_images, const std::vector<VectorPoly>& out_images,
                     const FreeModule& out_target, const std::vector<VectorPoly>& out_rels) {
  std::vector<VectorPoly> cycles;
  if (out_images.empty() || out_target.rank() == 0) {
    cycles = units(ring, mid.rank());
  } else {
    cycles = preimage_generators(ring, mid, out_images, 0, out_target, out_rels);
  }
  auto degs = degrees_of(cycles, mid);
  mid_rels.insert(mid_rels.end(), in_images.begin(), in_images.end());
  return Subquotient(ring, mid, std::move(cycles), std::move(degs), std::move(mid_rels));
}

/// Columns of the transpose of a map F_{i+1} -> F_i given by columns.
std::vector<VectorPoly> transpose(const RingPtr& ring, const std::vector<VectorPoly>& cols, std::size_t rows) {
  std::vector<std::vector<ModuleTerm>> out(rows);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (const auto& t : cols[c].terms()) out[t.pos].push_back({t.mono, static_cast<std::uint32_t>(c), t.coeff});
  }
  std::vector<VectorPoly> res;
  for (auto& terms : out) res.push_back(VectorPoly::from_terms(ring, cols.size(), std::move(terms)));
  return res;
}

FreeModule dual_free(const FreeModule& f) {
  FreeModule out;
  for (int d : f.degrees) out.degrees.push_back(-d);
  return out;
}

}  // namespace

FPModule ext(const FPModule& e, std::size_t i) {
  auto res = free_resolution(e);
  const RingPtr& ring = e.ring();
  if (i > res.length()) return FPModule::zero(ring);
  FreeModule mid = dual_free(res.modules[i]);
  std::vector<VectorPoly> in, out;
  FreeModule out_target;
  if (i >= 1) in = transpose(ring, res.differentials[i - 1], res.modules[i - 1].rank());
  if (i < res.length()) {
    out = transpose(ring, res.differentials[i], res.modules[i].rank());
    out_target = dual_free(res.modules[i + 1]);
  }
  return homology(ring, mid, {}, in, out, out_target, {}).module();
}

FPModule tor(const FPModule& a, const FPModule& b, std::size_t i) {
  require_same_ring(*a.ring(), *b.ring());
  auto res = free_resolution(a);
  const RingPtr& ring = a.ring();
  if (i > res.length()) return FPModule::zero(ring);
  const std::size_t g = b.num_generators();
  auto tensored = [&](const FreeModule& f) {
    FreeModule out;
    for (int d : f.degrees) {
      for (int e : b.ambient().degrees) out.degrees.push_back(d + e);
    }
    return out;
  };
  auto tensored_rels = [&](const FreeModule& f) {
    std::vector<VectorPoly> out;
    for (std::size_t c = 0; c < f.rank(); ++c) {
      for (const auto& p : b.relations()) out.push_back(remap(p, f.rank() * g, [&](std::size_t j) { return c * g + j; }));
    }
    return out;
  };
  // Images of (c, b) under d ⊗ 1 where cols are the columns of d.
  auto tensored_map = [&](const std::vector<VectorPoly>& cols, std::size_t target_rank) {
    std::vector<VectorPoly> out;
    for (const auto& col : cols) {
      for (std::size_t j = 0; j < g; ++j) {
        out.push_back(remap(col, target_rank * g, [&](std::size_t p) { return p * g + j; }));
      }
    }
    return out;
  };
  FreeModule mid = tensored(res.modules[i]);
  std::vector<VectorPoly> in, out;
  FreeModule out_target;
  std::vector<VectorPoly> out_rels;
  if (i < res.length()) in = tensored_map(res.differentials[i], res.modules[i].rank());
  if (i >= 1) {
    out = tensored_map(res.differentials[i - 1], res.modules[i - 1].rank());
    out_target = tensored(res.modules[i - 1]);
    out_rels = tensored_rels(res.modules[i - 1]);
  }
  return homology(ring, mid, tensored_rels(res.modules[i]), in, out, out_target, out_rels).module();
}

// ---------------------------------------------------------------------------
// Hilbert functions

long HilbertFunction::total() const {
  long s = 0;
  for (long v : values) s += v;
  return s;
}

HilbertFunction hilbert_function(const FPModule& m, int lo, int hi) {
  HilbertFunction hf;
  hf.lo = lo;
  hf.hi = hi;
  const auto leads = m.groebner().leading_monomials();
  std::map<int, std::vector<Monomial>> cache;
  auto monos = [&](int t) -> const std::vector<Monomial>& {
    auto it = cache.find(t);
    if (it == cache.end()) it = cache.emplace(t, m.ring()->monomials_of_degree(t)).first;
    return it->second;
  };
  for (int d = lo; d <= hi; ++d) {
    long count = 0;
    for (std::size_t i = 0; i < m.num_generators(); ++i) {
      int t = d - m.ambient().degrees[i];
      if (t < 0) continue;
      for (const auto& mono : monos(t)) {
        bool standard = std::none_of(leads[i].begin(), leads[i].end(),
                                     [&](const Monomial& l) { return l.divides(mono); });
        if (standard) ++count;
      }
    }
    hf.values.push_back(count);
  }
  return hf;
}

DegreeWindow default_window(const std::vector<FPModule>& modules) {
  std::optional<int> lo, hi;
  for (const auto& m : modules) {
    for (int d : m.ambient().degrees) {
      lo = lo ? std::min(*lo, d) : d;
      hi = hi ? std::max(*hi, d) : d;
    }
    for (int d : m.relation_degrees()) hi = hi ? std::max(*hi, d) : d;
  }
  if (!lo) return {0, 6};
  return {*lo - 1, *hi + 6};
}

// ---------------------------------------------------------------------------
// Duality, trace ideals, homological invariants

TraceIdeal trace_ideal(const FPModule& e) {
  const RingPtr& ring = e.ring();
  auto d = dual(e);
  std::vector<Polynomial> gens;
  for (const auto& f : d.witnesses()) {
    for (const auto& img : f.images()) {
      Polynomial p = img.entry(0);
      if (!p.is_zero()) gens.push_back(std::move(p));
    }
  }
  FreeModule r1{{0}};
  std::vector<VectorPoly> vecs;
  for (const auto& p : gens) vecs.push_back(VectorPoly::from_entries(ring, {p}));
  auto degs = degrees_of(vecs, r1);
  GroebnerBasis gb(ring, r1, vecs);
  bool one = gb.contains(VectorPoly::unit(ring, 1, 0));
  Subquotient sq(ring, r1, std::move(vecs), std::move(degs), {});
  return {std::move(gens), sq.module(), one};
}

bool has_free_summand(const FPModule& e) { return trace_ideal(e).contains_one; }

long rank(const FPModule& e) {
  long s = 0;
  auto b = free_resolution(e).betti();
  for (std::size_t i = 0; i < b.size(); ++i) s += (i % 2 == 0 ? 1 : -1) * static_cast<long>(b[i]);
  return s;
}

std::size_t projective_dimension(const FPModule& e) {
  auto res = free_resolution(e);
  if (res.modules.front().rank() == 0) throw PreconditionError("projective dimension of the zero module");
  return res.length();
}

std::size_t depth(const FPModule& e) {
  if (minimalize(e).module.num_generators() == 0) throw PreconditionError("depth of the zero module");
  return e.ring()->nvars() - projective_dimension(e);
}

ModuleMorphism double_dual_map(const FPModule& e) {
  auto d1 = dual(e);
  auto d2 = dual(d1.module());
  const FPModule r = FPModule::free(e.ring(), {0});
  std::vector<VectorPoly> images;
  for (std::size_t a = 0; a < e.num_generators(); ++a) {
    // ev_a : E* -> R, f_k ↦ f_k(e_a)
    std::vector<VectorPoly> ev;
    for (const auto& f : d1.witnesses()) ev.push_back(f.images()[a]);
    ModuleMorphism eva(d1.module(), r, std::move(ev), e.ambient().degrees[a]);
    images.push_back(d2.coordinates(eva));
  }
  return ModuleMorphism(e, d2.module(), std::move(images), 0);
}

bool is_reflexive(const FPModule& e) { return is_isomorphism(double_dual_map(e)); }

NaturalHomMap natural_hom_map(const FPModule& e, const FPModule& x) { return natural_hom_map(hom(e, x)); }

NaturalHomMap natural_hom_map(const HomModule& h) {
  const FPModule& e = h.source();
  const FPModule& x = h.target();
  auto d = dual(e);
  FPModule t = tensor(d.module(), x);
  const std::size_t gx = x.num_generators();
  std::vector<VectorPoly> images;
  for (const auto& f : d.witnesses()) {
    for (std::size_t j = 0; j < gx; ++j) {
      std::vector<VectorPoly> imgs;
      for (const auto& v : f.images()) imgs.push_back(x.unit(j) * v.entry(0));
      ModuleMorphism m(e, x, std::move(imgs), f.shift() + x.ambient().degrees[j]);
      images.push_back(h.coordinates(m));
    }
  }
  ModuleMorphism map(t, h.module(), std::move(images), 0);
  return {std::move(d), std::move(t), h, std::move(map)};
}

}  // namespace endoring
