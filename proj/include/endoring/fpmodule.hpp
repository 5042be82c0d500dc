#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "endoring/groebner.hpp"
#include "endoring/polyring.hpp"

namespace endoring {

/// Finitely presented graded module F0 / <relations>.
///
/// Immutable; copies share the presentation and its Gröbner basis.
class FPModule {
 public:
  /// Validates homogeneity of every relation column and computes the Gröbner basis.
  FPModule(RingPtr ring, FreeModule ambient, std::vector<VectorPoly> relations);
  FPModule(RingPtr ring, FreeModule ambient, std::vector<VectorPoly> relations,
           GroebnerBasis gb, bool minimal);

  static FPModule free(const RingPtr& ring, std::vector<int> degrees);
  static FPModule zero(const RingPtr& ring) { return free(ring, {}); }

  const RingPtr& ring() const { return d_->ring; }
  const FreeModule& ambient() const { return d_->ambient; }
  std::size_t num_generators() const { return d_->ambient.rank(); }
  const std::vector<VectorPoly>& relations() const { return d_->relations; }
  std::vector<int> relation_degrees() const;
  const GroebnerBasis& groebner() const { return d_->gb; }
  /// Set by minimalize (or when the presentation is detected minimal).
  bool is_minimal() const { return d_->minimal; }
  bool is_free() const;

  /// True iff every generator vanishes in the module.
  bool is_zero() const;
  VectorPoly normal_form(const VectorPoly& v) const { return d_->gb.normal_form(v); }
  bool is_zero_element(const VectorPoly& v) const { return d_->gb.contains(v); }

  VectorPoly unit(std::size_t i) const { return VectorPoly::unit(ring(), num_generators(), i); }
  VectorPoly zero_vector() const { return VectorPoly(ring(), num_generators()); }

  std::string describe() const;

 private:
  struct Data {
    RingPtr ring;
    FreeModule ambient;
    std::vector<VectorPoly> relations;
    GroebnerBasis gb;
    bool minimal;
  };
  std::shared_ptr<const Data> d_;
};

/// Builds a module from a relation matrix given column by column.
FPModule make_module(const RingPtr& ring, std::vector<int> generator_degrees,
                     const std::vector<std::vector<Polynomial>>& relation_columns);

/// Homogeneous morphism of degree `shift`: images[j] ∈ F0(target) is the image of generator j.
class ModuleMorphism {
 public:
  /// Checks homogeneity and the well-definedness certificate.
  ModuleMorphism(FPModule source, FPModule target, std::vector<VectorPoly> images, int shift);

  /// Skips the well-definedness check; for maps that are correct by construction.
  static ModuleMorphism unchecked(FPModule source, FPModule target, std::vector<VectorPoly> images,
                                  int shift);
  static ModuleMorphism identity(const FPModule& m);
  static ModuleMorphism zero(const FPModule& source, const FPModule& target, int shift = 0);

  const FPModule& source() const { return source_; }
  const FPModule& target() const { return target_; }
  const std::vector<VectorPoly>& images() const { return images_; }
  int shift() const { return shift_; }
  /// Entry (i, j): coefficient of target generator i in the image of source generator j.
  Polynomial entry(std::size_t i, std::size_t j) const { return images_[j].entry(i); }

  /// Image of a vector over the source generators, in target coordinates.
  VectorPoly apply(const VectorPoly& v) const;
  bool is_zero() const;

 private:
  ModuleMorphism(FPModule source, FPModule target, std::vector<VectorPoly> images, int shift, bool check);

  FPModule source_;
  FPModule target_;
  std::vector<VectorPoly> images_;
  int shift_;
};

/// g ∘ f.
ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f);
ModuleMorphism add(const ModuleMorphism& f, const ModuleMorphism& g);
ModuleMorphism scale(const ModuleMorphism& f, const Polynomial& c);

struct Minimalization {
  FPModule module;
  ModuleMorphism to_minimal;    // original -> minimal
  ModuleMorphism from_minimal;  // minimal -> original
};

/// Graded Nakayama: removes generators killed by unit relations and redundant relations.
Minimalization minimalize(const FPModule& m);
/// Minimal number of generators.
std::size_t nu(const FPModule& m);

/// A module given as <U> / (<U> ∩ <R>) inside a free module, minimally presented.
///
/// `generators()` are the ambient vectors of the minimal generators. The
/// `coordinates` query expresses an ambient vector of <U> + <R> over them.
class Subquotient {
 public:
  Subquotient(const RingPtr& ring, FreeModule ambient, std::vector<VectorPoly> gens,
              std::vector<int> gen_degrees, std::vector<VectorPoly> rels);

  const FPModule& module() const { return module_; }
  const FreeModule& ambient() const { return ambient_; }
  const std::vector<VectorPoly>& generators() const { return generators_; }
  /// Coordinates of v over generators(), or nullopt when v ∉ <U> + <R>.
  std::optional<VectorPoly> coordinates(const VectorPoly& v) const;
  /// Σ c_k · generators()[k].
  VectorPoly ambient_vector(const VectorPoly& coords) const;

 private:
  FreeModule ambient_;
  std::shared_ptr<const GroebnerBasis> lift_gb_;
  std::vector<VectorPoly> to_minimal_;  // raw generator j -> minimal coordinates
  FPModule module_;
  std::vector<VectorPoly> generators_;
};

struct Embedding {
  FPModule module;
  ModuleMorphism inclusion;  // module -> ambient object
};

struct Projection {
  FPModule module;
  ModuleMorphism projection;  // ambient object -> module
};

Embedding kernel_of(const ModuleMorphism& f);
Embedding image_of(const ModuleMorphism& f);
Projection cokernel_of(const ModuleMorphism& f);
bool is_injective(const ModuleMorphism& f);
bool is_surjective(const ModuleMorphism& f);
bool is_isomorphism(const ModuleMorphism& f);

FPModule direct_sum(const FPModule& a, const FPModule& b);
FPModule tensor(const FPModule& a, const FPModule& b);
/// Quotient of m by the ideal generated by all variables times m.
FPModule reduction_mod_max(const FPModule& m);

/// Hom(A, B) computed as ker(B ⊗ F0* → B ⊗ F1*), with one witness morphism per generator.
class HomModule {
 public:
  HomModule(FPModule source, FPModule target);

  const FPModule& module() const { return sq_->module(); }
  const FPModule& source() const { return source_; }
  const FPModule& target() const { return target_; }
  const std::vector<ModuleMorphism>& witnesses() const { return witnesses_; }

  /// Flattens f into B ⊗ F0(A)*: position a·rank(F0(B)) + b holds f(e_a)_b.
  VectorPoly vectorize(const ModuleMorphism& f) const;
  /// Coordinates of f over the generators of module(). Throws InternalError if f
  /// is not a well-defined morphism A → B.
  VectorPoly coordinates(const ModuleMorphism& f) const;
  /// Morphism corresponding to a homogeneous element of module().
  ModuleMorphism morphism(const VectorPoly& coords) const;

 private:
  FPModule source_;
  FPModule target_;
  std::shared_ptr<const Subquotient> sq_;
  std::vector<ModuleMorphism> witnesses_;
};

HomModule hom(const FPModule& a, const FPModule& b);
/// E* = Hom(E, R).
HomModule dual(const FPModule& e);
/// Auslander dual coker(φ*) of the minimal presentation F1 -φ-> F0 -> E.
FPModule auslander_dual(const FPModule& e);

struct Resolution {
  RingPtr ring;
  std::vector<FreeModule> modules;                 // F_0, F_1, ...
  std::vector<std::vector<VectorPoly>> differentials;  // differentials[i]: F_{i+1} -> F_i, columns
  bool complete = false;

  std::size_t length() const { return modules.size() - 1; }
  std::vector<std::size_t> betti() const;
  /// d_{i+1}: F_{i+1} -> F_i as a morphism of free modules.
  ModuleMorphism differential(std::size_t i) const;
  bool is_minimal() const;
};

/// Minimal graded free resolution up to homological degree max_length.
Resolution free_resolution(const FPModule& e, std::size_t max_length);
/// Complete minimal resolution (length ≤ number of variables).
Resolution free_resolution(const FPModule& e);

/// Ext^i_R(E, R).
FPModule ext(const FPModule& e, std::size_t i);
/// Tor_i^R(A, B).
FPModule tor(const FPModule& a, const FPModule& b, std::size_t i);

struct HilbertFunction {
  int lo = 0;
  int hi = -1;
  std::vector<long> values;

  long at(int d) const { return values.at(static_cast<std::size_t>(d - lo)); }
  long total() const;
  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
};

HilbertFunction hilbert_function(const FPModule& m, int lo, int hi);

struct DegreeWindow {
  int lo;
  int hi;
};
/// lo = min generator degree - 1, hi = max(relation, generator degree) + 6 over all modules.
DegreeWindow default_window(const std::vector<FPModule>& modules);

struct TraceIdeal {
  std::vector<Polynomial> generators;
  FPModule ideal;  // the ideal as a submodule of R, minimally presented
  bool contains_one;
};

TraceIdeal trace_ideal(const FPModule& e);
bool has_free_summand(const FPModule& e);

/// Alternating sum of Betti numbers.
long rank(const FPModule& e);
std::size_t projective_dimension(const FPModule& e);
/// Graded Auslander–Buchsbaum: #variables - pd. Throws for the zero module.
std::size_t depth(const FPModule& e);

/// The natural map E -> E** built by double evaluation.
ModuleMorphism double_dual_map(const FPModule& e);
bool is_reflexive(const FPModule& e);

struct NaturalHomMap {
  HomModule dual;    // E*
  FPModule tensor;   // E* ⊗ X, generator (k, x) at index k·ν(X) + x
  HomModule hom;     // Hom(E, X)
  ModuleMorphism map;
};

/// f ⊗ x ↦ (e ↦ f(e)·x).
NaturalHomMap natural_hom_map(const FPModule& e, const FPModule& x);
/// Same map into an already computed Hom(E, X).
NaturalHomMap natural_hom_map(const HomModule& hom_ex);

}  // namespace endoring
