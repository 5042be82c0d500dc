#include "endoring/groebner.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "endoring/errors.hpp"

namespace endoring {

// ---------------------------------------------------------------------------
// VectorPoly

namespace {

bool term_greater(const ModuleTerm& a, const ModuleTerm& b) { return compare(a, b) > 0; }

std::vector<ModuleTerm> merge_terms(const PrimeField& F, const std::vector<ModuleTerm>& a,
                                    const std::vector<ModuleTerm>& b, bool subtract) {
  std::vector<ModuleTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = compare(a[i], b[j]);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      ModuleTerm t = b[j++];
      if (subtract) t.coeff = F.neg(t.coeff);
      out.push_back(t);
    } else {
      Coeff v = subtract ? F.sub(a[i].coeff, b[j].coeff) : F.add(a[i].coeff, b[j].coeff);
      if (v != 0) out.push_back({a[i].mono, a[i].pos, v});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    ModuleTerm t = b[j];
    if (subtract) t.coeff = F.neg(t.coeff);
    out.push_back(t);
  }
  return out;
}

}  // namespace

VectorPoly VectorPoly::unit(const RingPtr& ring, std::size_t rank, std::size_t pos) {
  if (pos >= rank) throw std::out_of_range("unit vector position out of range");
  VectorPoly v(ring, rank);
  v.terms_.push_back({Monomial{}, static_cast<std::uint32_t>(pos), 1});
  return v;
}

VectorPoly VectorPoly::from_entries(const RingPtr& ring, const std::vector<Polynomial>& entries) {
  VectorPoly v(ring, entries.size());
  for (std::size_t p = 0; p < entries.size(); ++p) {
    require_same_ring(*ring, *entries[p].ring());
    for (const Term& t : entries[p].terms()) {
      v.terms_.push_back({t.mono, static_cast<std::uint32_t>(p), t.coeff});
    }
  }
  return v;  // entries are sorted and positions increase: already canonical
}

VectorPoly VectorPoly::from_terms(const RingPtr& ring, std::size_t rank, std::vector<ModuleTerm> terms) {
  const PrimeField& F = ring->field();
  std::sort(terms.begin(), terms.end(), term_greater);
  VectorPoly v(ring, rank);
  for (const ModuleTerm& t : terms) {
    if (t.pos >= rank) throw std::out_of_range("vector term position out of range");
    Coeff c = t.coeff % F.prime();
    if (!v.terms_.empty() && v.terms_.back().pos == t.pos && v.terms_.back().mono == t.mono) {
      v.terms_.back().coeff = F.add(v.terms_.back().coeff, c);
      if (v.terms_.back().coeff == 0) v.terms_.pop_back();
    } else if (c != 0) {
      v.terms_.push_back({t.mono, t.pos, c});
    }
  }
  return v;
}

VectorPoly VectorPoly::from_sorted_terms(const RingPtr& ring, std::size_t rank,
                                         std::vector<ModuleTerm> terms) {
  VectorPoly v(ring, rank);
  v.terms_ = std::move(terms);
  return v;
}

Polynomial VectorPoly::entry(std::size_t pos) const {
  std::vector<Term> terms;
  for (const ModuleTerm& t : terms_) {
    if (t.pos == pos) terms.push_back({t.mono, t.coeff});
  }
  Polynomial p(ring_);
  return Polynomial::from_terms(ring_, std::move(terms));
}

std::vector<Polynomial> VectorPoly::entries() const {
  std::vector<std::vector<Term>> buckets(rank_);
  for (const ModuleTerm& t : terms_) buckets[t.pos].push_back({t.mono, t.coeff});
  std::vector<Polynomial> out;
  out.reserve(rank_);
  for (auto& b : buckets) out.push_back(Polynomial::from_terms(ring_, std::move(b)));
  return out;
}

Homogeneity VectorPoly::homogeneity(const FreeModule& ambient) const {
  if (ambient.rank() != rank_) throw RingMismatch("vector rank differs from ambient rank");
  if (terms_.empty()) return {Homogeneity::Kind::kZero, 0};
  int d = terms_.front().mono.degree + ambient.degrees[terms_.front().pos];
  for (const ModuleTerm& t : terms_) {
    if (t.mono.degree + ambient.degrees[t.pos] != d) return {Homogeneity::Kind::kInhomogeneous, 0};
  }
  return {Homogeneity::Kind::kHomogeneous, d};
}

VectorPoly& VectorPoly::operator+=(const VectorPoly& o) {
  require_same_ring(*ring_, *o.ring_);
  if (rank_ != o.rank_) throw RingMismatch("vector ranks differ");
  terms_ = merge_terms(ring_->field(), terms_, o.terms_, false);
  return *this;
}

VectorPoly& VectorPoly::operator-=(const VectorPoly& o) {
  require_same_ring(*ring_, *o.ring_);
  if (rank_ != o.rank_) throw RingMismatch("vector ranks differ");
  terms_ = merge_terms(ring_->field(), terms_, o.terms_, true);
  return *this;
}

VectorPoly VectorPoly::scaled(Coeff c) const {
  const PrimeField& F = ring_->field();
  c %= F.prime();
  VectorPoly r(ring_, rank_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const ModuleTerm& t : terms_) r.terms_.push_back({t.mono, t.pos, F.mul(t.coeff, c)});
  return r;
}

VectorPoly VectorPoly::mul_term(const Monomial& m, Coeff c) const {
  const PrimeField& F = ring_->field();
  c %= F.prime();
  VectorPoly r(ring_, rank_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const ModuleTerm& t : terms_) r.terms_.push_back({t.mono * m, t.pos, F.mul(t.coeff, c)});
  return r;
}

VectorPoly VectorPoly::operator*(const Polynomial& f) const {
  require_same_ring(*ring_, *f.ring());
  VectorPoly acc(ring_, rank_);
  for (const Term& t : f.terms()) acc += mul_term(t.mono, t.coeff);
  return acc;
}

VectorPoly VectorPoly::embedded(std::size_t new_rank, std::size_t offset) const {
  if (rank_ + offset > new_rank) throw std::out_of_range("embedding exceeds target rank");
  VectorPoly r(ring_, new_rank);
  r.terms_ = terms_;
  for (ModuleTerm& t : r.terms_) t.pos += static_cast<std::uint32_t>(offset);
  return r;
}

VectorPoly VectorPoly::restricted(std::size_t begin, std::size_t end) const {
  VectorPoly r(ring_, end - begin);
  for (const ModuleTerm& t : terms_) {
    if (t.pos >= begin && t.pos < end) {
      r.terms_.push_back({t.mono, static_cast<std::uint32_t>(t.pos - begin), t.coeff});
    }
  }
  return r;
}

std::string VectorPoly::to_string() const {
  std::string out = "[";
  auto e = entries();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i != 0) out += ", ";
    out += e[i].to_string();
  }
  return out + "]";
}

bool operator==(const VectorPoly& a, const VectorPoly& b) {
  if (a.rank_ != b.rank_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (x.pos != y.pos || x.coeff != y.coeff || !(x.mono == y.mono)) return false;
  }
  return true;
}

std::optional<int> homogeneous_degree(const VectorPoly& v, const FreeModule& ambient) {
  Homogeneity h = v.homogeneity(ambient);
  if (h.kind == Homogeneity::Kind::kInhomogeneous) {
    throw InhomogeneousError("inhomogeneous vector " + v.to_string());
  }
  if (h.kind == Homogeneity::Kind::kZero) return std::nullopt;
  return h.degree;
}

// ---------------------------------------------------------------------------
// Gröbner engine

namespace detail {

struct GbElement {
  std::vector<ModuleTerm> terms;  // augmented: main block first, cofactor block after
  int degree = 0;
  std::uint32_t lead_sig = 0;
};

struct GbData {
  RingPtr ring;
  FreeModule ambient;
  std::size_t main_rank = 0;
  std::vector<int> aug_degrees;
  std::vector<VectorPoly> gens;
  std::vector<int> gen_degrees;
  bool tracked = false;

  std::vector<GbElement> elems;
  std::vector<std::vector<std::uint32_t>> by_pos;
  std::vector<VectorPoly> basis;
  std::vector<VectorPoly> syz;
  std::vector<std::size_t> minimal;
  std::uint64_t spairs = 0;
};

}  // namespace detail

namespace {

using detail::GbData;
using detail::GbElement;

std::uint32_t signature(const Monomial& m) {
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (m.exp[i] != 0) s |= (1U << i);
  }
  return s;
}

struct QuotientTerm {
  std::uint32_t elem;
  Monomial mono;
  Coeff coeff;
};

int find_reducer(const GbData& d, const ModuleTerm& t) {
  if (t.pos >= d.by_pos.size()) return -1;
  const std::uint32_t sig = signature(t.mono);
  int best = -1;
  std::size_t best_len = std::numeric_limits<std::size_t>::max();
  for (std::uint32_t k : d.by_pos[t.pos]) {
    const GbElement& e = d.elems[k];
    if ((e.lead_sig & ~sig) != 0) continue;
    if (e.terms.front().mono.degree > t.mono.degree) continue;
    if (!e.terms.front().mono.divides(t.mono)) continue;
    if (e.terms.size() < best_len) {
      best = static_cast<int>(k);
      best_len = e.terms.size();
    }
  }
  return best;
}

/// Reduces the main-block terms of v. With tail=false only the leading
/// terms are reduced. Cofactor-block terms pass through untouched.
std::vector<ModuleTerm> reduce(const GbData& d, std::vector<ModuleTerm> v, bool tail,
                               std::vector<QuotientTerm>* quotients) {
  const PrimeField& F = d.ring->field();
  std::vector<ModuleTerm> rem;
  std::vector<ModuleTerm> work = std::move(v);
  std::vector<ModuleTerm> tmp;
  std::size_t head = 0;
  while (head < work.size()) {
    const ModuleTerm t = work[head];
    if (t.pos >= d.main_rank) {
      rem.insert(rem.end(), work.begin() + static_cast<std::ptrdiff_t>(head), work.end());
      break;
    }
    int k = find_reducer(d, t);
    if (k < 0) {
      if (!tail) {
        rem.insert(rem.end(), work.begin() + static_cast<std::ptrdiff_t>(head), work.end());
        break;
      }
      rem.push_back(t);
      ++head;
      continue;
    }
    const GbElement& e = d.elems[static_cast<std::size_t>(k)];
    const Monomial m = t.mono / e.terms.front().mono;
    const Coeff c = t.coeff;  // reducer is monic
    if (quotients != nullptr) quotients->push_back({static_cast<std::uint32_t>(k), m, c});
    const Coeff nc = F.neg(c);
    // work[head+1..] + nc * m * e.terms[1..]
    tmp.clear();
    tmp.reserve(work.size() - head + e.terms.size());
    std::size_t i = head + 1, j = 1;
    const std::size_t ne = e.terms.size();
    ModuleTerm cur{};
    bool have_cur = false;
    auto load = [&]() {
      if (j < ne) {
        const ModuleTerm& s = e.terms[j];
        cur = {s.mono * m, s.pos, F.mul(s.coeff, nc)};
        have_cur = true;
      } else {
        have_cur = false;
      }
    };
    load();
    while (i < work.size() && have_cur) {
      int cmp = compare(work[i], cur);
      if (cmp > 0) {
        tmp.push_back(work[i++]);
      } else if (cmp < 0) {
        tmp.push_back(cur);
        ++j;
        load();
      } else {
        Coeff s = F.add(work[i].coeff, cur.coeff);
        if (s != 0) tmp.push_back({cur.mono, cur.pos, s});
        ++i;
        ++j;
        load();
      }
    }
    for (; i < work.size(); ++i) tmp.push_back(work[i]);
    while (have_cur) {
      tmp.push_back(cur);
      ++j;
      load();
    }
    std::swap(work, tmp);
    head = 0;
  }
  return rem;
}

struct Pair {
  std::uint32_t i, j;
  std::uint32_t pos;
  Monomial lcm;
  bool coprime;
};

class Engine {
 public:
  explicit Engine(GbData& d, bool product_criterion)
      : d_(d), F_(d.ring->field()), product_criterion_(product_criterion) {}

  void run(std::vector<std::pair<std::vector<ModuleTerm>, int>> inputs,
           const std::vector<std::size_t>& input_index, std::size_t tracked_count) {
    // Stable ordering of inputs by degree.
    std::vector<std::size_t> order(inputs.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return inputs[a].second < inputs[b].second; });
    std::size_t next = 0;
    constexpr int kNone = std::numeric_limits<int>::max();
    for (;;) {
      int dp = pairs_.empty() ? kNone : pairs_.begin()->first;
      int di = next < order.size() ? inputs[order[next]].second : kNone;
      int deg = std::min(dp, di);
      if (deg == kNone) break;
      if (dp == deg) {
        std::vector<Pair> batch = std::move(pairs_.begin()->second);
        pairs_.erase(pairs_.begin());
        for (const Pair& p : batch) {
          ++d_.spairs;
          handle(reduce(d_, spoly(p), true, nullptr), deg);
        }
      }
      while (next < order.size() && inputs[order[next]].second == deg) {
        std::size_t k = order[next++];
        auto r = reduce(d_, std::move(inputs[k].first), true, nullptr);
        bool survives = !r.empty() && r.front().pos < d_.main_rank;
        if (survives && input_index[k] < tracked_count) d_.minimal.push_back(input_index[k]);
        handle(std::move(r), deg);
      }
    }
    std::sort(d_.minimal.begin(), d_.minimal.end());
  }

 private:
  std::vector<ModuleTerm> spoly(const Pair& p) const {
    const GbElement& a = d_.elems[p.i];
    const GbElement& b = d_.elems[p.j];
    const Monomial ma = p.lcm / a.terms.front().mono;
    const Monomial mb = p.lcm / b.terms.front().mono;
    std::vector<ModuleTerm> ta, tb;
    ta.reserve(a.terms.size() - 1);
    tb.reserve(b.terms.size() - 1);
    for (std::size_t k = 1; k < a.terms.size(); ++k) {
      ta.push_back({a.terms[k].mono * ma, a.terms[k].pos, a.terms[k].coeff});
    }
    for (std::size_t k = 1; k < b.terms.size(); ++k) {
      tb.push_back({b.terms[k].mono * mb, b.terms[k].pos, b.terms[k].coeff});
    }
    return merge_terms(F_, ta, tb, true);
  }

  void handle(std::vector<ModuleTerm> r, int degree) {
    if (r.empty()) return;
    if (r.front().pos >= d_.main_rank) {
      if (d_.tracked) {
        std::vector<ModuleTerm> s;
        s.reserve(r.size());
        for (const ModuleTerm& t : r) {
          s.push_back({t.mono, static_cast<std::uint32_t>(t.pos - d_.main_rank), t.coeff});
        }
        d_.syz.push_back(
            VectorPoly::from_sorted_terms(d_.ring, d_.gen_degrees.size(), std::move(s)));
      }
      return;
    }
    Coeff inv = F_.inv(r.front().coeff);
    if (inv != 1) {
      for (ModuleTerm& t : r) t.coeff = F_.mul(t.coeff, inv);
    }
    add_element(std::move(r), degree);
  }

  void add_element(std::vector<ModuleTerm> terms, int degree) {
    const auto h = static_cast<std::uint32_t>(d_.elems.size());
    const ModuleTerm lead = terms.front();
    GbElement e;
    e.degree = degree;
    e.lead_sig = signature(lead.mono);
    e.terms = std::move(terms);
    const Ring& ring = *d_.ring;
    const int pos_degree = d_.aug_degrees[lead.pos];

    std::vector<Pair> fresh;
    for (std::uint32_t g : d_.by_pos[lead.pos]) {
      const Monomial& lg = d_.elems[g].terms.front().mono;
      fresh.push_back({g, h, lead.pos, ring.lcm(lg, lead.mono), coprime(lg, lead.mono)});
    }
    // Criterion B on existing pairs.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      auto& vec = it->second;
      std::erase_if(vec, [&](const Pair& p) {
        if (p.pos != lead.pos || !lead.mono.divides(p.lcm)) return false;
        const Monomial li = ring.lcm(d_.elems[p.i].terms.front().mono, lead.mono);
        const Monomial lj = ring.lcm(d_.elems[p.j].terms.front().mono, lead.mono);
        return !(li == p.lcm) && !(lj == p.lcm);
      });
      if (vec.empty()) {
        it = pairs_.erase(it);
      } else {
        ++it;
      }
    }
    // Criterion M among the new pairs.
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (a == b) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm)) {
          keep[a] = false;
          break;
        }
      }
    }
    // Criterion F (one pair per lcm), plus the product criterion when it is valid.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      bool dup = false;
      for (const Pair& q : kept) {
        if (q.lcm == fresh[a].lcm) {
          dup = true;
          break;
        }
      }
      if (dup) continue;
      if (product_criterion_) {
        bool any_coprime = false;
        for (std::size_t b = 0; b < fresh.size(); ++b) {
          if (keep[b] && fresh[b].lcm == fresh[a].lcm && fresh[b].coprime) any_coprime = true;
        }
        if (any_coprime) continue;
      }
      kept.push_back(fresh[a]);
    }
    for (const Pair& p : kept) pairs_[p.lcm.degree + pos_degree].push_back(p);

    d_.by_pos[lead.pos].push_back(h);
    d_.elems.push_back(std::move(e));
  }

  GbData& d_;
  const PrimeField& F_;
  bool product_criterion_;
  std::map<int, std::vector<Pair>> pairs_;
};

}  // namespace

GroebnerBasis::GroebnerBasis(RingPtr ring, FreeModule ambient, std::vector<VectorPoly> tracked,
                             std::vector<VectorPoly> untracked, Options options) {
  auto d = std::make_shared<GbData>();
  d->ring = std::move(ring);
  d->ambient = std::move(ambient);
  d->main_rank = d->ambient.rank();
  d->tracked = options.track;
  if (!options.track && !untracked.empty()) {
    tracked.insert(tracked.end(), untracked.begin(), untracked.end());
    untracked.clear();
  }
  if (options.degrees && options.degrees->size() != tracked.size()) {
    throw std::invalid_argument("generator degree list has the wrong length");
  }
  for (const auto& g : tracked) {
    require_same_ring(*d->ring, *g.ring());
    if (g.rank() != d->main_rank) throw RingMismatch("generator rank differs from ambient rank");
  }
  for (const auto& g : untracked) {
    require_same_ring(*d->ring, *g.ring());
    if (g.rank() != d->main_rank) throw RingMismatch("generator rank differs from ambient rank");
  }
  const std::size_t nt = tracked.size();
  d->gen_degrees.resize(nt);
  for (std::size_t k = 0; k < nt; ++k) {
    auto deg = homogeneous_degree(tracked[k], d->ambient);
    if (options.degrees) {
      if (deg && *deg != (*options.degrees)[k]) {
        throw InhomogeneousError("generator " + std::to_string(k) + " has degree " +
                                 std::to_string(*deg) + ", expected " +
                                 std::to_string((*options.degrees)[k]));
      }
      d->gen_degrees[k] = (*options.degrees)[k];
    } else {
      d->gen_degrees[k] = deg.value_or(0);
    }
  }
  d->aug_degrees = d->ambient.degrees;
  if (d->tracked) {
    d->aug_degrees.insert(d->aug_degrees.end(), d->gen_degrees.begin(), d->gen_degrees.end());
  }
  d->by_pos.assign(d->main_rank + (d->tracked ? nt : 0), {});

  // Untracked inputs first, so that within one degree the tracked generators
  // are tested for minimality modulo the untracked submodule.
  std::vector<std::pair<std::vector<ModuleTerm>, int>> inputs;
  std::vector<std::size_t> input_index;
  for (std::size_t k = 0; k < untracked.size(); ++k) {
    auto deg = homogeneous_degree(untracked[k], d->ambient);
    if (!deg) continue;
    inputs.emplace_back(untracked[k].terms(), *deg);
    input_index.push_back(nt + k);
  }
  for (std::size_t k = 0; k < nt; ++k) {
    std::vector<ModuleTerm> terms = tracked[k].terms();
    if (d->tracked) {
      terms.push_back({Monomial{}, static_cast<std::uint32_t>(d->main_rank + k), 1});
    }
    if (terms.empty()) continue;
    inputs.emplace_back(std::move(terms), d->gen_degrees[k]);
    input_index.push_back(k);
  }
  const bool product_criterion = !d->tracked && d->main_rank == 1;
  Engine(*d, product_criterion).run(std::move(inputs), input_index, nt);

  d->basis.reserve(d->elems.size());
  for (const auto& e : d->elems) {
    std::vector<ModuleTerm> main;
    for (const auto& t : e.terms) {
      if (t.pos < d->main_rank) main.push_back(t);
    }
    d->basis.push_back(VectorPoly::from_sorted_terms(d->ring, d->main_rank, std::move(main)));
  }
  d->gens = std::move(tracked);
  data_ = std::move(d);
}

const RingPtr& GroebnerBasis::ring() const { return data_->ring; }
const FreeModule& GroebnerBasis::ambient() const { return data_->ambient; }
const std::vector<VectorPoly>& GroebnerBasis::elements() const { return data_->basis; }
const std::vector<VectorPoly>& GroebnerBasis::generators() const { return data_->gens; }
const std::vector<int>& GroebnerBasis::generator_degrees() const { return data_->gen_degrees; }
bool GroebnerBasis::tracked() const { return data_->tracked; }
const std::vector<std::size_t>& GroebnerBasis::minimal_generator_indices() const {
  return data_->minimal;
}
std::uint64_t GroebnerBasis::spair_count() const { return data_->spairs; }

VectorPoly GroebnerBasis::normal_form(const VectorPoly& v) const {
  require_same_ring(*data_->ring, *v.ring());
  if (v.rank() != data_->main_rank) throw RingMismatch("vector rank differs from ambient rank");
  auto r = reduce(*data_, v.terms(), true, nullptr);
  return VectorPoly::from_sorted_terms(data_->ring, data_->main_rank, std::move(r));
}

MembershipCertificate GroebnerBasis::membership(const VectorPoly& v) const {
  require_same_ring(*data_->ring, *v.ring());
  if (v.rank() != data_->main_rank) throw RingMismatch("vector rank differs from ambient rank");
  std::vector<QuotientTerm> q;
  auto r = reduce(*data_, v.terms(), true, &q);
  std::vector<std::vector<Term>> buckets(data_->elems.size());
  for (const auto& t : q) buckets[t.elem].push_back({t.mono, t.coeff});
  MembershipCertificate cert{{}, VectorPoly::from_sorted_terms(data_->ring, data_->main_rank, std::move(r))};
  cert.coefficients.reserve(buckets.size());
  for (auto& b : buckets) cert.coefficients.push_back(Polynomial::from_terms(data_->ring, std::move(b)));
  return cert;
}

std::optional<std::vector<Polynomial>> GroebnerBasis::lift(const VectorPoly& v) const {
  if (!data_->tracked) throw PreconditionError("lift requires a basis computed with tracking");
  require_same_ring(*data_->ring, *v.ring());
  if (v.rank() != data_->main_rank) throw RingMismatch("vector rank differs from ambient rank");
  auto r = reduce(*data_, v.terms(), true, nullptr);
  const std::size_t nt = data_->gen_degrees.size();
  std::vector<std::vector<Term>> buckets(nt);
  const PrimeField& F = data_->ring->field();
  for (const auto& t : r) {
    if (t.pos < data_->main_rank) return std::nullopt;
    buckets[t.pos - data_->main_rank].push_back({t.mono, F.neg(t.coeff)});
  }
  std::vector<Polynomial> out;
  out.reserve(nt);
  for (auto& b : buckets) out.push_back(Polynomial::from_terms(data_->ring, std::move(b)));
  return out;
}

const std::vector<VectorPoly>& GroebnerBasis::syzygies() const {
  if (!data_->tracked) throw PreconditionError("syzygies require a basis computed with tracking");
  return data_->syz;
}

std::vector<std::vector<Monomial>> GroebnerBasis::leading_monomials() const {
  std::vector<std::vector<Monomial>> out(data_->main_rank);
  for (const auto& e : data_->elems) out[e.terms.front().pos].push_back(e.terms.front().mono);
  return out;
}

// ---------------------------------------------------------------------------

GroebnerBasis buchberger(const RingPtr& ring, const FreeModule& ambient, std::vector<VectorPoly> gens) {
  return GroebnerBasis(ring, ambient, std::move(gens));
}

VectorPoly normal_form(const VectorPoly& v, const GroebnerBasis& gb) { return gb.normal_form(v); }

MembershipCertificate membership(const VectorPoly& v, const GroebnerBasis& gb) { return gb.membership(v); }

std::vector<VectorPoly> syzygy_basis(const RingPtr& ring, const FreeModule& ambient,
                                     std::vector<VectorPoly> gens, std::optional<std::vector<int>> degrees) {
  GroebnerBasis gb(ring, ambient, std::move(gens), GroebnerBasis::Options{true, std::move(degrees)});
  return gb.syzygies();
}

std::vector<VectorPoly> minimal_generators(const RingPtr& ring, const FreeModule& ambient,
                                           std::vector<VectorPoly> gens) {
  GroebnerBasis gb(ring, ambient, gens);
  std::vector<VectorPoly> out;
  for (std::size_t k : gb.minimal_generator_indices()) out.push_back(gens[k]);
  return out;
}

}  // namespace endoring
