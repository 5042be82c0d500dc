#include "endoring/univariate.hpp"

#include <algorithm>
#include <stdexcept>

#include "endoring/errors.hpp"
#include "endoring/polyring.hpp"

namespace endoring {

UPoly add(const PrimeField& F, const UPoly& a, const UPoly& b) {
  std::vector<Coeff> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(a[i], b[i]);
  return UPoly(std::move(c));
}

UPoly sub(const PrimeField& F, const UPoly& a, const UPoly& b) {
  std::vector<Coeff> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a[i], b[i]);
  return UPoly(std::move(c));
}

UPoly mul(const PrimeField& F, const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::uint64_t> acc(a.coeffs().size() + b.coeffs().size() - 1, 0);
  const std::uint64_t p = F.prime();
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
  }
  std::vector<Coeff> c(acc.begin(), acc.end());
  return UPoly(std::move(c));
}

UPoly scale(const PrimeField& F, const UPoly& a, Coeff s) {
  std::vector<Coeff> c(a.coeffs());
  for (auto& v : c) v = F.mul(v, s);
  return UPoly(std::move(c));
}

UPoly monic(const PrimeField& F, const UPoly& a) {
  if (a.is_zero()) return a;
  return scale(F, a, F.inv(a.lead()));
}

std::pair<UPoly, UPoly> divmod(const PrimeField& F, const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly{}, a};
  std::vector<Coeff> r(a.coeffs());
  std::vector<Coeff> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
  const Coeff inv_lead = F.inv(b.lead());
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    Coeff c = r[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Coeff f = F.mul(c, inv_lead);
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) {
      auto idx = static_cast<std::size_t>(i - db + j);
      r[idx] = F.sub(r[idx], F.mul(f, b[static_cast<std::size_t>(j)]));
    }
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly mod(const PrimeField& F, const UPoly& a, const UPoly& b) { return divmod(F, a, b).second; }

UPoly gcd(const PrimeField& F, UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

ExtGcd ext_gcd(const PrimeField& F, const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(1), s1;
  UPoly t0, t1 = UPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(F, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = sub(F, s0, mul(F, q, s1));
    UPoly t2 = sub(F, t0, mul(F, q, t1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Coeff inv = F.inv(r0.lead());
  return {scale(F, r0, inv), scale(F, s0, inv), scale(F, t0, inv)};
}

UPoly derivative(const PrimeField& F, const UPoly& a) {
  if (a.degree() < 1) return {};
  std::vector<Coeff> c(static_cast<std::size_t>(a.degree()));
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
    c[i - 1] = F.mul(a[i], F.from_int(static_cast<std::int64_t>(i)));
  }
  return UPoly(std::move(c));
}

UPoly powmod(const PrimeField& F, const UPoly& base, std::uint64_t e, const UPoly& m) {
  UPoly result = mod(F, UPoly::constant(1), m);
  UPoly b = mod(F, base, m);
  while (e != 0) {
    if (e & 1U) result = mod(F, mul(F, result, b), m);
    b = mod(F, mul(F, b, b), m);
    e >>= 1U;
  }
  return result;
}

namespace {

using FactorList = std::vector<std::pair<UPoly, int>>;

/// f(x) = g(x^p) -> g(x); valid over F_p since a^p = a.
UPoly pth_root(const PrimeField& F, const UPoly& f) {
  const std::size_t p = F.prime();
  std::vector<Coeff> c(static_cast<std::size_t>(f.degree()) / p + 1, 0);
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c[i / p] = f[i];
  return UPoly(std::move(c));
}

void squarefree(const PrimeField& F, const UPoly& f, int mult, FactorList& out) {
  if (f.degree() < 1) return;
  UPoly d = derivative(F, f);
  if (d.is_zero()) {
    squarefree(F, pth_root(F, f), mult * static_cast<int>(F.prime()), out);
    return;
  }
  UPoly c = gcd(F, f, d);
  UPoly w = divmod(F, f, c).first;
  int i = 1;
  while (w.degree() >= 1) {
    UPoly y = gcd(F, w, c);
    UPoly fac = divmod(F, w, y).first;
    if (fac.degree() >= 1) out.emplace_back(monic(F, fac), i * mult);
    ++i;
    w = y;
    c = divmod(F, c, y).first;
  }
  if (c.degree() >= 1) squarefree(F, pth_root(F, c), mult * static_cast<int>(F.prime()), out);
}

/// Splits a squarefree monic f into products of irreducibles of equal degree.
std::vector<std::pair<UPoly, int>> distinct_degree(const PrimeField& F, UPoly f) {
  std::vector<std::pair<UPoly, int>> out;
  UPoly h = UPoly::x();
  int i = 1;
  while (f.degree() >= 2 * i) {
    h = powmod(F, h, F.prime(), f);
    UPoly g = gcd(F, f, sub(F, h, UPoly::x()));
    if (g.degree() >= 1) {
      out.emplace_back(g, i);
      f = divmod(F, f, g).first;
      h = mod(F, h, f);
    }
    ++i;
  }
  if (f.degree() >= 1) out.emplace_back(monic(F, f), f.degree());
  return out;
}

void equal_degree(const PrimeField& F, const UPoly& g, int d, std::mt19937_64& rng,
                  std::vector<UPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  std::uniform_int_distribution<Coeff> coeff(0, F.prime() - 1);
  for (;;) {
    std::vector<Coeff> a_c(static_cast<std::size_t>(g.degree()));
    for (auto& v : a_c) v = coeff(rng);
    UPoly a(std::move(a_c));
    if (a.degree() < 1) continue;
    UPoly b;
    if (F.prime() == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      UPoly t = a, u = a;
      for (int k = 1; k < d; ++k) {
        u = mod(F, mul(F, u, u), g);
        t = add(F, t, u);
      }
      b = t;
    } else {
      // a^((p^d - 1)/2) computed as (a * a^p * ... * a^(p^(d-1)))^((p-1)/2).
      UPoly u = a, t = a;
      for (int k = 1; k < d; ++k) {
        u = powmod(F, u, F.prime(), g);
        t = mod(F, mul(F, t, u), g);
      }
      b = sub(F, powmod(F, t, (F.prime() - 1) / 2, g), UPoly::constant(1));
    }
    UPoly s = gcd(F, g, b);
    if (s.degree() >= 1 && s.degree() < g.degree()) {
      equal_degree(F, s, d, rng, out);
      equal_degree(F, divmod(F, g, s).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<UPoly, int>> factor(const PrimeField& F, const UPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw PreconditionError("cannot factor the zero polynomial");
  std::mt19937_64 rng(seed);
  FactorList sqf;
  squarefree(F, monic(F, f), 1, sqf);
  FactorList out;
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, d] : distinct_degree(F, part)) {
      std::vector<UPoly> irreducibles;
      equal_degree(F, block, d, rng, irreducibles);
      for (auto& q : irreducibles) out.emplace_back(monic(F, q), mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (!(a.first == b.first)) return a.first < b.first;
    return a.second < b.second;
  });
  // Merge identical factors arising from different squarefree layers.
  FactorList merged;
  for (auto& e : out) {
    if (!merged.empty() && merged.back().first == e.first) {
      merged.back().second += e.second;
    } else {
      merged.push_back(std::move(e));
    }
  }
  return merged;
}

// ---------------------------------------------------------------------------

std::vector<Factor> factor_univariate(const Polynomial& f, std::uint64_t seed) {
  if (f.is_zero()) throw PreconditionError("factor_univariate: zero input");
  const Ring& ring = *f.ring();
  std::optional<std::size_t> var;
  for (const Term& t : f.terms()) {
    for (std::size_t i = 0; i < ring.nvars(); ++i) {
      if (t.mono.exp[i] == 0) continue;
      if (var && *var != i) throw PreconditionError("factor_univariate: more than one variable occurs");
      var = i;
    }
  }
  if (!var) return {};  // nonzero constant: a unit
  std::vector<Coeff> dense(static_cast<std::size_t>(f.leading().mono.exp[*var]) + 1, 0);
  for (const Term& t : f.terms()) dense[t.mono.exp[*var]] = t.coeff;
  std::vector<Factor> out;
  for (const auto& [q, mult] : factor(ring.field(), UPoly(std::move(dense)), seed)) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < q.coeffs().size(); ++k) {
      if (q[k] == 0) continue;
      Monomial m;
      m.exp[*var] = static_cast<std::uint8_t>(k);
      m.degree = ring.weights()[*var] * static_cast<int>(k);
      terms.push_back({m, q[k]});
    }
    out.push_back({Polynomial::from_terms(f.ring(), std::move(terms)), mult});
  }
  return out;
}

}  // namespace endoring
