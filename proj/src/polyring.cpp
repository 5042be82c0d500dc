#include "endoring/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

#include "endoring/errors.hpp"

namespace endoring {

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned s = unsigned{a.exp[i]} + b.exp[i];
    if (s > 255U) throw std::overflow_error("monomial exponent exceeds 255");
    r.exp[i] = static_cast<std::uint8_t>(s);
  }
  r.degree = a.degree + b.degree;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exp[i] = static_cast<std::uint8_t>(a.exp[i] - b.exp[i]);
  }
  r.degree = a.degree - b.degree;
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (a.exp[i] != 0 && b.exp[i] != 0) return false;
  }
  return true;
}

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

Ring::Ring(PrimeField field, std::vector<std::string> names, std::vector<int> weights)
    : field_(field), names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.empty()) throw std::invalid_argument("ring needs at least one variable");
  if (names_.size() > kMaxVariables) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables) + " variables supported");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_identifier(n)) throw std::invalid_argument("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
  if (weights_.empty()) weights_.assign(names_.size(), 1);
  if (weights_.size() != names_.size()) {
    throw std::invalid_argument("variable weight count differs from variable count");
  }
  for (int w : weights_) {
    if (w <= 0) throw std::invalid_argument("variable weights must be positive");
  }
}

bool Ring::standard_grading() const {
  return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

Monomial Ring::variable(std::size_t i) const {
  Monomial m;
  m.exp.at(i) = 1;
  m.degree = weights_.at(i);
  return m;
}

Monomial Ring::lcm(const Monomial& a, const Monomial& b) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
  r.degree = degree_of(r.exp);
  return r;
}

std::int32_t Ring::degree_of(const std::array<std::uint8_t, kMaxVariables>& exp) const {
  std::int32_t d = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) d += weights_[i] * exp[i];
  return d;
}

std::vector<Monomial> Ring::monomials_of_degree(int degree) const {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  Monomial cur;
  // Recursive enumeration over variable index.
  auto rec = [&](auto&& self, std::size_t var, int remaining) -> void {
    if (var + 1 == nvars()) {
      if (remaining % weights_[var] == 0) {
        int e = remaining / weights_[var];
        if (e > 255) return;
        cur.exp[var] = static_cast<std::uint8_t>(e);
        cur.degree = degree;
        out.push_back(cur);
        cur.exp[var] = 0;
      }
      return;
    }
    for (int e = 0; e * weights_[var] <= remaining && e <= 255; ++e) {
      cur.exp[var] = static_cast<std::uint8_t>(e);
      self(self, var + 1, remaining - e * weights_[var]);
    }
    cur.exp[var] = 0;
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return compare(a, b) > 0; });
  return out;
}

RingPtr make_ring(std::vector<std::string> names, Coeff prime, std::vector<int> weights) {
  return std::make_shared<const Ring>(PrimeField(prime), std::move(names), std::move(weights));
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (&a != &b && !(a == b)) throw RingMismatch("operands belong to different rings");
}

// ---------------------------------------------------------------------------

Polynomial Polynomial::constant(const RingPtr& ring, Coeff c) {
  Polynomial p(ring);
  c %= ring->prime();
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::from_int(const RingPtr& ring, std::int64_t c) {
  return constant(ring, ring->field().from_int(c));
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t i) {
  return monomial(ring, ring->variable(i), 1);
}

Polynomial Polynomial::monomial(const RingPtr& ring, const Monomial& m, Coeff c) {
  Polynomial p(ring);
  c %= ring->prime();
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(const RingPtr& ring, std::vector<Term> terms) {
  const PrimeField& F = ring->field();
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return compare(a.mono, b.mono) > 0; });
  Polynomial p(ring);
  for (const Term& t : terms) {
    Coeff c = t.coeff % F.prime();
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = F.add(p.terms_.back().coeff, c);
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (c != 0) {
      p.terms_.push_back({t.mono, c});
    }
  }
  return p;
}

Coeff Polynomial::constant_coefficient() const {
  if (terms_.empty() || terms_.back().mono.degree != 0) return 0;
  return terms_.back().coeff;
}

Coeff Polynomial::coefficient(const Monomial& m) const {
  for (const Term& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return 0;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const Term& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree));
  return d;
}

Homogeneity Polynomial::homogeneity() const {
  if (terms_.empty()) return {Homogeneity::Kind::kZero, 0};
  int d = terms_.front().mono.degree;
  for (const Term& t : terms_) {
    if (t.mono.degree != d) return {Homogeneity::Kind::kInhomogeneous, 0};
  }
  return {Homogeneity::Kind::kHomogeneous, d};
}

Homogeneity is_homogeneous(const Polynomial& f) { return f.homogeneity(); }

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  const PrimeField& F = ring_->field();
  for (Term& t : r.terms_) t.coeff = F.neg(t.coeff);
  return r;
}

namespace {

std::vector<Term> merge_add(const PrimeField& F, const std::vector<Term>& a,
                            const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) {
      c = -1;
    } else if (j == b.size()) {
      c = 1;
    } else {
      c = compare(a[i].mono, b[j].mono);
    }
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      Coeff v = subtract ? F.neg(b[j].coeff) : b[j].coeff;
      out.push_back({b[j++].mono, v});
    } else {
      Coeff v = subtract ? F.sub(a[i].coeff, b[j].coeff) : F.add(a[i].coeff, b[j].coeff);
      if (v != 0) out.push_back({a[i].mono, v});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_ring(*ring_, *o.ring_);
  terms_ = merge_add(ring_->field(), terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_ring(*ring_, *o.ring_);
  terms_ = merge_add(ring_->field(), terms_, o.terms_, true);
  return *this;
}

Polynomial Polynomial::scaled(Coeff c) const {
  const PrimeField& F = ring_->field();
  c %= F.prime();
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.mono, F.mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, Coeff c) const {
  const PrimeField& F = ring_->field();
  c %= F.prime();
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves the order.
  for (const Term& t : terms_) r.terms_.push_back({t.mono * m, F.mul(t.coeff, c)});
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(*a.ring_, *b.ring_);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& large = a.size() <= b.size() ? b : a;
  Polynomial acc(a.ring_);
  for (const Term& t : small.terms_) acc += large.mul_term(t.mono, t.coeff);
  return acc;
}

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial r(ring_);
  for (const Term& t : terms_) {
    if (t.mono.degree == degree) r.terms_.push_back(t);
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const PrimeField& F = ring_->field();
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    std::int64_t c = F.to_signed(t.coeff);
    bool negative = c < 0;
    std::uint64_t mag = negative ? static_cast<std::uint64_t>(-c) : static_cast<std::uint64_t>(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      unsigned e = t.mono.exp[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->names()[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += std::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += std::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(*a.ring_ == *b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : s_(text), ring_(ring), F_(ring->field()) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    terms.push_back(term(negative));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') throw ParseError(std::string("unexpected character '") + c + "'", pos_);
      ++pos_;
      terms.push_back(term(c == '-'));
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Term term(bool negative) {
    Term t{Monomial{}, 1};
    factor(t);
    for (;;) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      factor(t);
    }
    if (negative) t.coeff = F_.neg(t.coeff);
    return t;
  }

  Coeff integer() {
    std::size_t start = pos_;
    Coeff v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = F_.add(F_.mul(v, 10), static_cast<Coeff>(peek() - '0'));
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected integer", pos_);
    return v;
  }

  unsigned exponent() {
    std::size_t start = pos_;
    unsigned long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<unsigned>(peek() - '0');
      if (v > 255) throw ParseError("exponent too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected exponent", pos_);
    return static_cast<unsigned>(v);
  }

  void factor(Term& t) {
    skip_ws();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Coeff v = integer();
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        std::size_t den_pos = pos_;
        Coeff d = integer();
        if (d == 0) throw ParseError("coefficient denominator is divisible by the characteristic", den_pos);
        v = F_.mul(v, F_.inv(d));
      }
      t.coeff = F_.mul(t.coeff, v);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (!idx) throw ParseError("unknown variable '" + std::string(name) + "'", start);
      unsigned e = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        e = exponent();
      }
      Monomial m;
      m.exp[*idx] = static_cast<std::uint8_t>(e);
      m.degree = ring_->weights()[*idx] * static_cast<int>(e);
      t.mono = t.mono * m;
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view s_;
  RingPtr ring_;
  const PrimeField& F_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).parse();
}

}  // namespace endoring
