#include "endoring/constructions.hpp"

#include <algorithm>
#include <string>

#include "endoring/errors.hpp"

namespace endoring {

namespace {

/// Lexicographically ordered i-subsets of {0..n-1}.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t i) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == i) {
      out.push_back(cur);
      return;
    }
    for (std::size_t s = start; s < n; ++s) {
      cur.push_back(s);
      self(self, s + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& a, const RingPtr& ring) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  Polynomial det(ring);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(a[r][k]);
      }
      minor.push_back(std::move(row));
    }
    Polynomial term = a[0][c] * determinant(minor, ring);
    det = c % 2 == 0 ? det + term : det - term;
  }
  return det;
}

}  // namespace

RingPtr koszul_ring(std::size_t n, Coeff prime) {
  if (n == 0) throw PreconditionError("Koszul complex needs at least one variable");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return make_ring(std::move(names), prime);
}

Resolution koszul_complex(const RingPtr& ring) {
  const std::size_t n = ring->nvars();
  const PrimeField& F = ring->field();
  Resolution res;
  res.ring = ring;
  std::vector<std::vector<std::vector<std::size_t>>> bases;
  for (std::size_t i = 0; i <= n; ++i) {
    bases.push_back(subsets(n, i));
    res.modules.push_back(FreeModule{std::vector<int>(bases.back().size(), static_cast<int>(i))});
  }
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& lower = bases[i - 1];
    std::vector<VectorPoly> cols;
    for (const auto& s : bases[i]) {
      std::vector<ModuleTerm> terms;
      for (std::size_t k = 0; k < s.size(); ++k) {
        auto face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
        auto pos = static_cast<std::uint32_t>(std::lower_bound(lower.begin(), lower.end(), face) - lower.begin());
        terms.push_back({ring->variable(s[k]), pos, k % 2 == 0 ? Coeff{1} : F.neg(1)});
      }
      cols.push_back(VectorPoly::from_terms(ring, lower.size(), std::move(terms)));
    }
    res.differentials.push_back(std::move(cols));
  }
  res.complete = true;
  return res;
}

Resolution koszul_complex(std::size_t n, Coeff prime) { return koszul_complex(koszul_ring(n, prime)); }

FPModule koszul_cycles(std::size_t n, std::size_t i, Coeff prime) {
  if (i < 1 || i + 1 > n) throw PreconditionError("cycle index must satisfy 1 <= i <= n-1");
  auto k = koszul_complex(n, prime);
  return kernel_of(k.differential(i - 1)).module;
}

OneRelationModule one_relation_module(const std::vector<Polynomial>& entries) {
  if (entries.size() < 2) throw PreconditionError("a one-relation module needs at least two entries");
  const RingPtr& ring = entries.front().ring();
  std::optional<int> degree;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto h = entries[i].homogeneity();
    if (!h.homogeneous()) throw InhomogeneousError("entry " + std::to_string(i) + " is not homogeneous");
    if (h.kind == Homogeneity::Kind::kZero) continue;
    if (degree && *degree != h.degree) throw InhomogeneousError("entries must share one degree");
    degree = h.degree;
  }
  if (!degree) throw PreconditionError("a one-relation module needs a nonzero relation");
  auto module = make_module(ring, std::vector<int>(entries.size(), 0), {entries});
  std::vector<Polynomial> ideal;
  for (const auto& e : entries) {
    if (!e.is_zero()) ideal.push_back(e);
  }
  return {std::move(module), std::move(ideal)};
}

DeterminantalModule generic_determinantal(std::size_t n, std::size_t m, Coeff prime) {
  if (n < 1 || m < n) throw PreconditionError("generic determinantal module needs m >= n >= 1");
  if (n > 9 || m > 9) throw PreconditionError("matrix dimensions above 9 are not supported");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) names.push_back("x" + std::to_string(i) + std::to_string(j));
  }
  auto ring = make_ring(std::move(names), prime);
  // entry[j][i] = x_{i+1, j+1}: row j of the m×n matrix
  std::vector<std::vector<Polynomial>> entry(m, std::vector<Polynomial>(n, Polynomial(ring)));
  std::vector<std::vector<Polynomial>> columns;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Polynomial> col;
    for (std::size_t j = 0; j < m; ++j) {
      entry[j][i] = Polynomial::variable(ring, i * m + j);
      col.push_back(entry[j][i]);
    }
    columns.push_back(std::move(col));
  }
  DeterminantalModule out{make_module(ring, std::vector<int>(m, 0), columns), n, m, {}, n < m && m >= 3};
  for (const auto& rows : subsets(m, n)) {
    std::vector<std::vector<Polynomial>> sq;
    for (std::size_t j : rows) sq.push_back(entry[j]);
    out.maximal_minors.push_back(determinant(sq, ring));
  }
  return out;
}

Perfection perfection(const FPModule& m) {
  Perfection p;
  p.projective_dimension = projective_dimension(m);
  p.grade = p.projective_dimension;
  for (std::size_t i = 0; i < p.projective_dimension; ++i) {
    if (!ext(m, i).is_zero()) {
      p.grade = i;
      break;
    }
  }
  return p;
}

FPModule perfect_syzygy(const FPModule& m, std::size_t k) {
  auto p = perfection(m);
  if (!p.perfect()) {
    throw PreconditionError("module is not perfect: grade " + std::to_string(p.grade) + ", projective dimension " +
                            std::to_string(p.projective_dimension));
  }
  if (k < 1 || k >= p.projective_dimension) {
    throw PreconditionError("syzygy index must satisfy 1 <= k < " + std::to_string(p.projective_dimension));
  }
  auto res = free_resolution(m);
  return minimalize(FPModule(m.ring(), res.modules[k], res.differentials[k])).module;
}

}  // namespace endoring
