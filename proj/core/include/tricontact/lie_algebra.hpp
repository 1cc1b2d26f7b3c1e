#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tricontact/forms.hpp"
#include "tricontact/linalg.hpp"
#include "tricontact/matrix.hpp"
#include "tricontact/scalar.hpp"
#include "tricontact/subspace.hpp"

namespace tricontact {

/// Sparse structure-constant entry: [e_i, e_j] has coefficient value on
/// e_k, stored for i < j only; antisymmetry is implicit.
template <ScalarField K>
struct StructureConstant {
  std::size_t i, j, k;
  K value;
};

/// Finite-dimensional Lie algebra given by structure constants in a fixed
/// basis. Construction does not validate the Jacobi identity; verification
/// entry points check it explicitly so broken inputs stay representable.
template <ScalarField K>
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::size_t dim)
      : dim_(dim), table_(dim * dim, Vector<K>(dim)), zero_(dim) {}

  std::size_t dim() const { return dim_; }

  void set_structure_constant(std::size_t i, std::size_t j, std::size_t k, const K& value) {
    check_index(i);
    check_index(j);
    check_index(k);
    if (i == j) throw std::invalid_argument("LieAlgebra: bracket indices must differ");
    table_[i * dim_ + j][k] = value;
    table_[j * dim_ + i][k] = -value;
  }

  void set_bracket(std::size_t i, std::size_t j, const Vector<K>& v) {
    check_index(i);
    check_index(j);
    if (i == j) throw std::invalid_argument("LieAlgebra: bracket indices must differ");
    if (v.dim() != dim_) throw std::invalid_argument("LieAlgebra: dimension mismatch");
    table_[i * dim_ + j] = v;
    table_[j * dim_ + i] = -v;
  }

  const Vector<K>& bracket_basis(std::size_t i, std::size_t j) const {
    check_index(i);
    check_index(j);
    if (i == j) return zero_;
    return table_[i * dim_ + j];
  }

  Vector<K> bracket(const Vector<K>& x, const Vector<K>& y) const {
    if (x.dim() != dim_ || y.dim() != dim_)
      throw std::invalid_argument("LieAlgebra: dimension mismatch");
    Vector<K> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (scalar_ops<K>::is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (i == j || scalar_ops<K>::is_zero(y[j])) continue;
        const K f = x[i] * y[j];
        const Vector<K>& b = table_[i * dim_ + j];
        for (std::size_t k = 0; k < dim_; ++k) out[k] = out[k] + f * b[k];
      }
    }
    return out;
  }

  /// Matrix of ad_x : y ↦ [x, y].
  Matrix<K> ad(const Vector<K>& x) const {
    Matrix<K> m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      Vector<K> col = bracket(x, Vector<K>::basis(dim_, j));
      for (std::size_t i = 0; i < dim_; ++i) m(i, j) = col[i];
    }
    return m;
  }

  /// Nonzero structure constants with i < j, in deterministic order.
  std::vector<StructureConstant<K>> structure_constants() const {
    std::vector<StructureConstant<K>> out;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j) {
        const Vector<K>& b = table_[i * dim_ + j];
        for (std::size_t k = 0; k < dim_; ++k)
          if (!scalar_ops<K>::is_zero(b[k])) out.push_back({i, j, k, b[k]});
      }
    return out;
  }

  bool equal(const LieAlgebra& o) const {
    if (dim_ != o.dim_) return false;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        if (!table_[i * dim_ + j].equal(o.table_[i * dim_ + j])) return false;
    return true;
  }

 private:
  void check_index(std::size_t i) const {
    if (i >= dim_) throw std::out_of_range("LieAlgebra: basis index out of range");
  }

  std::size_t dim_ = 0;
  std::vector<Vector<K>> table_;
  Vector<K> zero_;
};

template <ScalarField K>
struct JacobiViolation {
  std::size_t i, j, k;
  Vector<K> defect;
};

template <ScalarField K>
struct JacobiReport {
  std::vector<JacobiViolation<K>> violations;
  bool passed() const { return violations.empty(); }
};

/// Checks Σ_cyclic [[e_i,e_j],e_k] = 0 on all basis triples i < j < k.
template <ScalarField K>
JacobiReport<K> jacobi_check(const LieAlgebra<K>& L) {
  JacobiReport<K> report;
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector<K> defect = L.bracket(L.bracket_basis(i, j), Vector<K>::basis(n, k)) +
                           L.bracket(L.bracket_basis(j, k), Vector<K>::basis(n, i)) +
                           L.bracket(L.bracket_basis(k, i), Vector<K>::basis(n, j));
        if (!defect.is_zero()) report.violations.push_back({i, j, k, std::move(defect)});
      }
  return report;
}

/// Chevalley–Eilenberg differential for left-invariant forms:
/// dω(x_0,…,x_k) = Σ_{a<b} (−1)^{a+b} ω([x_a,x_b], x_0,…,x̂_a,…,x̂_b,…,x_k).
/// In degree one this is dη(x, y) = −η([x, y]).
template <ScalarField K>
AlternatingForm<K> ce_differential(const LieAlgebra<K>& L, const AlternatingForm<K>& w) {
  if (w.dim() != L.dim()) throw std::invalid_argument("ce_differential: dimension mismatch");
  const std::size_t n = L.dim();
  const std::size_t k = w.degree();
  AlternatingForm<K> out(n, k + 1);
  if (k + 1 > n || w.is_zero()) return out;

  auto idx = first_combination(k + 1);
  do {
    K total(0);
    for (std::size_t a = 0; a + 1 < idx.size(); ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        const Vector<K>& br = L.bracket_basis(idx[a], idx[b]);
        if (br.is_zero()) continue;
        std::vector<std::size_t> rest;
        rest.reserve(k);
        for (std::size_t s = 0; s < idx.size(); ++s)
          if (s != a && s != b) rest.push_back(idx[s]);
        K inner(0);
        for (std::size_t c = 0; c < n; ++c) {
          if (scalar_ops<K>::is_zero(br[c])) continue;
          std::vector<std::size_t> args;
          args.reserve(k);
          args.push_back(c);
          args.insert(args.end(), rest.begin(), rest.end());
          inner = inner + br[c] * w.coefficient(std::move(args));
        }
        total = ((a + b) % 2) ? total - inner : total + inner;
      }
    }
    if (!scalar_ops<K>::is_zero(total)) out.add_term(idx, total);
  } while (next_combination(idx, n));
  return out;
}

/// Center {x : [x, e_j] = 0 for all j}, the kernel of the stacked
/// bracket-with-basis maps.
template <ScalarField K>
Subspace<K> center(const LieAlgebra<K>& L) {
  const std::size_t n = L.dim();
  if (n == 0) return Subspace<K>::zero(0);
  Matrix<K> stacked(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const Vector<K>& b = L.bracket_basis(i, j);
      for (std::size_t r = 0; r < n; ++r) stacked(j * n + r, i) = b[r];
    }
  return Subspace<K>::kernel_of(stacked);
}

/// Lower central series L ⊇ [L,L] ⊇ [L,[L,L]] ⊇ …, starting at L itself
/// and ending with the first zero term (omitted).
template <ScalarField K>
std::vector<Subspace<K>> lower_central_series(const LieAlgebra<K>& L) {
  const std::size_t n = L.dim();
  std::vector<Subspace<K>> series;
  Subspace<K> current = Subspace<K>::full(n);
  while (current.dim() > 0) {
    series.push_back(current);
    std::vector<Vector<K>> gens;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& v : current.basis()) {
        Vector<K> b = L.bracket(Vector<K>::basis(n, i), v);
        if (!b.is_zero()) gens.push_back(std::move(b));
      }
    Subspace<K> next = Subspace<K>::span(n, gens);
    if (next.dim() == current.dim()) {
      series.push_back(next);
      return series;
    }
    current = next;
  }
  return series;
}

/// Nilpotency verdict and class (number of nonzero terms of the series).
template <ScalarField K>
std::pair<bool, std::size_t> is_nilpotent(const LieAlgebra<K>& L) {
  auto series = lower_central_series(L);
  if (!series.empty() && series.back().dim() > 0) return {false, 0};
  return {true, series.size()};
}

}  // namespace tricontact
