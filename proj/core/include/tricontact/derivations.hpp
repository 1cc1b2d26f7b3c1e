#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "tricontact/lie_algebra.hpp"
#include "tricontact/linalg.hpp"
#include "tricontact/matrix.hpp"
#include "tricontact/scalar.hpp"

namespace tricontact {

struct DerivationOptions {
  bool skew_symmetric = true;    // g(Dx, y) + g(x, Dy) = 0
  bool commute_with_phi = true;  // D φ_i = φ_i D
  bool kill_reeb = true;         // D ξ_i = 0
};

/// Basis of the space of derivations D[x,y] = [Dx,y] + [x,Dy] subject to
/// the selected structure constraints, found as the kernel of one linear
/// system in the dim² matrix entries of D.
template <ScalarField K>
std::vector<Endomorphism<K>> structure_derivations(const LieAlgebra<K>& L,
                                                   const BilinearForm<K>& g,
                                                   const std::array<Endomorphism<K>, 3>& phi,
                                                   const std::array<Vector<K>, 3>& xi,
                                                   const DerivationOptions& opts = {}) {
  const std::size_t n = L.dim();
  const std::size_t unknowns = n * n;
  auto cell = [n](std::size_t r, std::size_t c) { return r * n + c; };

  std::vector<std::vector<K>> rows;

  // Derivation identity on basis pairs, one equation per component.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector<K>& bij = L.bracket_basis(i, j);
      for (std::size_t m = 0; m < n; ++m) {
        std::vector<K> row(unknowns, K(0));
        for (std::size_t c = 0; c < n; ++c) row[cell(m, c)] = row[cell(m, c)] + bij[c];
        for (std::size_t r = 0; r < n; ++r) {
          row[cell(r, i)] = row[cell(r, i)] - L.bracket_basis(r, j)[m];
          row[cell(r, j)] = row[cell(r, j)] - L.bracket_basis(i, r)[m];
        }
        rows.push_back(std::move(row));
      }
    }

  if (opts.skew_symmetric) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        std::vector<K> row(unknowns, K(0));
        for (std::size_t r = 0; r < n; ++r) {
          row[cell(r, i)] = row[cell(r, i)] + g.entry(r, j);
          row[cell(r, j)] = row[cell(r, j)] + g.entry(i, r);
        }
        rows.push_back(std::move(row));
      }
  }

  if (opts.commute_with_phi) {
    for (const auto& p : phi)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          std::vector<K> row(unknowns, K(0));
          for (std::size_t s = 0; s < n; ++s) {
            row[cell(r, s)] = row[cell(r, s)] + p.entry(s, c);
            row[cell(s, c)] = row[cell(s, c)] - p.entry(r, s);
          }
          rows.push_back(std::move(row));
        }
  }

  if (opts.kill_reeb) {
    for (const auto& x : xi)
      for (std::size_t r = 0; r < n; ++r) {
        std::vector<K> row(unknowns, K(0));
        for (std::size_t c = 0; c < n; ++c) row[cell(r, c)] = x[c];
        rows.push_back(std::move(row));
      }
  }

  Matrix<K> system = Matrix<K>::from_rows(rows);
  std::vector<Endomorphism<K>> basis;
  for (const auto& sol : system.kernel()) {
    Matrix<K> d(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) d(r, c) = sol[cell(r, c)];
    basis.push_back(Endomorphism<K>(std::move(d)));
  }
  return basis;
}

}  // namespace tricontact
