#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "tricontact/linalg.hpp"
#include "tricontact/matrix.hpp"
#include "tricontact/scalar.hpp"

namespace tricontact {

/// Linear subspace of the working coordinate space. The basis keeps a
/// maximal independent subset of the generators in their given order, so
/// deterministic seed choices survive.
template <ScalarField K>
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient) { return Subspace(ambient, {}); }

  static Subspace full(std::size_t ambient) {
    std::vector<Vector<K>> basis;
    for (std::size_t i = 0; i < ambient; ++i) basis.push_back(Vector<K>::basis(ambient, i));
    return Subspace(ambient, std::move(basis));
  }

  static Subspace span(std::size_t ambient, const std::vector<Vector<K>>& generators) {
    for (const auto& v : generators)
      if (v.dim() != ambient) throw std::invalid_argument("Subspace: dimension mismatch");
    Subspace out(ambient, {});
    for (const auto& v : generators) {
      if (v.is_zero() || out.contains(v)) continue;
      out.basis_.push_back(v);
    }
    return out;
  }

  /// Null space of a matrix, as a subspace of its column space.
  static Subspace kernel_of(const Matrix<K>& m) {
    std::vector<Vector<K>> gens;
    for (auto& v : m.kernel()) gens.push_back(Vector<K>(std::move(v)));
    return span(m.cols(), gens);
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector<K>>& basis() const { return basis_; }

  Matrix<K> as_rows() const {
    Matrix<K> m(basis_.size(), ambient_);
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (std::size_t j = 0; j < ambient_; ++j) m(i, j) = basis_[i][j];
    return m;
  }

  bool contains(const Vector<K>& v) const {
    if (v.dim() != ambient_) throw std::invalid_argument("Subspace: dimension mismatch");
    if (v.is_zero()) return true;
    Matrix<K> m(basis_.size() + 1, ambient_);
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (std::size_t j = 0; j < ambient_; ++j) m(i, j) = basis_[i][j];
    for (std::size_t j = 0; j < ambient_; ++j) m(basis_.size(), j) = v[j];
    return m.rank() == dim();
  }

  bool contains(const Subspace& o) const {
    for (const auto& v : o.basis_)
      if (!contains(v)) return false;
    return true;
  }

  bool same_as(const Subspace& o) const {
    return ambient_ == o.ambient_ && dim() == o.dim() && contains(o);
  }

 private:
  Subspace(std::size_t ambient, std::vector<Vector<K>> basis)
      : ambient_(ambient), basis_(std::move(basis)) {}

  std::size_t ambient_ = 0;
  std::vector<Vector<K>> basis_;
};

}  // namespace tricontact
