#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tricontact/matrix.hpp"
#include "tricontact/scalar.hpp"

namespace tricontact {

template <ScalarField K>
struct Vector {
  std::vector<K> coords;

  Vector() = default;
  explicit Vector(std::size_t dim) : coords(dim, K(0)) {}
  Vector(std::initializer_list<K> init) : coords(init) {}
  explicit Vector(std::vector<K> c) : coords(std::move(c)) {}

  static Vector basis(std::size_t dim, std::size_t i) {
    Vector v(dim);
    v.coords.at(i) = K(1);
    return v;
  }

  std::size_t dim() const { return coords.size(); }
  K& operator[](std::size_t i) { return coords[i]; }
  const K& operator[](std::size_t i) const { return coords[i]; }

  Vector operator+(const Vector& o) const {
    check_dim(o.dim());
    Vector r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = coords[i] + o[i];
    return r;
  }
  Vector operator-(const Vector& o) const {
    check_dim(o.dim());
    Vector r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = coords[i] - o[i];
    return r;
  }
  Vector operator-() const {
    Vector r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = -coords[i];
    return r;
  }
  Vector scaled(const K& f) const {
    Vector r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = coords[i] * f;
    return r;
  }

  bool is_zero() const {
    for (const K& x : coords)
      if (!scalar_ops<K>::is_zero(x)) return false;
    return true;
  }
  bool equal(const Vector& o) const {
    if (dim() != o.dim()) return false;
    for (std::size_t i = 0; i < dim(); ++i)
      if (!scalar_ops<K>::equal(coords[i], o[i])) return false;
    return true;
  }

  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < dim(); ++i) {
      if (i) out += ", ";
      out += scalar_ops<K>::str(coords[i]);
    }
    return out + ")";
  }

 private:
  void check_dim(std::size_t d) const {
    if (d != dim()) throw std::invalid_argument("Vector: dimension mismatch");
  }
};

template <ScalarField K>
struct Covector {
  std::vector<K> coords;

  Covector() = default;
  explicit Covector(std::size_t dim) : coords(dim, K(0)) {}
  Covector(std::initializer_list<K> init) : coords(init) {}
  explicit Covector(std::vector<K> c) : coords(std::move(c)) {}

  static Covector basis(std::size_t dim, std::size_t i) {
    Covector v(dim);
    v.coords.at(i) = K(1);
    return v;
  }

  std::size_t dim() const { return coords.size(); }
  K& operator[](std::size_t i) { return coords[i]; }
  const K& operator[](std::size_t i) const { return coords[i]; }

  K operator()(const Vector<K>& v) const {
    if (v.dim() != dim()) throw std::invalid_argument("Covector: dimension mismatch");
    K acc(0);
    for (std::size_t i = 0; i < dim(); ++i) acc = acc + coords[i] * v[i];
    return acc;
  }

  Covector scaled(const K& f) const {
    Covector r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = coords[i] * f;
    return r;
  }

  bool is_zero() const {
    for (const K& x : coords)
      if (!scalar_ops<K>::is_zero(x)) return false;
    return true;
  }
  bool equal(const Covector& o) const {
    if (dim() != o.dim()) return false;
    for (std::size_t i = 0; i < dim(); ++i)
      if (!scalar_ops<K>::equal(coords[i], o[i])) return false;
    return true;
  }
};

/// Linear endomorphism; column j of the matrix is the image of e_j.
template <ScalarField K>
class Endomorphism {
 public:
  Endomorphism() = default;
  explicit Endomorphism(Matrix<K> m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw std::invalid_argument("Endomorphism: square matrix required");
  }

  static Endomorphism zero(std::size_t dim) { return Endomorphism(Matrix<K>(dim, dim)); }
  static Endomorphism identity(std::size_t dim) { return Endomorphism(Matrix<K>::identity(dim)); }

  std::size_t dim() const { return m_.rows(); }
  const Matrix<K>& matrix() const { return m_; }
  K& entry(std::size_t r, std::size_t c) { return m_(r, c); }
  const K& entry(std::size_t r, std::size_t c) const { return m_(r, c); }

  Vector<K> operator()(const Vector<K>& v) const { return Vector<K>(m_.apply(v.coords)); }
  Vector<K> column(std::size_t j) const {
    Vector<K> v(dim());
    for (std::size_t i = 0; i < dim(); ++i) v[i] = m_(i, j);
    return v;
  }

  /// Composition: (this ∘ o)(x) = this(o(x)).
  Endomorphism compose(const Endomorphism& o) const { return Endomorphism(m_ * o.m_); }

  Endomorphism operator+(const Endomorphism& o) const { return Endomorphism(m_ + o.m_); }
  Endomorphism operator-(const Endomorphism& o) const { return Endomorphism(m_ - o.m_); }
  Endomorphism scaled(const K& f) const { return Endomorphism(m_.scaled(f)); }

  bool equal(const Endomorphism& o) const { return m_.equal(o.m_); }
  bool is_zero() const { return m_.is_zero(); }

 private:
  Matrix<K> m_;
};

/// Rank-one map v ⊗ η : x ↦ η(x)·v.
template <ScalarField K>
Endomorphism<K> outer(const Vector<K>& v, const Covector<K>& eta) {
  if (v.dim() != eta.dim()) throw std::invalid_argument("outer: dimension mismatch");
  Matrix<K> m(v.dim(), v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) m(i, j) = v[i] * eta[j];
  return Endomorphism<K>(m);
}

/// Symmetric bilinear form given by its Gram matrix in the working basis.
template <ScalarField K>
class BilinearForm {
 public:
  BilinearForm() = default;
  explicit BilinearForm(Matrix<K> m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw std::invalid_argument("BilinearForm: square matrix required");
  }

  static BilinearForm identity(std::size_t dim) { return BilinearForm(Matrix<K>::identity(dim)); }
  static BilinearForm diagonal(const std::vector<K>& d) {
    Matrix<K> m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return BilinearForm(m);
  }

  std::size_t dim() const { return m_.rows(); }
  const Matrix<K>& matrix() const { return m_; }
  K& entry(std::size_t a, std::size_t b) { return m_(a, b); }
  const K& entry(std::size_t a, std::size_t b) const { return m_(a, b); }

  K operator()(const Vector<K>& x, const Vector<K>& y) const {
    if (x.dim() != dim() || y.dim() != dim())
      throw std::invalid_argument("BilinearForm: dimension mismatch");
    K acc(0);
    for (std::size_t i = 0; i < dim(); ++i) {
      if (scalar_ops<K>::is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim(); ++j) acc = acc + x[i] * m_(i, j) * y[j];
    }
    return acc;
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = i + 1; j < dim(); ++j)
        if (!scalar_ops<K>::equal(m_(i, j), m_(j, i))) return false;
    return true;
  }

  /// Exact mode: all leading principal minors positive.
  /// Float mode: Cholesky pivots must exceed the session tolerance.
  bool is_positive_definite() const {
    if constexpr (scalar_ops<K>::exact) {
      for (std::size_t k = 1; k <= dim(); ++k) {
        Matrix<K> sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m_(i, j);
        if (!scalar_ops<K>::positive(sub.determinant())) return false;
      }
      return true;
    } else {
      Matrix<K> a = m_;
      const std::size_t n = dim();
      for (std::size_t c = 0; c < n; ++c) {
        if (!(scalar_ops<K>::to_double(a(c, c)) > float_tolerance())) return false;
        for (std::size_t i = c + 1; i < n; ++i) {
          const K f = a(i, c) / a(c, c);
          for (std::size_t j = c; j < n; ++j) a(i, j) = a(i, j) - f * a(c, j);
        }
      }
      return true;
    }
  }

 private:
  Matrix<K> m_;
};

/// Metric dual of a vector: metric_dual(g, v)(w) = g(v, w).
template <ScalarField K>
Covector<K> metric_dual(const BilinearForm<K>& g, const Vector<K>& v) {
  if (v.dim() != g.dim()) throw std::invalid_argument("metric_dual: dimension mismatch");
  Covector<K> eta(g.dim());
  for (std::size_t j = 0; j < g.dim(); ++j) {
    K acc(0);
    for (std::size_t i = 0; i < g.dim(); ++i) acc = acc + v[i] * g.entry(i, j);
    eta[j] = acc;
  }
  return eta;
}

/// Inverse of metric_dual. Empty when g is singular (non-metric input).
template <ScalarField K>
std::optional<Vector<K>> inverse_dual(const BilinearForm<K>& g, const Covector<K>& eta) {
  if (eta.dim() != g.dim()) throw std::invalid_argument("inverse_dual: dimension mismatch");
  auto x = g.matrix().solve(eta.coords);
  if (!x) return std::nullopt;
  if (g.matrix().rank() != g.dim()) return std::nullopt;
  return Vector<K>(std::move(*x));
}

}  // namespace tricontact
