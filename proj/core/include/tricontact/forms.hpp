#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tricontact/linalg.hpp"
#include "tricontact/matrix.hpp"
#include "tricontact/scalar.hpp"

namespace tricontact {

namespace detail {

/// Sorts idx ascending and reports the permutation sign; 0 on repeats.
inline int sort_index_tuple(std::vector<std::size_t>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    std::size_t j = i;
    while (j > 0 && idx[j - 1] > idx[j]) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
      --j;
    }
  }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i - 1] == idx[i]) return 0;
  return sign;
}

}  // namespace detail

/// Alternating k-form with constant coefficients, stored sparsely on
/// strictly increasing index tuples. Evaluation on arbitrary arguments is
/// multilinear and alternating.
template <ScalarField K>
class AlternatingForm {
 public:
  using key_type = std::vector<std::size_t>;

  AlternatingForm() = default;
  AlternatingForm(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {}

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  const std::map<key_type, K>& coefficients() const { return coeff_; }
  bool is_zero() const { return coeff_.empty(); }

  /// Adds value on an arbitrary index tuple, resolving sign and repeats.
  void add_term(key_type idx, const K& value) {
    if (idx.size() != degree_) throw std::invalid_argument("AlternatingForm: wrong tuple length");
    for (auto i : idx)
      if (i >= dim_) throw std::out_of_range("AlternatingForm: index out of range");
    const int sign = detail::sort_index_tuple(idx);
    if (sign == 0) return;
    K acc = coefficient_sorted(idx) + (sign > 0 ? value : -value);
    store(std::move(idx), std::move(acc));
  }

  /// Coefficient on an arbitrary tuple (signed); 0 when indices repeat.
  K coefficient(key_type idx) const {
    const int sign = detail::sort_index_tuple(idx);
    if (sign == 0) return K(0);
    K c = coefficient_sorted(idx);
    return sign > 0 ? c : -c;
  }

  /// Multilinear alternating evaluation on full argument lists.
  K operator()(const std::vector<Vector<K>>& args) const {
    if (args.size() != degree_) throw std::invalid_argument("AlternatingForm: wrong argument count");
    for (const auto& v : args)
      if (v.dim() != dim_) throw std::invalid_argument("AlternatingForm: dimension mismatch");
    K total(0);
    for (const auto& [key, c] : coeff_) {
      Matrix<K> minor(degree_, degree_);
      for (std::size_t r = 0; r < degree_; ++r)
        for (std::size_t s = 0; s < degree_; ++s) minor(r, s) = args[s][key[r]];
      total = total + c * minor.determinant();
    }
    return total;
  }

  AlternatingForm operator+(const AlternatingForm& o) const {
    check_compatible(o);
    AlternatingForm r = *this;
    for (const auto& [key, c] : o.coeff_) r.store(key, r.coefficient_sorted(key) + c);
    return r;
  }
  AlternatingForm operator-(const AlternatingForm& o) const {
    check_compatible(o);
    AlternatingForm r = *this;
    for (const auto& [key, c] : o.coeff_) r.store(key, r.coefficient_sorted(key) - c);
    return r;
  }
  AlternatingForm operator-() const { return scaled(K(-1)); }
  AlternatingForm scaled(const K& f) const {
    AlternatingForm r(dim_, degree_);
    if (scalar_ops<K>::is_zero(f)) return r;
    for (const auto& [key, c] : coeff_) r.store(key, c * f);
    return r;
  }

  bool equal(const AlternatingForm& o) const {
    if (dim_ != o.dim_ || degree_ != o.degree_) return false;
    return !first_difference(o).has_value();
  }

  /// First increasing tuple where coefficients differ, with the defect.
  std::optional<std::pair<key_type, K>> first_difference(const AlternatingForm& o) const {
    auto it = coeff_.begin();
    auto jt = o.coeff_.begin();
    while (it != coeff_.end() || jt != o.coeff_.end()) {
      if (jt == o.coeff_.end() || (it != coeff_.end() && it->first < jt->first)) {
        if (!scalar_ops<K>::is_zero(it->second)) return std::make_pair(it->first, it->second);
        ++it;
      } else if (it == coeff_.end() || jt->first < it->first) {
        if (!scalar_ops<K>::is_zero(jt->second)) return std::make_pair(jt->first, -jt->second);
        ++jt;
      } else {
        if (!scalar_ops<K>::equal(it->second, jt->second))
          return std::make_pair(it->first, it->second - jt->second);
        ++it;
        ++jt;
      }
    }
    return std::nullopt;
  }

 private:
  K coefficient_sorted(const key_type& idx) const {
    auto it = coeff_.find(idx);
    return it == coeff_.end() ? K(0) : it->second;
  }

  void store(key_type idx, K value) {
    if (scalar_ops<K>::is_zero(value))
      coeff_.erase(idx);
    else
      coeff_[std::move(idx)] = std::move(value);
  }

  void check_compatible(const AlternatingForm& o) const {
    if (dim_ != o.dim_ || degree_ != o.degree_)
      throw std::invalid_argument("AlternatingForm: incompatible forms");
  }

  std::size_t dim_ = 0;
  std::size_t degree_ = 0;
  std::map<key_type, K> coeff_;

  template <ScalarField K2>
  friend AlternatingForm<K2> wedge(const AlternatingForm<K2>&, const AlternatingForm<K2>&);
  template <ScalarField K2>
  friend AlternatingForm<K2> interior(const Vector<K2>&, const AlternatingForm<K2>&);
};

/// Wedge product in the shuffle convention without factorial prefactors,
/// so that (e^1 ∧ e^2)(e_1, e_2) = 1.
template <ScalarField K>
AlternatingForm<K> wedge(const AlternatingForm<K>& a, const AlternatingForm<K>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
  AlternatingForm<K> r(a.dim(), a.degree() + b.degree());
  for (const auto& [ka, ca] : a.coeff_) {
    for (const auto& [kb, cb] : b.coeff_) {
      int crossings = 0;
      bool overlap = false;
      for (auto x : ka) {
        for (auto y : kb) {
          if (x == y) {
            overlap = true;
            break;
          }
          if (x > y) ++crossings;
        }
        if (overlap) break;
      }
      if (overlap) continue;
      std::vector<std::size_t> merged;
      merged.reserve(ka.size() + kb.size());
      merged.insert(merged.end(), ka.begin(), ka.end());
      merged.insert(merged.end(), kb.begin(), kb.end());
      detail::sort_index_tuple(merged);
      const K term = ca * cb;
      K acc = r.coefficient_sorted(merged) + ((crossings % 2) ? -term : term);
      r.store(std::move(merged), std::move(acc));
    }
  }
  return r;
}

/// Interior product: (v ⨼ ω)(x_2, …, x_k) = ω(v, x_2, …, x_k).
template <ScalarField K>
AlternatingForm<K> interior(const Vector<K>& v, const AlternatingForm<K>& w) {
  if (v.dim() != w.dim()) throw std::invalid_argument("interior: dimension mismatch");
  if (w.degree() == 0) throw std::invalid_argument("interior: degree must be at least 1");
  AlternatingForm<K> r(w.dim(), w.degree() - 1);
  for (const auto& [key, c] : w.coeff_) {
    for (std::size_t t = 0; t < key.size(); ++t) {
      const K& vc = v[key[t]];
      if (scalar_ops<K>::is_zero(vc)) continue;
      std::vector<std::size_t> rest;
      rest.reserve(key.size() - 1);
      for (std::size_t s = 0; s < key.size(); ++s)
        if (s != t) rest.push_back(key[s]);
      const K term = vc * c;
      K acc = r.coefficient_sorted(rest) + ((t % 2) ? -term : term);
      r.store(std::move(rest), std::move(acc));
    }
  }
  return r;
}

/// Degree-1 form with the covector's coefficients.
template <ScalarField K>
AlternatingForm<K> covector_form(const Covector<K>& eta) {
  AlternatingForm<K> r(eta.dim(), 1);
  for (std::size_t i = 0; i < eta.dim(); ++i)
    if (!scalar_ops<K>::is_zero(eta[i])) r.add_term({i}, eta[i]);
  return r;
}

/// Advances a strictly increasing index tuple over {0, …, dim−1};
/// returns false when exhausted.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t dim) {
  const std::size_t k = idx.size();
  if (k == 0 || dim < k) return false;
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] < dim - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

}  // namespace tricontact
