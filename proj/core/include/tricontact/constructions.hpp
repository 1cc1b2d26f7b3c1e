#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tricontact/contact.hpp"
#include "tricontact/forms.hpp"
#include "tricontact/lie_algebra.hpp"
#include "tricontact/linalg.hpp"
#include "tricontact/report.hpp"
#include "tricontact/scalar.hpp"
#include "tricontact/subspace.hpp"

namespace tricontact {

/// A metric Lie algebra with its almost 3-contact structure and the
/// parameters it satisfies the structure equations with.
template <ScalarField K>
struct StructureTriple {
  LieAlgebra<K> algebra;
  AlmostContact3Structure<K> structure;
  SasakiParams<K> params;
};

namespace detail {

/// Vertical action shared by all bundled structures: φ_i ξ_i = 0,
/// φ_i ξ_j = ξ_k and φ_i ξ_k = −ξ_j for even permutations (i j k).
template <ScalarField K>
void fill_vertical_phi(std::array<Endomorphism<K>, 3>& phi) {
  phi[0].entry(2, 1) = K(1);
  phi[0].entry(1, 2) = K(-1);
  phi[1].entry(0, 2) = K(1);
  phi[1].entry(2, 0) = K(-1);
  phi[2].entry(1, 0) = K(1);
  phi[2].entry(0, 1) = K(-1);
}

/// Left quaternion multiplication by i, j, k on a quadruple starting at
/// column base, ordered (v, φ_1 v, φ_2 v, φ_3 v).
template <ScalarField K>
void fill_quaternion_block(std::array<Endomorphism<K>, 3>& phi, std::size_t base) {
  auto& p1 = phi[0];
  p1.entry(base + 1, base + 0) = K(1);
  p1.entry(base + 0, base + 1) = K(-1);
  p1.entry(base + 3, base + 2) = K(1);
  p1.entry(base + 2, base + 3) = K(-1);
  auto& p2 = phi[1];
  p2.entry(base + 2, base + 0) = K(1);
  p2.entry(base + 3, base + 1) = K(-1);
  p2.entry(base + 0, base + 2) = K(-1);
  p2.entry(base + 1, base + 3) = K(1);
  auto& p3 = phi[2];
  p3.entry(base + 3, base + 0) = K(1);
  p3.entry(base + 2, base + 1) = K(1);
  p3.entry(base + 1, base + 2) = K(-1);
  p3.entry(base + 0, base + 3) = K(-1);
}

}  // namespace detail

/// The quaternionic Heisenberg algebra of dimension 4n + 3 in the basis
/// (ξ_1, ξ_2, ξ_3, e, φ_1 e, φ_2 e, φ_3 e, …) with the identity metric.
/// The bracket is determined by g([x,y], ξ_i) = g(φ_i x, y) on the
/// quaternionic part with central image; the parameters are (1/2, 0).
template <ScalarField K>
StructureTriple<K> heisenberg(std::size_t n) {
  if (n < 1) throw std::invalid_argument("heisenberg: n must be at least 1");
  const std::size_t dim = 4 * n + 3;

  LieAlgebra<K> L(dim);
  std::array<Endomorphism<K>, 3> phi = {Endomorphism<K>::zero(dim), Endomorphism<K>::zero(dim),
                                        Endomorphism<K>::zero(dim)};
  detail::fill_vertical_phi(phi);
  for (std::size_t q = 0; q < n; ++q) {
    const std::size_t b = 3 + 4 * q;
    detail::fill_quaternion_block(phi, b);
    L.set_structure_constant(b + 0, b + 1, 0, K(1));
    L.set_structure_constant(b + 0, b + 2, 1, K(1));
    L.set_structure_constant(b + 0, b + 3, 2, K(1));
    L.set_structure_constant(b + 1, b + 2, 2, K(1));
    L.set_structure_constant(b + 1, b + 3, 1, K(-1));
    L.set_structure_constant(b + 2, b + 3, 0, K(1));
  }

  BilinearForm<K> g = BilinearForm<K>::identity(dim);
  std::array<Vector<K>, 3> xis = {Vector<K>::basis(dim, 0), Vector<K>::basis(dim, 1),
                                  Vector<K>::basis(dim, 2)};
  auto S = make_structure(g, xis, phi);
  return {std::move(L), std::move(S), SasakiParams<K>{K(1) / K(2), K(0)}};
}

/// The 3-torus structure: the abelian algebra in dimension 3 with a purely
/// vertical almost 3-contact structure. Every nonzero alpha satisfies the
/// structure equations; the stored parameters use alpha = 1.
template <ScalarField K>
StructureTriple<K> t3_structure() {
  LieAlgebra<K> L(3);
  std::array<Endomorphism<K>, 3> phi = {Endomorphism<K>::zero(3), Endomorphism<K>::zero(3),
                                        Endomorphism<K>::zero(3)};
  detail::fill_vertical_phi(phi);
  BilinearForm<K> g = BilinearForm<K>::identity(3);
  std::array<Vector<K>, 3> xis = {Vector<K>::basis(3, 0), Vector<K>::basis(3, 1),
                                  Vector<K>::basis(3, 2)};
  auto S = make_structure(g, xis, phi);
  return {std::move(L), std::move(S), SasakiParams<K>{K(1), K(0)}};
}

/// Flat linear hyperkähler data: an inner product space of dimension 4n
/// with anticommuting complex structures obeying the quaternion relations,
/// and Kähler forms ω_i(x, y) = g(x, I_i y).
template <ScalarField K>
struct FlatHyperkahlerData {
  BilinearForm<K> g;
  std::array<Endomorphism<K>, 3> I;
  std::array<AlternatingForm<K>, 3> omega;

  std::size_t dim() const { return g.dim(); }

  static FlatHyperkahlerData standard(std::size_t n) {
    const std::size_t dim = 4 * n;
    std::array<Endomorphism<K>, 3> I = {Endomorphism<K>::zero(dim), Endomorphism<K>::zero(dim),
                                        Endomorphism<K>::zero(dim)};
    for (std::size_t q = 0; q < n; ++q) detail::fill_quaternion_block(I, 4 * q);
    auto out = make(BilinearForm<K>::identity(dim), I);
    return *out;
  }

  static Outcome<FlatHyperkahlerData> make(BilinearForm<K> g, std::array<Endomorphism<K>, 3> I) {
    using Out = Outcome<FlatHyperkahlerData>;
    const std::size_t dim = g.dim();
    if (dim % 4 != 0) return Out::failure("hyperkahler data: dimension must be a multiple of 4");
    if (!g.is_symmetric()) return Out::failure("hyperkahler data: metric not symmetric");
    if (!g.is_positive_definite()) return Out::failure("hyperkahler data: metric not positive definite");
    for (const auto& Ii : I)
      if (Ii.dim() != dim) return Out::failure("hyperkahler data: dimension mismatch");

    const Endomorphism<K> minus_id = Endomorphism<K>::identity(dim).scaled(K(-1));
    constexpr std::size_t perms[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    for (std::size_t i = 0; i < 3; ++i)
      if (!I[i].compose(I[i]).equal(minus_id))
        return Out::failure("hyperkahler data: I_" + std::to_string(i + 1) + "^2 != -id");
    for (const auto& p : perms)
      if (!I[p[0]].compose(I[p[1]]).equal(I[p[2]]))
        return Out::failure("hyperkahler data: quaternion relation violated");

    std::array<AlternatingForm<K>, 3> omega;
    for (std::size_t i = 0; i < 3; ++i) {
      auto w = fundamental_form(g, I[i]);
      if (!w.ok()) return Out::failure("hyperkahler data: I_" + std::to_string(i + 1) +
                                       " not compatible with the metric");
      omega[i] = *w;
    }
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t a = 0; a < dim; ++a) {
        Vector<K> ea = Vector<K>::basis(dim, a);
        Vector<K> Ia = I[i](ea);
        for (std::size_t b = a; b < dim; ++b) {
          Vector<K> eb = Vector<K>::basis(dim, b);
          if (!scalar_ops<K>::equal(g(Ia, I[i](eb)), g(ea, eb)))
            return Out::failure("hyperkahler data: I_" + std::to_string(i + 1) +
                                " is not an isometry");
        }
      }
    }
    return Out::success(FlatHyperkahlerData{std::move(g), std::move(I), std::move(omega)});
  }
};

/// Central extension of a flat hyperkähler space by three generators:
/// the 3-Boothby–Wang construction at the Lie algebra level. Horizontal
/// brackets are η_i([x,y]) = 2α g_N(I_i x, y) with central image; the
/// output satisfies the degenerate structure equations with the given α.
template <ScalarField K>
StructureTriple<K> flat_boothby_wang(const FlatHyperkahlerData<K>& N, const K& alpha) {
  if (scalar_ops<K>::is_zero(alpha))
    throw std::invalid_argument("flat_boothby_wang: alpha must be nonzero");
  const std::size_t base_dim = N.dim();
  const std::size_t dim = base_dim + 3;

  LieAlgebra<K> L(dim);
  for (std::size_t a = 0; a < base_dim; ++a) {
    Vector<K> ua = Vector<K>::basis(base_dim, a);
    for (std::size_t b = a + 1; b < base_dim; ++b) {
      Vector<K> ub = Vector<K>::basis(base_dim, b);
      for (std::size_t i = 0; i < 3; ++i) {
        K value = K(2) * alpha * N.g(N.I[i](ua), ub);
        if (!scalar_ops<K>::is_zero(value)) L.set_structure_constant(3 + a, 3 + b, i, value);
      }
    }
  }

  Matrix<K> gm(dim, dim);
  for (std::size_t i = 0; i < 3; ++i) gm(i, i) = K(1);
  for (std::size_t a = 0; a < base_dim; ++a)
    for (std::size_t b = 0; b < base_dim; ++b) gm(3 + a, 3 + b) = N.g.entry(a, b);
  BilinearForm<K> g(std::move(gm));

  std::array<Endomorphism<K>, 3> phi = {Endomorphism<K>::zero(dim), Endomorphism<K>::zero(dim),
                                        Endomorphism<K>::zero(dim)};
  detail::fill_vertical_phi(phi);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t a = 0; a < base_dim; ++a)
      for (std::size_t b = 0; b < base_dim; ++b)
        phi[i].entry(3 + a, 3 + b) = N.I[i].entry(a, b);

  std::array<Vector<K>, 3> xis = {Vector<K>::basis(dim, 0), Vector<K>::basis(dim, 1),
                                  Vector<K>::basis(dim, 2)};
  auto S = make_structure(g, xis, phi);
  return {std::move(L), std::move(S), SasakiParams<K>{alpha, K(0)}};
}

/// H-homothetic deformation parameters. The constraint a + b = c² keeps
/// the rescaled Reeb fields at unit length.
template <ScalarField K>
struct DeformationParams {
  K a, b, c;

  static DeformationParams from_lambda(const K& lambda) {
    return DeformationParams{K(1), lambda * lambda - K(1), lambda};
  }

  std::optional<std::string> invalid_reason() const {
    if (!scalar_ops<K>::positive(a)) return "deformation requires a > 0";
    if (scalar_ops<K>::is_zero(c)) return "deformation requires c != 0";
    if (!scalar_ops<K>::equal(a + b, c * c)) return "deformation requires a + b = c^2";
    return std::nullopt;
  }
};

/// H-homothetic deformation g̃ = a·g + b·Σ η_i ⊗ η_i, η̃_i = c·η_i,
/// ξ̃_i = ξ_i / c, φ̃_i = φ_i on an unchanged algebra. The new parameters
/// are inferred from the deformed structure, never hard-coded.
template <ScalarField K>
Outcome<StructureTriple<K>> h_deformation(const LieAlgebra<K>& L,
                                          const AlmostContact3Structure<K>& S,
                                          const SasakiParams<K>& params,
                                          const DeformationParams<K>& d) {
  using Out = Outcome<StructureTriple<K>>;
  if (auto why = d.invalid_reason()) return Out::failure(*why);
  if (!verify_3ad(L, S, params).passed())
    return Out::failure("deformation input does not satisfy the structure equations");

  const std::size_t n = S.dim();
  Matrix<K> gm = S.metric().matrix().scaled(d.a);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        gm(r, c) = gm(r, c) + d.b * S.eta(i)[r] * S.eta(i)[c];
  BilinearForm<K> g(std::move(gm));

  std::array<Vector<K>, 3> xis;
  std::array<Covector<K>, 3> etas;
  std::array<Endomorphism<K>, 3> phis;
  for (std::size_t i = 0; i < 3; ++i) {
    xis[i] = S.xi(i).scaled(K(1) / d.c);
    etas[i] = S.eta(i).scaled(d.c);
    phis[i] = S.phi(i);
  }
  auto deformed = make_structure(std::move(g), xis, phis, etas);

  auto inferred = infer_parameters(L, deformed);
  if (!inferred.ok())
    return Out::failure("deformation produced an invalid structure: " + inferred.error);
  SasakiParams<K> new_params{inferred->alpha.value_or(params.alpha), inferred->delta};
  if (!verify_3ad(L, deformed, new_params).passed())
    return Out::failure("deformation output does not satisfy the structure equations");
  return Out::success(StructureTriple<K>{L, std::move(deformed), std::move(new_params)});
}

/// Transports a structure to the basis whose vectors are the columns of
/// M: brackets, metric, Reeb fields, 1-forms and endomorphisms all move.
template <ScalarField K>
StructureTriple<K> change_basis(const StructureTriple<K>& t, const Matrix<K>& M) {
  const std::size_t n = t.structure.dim();
  if (M.rows() != n || M.cols() != n) throw std::invalid_argument("change_basis: size mismatch");
  auto Minv = M.inverse();
  if (!Minv) throw std::invalid_argument("change_basis: singular matrix");

  LieAlgebra<K> L(n);
  std::vector<Vector<K>> cols(n);
  for (std::size_t j = 0; j < n; ++j) {
    cols[j] = Vector<K>(n);
    for (std::size_t i = 0; i < n; ++i) cols[j][i] = M(i, j);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vector<K> br = t.algebra.bracket(cols[a], cols[b]);
      L.set_bracket(a, b, Vector<K>(Minv->apply(br.coords)));
    }

  BilinearForm<K> g(M.transposed() * t.structure.metric().matrix() * M);
  std::array<Vector<K>, 3> xis;
  std::array<Covector<K>, 3> etas;
  std::array<Endomorphism<K>, 3> phis;
  for (std::size_t i = 0; i < 3; ++i) {
    xis[i] = Vector<K>(Minv->apply(t.structure.xi(i).coords));
    Covector<K> eta(n);
    for (std::size_t c = 0; c < n; ++c) {
      K acc(0);
      for (std::size_t r = 0; r < n; ++r) acc = acc + t.structure.eta(i)[r] * M(r, c);
      eta[c] = acc;
    }
    etas[i] = std::move(eta);
    phis[i] = Endomorphism<K>((*Minv) * t.structure.phi(i).matrix() * M);
  }
  auto S = make_structure(std::move(g), xis, phis, etas);
  return {std::move(L), std::move(S), t.params};
}

/// Orthonormal quadruple basis (v, φ_1 v, φ_2 v, φ_3 v, …) of a
/// φ-invariant subspace. Seeds are the lowest-index basis vectors of H
/// not yet covered, projected against the part already built. Requires
/// the floating-point backend: normalization takes square roots.
template <ScalarField K>
  requires(!scalar_ops<K>::exact)
Outcome<std::vector<Vector<K>>> quaternionic_gram_schmidt(const BilinearForm<K>& g,
                                                          const std::array<Endomorphism<K>, 3>& phi,
                                                          const Subspace<K>& H) {
  using Out = Outcome<std::vector<Vector<K>>>;
  const std::size_t target = H.dim();
  if (target % 4 != 0) return Out::failure("gram-schmidt: subspace dimension must be a multiple of 4");

  for (const auto& h : H.basis())
    for (const auto& p : phi)
      if (!H.contains(p(h))) return Out::failure("gram-schmidt: subspace is not phi-invariant");

  std::vector<Vector<K>> built;
  std::size_t seed = 0;
  while (built.size() < target) {
    if (seed >= H.basis().size())
      return Out::failure("gram-schmidt: rank loss, metric degenerate on a quaternionic complement");
    Vector<K> w = H.basis()[seed];
    ++seed;
    for (const auto& u : built) w = w - u.scaled(g(w, u));
    K norm2 = g(w, w);
    if (scalar_ops<K>::is_zero(norm2)) continue;
    Vector<K> v = w.scaled(K(1) / scalar_ops<K>::sqrt(norm2));
    built.push_back(v);
    for (const auto& p : phi) built.push_back(p(v));
  }

  for (std::size_t a = 0; a < built.size(); ++a)
    for (std::size_t b = a; b < built.size(); ++b) {
      K expected = (a == b) ? K(1) : K(0);
      if (!scalar_ops<K>::within(g(built[a], built[b]), expected, 1e-7))
        return Out::failure("gram-schmidt: output not orthonormal, structure incompatible on H");
    }
  return Out::success(std::move(built));
}

/// The bracket forced by the degenerate structure equations: the Reeb span
/// is central and η_i([x, y]) = 2α g(φ_i x, y) on horizontal vectors.
template <ScalarField K>
LieAlgebra<K> reconstruct_bracket(const BilinearForm<K>& g, const AlmostContact3Structure<K>& S,
                                  const K& alpha) {
  if (scalar_ops<K>::is_zero(alpha))
    throw std::invalid_argument("reconstruct_bracket: alpha must be nonzero");
  const std::size_t n = S.dim();
  LieAlgebra<K> L(n);
  std::vector<Vector<K>> projected;
  projected.reserve(n);
  for (std::size_t a = 0; a < n; ++a)
    projected.push_back(S.horizontal_project(Vector<K>::basis(n, a)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vector<K> br(n);
      bool nonzero = false;
      for (std::size_t i = 0; i < 3; ++i) {
        K value = K(2) * alpha * g(S.phi(i)(projected[a]), projected[b]);
        if (!scalar_ops<K>::is_zero(value)) {
          br = br + S.xi(i).scaled(value);
          nonzero = true;
        }
      }
      if (nonzero) L.set_bracket(a, b, br);
    }
  return L;
}

/// Result of the isomorphism construction onto the quaternionic Heisenberg
/// model: ψ maps input coordinates to heisenberg(n) coordinates.
template <ScalarField K>
struct IsomorphismResult {
  Matrix<K> psi;
  std::size_t heisenberg_n = 0;
  std::optional<DeformationParams<K>> deformation;
  VerificationReport report;
  double max_defect = 0.0;
};

/// Builds ψ onto heisenberg(n): Reeb fields map to Reeb fields and a
/// quaternionic orthonormal basis of the horizontal space maps to the
/// standard quadruples. When α ≠ 1/2 an H-homothetic deformation matches
/// the parameters first. The report checks linearity, invertibility and
/// preservation of bracket, metric, ξ, η and φ within the tolerance.
template <ScalarField K>
  requires(!scalar_ops<K>::exact)
Outcome<IsomorphismResult<K>> build_isomorphism(const LieAlgebra<K>& L,
                                                const AlmostContact3Structure<K>& S,
                                                const SasakiParams<K>& params,
                                                double tolerance = 1e-8) {
  using Out = Outcome<IsomorphismResult<K>>;
  using ops = scalar_ops<K>;

  auto [nilpotent, cls] = is_nilpotent(L);
  if (!nilpotent) return Out::failure("non-nilpotent input: no isomorphism onto a Heisenberg model");
  (void)cls;
  if (!ops::is_zero(params.delta)) return Out::failure("input is not degenerate: delta != 0");
  if (!verify_degenerate(L, S, params.alpha).passed())
    return Out::failure("input does not satisfy the degenerate structure equations");
  if ((S.dim() < 7) || ((S.dim() - 3) % 4 != 0))
    return Out::failure("input dimension is not of the form 4n + 3 with n >= 1");

  IsomorphismResult<K> result;
  const LieAlgebra<K>* Lp = &L;
  std::optional<StructureTriple<K>> deformed;
  K alpha = params.alpha;
  const K half = K(1) / K(2);
  if (!ops::equal(alpha, half)) {
    // alpha scales by c/a under deformation; a = 1, c = 1/(2 alpha).
    K c = K(1) / (K(2) * alpha);
    DeformationParams<K> d{K(1), c * c - K(1), c};
    auto out = h_deformation(L, S, params, d);
    if (!out.ok()) return Out::failure("parameter matching failed: " + out.error);
    deformed = std::move(*out);
    result.deformation = d;
    alpha = deformed->params.alpha;
    Lp = &deformed->algebra;
  }
  const AlmostContact3Structure<K>& Sm = deformed ? deformed->structure : S;
  const LieAlgebra<K>& Lm = *Lp;

  const std::size_t dim = Sm.dim();
  const std::size_t n = (dim - 3) / 4;
  StructureTriple<K> target = heisenberg<K>(n);

  std::array<Endomorphism<K>, 3> phis = {Sm.phi(0), Sm.phi(1), Sm.phi(2)};
  auto basis = quaternionic_gram_schmidt(Sm.metric(), phis, Sm.horizontal());
  if (!basis.ok()) return Out::failure(basis.error);

  Matrix<K> B(dim, dim);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t r = 0; r < dim; ++r) B(r, i) = Sm.xi(i)[r];
  for (std::size_t j = 0; j < basis->size(); ++j)
    for (std::size_t r = 0; r < dim; ++r) B(r, 3 + j) = (*basis)[j][r];

  auto Binv = B.inverse();
  if (!Binv) return Out::failure("adapted frame is singular");
  result.psi = *Binv;
  result.heisenberg_n = n;

  auto& report = result.report;
  double& worst = result.max_defect;
  auto record = [&](const std::string& id, const std::string& desc, double defect,
                    std::vector<std::size_t> witness) {
    if (defect > worst) worst = defect;
    if (defect <= tolerance)
      report.add_pass(id, desc);
    else
      report.add_fail(id, desc, std::move(witness), scalar_ops<K>::str(K(defect)));
  };

  report.add_pass("psi_invertible", "psi is a linear isomorphism");

  const Matrix<K>& psi = result.psi;
  for (std::size_t i = 0; i < 3; ++i) {
    Vector<K> image(psi.apply(Sm.xi(i).coords));
    double defect = 0;
    for (std::size_t r = 0; r < dim; ++r)
      defect = std::max(defect, std::abs(ops::to_double(image[r]) - (r == i ? 1.0 : 0.0)));
    record(detail::idx_name("psi_reeb", i + 1), "psi xi_i = xi_i", defect, {});
  }

  for (std::size_t i = 0; i < 3; ++i) {
    double defect = 0;
    std::vector<std::size_t> witness;
    for (std::size_t c = 0; c < dim; ++c) {
      K lhs(0);
      for (std::size_t r = 0; r < dim; ++r) lhs = lhs + target.structure.eta(i)[r] * psi(r, c);
      double d = std::abs(ops::to_double(lhs - Sm.eta(i)[c]));
      if (d > defect) {
        defect = d;
        witness = {c};
      }
    }
    record(detail::idx_name("psi_eta", i + 1), "eta_i o psi = eta_i", defect, std::move(witness));
  }

  for (std::size_t i = 0; i < 3; ++i) {
    Matrix<K> lhs = psi * Sm.phi(i).matrix();
    Matrix<K> rhs = target.structure.phi(i).matrix() * psi;
    double defect = 0;
    std::vector<std::size_t> witness;
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) {
        double d = std::abs(ops::to_double(lhs(r, c) - rhs(r, c)));
        if (d > defect) {
          defect = d;
          witness = {r, c};
        }
      }
    record(detail::idx_name("psi_phi", i + 1), "psi o phi_i = phi_i o psi", defect,
           std::move(witness));
  }

  {
    Matrix<K> pulled = psi.transposed() * target.structure.metric().matrix() * psi;
    double defect = 0;
    std::vector<std::size_t> witness;
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) {
        double d = std::abs(ops::to_double(pulled(r, c) - Sm.metric().entry(r, c)));
        if (d > defect) {
          defect = d;
          witness = {r, c};
        }
      }
    record("psi_metric", "g(psi x, psi y) = g(x, y)", defect, std::move(witness));
  }

  {
    double defect = 0;
    std::vector<std::size_t> witness;
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = a + 1; b < dim; ++b) {
        Vector<K> lhs(psi.apply(Lm.bracket_basis(a, b).coords));
        Vector<K> pa(psi.apply(Vector<K>::basis(dim, a).coords));
        Vector<K> pb(psi.apply(Vector<K>::basis(dim, b).coords));
        Vector<K> rhs = target.algebra.bracket(pa, pb);
        for (std::size_t r = 0; r < dim; ++r) {
          double d = std::abs(ops::to_double(lhs[r] - rhs[r]));
          if (d > defect) {
            defect = d;
            witness = {a, b};
          }
        }
      }
    record("psi_bracket", "psi [x, y] = [psi x, psi y]", defect, std::move(witness));
  }

  return Out::success(std::move(result));
}

}  // namespace tricontact
