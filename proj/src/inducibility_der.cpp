#include "rrbx/inducibility_der.hpp"

#include <stdexcept>

namespace rrbx {

namespace {

Vector append(Vector acc, const Vector& more) { return acc.concat(more); }
Vector append(Vector acc, const Matrix& more) { return acc.concat(more.flatten()); }

/// Stacked derivation identities of an RRB algebra; zero iff d is a derivation.
Vector derivation_residual(const RRBAlgebra& a, const DerivationPair& d) {
  const Field f = a.field();
  Vector out(f, 0);
  for (std::size_t i = 0; i < a.a_dim(); ++i)
    for (std::size_t j = i + 1; j < a.a_dim(); ++j) {
      const Vector lhs = d.d_a * a.lie.ad[i].col(j);
      const Vector rhs = a.lie.ad_of(d.d_a.col(i)).col(j) + a.lie.ad[i] * d.d_a.col(j);
      out = append(out, lhs - rhs);
    }
  out = append(out, a.t * d.d_v - d.d_a * a.t);
  for (std::size_t i = 0; i < a.a_dim(); ++i) {
    out = append(out, d.d_v * a.rep.action[i] - a.rep.action[i] * d.d_v - a.rep.action_of(d.d_a.col(i)));
  }
  return out;
}

Matrix bd1(const RRBRepresentation& rep, const CoeffDerivationPair& d, std::size_t i) {
  return d.d_m * rep.rho_m[i] - rep.rho_m[i] * d.d_m - rep.rho_m_of(d.d_aa.d_a.col(i));
}
Matrix bd2(const RRBRepresentation& rep, const CoeffDerivationPair& d, std::size_t i) {
  return d.d_b * rep.rho_b[i] - rep.rho_b[i] * d.d_b - rep.rho_b_of(d.d_aa.d_a.col(i));
}
Matrix bd3(const RRBRepresentation& rep, const CoeffDerivationPair& d, std::size_t q) {
  return d.d_m * rep.mu[q] - rep.mu_of(d.d_aa.d_v.col(q)) - rep.mu[q] * d.d_b;
}
Matrix bd4(const RRBRepresentation& rep, const CoeffDerivationPair& d) { return d.d_b * rep.s - rep.s * d.d_m; }

Vector g_residual(const RRBRepresentation& rep, const CoeffDerivationPair& d) {
  Vector out = derivation_residual(rep.base, d.d_aa);
  for (std::size_t i = 0; i < rep.base.a_dim(); ++i) out = append(out, bd1(rep, d, i));
  for (std::size_t i = 0; i < rep.base.a_dim(); ++i) out = append(out, bd2(rep, d, i));
  for (std::size_t q = 0; q < rep.base.v_dim(); ++q) out = append(out, bd3(rep, d, q));
  return append(out, bd4(rep, d));
}

void check_pair_shape(const RRBRepresentation& rep, const CoeffDerivationPair& d) {
  const std::size_t a = rep.base.a_dim(), v = rep.base.v_dim();
  if (d.d_aa.d_a.rows() != a || d.d_aa.d_a.cols() != a || d.d_aa.d_v.rows() != v || d.d_aa.d_v.cols() != v ||
      d.d_b.rows() != rep.b_dim || d.d_b.cols() != rep.b_dim || d.d_m.rows() != rep.m_dim ||
      d.d_m.cols() != rep.m_dim) {
    fail(ErrorKind::ShapeError, "derivation pair has the wrong shape");
  }
}

void require_abelian(const Extension& e) {
  if (!is_abelian_kernel(e.kernel)) fail(ErrorKind::NotAbelianExtension, "derivation inducibility needs an abelian kernel");
}

bool preserves(const Matrix& g, const Matrix& inj) {
  const Subspace img = image(inj);
  const Matrix moved = g * inj;
  for (std::size_t k = 0; k < moved.cols(); ++k)
    if (!img.contains(moved.col(k))) return false;
  return true;
}

/// [inj * top | inj * mid + s * bottom] Q^{-1} with Q = [inj | s].
Matrix assemble(const Matrix& inj, const Matrix& sec, const Matrix& top, const Matrix& mid, const Matrix& bottom) {
  const auto qi = inverse(Matrix::hstack(inj, sec));
  if (!qi) throw std::logic_error("section and injection do not span the total space");
  return Matrix::hstack(inj * top, inj * mid + sec * bottom) * *qi;
}

DerivationPair commutator(const DerivationPair& x, const DerivationPair& y) {
  return DerivationPair{rrbx::commutator(x.d_a, y.d_a), rrbx::commutator(x.d_v, y.d_v)};
}

CoeffDerivationPair commutator(const CoeffDerivationPair& x, const CoeffDerivationPair& y) {
  return CoeffDerivationPair{commutator(x.d_aa, y.d_aa), rrbx::commutator(x.d_b, y.d_b),
                             rrbx::commutator(x.d_m, y.d_m)};
}

bool same_span(const Subspace& x, const Subspace& y) { return x.contains(y) && y.contains(x); }

}  // namespace

CoeffDerivationPair CoeffDerivationPair::zero(const RRBRepresentation& rep) {
  const Field f = rep.field();
  return CoeffDerivationPair{DerivationPair::zero(rep.base), Matrix(f, rep.b_dim, rep.b_dim),
                             Matrix(f, rep.m_dim, rep.m_dim)};
}

Vector flatten_coeff_pair(const CoeffDerivationPair& d) {
  return d.d_aa.d_a.flatten().concat(d.d_aa.d_v.flatten()).concat(d.d_b.flatten()).concat(d.d_m.flatten());
}

CoeffDerivationPair unflatten_coeff_pair(const Vector& flat, const RRBRepresentation& rep) {
  const std::size_t a = rep.base.a_dim(), v = rep.base.v_dim(), b = rep.b_dim, m = rep.m_dim;
  if (flat.size() != a * a + v * v + b * b + m * m) fail(ErrorKind::ShapeError, "flat derivation pair has the wrong length");
  std::size_t at = 0;
  auto take = [&](std::size_t n) {
    Matrix out = Matrix::reshape(flat.slice(at, n * n), n, n);
    at += n * n;
    return out;
  };
  Matrix da = take(a);
  Matrix dv = take(v);
  Matrix db = take(b);
  Matrix dm = take(m);
  return CoeffDerivationPair{DerivationPair{std::move(da), std::move(dv)}, std::move(db), std::move(dm)};
}

ValidationReport g_report(const RRBRepresentation& rep, const CoeffDerivationPair& d) {
  check_pair_shape(rep, d);
  ValidationReport r = validate_derivation(rep.base, d.d_aa);
  for (std::size_t i = 0; i < rep.base.a_dim(); ++i)
    if (!bd1(rep, d, i).is_zero()) r.add("Bd1", {i});
  for (std::size_t i = 0; i < rep.base.a_dim(); ++i)
    if (!bd2(rep, d, i).is_zero()) r.add("Bd2", {i});
  for (std::size_t q = 0; q < rep.base.v_dim(); ++q)
    if (!bd3(rep, d, q).is_zero()) r.add("Bd3", {q});
  if (!bd4(rep, d).is_zero()) r.add("Bd4", {});
  return r;
}

bool g_member(const RRBRepresentation& rep, const CoeffDerivationPair& d) { return g_report(rep, d).ok(); }

Subspace g_basis(const RRBRepresentation& rep) {
  const std::size_t n = flatten_coeff_pair(CoeffDerivationPair::zero(rep)).size();
  const AffineMap map = linearize(rep.field(), n, [&](const Vector& flat) {
    return g_residual(rep, unflatten_coeff_pair(flat, rep));
  });
  return kernel(map.linear);
}

CoeffDerivationPair g_bracket(const RRBRepresentation& rep, const CoeffDerivationPair& d1,
                              const CoeffDerivationPair& d2) {
  if (!g_member(rep, d1) || !g_member(rep, d2)) fail(ErrorKind::NotMembers, "bracket needs two compatible pairs");
  return commutator(d1, d2);
}

Cochain delta_action(const RRBRepresentation& rep, const CoeffDerivationPair& d, const Cochain& c) {
  if (c.degree != 2) fail(ErrorKind::DegreeError, "the derivation action is defined on 2-cochains");
  check_pair_shape(rep, d);
  const Degree2Parts p = degree2_parts(rep, c);
  const Matrix& da = d.d_aa.d_a;
  const Matrix& dv = d.d_aa.d_v;
  const Field f = rep.field();
  const std::size_t a = rep.base.a_dim(), v = rep.base.v_dim();
  BilinearMap fb(f, a, a, rep.b_dim);
  BilinearMap fm(f, a, v, rep.m_dim);
  for (std::size_t i = 0; i < a; ++i) {
    const Vector x = Vector::unit(f, a, i);
    for (std::size_t j = 0; j < a; ++j) {
      const Vector y = Vector::unit(f, a, j);
      fb.at(i, j) = d.d_b * p.f_b.at(i, j) - p.f_b(da.col(i), y) - p.f_b(x, da.col(j));
    }
    for (std::size_t q = 0; q < v; ++q) {
      fm.at(i, q) = d.d_m * p.f_m.at(i, q) - p.f_m(da.col(i), Vector::unit(f, v, q)) - p.f_m(x, dv.col(q));
    }
  }
  return cochain_from_parts(rep, fb, fm, d.d_b * p.theta - p.theta * dv);
}

RRBRepresentation extension_representation(const Extension& e, const Section& s) {
  require_abelian(e);
  return abelian_reduction(e.base, e.kernel, induced_cocycle(e, s)).first;
}

DerWellsResult wells_der(const Extension& e, const Section& s, const CoeffDerivationPair& d) {
  require_abelian(e);
  const auto [rep, c] = abelian_reduction(e.base, e.kernel, induced_cocycle(e, s));
  const ValidationReport g = g_report(rep, d);
  if (!g.ok()) fail(ErrorKind::NotMembers, "pair is not compatible: " + g.summary());
  DerWellsResult out{delta_action(rep, d, c), false, std::nullopt};
  if (auto sol = solve(coboundary_matrix(rep, 1), out.value.coords)) {
    out.trivial = true;
    out.preimage = Cochain{1, std::move(sol->particular)};
  }
  return out;
}

ValidationReport validate_total_derivation(const Extension& e, const DerivationPair& t) {
  ValidationReport r = validate_derivation(e.total, t);
  if (!preserves(t.d_a, e.inj.phi)) r.add("kernel-stable", {0});
  if (!preserves(t.d_v, e.inj.psi)) r.add("kernel-stable", {1});
  return r;
}

DerivationPair assemble_total_derivation(const Extension& e, const Section& s, const CoeffDerivationPair& d,
                                         const EquivalenceWitness& w) {
  return DerivationPair{assemble(e.inj.phi, s.s_alg, d.d_b, w.zeta, d.d_aa.d_a),
                        assemble(e.inj.psi, s.s_mod, d.d_m, w.eta, d.d_aa.d_v)};
}

DerInducibilityResult inducible_der(const Extension& e, const Section& s, const CoeffDerivationPair& d) {
  require_abelian(e);
  const RRBRepresentation rep = extension_representation(e, s);
  const ValidationReport g = g_report(rep, d);
  if (!g.ok()) return DerInducibilityResult{Verdict::No, std::nullopt, std::nullopt, *g.first()};
  const DerWellsResult w = wells_der(e, s, d);
  if (!w.trivial) return DerInducibilityResult{};
  const Degree1Maps maps = degree1_maps(rep, *w.preimage);
  EquivalenceWitness witness{maps.phi_b, maps.phi_m};
  DerivationPair total = assemble_total_derivation(e, s, d, witness);
  if (!validate_total_derivation(e, total).ok() || !(digamma(e, s, total) == d)) {
    throw std::logic_error("assembled derivation failed re-validation");
  }
  return DerInducibilityResult{Verdict::Yes, std::move(witness), std::move(total), std::nullopt};
}

CoeffDerivationPair digamma(const Extension& e, const Section& s, const DerivationPair& t) {
  if (!preserves(t.d_a, e.inj.phi) || !preserves(t.d_v, e.inj.psi)) {
    fail(ErrorKind::NotPreservingKernel, "derivation does not map the kernel into itself");
  }
  const auto [lb, lm] = kernel_coordinates(e);
  return CoeffDerivationPair{DerivationPair{e.proj.phi * t.d_a * s.s_alg, e.proj.psi * t.d_v * s.s_mod},
                             lb * t.d_a * e.inj.phi, lm * t.d_v * e.inj.psi};
}

Cochain gamma_iso(const Extension& e, const Section& s, const DerivationPair& t) {
  require_abelian(e);
  const CoeffDerivationPair image = digamma(e, s, t);
  if (!flatten_coeff_pair(image).is_zero()) fail(ErrorKind::NotInKernel, "derivation does not restrict to zero");
  const auto [lb, lm] = kernel_coordinates(e);
  return cochain_from_maps(extension_representation(e, s), lb * t.d_a * s.s_alg, lm * t.d_v * s.s_mod);
}

DerivationPair gamma_inverse(const Extension& e, const Section& s, const Cochain& f) {
  const RRBRepresentation rep = extension_representation(e, s);
  if (f.degree != 1) fail(ErrorKind::DegreeError, "expected a 1-cochain");
  if (!is_cocycle(rep, f)) fail(ErrorKind::NotACocycle, "1-cochain is not a cocycle");
  const Degree1Maps maps = degree1_maps(rep, f);
  return assemble_total_derivation(e, s, CoeffDerivationPair::zero(rep), EquivalenceWitness{maps.phi_b, maps.phi_m});
}

DerivationPair unflatten_total_derivation(const Extension& e, const Vector& flat) {
  const std::size_t a = e.total.a_dim(), v = e.total.v_dim();
  if (flat.size() != a * a + v * v) fail(ErrorKind::ShapeError, "flat derivation has the wrong length");
  return DerivationPair{Matrix::reshape(flat.slice(0, a * a), a, a), Matrix::reshape(flat.slice(a * a, v * v), v, v)};
}

Subspace total_derivation_space(const Extension& e) {
  const std::size_t a = e.total.a_dim(), v = e.total.v_dim();
  const auto [lb, lm] = kernel_coordinates(e);
  const Matrix pb = Matrix::identity(e.total.field(), a) - e.inj.phi * lb;
  const Matrix pm = Matrix::identity(e.total.field(), v) - e.inj.psi * lm;
  const AffineMap map = linearize(e.total.field(), a * a + v * v, [&](const Vector& flat) {
    const DerivationPair d = unflatten_total_derivation(e, flat);
    return derivation_residual(e.total, d).concat((pb * d.d_a * e.inj.phi).flatten()).concat(
        (pm * d.d_v * e.inj.psi).flatten());
  });
  return kernel(map.linear);
}

DerExactnessReport verify_der_exactness(const Extension& e, std::uint64_t bound) {
  require_abelian(e);
  const Field f = e.base.field();
  const Section s = find_section(e);
  const auto [rep, c] = abelian_reduction(e.base, e.kernel, induced_cocycle(e, s));
  DerExactnessReport out;

  const Subspace z1 = cocycle_space(rep, 1);
  out.dim_z1 = z1.dim();

  const Subspace der = total_derivation_space(e);
  out.dim_der_e = der.dim();
  std::vector<DerivationPair> der_basis;
  for (const auto& b : der.basis()) der_basis.push_back(unflatten_total_derivation(e, b));

  // digamma on the basis of Der_B(E).
  const std::size_t gdim = flatten_coeff_pair(CoeffDerivationPair::zero(rep)).size();
  Matrix dig(f, gdim, der_basis.size());
  for (std::size_t k = 0; k < der_basis.size(); ++k) {
    if (!validate_total_derivation(e, der_basis[k]).ok()) out.violations.add("Der_B(E)-basis", {k});
    const CoeffDerivationPair img = digamma(e, s, der_basis[k]);
    if (!g_member(rep, img)) out.violations.add("digamma-in-g", {k});
    dig.set_col(k, flatten_coeff_pair(img));
  }
  for (std::size_t i = 0; i < der_basis.size(); ++i)
    for (std::size_t j = i + 1; j < der_basis.size(); ++j) {
      const CoeffDerivationPair lhs = digamma(e, s, commutator(der_basis[i], der_basis[j]));
      const CoeffDerivationPair rhs = commutator(digamma(e, s, der_basis[i]), digamma(e, s, der_basis[j]));
      if (!(lhs == rhs)) out.violations.add("digamma-homomorphism", {i, j});
    }

  // Ker digamma against Z^1 through Gamma.
  const Subspace ker_coeffs = kernel(dig);
  out.dim_kernel_digamma = ker_coeffs.dim();
  if (out.dim_kernel_digamma != out.dim_z1) out.violations.add("Ker-digamma-vs-Z1", {out.dim_kernel_digamma, out.dim_z1});
  std::vector<Vector> gamma_images;
  for (const auto& coeffs : ker_coeffs.basis()) {
    Vector flat(f, der.ambient_dim());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      Vector term = der.basis()[k];
      term *= coeffs[k];
      flat += term;
    }
    const DerivationPair t = unflatten_total_derivation(e, flat);
    const Cochain g = gamma_iso(e, s, t);
    if (!z1.contains(g.coords)) out.violations.add("Gamma-in-Z1", {});
    if (!(gamma_inverse(e, s, g) == t)) out.violations.add("Gamma-roundtrip", {});
    gamma_images.push_back(g.coords);
  }
  if (Subspace::span(f, z1.ambient_dim(), gamma_images).dim() != gamma_images.size()) {
    out.violations.add("Gamma-injective", {});
  }

  // Im digamma against Ker W inside g.
  const Subspace g = g_basis(rep);
  out.dim_g = g.dim();
  const Subspace im = image(dig);
  out.dim_image_digamma = im.dim();
  const Subspace b2 = coboundary_space(rep, 2);
  const std::size_t cdim = c.coords.size();
  Matrix sys(f, cdim, g.dim() + b2.dim());
  for (std::size_t k = 0; k < g.dim(); ++k) {
    sys.set_col(k, delta_action(rep, unflatten_coeff_pair(g.basis()[k], rep), c).coords);
  }
  for (std::size_t k = 0; k < b2.dim(); ++k) sys.set_col(g.dim() + k, -b2.basis()[k]);
  std::vector<Vector> kw;
  const Subspace sols = kernel(sys);
  for (const auto& sol : sols.basis()) {
    Vector flat(f, gdim);
    for (std::size_t k = 0; k < g.dim(); ++k) {
      Vector term = g.basis()[k];
      term *= sol[k];
      flat += term;
    }
    kw.push_back(flat);
  }
  const Subspace ker_w = Subspace::span(f, gdim, kw);
  out.dim_kernel_w = ker_w.dim();
  if (!same_span(im, ker_w)) out.violations.add("Im-digamma-vs-Ker-W", {out.dim_image_digamma, out.dim_kernel_w});

  // Delta keeps cocycles and coboundaries in place.
  const Subspace z2 = cocycle_space(rep, 2);
  for (std::size_t k = 0; k < g.dim(); ++k) {
    const CoeffDerivationPair d = unflatten_coeff_pair(g.basis()[k], rep);
    for (const auto& z : z2.basis())
      if (!z2.contains(delta_action(rep, d, Cochain{2, z}).coords)) out.violations.add("Delta-Z2", {k});
    for (const auto& bb : b2.basis())
      if (!b2.contains(delta_action(rep, d, Cochain{2, bb}).coords)) out.violations.add("Delta-B2", {k});
  }

  if (f.is_finite()) {
    const std::size_t n = der.ambient_dim();
    if (count_vectors(f, n, bound) <= bound) {
      std::uint64_t count = 0;
      for_each_vector(f, n, [&](const Vector& flat) {
        const DerivationPair t = unflatten_total_derivation(e, flat);
        const bool member = validate_total_derivation(e, t).ok();
        if (member) ++count;
        if (member != der.contains(flat)) out.violations.add("Der_B(E)-enumeration", {});
        return true;
      });
      out.enumerated_der_e = count;
    }
    if (count_vectors(f, g.dim(), bound) <= bound) {
      for_each_element(g, [&](const Vector& flat) {
        const CoeffDerivationPair d = unflatten_coeff_pair(flat, rep);
        const bool ind = inducible_der(e, s, d).verdict == Verdict::Yes;
        if (ind != im.contains(flat)) out.violations.add("inducible-vs-Im-digamma", {});
        return true;
      });
    }
  }
  return out;
}

}  // namespace rrbx
