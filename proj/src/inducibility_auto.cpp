#include "rrbx/inducibility_auto.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rrbx {

namespace {

Matrix invert(const Matrix& m, const char* what) {
  auto inv = inverse(m);
  if (!inv) fail(ErrorKind::SingularAutomorphism, std::string(what) + " is not invertible");
  return *inv;
}

Matrix nu_applied(const RRBAlgebra& kernel, const Vector& y) {
  Matrix out(kernel.field(), kernel.v_dim(), kernel.a_dim());
  for (std::size_t k = 0; k < kernel.a_dim(); ++k) out.set_col(k, kernel.rep.action[k] * y);
  return out;
}

/// Matrix of the bilinear map applied to fixed left arguments alpha^{-1} e_i, alpha^{-1} e_j.
BilinearMap pull_back(const BilinearMap& f, const Matrix& left, const Matrix& right, const Matrix& out) {
  BilinearMap g(f.field(), f.left_dim(), f.right_dim(), out.rows());
  for (std::size_t i = 0; i < f.left_dim(); ++i)
    for (std::size_t j = 0; j < f.right_dim(); ++j) g.at(i, j) = out * f(left.col(i), right.col(j));
  return g;
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
  const Matrix q = Matrix::hstack(inj, sec);
  const Matrix images = Matrix::hstack(inj * top, inj * mid + sec * bottom);
  return images * invert(q, "section and injection block");
}

std::vector<Matrix> invertible_matrices(Field f, std::size_t n, std::uint64_t bound,
                                        const std::function<bool(const Matrix&)>& keep) {
  if (!f.is_finite()) fail(ErrorKind::ModeUnsupported, "automorphism enumeration needs a finite field");
  if (count_vectors(f, n * n, bound) > bound) {
    fail(ErrorKind::BoundExceeded, "matrix space exceeds the enumeration bound " + std::to_string(bound));
  }
  std::vector<Matrix> out;
  for_each_vector(f, n * n, [&](const Vector& flat) {
    Matrix m = Matrix::reshape(flat, n, n);
    if (rank(m) == n && keep(m)) out.push_back(std::move(m));
    return true;
  });
  return out;
}

}  // namespace

AutPair AutPair::identity(const RRBAlgebra& base, const RRBAlgebra& kernel) {
  return AutPair{RRBHom::identity(base), RRBHom::identity(kernel)};
}

ValidationReport validate_aut_pair(const RRBAlgebra& base, const RRBAlgebra& kernel, const AutPair& p) {
  ValidationReport r;
  const HomValidation a = validate_hom(p.alpha, base, base);
  const HomValidation b = validate_hom(p.beta, kernel, kernel);
  for (const auto& v : a.report.violations) r.add("alpha:" + v.tag, v.indices);
  for (const auto& v : b.report.violations) r.add("beta:" + v.tag, v.indices);
  if (a.report.ok() && !a.is_automorphism) r.add("alpha:invertible", {});
  if (b.report.ok() && !b.is_automorphism) r.add("beta:invertible", {});
  return r;
}

ValidationReport validate_total_automorphism(const Extension& e, const RRBHom& gamma) {
  ValidationReport r;
  const HomValidation h = validate_hom(gamma, e.total, e.total);
  r.append(h.report);
  if (h.report.ok() && !h.is_automorphism) r.add("invertible", {});
  if (!preserves(gamma.phi, e.inj.phi)) r.add("kernel-stable", {0});
  if (!preserves(gamma.psi, e.inj.psi)) r.add("kernel-stable", {1});
  return r;
}

AutPair restrict(const Extension& e, const Section& s, const RRBHom& gamma) {
  if (gamma.phi.rows() != e.total.a_dim() || gamma.phi.cols() != e.total.a_dim() ||
      gamma.psi.rows() != e.total.v_dim() || gamma.psi.cols() != e.total.v_dim()) {
    fail(ErrorKind::ShapeError, "total automorphism has the wrong shape");
  }
  if (!preserves(gamma.phi, e.inj.phi) || !preserves(gamma.psi, e.inj.psi)) {
    fail(ErrorKind::NotPreservingKernel, "automorphism does not map the kernel into itself");
  }
  const auto [lb, lm] = kernel_coordinates(e);
  return AutPair{RRBHom{e.proj.phi * gamma.phi * s.s_alg, e.proj.psi * gamma.psi * s.s_mod},
                 RRBHom{lb * gamma.phi * e.inj.phi, lm * gamma.psi * e.inj.psi}};
}

NonAbelianCocycle transformed_cocycle(const NonAbelianCocycle& c, const AutPair& p) {
  const Matrix a1 = invert(p.alpha.phi, "alpha_1");
  const Matrix a2 = invert(p.alpha.psi, "alpha_2");
  const Matrix b1i = invert(p.beta.phi, "beta_1");
  const Matrix b2i = invert(p.beta.psi, "beta_2");
  const Matrix& b1 = p.beta.phi;
  const Matrix& b2 = p.beta.psi;
  NonAbelianCocycle out = c;
  out.omega = pull_back(c.omega, a1, a1, b1);
  out.varpi = pull_back(c.varpi, a1, a2, b2);
  out.chi = b1 * c.chi * a2;
  for (std::size_t q = 0; q < c.mu.size(); ++q) out.mu[q] = b2 * c.mu_of(a2.col(q)) * b1i;
  for (std::size_t i = 0; i < c.rho_b.size(); ++i) {
    out.rho_b[i] = b1 * c.rho_b_of(a1.col(i)) * b1i;
    out.rho_m[i] = b2 * c.rho_m_of(a1.col(i)) * b2i;
  }
  return out;
}

ValidationReport compatibility(const NonAbelianCocycle& c, const AutPair& p) {
  const Matrix& a1 = p.alpha.phi;
  const Matrix& a2 = p.alpha.psi;
  const Matrix& b1 = p.beta.phi;
  const Matrix& b2 = p.beta.psi;
  if (a1.cols() != c.rho_b.size() || a2.cols() != c.mu.size() || b1.cols() != c.chi.rows() ||
      b2.cols() != c.varpi.out_dim()) {
    fail(ErrorKind::ShapeError, "automorphism pair does not match the cocycle");
  }
  ValidationReport r;
  for (std::size_t i = 0; i < c.rho_b.size(); ++i) {
    if (b1 * c.rho_b[i] != c.rho_b_of(a1.col(i)) * b1) r.add("compatible-rho_B", {i});
    if (b2 * c.rho_m[i] != c.rho_m_of(a1.col(i)) * b2) r.add("compatible-rho_M", {i});
  }
  for (std::size_t q = 0; q < c.mu.size(); ++q)
    if (b2 * c.mu[q] != c.mu_of(a2.col(q)) * b1) r.add("compatible-mu", {q});
  return r;
}

bool compatible(const NonAbelianCocycle& c, const AutPair& p) { return compatibility(c, p).ok(); }

std::vector<ResidualBlock> inducibility_residual(const RRBAlgebra& base, const RRBAlgebra& kernel,
                                                 const NonAbelianCocycle& c, const AutPair& p,
                                                 const EquivalenceWitness& w) {
  const std::size_t a = base.a_dim(), v = base.v_dim();
  const Matrix& a1 = p.alpha.phi;
  const Matrix& a2 = p.alpha.psi;
  const Matrix& b1 = p.beta.phi;
  const Matrix& b2 = p.beta.psi;
  const Matrix& zeta = w.zeta;
  const Matrix& eta = w.eta;
  auto nu = [&](const Vector& x) { return kernel.rep.action_of(x); };
  std::vector<ResidualBlock> out;

  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = i + 1; j < a; ++j) {
      const Vector lhs = b1 * c.omega.at(i, j) - c.omega(a1.col(i), a1.col(j));
      const Vector rhs = c.rho_b_of(a1.col(i)) * zeta.col(j) - c.rho_b_of(a1.col(j)) * zeta.col(i) -
                         zeta * base.lie.ad[i].col(j) + kernel.lie.bracket(zeta.col(i), zeta.col(j));
      out.push_back({"Iam1", {i, j}, lhs - rhs});
    }
  for (std::size_t i = 0; i < a; ++i) {
    const Matrix lhs = b1 * c.rho_b[i] - c.rho_b_of(a1.col(i)) * b1;
    out.push_back({"Iam2", {i}, (lhs - kernel.lie.ad_of(zeta.col(i)) * b1).flatten()});
  }
  for (std::size_t i = 0; i < a; ++i) {
    const Matrix lhs = b2 * c.rho_m[i] - c.rho_m_of(a1.col(i)) * b2;
    out.push_back({"Iam3", {i}, (lhs - nu(zeta.col(i)) * b2).flatten()});
  }
  for (std::size_t q = 0; q < v; ++q) {
    const Matrix lhs = b2 * c.mu[q] - c.mu_of(a2.col(q)) * b1;
    out.push_back({"Iam4", {q}, (lhs + nu_applied(kernel, eta.col(q)) * b1).flatten()});
  }
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t q = 0; q < v; ++q) {
      const Vector lhs = b2 * c.varpi.at(i, q) - c.varpi(a1.col(i), a2.col(q));
      const Vector rhs = nu(zeta.col(i)) * eta.col(q) - c.mu_of(a2.col(q)) * zeta.col(i) +
                         c.rho_m_of(a1.col(i)) * eta.col(q) - eta * base.rep.action[i].col(q);
      out.push_back({"Iam5", {i, q}, lhs - rhs});
    }
  for (std::size_t q = 0; q < v; ++q) {
    const Vector lhs = b1 * c.chi.col(q) - c.chi * a2.col(q);
    const Vector rhs = kernel.t * eta.col(q) - zeta * base.t.col(q);
    out.push_back({"Iam6", {q}, lhs - rhs});
  }
  return out;
}

RRBHom assemble_total_automorphism(const Extension& e, const Section& s, const AutPair& p,
                                   const EquivalenceWitness& w) {
  return RRBHom{assemble(e.inj.phi, s.s_alg, p.beta.phi, w.zeta, p.alpha.phi),
                assemble(e.inj.psi, s.s_mod, p.beta.psi, w.eta, p.alpha.psi)};
}

InducibilityResult inducible(const Extension& e, const Section& s, const AutPair& p, const SearchOptions& options) {
  const ValidationReport pr = validate_aut_pair(e.base, e.kernel, p);
  if (!pr.ok()) fail(ErrorKind::InvalidInput, "not an automorphism pair: " + pr.summary());
  const NonAbelianCocycle c = induced_cocycle(e, s);
  const bool abelian = is_abelian_kernel(e.kernel);
  if (abelian && !options.witness && options.mode != Mode::SearchFinite) {
    const ValidationReport compat = compatibility(c, p);
    if (!compat.ok()) return InducibilityResult{Verdict::No, std::nullopt, std::nullopt, *compat.first()};
  }
  const ResidualFn residual = [&](const EquivalenceWitness& w) {
    return inducibility_residual(e.base, e.kernel, c, p, w);
  };
  const EquivalenceResult res = find_witness(e.base.field(), e.base.a_dim(), e.kernel.a_dim(), e.base.v_dim(),
                                             e.kernel.v_dim(), residual, abelian, options);
  InducibilityResult out{res.verdict, res.witness, std::nullopt, res.violation};
  if (res.verdict == Verdict::Yes) {
    RRBHom gamma = assemble_total_automorphism(e, s, p, *res.witness);
    if (!validate_total_automorphism(e, gamma).ok() || !(restrict(e, s, gamma) == p)) {
      throw std::logic_error("assembled automorphism failed re-validation");
    }
    out.gamma = std::move(gamma);
  }
  return out;
}

WellsResult wells_map(const Extension& e, const Section& s, const AutPair& p, const SearchOptions& options) {
  const ValidationReport pr = validate_aut_pair(e.base, e.kernel, p);
  if (!pr.ok()) fail(ErrorKind::InvalidInput, "not an automorphism pair: " + pr.summary());
  const NonAbelianCocycle c = induced_cocycle(e, s);
  WellsResult out;
  out.transformed = transformed_cocycle(c, p);

  if (is_abelian_kernel(e.kernel) && compatible(c, p) && !options.witness) {
    const auto [rep, orig] = abelian_reduction(e.base, e.kernel, c);
    const auto moved = abelian_reduction(e.base, e.kernel, out.transformed).second;
    out.class_difference = Cochain{2, moved.coords - orig.coords};
    const bool trivial = class_equal(rep, moved, orig);
    const EquivalenceResult res = cocycles_equivalent(e.base, e.kernel, out.transformed, c, options);
    if (res.verdict != Verdict::Unknown && (res.verdict == Verdict::Yes) != trivial) {
      throw std::logic_error("cohomology class test and equivalence search disagree");
    }
    out.verdict = trivial ? Verdict::Yes : Verdict::No;
    out.witness = res.witness;
    return out;
  }
  const EquivalenceResult res = cocycles_equivalent(e.base, e.kernel, out.transformed, c, options);
  out.verdict = res.verdict;
  out.witness = res.witness;
  out.violation = res.violation;
  return out;
}

ValidationReport z1nab_report(const RRBAlgebra& base, const RRBAlgebra& kernel, const NonAbelianCocycle& c,
                              const Z1Nab& w) {
  const std::size_t a = base.a_dim(), v = base.v_dim(), b = kernel.a_dim(), m = kernel.v_dim();
  if (w.zeta.rows() != b || w.zeta.cols() != a || w.eta.rows() != m || w.eta.cols() != v) {
    fail(ErrorKind::ShapeError, "1-cocycle has the wrong shape");
  }
  const Matrix& zeta = w.zeta;
  const Matrix& eta = w.eta;
  auto nu = [&](const Vector& x) { return kernel.rep.action_of(x); };
  ValidationReport r;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = i + 1; j < a; ++j) {
      const Vector lhs = c.rho_b[j] * zeta.col(i) + zeta * base.lie.ad[i].col(j);
      const Vector rhs = c.rho_b[i] * zeta.col(j) + kernel.lie.bracket(zeta.col(i), zeta.col(j));
      if (lhs != rhs) r.add("W5", {0, i, j});
    }
  for (std::size_t i = 0; i < a; ++i) {
    if (!kernel.lie.ad_of(zeta.col(i)).is_zero()) r.add("W5", {1, i});
    if (!nu(zeta.col(i)).is_zero()) r.add("W5", {2, i});
  }
  for (std::size_t q = 0; q < v; ++q)
    if (!nu_applied(kernel, eta.col(q)).is_zero()) r.add("W5", {3, q});
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t q = 0; q < v; ++q) {
      const Vector lhs = nu(zeta.col(i)) * eta.col(q) + c.rho_m[i] * eta.col(q);
      const Vector rhs = eta * base.rep.action[i].col(q) + c.mu[q] * zeta.col(i);
      if (lhs != rhs) r.add("W5", {4, i, q});
    }
  if (kernel.t * eta != zeta * base.t) r.add("W5", {5});
  return r;
}

bool z1nab_member(const RRBAlgebra& base, const RRBAlgebra& kernel, const NonAbelianCocycle& c, const Z1Nab& w) {
  return z1nab_report(base, kernel, c, w).ok();
}

Z1Nab lambda_iso(const Extension& e, const Section& s, const RRBHom& gamma) {
  if (!(restrict(e, s, gamma) == AutPair::identity(e.base, e.kernel))) {
    fail(ErrorKind::NotInKernel, "automorphism does not restrict to the identity pair");
  }
  const auto [lb, lm] = kernel_coordinates(e);
  return Z1Nab{lb * (gamma.phi * s.s_alg - s.s_alg), lm * (gamma.psi * s.s_mod - s.s_mod)};
}

RRBHom lambda_inverse(const Extension& e, const Section& s, const Z1Nab& w) {
  const AutPair id = AutPair::identity(e.base, e.kernel);
  RRBHom gamma = assemble_total_automorphism(e, s, id, w);
  const ValidationReport r = validate_total_automorphism(e, gamma);
  if (!r.ok()) fail(ErrorKind::InvalidInput, "not a non-abelian 1-cocycle: " + r.summary());
  return gamma;
}

std::vector<RRBHom> enumerate_automorphisms(const RRBAlgebra& a, std::uint64_t bound) {
  const Field f = a.field();
  const LieAlgebra& l = a.lie;
  const auto phis = invertible_matrices(f, a.a_dim(), bound, [&](const Matrix& phi) {
    for (std::size_t i = 0; i < l.dim; ++i)
      for (std::size_t j = i + 1; j < l.dim; ++j)
        if (phi * l.ad[i].col(j) != l.bracket(phi.col(i), phi.col(j))) return false;
    return true;
  });
  const auto psis = invertible_matrices(f, a.v_dim(), bound, [](const Matrix&) { return true; });
  std::vector<RRBHom> out;
  for (const auto& phi : phis)
    for (const auto& psi : psis) {
      RRBHom h{phi, psi};
      if (validate_hom(h, a, a).report.ok()) out.push_back(std::move(h));
    }
  return out;
}

namespace {

std::string key(const RRBHom& h) { return (h.phi.flatten().concat(h.psi.flatten())).str(); }
std::string key(const AutPair& p) { return key(p.alpha) + "|" + key(p.beta); }

}  // namespace

WellsExactnessReport verify_wells_exactness(const Extension& e, std::uint64_t bound) {
  const Field f = e.base.field();
  if (!f.is_finite()) fail(ErrorKind::ModeUnsupported, "exactness check needs a finite field");
  const Section s = find_section(e);
  const NonAbelianCocycle c = induced_cocycle(e, s);
  const AutPair id = AutPair::identity(e.base, e.kernel);
  WellsExactnessReport rep;

  std::vector<RRBHom> aut_e;
  for (auto& g : enumerate_automorphisms(e.total, bound)) {
    if (validate_total_automorphism(e, g).ok()) aut_e.push_back(std::move(g));
  }
  rep.aut_e = aut_e.size();

  std::vector<AutPair> images;
  std::vector<RRBHom> kernel_k;
  std::map<std::string, std::size_t> image_keys;
  for (const auto& g : aut_e) {
    AutPair p = restrict(e, s, g);
    if (!validate_aut_pair(e.base, e.kernel, p).ok()) rep.violations.add("K-lands-in-Aut", {});
    if (p == id) kernel_k.push_back(g);
    image_keys.emplace(key(p), image_keys.size());
    images.push_back(std::move(p));
  }
  rep.kernel_k = kernel_k.size();
  rep.image_k = image_keys.size();

  // K is a homomorphism, checked on a capped set of pairs.
  const std::size_t cap = std::min<std::size_t>(aut_e.size(), 24);
  for (std::size_t i = 0; i < cap; ++i)
    for (std::size_t j = 0; j < cap; ++j) {
      const AutPair lhs = restrict(e, s, aut_e[i].compose(aut_e[j]));
      const AutPair rhs{images[i].alpha.compose(images[j].alpha), images[i].beta.compose(images[j].beta)};
      if (!(lhs == rhs)) rep.violations.add("K-homomorphism", {i, j});
    }

  // Ker K and Z^1_nab through lambda.
  const std::size_t a = e.base.a_dim(), v = e.base.v_dim(), b = e.kernel.a_dim(), m = e.kernel.v_dim();
  if (count_vectors(f, a * b + v * m, bound) > bound) {
    fail(ErrorKind::BoundExceeded, "1-cochain space exceeds the enumeration bound");
  }
  std::map<std::string, std::size_t> z1;
  for_each_vector(f, a * b + v * m, [&](const Vector& flat) {
    const Z1Nab w = unflatten_witness(flat, a, b, v, m);
    if (z1nab_member(e.base, e.kernel, c, w)) {
      z1.emplace(flat.str(), z1.size());
      const RRBHom g = lambda_inverse(e, s, w);
      if (!(lambda_iso(e, s, g) == w)) rep.violations.add("lambda-roundtrip", {});
    }
    return true;
  });
  rep.z1nab = z1.size();
  if (rep.z1nab != rep.kernel_k) rep.violations.add("KerK-vs-Z1", {rep.kernel_k, rep.z1nab});
  std::vector<Z1Nab> lambdas;
  for (const auto& g : kernel_k) {
    Z1Nab w = lambda_iso(e, s, g);
    if (!z1.count(flatten_witness(w).str())) rep.violations.add("lambda-lands-in-Z1", {});
    if (!(lambda_inverse(e, s, w) == g)) rep.violations.add("lambda-roundtrip", {});
    lambdas.push_back(std::move(w));
  }
  const std::size_t kcap = std::min<std::size_t>(kernel_k.size(), 16);
  for (std::size_t i = 0; i < kcap; ++i)
    for (std::size_t j = 0; j < kcap; ++j) {
      const Z1Nab sum{lambdas[i].zeta + lambdas[j].zeta, lambdas[i].eta + lambdas[j].eta};
      if (!(lambda_iso(e, s, kernel_k[i].compose(kernel_k[j])) == sum)) rep.violations.add("lambda-additive", {i, j});
    }

  // Ker W = Im K.
  const auto alphas = enumerate_automorphisms(e.base, bound);
  const auto betas = enumerate_automorphisms(e.kernel, bound);
  SearchOptions opts;
  opts.mode = Mode::SearchFinite;
  opts.bound = bound;
  for (const auto& al : alphas)
    for (const auto& be : betas) {
      const AutPair p{al, be};
      ++rep.pairs;
      const WellsResult w = wells_map(e, s, p, opts);
      const bool trivial = w.verdict == Verdict::Yes;
      if (trivial) ++rep.kernel_w;
      if (trivial != (image_keys.count(key(p)) > 0)) rep.violations.add("KerW-vs-ImK", {rep.pairs - 1});
    }
  return rep;
}

}  // namespace rrbx
