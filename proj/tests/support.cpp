#include "support.hpp"

#include <stdexcept>

namespace rrbx::test {

namespace {

Matrix scalar_matrix(Field f, long x) { return Matrix::from_ints(f, {{x}}); }

LieAlgebra aff_lie(Field f) {
  return LieAlgebra::from_brackets(f, 2, [f](std::size_t i, std::size_t j) {
    Vector v(f, 2);
    if (i == 0 && j == 1) v[1] = Scalar(f, 1);
    if (i == 1 && j == 0) v[1] = Scalar(f, -1);
    return v;
  });
}

LieAlgebra heisenberg_lie(Field f) {
  return LieAlgebra::from_brackets(f, 3, [f](std::size_t i, std::size_t j) {
    Vector v(f, 3);
    if (i == 0 && j == 1) v[2] = Scalar(f, 1);
    if (i == 1 && j == 0) v[2] = Scalar(f, -1);
    return v;
  });
}

std::vector<Matrix> conj_family(const std::vector<Matrix>& family, const Matrix& p, const Matrix& inv_out,
                                const Matrix& out_basis) {
  std::vector<Matrix> res;
  for (std::size_t i = 0; i < p.cols(); ++i) {
    res.push_back(inv_out * combine(p.col(i), family, Matrix(p.field(), out_basis.rows(), out_basis.rows())) *
                  out_basis);
  }
  return res;
}

Matrix inv(const Matrix& m) {
  auto r = inverse(m);
  if (!r) throw std::logic_error("singular basis change");
  return *r;
}

/// Matrices in the canonical basis of a total algebra that map B (the last
/// `b` coordinates) into itself.
std::vector<Matrix> kernel_stable_matrices(Field f, std::size_t a, std::size_t b) {
  const std::size_t n = a + b;
  std::vector<Matrix> out;
  // Free entries: every (i, j) except rows < a with columns >= a.
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(i < a && j >= a)) free.emplace_back(i, j);
  for_each_vector(f, free.size(), [&](const Vector& x) {
    Matrix m(f, n, n);
    for (std::size_t k = 0; k < free.size(); ++k) m(free[k].first, free[k].second) = x[k];
    out.push_back(std::move(m));
    return true;
  });
  return out;
}

}  // namespace

// ---------------------------------------------------------------- fixtures

RRBAlgebra z1(Field f) { return line(f, 0, 0); }

RRBAlgebra line(Field f, long r, long t) {
  return RRBAlgebra{LieAlgebra::abelian(f, 1), Representation{f, 1, {scalar_matrix(f, r)}}, scalar_matrix(f, t)};
}

RRBAlgebra aff(Field f) {
  const LieAlgebra l = aff_lie(f);
  return RRBAlgebra{l, Representation{f, 2, l.ad}, Matrix(f, 2, 2)};
}

RRBAlgebra afft(Field f) {
  RRBAlgebra r = aff(f);
  r.t = Matrix::from_ints(f, {{0, 0}, {1, 0}});
  return r;
}

RRBAlgebra heisenberg(Field f, const Matrix& t_row) {
  const LieAlgebra l = heisenberg_lie(f);
  Matrix t(f, 3, 3);
  t.set_block(2, 0, t_row);
  return RRBAlgebra{l, Representation{f, 3, l.ad}, t};
}

RRBRepresentation adjoint(const RRBAlgebra& r) {
  RRBRepresentation rep = RRBRepresentation::zero(r, r.a_dim(), r.v_dim());
  rep.s = r.t;
  rep.rho_b = r.lie.ad;
  rep.rho_m = r.rep.action;
  for (std::size_t j = 0; j < r.v_dim(); ++j) {
    Matrix mu(r.field(), r.v_dim(), r.a_dim());
    for (std::size_t k = 0; k < r.a_dim(); ++k) mu.set_col(k, -(r.rep.action[k].col(j)));
    rep.mu[j] = mu;
  }
  return rep;
}

RRBRepresentation trivial_coefficients(const RRBAlgebra& r, const Matrix& s) {
  RRBRepresentation rep = RRBRepresentation::zero(r, s.rows(), s.cols());
  rep.s = s;
  return rep;
}

RRBRepresentation line_coefficients(const RRBAlgebra& r, long rho_b, long rho_m, long mu, long s) {
  const Field f = r.field();
  RRBRepresentation rep = RRBRepresentation::zero(r, 1, 1);
  rep.s = scalar_matrix(f, s);
  rep.rho_b = {scalar_matrix(f, rho_b)};
  rep.rho_m = {scalar_matrix(f, rho_m)};
  rep.mu = {scalar_matrix(f, mu)};
  return rep;
}

// ---------------------------------------------------------------- randomness

Scalar random_scalar(Field f, Rng& rng) {
  if (f.is_finite()) return Scalar(f, static_cast<long long>(rng() % f.characteristic()));
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  return Scalar(f, mpq_class(num(rng), den(rng)));
}

Matrix random_matrix(Field f, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(f, rng);
  return m;
}

Matrix random_invertible(Field f, std::size_t n, Rng& rng) {
  for (;;) {
    Matrix m = random_matrix(f, n, n, rng);
    if (rank(m) == n) return m;
  }
}

Vector random_vector(Field f, std::size_t n, Rng& rng) {
  Vector v(f, n);
  for (std::size_t i = 0; i < n; ++i) v[i] = random_scalar(f, rng);
  return v;
}

RRBRepresentation transport(const RRBRepresentation& rep, const Matrix& p, const Matrix& q, const Matrix& r,
                            const Matrix& u) {
  const Matrix pi = inv(p), qi = inv(q), ri = inv(r), ui = inv(u);
  const RRBAlgebra& b = rep.base;
  const Field f = rep.field();
  RRBAlgebra base{LieAlgebra{f, b.a_dim(), conj_family(b.lie.ad, p, pi, p)},
                  Representation{f, b.v_dim(), conj_family(b.rep.action, p, qi, q)}, pi * b.t * q};
  RRBRepresentation out{base, rep.b_dim, rep.m_dim, ri * rep.s * u, {}, {}, {}};
  out.rho_b = conj_family(rep.rho_b, p, ri, r);
  out.rho_m = conj_family(rep.rho_m, p, ui, u);
  for (std::size_t j = 0; j < b.v_dim(); ++j) {
    out.mu.push_back(ui * combine(q.col(j), rep.mu, Matrix(f, rep.m_dim, rep.b_dim)) * r);
  }
  return out;
}

std::vector<RRBRepresentation> random_contexts(Field f, std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<RRBRepresentation> out;
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > 100 * count + 1000) throw std::logic_error("random context generator stalled");
    RRBAlgebra base;
    switch (rng() % 5) {
      case 0: {  // abelian with trivial action, any T
        const std::size_t a = 1 + rng() % 3, v = 1 + rng() % 3;
        base = RRBAlgebra{LieAlgebra::abelian(f, a), Representation::trivial(f, a, v), random_matrix(f, a, v, rng)};
        break;
      }
      case 1: {
        const Scalar r = random_scalar(f, rng), t = random_scalar(f, rng);
        base = RRBAlgebra{LieAlgebra::abelian(f, 1), Representation{f, 1, {Matrix(f, 1, 1)}}, Matrix(f, 1, 1)};
        base.rep.action[0](0, 0) = r;
        base.t(0, 0) = t;
        break;
      }
      case 2:
        base = afft(f);
        base.t = random_scalar(f, rng) * base.t;
        break;
      case 3:
        base = aff(f);
        break;
      default:
        base = heisenberg(f, random_matrix(f, 1, 3, rng));
        break;
    }
    RRBRepresentation rep;
    switch (rng() % 3) {
      case 0:
        rep = adjoint(base);
        break;
      case 1:
        rep = trivial_coefficients(base, random_matrix(f, 1 + rng() % 3, 1 + rng() % 3, rng));
        break;
      default: {
        // Rejection sampling over 1-dimensional coefficients.
        rep = RRBRepresentation::zero(base, 1, 1);
        rep.s = random_matrix(f, 1, 1, rng);
        for (auto& x : rep.rho_b) x = random_matrix(f, 1, 1, rng);
        for (auto& x : rep.rho_m) x = random_matrix(f, 1, 1, rng);
        for (auto& x : rep.mu) x = random_matrix(f, 1, 1, rng);
        break;
      }
    }
    if (!validate_rrb_representation(rep).ok()) continue;
    rep = transport(rep, random_invertible(f, rep.base.a_dim(), rng), random_invertible(f, rep.base.v_dim(), rng),
                    random_invertible(f, rep.b_dim, rng), random_invertible(f, rep.m_dim, rng));
    if (!validate_rrb_representation(rep).ok()) throw std::logic_error("transport broke a valid context");
    out.push_back(std::move(rep));
  }
  return out;
}

// ---------------------------------------------------------------- exhaustive families

void for_each_line_sextuple(Field f, const std::function<void(const NabCase&)>& visit) {
  const long p = f.characteristic();
  for (long r = 0; r < p; ++r)
    for (long t = 0; t < p; ++t)
      for (long nu = 0; nu < p; ++nu)
        for (long s = 0; s < p; ++s) {
          const RRBAlgebra base = line(f, r, t), kernel = line(f, nu, s);
          for_each_vector(f, 5, [&](const Vector& x) {
            NonAbelianCocycle c = NonAbelianCocycle::zero(base, kernel);
            c.varpi.at(0, 0) = Vector(f, {x[0]});
            c.chi(0, 0) = x[1];
            c.mu[0](0, 0) = x[2];
            c.rho_b[0](0, 0) = x[3];
            c.rho_m[0](0, 0) = x[4];
            visit(NabCase{base, kernel, c});
            return true;
          });
        }
}

std::vector<NabCase> valid_line_cocycles(Field f) {
  std::vector<NabCase> out;
  for_each_line_sextuple(f, [&](const NabCase& c) {
    if (validate_nab_cocycle(c.base, c.kernel, c.cocycle).ok()) out.push_back(c);
  });
  return out;
}

std::vector<RRBRepresentation> line_contexts(Field f) {
  const long p = f.characteristic();
  std::vector<RRBRepresentation> out;
  for (long r = 0; r < p; ++r)
    for (long t = 0; t < p; ++t)
      for_each_vector(f, 4, [&](const Vector& x) {
        RRBRepresentation rep = line_coefficients(line(f, r, t), 0, 0, 0, 0);
        rep.rho_b[0](0, 0) = x[0];
        rep.rho_m[0](0, 0) = x[1];
        rep.mu[0](0, 0) = x[2];
        rep.s(0, 0) = x[3];
        if (validate_rrb_representation(rep).ok()) out.push_back(rep);
        return true;
      });
  return out;
}

// ---------------------------------------------------------------- oracles

Degree1Image degree1_oracle(const RRBRepresentation& ctx, const Matrix& phi_b, const Matrix& phi_m) {
  const RRBAlgebra& base = ctx.base;
  const Field f = ctx.field();
  const std::size_t a = base.a_dim(), v = base.v_dim();
  Degree1Image out{BilinearMap(f, a, a, ctx.b_dim), BilinearMap(f, a, v, ctx.m_dim), Matrix(f, ctx.b_dim, v)};
  for (std::size_t i = 0; i < a; ++i) {
    const Vector x = Vector::unit(f, a, i);
    for (std::size_t j = 0; j < a; ++j) {
      const Vector y = Vector::unit(f, a, j);
      out.delta_b.at(i, j) = ctx.rho_b[i] * (phi_b * y) - ctx.rho_b[j] * (phi_b * x) - phi_b * base.lie.bracket(x, y);
    }
    for (std::size_t q = 0; q < v; ++q) {
      const Vector w = Vector::unit(f, v, q);
      out.delta_m.at(i, q) =
          -(ctx.mu[q] * (phi_b * x)) + ctx.rho_m[i] * (phi_m * w) - phi_m * (base.rep.action[i] * w);
    }
  }
  for (std::size_t q = 0; q < v; ++q) {
    const Vector w = Vector::unit(f, v, q);
    out.h.set_col(q, -(phi_b * (base.t * w)) + ctx.s * (phi_m * w));
  }
  return out;
}

bool degree2_cocycle_oracle(const RRBRepresentation& ctx, const BilinearMap& f_b, const BilinearMap& f_m, const Matrix& theta) {
  const RRBAlgebra& base = ctx.base;
  const Field f = ctx.field();
  const std::size_t a = base.a_dim(), v = base.v_dim();
  auto fb = [&](const Vector& x, const Vector& y) { return f_b(x, y); };
  auto fm = [&](const Vector& x, const Vector& w) { return f_m(x, w); };
  auto br = [&](const Vector& x, const Vector& y) { return base.lie.bracket(x, y); };
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j)
      for (std::size_t k = 0; k < a; ++k) {
        const Vector x = Vector::unit(f, a, i), y = Vector::unit(f, a, j), z = Vector::unit(f, a, k);
        const Vector d = ctx.rho_b_of(x) * fb(y, z) + ctx.rho_b_of(z) * fb(x, y) - ctx.rho_b_of(y) * fb(x, z) -
                         fb(br(x, y), z) - fb(br(y, z), x) + fb(br(x, z), y);
        if (!d.is_zero()) return false;
      }
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j)
      for (std::size_t q = 0; q < v; ++q) {
        const Vector x = Vector::unit(f, a, i), y = Vector::unit(f, a, j), w = Vector::unit(f, v, q);
        const Vector d = -fm(br(x, y), w) + ctx.mu_of(w) * fb(x, y) + ctx.rho_m_of(x) * fm(y, w) -
                         ctx.rho_m_of(y) * fm(x, w) + fm(x, base.rep.action_of(y) * w) -
                         fm(y, base.rep.action_of(x) * w);
        if (!d.is_zero()) return false;
      }
  for (std::size_t p = 0; p < v; ++p)
    for (std::size_t q = 0; q < v; ++q) {
      const Vector v1 = Vector::unit(f, v, p), v2 = Vector::unit(f, v, q);
      const Vector t1 = base.t * v1, t2 = base.t * v2;
      const Vector d = ctx.rho_b_of(t1) * (theta * v2) - ctx.rho_b_of(t2) * (theta * v1) -
                       ctx.s * (ctx.mu_of(v1) * (theta * v2) - ctx.mu_of(v2) * (theta * v1)) -
                       theta * (base.rep.action_of(t1) * v2 - base.rep.action_of(t2) * v1) + fb(t1, t2) -
                       ctx.s * (fm(t1, v2) - fm(t2, v1));
      if (!d.is_zero()) return false;
    }
  return true;
}

Vector derivation_residual(const RRBAlgebra& r, const DerivationPair& d) {
  const Field f = r.field();
  const std::size_t a = r.a_dim(), v = r.v_dim();
  Vector out(f, 0);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j) {
      const Vector x = Vector::unit(f, a, i), y = Vector::unit(f, a, j);
      out = out.concat(d.d_a * r.lie.bracket(x, y) - r.lie.bracket(d.d_a * x, y) - r.lie.bracket(x, d.d_a * y));
    }
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t q = 0; q < v; ++q) {
      const Vector x = Vector::unit(f, a, i), w = Vector::unit(f, v, q);
      out = out.concat(d.d_v * (r.rep.action_of(x) * w) - r.rep.action_of(d.d_a * x) * w -
                       r.rep.action_of(x) * (d.d_v * w));
    }
  return out.concat((r.t * d.d_v - d.d_a * r.t).flatten());
}

Vector hom_residual(const RRBAlgebra& src, const RRBAlgebra& dst, const RRBHom& h) {
  const Field f = src.field();
  const std::size_t a = src.a_dim(), v = src.v_dim();
  Vector out(f, 0);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j) {
      const Vector x = Vector::unit(f, a, i), y = Vector::unit(f, a, j);
      out = out.concat(h.phi * src.lie.bracket(x, y) - dst.lie.bracket(h.phi * x, h.phi * y));
    }
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t q = 0; q < v; ++q) {
      const Vector x = Vector::unit(f, a, i), w = Vector::unit(f, v, q);
      out = out.concat(h.psi * (src.rep.action_of(x) * w) - dst.rep.action_of(h.phi * x) * (h.psi * w));
    }
  return out.concat((dst.t * h.psi - h.phi * src.t).flatten());
}

std::vector<RRBHom> brute_force_kernel_automorphisms(const Extension& e) {
  const Field f = e.base.field();
  const auto phis = kernel_stable_matrices(f, e.base.a_dim(), e.kernel.a_dim());
  const auto psis = kernel_stable_matrices(f, e.base.v_dim(), e.kernel.v_dim());
  std::vector<RRBHom> out;
  for (const auto& phi : phis) {
    if (rank(phi) != phi.rows()) continue;
    for (const auto& psi : psis) {
      if (rank(psi) != psi.rows()) continue;
      const RRBHom h{phi, psi};
      if (hom_residual(e.total, e.total, h).is_zero()) out.push_back(h);
    }
  }
  return out;
}

std::vector<DerivationPair> brute_force_kernel_derivations(const Extension& e) {
  const Field f = e.base.field();
  const auto das = kernel_stable_matrices(f, e.base.a_dim(), e.kernel.a_dim());
  const auto dvs = kernel_stable_matrices(f, e.base.v_dim(), e.kernel.v_dim());
  std::vector<DerivationPair> out;
  for (const auto& da : das)
    for (const auto& dv : dvs) {
      const DerivationPair d{da, dv};
      if (derivation_residual(e.total, d).is_zero()) out.push_back(d);
    }
  return out;
}

bool residual_zero(const std::vector<ResidualBlock>& blocks) {
  for (const auto& b : blocks)
    if (!b.value.is_zero()) return false;
  return true;
}

}  // namespace rrbx::test
