#include "rrbx/extensions.hpp"

#include <stdexcept>

namespace rrbx {

namespace {

Vector unit(Field f, std::size_t n, std::size_t i) { return Vector::unit(f, n, i); }

void require(bool ok, ErrorKind kind, const std::string& what) {
  if (!ok) fail(kind, what);
}

void check_family(const std::vector<Matrix>& mats, std::size_t count, std::size_t rows, std::size_t cols,
                  const std::string& name) {
  require(mats.size() == count, ErrorKind::ShapeError, name + ": wrong number of matrices");
  for (const auto& m : mats) require(m.rows() == rows && m.cols() == cols, ErrorKind::ShapeError, name + ": wrong shape");
}

void check_cocycle_shape(const RRBAlgebra& base, const RRBAlgebra& kernel, const NonAbelianCocycle& c) {
  const std::size_t a = base.a_dim(), v = base.v_dim(), b = kernel.a_dim(), m = kernel.v_dim();
  require(base.field() == kernel.field(), ErrorKind::FieldMismatch, "base and kernel fields differ");
  require(c.omega.left_dim() == a && c.omega.right_dim() == a && c.omega.out_dim() == b, ErrorKind::ShapeError,
          "omega: wrong shape");
  require(c.varpi.left_dim() == a && c.varpi.right_dim() == v && c.varpi.out_dim() == m, ErrorKind::ShapeError,
          "varpi: wrong shape");
  require(c.chi.rows() == b && c.chi.cols() == v, ErrorKind::ShapeError, "chi: wrong shape");
  check_family(c.mu, v, m, b, "mu");
  check_family(c.rho_b, a, b, b, "rho_B");
  check_family(c.rho_m, a, m, m, "rho_M");
}

/// Matrix of a -> nu(a) y for a fixed y in M.
Matrix nu_applied(const RRBAlgebra& kernel, const Vector& y) {
  Matrix out(kernel.field(), kernel.v_dim(), kernel.a_dim());
  for (std::size_t k = 0; k < kernel.a_dim(); ++k) out.set_col(k, kernel.rep.action[k] * y);
  return out;
}

Matrix solve_columns(const Matrix& q, const Matrix& images) {
  const auto qi = inverse(q);
  if (!qi) throw std::logic_error("section and injection do not span the total space");
  return images * *qi;
}

}  // namespace

// ---------------------------------------------------------------- cocycle data

NonAbelianCocycle NonAbelianCocycle::zero(const RRBAlgebra& base, const RRBAlgebra& kernel) {
  const Field f = base.field();
  const std::size_t a = base.a_dim(), v = base.v_dim(), b = kernel.a_dim(), m = kernel.v_dim();
  return NonAbelianCocycle{BilinearMap(f, a, a, b),
                           BilinearMap(f, a, v, m),
                           Matrix(f, b, v),
                           std::vector<Matrix>(v, Matrix(f, m, b)),
                           std::vector<Matrix>(a, Matrix(f, b, b)),
                           std::vector<Matrix>(a, Matrix(f, m, m))};
}

Matrix NonAbelianCocycle::rho_b_of(const Vector& x) const {
  return combine(x, rho_b, Matrix(chi.field(), chi.rows(), chi.rows()));
}
Matrix NonAbelianCocycle::rho_m_of(const Vector& x) const {
  return combine(x, rho_m, Matrix(chi.field(), varpi.out_dim(), varpi.out_dim()));
}
Matrix NonAbelianCocycle::mu_of(const Vector& v) const {
  return combine(v, mu, Matrix(chi.field(), varpi.out_dim(), chi.rows()));
}

bool is_abelian_kernel(const RRBAlgebra& kernel) { return kernel.is_abelian(); }

// ---------------------------------------------------------------- L1..L9

ValidationReport validate_nab_cocycle(const RRBAlgebra& base, const RRBAlgebra& kernel, const NonAbelianCocycle& c) {
  check_cocycle_shape(base, kernel, c);
  const Field f = base.field();
  const std::size_t a = base.a_dim(), v = base.v_dim(), b = kernel.a_dim();
  const LieAlgebra& la = base.lie;
  const LieAlgebra& lb = kernel.lie;
  const Matrix& s = kernel.t;
  auto nu = [&](const Vector& x) { return kernel.rep.action_of(x); };
  auto x_ = [&](std::size_t i) { return unit(f, a, i); };
  auto v_ = [&](std::size_t j) { return unit(f, v, j); };
  ValidationReport r;

  for (std::size_t i = 0; i < a; ++i) {
    if (!c.omega.at(i, i).is_zero()) r.add("L1", {i, i});
    for (std::size_t j = i + 1; j < a; ++j)
      if (!(c.omega.at(i, j) + c.omega.at(j, i)).is_zero()) r.add("L1", {i, j});
  }
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = i + 1; j < a; ++j) {
      const Matrix lhs = commutator(c.rho_b[i], c.rho_b[j]) - c.rho_b_of(la.ad[i].col(j));
      if (lhs != lb.ad_of(c.omega.at(i, j))) r.add("L2", {i, j});
    }
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = i + 1; j < a; ++j)
      for (std::size_t k = j + 1; k < a; ++k) {
        const Vector lhs = c.rho_b[i] * c.omega.at(j, k) + c.rho_b[j] * c.omega.at(k, i) + c.rho_b[k] * c.omega.at(i, j);
        const Vector rhs = c.omega(la.bracket(x_(i), x_(j)), x_(k)) + c.omega(la.bracket(x_(j), x_(k)), x_(i)) +
                           c.omega(la.bracket(x_(k), x_(i)), x_(j));
        if (lhs != rhs) r.add("L3", {i, j, k});
      }
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = i + 1; j < a; ++j)
      for (std::size_t q = 0; q < v; ++q) {
        const Vector lhs = c.varpi(x_(i), base.rep.action[j] * v_(q)) - c.varpi(x_(j), base.rep.action[i] * v_(q)) -
                           c.varpi(la.bracket(x_(i), x_(j)), v_(q));
        const Vector rhs = c.rho_m[j] * c.varpi.at(i, q) - c.rho_m[i] * c.varpi.at(j, q) - c.mu[q] * c.omega.at(i, j);
        if (lhs != rhs) r.add("L4", {i, j, q});
      }
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = i + 1; j < a; ++j) {
      const Matrix lhs = commutator(c.rho_m[i], c.rho_m[j]);
      if (lhs != c.rho_m_of(la.ad[i].col(j)) + nu(c.omega.at(i, j))) r.add("L5", {i, j});
    }
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t q = 0; q < v; ++q) {
      const Matrix lhs =
          c.rho_m[i] * c.mu[q] - c.mu_of(base.rep.action[i].col(q)) + nu_applied(kernel, c.varpi.at(i, q));
      if (lhs != c.mu[q] * c.rho_b[i]) r.add("L6", {i, q});
    }
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t k = 0; k < b; ++k) {
      const Matrix lhs = c.rho_m[i] * kernel.rep.action[k] - kernel.rep.action[k] * c.rho_m[i];
      if (lhs != nu(c.rho_b[i].col(k))) r.add("L7", {i, k});
    }
  for (std::size_t q = 0; q < v; ++q) {
    const Vector tv = base.t.col(q);
    const Vector chv = c.chi.col(q);
    const Matrix lhs = c.rho_b_of(tv) * s + lb.ad_of(chv) * s;
    const Matrix rhs = s * (c.rho_m_of(tv) + nu(chv) + c.mu[q] * s);
    if (lhs != rhs) r.add("L8", {q});
  }
  for (std::size_t p = 0; p < v; ++p)
    for (std::size_t q = p + 1; q < v; ++q) {
      const Vector t1 = base.t.col(p), t2 = base.t.col(q);
      const Vector c1 = c.chi.col(p), c2 = c.chi.col(q);
      const Vector lhs = c.rho_b_of(t1) * c2 - c.rho_b_of(t2) * c1 + lb.bracket(c1, c2) + c.omega(t1, t2);
      const Vector rhs = s * (c.varpi(t1, v_(q)) - c.varpi(t2, v_(p))) +
                         c.chi * (base.rep.action_of(t1) * v_(q) - base.rep.action_of(t2) * v_(p)) +
                         s * (c.mu[p] * c2 - c.mu[q] * c1);
      if (lhs != rhs) r.add("L9", {p, q});
    }
  // The twisted structure also needs rho_B(x) in Der(B) and each mu(v) to
  // intertwine the bracket of B with nu_M. Both are vacuous for abelian B.
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t k = 0; k < b; ++k)
      for (std::size_t l = k + 1; l < b; ++l) {
        const Vector bk = unit(f, b, k), bl = unit(f, b, l);
        const Vector lhs = c.rho_b[i] * lb.bracket(bk, bl);
        const Vector rhs = lb.bracket(c.rho_b[i] * bk, bl) + lb.bracket(bk, c.rho_b[i] * bl);
        if (lhs != rhs) r.add("rho_B-derivation", {i, k, l});
      }
  for (std::size_t q = 0; q < v; ++q)
    for (std::size_t k = 0; k < b; ++k)
      for (std::size_t l = k + 1; l < b; ++l) {
        const Vector bk = unit(f, b, k), bl = unit(f, b, l);
        const Vector lhs = c.mu[q] * lb.bracket(bk, bl);
        const Vector rhs = nu(bk) * (c.mu[q] * bl) - nu(bl) * (c.mu[q] * bk);
        if (lhs != rhs) r.add("mu-bracket", {q, k, l});
      }
  return r;
}

// ---------------------------------------------------------------- twisted algebra and extensions

RRBAlgebra twisted_algebra_unchecked(const RRBAlgebra& base, const RRBAlgebra& kernel, const NonAbelianCocycle& c) {
  check_cocycle_shape(base, kernel, c);
  const Field f = base.field();
  const std::size_t a = base.a_dim(), v = base.v_dim(), b = kernel.a_dim(), m = kernel.v_dim();
  RRBAlgebra out{LieAlgebra::abelian(f, a + b), Representation::trivial(f, a + b, v + m), Matrix(f, a + b, v + m)};

  for (std::size_t i = 0; i < a; ++i) {
    Matrix& ad = out.lie.ad[i];
    ad.set_block(0, 0, base.lie.ad[i]);
    for (std::size_t j = 0; j < a; ++j) ad.set_block(a, j, Matrix::from_columns(f, b, {c.omega.at(i, j)}));
    ad.set_block(a, a, c.rho_b[i]);

    Matrix& act = out.rep.action[i];
    act.set_block(0, 0, base.rep.action[i]);
    for (std::size_t q = 0; q < v; ++q) act.set_block(v, q, Matrix::from_columns(f, m, {c.varpi.at(i, q)}));
    act.set_block(v, v, c.rho_m[i]);
  }
  for (std::size_t k = 0; k < b; ++k) {
    Matrix& ad = out.lie.ad[a + k];
    for (std::size_t j = 0; j < a; ++j) ad.set_block(a, j, Matrix::from_columns(f, b, {-c.rho_b[j].col(k)}));
    ad.set_block(a, a, kernel.lie.ad[k]);

    Matrix& act = out.rep.action[a + k];
    for (std::size_t q = 0; q < v; ++q) act.set_block(v, q, Matrix::from_columns(f, m, {-c.mu[q].col(k)}));
    act.set_block(v, v, kernel.rep.action[k]);
  }
  out.t.set_block(0, 0, base.t);
  out.t.set_block(a, 0, c.chi);
  out.t.set_block(a, v, kernel.t);
  return out;
}

RRBAlgebra twisted_algebra(const RRBAlgebra& base, const RRBAlgebra& kernel, const NonAbelianCocycle& c) {
  const ValidationReport report = validate_nab_cocycle(base, kernel, c);
  if (!report.ok()) fail(ErrorKind::InvalidCocycle, report.summary());
  RRBAlgebra out = twisted_algebra_unchecked(base, kernel, c);
  const ValidationReport total = validate_rrb(out);
  if (!total.ok()) fail(ErrorKind::InvalidCocycle, "twisted algebra fails " + total.summary());
  return out;
}

std::pair<Extension, Section> canonical_extension(const RRBAlgebra& base, const RRBAlgebra& kernel,
                                                  const NonAbelianCocycle& c) {
  const Field f = base.field();
  const std::size_t a = base.a_dim(), v = base.v_dim(), b = kernel.a_dim(), m = kernel.v_dim();
  Extension e{base, kernel, twisted_algebra(base, kernel, c), {}, {}};
  e.inj.phi = Matrix::vstack(Matrix(f, a, b), Matrix::identity(f, b));
  e.inj.psi = Matrix::vstack(Matrix(f, v, m), Matrix::identity(f, m));
  e.proj.phi = Matrix::hstack(Matrix::identity(f, a), Matrix(f, a, b));
  e.proj.psi = Matrix::hstack(Matrix::identity(f, v), Matrix(f, v, m));
  Section s{Matrix::vstack(Matrix::identity(f, a), Matrix(f, b, a)),
            Matrix::vstack(Matrix::identity(f, v), Matrix(f, m, v))};
  return {std::move(e), std::move(s)};
}

ValidationReport validate_extension(const Extension& e) {
  ValidationReport r = validate_rrb(e.base);
  r.append(validate_rrb(e.kernel));
  r.append(validate_rrb(e.total));
  require(e.inj.phi.rows() == e.total.a_dim() && e.inj.phi.cols() == e.kernel.a_dim() &&
              e.inj.psi.rows() == e.total.v_dim() && e.inj.psi.cols() == e.kernel.v_dim() &&
              e.proj.phi.rows() == e.base.a_dim() && e.proj.phi.cols() == e.total.a_dim() &&
              e.proj.psi.rows() == e.base.v_dim() && e.proj.psi.cols() == e.total.v_dim(),
          ErrorKind::ShapeError, "extension maps have the wrong shape");
  for (const auto& viol : validate_hom(e.inj, e.kernel, e.total).report.violations) r.add("inj:" + viol.tag, viol.indices);
  for (const auto& viol : validate_hom(e.proj, e.total, e.base).report.violations) r.add("proj:" + viol.tag, viol.indices);
  if (rank(e.inj.phi) != e.kernel.a_dim() || rank(e.inj.psi) != e.kernel.v_dim()) r.add("inj-injective", {});
  if (rank(e.proj.phi) != e.base.a_dim() || rank(e.proj.psi) != e.base.v_dim()) r.add("proj-surjective", {});
  if (image(e.inj.phi) != kernel(e.proj.phi)) r.add("exactness", {0});
  if (image(e.inj.psi) != kernel(e.proj.psi)) r.add("exactness", {1});
  return r;
}

ValidationReport validate_section(const Extension& e, const Section& s) {
  ValidationReport r;
  if (s.s_alg.rows() != e.total.a_dim() || s.s_alg.cols() != e.base.a_dim() || s.s_mod.rows() != e.total.v_dim() ||
      s.s_mod.cols() != e.base.v_dim()) {
    fail(ErrorKind::ShapeError, "section has the wrong shape");
  }
  if (!(e.proj.phi * s.s_alg).is_identity()) r.add("section", {0});
  if (!(e.proj.psi * s.s_mod).is_identity()) r.add("section", {1});
  return r;
}

Section find_section(const Extension& e) {
  auto lift = [](const Matrix& p) {
    Matrix s(p.field(), p.cols(), p.rows());
    for (std::size_t i = 0; i < p.rows(); ++i) {
      const auto sol = solve(p, Vector::unit(p.field(), p.rows(), i));
      if (!sol) fail(ErrorKind::InvalidInput, "projection is not surjective");
      s.set_col(i, sol->particular);
    }
    return s;
  };
  return Section{lift(e.proj.phi), lift(e.proj.psi)};
}

KernelCoordinates kernel_coordinates(const Extension& e) {
  return KernelCoordinates{left_inverse(e.inj.phi), left_inverse(e.inj.psi)};
}

NonAbelianCocycle induced_cocycle(const Extension& e, const Section& s) {
  if (!validate_section(e, s).ok()) fail(ErrorKind::InvalidInput, "not a section of the projection");
  const Field f = e.base.field();
  const std::size_t a = e.base.a_dim(), v = e.base.v_dim();
  const auto [lb, lm] = kernel_coordinates(e);
  const LieAlgebra& hat = e.total.lie;
  const Representation& rho_hat = e.total.rep;
  NonAbelianCocycle c = NonAbelianCocycle::zero(e.base, e.kernel);

  for (std::size_t i = 0; i < a; ++i) {
    const Vector sx = s.s_alg.col(i);
    for (std::size_t j = 0; j < a; ++j) {
      c.omega.at(i, j) = lb * (hat.bracket(sx, s.s_alg.col(j)) - s.s_alg * e.base.lie.ad[i].col(j));
    }
    const Matrix rho_sx = rho_hat.action_of(sx);
    for (std::size_t q = 0; q < v; ++q) {
      c.varpi.at(i, q) = lm * (rho_sx * s.s_mod.col(q) - s.s_mod * e.base.rep.action[i].col(q));
    }
    c.rho_b[i] = lb * hat.ad_of(sx) * e.inj.phi;
    c.rho_m[i] = lm * rho_sx * e.inj.psi;
  }
  for (std::size_t q = 0; q < v; ++q) {
    const Vector sv = s.s_mod.col(q);
    c.chi.set_col(q, lb * (e.total.t * sv - s.s_alg * e.base.t.col(q)));
    Matrix mu(f, e.kernel.v_dim(), e.kernel.a_dim());
    for (std::size_t k = 0; k < e.kernel.a_dim(); ++k) {
      mu.set_col(k, -(lm * (rho_hat.action_of(e.inj.phi.col(k)) * sv)));
    }
    c.mu[q] = mu;
  }
  return c;
}

// ---------------------------------------------------------------- equivalence

std::vector<ResidualBlock> equivalence_residual(const RRBAlgebra& base, const RRBAlgebra& kernel,
                                                const NonAbelianCocycle& c1, const NonAbelianCocycle& c2,
                                                const EquivalenceWitness& w) {
  const Field f = base.field();
  const std::size_t a = base.a_dim(), v = base.v_dim();
  const Matrix& zeta = w.zeta;
  const Matrix& eta = w.eta;
  std::vector<ResidualBlock> out;
  auto x_ = [&](std::size_t i) { return unit(f, a, i); };

  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = i + 1; j < a; ++j) {
      const Vector zx = zeta.col(i), zy = zeta.col(j);
      const Vector rhs = c2.rho_b[i] * zy - c2.rho_b[j] * zx - zeta * base.lie.bracket(x_(i), x_(j)) +
                         kernel.lie.bracket(zx, zy);
      out.push_back({"E1", {i, j}, c1.omega.at(i, j) - c2.omega.at(i, j) - rhs});
    }
  for (std::size_t i = 0; i < a; ++i) {
    out.push_back({"E2", {i}, (c1.rho_b[i] - c2.rho_b[i] - kernel.lie.ad_of(zeta.col(i))).flatten()});
  }
  for (std::size_t i = 0; i < a; ++i) {
    out.push_back({"E3", {i}, (c1.rho_m[i] - c2.rho_m[i] - kernel.rep.action_of(zeta.col(i))).flatten()});
  }
  for (std::size_t q = 0; q < v; ++q) {
    out.push_back({"E4", {q}, (c1.mu[q] - c2.mu[q] + nu_applied(kernel, eta.col(q))).flatten()});
  }
  for (std::size_t q = 0; q < v; ++q) {
    const Vector rhs = kernel.t * eta.col(q) - zeta * base.t.col(q);
    out.push_back({"E5", {q}, c1.chi.col(q) - c2.chi.col(q) - rhs});
  }
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t q = 0; q < v; ++q) {
      const Vector ev = eta.col(q), zx = zeta.col(i);
      const Vector rhs = c2.rho_m[i] * ev + kernel.rep.action_of(zx) * ev - c2.mu[q] * zx -
                         eta * base.rep.action[i].col(q);
      out.push_back({"E6", {i, q}, c1.varpi.at(i, q) - c2.varpi.at(i, q) - rhs});
    }
  return out;
}

Vector flatten_witness(const EquivalenceWitness& w) { return w.zeta.flatten().concat(w.eta.flatten()); }

EquivalenceWitness unflatten_witness(const Vector& flat, std::size_t a, std::size_t b, std::size_t v, std::size_t m) {
  return EquivalenceWitness{Matrix::reshape(flat.slice(0, a * b), b, a), Matrix::reshape(flat.slice(a * b, v * m), m, v)};
}

namespace {

Vector flatten_blocks(Field f, const std::vector<ResidualBlock>& blocks) {
  Vector out(f, 0);
  for (const auto& blk : blocks) out = out.concat(blk.value);
  return out;
}

const ResidualBlock* first_nonzero(const std::vector<ResidualBlock>& blocks) {
  for (const auto& blk : blocks)
    if (!blk.value.is_zero()) return &blk;
  return nullptr;
}

}  // namespace

EquivalenceResult find_witness(Field field, std::size_t a, std::size_t b, std::size_t v, std::size_t m,
                               const ResidualFn& residual, bool affine, const SearchOptions& options) {
  Mode mode = options.mode;
  if (mode == Mode::Auto) {
    if (options.witness) {
      mode = Mode::Verify;
    } else if (affine) {
      mode = Mode::LinearAbelian;
    } else if (field.is_finite()) {
      mode = Mode::SearchFinite;
    } else {
      return EquivalenceResult{};
    }
  }
  const std::size_t n = a * b + v * m;

  switch (mode) {
    case Mode::Verify: {
      if (!options.witness) fail(ErrorKind::InvalidInput, "verify mode needs a witness");
      const auto& w = *options.witness;
      if (w.zeta.rows() != b || w.zeta.cols() != a || w.eta.rows() != m || w.eta.cols() != v) {
        fail(ErrorKind::ShapeError, "witness has the wrong shape");
      }
      const auto blocks = residual(w);
      if (const auto* bad = first_nonzero(blocks)) {
        return EquivalenceResult{Verdict::Unknown, std::nullopt, Violation{bad->tag, bad->indices, {}}};
      }
      return EquivalenceResult{Verdict::Yes, w, std::nullopt};
    }
    case Mode::SearchFinite: {
      if (!field.is_finite()) fail(ErrorKind::ModeUnsupported, "exhaustive search needs a finite field");
      const std::uint64_t count = count_vectors(field, n, options.bound);
      if (count > options.bound) {
        fail(ErrorKind::BoundExceeded, "witness space exceeds the search bound " + std::to_string(options.bound));
      }
      std::optional<EquivalenceWitness> found;
      for_each_vector(field, n, [&](const Vector& flat) {
        EquivalenceWitness w = unflatten_witness(flat, a, b, v, m);
        if (first_nonzero(residual(w)) == nullptr) {
          found = std::move(w);
          return false;
        }
        return true;
      });
      if (found) return EquivalenceResult{Verdict::Yes, found, std::nullopt};
      return EquivalenceResult{Verdict::No, std::nullopt, std::nullopt};
    }
    case Mode::LinearAbelian: {
      if (!affine) fail(ErrorKind::ModeUnsupported, "linear mode needs an abelian kernel");
      const AffineMap map = linearize(field, n, [&](const Vector& flat) {
        return flatten_blocks(field, residual(unflatten_witness(flat, a, b, v, m)));
      });
      const auto sol = solve(map.linear, -map.offset);
      if (!sol) return EquivalenceResult{Verdict::No, std::nullopt, std::nullopt};
      EquivalenceWitness w = unflatten_witness(sol->particular, a, b, v, m);
      if (first_nonzero(residual(w)) != nullptr) throw std::logic_error("linear witness failed re-verification");
      return EquivalenceResult{Verdict::Yes, std::move(w), std::nullopt};
    }
    case Mode::Auto:
      break;
  }
  return EquivalenceResult{};
}

EquivalenceResult cocycles_equivalent(const RRBAlgebra& base, const RRBAlgebra& kernel, const NonAbelianCocycle& c1,
                                      const NonAbelianCocycle& c2, const SearchOptions& options) {
  check_cocycle_shape(base, kernel, c1);
  check_cocycle_shape(base, kernel, c2);
  const ResidualFn residual = [&](const EquivalenceWitness& w) {
    return equivalence_residual(base, kernel, c1, c2, w);
  };
  return find_witness(base.field(), base.a_dim(), kernel.a_dim(), base.v_dim(), kernel.v_dim(), residual,
                      is_abelian_kernel(kernel), options);
}

ExtensionEquivalence extensions_equivalent(const Extension& e1, const Extension& e2, const std::optional<RRBHom>& iso,
                                           const SearchOptions& options) {
  if (!(e1.base == e2.base) || !(e1.kernel == e2.kernel)) {
    fail(ErrorKind::InvalidInput, "extensions of different algebras cannot be compared");
  }
  auto commutes = [&](const RRBHom& h) {
    const HomValidation hv = validate_hom(h, e1.total, e2.total);
    return hv.report.ok() && inverse(h.phi).has_value() && inverse(h.psi).has_value() &&
           h.phi * e1.inj.phi == e2.inj.phi && h.psi * e1.inj.psi == e2.inj.psi &&
           e2.proj.phi * h.phi == e1.proj.phi && e2.proj.psi * h.psi == e1.proj.psi;
  };
  if (iso) {
    if (commutes(*iso)) return ExtensionEquivalence{Verdict::Yes, iso, std::nullopt};
    return ExtensionEquivalence{};
  }
  const Section s1 = find_section(e1);
  const Section s2 = find_section(e2);
  const NonAbelianCocycle c1 = induced_cocycle(e1, s1);
  const NonAbelianCocycle c2 = induced_cocycle(e2, s2);
  const EquivalenceResult res = cocycles_equivalent(e1.base, e1.kernel, c1, c2, options);
  if (res.verdict != Verdict::Yes) return ExtensionEquivalence{res.verdict, std::nullopt, std::nullopt};

  const EquivalenceWitness& w = *res.witness;
  RRBHom h{solve_columns(Matrix::hstack(s1.s_alg, e1.inj.phi),
                         Matrix::hstack(s2.s_alg + e2.inj.phi * w.zeta, e2.inj.phi)),
           solve_columns(Matrix::hstack(s1.s_mod, e1.inj.psi),
                         Matrix::hstack(s2.s_mod + e2.inj.psi * w.eta, e2.inj.psi))};
  if (!commutes(h)) throw std::logic_error("assembled extension isomorphism failed re-validation");
  return ExtensionEquivalence{Verdict::Yes, std::move(h), w};
}

// ---------------------------------------------------------------- abelian kernels

RRBAlgebra abelian_kernel(const RRBRepresentation& rep) {
  const Field f = rep.field();
  return RRBAlgebra{LieAlgebra::abelian(f, rep.b_dim), Representation::trivial(f, rep.b_dim, rep.m_dim), rep.s};
}

std::pair<RRBRepresentation, Cochain> abelian_reduction(const RRBAlgebra& base, const RRBAlgebra& kernel,
                                                        const NonAbelianCocycle& c) {
  if (!is_abelian_kernel(kernel)) fail(ErrorKind::NotAbelian, "kernel has a nonzero bracket or action");
  check_cocycle_shape(base, kernel, c);
  RRBRepresentation rep{base, kernel.a_dim(), kernel.v_dim(), kernel.t, c.rho_b, c.rho_m, c.mu};
  Cochain cochain = cochain_from_parts(rep, c.omega, c.varpi, c.chi);
  return {std::move(rep), std::move(cochain)};
}

NonAbelianCocycle cocycle_from_cochain(const RRBRepresentation& rep, const Cochain& c) {
  Degree2Parts parts = degree2_parts(rep, c);
  return NonAbelianCocycle{std::move(parts.f_b), std::move(parts.f_m), std::move(parts.theta),
                           rep.mu,               rep.rho_b,           rep.rho_m};
}

}  // namespace rrbx
