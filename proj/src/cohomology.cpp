#include "rrbx/cohomology.hpp"

#include <algorithm>

namespace rrbx {

namespace {

std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    std::size_t i = k;
    while (i > 0 && t[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++t[i - 1];
    for (std::size_t j = i; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

std::map<std::vector<std::size_t>, std::size_t> rank_table(const std::vector<std::vector<std::size_t>>& tuples) {
  std::map<std::vector<std::size_t>, std::size_t> out;
  for (std::size_t i = 0; i < tuples.size(); ++i) out.emplace(tuples[i], i);
  return out;
}

/// Expands alternating arguments in the standard basis. `visit` receives the
/// sorted index tuple and the coefficient including the sorting sign; tuples
/// with a repeated index are dropped.
void expand_alternating(Field f, const std::vector<Vector>& args,
                        const std::function<void(const std::vector<std::size_t>&, const Scalar&)>& visit) {
  std::vector<std::size_t> idx(args.size());
  std::function<void(std::size_t, const Scalar&)> rec = [&](std::size_t pos, const Scalar& coef) {
    if (pos == args.size()) {
      std::vector<std::size_t> sorted = idx;
      bool negative = false;
      for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = 0; j + 1 < sorted.size() - i; ++j)
          if (sorted[j] > sorted[j + 1]) {
            std::swap(sorted[j], sorted[j + 1]);
            negative = !negative;
          }
      for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i] == sorted[i + 1]) return;
      visit(sorted, negative ? -coef : coef);
      return;
    }
    const Vector& a = args[pos];
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      idx[pos] = i;
      rec(pos + 1, coef * a[i]);
    }
  };
  rec(0, Scalar(f, 1));
}

std::vector<Vector> omit(const std::vector<Vector>& xs, std::size_t i) {
  std::vector<Vector> out;
  for (std::size_t k = 0; k < xs.size(); ++k)
    if (k != i) out.push_back(xs[k]);
  return out;
}

std::vector<Vector> omit_two_prepend(const std::vector<Vector>& xs, std::size_t i, std::size_t j, Vector head) {
  std::vector<Vector> out{std::move(head)};
  for (std::size_t k = 0; k < xs.size(); ++k)
    if (k != i && k != j) out.push_back(xs[k]);
  return out;
}

Scalar sign(Field f, std::size_t exponent) { return Scalar(f, exponent % 2 == 0 ? 1 : -1); }

std::vector<Vector> basis_args(Field f, std::size_t dim, const std::vector<std::size_t>& tuple) {
  std::vector<Vector> out;
  out.reserve(tuple.size());
  for (auto i : tuple) out.push_back(Vector::unit(f, dim, i));
  return out;
}

void check_degree(std::size_t n, std::size_t bound) {
  if (n < 1 || n > bound) {
    fail(ErrorKind::DegreeOutOfRange,
         "degree " + std::to_string(n) + " outside 1.." + std::to_string(bound));
  }
}

void check_cochain(const RRBRepresentation& ctx, const Cochain& c) {
  const CochainBasis basis(ctx, c.degree);
  if (c.coords.size() != basis.dim()) {
    fail(ErrorKind::ShapeError, "cochain of degree " + std::to_string(c.degree) + " needs " +
                                    std::to_string(basis.dim()) + " coordinates, got " +
                                    std::to_string(c.coords.size()));
  }
  if (c.coords.field() != ctx.field()) fail(ErrorKind::FieldMismatch, "cochain field");
}

void write_block(Vector& out, std::size_t offset, const Vector& value) {
  for (std::size_t k = 0; k < value.size(); ++k) out[offset + k] = value[k];
}

}  // namespace

// ---------------------------------------------------------------- basis

CochainBasis::CochainBasis(std::size_t a, std::size_t b, std::size_t v, std::size_t m, std::size_t degree)
    : a_(a), b_(b), v_(v), m_(m), degree_(degree) {
  if (degree < 1) fail(ErrorKind::DegreeOutOfRange, "cochain degree must be >= 1");
  a_tuples_ = increasing_tuples(a, degree);
  a_short_ = increasing_tuples(a, degree - 1);
  v_tuples_ = increasing_tuples(v, degree - 1);
  rank_a_ = rank_table(a_tuples_);
  rank_short_ = rank_table(a_short_);
  rank_v_ = rank_table(v_tuples_);
}

CochainBasis::CochainBasis(const RRBRepresentation& ctx, std::size_t degree)
    : CochainBasis(ctx.base.a_dim(), ctx.b_dim, ctx.base.v_dim(), ctx.m_dim, degree) {}

// ---------------------------------------------------------------- evaluation

CochainEvaluator::CochainEvaluator(const RRBRepresentation& ctx, const Cochain& c)
    : field_(ctx.field()), b_(ctx.b_dim), m_(ctx.m_dim), coords_(c.coords), basis_(ctx, c.degree) {
  check_cochain(ctx, c);
}

Vector CochainEvaluator::f_b(const std::vector<Vector>& xs) const {
  Vector out(field_, b_);
  expand_alternating(field_, xs, [&](const std::vector<std::size_t>& t, const Scalar& coef) {
    const std::size_t base = basis_.fb_index(basis_.rank_a(t), 0);
    for (std::size_t k = 0; k < b_; ++k) out[k] += coef * coords_[base + k];
  });
  return out;
}

Vector CochainEvaluator::f_m(const std::vector<Vector>& xs, const Vector& v) const {
  Vector out(field_, m_);
  expand_alternating(field_, xs, [&](const std::vector<std::size_t>& t, const Scalar& coef) {
    const std::size_t r = basis_.rank_a_short(t);
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j].is_zero()) continue;
      const Scalar c = coef * v[j];
      const std::size_t base = basis_.fm_index(r, j, 0);
      for (std::size_t k = 0; k < m_; ++k) out[k] += c * coords_[base + k];
    }
  });
  return out;
}

Vector CochainEvaluator::theta(const std::vector<Vector>& vs) const {
  Vector out(field_, b_);
  if (basis_.degree() < 2) return out;
  expand_alternating(field_, vs, [&](const std::vector<std::size_t>& t, const Scalar& coef) {
    const std::size_t base = basis_.theta_index(basis_.rank_v(t), 0);
    for (std::size_t k = 0; k < b_; ++k) out[k] += coef * coords_[base + k];
  });
  return out;
}

// ---------------------------------------------------------------- conversions

Cochain zero_cochain(const RRBRepresentation& ctx, std::size_t degree) {
  return Cochain{degree, Vector(ctx.field(), CochainBasis(ctx, degree).dim())};
}

Cochain cochain_from_maps(const RRBRepresentation& ctx, const Matrix& phi_b, const Matrix& phi_m) {
  const CochainBasis basis(ctx, 1);
  if (phi_b.rows() != ctx.b_dim || phi_b.cols() != ctx.base.a_dim() || phi_m.rows() != ctx.m_dim ||
      phi_m.cols() != ctx.base.v_dim()) {
    fail(ErrorKind::ShapeError, "degree-1 cochain maps have the wrong shape");
  }
  Cochain c = zero_cochain(ctx, 1);
  for (std::size_t i = 0; i < ctx.base.a_dim(); ++i) write_block(c.coords, basis.fb_index(i, 0), phi_b.col(i));
  for (std::size_t j = 0; j < ctx.base.v_dim(); ++j) write_block(c.coords, basis.fm_index(0, j, 0), phi_m.col(j));
  return c;
}

Degree1Maps degree1_maps(const RRBRepresentation& ctx, const Cochain& c) {
  if (c.degree != 1) fail(ErrorKind::DegreeError, "expected a degree-1 cochain");
  check_cochain(ctx, c);
  const CochainBasis basis(ctx, 1);
  Degree1Maps out{Matrix(ctx.field(), ctx.b_dim, ctx.base.a_dim()), Matrix(ctx.field(), ctx.m_dim, ctx.base.v_dim())};
  for (std::size_t i = 0; i < ctx.base.a_dim(); ++i) out.phi_b.set_col(i, c.coords.slice(basis.fb_index(i, 0), ctx.b_dim));
  for (std::size_t j = 0; j < ctx.base.v_dim(); ++j)
    out.phi_m.set_col(j, c.coords.slice(basis.fm_index(0, j, 0), ctx.m_dim));
  return out;
}

Cochain cochain_from_parts(const RRBRepresentation& ctx, const BilinearMap& f_b, const BilinearMap& f_m,
                           const Matrix& theta) {
  const std::size_t a = ctx.base.a_dim(), v = ctx.base.v_dim();
  if (f_b.left_dim() != a || f_b.right_dim() != a || f_b.out_dim() != ctx.b_dim || f_m.left_dim() != a ||
      f_m.right_dim() != v || f_m.out_dim() != ctx.m_dim || theta.rows() != ctx.b_dim || theta.cols() != v) {
    fail(ErrorKind::ShapeError, "degree-2 cochain parts have the wrong shape");
  }
  const CochainBasis basis(ctx, 2);
  Cochain c = zero_cochain(ctx, 2);
  for (std::size_t r = 0; r < basis.a_tuples().size(); ++r) {
    const auto& t = basis.a_tuples()[r];
    write_block(c.coords, basis.fb_index(r, 0), f_b.at(t[0], t[1]));
  }
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < v; ++j) write_block(c.coords, basis.fm_index(i, j, 0), f_m.at(i, j));
  for (std::size_t j = 0; j < v; ++j) write_block(c.coords, basis.theta_index(j, 0), theta.col(j));
  return c;
}

Degree2Parts degree2_parts(const RRBRepresentation& ctx, const Cochain& c) {
  if (c.degree != 2) fail(ErrorKind::DegreeError, "expected a degree-2 cochain");
  const CochainEvaluator ev(ctx, c);
  const Field f = ctx.field();
  const std::size_t a = ctx.base.a_dim(), v = ctx.base.v_dim();
  Degree2Parts out{BilinearMap(f, a, a, ctx.b_dim), BilinearMap(f, a, v, ctx.m_dim), Matrix(f, ctx.b_dim, v)};
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < a; ++j) out.f_b.at(i, j) = ev.f_b({Vector::unit(f, a, i), Vector::unit(f, a, j)});
    for (std::size_t j = 0; j < v; ++j) out.f_m.at(i, j) = ev.f_m({Vector::unit(f, a, i)}, Vector::unit(f, v, j));
  }
  for (std::size_t j = 0; j < v; ++j) out.theta.set_col(j, ev.theta({Vector::unit(f, v, j)}));
  return out;
}

// ---------------------------------------------------------------- coboundary

Cochain coboundary(const RRBRepresentation& ctx, const Cochain& c, std::size_t degree_bound) {
  const std::size_t n = c.degree;
  check_degree(n, degree_bound);
  check_cochain(ctx, c);
  const RRBAlgebra& base = ctx.base;
  const Field f = ctx.field();
  const std::size_t a = base.a_dim(), v = base.v_dim();
  const CochainEvaluator ev(ctx, c);
  const CochainBasis out_basis(ctx, n + 1);
  Cochain out{n + 1, Vector(f, out_basis.dim())};

  // (delta f)_B on (n+1)-tuples of A. Signs use 1-based positions.
  for (std::size_t r = 0; r < out_basis.a_tuples().size(); ++r) {
    const auto xs = basis_args(f, a, out_basis.a_tuples()[r]);
    Vector value(f, ctx.b_dim);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      value += sign(f, i) * (ctx.rho_b_of(xs[i]) * ev.f_b(omit(xs, i)));
    }
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        value += sign(f, i + j) * ev.f_b(omit_two_prepend(xs, i, j, base.lie.bracket(xs[i], xs[j])));
      }
    write_block(out.coords, out_basis.fb_index(r, 0), value);
  }

  // (delta f)_M on n-tuples of A and a vector of V.
  for (std::size_t r = 0; r < out_basis.a_short_tuples().size(); ++r) {
    const auto xs = basis_args(f, a, out_basis.a_short_tuples()[r]);
    for (std::size_t q = 0; q < v; ++q) {
      const Vector vq = Vector::unit(f, v, q);
      Vector value(f, ctx.m_dim);
      for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
          value += sign(f, i + j) * ev.f_m(omit_two_prepend(xs, i, j, base.lie.bracket(xs[i], xs[j])), vq);
        }
      value += sign(f, n) * (ctx.mu_of(vq) * ev.f_b(xs));
      for (std::size_t i = 0; i < xs.size(); ++i) {
        const auto rest = omit(xs, i);
        value += sign(f, i) * (ctx.rho_m_of(xs[i]) * ev.f_m(rest, vq) -
                               ev.f_m(rest, base.rep.action_of(xs[i]) * vq));
      }
      write_block(out.coords, out_basis.fm_index(r, q, 0), value);
    }
  }

  // (partial theta + h_T f) on n-tuples of V.
  for (std::size_t r = 0; r < out_basis.v_tuples().size(); ++r) {
    const auto vs = basis_args(f, v, out_basis.v_tuples()[r]);
    std::vector<Vector> tvs;
    for (const auto& x : vs) tvs.push_back(base.t * x);
    Vector value(f, ctx.b_dim);
    if (n >= 2) {
      for (std::size_t i = 0; i < vs.size(); ++i) {
        const Vector th = ev.theta(omit(vs, i));
        value += sign(f, i) * (ctx.rho_b_of(tvs[i]) * th - ctx.s * (ctx.mu_of(vs[i]) * th));
      }
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
          const Vector head = base.rep.action_of(tvs[i]) * vs[j] - base.rep.action_of(tvs[j]) * vs[i];
          value += sign(f, i + j) * ev.theta(omit_two_prepend(vs, i, j, head));
        }
    }
    value += sign(f, n) * ev.f_b(tvs);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      value += sign(f, i) * (ctx.s * ev.f_m(omit(tvs, i), vs[i]));
    }
    write_block(out.coords, out_basis.theta_index(r, 0), value);
  }
  return out;
}

Matrix coboundary_matrix(const RRBRepresentation& ctx, std::size_t n, std::size_t degree_bound) {
  check_degree(n, degree_bound);
  const CochainBasis in(ctx, n), out(ctx, n + 1);
  Matrix m(ctx.field(), out.dim(), in.dim());
  for (std::size_t k = 0; k < in.dim(); ++k) {
    m.set_col(k, coboundary(ctx, Cochain{n, Vector::unit(ctx.field(), in.dim(), k)}, degree_bound).coords);
  }
  return m;
}

Subspace cocycle_space(const RRBRepresentation& ctx, std::size_t n, std::size_t degree_bound) {
  return kernel(coboundary_matrix(ctx, n, degree_bound));
}

Subspace coboundary_space(const RRBRepresentation& ctx, std::size_t n, std::size_t degree_bound) {
  if (n < 2) fail(ErrorKind::DegreeOutOfRange, "coboundaries start in degree 2");
  check_degree(n, degree_bound);
  return image(coboundary_matrix(ctx, n - 1, degree_bound));
}

std::size_t cohomology_dim(const RRBRepresentation& ctx, std::size_t n, std::size_t degree_bound) {
  const Subspace z = cocycle_space(ctx, n, degree_bound);
  if (n == 1) return z.dim();
  return quotient_dim(z, coboundary_space(ctx, n, degree_bound));
}

bool is_cocycle(const RRBRepresentation& ctx, const Cochain& c) {
  return coboundary(ctx, c, std::max(c.degree, kDefaultDegreeBound)).coords.is_zero();
}

bool class_equal(const RRBRepresentation& ctx, const Cochain& c1, const Cochain& c2) {
  if (c1.degree != c2.degree || c1.degree < 2) {
    fail(ErrorKind::ShapeError, "class_equal needs two cochains of the same degree >= 2");
  }
  if (!is_cocycle(ctx, c1) || !is_cocycle(ctx, c2)) fail(ErrorKind::NotACocycle, "class_equal on a non-cocycle");
  return coset_member(c1.coords - c2.coords, coboundary_space(ctx, c1.degree, std::max(c1.degree, kDefaultDegreeBound)));
}

}  // namespace rrbx
