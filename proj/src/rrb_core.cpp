#include "rrbx/rrb_core.hpp"

#include <algorithm>

namespace rrbx {

namespace {

Vector e(Field f, std::size_t n, std::size_t i) { return Vector::unit(f, n, i); }

void require_shape(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::ShapeError, what);
}

void check_square_family(const std::vector<Matrix>& mats, std::size_t count, std::size_t n, Field f,
                         const std::string& name) {
  require_shape(mats.size() == count, name + ": expected " + std::to_string(count) + " matrices");
  for (const auto& m : mats) {
    require_shape(m.rows() == n && m.cols() == n, name + ": expected " + std::to_string(n) + "x" + std::to_string(n));
    if (m.field() != f) fail(ErrorKind::FieldMismatch, name);
  }
}

void check_matrix(const Matrix& m, std::size_t rows, std::size_t cols, Field f, const std::string& name) {
  require_shape(m.rows() == rows && m.cols() == cols,
                name + ": expected " + std::to_string(rows) + "x" + std::to_string(cols));
  if (m.field() != f) fail(ErrorKind::FieldMismatch, name);
}

void check_lie_shape(const LieAlgebra& l) { check_square_family(l.ad, l.dim, l.dim, l.field, "bracket"); }

void check_rrb_shape(const RRBAlgebra& r) {
  check_lie_shape(r.lie);
  if (r.rep.field != r.lie.field) fail(ErrorKind::FieldMismatch, "representation field");
  check_square_family(r.rep.action, r.a_dim(), r.v_dim(), r.field(), "action");
  check_matrix(r.t, r.a_dim(), r.v_dim(), r.field(), "T");
}

bool rb_holds(const RRBAlgebra& r, const Matrix& t, std::size_t u, std::size_t v) {
  const Vector tu = t.col(u);
  const Vector tv = t.col(v);
  const Vector lhs = r.lie.bracket(tu, tv);
  const Vector rhs = t * (r.rep.action_of(tu) * e(r.field(), r.v_dim(), v) -
                          r.rep.action_of(tv) * e(r.field(), r.v_dim(), u));
  return lhs == rhs;
}

}  // namespace

void ValidationReport::add(std::string tag, std::vector<std::size_t> indices, std::string detail) {
  violations.push_back(Violation{std::move(tag), std::move(indices), std::move(detail)});
}

void ValidationReport::append(const ValidationReport& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  const Violation& v = violations.front();
  std::string out = v.tag + " at (";
  for (std::size_t i = 0; i < v.indices.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v.indices[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------- value types

LieAlgebra LieAlgebra::abelian(Field field, std::size_t dim) {
  return LieAlgebra{field, dim, std::vector<Matrix>(dim, Matrix(field, dim, dim))};
}

LieAlgebra LieAlgebra::from_brackets(Field field, std::size_t dim,
                                     const std::function<Vector(std::size_t, std::size_t)>& c) {
  LieAlgebra l = abelian(field, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) l.ad[i].set_col(j, c(i, j));
  return l;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const { return ad_of(x) * y; }

Matrix LieAlgebra::ad_of(const Vector& x) const { return combine(x, ad, Matrix(field, dim, dim)); }

bool LieAlgebra::is_abelian() const {
  return std::all_of(ad.begin(), ad.end(), [](const Matrix& m) { return m.is_zero(); });
}

Representation Representation::trivial(Field field, std::size_t algebra_dim, std::size_t dim) {
  return Representation{field, dim, std::vector<Matrix>(algebra_dim, Matrix(field, dim, dim))};
}

Matrix Representation::action_of(const Vector& x) const { return combine(x, action, Matrix(field, dim, dim)); }

bool Representation::is_trivial() const {
  return std::all_of(action.begin(), action.end(), [](const Matrix& m) { return m.is_zero(); });
}

RRBRepresentation RRBRepresentation::zero(const RRBAlgebra& base, std::size_t b_dim, std::size_t m_dim) {
  const Field f = base.field();
  return RRBRepresentation{base,
                           b_dim,
                           m_dim,
                           Matrix(f, b_dim, m_dim),
                           std::vector<Matrix>(base.a_dim(), Matrix(f, b_dim, b_dim)),
                           std::vector<Matrix>(base.a_dim(), Matrix(f, m_dim, m_dim)),
                           std::vector<Matrix>(base.v_dim(), Matrix(f, m_dim, b_dim))};
}

Matrix RRBRepresentation::rho_b_of(const Vector& x) const { return combine(x, rho_b, Matrix(field(), b_dim, b_dim)); }
Matrix RRBRepresentation::rho_m_of(const Vector& x) const { return combine(x, rho_m, Matrix(field(), m_dim, m_dim)); }
Matrix RRBRepresentation::mu_of(const Vector& v) const { return combine(v, mu, Matrix(field(), m_dim, b_dim)); }

RRBHom RRBHom::identity(const RRBAlgebra& r) {
  return RRBHom{Matrix::identity(r.field(), r.a_dim()), Matrix::identity(r.field(), r.v_dim())};
}

RRBHom RRBHom::compose(const RRBHom& inner) const { return RRBHom{phi * inner.phi, psi * inner.psi}; }

DerivationPair DerivationPair::zero(const RRBAlgebra& r) {
  return DerivationPair{Matrix(r.field(), r.a_dim(), r.a_dim()), Matrix(r.field(), r.v_dim(), r.v_dim())};
}

// ---------------------------------------------------------------- validation

ValidationReport validate_lie(const LieAlgebra& l) {
  check_lie_shape(l);
  ValidationReport report;
  const std::size_t n = l.dim;
  // [x, x] = 0 is checked on the diagonal as well, which matters in characteristic 2.
  for (std::size_t i = 0; i < n; ++i) {
    if (!l.ad[i].col(i).is_zero()) report.add("antisymmetry", {i, i});
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(l.ad[i].col(j) + l.ad[j].col(i)).is_zero()) report.add("antisymmetry", {i, j});
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector ei = e(l.field, n, i), ej = e(l.field, n, j), ek = e(l.field, n, k);
        const Vector sum = l.bracket(ei, l.bracket(ej, ek)) + l.bracket(ej, l.bracket(ek, ei)) +
                           l.bracket(ek, l.bracket(ei, ej));
        if (!sum.is_zero()) report.add("Jacobi", {i, j, k});
      }
  return report;
}

ValidationReport validate_representation(const LieAlgebra& l, const Representation& rep) {
  check_lie_shape(l);
  check_square_family(rep.action, l.dim, rep.dim, l.field, "action");
  ValidationReport report;
  for (std::size_t i = 0; i < l.dim; ++i)
    for (std::size_t j = i + 1; j < l.dim; ++j) {
      const Matrix lhs = rep.action_of(l.ad[i].col(j));
      if (lhs != commutator(rep.action[i], rep.action[j])) report.add("representation", {i, j});
    }
  return report;
}

ValidationReport validate_rrb(const RRBAlgebra& r) {
  check_rrb_shape(r);
  ValidationReport report = validate_lie(r.lie);
  report.append(validate_representation(r.lie, r.rep));
  for (std::size_t u = 0; u < r.v_dim(); ++u)
    for (std::size_t v = u + 1; v < r.v_dim(); ++v)
      if (!rb_holds(r, r.t, u, v)) report.add("RB", {u, v});
  return report;
}

ValidationReport validate_rrb_representation(const RRBRepresentation& rep) {
  const RRBAlgebra& a = rep.base;
  const Field f = a.field();
  check_rrb_shape(a);
  check_matrix(rep.s, rep.b_dim, rep.m_dim, f, "S");
  check_square_family(rep.rho_b, a.a_dim(), rep.b_dim, f, "rho_B");
  check_square_family(rep.rho_m, a.a_dim(), rep.m_dim, f, "rho_M");
  require_shape(rep.mu.size() == a.v_dim(), "mu: expected one matrix per basis vector of V");
  for (const auto& m : rep.mu) check_matrix(m, rep.m_dim, rep.b_dim, f, "mu");

  ValidationReport report = validate_rrb(a);
  for (const auto& v : validate_representation(a.lie, Representation{f, rep.b_dim, rep.rho_b}).violations)
    report.add("rho_B", v.indices);
  for (const auto& v : validate_representation(a.lie, Representation{f, rep.m_dim, rep.rho_m}).violations)
    report.add("rho_M", v.indices);
  for (std::size_t i = 0; i < a.a_dim(); ++i)
    for (std::size_t j = 0; j < a.v_dim(); ++j) {
      const Matrix lhs = rep.mu_of(a.rep.action[i].col(j));
      const Matrix rhs = rep.rho_m[i] * rep.mu[j] - rep.mu[j] * rep.rho_b[i];
      if (lhs != rhs) report.add("Re1", {i, j});
    }
  for (std::size_t j = 0; j < a.v_dim(); ++j) {
    const Vector tv = a.t.col(j);
    const Matrix lhs = rep.rho_b_of(tv) * rep.s;
    const Matrix rhs = rep.s * rep.rho_m_of(tv) + rep.s * rep.mu[j] * rep.s;
    if (lhs != rhs) report.add("Re2", {j});
  }
  return report;
}

// ---------------------------------------------------------------- constructions

RRBAlgebra semidirect_product(const RRBAlgebra& a, const RRBRepresentation& rep) {
  if (!validate_rrb(a).ok() || !validate_rrb_representation(rep).ok() || !(rep.base == a)) {
    fail(ErrorKind::InvalidInput, "semidirect_product needs a valid algebra and representation over it");
  }
  const Field f = a.field();
  const std::size_t na = a.a_dim(), nb = rep.b_dim, nv = a.v_dim(), nm = rep.m_dim;
  const std::size_t n = na + nb, w = nv + nm;

  RRBAlgebra out{LieAlgebra::abelian(f, n), Representation::trivial(f, n, w), Matrix(f, n, w)};
  for (std::size_t i = 0; i < na; ++i) {
    out.lie.ad[i].set_block(0, 0, a.lie.ad[i]);
    out.lie.ad[i].set_block(na, na, rep.rho_b[i]);
    out.rep.action[i].set_block(0, 0, a.rep.action[i]);
    out.rep.action[i].set_block(nv, nv, rep.rho_m[i]);
  }
  for (std::size_t k = 0; k < nb; ++k) {
    Matrix& adk = out.lie.ad[na + k];
    for (std::size_t j = 0; j < na; ++j) {
      const Vector col = -rep.rho_b[j].col(k);
      for (std::size_t r = 0; r < nb; ++r) adk(na + r, j) = col[r];
    }
    Matrix& act = out.rep.action[na + k];
    for (std::size_t j = 0; j < nv; ++j) {
      const Vector col = -rep.mu[j].col(k);
      for (std::size_t r = 0; r < nm; ++r) act(nv + r, j) = col[r];
    }
  }
  out.t.set_block(0, 0, a.t);
  out.t.set_block(na, nv, rep.s);
  return out;
}

HomValidation validate_hom(const RRBHom& h, const RRBAlgebra& src, const RRBAlgebra& dst) {
  check_rrb_shape(src);
  check_rrb_shape(dst);
  check_matrix(h.phi, dst.a_dim(), src.a_dim(), src.field(), "phi");
  check_matrix(h.psi, dst.v_dim(), src.v_dim(), src.field(), "psi");
  HomValidation out;
  for (std::size_t i = 0; i < src.a_dim(); ++i)
    for (std::size_t j = i + 1; j < src.a_dim(); ++j) {
      const Vector lhs = h.phi * src.lie.ad[i].col(j);
      const Vector rhs = dst.lie.bracket(h.phi.col(i), h.phi.col(j));
      if (lhs != rhs) out.report.add("Lie-hom", {i, j});
    }
  for (std::size_t j = 0; j < src.v_dim(); ++j) {
    if (dst.t * h.psi.col(j) != h.phi * src.t.col(j)) out.report.add("Irp1", {j});
  }
  for (std::size_t i = 0; i < src.a_dim(); ++i)
    for (std::size_t j = 0; j < src.v_dim(); ++j) {
      const Vector lhs = h.psi * src.rep.action[i].col(j);
      const Vector rhs = dst.rep.action_of(h.phi.col(i)) * h.psi.col(j);
      if (lhs != rhs) out.report.add("Irp2", {i, j});
    }
  out.is_automorphism = out.report.ok() && src == dst && inverse(h.phi).has_value() && inverse(h.psi).has_value();
  return out;
}

ValidationReport validate_derivation(const RRBAlgebra& a, const DerivationPair& d) {
  check_rrb_shape(a);
  check_matrix(d.d_a, a.a_dim(), a.a_dim(), a.field(), "d_A");
  check_matrix(d.d_v, a.v_dim(), a.v_dim(), a.field(), "d_V");
  ValidationReport report;
  for (std::size_t i = 0; i < a.a_dim(); ++i)
    for (std::size_t j = i + 1; j < a.a_dim(); ++j) {
      const Vector ei = e(a.field(), a.a_dim(), i), ej = e(a.field(), a.a_dim(), j);
      const Vector lhs = d.d_a * a.lie.bracket(ei, ej);
      const Vector rhs = a.lie.bracket(d.d_a.col(i), ej) + a.lie.bracket(ei, d.d_a.col(j));
      if (lhs != rhs) report.add("Der", {i, j});
    }
  for (std::size_t j = 0; j < a.v_dim(); ++j) {
    if (a.t * d.d_v.col(j) != d.d_a * a.t.col(j)) report.add("D1", {j});
  }
  for (std::size_t i = 0; i < a.a_dim(); ++i)
    for (std::size_t j = 0; j < a.v_dim(); ++j) {
      const Vector lhs = d.d_v * a.rep.action[i].col(j);
      const Vector rhs = a.rep.action[i] * d.d_v.col(j) + a.rep.action_of(d.d_a.col(i)).col(j);
      if (lhs != rhs) report.add("D2", {i, j});
    }
  return report;
}

DerivationPair derivation_bracket(const RRBAlgebra& a, const DerivationPair& d1, const DerivationPair& d2) {
  if (!validate_derivation(a, d1).ok() || !validate_derivation(a, d2).ok()) {
    fail(ErrorKind::InvalidInput, "derivation_bracket needs two derivations");
  }
  return DerivationPair{commutator(d1.d_a, d2.d_a), commutator(d1.d_v, d2.d_v)};
}

std::vector<Matrix> enumerate_rrb_operators(const LieAlgebra& a, const Representation& rep, Field field,
                                            std::size_t bound) {
  if (!field.is_finite()) fail(ErrorKind::ModeUnsupported, "operator enumeration needs a finite field");
  if (a.field != field) fail(ErrorKind::FieldMismatch, "algebra field differs from enumeration field");
  const std::size_t n = a.dim * rep.dim;
  if (n > bound) {
    fail(ErrorKind::BoundExceeded, "dim(A)*dim(V) = " + std::to_string(n) + " exceeds " + std::to_string(bound));
  }
  const RRBAlgebra probe{a, rep, Matrix(field, a.dim, rep.dim)};
  check_rrb_shape(probe);
  std::vector<Matrix> out;
  for_each_vector(field, n, [&](const Vector& flat) {
    const Matrix t = Matrix::reshape(flat, a.dim, rep.dim);
    bool ok = true;
    for (std::size_t u = 0; u < rep.dim && ok; ++u)
      for (std::size_t v = u + 1; v < rep.dim && ok; ++v) ok = rb_holds(probe, t, u, v);
    if (ok) out.push_back(t);
    return true;
  });
  return out;
}

}  // namespace rrbx
