#include "rrbx/exactlin.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace rrbx {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1U;
  }
  return result;
}

std::uint64_t reduce_integer(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_ui();
}

void check_dims(bool ok, const char* what) {
  if (!ok) fail(ErrorKind::ShapeError, what);
}

void check_field(Field a, Field b) {
  if (a != b) fail(ErrorKind::FieldMismatch, a.name() + " vs " + b.name());
}

}  // namespace

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p) || p > (1U << 31U)) {
    fail(ErrorKind::InvalidInput, "not a prime <= 2^31: " + std::to_string(p));
  }
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return rationals();
  std::string_view digits;
  if (text.starts_with("F_")) {
    digits = text.substr(2);
  } else if (text.starts_with("GF(") && text.ends_with(")")) {
    digits = text.substr(3, text.size() - 4);
  } else if (text.starts_with("F")) {
    digits = text.substr(1);
  } else {
    fail(ErrorKind::ParseError, "unknown field '" + std::string(text) + "'");
  }
  std::uint32_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    fail(ErrorKind::ParseError, "unknown field '" + std::string(text) + "'");
  }
  return prime(p);
}

std::string Field::name() const { return is_rational() ? "Q" : "F_" + std::to_string(p_); }

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(Field field) : field_(field) {
  if (field.is_finite()) value_ = std::uint64_t{0};
}

Scalar::Scalar(Field field, long long value) : field_(field) {
  if (field.is_finite()) {
    const auto p = static_cast<long long>(field.characteristic());
    long long r = value % p;
    if (r < 0) r += p;
    value_ = static_cast<std::uint64_t>(r);
  } else {
    value_ = mpq_class(static_cast<long>(value));
  }
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field) {
  if (field.is_finite()) {
    const std::uint32_t p = field.characteristic();
    std::uint64_t den = reduce_integer(value.get_den(), p);
    if (den == 0) fail(ErrorKind::InvalidInput, "denominator divisible by " + std::to_string(p));
    std::uint64_t num = reduce_integer(value.get_num(), p);
    value_ = num * pow_mod(den, p - 2, p) % p;
  } else {
    mpq_class q = value;
    q.canonicalize();
    value_ = std::move(q);
  }
}

Scalar Scalar::parse(Field field, std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
    fail(ErrorKind::ParseError, "not a rational number: '" + s + "'");
  }
  q.canonicalize();
  return Scalar(field, q);
}

bool Scalar::is_zero() const {
  if (field_.is_finite()) return std::get<std::uint64_t>(value_) == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_finite()) return std::get<std::uint64_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorKind::InvalidInput, "division by zero");
  Scalar r(field_);
  if (field_.is_finite()) {
    const std::uint32_t p = field_.characteristic();
    r.value_ = pow_mod(std::get<std::uint64_t>(value_), p - 2, p);
  } else {
    r.value_ = mpq_class(1) / std::get<mpq_class>(value_);
  }
  return r;
}

std::string Scalar::str() const {
  if (field_.is_finite()) return std::to_string(std::get<std::uint64_t>(value_));
  return std::get<mpq_class>(value_).get_str();
}

std::uint64_t Scalar::residue() const {
  if (!field_.is_finite()) fail(ErrorKind::FieldMismatch, "residue() requires a finite field");
  return std::get<std::uint64_t>(value_);
}

const mpq_class& Scalar::rational() const {
  if (field_.is_finite()) fail(ErrorKind::FieldMismatch, "rational() requires Q");
  return std::get<mpq_class>(value_);
}

void Scalar::check_same(const Scalar& o) const { check_field(field_, o.field_); }

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (field_.is_finite()) {
    auto& v = std::get<std::uint64_t>(value_);
    v = (v + std::get<std::uint64_t>(o.value_)) % field_.characteristic();
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (field_.is_finite()) {
    const std::uint64_t p = field_.characteristic();
    auto& v = std::get<std::uint64_t>(value_);
    v = (v + p - std::get<std::uint64_t>(o.value_)) % p;
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (field_.is_finite()) {
    auto& v = std::get<std::uint64_t>(value_);
    v = v * std::get<std::uint64_t>(o.value_) % field_.characteristic();
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar r(field_);
  r -= *this;
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

// ---------------------------------------------------------------- Vector

Vector::Vector(Field field, std::size_t size) : field_(field), entries_(size, Scalar(field)) {}

Vector::Vector(Field field, std::vector<Scalar> entries) : field_(field), entries_(std::move(entries)) {
  for (const auto& e : entries_) check_field(field_, e.field());
}

Vector Vector::unit(Field field, std::size_t size, std::size_t index) {
  Vector v(field, size);
  v[index] = Scalar(field, 1);
  return v;
}

Vector Vector::from_ints(Field field, const std::vector<long long>& values) {
  Vector v(field, values.size());
  for (std::size_t i = 0; i < values.size(); ++i) v[i] = Scalar(field, values[i]);
  return v;
}

bool Vector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::string Vector::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ", ";
    out += entries_[i].str();
  }
  return out + ")";
}

Vector Vector::concat(const Vector& other) const {
  check_field(field_, other.field_);
  Vector r = *this;
  r.entries_.insert(r.entries_.end(), other.entries_.begin(), other.entries_.end());
  return r;
}

Vector Vector::slice(std::size_t offset, std::size_t length) const {
  check_dims(offset + length <= size(), "vector slice out of range");
  return Vector(field_, std::vector<Scalar>(entries_.begin() + static_cast<std::ptrdiff_t>(offset),
                                            entries_.begin() + static_cast<std::ptrdiff_t>(offset + length)));
}

void Vector::check_same(const Vector& o) const {
  check_field(field_, o.field_);
  check_dims(size() == o.size(), "vector length mismatch");
}

Vector& Vector::operator+=(const Vector& o) {
  check_same(o);
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  check_same(o);
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

Vector& Vector::operator*=(const Scalar& s) {
  check_field(field_, s.field());
  for (auto& e : entries_) e *= s;
  return *this;
}

Vector Vector::operator-() const {
  Vector r = *this;
  for (auto& e : r.entries_) e = -e;
  return r;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar(field)) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(field, 1);
  return m;
}

Matrix Matrix::from_ints(Field field, const std::vector<std::vector<long long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  Matrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    check_dims(rows[i].size() == c, "ragged matrix literal");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(field, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_columns(Field field, std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) m.set_col(j, columns[j]);
  return m;
}

Matrix Matrix::reshape(const Vector& flat, std::size_t rows, std::size_t cols) {
  check_dims(flat.size() == rows * cols, "reshape size mismatch");
  Matrix m(flat.field(), rows, cols);
  m.entries_ = flat.entries();
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_identity() const { return is_square() && *this == identity(field_, rows_); }

Vector Matrix::row(std::size_t i) const {
  Vector v(field_, cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

Vector Matrix::col(std::size_t j) const {
  Vector v(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_col(std::size_t j, const Vector& v) {
  check_field(field_, v.field());
  check_dims(v.size() == rows_ && j < cols_, "set_col shape mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

void Matrix::set_row(std::size_t i, const Vector& v) {
  check_field(field_, v.field());
  check_dims(v.size() == cols_ && i < rows_, "set_row shape mismatch");
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

Vector Matrix::flatten() const { return Vector(field_, entries_); }

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  check_dims(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
  Matrix b(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  check_field(field_, m.field_);
  check_dims(r0 + m.rows_ <= rows_ && c0 + m.cols_ <= cols_, "set_block out of range");
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

std::string Matrix::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out += ", ";
    out += "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += (*this)(i, j).str();
    }
    out += "]";
  }
  return out + "]";
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right) {
  check_field(left.field_, right.field_);
  check_dims(left.rows_ == right.rows_, "hstack row mismatch");
  Matrix m(left.field_, left.rows_, left.cols_ + right.cols_);
  m.set_block(0, 0, left);
  m.set_block(0, left.cols_, right);
  return m;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
  check_field(top.field_, bottom.field_);
  check_dims(top.cols_ == bottom.cols_, "vstack column mismatch");
  Matrix m(top.field_, top.rows_ + bottom.rows_, top.cols_);
  m.set_block(0, 0, top);
  m.set_block(top.rows_, 0, bottom);
  return m;
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b) {
  check_field(a.field_, b.field_);
  Matrix m(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  m.set_block(0, 0, a);
  m.set_block(a.rows_, a.cols_, b);
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  check_field(field_, o.field_);
  check_dims(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  check_field(field_, o.field_);
  check_dims(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  check_field(field_, s.field());
  for (auto& e : entries_) e *= s;
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& e : r.entries_) e = -e;
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  check_field(a.field_, b.field_);
  check_dims(a.cols_ == b.rows_, "matrix product shape mismatch");
  Matrix r(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
      }
    }
  }
  return r;
}

Vector operator*(const Matrix& a, const Vector& x) {
  check_field(a.field_, x.field());
  check_dims(a.cols_ == x.size(), "matrix-vector shape mismatch");
  Vector r(a.field_, a.rows_);
  for (std::size_t k = 0; k < a.cols_; ++k) {
    if (x[k].is_zero()) continue;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      if (!a(i, k).is_zero()) r[i] += a(i, k) * x[k];
    }
  }
  return r;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix combine(const Vector& coeffs, const std::vector<Matrix>& mats, const Matrix& zero) {
  check_dims(coeffs.size() == mats.size(), "combine length mismatch");
  Matrix r = zero;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (!coeffs[i].is_zero()) r += coeffs[i] * mats[i];
  }
  return r;
}

// ---------------------------------------------------------------- BilinearMap

BilinearMap::BilinearMap(Field field, std::size_t left, std::size_t right, std::size_t out)
    : field_(field), left_(left), right_(right), out_(out), values_(left * right, Vector(field, out)) {}

Vector BilinearMap::operator()(const Vector& x, const Vector& y) const {
  check_dims(x.size() == left_ && y.size() == right_, "bilinear argument size mismatch");
  Vector r(field_, out_);
  for (std::size_t i = 0; i < left_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < right_; ++j) {
      if (y[j].is_zero()) continue;
      r += (x[i] * y[j]) * at(i, j);
    }
  }
  return r;
}

bool BilinearMap::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Vector& v) { return v.is_zero(); });
}

BilinearMap& BilinearMap::operator-=(const BilinearMap& o) {
  check_dims(left_ == o.left_ && right_ == o.right_ && out_ == o.out_, "bilinear shape mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

// ---------------------------------------------------------------- echelon forms

RrefResult rref(const Matrix& m) {
  const Field f = m.field();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) check_field(f, m(i, j).field());

  RrefResult out{m, {}, 0};
  Matrix& r = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < r.rows() && r(pivot, col).is_zero()) ++pivot;
    if (pivot == r.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(pivot, j), r(row, j));
    }
    const Scalar inv = r(row, col).inverse();
    for (std::size_t j = col; j < r.cols(); ++j) r(row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col).is_zero()) continue;
      const Scalar factor = r(i, col);
      for (std::size_t j = col; j < r.cols(); ++j) {
        if (!r(row, j).is_zero()) r(i, j) -= factor * r(row, j);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = out.pivots.size();
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Subspace kernel(const Matrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> gens;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.field(), m.cols());
    v[free] = Scalar(m.field(), 1);
    for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.reduced(k, free);
    gens.push_back(std::move(v));
  }
  return Subspace::span(m.field(), m.cols(), gens);
}

Subspace image(const Matrix& m) {
  std::vector<Vector> gens;
  gens.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) gens.push_back(m.col(j));
  return Subspace::span(m.field(), m.rows(), gens);
}

std::optional<Solution> solve(const Matrix& a, const Vector& b) {
  check_field(a.field(), b.field());
  check_dims(a.rows() == b.size(), "solve: rows != rhs length");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  aug.set_col(a.cols(), b);
  const RrefResult r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.field(), a.cols());
  for (std::size_t k = 0; k < r.pivots.size(); ++k) x[r.pivots[k]] = r.reduced(k, a.cols());
  return Solution{std::move(x), kernel(a)};
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(Field field, std::size_t ambient_dim) : field_(field), ambient_(ambient_dim) {}

Subspace Subspace::span(Field field, std::size_t ambient_dim, const std::vector<Vector>& generators) {
  Subspace s(field, ambient_dim);
  if (generators.empty()) return s;
  Matrix m(field, generators.size(), ambient_dim);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    check_dims(generators[i].size() == ambient_dim, "span generator length mismatch");
    m.set_row(i, generators[i]);
  }
  const RrefResult r = rref(m);
  for (std::size_t k = 0; k < r.rank; ++k) s.basis_.push_back(r.reduced.row(k));
  s.pivots_ = r.pivots;
  return s;
}

Subspace Subspace::full(Field field, std::size_t ambient_dim) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < ambient_dim; ++i) gens.push_back(Vector::unit(field, ambient_dim, i));
  return span(field, ambient_dim, gens);
}

bool Subspace::contains(const Vector& v) const {
  check_field(field_, v.field());
  check_dims(v.size() == ambient_, "subspace membership: dimension mismatch");
  // Reduce v against the echelon basis; v is a member iff the remainder vanishes.
  Vector rem = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Scalar c = rem[pivots_[k]];
    if (!c.is_zero()) rem -= c * basis_[k];
  }
  return rem.is_zero();
}

bool Subspace::contains(const Subspace& other) const {
  check_dims(other.ambient_ == ambient_, "subspace containment: dimension mismatch");
  return std::all_of(other.basis_.begin(), other.basis_.end(), [this](const Vector& v) { return contains(v); });
}

Vector Subspace::element(const Vector& coeffs) const {
  check_dims(coeffs.size() == basis_.size(), "subspace element: coefficient count mismatch");
  Vector v(field_, ambient_);
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (!coeffs[k].is_zero()) v += coeffs[k] * basis_[k];
  }
  return v;
}

bool coset_member(const Vector& v, const Subspace& s) { return s.contains(v); }

std::size_t quotient_dim(const Subspace& big, const Subspace& small) {
  if (!big.contains(small)) fail(ErrorKind::NotASubspace, "quotient_dim: small is not contained in big");
  return big.dim() - small.dim();
}

// ---------------------------------------------------------------- inverses

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  const RrefResult r = rref(Matrix::hstack(m, Matrix::identity(m.field(), n)));
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
  return r.reduced.block(0, n, n, n);
}

Matrix left_inverse(const Matrix& m) {
  const RrefResult r = rref(m.transpose());
  if (r.rank != m.cols()) fail(ErrorKind::ShapeError, "left_inverse: matrix is not injective");
  // Rows of m at the pivot positions form an invertible square block.
  Matrix square(m.field(), m.cols(), m.cols());
  for (std::size_t k = 0; k < r.pivots.size(); ++k) square.set_row(k, m.row(r.pivots[k]));
  const Matrix inv = *inverse(square);
  Matrix left(m.field(), m.cols(), m.rows());
  for (std::size_t k = 0; k < r.pivots.size(); ++k) {
    for (std::size_t i = 0; i < m.cols(); ++i) left(i, r.pivots[k]) = inv(i, k);
  }
  return left;
}

AffineMap linearize(Field field, std::size_t n, const std::function<Vector(const Vector&)>& fn) {
  Vector offset = fn(Vector(field, n));
  Matrix linear(field, offset.size(), n);
  for (std::size_t k = 0; k < n; ++k) linear.set_col(k, fn(Vector::unit(field, n, k)) - offset);
  return AffineMap{std::move(linear), std::move(offset)};
}

// ---------------------------------------------------------------- enumeration

std::uint64_t count_vectors(Field field, std::size_t n, std::uint64_t cap) {
  if (!field.is_finite()) fail(ErrorKind::ModeUnsupported, "enumeration requires a finite field");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= field.characteristic();
    if (total > cap) return cap + 1;
  }
  return total;
}

bool for_each_vector(Field field, std::size_t n, const std::function<bool(const Vector&)>& visit) {
  if (!field.is_finite()) fail(ErrorKind::ModeUnsupported, "enumeration requires a finite field");
  const std::uint64_t p = field.characteristic();
  std::vector<std::uint64_t> digits(n, 0);
  Vector v(field, n);
  while (true) {
    if (!visit(v)) return false;
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < p) {
        v[pos] = Scalar(field, static_cast<long long>(digits[pos]));
        break;
      }
      digits[pos] = 0;
      v[pos] = Scalar(field);
      if (pos == 0) return true;
    }
    if (n == 0) return true;
  }
}

bool for_each_element(const Subspace& s, const std::function<bool(const Vector&)>& visit) {
  return for_each_vector(s.field(), s.dim(), [&](const Vector& c) { return visit(s.element(c)); });
}

}  // namespace rrbx
