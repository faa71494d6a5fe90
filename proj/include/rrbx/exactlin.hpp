#pragma once

// Exact scalar fields (Q and F_p) and dense linear algebra over them.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "rrbx/error.hpp"

namespace rrbx {

/// Ground field tag: the rationals, or F_p for a prime p <= 2^31.
class Field {
 public:
  constexpr Field() = default;

  static Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);
  /// Accepts "Q" or "F_p" (also "Fp", "GF(p)").
  static Field parse(std::string_view text);

  [[nodiscard]] bool is_rational() const noexcept { return p_ == 0; }
  [[nodiscard]] bool is_finite() const noexcept { return p_ != 0; }
  [[nodiscard]] std::uint32_t characteristic() const noexcept { return p_; }
  [[nodiscard]] std::string name() const;

  friend bool operator==(Field, Field) = default;

 private:
  explicit constexpr Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(Field field);
  Scalar(Field field, long long value);
  Scalar(Field field, const mpq_class& value);

  /// Parses "n", "-n" or "p/q".
  static Scalar parse(Field field, std::string_view text);

  [[nodiscard]] Field field() const noexcept { return field_; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_one() const;
  [[nodiscard]] Scalar inverse() const;
  /// Canonical text: "0", "-3", "2/5"; F_p values as residues in [0, p).
  [[nodiscard]] std::string str() const;
  /// Integer index used by finite enumerations (F_p only).
  [[nodiscard]] std::uint64_t residue() const;
  [[nodiscard]] const mpq_class& rational() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void check_same(const Scalar& o) const;

  Field field_;
  std::variant<std::uint64_t, mpq_class> value_{mpq_class(0)};
};

class Vector {
 public:
  Vector() = default;
  Vector(Field field, std::size_t size);
  Vector(Field field, std::vector<Scalar> entries);
  static Vector unit(Field field, std::size_t size, std::size_t index);
  static Vector from_ints(Field field, const std::vector<long long>& values);

  [[nodiscard]] Field field() const noexcept { return field_; }
  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::string str() const;

  Scalar& operator[](std::size_t i) { return entries_[i]; }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  [[nodiscard]] const std::vector<Scalar>& entries() const noexcept { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Concatenation (this, other).
  [[nodiscard]] Vector concat(const Vector& other) const;
  [[nodiscard]] Vector slice(std::size_t offset, std::size_t length) const;

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Scalar& s);
  Vector operator-() const;
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Scalar& s, Vector v) { return v *= s; }
  friend bool operator==(const Vector& a, const Vector& b) = default;

 private:
  void check_same(const Vector& o) const;

  Field field_;
  std::vector<Scalar> entries_;
};

/// Dense row-major matrix. A matrix of a linear map X -> Y has dim(Y) rows and
/// dim(X) columns and acts on column vectors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);
  static Matrix identity(Field field, std::size_t n);
  static Matrix from_ints(Field field, const std::vector<std::vector<long long>>& rows);
  /// Columns given as vectors of length `rows`.
  static Matrix from_columns(Field field, std::size_t rows, const std::vector<Vector>& columns);
  /// Row-major reshape of a flat coordinate vector.
  static Matrix reshape(const Vector& flat, std::size_t rows, std::size_t cols);

  [[nodiscard]] Field field() const noexcept { return field_; }
  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_identity() const;

  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  [[nodiscard]] Vector row(std::size_t i) const;
  [[nodiscard]] Vector col(std::size_t j) const;
  void set_col(std::size_t j, const Vector& v);
  void set_row(std::size_t i, const Vector& v);
  /// Row-major flattening.
  [[nodiscard]] Vector flatten() const;
  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  [[nodiscard]] std::string str() const;

  static Matrix hstack(const Matrix& left, const Matrix& right);
  static Matrix vstack(const Matrix& top, const Matrix& bottom);
  static Matrix block_diag(const Matrix& a, const Matrix& b);

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  Matrix operator-() const;
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Scalar& s, Matrix m) { return m *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& x);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

[[nodiscard]] Matrix commutator(const Matrix& a, const Matrix& b);
/// Linear combination sum_i coeffs[i] * mats[i]; `zero` fixes the shape when empty.
[[nodiscard]] Matrix combine(const Vector& coeffs, const std::vector<Matrix>& mats, const Matrix& zero);

/// Bilinear map X x Y -> Z stored by its values on basis pairs.
class BilinearMap {
 public:
  BilinearMap() = default;
  BilinearMap(Field field, std::size_t left, std::size_t right, std::size_t out);

  [[nodiscard]] Field field() const noexcept { return field_; }
  [[nodiscard]] std::size_t left_dim() const noexcept { return left_; }
  [[nodiscard]] std::size_t right_dim() const noexcept { return right_; }
  [[nodiscard]] std::size_t out_dim() const noexcept { return out_; }

  Vector& at(std::size_t i, std::size_t j) { return values_[i * right_ + j]; }
  const Vector& at(std::size_t i, std::size_t j) const { return values_[i * right_ + j]; }
  [[nodiscard]] Vector operator()(const Vector& x, const Vector& y) const;
  [[nodiscard]] bool is_zero() const;

  BilinearMap& operator-=(const BilinearMap& o);
  friend BilinearMap operator-(BilinearMap a, const BilinearMap& b) { return a -= b; }
  friend bool operator==(const BilinearMap& a, const BilinearMap& b) = default;

 private:
  Field field_;
  std::size_t left_ = 0;
  std::size_t right_ = 0;
  std::size_t out_ = 0;
  std::vector<Vector> values_;
};

/// Linear subspace of k^n held by a reduced-echelon basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field field, std::size_t ambient_dim);
  static Subspace span(Field field, std::size_t ambient_dim, const std::vector<Vector>& generators);
  static Subspace full(Field field, std::size_t ambient_dim);

  [[nodiscard]] Field field() const noexcept { return field_; }
  [[nodiscard]] std::size_t ambient_dim() const noexcept { return ambient_; }
  [[nodiscard]] std::size_t dim() const noexcept { return basis_.size(); }
  [[nodiscard]] const std::vector<Vector>& basis() const noexcept { return basis_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  [[nodiscard]] bool contains(const Vector& v) const;
  [[nodiscard]] bool contains(const Subspace& other) const;
  /// Element sum_i coeffs[i] * basis[i].
  [[nodiscard]] Vector element(const Vector& coeffs) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  Field field_;
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row-echelon form; the pivot in each column is the first nonzero
/// entry at or below the current row.
[[nodiscard]] RrefResult rref(const Matrix& m);
[[nodiscard]] std::size_t rank(const Matrix& m);
[[nodiscard]] Subspace kernel(const Matrix& m);
/// Column space.
[[nodiscard]] Subspace image(const Matrix& m);

struct Solution {
  Vector particular;
  Subspace kernel;
};

/// Solves a x = b; the particular solution has all free variables zero.
[[nodiscard]] std::optional<Solution> solve(const Matrix& a, const Vector& b);
[[nodiscard]] bool coset_member(const Vector& v, const Subspace& s);
[[nodiscard]] std::size_t quotient_dim(const Subspace& big, const Subspace& small);

[[nodiscard]] std::optional<Matrix> inverse(const Matrix& m);
/// A left inverse L (L m = I) of an injective matrix, built from the rows of
/// m selected by the echelon pivots of its transpose.
[[nodiscard]] Matrix left_inverse(const Matrix& m);

struct AffineMap {
  Matrix linear;
  Vector offset;
};

/// Recovers the matrix and offset of an affine map k^n -> k^r by probing it
/// at 0 and at the unit vectors. Only meaningful when `fn` is affine.
[[nodiscard]] AffineMap linearize(Field field, std::size_t n,
                                  const std::function<Vector(const Vector&)>& fn);

/// p^n, saturating at `cap + 1` so callers can compare against a bound.
[[nodiscard]] std::uint64_t count_vectors(Field field, std::size_t n, std::uint64_t cap);

/// Visits every vector of F_p^n in lexicographic order (first coordinate most
/// significant). Stops early and returns false when `visit` returns false.
bool for_each_vector(Field field, std::size_t n, const std::function<bool(const Vector&)>& visit);

/// Visits every element of a subspace (finite fields only), in lexicographic
/// order of the coordinates with respect to its echelon basis.
bool for_each_element(const Subspace& s, const std::function<bool(const Vector&)>& visit);

}  // namespace rrbx
