#pragma once

// Lie algebras, representations, relative Rota-Baxter operators and their
// morphisms, all given by structure constants over an exact field.

#include <cstddef>
#include <string>
#include <vector>

#include "rrbx/exactlin.hpp"

namespace rrbx {

/// One failed identity instance: equation tag plus the basis indices (0-based)
/// at which it fails.
struct Violation {
  std::string tag;
  std::vector<std::size_t> indices;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
  [[nodiscard]] const Violation* first() const noexcept {
    return violations.empty() ? nullptr : &violations.front();
  }
  void add(std::string tag, std::vector<std::size_t> indices, std::string detail = {});
  void append(const ValidationReport& other);
  /// "L4 at (0, 1, 0)" style one-liner for the first violation, or "ok".
  [[nodiscard]] std::string summary() const;
};

/// ad[i] is the matrix of [e_i, -]; its column j holds the coordinates of [e_i, e_j].
struct LieAlgebra {
  Field field;
  std::size_t dim = 0;
  std::vector<Matrix> ad;

  static LieAlgebra abelian(Field field, std::size_t dim);
  /// Builds ad from c(i, j) = [e_i, e_j].
  static LieAlgebra from_brackets(Field field, std::size_t dim,
                                  const std::function<Vector(std::size_t, std::size_t)>& c);

  [[nodiscard]] Vector bracket(const Vector& x, const Vector& y) const;
  [[nodiscard]] Matrix ad_of(const Vector& x) const;
  [[nodiscard]] bool is_abelian() const;

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;
};

/// action[i] is rho(e_i) acting on a space of dimension `dim`.
struct Representation {
  Field field;
  std::size_t dim = 0;
  std::vector<Matrix> action;

  static Representation trivial(Field field, std::size_t algebra_dim, std::size_t dim);
  [[nodiscard]] Matrix action_of(const Vector& x) const;
  [[nodiscard]] bool is_trivial() const;

  friend bool operator==(const Representation&, const Representation&) = default;
};

struct RRBAlgebra {
  LieAlgebra lie;
  Representation rep;
  Matrix t;  // V -> A

  [[nodiscard]] Field field() const { return lie.field; }
  [[nodiscard]] std::size_t a_dim() const { return lie.dim; }
  [[nodiscard]] std::size_t v_dim() const { return rep.dim; }
  /// Zero bracket and trivial action.
  [[nodiscard]] bool is_abelian() const { return lie.is_abelian() && rep.is_trivial(); }

  friend bool operator==(const RRBAlgebra&, const RRBAlgebra&) = default;
};

/// Coefficients M --S--> B with actions rho_B, rho_M of A and the bridge mu.
struct RRBRepresentation {
  RRBAlgebra base;
  std::size_t b_dim = 0;
  std::size_t m_dim = 0;
  Matrix s;                    // M -> B
  std::vector<Matrix> rho_b;   // per basis vector of A, b x b
  std::vector<Matrix> rho_m;   // per basis vector of A, m x m
  std::vector<Matrix> mu;      // per basis vector of V, m x b

  static RRBRepresentation zero(const RRBAlgebra& base, std::size_t b_dim, std::size_t m_dim);

  [[nodiscard]] Field field() const { return base.field(); }
  [[nodiscard]] Matrix rho_b_of(const Vector& x) const;
  [[nodiscard]] Matrix rho_m_of(const Vector& x) const;
  [[nodiscard]] Matrix mu_of(const Vector& v) const;

  friend bool operator==(const RRBRepresentation&, const RRBRepresentation&) = default;
};

/// phi acts on the Lie algebras, psi on the representation spaces.
struct RRBHom {
  Matrix phi;
  Matrix psi;

  static RRBHom identity(const RRBAlgebra& r);
  [[nodiscard]] RRBHom compose(const RRBHom& inner) const;  // this after inner

  friend bool operator==(const RRBHom&, const RRBHom&) = default;
};

struct DerivationPair {
  Matrix d_a;
  Matrix d_v;

  static DerivationPair zero(const RRBAlgebra& r);

  friend bool operator==(const DerivationPair&, const DerivationPair&) = default;
};

struct HomValidation {
  ValidationReport report;
  bool is_automorphism = false;
};

ValidationReport validate_lie(const LieAlgebra& l);
ValidationReport validate_representation(const LieAlgebra& l, const Representation& rep);
/// Lie algebra, representation and the operator identity on pairs u < v.
ValidationReport validate_rrb(const RRBAlgebra& r);
ValidationReport validate_rrb_representation(const RRBRepresentation& rep);

RRBAlgebra semidirect_product(const RRBAlgebra& a, const RRBRepresentation& rep);

HomValidation validate_hom(const RRBHom& h, const RRBAlgebra& src, const RRBAlgebra& dst);

ValidationReport validate_derivation(const RRBAlgebra& a, const DerivationPair& d);
DerivationPair derivation_bracket(const RRBAlgebra& a, const DerivationPair& d1, const DerivationPair& d2);

/// Every T : V -> A solving the operator identity, by exhaustion over F_p in
/// lexicographic order of the row-major entries.
std::vector<Matrix> enumerate_rrb_operators(const LieAlgebra& a, const Representation& rep, Field field,
                                            std::size_t bound = 9);

}  // namespace rrbx
