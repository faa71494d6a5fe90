#pragma once

// Cochain complex of an RRB algebra with coefficients in a representation:
// cochains, the coboundary D_R, cocycles, coboundaries and cohomology.

#include <cstddef>
#include <map>
#include <vector>

#include "rrbx/rrb_core.hpp"

namespace rrbx {

inline constexpr std::size_t kDefaultDegreeBound = 4;

struct Cochain {
  std::size_t degree = 1;
  Vector coords;

  friend bool operator==(const Cochain&, const Cochain&) = default;
};

/// Flat coordinates of degree-n cochains. Blocks in order: f_B on increasing
/// n-tuples of A times a B coordinate, f_M on increasing (n-1)-tuples of A times
/// a V index times an M coordinate, theta on increasing (n-1)-tuples of V times
/// a B coordinate (no theta block at n = 1). Tuples are lexicographic.
class CochainBasis {
 public:
  CochainBasis(std::size_t a, std::size_t b, std::size_t v, std::size_t m, std::size_t degree);
  explicit CochainBasis(const RRBRepresentation& ctx, std::size_t degree);

  [[nodiscard]] std::size_t degree() const noexcept { return degree_; }
  [[nodiscard]] std::size_t dim() const noexcept { return fb_size() + fm_size() + theta_size(); }
  [[nodiscard]] std::size_t fb_size() const noexcept { return a_tuples_.size() * b_; }
  [[nodiscard]] std::size_t fm_size() const noexcept { return a_short_.size() * v_ * m_; }
  [[nodiscard]] std::size_t theta_size() const noexcept { return degree_ >= 2 ? v_tuples_.size() * b_ : 0; }

  [[nodiscard]] const std::vector<std::vector<std::size_t>>& a_tuples() const { return a_tuples_; }
  [[nodiscard]] const std::vector<std::vector<std::size_t>>& a_short_tuples() const { return a_short_; }
  [[nodiscard]] const std::vector<std::vector<std::size_t>>& v_tuples() const { return v_tuples_; }

  [[nodiscard]] std::size_t fb_index(std::size_t tuple, std::size_t coord) const { return tuple * b_ + coord; }
  [[nodiscard]] std::size_t fm_index(std::size_t tuple, std::size_t v, std::size_t coord) const {
    return fb_size() + (tuple * v_ + v) * m_ + coord;
  }
  [[nodiscard]] std::size_t theta_index(std::size_t tuple, std::size_t coord) const {
    return fb_size() + fm_size() + tuple * b_ + coord;
  }

  /// Rank of an increasing tuple in the corresponding list.
  [[nodiscard]] std::size_t rank_a(const std::vector<std::size_t>& t) const { return rank_a_.at(t); }
  [[nodiscard]] std::size_t rank_a_short(const std::vector<std::size_t>& t) const { return rank_short_.at(t); }
  [[nodiscard]] std::size_t rank_v(const std::vector<std::size_t>& t) const { return rank_v_.at(t); }

 private:
  std::size_t a_, b_, v_, m_, degree_;
  std::vector<std::vector<std::size_t>> a_tuples_, a_short_, v_tuples_;
  std::map<std::vector<std::size_t>, std::size_t> rank_a_, rank_short_, rank_v_;
};

/// Evaluates the components of a cochain on arbitrary (not only basis) arguments.
class CochainEvaluator {
 public:
  CochainEvaluator(const RRBRepresentation& ctx, const Cochain& c);

  /// f_B(x_1, ..., x_n) in B.
  [[nodiscard]] Vector f_b(const std::vector<Vector>& xs) const;
  /// f_M(x_1, ..., x_{n-1}, v) in M.
  [[nodiscard]] Vector f_m(const std::vector<Vector>& xs, const Vector& v) const;
  /// theta(v_1, ..., v_{n-1}) in B; identically zero at n = 1.
  [[nodiscard]] Vector theta(const std::vector<Vector>& vs) const;

 private:
  Field field_;
  std::size_t b_, m_;
  Vector coords_;
  CochainBasis basis_;
};

Cochain zero_cochain(const RRBRepresentation& ctx, std::size_t degree);

/// Degree-1 cochain (phi_B, phi_M) from the matrices phi_B : A -> B, phi_M : V -> M.
Cochain cochain_from_maps(const RRBRepresentation& ctx, const Matrix& phi_b, const Matrix& phi_m);
struct Degree1Maps {
  Matrix phi_b;
  Matrix phi_m;
};
Degree1Maps degree1_maps(const RRBRepresentation& ctx, const Cochain& c);

/// Degree-2 cochain (f_B, f_M, theta) from bilinear maps A x A -> B, A x V -> M
/// and a linear map V -> B. Only the values on increasing pairs of f_B are read.
Cochain cochain_from_parts(const RRBRepresentation& ctx, const BilinearMap& f_b, const BilinearMap& f_m,
                           const Matrix& theta);
struct Degree2Parts {
  BilinearMap f_b;
  BilinearMap f_m;
  Matrix theta;
};
Degree2Parts degree2_parts(const RRBRepresentation& ctx, const Cochain& c);

Cochain coboundary(const RRBRepresentation& ctx, const Cochain& c, std::size_t degree_bound = kDefaultDegreeBound);
/// Matrix of D_R from degree n to degree n + 1 in CochainBasis order.
Matrix coboundary_matrix(const RRBRepresentation& ctx, std::size_t n,
                         std::size_t degree_bound = kDefaultDegreeBound);
Subspace cocycle_space(const RRBRepresentation& ctx, std::size_t n, std::size_t degree_bound = kDefaultDegreeBound);
/// Image of D_R from degree n - 1; requires n >= 2.
Subspace coboundary_space(const RRBRepresentation& ctx, std::size_t n,
                          std::size_t degree_bound = kDefaultDegreeBound);
std::size_t cohomology_dim(const RRBRepresentation& ctx, std::size_t n, std::size_t degree_bound = kDefaultDegreeBound);
bool is_cocycle(const RRBRepresentation& ctx, const Cochain& c);
/// Whether two cocycles of the same degree n >= 2 differ by a coboundary.
bool class_equal(const RRBRepresentation& ctx, const Cochain& c1, const Cochain& c2);

}  // namespace rrbx
