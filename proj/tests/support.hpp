#pragma once

// Fixtures, random validated contexts and hand-written oracles shared by the
// unit suites and the acceptance runner.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "rrbx/cohomology.hpp"
#include "rrbx/extensions.hpp"
#include "rrbx/inducibility_auto.hpp"
#include "rrbx/inducibility_der.hpp"

namespace rrbx::test {

using Rng = std::mt19937_64;

// ---------------------------------------------------------------- fixtures

RRBAlgebra z1(Field f);
/// One-dimensional A and V with rho(e1) = r and T = t.
RRBAlgebra line(Field f, long r, long t);
RRBAlgebra aff(Field f);
RRBAlgebra afft(Field f);
/// Heisenberg algebra on itself with T mapping into the centre.
RRBAlgebra heisenberg(Field f, const Matrix& t_row);

/// B = A, M = V, S = T, rho_B = ad, rho_M = rho, mu(v) a = -rho(a) v.
RRBRepresentation adjoint(const RRBAlgebra& r);
RRBRepresentation trivial_coefficients(const RRBAlgebra& r, const Matrix& s);
/// 1-dimensional B and M with the given scalars.
RRBRepresentation line_coefficients(const RRBAlgebra& r, long rho_b, long rho_m, long mu, long s);

// ---------------------------------------------------------------- randomness

Scalar random_scalar(Field f, Rng& rng);
Matrix random_matrix(Field f, std::size_t rows, std::size_t cols, Rng& rng);
Matrix random_invertible(Field f, std::size_t n, Rng& rng);
Vector random_vector(Field f, std::size_t n, Rng& rng);

/// Same context written in the bases given by the columns of p (A), q (V), r (B), u (M).
RRBRepresentation transport(const RRBRepresentation& rep, const Matrix& p, const Matrix& q, const Matrix& r,
                            const Matrix& u);

/// Validated contexts with every dimension at most 3, seeded deterministically.
std::vector<RRBRepresentation> random_contexts(Field f, std::size_t count, std::uint64_t seed);

// ---------------------------------------------------------------- exhaustive families

struct NabCase {
  RRBAlgebra base;
  RRBAlgebra kernel;
  NonAbelianCocycle cocycle;
};

/// Every sextuple over F_p with all four spaces 1-dimensional, valid or not.
void for_each_line_sextuple(Field f, const std::function<void(const NabCase&)>& visit);
/// Only the validated ones.
std::vector<NabCase> valid_line_cocycles(Field f);
/// Validated line contexts (base and coefficients all 1-dimensional).
std::vector<RRBRepresentation> line_contexts(Field f);

// ---------------------------------------------------------------- oracles

/// Degree-1 coboundary written straight from its three defining formulas.
struct Degree1Image {
  BilinearMap delta_b;  // A x A -> B
  BilinearMap delta_m;  // A x V -> M
  Matrix h;             // V -> B
};
Degree1Image degree1_oracle(const RRBRepresentation& ctx, const Matrix& phi_b, const Matrix& phi_m);

/// Whether a degree-2 cochain satisfies the explicit 2-cocycle equations.
bool degree2_cocycle_oracle(const RRBRepresentation& ctx, const BilinearMap& f_b, const BilinearMap& f_m, const Matrix& theta);

/// Residual of the derivation identities of an RRB algebra, flattened.
Vector derivation_residual(const RRBAlgebra& a, const DerivationPair& d);
/// Residual of the homomorphism identities, flattened.
Vector hom_residual(const RRBAlgebra& src, const RRBAlgebra& dst, const RRBHom& h);

/// Every invertible endomorphism pair of the total algebra of e preserving the
/// kernel, found by brute force over block-triangular matrices in the
/// canonical basis (B first, then A).
std::vector<RRBHom> brute_force_kernel_automorphisms(const Extension& e);
/// Every derivation pair of the total algebra preserving the kernel.
std::vector<DerivationPair> brute_force_kernel_derivations(const Extension& e);

bool residual_zero(const std::vector<ResidualBlock>& blocks);

}  // namespace rrbx::test
