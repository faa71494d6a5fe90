#pragma once

// Non-abelian 2-cocycles, twisted RRB algebras, extensions with sections, and
// the equivalence relations on cocycles and extensions.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rrbx/cohomology.hpp"
#include "rrbx/rrb_core.hpp"

namespace rrbx {

/// Sextuple (omega, varpi, chi, mu, rho_B, rho_M) for a base 𝒜 = (A, V, T) and
/// a kernel ℬ = (B, M, S) with its own bracket and action nu_M.
struct NonAbelianCocycle {
  BilinearMap omega;          // A x A -> B
  BilinearMap varpi;          // A x V -> M
  Matrix chi;                 // V -> B
  std::vector<Matrix> mu;     // per basis vector of V: B -> M
  std::vector<Matrix> rho_b;  // per basis vector of A: B -> B
  std::vector<Matrix> rho_m;  // per basis vector of A: M -> M

  static NonAbelianCocycle zero(const RRBAlgebra& base, const RRBAlgebra& kernel);

  [[nodiscard]] Matrix rho_b_of(const Vector& x) const;
  [[nodiscard]] Matrix rho_m_of(const Vector& x) const;
  [[nodiscard]] Matrix mu_of(const Vector& v) const;

  friend bool operator==(const NonAbelianCocycle&, const NonAbelianCocycle&) = default;
};

/// 0 -> kernel --inj--> total --proj--> base -> 0.
struct Extension {
  RRBAlgebra base;
  RRBAlgebra kernel;
  RRBAlgebra total;
  RRBHom inj;
  RRBHom proj;

  friend bool operator==(const Extension&, const Extension&) = default;
};

struct Section {
  Matrix s_alg;  // A -> Â
  Matrix s_mod;  // V -> V̂

  friend bool operator==(const Section&, const Section&) = default;
};

struct EquivalenceWitness {
  Matrix zeta;  // A -> B
  Matrix eta;   // V -> M

  friend bool operator==(const EquivalenceWitness&, const EquivalenceWitness&) = default;
};

enum class Mode { Auto, Verify, SearchFinite, LinearAbelian };

inline constexpr std::uint64_t kDefaultSearchBound = std::uint64_t{1} << 20;

struct SearchOptions {
  Mode mode = Mode::Auto;
  std::optional<EquivalenceWitness> witness;
  std::uint64_t bound = kDefaultSearchBound;
};

enum class Verdict { Yes, No, Unknown };

struct EquivalenceResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<EquivalenceWitness> witness;
  /// First failing equation when a supplied witness is rejected.
  std::optional<Violation> violation;
};

struct ExtensionEquivalence {
  Verdict verdict = Verdict::Unknown;
  std::optional<RRBHom> iso;
  std::optional<EquivalenceWitness> witness;
};

/// True when the kernel algebra has zero bracket and zero action.
bool is_abelian_kernel(const RRBAlgebra& kernel);

ValidationReport validate_nab_cocycle(const RRBAlgebra& base, const RRBAlgebra& kernel, const NonAbelianCocycle& c);
RRBAlgebra twisted_algebra(const RRBAlgebra& base, const RRBAlgebra& kernel, const NonAbelianCocycle& c);
/// The same construction without validating the sextuple first.
RRBAlgebra twisted_algebra_unchecked(const RRBAlgebra& base, const RRBAlgebra& kernel, const NonAbelianCocycle& c);
std::pair<Extension, Section> canonical_extension(const RRBAlgebra& base, const RRBAlgebra& kernel,
                                                  const NonAbelianCocycle& c);
ValidationReport validate_extension(const Extension& e);
ValidationReport validate_section(const Extension& e, const Section& s);
Section find_section(const Extension& e);
NonAbelianCocycle induced_cocycle(const Extension& e, const Section& s);

/// Residual blocks of the six equivalence identities for c (unprimed) and c2
/// (primed) at (zeta, eta); all blocks vanish iff the witness is valid.
struct ResidualBlock {
  std::string tag;
  std::vector<std::size_t> indices;
  Vector value;
};
std::vector<ResidualBlock> equivalence_residual(const RRBAlgebra& base, const RRBAlgebra& kernel,
                                                const NonAbelianCocycle& c1, const NonAbelianCocycle& c2,
                                                const EquivalenceWitness& w);

using ResidualFn = std::function<std::vector<ResidualBlock>(const EquivalenceWitness&)>;

/// Shared decision procedure for "some (zeta, eta) zeroes every residual
/// block". Linear mode requires `affine` (the residual is affine in the
/// witness); search mode needs a finite field.
EquivalenceResult find_witness(Field field, std::size_t a, std::size_t b, std::size_t v, std::size_t m,
                               const ResidualFn& residual, bool affine, const SearchOptions& options);

EquivalenceResult cocycles_equivalent(const RRBAlgebra& base, const RRBAlgebra& kernel, const NonAbelianCocycle& c1,
                                      const NonAbelianCocycle& c2, const SearchOptions& options = {});
ExtensionEquivalence extensions_equivalent(const Extension& e1, const Extension& e2,
                                           const std::optional<RRBHom>& iso = std::nullopt,
                                           const SearchOptions& options = {});

/// The coefficient representation and the degree-2 cochain carried by a
/// cocycle with abelian kernel.
std::pair<RRBRepresentation, Cochain> abelian_reduction(const RRBAlgebra& base, const RRBAlgebra& kernel,
                                                        const NonAbelianCocycle& c);
/// Inverse of abelian_reduction.
NonAbelianCocycle cocycle_from_cochain(const RRBRepresentation& rep, const Cochain& c);
/// Kernel (B, M, 0, S) with zero bracket and action.
RRBAlgebra abelian_kernel(const RRBRepresentation& rep);

/// Flattening used by exhaustive searches: zeta row-major, then eta row-major.
Vector flatten_witness(const EquivalenceWitness& w);
EquivalenceWitness unflatten_witness(const Vector& flat, std::size_t a, std::size_t b, std::size_t v, std::size_t m);

/// Left inverses of the injection maps used to pull values back into B and M.
struct KernelCoordinates {
  Matrix left_b;
  Matrix left_m;
};
KernelCoordinates kernel_coordinates(const Extension& e);

}  // namespace rrbx
