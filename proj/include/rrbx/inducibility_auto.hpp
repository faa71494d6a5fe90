#pragma once

// Inducibility of pairs of automorphisms through an extension, the Wells map,
// non-abelian 1-cocycles and the Wells exact sequence at desk scale.

#include <cstdint>
#include <optional>

#include "rrbx/extensions.hpp"

namespace rrbx {

/// alpha in Aut(base), beta in Aut(kernel).
struct AutPair {
  RRBHom alpha;
  RRBHom beta;

  static AutPair identity(const RRBAlgebra& base, const RRBAlgebra& kernel);
  friend bool operator==(const AutPair&, const AutPair&) = default;
};

/// (zeta, eta) read as a non-abelian 1-cocycle.
using Z1Nab = EquivalenceWitness;

ValidationReport validate_aut_pair(const RRBAlgebra& base, const RRBAlgebra& kernel, const AutPair& p);

/// Whether gamma is an automorphism of the total algebra mapping the kernel into itself.
ValidationReport validate_total_automorphism(const Extension& e, const RRBHom& gamma);

/// K(gamma) = ((p gamma_1 s, p gamma_2 s), (gamma_1|_B, gamma_2|_M)).
AutPair restrict(const Extension& e, const Section& s, const RRBHom& gamma);

NonAbelianCocycle transformed_cocycle(const NonAbelianCocycle& c, const AutPair& p);

ValidationReport compatibility(const NonAbelianCocycle& c, const AutPair& p);
bool compatible(const NonAbelianCocycle& c, const AutPair& p);

/// Residuals of the six inducibility identities at (zeta, eta).
std::vector<ResidualBlock> inducibility_residual(const RRBAlgebra& base, const RRBAlgebra& kernel,
                                                 const NonAbelianCocycle& c, const AutPair& p,
                                                 const EquivalenceWitness& w);

/// gamma_1(a + s x) = beta_1 a + zeta x + s alpha_1 x and likewise on V-hat.
RRBHom assemble_total_automorphism(const Extension& e, const Section& s, const AutPair& p,
                                   const EquivalenceWitness& w);

struct InducibilityResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<EquivalenceWitness> witness;
  std::optional<RRBHom> gamma;
  std::optional<Violation> violation;
};

InducibilityResult inducible(const Extension& e, const Section& s, const AutPair& p, const SearchOptions& options = {});

struct WellsResult {
  /// Yes means the Wells class is trivial.
  Verdict verdict = Verdict::Unknown;
  NonAbelianCocycle transformed;
  std::optional<EquivalenceWitness> witness;
  /// For abelian kernels and compatible pairs: transformed minus original as a 2-cochain.
  std::optional<Cochain> class_difference;
  std::optional<Violation> violation;
};

WellsResult wells_map(const Extension& e, const Section& s, const AutPair& p, const SearchOptions& options = {});

ValidationReport z1nab_report(const RRBAlgebra& base, const RRBAlgebra& kernel, const NonAbelianCocycle& c,
                              const Z1Nab& w);
bool z1nab_member(const RRBAlgebra& base, const RRBAlgebra& kernel, const NonAbelianCocycle& c, const Z1Nab& w);

/// lambda(gamma) = (gamma_1 s - s, gamma_2 s - s) pulled back to B and M.
Z1Nab lambda_iso(const Extension& e, const Section& s, const RRBHom& gamma);
RRBHom lambda_inverse(const Extension& e, const Section& s, const Z1Nab& w);

/// All automorphisms of an RRB algebra over a finite field, phi-major then psi,
/// both in lexicographic order of their row-major entries.
std::vector<RRBHom> enumerate_automorphisms(const RRBAlgebra& a, std::uint64_t bound = kDefaultSearchBound);

struct WellsExactnessReport {
  std::size_t aut_e = 0;       // |Aut_B(E)|
  std::size_t kernel_k = 0;    // |Ker K|
  std::size_t z1nab = 0;       // |Z^1_nab|
  std::size_t pairs = 0;       // |Aut(A) x Aut(B)|
  std::size_t image_k = 0;     // |Im K|
  std::size_t kernel_w = 0;    // |Ker W|
  ValidationReport violations;

  [[nodiscard]] bool ok() const { return violations.ok(); }
};

WellsExactnessReport verify_wells_exactness(const Extension& e, std::uint64_t bound = kDefaultSearchBound);

}  // namespace rrbx
