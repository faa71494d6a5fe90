#pragma once

// Inducibility of pairs of derivations through abelian extensions and the
// Wells-type exact sequence 0 -> Z^1 -> Der_B(E) -> g(A, B) -> H^2.

#include <cstdint>
#include <optional>

#include "rrbx/extensions.hpp"

namespace rrbx {

/// (d_A, d_V) on the base together with endomorphisms (d_B, d_M) of the coefficients.
struct CoeffDerivationPair {
  DerivationPair d_aa;
  Matrix d_b;
  Matrix d_m;

  static CoeffDerivationPair zero(const RRBRepresentation& rep);
  friend bool operator==(const CoeffDerivationPair&, const CoeffDerivationPair&) = default;
};

/// Flat coordinates d_A, d_V, d_B, d_M, each row-major.
Vector flatten_coeff_pair(const CoeffDerivationPair& d);
CoeffDerivationPair unflatten_coeff_pair(const Vector& flat, const RRBRepresentation& rep);

/// Derivation conditions on the base plus the four compatibility identities Bd1..Bd4.
ValidationReport g_report(const RRBRepresentation& rep, const CoeffDerivationPair& d);
bool g_member(const RRBRepresentation& rep, const CoeffDerivationPair& d);
Subspace g_basis(const RRBRepresentation& rep);
CoeffDerivationPair g_bracket(const RRBRepresentation& rep, const CoeffDerivationPair& d1,
                              const CoeffDerivationPair& d2);

Cochain delta_action(const RRBRepresentation& rep, const CoeffDerivationPair& d, const Cochain& c);

/// Coefficient representation of an abelian extension, read off any section.
RRBRepresentation extension_representation(const Extension& e, const Section& s);

struct DerWellsResult {
  Cochain value;
  bool trivial = false;
  /// A degree-1 cochain with D_R(preimage) = value when trivial.
  std::optional<Cochain> preimage;
};

DerWellsResult wells_der(const Extension& e, const Section& s, const CoeffDerivationPair& d);

ValidationReport validate_total_derivation(const Extension& e, const DerivationPair& t);

struct DerInducibilityResult {
  Verdict verdict = Verdict::No;
  std::optional<EquivalenceWitness> witness;
  std::optional<DerivationPair> total;
  std::optional<Violation> violation;
};

/// d_Ahat(s x + a) = s d_A x + zeta x + d_B a, and likewise on V-hat.
DerivationPair assemble_total_derivation(const Extension& e, const Section& s, const CoeffDerivationPair& d,
                                         const EquivalenceWitness& w);
DerInducibilityResult inducible_der(const Extension& e, const Section& s, const CoeffDerivationPair& d);

/// ((p d s, p d s), (d|_B, d|_M)).
CoeffDerivationPair digamma(const Extension& e, const Section& s, const DerivationPair& t);
/// (d_Ahat s, d_Vhat s) pulled back to B and M, as a degree-1 cochain.
Cochain gamma_iso(const Extension& e, const Section& s, const DerivationPair& t);
DerivationPair gamma_inverse(const Extension& e, const Section& s, const Cochain& f);

/// Der_B(E) in flat coordinates (d_Ahat row-major, then d_Vhat row-major).
Subspace total_derivation_space(const Extension& e);
DerivationPair unflatten_total_derivation(const Extension& e, const Vector& flat);

struct DerExactnessReport {
  std::size_t dim_z1 = 0;
  std::size_t dim_der_e = 0;
  std::size_t dim_kernel_digamma = 0;
  std::size_t dim_g = 0;
  std::size_t dim_image_digamma = 0;
  std::size_t dim_kernel_w = 0;
  /// Brute-force count of Der_B(E) when the ambient space is within the bound.
  std::optional<std::uint64_t> enumerated_der_e;
  ValidationReport violations;

  [[nodiscard]] bool ok() const { return violations.ok(); }
};

DerExactnessReport verify_der_exactness(const Extension& e, std::uint64_t bound = kDefaultSearchBound);

}  // namespace rrbx
