#include "doctest.h"
#include "rrbx/error.hpp"
#include "support.hpp"

using namespace rrbx;
using namespace rrbx::test;

namespace {
const Field Q = Field::rationals();
const Field F2 = Field::prime(2);

bool has_tag(const ValidationReport& r, const std::string& tag) {
  for (const auto& v : r.violations)
    if (v.tag == tag) return true;
  return false;
}

NonAbelianCocycle z1_cocycle(Field f, long varpi, long chi) {
  NonAbelianCocycle c = NonAbelianCocycle::zero(z1(f), z1(f));
  c.varpi.at(0, 0) = Vector::from_ints(f, {varpi});
  c.chi(0, 0) = Scalar(f, chi);
  return c;
}
}  // namespace

TEST_SUITE("extensions") {

TEST_CASE("cocycle validation") {
  CHECK(validate_nab_cocycle(z1(Q), z1(Q), NonAbelianCocycle::zero(z1(Q), z1(Q))).ok());

  // rho_B(e2) = ad_{b2} on a nonabelian kernel with omega = 0 breaks L2.
  NonAbelianCocycle c = NonAbelianCocycle::zero(aff(F2), aff(F2));
  c.rho_b[1] = aff(F2).lie.ad[1];
  const ValidationReport r = validate_nab_cocycle(aff(F2), aff(F2), c);
  CHECK(has_tag(r, "L2"));

  for (const auto& nc : valid_line_cocycles(F2)) {
    const auto [e, s] = canonical_extension(nc.base, nc.kernel, nc.cocycle);
    CHECK(validate_nab_cocycle(nc.base, nc.kernel, induced_cocycle(e, find_section(e))).ok());
  }
}

TEST_CASE("twisted algebra") {
  for (const auto& ctx : random_contexts(Q, 8, 21)) {
    const NonAbelianCocycle zero = cocycle_from_cochain(ctx, zero_cochain(ctx, 2));
    CHECK(twisted_algebra(ctx.base, abelian_kernel(ctx), zero) == semidirect_product(ctx.base, ctx));
  }
  std::size_t rejected = 0;
  for_each_line_sextuple(F2, [&](const NabCase& nc) {
    const bool ok = validate_nab_cocycle(nc.base, nc.kernel, nc.cocycle).ok();
    CHECK(validate_rrb(twisted_algebra_unchecked(nc.base, nc.kernel, nc.cocycle)).ok() == ok);
    rejected += !ok;
  });
  CHECK(rejected > 0);
  NonAbelianCocycle bad = NonAbelianCocycle::zero(aff(F2), aff(F2));
  bad.rho_b[1] = aff(F2).lie.ad[1];
  CHECK_THROWS_AS(twisted_algebra(aff(F2), aff(F2), bad), Error);
}

TEST_CASE("canonical extension and sections") {
  const auto [e, s] = canonical_extension(z1(Q), z1(Q), NonAbelianCocycle::zero(z1(Q), z1(Q)));
  CHECK(validate_extension(e).ok());
  CHECK(validate_section(e, s).ok());
  CHECK(s.s_alg == Matrix::from_ints(Q, {{1}, {0}}));
  CHECK(find_section(e) == s);
  CHECK(induced_cocycle(e, s) == NonAbelianCocycle::zero(z1(Q), z1(Q)));
  CHECK(e.total == semidirect_product(z1(Q), line_coefficients(z1(Q), 0, 0, 0, 0)));
}

TEST_CASE("sections after a basis permutation") {
  const NonAbelianCocycle c = z1_cocycle(Q, 2, 3);
  auto [e, s] = canonical_extension(z1(Q), z1(Q), c);
  const Matrix p = Matrix::from_ints(Q, {{0, 1}, {1, 0}});
  // Conjugate the total algebra by the swap on both spaces.
  RRBAlgebra t = e.total;
  for (auto& m : t.lie.ad) m = p * m * p;
  std::swap(t.lie.ad[0], t.lie.ad[1]);
  for (auto& m : t.rep.action) m = p * m * p;
  std::swap(t.rep.action[0], t.rep.action[1]);
  t.t = p * t.t * p;
  const Extension permuted{e.base, e.kernel, t, RRBHom{p * e.inj.phi, p * e.inj.psi},
                           RRBHom{e.proj.phi * p, e.proj.psi * p}};
  REQUIRE(validate_extension(permuted).ok());
  const Section found = find_section(permuted);
  CHECK(validate_section(permuted, found).ok());
  CHECK(cocycles_equivalent(z1(Q), z1(Q), induced_cocycle(permuted, found), c).verdict == Verdict::Yes);
}

TEST_CASE("roundtrip over F_3") {
  for (const auto& nc : valid_line_cocycles(Field::prime(3))) {
    const auto [e, s] = canonical_extension(nc.base, nc.kernel, nc.cocycle);
    CHECK(induced_cocycle(e, s) == nc.cocycle);
  }
}

TEST_CASE("equivalence of cocycles") {
  const NonAbelianCocycle c = z1_cocycle(Q, 1, 2);
  SearchOptions verify;
  verify.mode = Mode::Verify;
  verify.witness = EquivalenceWitness{Matrix(Q, 1, 1), Matrix(Q, 1, 1)};
  CHECK(cocycles_equivalent(z1(Q), z1(Q), c, c, verify).verdict == Verdict::Yes);

  // Abelian kernel: shifting by a coboundary stays in the class.
  Rng rng(3);
  const RRBRepresentation ctx = adjoint(afft(Q));
  const Cochain z{2, cocycle_space(ctx, 2).basis()[0]};
  const Cochain shifted{2, z.coords + coboundary(ctx, Cochain{1, random_vector(Q, 8, rng)}).coords};
  const auto res = cocycles_equivalent(ctx.base, abelian_kernel(ctx), cocycle_from_cochain(ctx, z),
                                       cocycle_from_cochain(ctx, shifted));
  CHECK(res.verdict == Verdict::Yes);
  REQUIRE(res.witness);
  CHECK(residual_zero(equivalence_residual(ctx.base, abelian_kernel(ctx), cocycle_from_cochain(ctx, z),
                                           cocycle_from_cochain(ctx, shifted), *res.witness)));
  CHECK(class_equal(ctx, z, shifted));

  // Z1 over F_2: B^2 = 0 so distinct cocycles are inequivalent.
  SearchOptions search;
  search.mode = Mode::SearchFinite;
  CHECK(cocycles_equivalent(z1(F2), z1(F2), z1_cocycle(F2, 0, 0), z1_cocycle(F2, 1, 0), search).verdict ==
        Verdict::No);

  // A witness whose coboundary is nonzero cannot relate a cocycle to itself.
  Vector unit(Q, 8);
  unit[0] = Scalar(Q, 1);
  REQUIRE_FALSE(coboundary(ctx, Cochain{1, unit}).coords.is_zero());
  const Degree1Maps m = degree1_maps(ctx, Cochain{1, unit});
  SearchOptions bad = verify;
  bad.witness = EquivalenceWitness{m.phi_b, m.phi_m};
  const auto rejected =
      cocycles_equivalent(ctx.base, abelian_kernel(ctx), cocycle_from_cochain(ctx, z), cocycle_from_cochain(ctx, z), bad);
  CHECK(rejected.verdict == Verdict::Unknown);
  CHECK(rejected.violation);

  search.bound = 2;
  CHECK_THROWS_AS(cocycles_equivalent(z1(F2), z1(F2), z1_cocycle(F2, 0, 0), z1_cocycle(F2, 1, 0), search),
                  Error);
}

TEST_CASE("equivalence of extensions") {
  const auto [e1, s1] = canonical_extension(z1(Q), z1(Q), z1_cocycle(Q, 1, 2));
  CHECK(extensions_equivalent(e1, e1, RRBHom::identity(e1.total)).verdict == Verdict::Yes);

  const RRBRepresentation ctx = adjoint(afft(Q));
  const Cochain z{2, cocycle_space(ctx, 2).basis()[1]};
  Vector phi(Q, 8);
  phi[3] = Scalar(Q, 1);
  const Cochain shifted{2, z.coords + coboundary(ctx, Cochain{1, phi}).coords};
  const RRBAlgebra k = abelian_kernel(ctx);
  const auto ea = canonical_extension(ctx.base, k, cocycle_from_cochain(ctx, z)).first;
  const auto eb = canonical_extension(ctx.base, k, cocycle_from_cochain(ctx, shifted)).first;
  const ExtensionEquivalence eq = extensions_equivalent(ea, eb);
  CHECK(eq.verdict == Verdict::Yes);
  REQUIRE(eq.iso);
  CHECK(validate_hom(*eq.iso, ea.total, eb.total).report.ok());

  SearchOptions search;
  search.mode = Mode::SearchFinite;
  const auto f1 = canonical_extension(z1(F2), z1(F2), z1_cocycle(F2, 0, 0)).first;
  const auto f2 = canonical_extension(z1(F2), z1(F2), z1_cocycle(F2, 0, 1)).first;
  CHECK(extensions_equivalent(f1, f2, std::nullopt, search).verdict == Verdict::No);
}

TEST_CASE("abelian reduction") {
  const auto [rep, c] = abelian_reduction(z1(Q), z1(Q), NonAbelianCocycle::zero(z1(Q), z1(Q)));
  CHECK(rep == line_coefficients(z1(Q), 0, 0, 0, 0));
  CHECK(c == zero_cochain(rep, 2));

  for (const auto& nc : valid_line_cocycles(F2)) {
    if (!is_abelian_kernel(nc.kernel)) continue;
    const auto [r, cc] = abelian_reduction(nc.base, nc.kernel, nc.cocycle);
    CHECK(is_cocycle(r, cc));
    CHECK(cocycle_from_cochain(r, cc) == nc.cocycle);
  }
  try {
    (void)abelian_reduction(aff(F2), aff(F2), NonAbelianCocycle::zero(aff(F2), aff(F2)));
    FAIL("expected NotAbelian");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAbelian);
  }
}

TEST_CASE("witness flattening") {
  Rng rng(2);
  const EquivalenceWitness w{random_matrix(Q, 2, 3, rng), random_matrix(Q, 1, 2, rng)};
  CHECK(unflatten_witness(flatten_witness(w), 3, 2, 2, 1) == w);
}

TEST_CASE("extension classes correspond to cocycle classes") {
  // Every cocycle has its canonical extension, so Theta is onto; compare the two equivalences.
  const auto cs = valid_line_cocycles(F2);
  SearchOptions search;
  search.mode = Mode::SearchFinite;
  std::size_t compared = 0;
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i; j < cs.size(); ++j) {
      if (!(cs[i].base == cs[j].base && cs[i].kernel == cs[j].kernel)) continue;
      const auto e1 = canonical_extension(cs[i].base, cs[i].kernel, cs[i].cocycle).first;
      const auto e2 = canonical_extension(cs[j].base, cs[j].kernel, cs[j].cocycle).first;
      const Verdict ext = extensions_equivalent(e1, e2, std::nullopt, search).verdict;
      const Verdict coc = cocycles_equivalent(cs[i].base, cs[i].kernel, cs[i].cocycle, cs[j].cocycle, search).verdict;
      CHECK(ext == coc);
      ++compared;
    }
  CHECK(compared > cs.size());
}

TEST_CASE("twisted algebra valid iff cocycle valid, nonabelian kernels") {
  // Base Z1 over F_2, kernel aff(1) acting on M trivially or by the adjoint
  // action; every varpi, chi, mu, rho_B, rho_M (16 bits).
  const RRBAlgebra base = z1(F2);
  RRBAlgebra trivial_m = aff(F2);
  trivial_m.rep = Representation::trivial(F2, 2, 2);
  std::size_t valid = 0, total = 0;
  for (const RRBAlgebra& kernel : {aff(F2), trivial_m, afft(F2)}) {
    REQUIRE(validate_rrb(kernel).ok());
    for_each_vector(F2, 16, [&](const Vector& x) {
      NonAbelianCocycle c = NonAbelianCocycle::zero(base, kernel);
      c.varpi.at(0, 0) = x.slice(0, 2);
      c.chi = Matrix::reshape(x.slice(2, 2), 2, 1);
      c.mu[0] = Matrix::reshape(x.slice(4, 4), 2, 2);
      c.rho_b[0] = Matrix::reshape(x.slice(8, 4), 2, 2);
      c.rho_m[0] = Matrix::reshape(x.slice(12, 4), 2, 2);
      const bool ok = validate_nab_cocycle(base, kernel, c).ok();
      CHECK(ok == validate_rrb(twisted_algebra_unchecked(base, kernel, c)).ok());
      valid += ok;
      ++total;
      return true;
    });
  }
  CHECK(valid > 0);
  CHECK(valid < total);

  RRBAlgebra k = aff(F2);
  k.rep = Representation::trivial(F2, 2, 2);
  NonAbelianCocycle c = NonAbelianCocycle::zero(base, k);
  c.rho_b[0] = Matrix::from_ints(F2, {{1, 0}, {0, 0}});
  CHECK(has_tag(validate_nab_cocycle(base, k, c), "rho_B-derivation"));
  NonAbelianCocycle d = NonAbelianCocycle::zero(base, aff(F2));
  d.mu[0] = Matrix::from_ints(F2, {{0, 1}, {0, 0}});
  CHECK(has_tag(validate_nab_cocycle(base, aff(F2), d), "mu-bracket"));
}

}  // TEST_SUITE
