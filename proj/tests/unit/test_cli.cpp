#include <sstream>

#include "doctest.h"
#include "rrbx/cli.hpp"
#include "rrbx/error.hpp"
#include "rrbx/problem_io.hpp"
#include "support.hpp"

using namespace rrbx;
using namespace rrbx::test;

namespace {
struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(RRBX_DATA_DIR) + "/" + name; }
}  // namespace

TEST_SUITE("cli") {

TEST_CASE("canonical JSON") {
  const Json j = Json::parse(R"({"b": [1, [2, 3]], "a": {"x": "1/2"}})");
  CHECK(dump_canonical(j) == "{\n  \"a\": {\n    \"x\": \"1/2\"\n  },\n  \"b\": [1,[2,3]]\n}\n");
}

TEST_CASE("objects roundtrip through JSON") {
  const Field q = Field::rationals();
  const Problem p = Problem::from_json(Json{{"version", 1}, {"field", "Q"},
                                            {"objects", {{"a", to_json(afft(q))}, {"r", to_json(adjoint(afft(q)))}}}});
  CHECK(p.rrb(Json("a"), "a") == afft(q));
  RRBRepresentation r = adjoint(afft(q));
  CHECK(p.representation(Json("r"), "r") == r);
  CHECK(to_json(Scalar::parse(q, "-3/4")) == Json("-3/4"));
  CHECK(to_json(Scalar(Field::prime(5), 7)) == Json(2));
}

TEST_CASE("malformed input") {
  try {
    (void)Problem::parse("{\n\"version\": 1,\n\"field\": }");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(Problem::parse(R"({"version": 2, "field": "Q"})"), Error);
  CHECK_THROWS_AS(Problem::parse(R"({"version": 1, "field": "F_4"})"), Error);
  const Problem p = Problem::parse(R"({"version": 1, "field": "Q", "objects": {"z": {"kind": "rrb", "a_dim": 1,
      "v_dim": 1, "ad": [[[0]]], "rho": [[[0]]], "t": [[0, 1]]}}})");
  try {
    (void)p.rrb(Json("z"), "z");
    FAIL("expected a shape error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("t") != std::string::npos);
  }
}

TEST_CASE("validate") {
  const Run r = run({"validate", "--input", data("z1.rrb")});
  CHECK(r.code == cli::kExitYes);
  CHECK(r.out == "rrb: valid\n");

  const Run bad = run({"validate", "--input", data("aff.rrb"), "--object", "afft_identity_t"});
  CHECK(bad.code == cli::kExitNo);
  CHECK(bad.out.find("RB at (0, 1)") != std::string::npos);
}

TEST_CASE("cohomology") {
  CHECK(run({"cohomology", "--input", data("z1_pair.rrb"), "--degree", "2"}).out == "dim H^2 = 2\n");
  CHECK(run({"cohomology", "--input", data("z1_pair.rrb"), "--degree", "1"}).out == "dim H^1 = 2\n");
  const Run j = run({"cohomology", "--input", data("z1_pair.rrb"), "--format", "json"});
  CHECK(Json::parse(j.out)["command"] == "cohomology");
}

TEST_CASE("induce-der on the split extension") {
  const Run r = run({"induce-der", "--input", data("split_f2.rrb"), "--format", "json"});
  CHECK(r.code == cli::kExitYes);
  const Json j = Json::parse(r.out);
  CHECK(j["witness"]["zeta"] == Json::parse("[[0]]"));
  CHECK(j["witness"]["eta"] == Json::parse("[[0]]"));
}

TEST_CASE("verdict exit codes") {
  CHECK(run({"equiv", "--input", data("afft_adjoint.rrb")}).code == cli::kExitYes);
  CHECK(run({"equiv", "--input", data("z1_inequivalent_f2.rrb")}).code == cli::kExitNo);
  CHECK(run({"induce-auto", "--input", data("nonabelian_f3.rrb")}).code == cli::kExitYes);
  CHECK(run({"wells", "--input", data("nonabelian_f3_wells.rrb")}).code == cli::kExitNo);
  CHECK(run({"exactness", "--input", data("afft_der_exactness.rrb")}).code == cli::kExitYes);
}

TEST_CASE("an exceeded search bound is an unknown verdict") {
  const Run r = run({"equiv", "--input", data("z1_inequivalent_f2.rrb"), "--mode", "search", "--bound", "1"});
  CHECK(r.code == cli::kExitUnknown);
  CHECK(r.out.rfind("unknown (", 0) == 0);
}

TEST_CASE("input errors") {
  CHECK(run({"validate"}).code == cli::kExitInput);
  CHECK(run({"frobnicate", "--input", data("z1.rrb")}).code == cli::kExitInput);
  CHECK(run({"validate", "--input", data("missing.rrb")}).code == cli::kExitInput);
  CHECK(run({"equiv", "--input", data("afft_adjoint.rrb"), "--mode", "search"}).code == cli::kExitInput);
  CHECK(run({"cohomology", "--input", data("z1_pair.rrb"), "--degree", "0"}).code == cli::kExitInput);
}

TEST_CASE("every object kind roundtrips") {
  const Field f = Field::prime(3);
  for (const auto& nc : valid_line_cocycles(f)) {
    if (!is_abelian_kernel(nc.kernel)) continue;
    const auto [e, s] = canonical_extension(nc.base, nc.kernel, nc.cocycle);
    const RRBRepresentation rep = extension_representation(e, s);
    const AutPair p = AutPair::identity(nc.base, nc.kernel);
    const CoeffDerivationPair d = CoeffDerivationPair::zero(rep);
    const EquivalenceWitness w{Matrix::from_ints(f, {{1}}), Matrix::from_ints(f, {{2}})};
    const Cochain c{2, Vector::from_ints(f, {1, 2})};
    const Json doc{{"version", 1},
                   {"field", "F_3"},
                   {"objects",
                    {{"base", to_json(nc.base)},
                     {"kernel", to_json(nc.kernel)},
                     {"rep", to_json(rep)},
                     {"c", to_json(nc.cocycle, "base", "kernel")},
                     {"e", to_json(e)},
                     {"s", to_json(s)},
                     {"g", to_json(RRBHom::identity(e.total))},
                     {"p", to_json(p)},
                     {"d", to_json(d)},
                     {"w", to_json(w)},
                     {"z", to_json(c, "rep")}}}};
    const std::string text = dump_canonical(doc);
    const Problem pr = Problem::parse(text);
    CHECK(dump_canonical(pr.document()) == text);
    CHECK(pr.rrb(Json("base"), "base") == nc.base);
    CHECK(pr.representation(Json("rep"), "rep") == rep);
    const auto cd = pr.cocycle(Json("c"), "c");
    CHECK(cd.cocycle == nc.cocycle);
    CHECK(cd.kernel == nc.kernel);
    const Extension e2 = pr.extension(Json("e"), "e");
    CHECK(e2 == e);
    CHECK(pr.section(Json("s"), e2, "s") == s);
    CHECK(pr.hom(Json("g"), e.total, e.total, "g") == RRBHom::identity(e.total));
    CHECK(pr.aut_pair(Json("p"), nc.base, nc.kernel, "p") == p);
    CHECK(pr.derivation_pair(Json("d"), rep, "d") == d);
    CHECK(pr.witness(Json("w"), 1, 1, 1, 1, "w") == w);
    const auto ch = pr.cochain(Json("z"), "z");
    CHECK(ch.cochain == c);
    CHECK(ch.rep == rep);
  }
}

TEST_CASE("emitted witnesses verify") {
  const Run r = run({"equiv", "--input", data("afft_adjoint.rrb"), "--format", "json"});
  REQUIRE(r.code == cli::kExitYes);
  const Json cert = Json::parse(r.out);
  const Problem p = Problem::load(data("afft_adjoint.rrb"));
  const auto c1 = p.cocycle(Json("c"), "c");
  const auto c2 = p.cocycle(Json("c_shifted"), "c_shifted");
  const EquivalenceWitness w = p.witness(cert["witness"], c1.base.a_dim(), c1.kernel.a_dim(), c1.base.v_dim(),
                                         c1.kernel.v_dim(), "witness");
  CHECK(residual_zero(equivalence_residual(c1.base, c1.kernel, c1.cocycle, c2.cocycle, w)));
}

}  // TEST_SUITE
