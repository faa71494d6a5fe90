#include "rrbx/cli.hpp"

#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "rrbx/problem_io.hpp"

namespace rrbx::cli {

namespace {

struct Options {
  std::string command;
  std::string input;
  std::string mode;
  std::optional<std::uint64_t> bound;
  std::string format = "text";
  std::optional<std::size_t> degree;
  std::string object;
};

/// One certificate: `cert` is the machine-readable form, `lines` the text one.
struct Report {
  Json cert = Json::object();
  std::vector<std::string> lines;
  int code = kExitYes;

  void verdict(const std::string& v, int c) {
    cert["verdict"] = v;
    code = c;
  }
  void line(std::string s) { lines.push_back(std::move(s)); }
};

int emit(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << dump_canonical(r.cert);
  } else {
    for (const auto& l : r.lines) out << l << "\n";
  }
  return r.code;
}

[[noreturn]] void input_error(const std::string& msg) { fail(ErrorKind::InvalidInput, msg); }

std::string compact(const Json& j) { return j.dump(); }

std::string mat(const Matrix& m) { return compact(to_json(m)); }

Json violation_json(const Violation& v) {
  return Json{{"tag", v.tag}, {"indices", v.indices}};
}

std::string violation_text(const Violation& v) {
  ValidationReport r;
  r.violations.push_back(v);
  return r.summary();
}

void add_violation(Report& r, const Violation& v) {
  r.cert["violation"] = violation_json(v);
  r.line("violated: " + violation_text(v));
}

void add_witness(Report& r, const EquivalenceWitness& w) {
  r.cert["witness"]["zeta"] = to_json(w.zeta);
  r.cert["witness"]["eta"] = to_json(w.eta);
  r.line("zeta = " + mat(w.zeta));
  r.line("eta = " + mat(w.eta));
}

void add_hom(Report& r, const char* key, const RRBHom& h) {
  r.cert["witness"][key] = Json{{"phi", to_json(h.phi)}, {"psi", to_json(h.psi)}};
  r.line(std::string(key) + ".phi = " + mat(h.phi));
  r.line(std::string(key) + ".psi = " + mat(h.psi));
}

void require_valid(const ValidationReport& rep, const std::string& what) {
  if (!rep.ok()) fail(ErrorKind::InvalidInput, what + " is invalid: " + rep.summary());
}

[[noreturn]] void unverified(const std::string& what) {
  throw std::logic_error(what + " failed re-verification");
}

bool residual_zero(const std::vector<ResidualBlock>& blocks) {
  for (const auto& b : blocks)
    if (!b.value.is_zero()) return false;
  return true;
}

SearchOptions search_options(const Options& o) {
  SearchOptions s;
  if (o.mode == "verify") s.mode = Mode::Verify;
  if (o.mode == "search") s.mode = Mode::SearchFinite;
  if (o.mode == "linear") s.mode = Mode::LinearAbelian;
  if (o.bound) s.bound = *o.bound;
  return s;
}

const Json& task_field(const Problem& p, const char* key) {
  if (!p.task().contains(key)) fail(ErrorKind::ParseError, std::string("task: missing field '") + key + "'");
  return p.task().at(key);
}

/// The extension named by the task plus a section: the one given, the
/// canonical one for extensions built from a cocycle, or a computed one.
std::pair<Extension, Section> task_extension(const Problem& p) {
  const Json& ref = task_field(p, "extension");
  const Json& obj = p.resolve(ref, "task.extension");
  std::optional<std::pair<Extension, Section>> built;
  if (obj.is_object() && obj.contains("cocycle")) {
    const auto d = p.cocycle(obj.at("cocycle"), "task.extension.cocycle");
    require_valid(validate_nab_cocycle(d.base, d.kernel, d.cocycle), "cocycle");
    built = canonical_extension(d.base, d.kernel, d.cocycle);
  } else {
    Extension e = p.extension(ref, "task.extension");
    require_valid(validate_extension(e), "extension");
    Section s = find_section(e);
    built = std::make_pair(std::move(e), std::move(s));
  }
  if (p.task().contains("section")) {
    built->second = p.section(p.task().at("section"), built->first, "task.section");
    require_valid(validate_section(built->first, built->second), "section");
  }
  return *built;
}

std::string kind_of(const Json& obj) {
  if (!obj.is_object() || !obj.contains("kind") || !obj.at("kind").is_string()) {
    fail(ErrorKind::ParseError, "object without a 'kind'");
  }
  return obj.at("kind").get<std::string>();
}

// ---------------------------------------------------------------- commands

ValidationReport validate_object(const Problem& p, const std::string& name) {
  const Json ref = name;
  const std::string where = "objects." + name;
  const Json& obj = p.resolve(ref, where);
  const std::string kind = kind_of(obj);
  if (kind == "rrb") return validate_rrb(p.rrb(ref, where));
  if (kind == "rrb-rep") return validate_rrb_representation(p.representation(ref, where));
  if (kind == "cocycle") {
    const auto d = p.cocycle(ref, where);
    ValidationReport r = validate_rrb(d.base);
    r.append(validate_rrb(d.kernel));
    if (r.ok()) r.append(validate_nab_cocycle(d.base, d.kernel, d.cocycle));
    return r;
  }
  if (kind == "extension") return validate_extension(p.extension(ref, where));
  if (kind == "cochain") {
    const auto d = p.cochain(ref, where);
    ValidationReport r = validate_rrb_representation(d.rep);
    if (r.ok() && !is_cocycle(d.rep, d.cochain)) r.add("cocycle", {});
    return r;
  }
  if (kind == "hom") {
    const RRBAlgebra src = p.rrb(obj.contains("src") ? obj.at("src") : Json(), where + ".src");
    const RRBAlgebra dst = p.rrb(obj.contains("dst") ? obj.at("dst") : Json(), where + ".dst");
    return validate_hom(p.hom(ref, src, dst, where), src, dst).report;
  }
  if (kind == "derivation") {
    const RRBAlgebra a = p.rrb(obj.contains("algebra") ? obj.at("algebra") : Json(), where + ".algebra");
    const std::size_t ad = a.a_dim(), vd = a.v_dim();
    const DerivationPair d{matrix_from_json(p.field(), obj.at("d_a"), ad, ad, where + ".d_a"),
                           matrix_from_json(p.field(), obj.at("d_v"), vd, vd, where + ".d_v")};
    return validate_derivation(a, d);
  }
  if (kind == "derivation-pair") {
    if (!obj.contains("rep")) fail(ErrorKind::ParseError, where + ": missing field 'rep'");
    const RRBRepresentation rep = p.representation(obj.at("rep"), where + ".rep");
    return g_report(rep, p.derivation_pair(ref, rep, where));
  }
  if (kind == "aut-pair") {
    if (!obj.contains("base") || !obj.contains("kernel")) {
      fail(ErrorKind::ParseError, where + ": missing field 'base' or 'kernel'");
    }
    const RRBAlgebra base = p.rrb(obj.at("base"), where + ".base");
    const RRBAlgebra kernel = p.rrb(obj.at("kernel"), where + ".kernel");
    return validate_aut_pair(base, kernel, p.aut_pair(ref, base, kernel, where));
  }
  fail(ErrorKind::ParseError, where + ": cannot validate objects of kind '" + kind + "'");
}

void cmd_validate(const Problem& p, const Options& o, Report& r) {
  std::vector<std::string> targets;
  if (!o.object.empty()) {
    targets.push_back(o.object);
  } else if (p.task().contains("object")) {
    targets.push_back(task_field(p, "object").get<std::string>());
  } else {
    targets = p.names();
  }
  if (targets.empty()) input_error("nothing to validate");
  bool all = true;
  Json objects = Json::object();
  for (const auto& name : targets) {
    const ValidationReport rep = validate_object(p, name);
    const std::string kind = p.kind(name);
    Json entry{{"kind", kind}, {"verdict", rep.ok() ? "valid" : "invalid"}};
    std::string text = (targets.size() > 1 ? name + ": " : std::string()) + kind + ": ";
    if (rep.ok()) {
      text += "valid";
    } else {
      all = false;
      entry["violation"] = violation_json(*rep.first());
      text += "invalid (" + rep.summary() + ")";
    }
    objects[name] = entry;
    r.line(text);
  }
  r.cert["objects"] = objects;
  r.verdict(all ? "valid" : "invalid", all ? kExitYes : kExitNo);
  if (targets.size() == 1 && !all) r.cert["violation"] = objects[targets[0]]["violation"];
}

void cmd_cohomology(const Problem& p, const Options& o, Report& r) {
  const RRBRepresentation rep = p.representation(task_field(p, "rep"), "task.rep");
  require_valid(validate_rrb_representation(rep), "representation");
  std::size_t n = 2;
  if (o.degree) {
    n = *o.degree;
  } else if (p.task().contains("degree")) {
    const Json& d = p.task().at("degree");
    if (!d.is_number_unsigned()) fail(ErrorKind::ParseError, "task.degree: expected a positive integer");
    n = d.get<std::size_t>();
  }
  const std::size_t h = cohomology_dim(rep, n);
  const std::size_t z = cocycle_space(rep, n).dim();
  r.cert["degree"] = n;
  r.cert["dimensions"] = Json{{"cochains", CochainBasis(rep, n).dim()}, {"cocycles", z}, {"coboundaries", z - h},
                              {"cohomology", h}};
  r.line("dim H^" + std::to_string(n) + " = " + std::to_string(h));
  r.code = kExitYes;
}

void cmd_extend(const Problem& p, const Options&, Report& r) {
  const auto d = p.cocycle(task_field(p, "cocycle"), "task.cocycle");
  require_valid(validate_rrb(d.base), "base");
  require_valid(validate_rrb(d.kernel), "kernel");
  const ValidationReport rep = validate_nab_cocycle(d.base, d.kernel, d.cocycle);
  if (!rep.ok()) {
    r.verdict("invalid", kExitNo);
    r.line("cocycle: invalid");
    add_violation(r, *rep.first());
    return;
  }
  const auto [e, s] = canonical_extension(d.base, d.kernel, d.cocycle);
  if (!validate_extension(e).ok() || !validate_section(e, s).ok() || !(induced_cocycle(e, s) == d.cocycle)) {
    unverified("canonical extension");
  }
  r.verdict("valid", kExitYes);
  r.cert["extension"] = to_json(e);
  r.cert["section"] = to_json(s);
  r.line("extension: valid");
  r.line("total: dim A = " + std::to_string(e.total.a_dim()) + ", dim V = " + std::to_string(e.total.v_dim()));
  r.line("total.ad = " + compact(to_json(e.total.lie.ad)));
  r.line("total.rho = " + compact(to_json(e.total.rep.action)));
  r.line("total.t = " + mat(e.total.t));
}

void cmd_check_cocycle(const Problem& p, const Options&, Report& r) {
  ValidationReport rep;
  if (p.task().contains("cochain")) {
    const auto d = p.cochain(p.task().at("cochain"), "task.cochain");
    require_valid(validate_rrb_representation(d.rep), "representation");
    if (!is_cocycle(d.rep, d.cochain)) rep.add("cocycle", {d.cochain.degree});
  } else {
    const auto d = p.cocycle(task_field(p, "cocycle"), "task.cocycle");
    require_valid(validate_rrb(d.base), "base");
    require_valid(validate_rrb(d.kernel), "kernel");
    rep = validate_nab_cocycle(d.base, d.kernel, d.cocycle);
  }
  if (rep.ok()) {
    r.verdict("valid", kExitYes);
    r.line("cocycle: valid");
  } else {
    r.verdict("invalid", kExitNo);
    r.line("cocycle: invalid");
    add_violation(r, *rep.first());
  }
}

void equivalence_verdict(Report& r, Verdict v) {
  switch (v) {
    case Verdict::Yes: r.verdict("equivalent", kExitYes); break;
    case Verdict::No: r.verdict("not-equivalent", kExitNo); break;
    case Verdict::Unknown: r.verdict("unknown", kExitUnknown); break;
  }
  r.line(std::string("equiv: ") + r.cert["verdict"].get<std::string>());
}

void cmd_equiv(const Problem& p, const Options& o, Report& r) {
  SearchOptions opts = search_options(o);
  if (p.task().contains("cocycles")) {
    const Json& refs = p.task().at("cocycles");
    if (!refs.is_array() || refs.size() != 2) fail(ErrorKind::ParseError, "task.cocycles: expected two cocycles");
    const auto c1 = p.cocycle(refs[0], "task.cocycles[0]");
    const auto c2 = p.cocycle(refs[1], "task.cocycles[1]");
    if (!(c1.base == c2.base) || !(c1.kernel == c2.kernel)) input_error("cocycles over different algebras");
    require_valid(validate_nab_cocycle(c1.base, c1.kernel, c1.cocycle), "first cocycle");
    require_valid(validate_nab_cocycle(c2.base, c2.kernel, c2.cocycle), "second cocycle");
    if (p.task().contains("witness")) {
      opts.witness = p.witness(p.task().at("witness"), c1.base.a_dim(), c1.kernel.a_dim(), c1.base.v_dim(),
                               c1.kernel.v_dim(), "task.witness");
    }
    const EquivalenceResult res = cocycles_equivalent(c1.base, c1.kernel, c1.cocycle, c2.cocycle, opts);
    equivalence_verdict(r, res.verdict);
    if (res.witness) {
      if (!residual_zero(equivalence_residual(c1.base, c1.kernel, c1.cocycle, c2.cocycle, *res.witness))) {
        unverified("equivalence witness");
      }
      add_witness(r, *res.witness);
    }
    if (res.violation) add_violation(r, *res.violation);
    return;
  }
  const Json& refs = task_field(p, "extensions");
  if (!refs.is_array() || refs.size() != 2) fail(ErrorKind::ParseError, "task.extensions: expected two extensions");
  const Extension e1 = p.extension(refs[0], "task.extensions[0]");
  const Extension e2 = p.extension(refs[1], "task.extensions[1]");
  require_valid(validate_extension(e1), "first extension");
  require_valid(validate_extension(e2), "second extension");
  if (!(e1.base == e2.base) || !(e1.kernel == e2.kernel)) input_error("extensions of different algebras");
  std::optional<RRBHom> iso;
  if (p.task().contains("iso")) iso = p.hom(p.task().at("iso"), e1.total, e2.total, "task.iso");
  const ExtensionEquivalence res = extensions_equivalent(e1, e2, iso, opts);
  equivalence_verdict(r, res.verdict);
  if (res.iso) {
    const HomValidation h = validate_hom(*res.iso, e1.total, e2.total);
    if (!h.is_automorphism || !(res.iso->phi * e1.inj.phi == e2.inj.phi) ||
        !(res.iso->psi * e1.inj.psi == e2.inj.psi) || !(e2.proj.phi * res.iso->phi == e1.proj.phi) ||
        !(e2.proj.psi * res.iso->psi == e1.proj.psi)) {
      unverified("extension isomorphism");
    }
    add_hom(r, "iso", *res.iso);
  }
  if (res.witness) add_witness(r, *res.witness);
}

AutPair task_aut_pair(const Problem& p, const Extension& e) {
  const AutPair pair = p.aut_pair(task_field(p, "pair"), e.base, e.kernel, "task.pair");
  require_valid(validate_aut_pair(e.base, e.kernel, pair), "automorphism pair");
  return pair;
}

CoeffDerivationPair task_derivation_pair(const Problem& p, const RRBRepresentation& rep) {
  if (!p.task().contains("pair")) return CoeffDerivationPair::zero(rep);
  return p.derivation_pair(p.task().at("pair"), rep, "task.pair");
}

void cmd_induce_auto(const Problem& p, const Options& o, Report& r) {
  const auto [e, s] = task_extension(p);
  const AutPair pair = task_aut_pair(p, e);
  SearchOptions opts = search_options(o);
  if (p.task().contains("witness")) {
    opts.witness = p.witness(p.task().at("witness"), e.base.a_dim(), e.kernel.a_dim(), e.base.v_dim(),
                             e.kernel.v_dim(), "task.witness");
  }
  const InducibilityResult res = inducible(e, s, pair, opts);
  switch (res.verdict) {
    case Verdict::Yes: r.verdict("inducible", kExitYes); break;
    case Verdict::No: r.verdict("not-inducible", kExitNo); break;
    case Verdict::Unknown: r.verdict("unknown", kExitUnknown); break;
  }
  r.line("induce-auto: " + r.cert["verdict"].get<std::string>());
  if (res.witness) {
    if (!res.gamma || !validate_total_automorphism(e, *res.gamma).ok() || !(restrict(e, s, *res.gamma) == pair)) {
      unverified("induced automorphism");
    }
    add_witness(r, *res.witness);
    add_hom(r, "gamma", *res.gamma);
  }
  if (res.violation) add_violation(r, *res.violation);
}

void cmd_induce_der(const Problem& p, const Options&, Report& r) {
  const auto [e, s] = task_extension(p);
  if (!is_abelian_kernel(e.kernel)) fail(ErrorKind::NotAbelianExtension, "derivation pairs need an abelian kernel");
  const RRBRepresentation rep = extension_representation(e, s);
  const CoeffDerivationPair d = task_derivation_pair(p, rep);
  const DerInducibilityResult res = inducible_der(e, s, d);
  switch (res.verdict) {
    case Verdict::Yes: r.verdict("inducible", kExitYes); break;
    case Verdict::No: r.verdict("not-inducible", kExitNo); break;
    case Verdict::Unknown: r.verdict("unknown", kExitUnknown); break;
  }
  r.line("induce-der: " + r.cert["verdict"].get<std::string>());
  if (res.witness) {
    if (!res.total || !validate_total_derivation(e, *res.total).ok() || !(digamma(e, s, *res.total) == d)) {
      unverified("induced derivation");
    }
    add_witness(r, *res.witness);
    r.cert["witness"]["total"] = Json{{"d_a", to_json(res.total->d_a)}, {"d_v", to_json(res.total->d_v)}};
    r.line("total.d_a = " + mat(res.total->d_a));
    r.line("total.d_v = " + mat(res.total->d_v));
  }
  if (res.violation) add_violation(r, *res.violation);
}

void cmd_wells(const Problem& p, const Options& o, Report& r) {
  const auto [e, s] = task_extension(p);
  const std::string kind = p.task().contains("pair") ? kind_of(p.resolve(p.task().at("pair"), "task.pair")) : "";
  if (kind == "derivation-pair") {
    const RRBRepresentation rep = extension_representation(e, s);
    const CoeffDerivationPair d = task_derivation_pair(p, rep);
    const DerWellsResult res = wells_der(e, s, d);
    r.verdict(res.trivial ? "trivial" : "non-trivial", res.trivial ? kExitYes : kExitNo);
    r.line("wells: " + r.cert["verdict"].get<std::string>());
    r.cert["value"] = to_json(res.value.coords);
    r.line("value = " + compact(to_json(res.value.coords)));
    if (res.preimage) {
      if (!(coboundary(rep, *res.preimage) == res.value)) unverified("Wells preimage");
      r.cert["witness"]["preimage"] = to_json(res.preimage->coords);
      r.line("preimage = " + compact(to_json(res.preimage->coords)));
    }
    return;
  }
  const AutPair pair = task_aut_pair(p, e);
  const WellsResult res = wells_map(e, s, pair, search_options(o));
  switch (res.verdict) {
    case Verdict::Yes: r.verdict("trivial", kExitYes); break;
    case Verdict::No: r.verdict("non-trivial", kExitNo); break;
    case Verdict::Unknown: r.verdict("unknown", kExitUnknown); break;
  }
  r.line("wells: " + r.cert["verdict"].get<std::string>());
  if (res.witness) {
    const NonAbelianCocycle c = induced_cocycle(e, s);
    if (!residual_zero(equivalence_residual(e.base, e.kernel, res.transformed, c, *res.witness))) {
      unverified("Wells witness");
    }
    add_witness(r, *res.witness);
  }
  if (res.violation) add_violation(r, *res.violation);
}

void cmd_exactness(const Problem& p, const Options& o, Report& r) {
  const auto [e, s] = task_extension(p);
  const std::string which =
      p.task().contains("sequence") ? task_field(p, "sequence").get<std::string>() : std::string("auto");
  const std::uint64_t bound = o.bound.value_or(kDefaultSearchBound);
  ValidationReport violations;
  Json counts = Json::object();
  if (which == "auto") {
    const WellsExactnessReport rep = verify_wells_exactness(e, bound);
    counts = Json{{"aut_e", rep.aut_e},     {"kernel_k", rep.kernel_k}, {"z1nab", rep.z1nab},
                  {"pairs", rep.pairs},     {"image_k", rep.image_k},   {"kernel_w", rep.kernel_w}};
    violations = rep.violations;
    r.line("|Aut_B(E)| = " + std::to_string(rep.aut_e));
    r.line("|Ker K| = " + std::to_string(rep.kernel_k));
    r.line("|Z^1_nab| = " + std::to_string(rep.z1nab));
    r.line("|Aut(A) x Aut(B)| = " + std::to_string(rep.pairs));
    r.line("|Im K| = " + std::to_string(rep.image_k));
    r.line("|Ker W| = " + std::to_string(rep.kernel_w));
  } else if (which == "der") {
    const DerExactnessReport rep = verify_der_exactness(e, bound);
    counts = Json{{"dim_z1", rep.dim_z1},
                  {"dim_der_e", rep.dim_der_e},
                  {"dim_kernel_digamma", rep.dim_kernel_digamma},
                  {"dim_g", rep.dim_g},
                  {"dim_image_digamma", rep.dim_image_digamma},
                  {"dim_kernel_w", rep.dim_kernel_w}};
    if (rep.enumerated_der_e) counts["enumerated_der_e"] = *rep.enumerated_der_e;
    violations = rep.violations;
    r.line("dim Z^1 = " + std::to_string(rep.dim_z1));
    r.line("dim Der_B(E) = " + std::to_string(rep.dim_der_e));
    r.line("dim Ker = " + std::to_string(rep.dim_kernel_digamma));
    r.line("dim g = " + std::to_string(rep.dim_g));
    r.line("dim Im = " + std::to_string(rep.dim_image_digamma));
    r.line("dim Ker W = " + std::to_string(rep.dim_kernel_w));
  } else {
    fail(ErrorKind::ParseError, "task.sequence: expected \"auto\" or \"der\"");
  }
  r.cert["sequence"] = which;
  r.cert["counts"] = counts;
  r.lines.insert(r.lines.begin(), "exactness (" + which + "): " + (violations.ok() ? "valid" : "invalid"));
  r.verdict(violations.ok() ? "valid" : "invalid", violations.ok() ? kExitYes : kExitNo);
  if (!violations.ok()) add_violation(r, *violations.first());
}

using Handler = void (*)(const Problem&, const Options&, Report&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"validate", cmd_validate},       {"cohomology", cmd_cohomology}, {"extend", cmd_extend},
      {"check-cocycle", cmd_check_cocycle}, {"equiv", cmd_equiv},     {"induce-auto", cmd_induce_auto},
      {"induce-der", cmd_induce_der},   {"wells", cmd_wells},           {"exactness", cmd_exactness}};
  return table;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact decision procedures for relative Rota-Baxter Lie algebras", "rrbx"};
  app.require_subcommand(1);
  Options o;
  for (const auto& [name, h] : handlers()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--input", o.input, "problem file (JSON)")->required();
    sub->add_option("--mode", o.mode)->check(CLI::IsMember({"verify", "search", "linear"}));
    sub->add_option("--bound", o.bound, "search bound");
    sub->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--degree", o.degree);
    sub->add_option("--object", o.object, "validate a single named object");
    sub->callback([&o, n = name] { o.command = n; });
  }

  std::vector<std::string> argv_store{"rrbx"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitYes;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  Report r;
  try {
    const Problem problem = Problem::load(o.input);
    r.cert["command"] = o.command;
    handlers().at(o.command)(problem, o, r);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::BoundExceeded) {
      r = Report{};
      r.cert["command"] = o.command;
      r.cert["reason"] = e.what();
      r.verdict("unknown", kExitUnknown);
      r.line(std::string("unknown (") + e.what() + ")");
      return emit(r, o.format, out);
    }
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Json::exception& e) {
    err << "error: ParseError: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }

  return emit(r, o.format, out);
}

}  // namespace rrbx::cli
