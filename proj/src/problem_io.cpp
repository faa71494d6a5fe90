#include "rrbx/problem_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace rrbx {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  fail(ErrorKind::ParseError, where + ": " + what);
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) bad(where, std::string("missing field '") + key + "'");
  return obj.at(key);
}

std::size_t count_field(const Json& obj, const char* key, const std::string& where) {
  const Json& j = member(obj, key, where);
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    bad(where + "." + key, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

Scalar scalar_from_json(Field f, const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar(f, j.get<long long>());
  if (j.is_string()) {
    try {
      return Scalar::parse(f, j.get<std::string>());
    } catch (const Error& e) {
      bad(where, e.what());
    }
  }
  bad(where, "expected an integer or a \"p/q\" string");
}

std::vector<Matrix> matrices_from_json(Field f, const Json& obj, const char* key, std::size_t count, std::size_t rows,
                                       std::size_t cols, const std::string& where) {
  const std::string at = where + "." + key;
  if (!obj.contains(key)) return std::vector<Matrix>(count, Matrix(f, rows, cols));
  const Json& arr = obj.at(key);
  if (!arr.is_array() || arr.size() != count) bad(at, "expected " + std::to_string(count) + " matrices");
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(matrix_from_json(f, arr[i], rows, cols, at + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Matrix optional_matrix(Field f, const Json& obj, const char* key, std::size_t rows, std::size_t cols,
                       const std::string& where) {
  if (!obj.contains(key)) return Matrix(f, rows, cols);
  return matrix_from_json(f, obj.at(key), rows, cols, where + "." + key);
}

/// Bilinear map stored as one matrix per left basis vector: column j is f(e_i, e_j).
BilinearMap bilinear_from_json(Field f, const Json& obj, const char* key, std::size_t left, std::size_t right,
                               std::size_t out_dim, const std::string& where) {
  const auto mats = matrices_from_json(f, obj, key, left, out_dim, right, where);
  BilinearMap b(f, left, right, out_dim);
  for (std::size_t i = 0; i < left; ++i)
    for (std::size_t j = 0; j < right; ++j) b.at(i, j) = mats[i].col(j);
  return b;
}

Json bilinear_to_json(const BilinearMap& b) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < b.left_dim(); ++i) {
    Matrix m(b.field(), b.out_dim(), b.right_dim());
    for (std::size_t j = 0; j < b.right_dim(); ++j) m.set_col(j, b.at(i, j));
    arr.push_back(to_json(m));
  }
  return arr;
}

void expect_kind(const Json& obj, const char* kind, const std::string& where) {
  if (obj.is_object() && obj.contains("kind")) {
    if (!obj.at("kind").is_string() || obj.at("kind").get<std::string>() != kind) {
      bad(where, std::string("expected an object of kind '") + kind + "'");
    }
  }
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

}  // namespace

// ---------------------------------------------------------------- serialization

Json to_json(const Scalar& s) {
  if (s.field().is_finite()) return s.residue();
  const mpq_class& q = s.rational();
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

Json to_json(const Vector& v) {
  Json arr = Json::array();
  for (const auto& s : v) arr.push_back(to_json(s));
  return arr;
}

Json to_json(const Matrix& m) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) arr.push_back(to_json(m.row(i)));
  return arr;
}

Json to_json(const std::vector<Matrix>& ms) {
  Json arr = Json::array();
  for (const auto& m : ms) arr.push_back(to_json(m));
  return arr;
}

Json to_json(const RRBAlgebra& a) {
  return Json{{"kind", "rrb"},         {"a_dim", a.a_dim()},  {"v_dim", a.v_dim()},
              {"ad", to_json(a.lie.ad)}, {"rho", to_json(a.rep.action)}, {"t", to_json(a.t)}};
}

Json to_json(const RRBRepresentation& r) {
  return Json{{"kind", "rrb-rep"},        {"base", to_json(r.base)},       {"b_dim", r.b_dim},
              {"m_dim", r.m_dim},         {"s", to_json(r.s)},             {"rho_b", to_json(r.rho_b)},
              {"rho_m", to_json(r.rho_m)}, {"mu", to_json(r.mu)}};
}

Json to_json(const RRBHom& h) { return Json{{"kind", "hom"}, {"phi", to_json(h.phi)}, {"psi", to_json(h.psi)}}; }

Json to_json(const NonAbelianCocycle& c, const Json& base, const Json& kernel) {
  return Json{{"kind", "cocycle"},
              {"base", base},
              {"kernel", kernel},
              {"omega", bilinear_to_json(c.omega)},
              {"varpi", bilinear_to_json(c.varpi)},
              {"chi", to_json(c.chi)},
              {"mu", to_json(c.mu)},
              {"rho_b", to_json(c.rho_b)},
              {"rho_m", to_json(c.rho_m)}};
}

Json to_json(const Extension& e) {
  Json inj = to_json(e.inj);
  Json proj = to_json(e.proj);
  inj.erase("kind");
  proj.erase("kind");
  return Json{{"kind", "extension"},      {"base", to_json(e.base)}, {"kernel", to_json(e.kernel)},
              {"total", to_json(e.total)}, {"inj", inj},              {"proj", proj}};
}

Json to_json(const Section& s) {
  return Json{{"kind", "section"}, {"s_alg", to_json(s.s_alg)}, {"s_mod", to_json(s.s_mod)}};
}

Json to_json(const EquivalenceWitness& w) {
  return Json{{"kind", "witness"}, {"zeta", to_json(w.zeta)}, {"eta", to_json(w.eta)}};
}

Json to_json(const AutPair& p) {
  Json a = to_json(p.alpha);
  Json b = to_json(p.beta);
  a.erase("kind");
  b.erase("kind");
  return Json{{"kind", "aut-pair"}, {"alpha", a}, {"beta", b}};
}

Json to_json(const CoeffDerivationPair& d) {
  return Json{{"kind", "derivation-pair"},     {"d_a", to_json(d.d_aa.d_a)}, {"d_v", to_json(d.d_aa.d_v)},
              {"d_b", to_json(d.d_b)}, {"d_m", to_json(d.d_m)}};
}

Json to_json(const DerivationPair& d) {
  return Json{{"kind", "derivation"}, {"d_a", to_json(d.d_a)}, {"d_v", to_json(d.d_v)}};
}

Json to_json(const Cochain& c, const Json& rep) {
  return Json{{"kind", "cochain"}, {"rep", rep}, {"degree", c.degree}, {"coords", to_json(c.coords)}};
}

Json to_json(const Violation& v) {
  Json j{{"tag", v.tag}, {"indices", v.indices}};
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

namespace {

bool has_object(const Json& j) {
  if (j.is_object()) return true;
  if (j.is_array())
    for (const auto& x : j)
      if (has_object(x)) return true;
  return false;
}

void dump_into(const Json& j, std::size_t indent, std::string& out) {
  if (!has_object(j)) {
    out += j.dump();
    return;
  }
  const std::string pad(indent + 2, ' ');
  const bool obj = j.is_object();
  out += obj ? "{" : "[";
  if (j.empty()) {
    out += obj ? "}" : "]";
    return;
  }
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    out += first ? "\n" : ",\n";
    first = false;
    out += pad;
    if (obj) out += Json(it.key()).dump() + ": ";
    dump_into(*it, indent + 2, out);
  }
  out += "\n" + std::string(indent, ' ') + (obj ? "}" : "]");
}

}  // namespace

std::string dump_canonical(const Json& j) {
  std::string out;
  dump_into(j, 0, out);
  return out + "\n";
}

// ---------------------------------------------------------------- parsing

Vector vector_from_json(Field f, const Json& j, std::size_t size, const std::string& where) {
  if (!j.is_array() || j.size() != size) bad(where, "expected a vector of length " + std::to_string(size));
  std::vector<Scalar> entries;
  for (std::size_t i = 0; i < size; ++i) {
    entries.push_back(scalar_from_json(f, j[i], where + "[" + std::to_string(i) + "]"));
  }
  return Vector(f, std::move(entries));
}

Matrix matrix_from_json(Field f, const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows) {
    bad(where, "expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
  }
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) m.set_row(i, vector_from_json(f, j[i], cols, where + "[" + std::to_string(i) + "]"));
  return m;
}

Problem Problem::parse(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::ParseError, "line " + std::to_string(line_of(text, e.byte)) + ": malformed JSON");
  }
  return from_json(std::move(doc));
}

Problem Problem::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

Problem Problem::from_json(Json doc) {
  if (!doc.is_object()) bad("document", "expected a JSON object");
  if (doc.contains("version") && (!doc.at("version").is_number_integer() || doc.at("version").get<int>() != kFormatVersion)) {
    bad("version", "unsupported format version");
  }
  Problem p;
  const Json& f = member(doc, "field", "document");
  if (!f.is_string()) bad("field", "expected a string such as \"Q\" or \"F_5\"");
  try {
    p.field_ = Field::parse(f.get<std::string>());
  } catch (const Error& e) {
    bad("field", e.what());
  }
  if (doc.contains("objects") && !doc.at("objects").is_object()) bad("objects", "expected an object");
  if (!doc.contains("objects")) doc["objects"] = Json::object();
  p.task_ = doc.contains("task") ? doc.at("task") : Json::object();
  if (!p.task_.is_object()) bad("task", "expected an object");
  p.doc_ = std::move(doc);
  return p;
}

std::vector<std::string> Problem::names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : doc_.at("objects").items()) out.push_back(k);
  return out;
}

bool Problem::has(const std::string& name) const { return doc_.at("objects").contains(name); }

std::string Problem::kind(const std::string& name) const {
  const std::string where = "objects." + name;
  if (!has(name)) bad(where, "no such object");
  const Json& k = member(doc_.at("objects").at(name), "kind", where);
  if (!k.is_string()) bad(where + ".kind", "expected a string");
  return k.get<std::string>();
}

const Json& Problem::resolve(const Json& ref, const std::string& where) const {
  if (ref.is_string()) {
    const std::string name = ref.get<std::string>();
    if (!has(name)) bad(where, "unknown object '" + name + "'");
    return doc_.at("objects").at(name);
  }
  if (!ref.is_object()) bad(where, "expected an object or the name of one");
  return ref;
}

RRBAlgebra Problem::rrb(const Json& ref, const std::string& where) const {
  const Json& o = resolve(ref, where);
  expect_kind(o, "rrb", where);
  const Field f = field_;
  const std::size_t a = count_field(o, "a_dim", where), v = count_field(o, "v_dim", where);
  RRBAlgebra out{LieAlgebra{f, a, matrices_from_json(f, o, "ad", a, a, a, where)},
                 Representation{f, v, matrices_from_json(f, o, "rho", a, v, v, where)},
                 optional_matrix(f, o, "t", a, v, where)};
  return out;
}

RRBRepresentation Problem::representation(const Json& ref, const std::string& where) const {
  const Json& o = resolve(ref, where);
  expect_kind(o, "rrb-rep", where);
  const Field f = field_;
  RRBAlgebra base = rrb(member(o, "base", where), where + ".base");
  const std::size_t a = base.a_dim(), v = base.v_dim();
  const std::size_t b = count_field(o, "b_dim", where), m = count_field(o, "m_dim", where);
  RRBRepresentation r{std::move(base), b, m, optional_matrix(f, o, "s", b, m, where), {}, {}, {}};
  r.rho_b = matrices_from_json(f, o, "rho_b", a, b, b, where);
  r.rho_m = matrices_from_json(f, o, "rho_m", a, m, m, where);
  r.mu = matrices_from_json(f, o, "mu", v, m, b, where);
  return r;
}

Problem::CocycleData Problem::cocycle(const Json& ref, const std::string& where) const {
  const Json& o = resolve(ref, where);
  expect_kind(o, "cocycle", where);
  const Field f = field_;
  RRBAlgebra base = rrb(member(o, "base", where), where + ".base");
  RRBAlgebra kernel = rrb(member(o, "kernel", where), where + ".kernel");
  const std::size_t a = base.a_dim(), v = base.v_dim(), b = kernel.a_dim(), m = kernel.v_dim();
  NonAbelianCocycle c{bilinear_from_json(f, o, "omega", a, a, b, where),
                      bilinear_from_json(f, o, "varpi", a, v, m, where),
                      optional_matrix(f, o, "chi", b, v, where),
                      matrices_from_json(f, o, "mu", v, m, b, where),
                      matrices_from_json(f, o, "rho_b", a, b, b, where),
                      matrices_from_json(f, o, "rho_m", a, m, m, where)};
  return CocycleData{std::move(base), std::move(kernel), std::move(c)};
}

Extension Problem::extension(const Json& ref, const std::string& where) const {
  const Json& o = resolve(ref, where);
  expect_kind(o, "extension", where);
  if (o.contains("cocycle")) {
    const CocycleData d = cocycle(o.at("cocycle"), where + ".cocycle");
    return canonical_extension(d.base, d.kernel, d.cocycle).first;
  }
  RRBAlgebra base = rrb(member(o, "base", where), where + ".base");
  RRBAlgebra kernel = rrb(member(o, "kernel", where), where + ".kernel");
  RRBAlgebra total = rrb(member(o, "total", where), where + ".total");
  Extension e{std::move(base), std::move(kernel), std::move(total), {}, {}};
  e.inj = hom(member(o, "inj", where), e.kernel, e.total, where + ".inj");
  e.proj = hom(member(o, "proj", where), e.total, e.base, where + ".proj");
  return e;
}

Section Problem::section(const Json& ref, const Extension& e, const std::string& where) const {
  const Json& o = resolve(ref, where);
  expect_kind(o, "section", where);
  return Section{matrix_from_json(field_, member(o, "s_alg", where), e.total.a_dim(), e.base.a_dim(), where + ".s_alg"),
                 matrix_from_json(field_, member(o, "s_mod", where), e.total.v_dim(), e.base.v_dim(), where + ".s_mod")};
}

RRBHom Problem::hom(const Json& ref, const RRBAlgebra& src, const RRBAlgebra& dst, const std::string& where) const {
  const Json& o = resolve(ref, where);
  expect_kind(o, "hom", where);
  return RRBHom{matrix_from_json(field_, member(o, "phi", where), dst.a_dim(), src.a_dim(), where + ".phi"),
                matrix_from_json(field_, member(o, "psi", where), dst.v_dim(), src.v_dim(), where + ".psi")};
}

AutPair Problem::aut_pair(const Json& ref, const RRBAlgebra& base, const RRBAlgebra& kernel,
                          const std::string& where) const {
  const Json& o = resolve(ref, where);
  expect_kind(o, "aut-pair", where);
  return AutPair{hom(member(o, "alpha", where), base, base, where + ".alpha"),
                 hom(member(o, "beta", where), kernel, kernel, where + ".beta")};
}

CoeffDerivationPair Problem::derivation_pair(const Json& ref, const RRBRepresentation& rep,
                                             const std::string& where) const {
  const Json& o = resolve(ref, where);
  expect_kind(o, "derivation-pair", where);
  const Field f = field_;
  const std::size_t a = rep.base.a_dim(), v = rep.base.v_dim();
  return CoeffDerivationPair{DerivationPair{optional_matrix(f, o, "d_a", a, a, where), optional_matrix(f, o, "d_v", v, v, where)},
                             optional_matrix(f, o, "d_b", rep.b_dim, rep.b_dim, where),
                             optional_matrix(f, o, "d_m", rep.m_dim, rep.m_dim, where)};
}

EquivalenceWitness Problem::witness(const Json& ref, std::size_t a, std::size_t b, std::size_t v, std::size_t m,
                                    const std::string& where) const {
  const Json& o = resolve(ref, where);
  expect_kind(o, "witness", where);
  return EquivalenceWitness{optional_matrix(field_, o, "zeta", b, a, where), optional_matrix(field_, o, "eta", m, v, where)};
}

Problem::CochainData Problem::cochain(const Json& ref, const std::string& where) const {
  const Json& o = resolve(ref, where);
  expect_kind(o, "cochain", where);
  RRBRepresentation rep = representation(member(o, "rep", where), where + ".rep");
  const std::size_t degree = count_field(o, "degree", where);
  if (degree == 0 || degree > kDefaultDegreeBound) bad(where + ".degree", "degree out of range");
  const std::size_t n = CochainBasis(rep, degree).dim();
  Vector coords = o.contains("coords") ? vector_from_json(field_, o.at("coords"), n, where + ".coords") : Vector(field_, n);
  return CochainData{std::move(rep), Cochain{degree, std::move(coords)}};
}

}  // namespace rrbx
