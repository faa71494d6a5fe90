#pragma once

// JSON problem files: a field, named objects and a task block. Matrices are
// row-major arrays whose entries are integers or "p/q" strings. Any object
// field that refers to another object accepts either its name or an inline
// object.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rrbx/extensions.hpp"
#include "rrbx/inducibility_auto.hpp"
#include "rrbx/inducibility_der.hpp"

namespace rrbx {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

Json to_json(const Scalar& s);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const std::vector<Matrix>& ms);
Json to_json(const RRBAlgebra& a);
Json to_json(const RRBRepresentation& r);
Json to_json(const RRBHom& h);
Json to_json(const NonAbelianCocycle& c, const Json& base, const Json& kernel);
Json to_json(const Extension& e);
Json to_json(const Section& s);
Json to_json(const EquivalenceWitness& w);
Json to_json(const AutPair& p);
Json to_json(const CoeffDerivationPair& d);
Json to_json(const DerivationPair& d);
Json to_json(const Cochain& c, const Json& rep);
Json to_json(const Violation& v);

/// Canonical text: sorted keys, two-space indent, arrays without objects on one line.
std::string dump_canonical(const Json& j);

Vector vector_from_json(Field f, const Json& j, std::size_t size, const std::string& where);
Matrix matrix_from_json(Field f, const Json& j, std::size_t rows, std::size_t cols, const std::string& where);

class Problem {
 public:
  static Problem parse(std::string_view text);
  static Problem load(const std::string& path);
  static Problem from_json(Json doc);

  [[nodiscard]] Field field() const { return field_; }
  [[nodiscard]] const Json& task() const { return task_; }
  [[nodiscard]] const Json& document() const { return doc_; }
  [[nodiscard]] std::vector<std::string> names() const;
  [[nodiscard]] bool has(const std::string& name) const;
  [[nodiscard]] std::string kind(const std::string& name) const;

  /// Resolves a reference: a string names an object, anything else is inline.
  [[nodiscard]] const Json& resolve(const Json& ref, const std::string& where) const;

  [[nodiscard]] RRBAlgebra rrb(const Json& ref, const std::string& where) const;
  [[nodiscard]] RRBRepresentation representation(const Json& ref, const std::string& where) const;

  struct CocycleData {
    RRBAlgebra base;
    RRBAlgebra kernel;
    NonAbelianCocycle cocycle;
  };
  [[nodiscard]] CocycleData cocycle(const Json& ref, const std::string& where) const;
  [[nodiscard]] Extension extension(const Json& ref, const std::string& where) const;
  [[nodiscard]] Section section(const Json& ref, const Extension& e, const std::string& where) const;
  [[nodiscard]] RRBHom hom(const Json& ref, const RRBAlgebra& src, const RRBAlgebra& dst,
                           const std::string& where) const;
  [[nodiscard]] AutPair aut_pair(const Json& ref, const RRBAlgebra& base, const RRBAlgebra& kernel,
                                 const std::string& where) const;
  [[nodiscard]] CoeffDerivationPair derivation_pair(const Json& ref, const RRBRepresentation& rep,
                                                    const std::string& where) const;
  [[nodiscard]] EquivalenceWitness witness(const Json& ref, std::size_t a, std::size_t b, std::size_t v,
                                           std::size_t m, const std::string& where) const;

  struct CochainData {
    RRBRepresentation rep;
    Cochain cochain;
  };
  [[nodiscard]] CochainData cochain(const Json& ref, const std::string& where) const;

 private:
  Field field_;
  Json doc_;
  Json task_;
};

}  // namespace rrbx
