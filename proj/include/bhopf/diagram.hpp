#pragma once

/// A small textual language for string diagrams.
///
///   expr    := seq
///   seq     := ten (";" ten)*          top to bottom: "a ; b" means b∘a
///   ten     := atom ("*" atom)*        horizontal juxtaposition
///   atom    := NAME | "id(" objlist ")" | "(" expr ")"
///   objlist := NAME ("," NAME)* | ε
///
/// Whitespace is insignificant and NAME is [A-Za-z_][A-Za-z0-9_]*, with "id"
/// reserved. Both binary operators associate to the left.

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bhopf/composite.hpp"
#include "bhopf/errors.hpp"
#include "bhopf/morphism.hpp"
#include "bhopf/report.hpp"

namespace bhopf::diagram {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;
using ObjectString = std::vector<std::string>;

struct GenNode {
  std::string name;
};
struct IdNode {
  ObjectString objects;
};
struct TensorNode {
  ExprPtr left, right;
};
struct SeqNode {
  ExprPtr top, bottom;
};

struct Expr {
  std::variant<GenNode, IdNode, TensorNode, SeqNode> node;
};

/// Structural equality.
bool operator==(const Expr& a, const Expr& b);

ExprPtr gen(std::string name);
ExprPtr id(ObjectString objects);
ExprPtr tensor(ExprPtr left, ExprPtr right);
ExprPtr seq(ExprPtr top, ExprPtr bottom);

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class TypeError : public Error {
 public:
  using Error::Error;
};

class BoundaryMismatch : public Error {
 public:
  using Error::Error;
};

ExprPtr parse(std::string_view text);
/// Canonical text: minimal parentheses, " ; " and " * " separators.
/// parse(print(e)) == e for every tree.
std::string print(const Expr& e);

struct Generator {
  ObjectString dom;
  ObjectString cod;
  Morphism matrix;
};

class Environment {
 public:
  explicit Environment(FieldSpec field) : field_(field) {}

  /// Throws FormatError on a duplicate id.
  void add_object(const std::string& id, std::size_t dim);
  /// Throws FormatError on a duplicate or reserved name, TypeError on unknown
  /// objects, DimensionMismatch if the matrix does not fit its boundary.
  void add_generator(const std::string& name, ObjectString dom, ObjectString cod, Morphism matrix);

  const FieldSpec& field() const { return field_; }
  const std::vector<std::pair<std::string, std::size_t>>& objects() const { return objects_; }
  const std::map<std::string, Generator>& generators() const { return generators_; }

  /// Throws TypeError for unknown ids.
  std::size_t dim(const std::string& id) const;
  std::size_t dim(const ObjectString& s) const;
  std::vector<std::size_t> dims(const ObjectString& s) const;
  const Generator& generator(const std::string& name) const;
  const Composite& compiled(const std::string& name) const;

 private:
  FieldSpec field_;
  std::vector<std::pair<std::string, std::size_t>> objects_;
  std::map<std::string, Generator> generators_;
  std::map<std::string, Composite> compiled_;
};

struct Boundary {
  ObjectString dom;
  ObjectString cod;
  friend bool operator==(const Boundary&, const Boundary&) = default;
};

/// Throws TypeError naming the mismatched boundary.
Boundary typecheck(const Expr& e, const Environment& env);
/// Factored evaluation, for comparing diagrams whose internal wires are large.
Composite compile(const Expr& e, const Environment& env);
/// Gen ↦ matrix, Id ↦ identity, Tensor ↦ Kronecker product, Seq(a, b) ↦ b∘a.
Morphism evaluate(const Expr& e, const Environment& env);
/// Exact equality of two diagrams with equal boundaries; throws
/// BoundaryMismatch otherwise. Witness is a basis tuple of the domain wires.
CheckReport check_equal(const Expr& lhs, const Expr& rhs, const Environment& env);

std::string to_string(const ObjectString& s);

}  // namespace bhopf::diagram
