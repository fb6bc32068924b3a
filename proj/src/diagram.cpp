#include "bhopf/diagram.hpp"

#include <cctype>
#include <optional>

namespace bhopf::diagram {

bool operator==(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, GenNode>) return x.name == y.name;
        if constexpr (std::is_same_v<T, IdNode>) return x.objects == y.objects;
        if constexpr (std::is_same_v<T, TensorNode>) return *x.left == *y.left && *x.right == *y.right;
        if constexpr (std::is_same_v<T, SeqNode>) return *x.top == *y.top && *x.bottom == *y.bottom;
      },
      a.node);
}

ExprPtr gen(std::string name) { return std::make_shared<const Expr>(Expr{GenNode{std::move(name)}}); }
ExprPtr id(ObjectString objects) { return std::make_shared<const Expr>(Expr{IdNode{std::move(objects)}}); }
ExprPtr tensor(ExprPtr left, ExprPtr right) {
  return std::make_shared<const Expr>(Expr{TensorNode{std::move(left), std::move(right)}});
}
ExprPtr seq(ExprPtr top, ExprPtr bottom) {
  return std::make_shared<const Expr>(Expr{SeqNode{std::move(top), std::move(bottom)}});
}

SyntaxError::SyntaxError(const std::string& what, std::size_t offset)
    : Error("syntax error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr run() {
    auto e = parse_seq();
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw SyntaxError(std::string("expected '") + c + "'", pos_);
  }

  std::optional<std::string> name() {
    skip_space();
    auto start = pos_;
    auto is_head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto is_tail = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    if (pos_ >= text_.size() || !is_head(text_[pos_])) return std::nullopt;
    while (pos_ < text_.size() && is_tail(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  ExprPtr parse_seq() {
    auto e = parse_ten();
    while (accept(';')) e = seq(e, parse_ten());
    return e;
  }

  ExprPtr parse_ten() {
    auto e = parse_atom();
    while (accept('*')) e = tensor(e, parse_atom());
    return e;
  }

  ExprPtr parse_atom() {
    skip_space();
    const auto start = pos_;
    if (accept('(')) {
      auto e = parse_seq();
      expect(')');
      return e;
    }
    auto n = name();
    if (!n) throw SyntaxError(pos_ < text_.size() ? "expected a diagram" : "unexpected end of input", pos_);
    if (*n != "id") return gen(*n);
    if (!accept('(')) throw SyntaxError("\"id\" must be followed by '('", start);
    ObjectString objects;
    if (!accept(')')) {
      do {
        auto o = name();
        if (!o) throw SyntaxError("expected an object name", pos_);
        objects.push_back(*o);
      } while (accept(','));
      expect(')');
    }
    return id(std::move(objects));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

enum class Level { Seq, Ten, Atom };

std::string print_at(const Expr& e, Level level) {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, GenNode>) {
          return x.name;
        } else if constexpr (std::is_same_v<T, IdNode>) {
          std::string out = "id(";
          for (std::size_t k = 0; k < x.objects.size(); ++k) out += (k ? "," : "") + x.objects[k];
          return out + ")";
        } else if constexpr (std::is_same_v<T, TensorNode>) {
          auto s = print_at(*x.left, Level::Ten) + " * " + print_at(*x.right, Level::Atom);
          return level == Level::Atom ? "(" + s + ")" : s;
        } else {
          auto s = print_at(*x.top, Level::Seq) + " ; " + print_at(*x.bottom, Level::Ten);
          return level == Level::Seq ? s : "(" + s + ")";
        }
      },
      e.node);
}

ObjectString concat(ObjectString a, const ObjectString& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).run(); }

std::string print(const Expr& e) { return print_at(e, Level::Seq); }

std::string to_string(const ObjectString& s) {
  std::string out = "(";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + s[k];
  return out + ")";
}

void Environment::add_object(const std::string& id, std::size_t dim) {
  for (const auto& [name, d] : objects_)
    if (name == id) throw FormatError("duplicate object \"" + id + "\"");
  objects_.emplace_back(id, dim);
}

void Environment::add_generator(const std::string& name, ObjectString dom, ObjectString cod, Morphism matrix) {
  if (name == "id") throw FormatError("generator name \"id\" is reserved");
  if (generators_.contains(name)) throw FormatError("duplicate generator \"" + name + "\"");
  if (matrix.field() != field_) throw FieldMismatch("generator " + name + " is over " + matrix.field().name());
  if (matrix.dom() != dim(dom) || matrix.cod() != dim(cod))
    throw DimensionMismatch("generator " + name + " matrix does not fit " + to_string(dom) + " -> " +
                            to_string(cod));
  compiled_.emplace(name, Composite(matrix));
  generators_.emplace(name, Generator{std::move(dom), std::move(cod), std::move(matrix)});
}

std::size_t Environment::dim(const std::string& id) const {
  for (const auto& [name, d] : objects_)
    if (name == id) return d;
  throw TypeError("unknown object \"" + id + "\"");
}

std::size_t Environment::dim(const ObjectString& s) const {
  std::size_t d = 1;
  for (const auto& id : s) d *= dim(id);
  return d;
}

std::vector<std::size_t> Environment::dims(const ObjectString& s) const {
  std::vector<std::size_t> out;
  for (const auto& id : s) out.push_back(dim(id));
  return out;
}

const Generator& Environment::generator(const std::string& name) const {
  auto it = generators_.find(name);
  if (it == generators_.end()) throw TypeError("unknown generator \"" + name + "\"");
  return it->second;
}

const Composite& Environment::compiled(const std::string& name) const {
  generator(name);
  return compiled_.at(name);
}

Boundary typecheck(const Expr& e, const Environment& env) {
  return std::visit(
      [&](const auto& x) -> Boundary {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, GenNode>) {
          const auto& g = env.generator(x.name);
          return {g.dom, g.cod};
        } else if constexpr (std::is_same_v<T, IdNode>) {
          env.dim(x.objects);
          return {x.objects, x.objects};
        } else if constexpr (std::is_same_v<T, TensorNode>) {
          auto a = typecheck(*x.left, env), b = typecheck(*x.right, env);
          return {concat(a.dom, b.dom), concat(a.cod, b.cod)};
        } else {
          auto top = typecheck(*x.top, env), bottom = typecheck(*x.bottom, env);
          if (top.cod != bottom.dom)
            throw TypeError("boundary mismatch at ';': " + to_string(top.cod) + " above, " + to_string(bottom.dom) +
                            " below");
          return {top.dom, bottom.cod};
        }
      },
      e.node);
}

namespace {

Composite compile_checked(const Expr& e, const Environment& env) {
  return std::visit(
      [&](const auto& x) -> Composite {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, GenNode>)
          return env.compiled(x.name);
        else if constexpr (std::is_same_v<T, IdNode>)
          return Composite::identity(env.field(), env.dim(x.objects));
        else if constexpr (std::is_same_v<T, TensorNode>)
          return bhopf::tensor(compile_checked(*x.left, env), compile_checked(*x.right, env));
        else
          return compile_checked(*x.top, env).then(compile_checked(*x.bottom, env));
      },
      e.node);
}

}  // namespace

Composite compile(const Expr& e, const Environment& env) {
  typecheck(e, env);
  return compile_checked(e, env);
}

Morphism evaluate(const Expr& e, const Environment& env) { return compile(e, env).to_morphism(); }

CheckReport check_equal(const Expr& lhs, const Expr& rhs, const Environment& env) {
  auto a = typecheck(lhs, env), b = typecheck(rhs, env);
  if (a != b)
    throw BoundaryMismatch("diagrams have boundaries " + to_string(a.dom) + " -> " + to_string(a.cod) + " and " +
                           to_string(b.dom) + " -> " + to_string(b.cod));
  CheckReport report;
  report.add_equation("equal", compile(lhs, env), compile(rhs, env), env.dims(a.dom));
  return report;
}

}  // namespace bhopf::diagram
