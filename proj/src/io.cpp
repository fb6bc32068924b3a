#include "bhopf/io.hpp"

#include <fstream>
#include <sstream>

namespace bhopf::io {

namespace {

// Runs a loader, turning nlohmann type/range errors into FormatError.
template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed ") + what + ": " + e.what());
  }
}

std::vector<std::string> strings(const json& j) { return j.get<std::vector<std::string>>(); }

}  // namespace

FieldSpec optional_field(const json& j) {
  return j.contains("field") ? field_from_json(j.at("field")) : FieldSpec::rationals();
}

json field_to_json(const FieldSpec& field) {
  if (field.is_prime()) return {{"kind", "Fp"}, {"p", field.modulus()}};
  return {{"kind", "Q"}};
}

FieldSpec field_from_json(const json& j) {
  return guarded("field", [&] {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "Q") return FieldSpec::rationals();
    if (kind == "Fp") return FieldSpec::prime(j.at("p").get<std::int64_t>());
    throw FormatError("unknown field kind \"" + kind + "\"");
  });
}

json matrix_to_json(const Morphism& m) {
  json rows = json::array();
  for (const auto& row : m.to_rows()) rows.push_back(row);
  return rows;
}

Morphism matrix_from_json(const json& j, const FieldSpec& field, std::size_t dom, std::size_t cod) {
  return guarded("matrix", [&] {
    if (!j.is_array() || j.size() != cod)
      throw FormatError("matrix must have " + std::to_string(cod) + " rows of " + std::to_string(dom) + " entries");
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : j) {
      if (!row.is_array() || row.size() != dom)
        throw FormatError("matrix must have " + std::to_string(cod) + " rows of " + std::to_string(dom) +
                          " entries");
      rows.push_back(strings(row));
    }
    return Morphism::parse_rows(field, rows, dom);
  });
}

json bundle_to_json(const HopfBundle& b) {
  json j{{"field", field_to_json(b.field())},
         {"dim", b.dim()},
         {"basis", b.basis()},
         {"mu", matrix_to_json(b.mu())},
         {"eta", matrix_to_json(b.eta())},
         {"delta", matrix_to_json(b.delta())},
         {"eps", matrix_to_json(b.eps())},
         {"braid", matrix_to_json(b.braid())}};
  if (b.antipode()) j["antipode"] = matrix_to_json(*b.antipode());
  return j;
}

HopfBundle bundle_from_json(const json& j) {
  return guarded("bundle", [&] {
    const auto field = field_from_json(j.at("field"));
    const auto n = j.at("dim").get<std::size_t>();
    auto basis = strings(j.at("basis"));
    if (basis.size() != n) throw FormatError("basis must list " + std::to_string(n) + " labels");
    std::optional<Morphism> antipode;
    if (j.contains("antipode")) antipode = matrix_from_json(j.at("antipode"), field, n, n);
    return HopfBundle(field, std::move(basis), matrix_from_json(j.at("mu"), field, n * n, n),
                      matrix_from_json(j.at("eta"), field, 1, n), matrix_from_json(j.at("delta"), field, n, n * n),
                      matrix_from_json(j.at("eps"), field, n, 1), matrix_from_json(j.at("braid"), field, n * n, n * n),
                      std::move(antipode));
  });
}

json cross_braid_to_json(const CrossBraid& x) { return {{"c_LH", matrix_to_json(x.c_lh())}}; }

CrossBraid cross_braid_from_json(const json& j, const HopfBundle& h, const HopfBundle& l) {
  return guarded("cross-braid", [&] {
    const auto n = h.dim() * l.dim();
    return CrossBraid(matrix_from_json(j.at("c_LH"), h.field(), n, n));
  });
}

json family_to_json(const BraidedFamily& f) {
  json objects = json::array(), braids = json::array(), maps = json::array();
  for (const auto& o : f.objects()) objects.push_back({{"id", o.id}, {"dim", o.dim}});
  for (const auto& [key, m] : f.braids())
    braids.push_back({{"i", key.first}, {"j", key.second}, {"matrix", matrix_to_json(m)}});
  for (const auto& m : f.maps())
    maps.push_back(
        {{"name", m.name}, {"source", m.source}, {"target", m.target}, {"matrix", matrix_to_json(m.matrix)}});
  return {{"field", field_to_json(f.field())}, {"objects", objects}, {"braids", braids}, {"maps", maps}};
}

BraidedFamily family_from_json(const json& j) {
  return guarded("family", [&] {
    const auto field = optional_field(j);
    std::vector<FamilyObject> objects;
    std::map<std::string, std::size_t> dims;
    for (const auto& o : j.at("objects")) {
      objects.push_back({o.at("id").get<std::string>(), o.at("dim").get<std::size_t>()});
      dims[objects.back().id] = objects.back().dim;
    }
    auto dim_of = [&](const std::string& id) {
      auto it = dims.find(id);
      if (it == dims.end()) throw UnknownIndex("unknown object id \"" + id + "\"");
      return it->second;
    };
    auto word_dim = [&](const IndexString& w) {
      std::size_t d = 1;
      for (const auto& id : w) d *= dim_of(id);
      return d;
    };
    std::map<std::pair<std::string, std::string>, Morphism> braids;
    for (const auto& b : j.at("braids")) {
      auto i = b.at("i").get<std::string>(), k = b.at("j").get<std::string>();
      const auto n = dim_of(i) * dim_of(k);
      if (!braids.emplace(std::pair{i, k}, matrix_from_json(b.at("matrix"), field, n, n)).second)
        throw FormatError("duplicate braid c(" + i + "," + k + ")");
    }
    std::vector<FamilyMap> maps;
    for (const auto& m : j.at("maps")) {
      auto source = strings(m.at("source")), target = strings(m.at("target"));
      auto matrix = matrix_from_json(m.at("matrix"), field, word_dim(source), word_dim(target));
      maps.push_back({m.at("name").get<std::string>(), std::move(source), std::move(target), std::move(matrix)});
    }
    return BraidedFamily(field, std::move(objects), std::move(braids), std::move(maps));
  });
}

json environment_to_json(const diagram::Environment& env) {
  json objects = json::array(), generators = json::array();
  for (const auto& [id, dim] : env.objects()) objects.push_back({{"id", id}, {"dim", dim}});
  for (const auto& [name, g] : env.generators())
    generators.push_back({{"name", name}, {"dom", g.dom}, {"cod", g.cod}, {"matrix", matrix_to_json(g.matrix)}});
  return {{"field", field_to_json(env.field())}, {"objects", objects}, {"generators", generators}};
}

diagram::Environment environment_from_json(const json& j) {
  return guarded("environment", [&] {
    diagram::Environment env(optional_field(j));
    for (const auto& o : j.at("objects")) env.add_object(o.at("id").get<std::string>(), o.at("dim").get<std::size_t>());
    for (const auto& g : j.at("generators")) {
      auto dom = strings(g.at("dom")), cod = strings(g.at("cod"));
      auto matrix = matrix_from_json(g.at("matrix"), env.field(), env.dim(dom), env.dim(cod));
      env.add_generator(g.at("name").get<std::string>(), std::move(dom), std::move(cod), std::move(matrix));
    }
    return env;
  });
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json read_json_file(const std::filesystem::path& path) {
  auto text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out << text;
  if (!out) throw FormatError("cannot write " + path.string());
}

void write_json_file(const std::filesystem::path& path, const json& j) { write_text_file(path, j.dump(2) + "\n"); }

}  // namespace bhopf::io
