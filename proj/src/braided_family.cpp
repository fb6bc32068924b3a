#include "bhopf/braided_family.hpp"

#include <set>

#include "bhopf/errors.hpp"

namespace bhopf {

namespace {

std::string join(const IndexString& word) {
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) out += (k ? "," : "") + word[k];
  return out;
}

std::vector<std::size_t> concat(std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

IndexString prefix(const IndexString& word) { return {word.begin(), word.end() - 1}; }

}  // namespace

BraidedFamily::BraidedFamily(FieldSpec field, std::vector<FamilyObject> objects,
                             std::map<std::pair<std::string, std::string>, Morphism> braids,
                             std::vector<FamilyMap> maps)
    : field_(field), objects_(std::move(objects)), braids_(std::move(braids)), maps_(std::move(maps)) {
  for (const auto& o : objects_)
    if (!dims_.emplace(o.id, o.dim).second) throw FormatError("duplicate object id \"" + o.id + "\"");
  for (const auto& [key, m] : braids_) {
    const auto& [i, j] = key;
    const auto n = dim(i) * dim(j);
    if (m.dom() != n || m.cod() != n)
      throw DimensionMismatch("braid c(" + i + "," + j + ") must be " + std::to_string(n) + "->" + std::to_string(n));
    if (m.field() != field_) throw FieldMismatch("braid c(" + i + "," + j + ") is over " + m.field().name());
    if (!invert(m)) throw NotInvertible("braid c(" + i + "," + j + ") not invertible");
  }
  for (const auto& a : objects_)
    for (const auto& b : objects_)
      if (!braids_.contains({a.id, b.id})) throw FormatError("missing braid c(" + a.id + "," + b.id + ")");
  std::set<std::string> names;
  for (const auto& m : maps_) {
    if (!names.insert(m.name).second) throw FormatError("duplicate map name \"" + m.name + "\"");
    if (m.matrix.dom() != dim(m.source) || m.matrix.cod() != dim(m.target))
      throw DimensionMismatch("map " + m.name + " does not match (" + join(m.source) + ") -> (" + join(m.target) +
                              ")");
    if (m.matrix.field() != field_) throw FieldMismatch("map " + m.name + " is over " + m.matrix.field().name());
  }
}

std::size_t BraidedFamily::dim(const std::string& id) const {
  auto it = dims_.find(id);
  if (it == dims_.end()) throw UnknownIndex("unknown object id \"" + id + "\"");
  return it->second;
}

std::size_t BraidedFamily::dim(const IndexString& word) const {
  std::size_t d = 1;
  for (const auto& id : word) d *= dim(id);
  return d;
}

std::vector<std::size_t> BraidedFamily::dims(const IndexString& word) const {
  std::vector<std::size_t> out;
  for (const auto& id : word) out.push_back(dim(id));
  return out;
}

const Morphism& BraidedFamily::braid(const std::string& i, const std::string& j) const {
  auto it = braids_.find({i, j});
  if (it == braids_.end()) {
    dim(i);
    dim(j);
    throw FormatError("missing braid c(" + i + "," + j + ")");
  }
  return it->second;
}

const FamilyMap& BraidedFamily::map(const std::string& name) const {
  for (const auto& m : maps_)
    if (m.name == name) return m;
  throw UnknownMap("unknown map \"" + name + "\"");
}

CheckReport check_family_braided(const BraidedFamily& f) {
  CheckReport report;
  for (const auto& oi : f.objects())
    for (const auto& oj : f.objects())
      for (const auto& ok : f.objects()) {
        const auto &i = oi.id, &j = oj.id, &k = ok.id;
        const auto id = [&](const std::string& x) { return Composite::identity(f.field(), f.dim(x)); };
        const Composite c_ij(f.braid(i, j)), c_ik(f.braid(i, k)), c_jk(f.braid(j, k));
        const std::vector<std::size_t> dims{oi.dim, oj.dim, ok.dim};
        report.add_equation("braid_equation(" + i + "," + j + "," + k + ")",
                            chain({tensor(id(i), c_jk), tensor(c_ik, id(j)), tensor(id(k), c_ij)}),
                            chain({tensor(c_ij, id(k)), tensor(id(j), c_ik), tensor(c_jk, id(i))}), dims);
      }
  return report;
}

Composite braid_composite(const BraidedFamily& f, const IndexString& i, const IndexString& j) {
  const auto id = [&](const IndexString& w) { return Composite::identity(f.field(), f.dim(w)); };
  if (i.empty() || j.empty()) return Composite::identity(f.field(), f.dim(i) * f.dim(j));
  if (i.size() == 1 && j.size() == 1) return Composite(f.braid(i[0], j[0]));
  if (i.size() == 1) {
    const auto head = prefix(j);
    const IndexString last{j.back()};
    return chain({tensor(braid_composite(f, i, head), id(last)), tensor(id(head), braid_composite(f, i, last))});
  }
  const auto head = prefix(i);
  const IndexString last{i.back()};
  return chain({tensor(id(head), braid_composite(f, last, j)), tensor(braid_composite(f, head, j), id(last))});
}

Morphism extend_braid(const BraidedFamily& f, const IndexString& i, const IndexString& j) {
  return braid_composite(f, i, j).to_morphism();
}

CheckReport check_map_natural(const BraidedFamily& f, const FamilyMap& m, const IndexString& l) {
  const Composite g(m.matrix), id_l = Composite::identity(f.field(), f.dim(l));
  const auto suffix = "(" + join(l) + ")";
  CheckReport report;
  report.add_equation("right" + suffix, chain({braid_composite(f, m.source, l), tensor(id_l, g)}),
                      chain({tensor(g, id_l), braid_composite(f, m.target, l)}),
                      concat(f.dims(m.source), f.dims(l)));
  report.add_equation("left" + suffix, chain({braid_composite(f, l, m.source), tensor(g, id_l)}),
                      chain({tensor(id_l, g), braid_composite(f, l, m.target)}),
                      concat(f.dims(l), f.dims(m.source)));
  return report;
}

CheckReport check_map_compatible(const BraidedFamily& f, const std::string& name) {
  const auto& m = f.map(name);
  CheckReport report;
  for (const auto& o : f.objects()) report.append(check_map_natural(f, m, {o.id}));
  return report;
}

CheckReport check_all_maps_compatible(const BraidedFamily& f) {
  CheckReport report;
  for (const auto& m : f.maps()) report.append(check_map_compatible(f, m.name), m.name);
  return report;
}

Composite lambda_composite(const BraidedFamily& f, std::size_t w_dim, const LambdaFamily& lambdas,
                           const IndexString& i) {
  if (i.empty()) return Composite::identity(f.field(), w_dim);
  const auto& last = i.back();
  auto it = lambdas.find(last);
  if (it == lambdas.end()) throw DimensionMismatch("no lambda for object \"" + last + "\"");
  const Composite step(it->second);
  if (i.size() == 1) return step;
  const auto head = prefix(i);
  return chain({tensor(Composite::identity(f.field(), f.dim(head)), step),
                tensor(lambda_composite(f, w_dim, lambdas, head), Composite::identity(f.field(), f.dim(last)))});
}

CheckReport build_lambda_family(const BraidedFamily& f, std::size_t w_dim, const LambdaFamily& lambdas) {
  for (const auto& o : f.objects()) {
    auto it = lambdas.find(o.id);
    if (it == lambdas.end()) throw DimensionMismatch("no lambda for object \"" + o.id + "\"");
    const auto n = o.dim * w_dim;
    if (it->second.dom() != n || it->second.cod() != n)
      throw DimensionMismatch("lambda(" + o.id + ") must be " + std::to_string(n) + "->" + std::to_string(n));
    if (!invert(it->second)) throw NotInvertible("lambda(" + o.id + ") not invertible");
  }
  const auto id_w = Composite::identity(f.field(), w_dim);
  CheckReport report;
  for (const auto& oi : f.objects())
    for (const auto& oj : f.objects()) {
      const auto &i = oi.id, &j = oj.id;
      const Composite c(f.braid(i, j));
      report.add_equation("lambda_braid(" + i + "," + j + ")",
                          chain({lambda_composite(f, w_dim, lambdas, {i, j}), tensor(id_w, c)}),
                          chain({tensor(c, id_w), lambda_composite(f, w_dim, lambdas, {j, i})}),
                          std::vector<std::size_t>{oi.dim, oj.dim, w_dim});
    }
  for (const auto& m : f.maps()) {
    const Composite g(m.matrix);
    report.add_equation("lambda_map(" + m.name + ")",
                        chain({lambda_composite(f, w_dim, lambdas, m.source), tensor(id_w, g)}),
                        chain({tensor(g, id_w), lambda_composite(f, w_dim, lambdas, m.target)}),
                        concat(f.dims(m.source), {w_dim}));
  }
  return report;
}

LambdaFamily tensor_lambda(const BraidedFamily& f, std::size_t w_dim, const LambdaFamily& w, std::size_t z_dim,
                           const LambdaFamily& z) {
  LambdaFamily out;
  for (const auto& o : f.objects()) {
    const auto& lw = w.at(o.id);
    const auto& lz = z.at(o.id);
    out.emplace(o.id, compose(tensor(Morphism::identity(f.field(), w_dim), lz),
                              tensor(lw, Morphism::identity(f.field(), z_dim))));
  }
  return out;
}

LambdaFamily member_lambda(const BraidedFamily& f, const std::string& j) {
  LambdaFamily out;
  for (const auto& o : f.objects()) out.emplace(o.id, f.braid(o.id, j));
  return out;
}

BraidedFamily disentangle(const HopfBundle& h, const HopfBundle& l, const Morphism& c_hl) {
  const auto& field = h.field();
  const auto dh = h.dim(), dl = l.dim();
  if (c_hl.dom() != dh * dl || c_hl.cod() != dh * dl)
    throw DimensionMismatch("c_HL must be " + std::to_string(dh * dl) + "->" + std::to_string(dh * dl));
  auto inv = invert(c_hl);
  if (!inv) throw NotInvertible("c_HL not invertible");

  std::map<std::pair<std::string, std::string>, Morphism> braids{
      {{"0", "0"}, Morphism::identity(field, 1)}, {{"0", "1"}, Morphism::identity(field, dh)},
      {{"1", "0"}, Morphism::identity(field, dh)}, {{"0", "2"}, Morphism::identity(field, dl)},
      {{"2", "0"}, Morphism::identity(field, dl)}, {{"1", "1"}, h.braid()},
      {{"2", "2"}, l.braid()},                     {{"1", "2"}, c_hl},
      {{"2", "1"}, std::move(*inv)},
  };
  std::vector<FamilyMap> maps{
      {"eps_H", {"1"}, {"0"}, h.eps()},        {"eps_L", {"2"}, {"0"}, l.eps()},
      {"eta_H", {"0"}, {"1"}, h.eta()},        {"eta_L", {"0"}, {"2"}, l.eta()},
      {"delta_H", {"1"}, {"1", "1"}, h.delta()}, {"delta_L", {"2"}, {"2", "2"}, l.delta()},
      {"mu_H", {"1", "1"}, {"1"}, h.mu()},     {"mu_L", {"2", "2"}, {"2"}, l.mu()},
  };
  return BraidedFamily(field, {{"0", 1}, {"1", dh}, {"2", dl}}, std::move(braids), std::move(maps));
}

}  // namespace bhopf
