#include "bhopf/composite.hpp"

#include <algorithm>

#include "bhopf/errors.hpp"

namespace bhopf {

namespace {

SparseVector canonicalize(SparseVector v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector out;
  out.reserve(v.size());
  for (auto& [index, value] : v) {
    if (!out.empty() && out.back().first == index)
      out.back().second += value;
    else
      out.emplace_back(index, std::move(value));
  }
  std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
  return out;
}

std::shared_ptr<const std::vector<SparseVector>> sparse_columns(const Morphism& m) {
  auto cols = std::make_shared<std::vector<SparseVector>>(m.dom());
  for (std::size_t r = 0; r < m.cod(); ++r)
    for (std::size_t c = 0; c < m.dom(); ++c)
      if (!m.at(r, c).is_zero()) (*cols)[c].emplace_back(r, m.at(r, c));
  return cols;
}

}  // namespace

Composite::Composite(FieldSpec field, std::size_t dom) : field_(field), dom_(dom), cod_(dom) {}

Composite::Composite(const Morphism& m)
    : field_(m.field()), dom_(m.dom()), cod_(m.cod()), slices_{{Factor{sparse_columns(m), m.dom(), m.cod()}}} {}

Composite::Slice Composite::padded(const Slice& slice, std::size_t left, std::size_t right) {
  Slice out;
  auto push = [&out](const Factor& f) {
    if (!f.columns && !out.empty() && !out.back().columns) {
      out.back().dom *= f.dom;
      out.back().cod *= f.cod;
    } else {
      out.push_back(f);
    }
  };
  if (left != 1) push(Factor{nullptr, left, left});
  for (const auto& f : slice) push(f);
  if (right != 1) push(Factor{nullptr, right, right});
  return out;
}

Composite Composite::then(const Composite& next) const {
  if (next.field_ != field_) throw FieldMismatch("composites over different fields");
  if (next.dom_ != cod_)
    throw DimensionMismatch("cannot run a " + std::to_string(next.dom_) + "-dimensional input after a " +
                            std::to_string(cod_) + "-dimensional output");
  Composite out = *this;
  out.slices_.insert(out.slices_.end(), next.slices_.begin(), next.slices_.end());
  out.cod_ = next.cod_;
  return out;
}

Composite tensor(const Composite& a, const Composite& b) {
  if (a.field_ != b.field_) throw FieldMismatch("composites over different fields");
  Composite out(a.field_, a.dom_ * b.dom_);
  out.cod_ = a.cod_ * b.cod_;
  for (const auto& s : a.slices_) out.slices_.push_back(Composite::padded(s, 1, b.dom_));
  for (const auto& s : b.slices_) out.slices_.push_back(Composite::padded(s, a.cod_, 1));
  return out;
}

Composite chain(std::initializer_list<Composite> steps) {
  if (steps.size() == 0) throw DimensionMismatch("empty chain");
  auto it = steps.begin();
  Composite out = *it;
  for (++it; it != steps.end(); ++it) out = out.then(*it);
  return out;
}

SparseVector Composite::apply_slice(const Slice& slice, const SparseVector& v) const {
  SparseVector out;
  std::vector<std::size_t> index(slice.size());
  std::vector<std::pair<std::size_t, Scalar>> terms, next;
  for (const auto& [flat, value] : v) {
    auto rest = flat;
    for (std::size_t f = slice.size(); f-- > 0;) {
      index[f] = rest % slice[f].dom;
      rest /= slice[f].dom;
    }
    terms.assign(1, {0, value});
    for (std::size_t f = 0; f < slice.size() && !terms.empty(); ++f) {
      const auto& factor = slice[f];
      next.clear();
      if (!factor.columns) {
        for (auto& [i, s] : terms) next.emplace_back(i * factor.cod + index[f], std::move(s));
      } else {
        for (const auto& [i, s] : terms)
          for (const auto& [r, c] : (*factor.columns)[index[f]]) next.emplace_back(i * factor.cod + r, s * c);
      }
      std::swap(terms, next);
    }
    for (auto& t : terms) out.push_back(std::move(t));
  }
  return canonicalize(std::move(out));
}

SparseVector Composite::apply(SparseVector v) const {
  for (const auto& slice : slices_) {
    if (v.empty()) break;
    v = apply_slice(slice, v);
  }
  return v;
}

SparseVector Composite::column(std::size_t j) const {
  if (j >= dom_) throw DimensionMismatch("column " + std::to_string(j) + " of a " + std::to_string(dom_) +
                                         "-dimensional domain");
  return apply({{j, Scalar::one(field_)}});
}

Morphism Composite::to_morphism() const {
  std::vector<Scalar> e(dom_ * cod_, Scalar::zero(field_));
  for (std::size_t j = 0; j < dom_; ++j)
    for (auto& [i, s] : column(j)) e[i * dom_ + j] = std::move(s);
  return Morphism(field_, dom_, cod_, std::move(e));
}

std::optional<std::size_t> first_difference(const Composite& lhs, const Composite& rhs) {
  if (lhs.field() != rhs.field()) throw FieldMismatch("composites over different fields");
  if (lhs.dom() != rhs.dom() || lhs.cod() != rhs.cod())
    throw DimensionMismatch("comparing " + std::to_string(lhs.dom()) + "->" + std::to_string(lhs.cod()) +
                            " with " + std::to_string(rhs.dom()) + "->" + std::to_string(rhs.cod()));
  for (std::size_t j = 0; j < lhs.dom(); ++j)
    if (lhs.column(j) != rhs.column(j)) return j;
  return std::nullopt;
}

std::vector<std::size_t> unflatten(std::size_t index, std::span<const std::size_t> dims) {
  std::vector<std::size_t> out(dims.size());
  for (std::size_t f = dims.size(); f-- > 0;) {
    out[f] = index % dims[f];
    index /= dims[f];
  }
  return out;
}

std::size_t flatten(std::span<const std::size_t> index, std::span<const std::size_t> dims) {
  std::size_t flat = 0;
  for (std::size_t f = 0; f < dims.size(); ++f) flat = flat * dims[f] + index[f];
  return flat;
}

}  // namespace bhopf
