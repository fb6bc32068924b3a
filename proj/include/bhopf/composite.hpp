#pragma once

/// Morphisms kept in factored form: a vertical stack of horizontal slices,
/// each slice a tensor product of matrices and identities. Evaluation pushes
/// sparse basis columns through the stack, so a composite whose wires pass
/// through spaces of dimension 4^8 costs only what its nonzero coefficients
/// cost. Materializing with to_morphism() equals composing the Kronecker
/// products of the slices.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bhopf/morphism.hpp"

namespace bhopf {

/// Sorted by index, no explicit zeros.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

class Composite {
 public:
  /// Identity on a space of dimension dom.
  Composite(FieldSpec field, std::size_t dom);
  /// Single-slice composite.
  Composite(const Morphism& m);  // NOLINT(google-explicit-constructor)

  static Composite identity(const FieldSpec& field, std::size_t dom) { return {field, dom}; }

  const FieldSpec& field() const { return field_; }
  std::size_t dom() const { return dom_; }
  std::size_t cod() const { return cod_; }

  /// Runs `next` after this one (next∘this). Throws DimensionMismatch.
  Composite then(const Composite& next) const;

  SparseVector apply(SparseVector v) const;
  SparseVector column(std::size_t j) const;
  Morphism to_morphism() const;

  friend Composite tensor(const Composite& a, const Composite& b);

 private:
  struct Factor {
    // Null for an identity wire bundle.
    std::shared_ptr<const std::vector<SparseVector>> columns;
    std::size_t dom;
    std::size_t cod;
  };
  using Slice = std::vector<Factor>;

  static Slice padded(const Slice& slice, std::size_t left, std::size_t right);
  SparseVector apply_slice(const Slice& slice, const SparseVector& v) const;

  FieldSpec field_;
  std::size_t dom_;
  std::size_t cod_;
  std::vector<Slice> slices_;
};

/// Horizontal juxtaposition, realized by the interchange law as
/// (a⊗id) followed by (id⊗b).
Composite tensor(const Composite& a, const Composite& b);

/// Composite of the given parts, run in order: steps[0] first.
Composite chain(std::initializer_list<Composite> steps);

/// Lowest domain basis index at which the two composites' columns differ.
/// Throws DimensionMismatch if the boundaries differ.
std::optional<std::size_t> first_difference(const Composite& lhs, const Composite& rhs);

/// Multi-index of a flat left-factor-major index.
std::vector<std::size_t> unflatten(std::size_t index, std::span<const std::size_t> dims);
std::size_t flatten(std::span<const std::size_t> index, std::span<const std::size_t> dims);

}  // namespace bhopf
