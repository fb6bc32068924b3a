#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bhopf/field.hpp"

namespace bhopf {

/// A linear map between finite-dimensional spaces, stored as a dense
/// cod × dom matrix in row-major order. Entry (r, c) is the coefficient of
/// basis vector r in the image of basis vector c.
///
/// Tensor products of spaces use the left-factor-major flat index: basis
/// vector (i, j) of V⊗W sits at i·dim(W) + j.
class Morphism {
 public:
  /// Throws DimensionMismatch if entries.size() != dom·cod and FieldMismatch
  /// if an entry lives in a different field.
  Morphism(FieldSpec field, std::size_t dom, std::size_t cod, std::vector<Scalar> entries);

  static Morphism zero(const FieldSpec& field, std::size_t dom, std::size_t cod);
  static Morphism identity(const FieldSpec& field, std::size_t n);
  /// The flip V⊗W → W⊗V for dim V = left, dim W = right.
  static Morphism swap(const FieldSpec& field, std::size_t left, std::size_t right);
  /// Rows of canonical scalar strings (see Scalar::parse). An empty row list
  /// gives cod = 0, and then dom must be supplied separately.
  static Morphism parse_rows(const FieldSpec& field, const std::vector<std::vector<std::string>>& rows,
                             std::size_t dom_if_empty = 0);

  const FieldSpec& field() const { return field_; }
  std::size_t dom() const { return dom_; }
  std::size_t cod() const { return cod_; }
  const Scalar& at(std::size_t row, std::size_t col) const { return entries_[row * dom_ + col]; }
  std::span<const Scalar> entries() const { return entries_; }

  bool is_identity() const;
  std::vector<std::vector<std::string>> to_rows() const;

  bool operator==(const Morphism& rhs) const;

 private:
  FieldSpec field_;
  std::size_t dom_;
  std::size_t cod_;
  std::vector<Scalar> entries_;
};

/// g∘f. Throws DimensionMismatch unless f.cod == g.dom.
Morphism compose(const Morphism& g, const Morphism& f);
/// Kronecker product f⊗g.
Morphism tensor(const Morphism& f, const Morphism& g);
/// Left-to-right tensor of a list; the empty list is the 1×1 identity.
Morphism tensor(std::initializer_list<Morphism> factors, const FieldSpec& field);
Morphism scale(const Scalar& s, const Morphism& f);
Morphism add(const Morphism& f, const Morphism& g);

/// One solution of A·x = b by Gaussian elimination (first nonzero pivot in
/// column order, free variables set to zero), or nullopt when inconsistent.
std::optional<Morphism> solve_linear(const Morphism& a, const Morphism& b);
/// Exact inverse, or nullopt when singular. Non-square input throws.
std::optional<Morphism> invert(const Morphism& f);
std::size_t rank(const Morphism& f);
/// Basis of the kernel, as a dom × k matrix whose columns span ker f.
Morphism kernel(const Morphism& f);

std::string to_string(const Morphism& f);

}  // namespace bhopf
