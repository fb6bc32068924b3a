#pragma once

/// Braided bialgebras and Hopf algebras given by structure matrices, and exact
/// checkers for their axioms.
///
/// Every checker compares two composites column by column and reports the
/// first basis tuple (lexicographic) on which they disagree. Witness tuples
/// list basis indices of the domain's tensor factors, leaving out factors of
/// the unit object.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bhopf/field.hpp"
#include "bhopf/morphism.hpp"
#include "bhopf/report.hpp"

namespace bhopf {

struct AlgebraMaps {
  Morphism mu;   // n² → n
  Morphism eta;  // 1 → n
  std::size_t dim() const { return mu.cod(); }
};

struct CoalgebraMaps {
  Morphism delta;  // n → n²
  Morphism eps;    // n → 1
  std::size_t dim() const { return delta.dom(); }
};

class HopfBundle {
 public:
  /// Validates dimensions, fields, distinct basis labels and invertibility of
  /// the braid. Throws DimensionMismatch, FieldMismatch, FormatError or
  /// NotInvertible.
  HopfBundle(FieldSpec field, std::vector<std::string> basis, Morphism mu, Morphism eta, Morphism delta,
             Morphism eps, Morphism braid, std::optional<Morphism> antipode = std::nullopt);

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  const Morphism& mu() const { return algebra_.mu; }
  const Morphism& eta() const { return algebra_.eta; }
  const Morphism& delta() const { return coalgebra_.delta; }
  const Morphism& eps() const { return coalgebra_.eps; }
  const Morphism& braid() const { return braid_; }
  const Morphism& braid_inverse() const { return braid_inverse_; }
  const std::optional<Morphism>& antipode() const { return antipode_; }

  const AlgebraMaps& algebra() const { return algebra_; }
  const CoalgebraMaps& coalgebra() const { return coalgebra_; }

  HopfBundle with_antipode(std::optional<Morphism> s) const;
  HopfBundle with_braid(Morphism braid) const;
  HopfBundle with_delta(Morphism delta) const;

 private:
  FieldSpec field_;
  std::vector<std::string> basis_;
  AlgebraMaps algebra_;
  CoalgebraMaps coalgebra_;
  Morphism braid_;
  Morphism braid_inverse_;
  std::optional<Morphism> antipode_;
};

/// Which tensor factor of the braid's domain carries the structure.
/// VW: c: V⊗W → W⊗V with the structure on V (left). WV: c: W⊗V → V⊗W.
enum class Side { VW, WV };

CheckReport check_algebra(const HopfBundle& b);
CheckReport check_coalgebra(const HopfBundle& b);
/// (c⊗id)(id⊗c)(c⊗id) = (id⊗c)(c⊗id)(id⊗c) on V⊗V⊗V, dim V = n.
CheckReport check_braid_equation(const Morphism& c, std::size_t n);
/// c∘(η⊗W) = W⊗η and c∘(μ⊗W) = (W⊗μ)(c⊗V)(V⊗c), or the mirrored pair for
/// Side::WV.
CheckReport check_compat_algebra(const Morphism& c, const AlgebraMaps& v, std::size_t w_dim, Side side);
/// (W⊗ε)∘c = ε⊗W and (W⊗Δ)∘c = (c⊗V)(V⊗c)(Δ⊗W), or the mirrored pair for
/// Side::WV.
CheckReport check_compat_coalgebra(const Morphism& c, const CoalgebraMaps& v, std::size_t w_dim, Side side);
/// The full battery: algebra, coalgebra, braid equation, compatibility of the
/// braid with both structures on both sides, and the four bialgebra axioms.
CheckReport check_braided_bialgebra(const HopfBundle& b);

/// Convolution product f⋆g = μ∘(f⊗g)∘Δ.
Morphism convolution(const HopfBundle& b, const Morphism& f, const Morphism& g);

enum class ConvolutionSide { Left, Right };

/// Coefficient matrix (n² × n²) of the linear map S ↦ S⋆id (Left) or
/// S ↦ id⋆S (Right), acting on S flattened row-major.
Morphism convolution_system(const HopfBundle& b, ConvolutionSide side);
/// η∘ε flattened row-major as an n²×1 column.
Morphism convolution_unit_vector(const HopfBundle& b);

/// Solves S⋆id = η∘ε, then requires id⋆S = η∘ε as well.
std::optional<Morphism> compute_antipode(const HopfBundle& b);
CheckReport check_antipode(const HopfBundle& b, const Morphism& s);

}  // namespace bhopf
