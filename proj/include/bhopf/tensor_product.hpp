#pragma once

/// Tensor product of two braided Hopf algebras H and L glued by an invertible
/// cross-braid c_LH: L⊗H → H⊗L. The product multiplies through c_LH and
/// comultiplies through its inverse:
///
///   μ = (μ_H⊗μ_L)(H⊗c_LH⊗L)        Δ = (H⊗c_LH⁻¹⊗L)(Δ_H⊗Δ_L)
///   c = (H⊗c_LH⁻¹⊗L)(c_H⊗c_L)(H⊗c_LH⊗L)
///   η = η_H⊗η_L   ε = ε_H⊗ε_L   S = S_H⊗S_L

#include <cstddef>

#include "bhopf/errors.hpp"
#include "bhopf/hopf.hpp"
#include "bhopf/morphism.hpp"
#include "bhopf/report.hpp"

namespace bhopf {

class CrossBraid {
 public:
  /// Throws NotInvertible.
  explicit CrossBraid(Morphism c_lh);
  /// The flip L⊗H → H⊗L.
  static CrossBraid canonical(const FieldSpec& field, std::size_t dim_l, std::size_t dim_h);

  const Morphism& c_lh() const { return c_lh_; }
  const Morphism& c_lh_inverse() const { return c_lh_inverse_; }

 private:
  Morphism c_lh_;
  Morphism c_lh_inverse_;
};

class PreconditionFailed : public Error {
 public:
  explicit PreconditionFailed(CheckReport report);
  const CheckReport& report() const { return report_; }

 private:
  CheckReport report_;
};

/// Both hexagon identities, on L⊗L⊗H ("hexagon_LLH") and on L⊗H⊗H
/// ("hexagon_LHH"). Throws DimensionMismatch.
CheckReport check_hexagons(const HopfBundle& h, const HopfBundle& l, const CrossBraid& x);
/// Compatibility of c_LH with the algebra and coalgebra structures of both
/// factors.
CheckReport check_cross_compat(const HopfBundle& h, const HopfBundle& l, const CrossBraid& x);
/// Everything the builder requires: both input batteries, hexagons, cross
/// compatibility.
CheckReport check_tensor_hypotheses(const HopfBundle& h, const HopfBundle& l, const CrossBraid& x);

enum class BuildMode { Strict, Force };

/// Strict mode throws PreconditionFailed when check_tensor_hypotheses fails;
/// Force builds regardless. The antipode is S_H⊗S_L iff both inputs carry one.
HopfBundle build_tensor_product(const HopfBundle& h, const HopfBundle& l, const CrossBraid& x,
                                BuildMode mode = BuildMode::Strict);
/// H⊗H with c_LH = c_H.
HopfBundle build_square(const HopfBundle& h, BuildMode mode = BuildMode::Strict);
CheckReport check_tensor_braid_equation(const HopfBundle& hl);

}  // namespace bhopf
