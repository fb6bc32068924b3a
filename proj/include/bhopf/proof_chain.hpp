#pragma once

/// Diagram environment and expressions for the chain of rewrites showing that
/// the tensor-product coproduct is multiplicative.

#include <string>
#include <vector>

#include "bhopf/diagram.hpp"
#include "bhopf/hopf.hpp"
#include "bhopf/tensor_product.hpp"

namespace bhopf {

/// Objects H and L; generators mu_X, eta_X, delta_X, eps_X, c_X for X in
/// {H, L}, c_LH : L,H -> H,L and c_LH_inv : H,L -> L,H. When dim H == dim L it
/// also has c_LH_swapped : L,H -> H,L carrying the matrix of c_LH_inv, used to
/// build a deliberately mis-braided chain.
diagram::Environment proof_environment(const HopfBundle& h, const HopfBundle& l, const CrossBraid& x);

struct ProofStep {
  std::string name;
  std::string text;
};

/// Four diagrams H,L,H,L -> H,L,H,L, all equal when the hypotheses hold:
/// Δ∘μ, the same with the bialgebra axioms applied factorwise, the same with
/// the cross-braid moved through, and (μ⊗μ)(HL⊗c⊗HL)(Δ⊗Δ) on H⊗L.
std::vector<ProofStep> proof_chain();
/// The third step with one c_LH replaced by c_LH_swapped.
ProofStep misbraided_step();

}  // namespace bhopf
