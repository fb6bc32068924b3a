#pragma once

/// Canonical small examples used by the test suites and `bhopf fixtures`.

#include <cstddef>

#include "bhopf/field.hpp"
#include "bhopf/hopf.hpp"
#include "bhopf/morphism.hpp"

namespace bhopf::fixtures {

/// The one-dimensional Hopf algebra k: every structure map is [[1]].
HopfBundle trivial(const FieldSpec& field = FieldSpec::rationals());

/// Group algebra k[C_n] with grouplike coproduct, flip braid, S(g) = g⁻¹.
HopfBundle cyclic_group_algebra(std::size_t n, const FieldSpec& field = FieldSpec::rationals());

/// Group algebra k[C_m × C_n], basis (a, b) at flat index a·n + b.
HopfBundle product_group_algebra(std::size_t m, std::size_t n, const FieldSpec& field = FieldSpec::rationals());

/// Braided line B(N, q) = k[x]/(x^N) with Δ(x^n) = Σ_k [n choose k]_q x^k ⊗ x^(n-k),
/// braid c(x^i ⊗ x^j) = q^(ij) x^j ⊗ x^i and S(x^n) = (-1)^n q^(n(n-1)/2) x^n.
/// Throws FormatError unless q is a primitive N-th root of unity.
HopfBundle braided_line(std::size_t n, const Scalar& q);

/// Gaussian binomial coefficient [n choose k]_q via the q-Pascal rule.
Scalar q_binomial(std::size_t n, std::size_t k, const Scalar& q);

/// Diagonal cross-braid L⊗H → H⊗L, y^i ⊗ x^j ↦ r^(ij) x^j ⊗ y^i.
Morphism scalar_cross_braid(std::size_t dim_l, std::size_t dim_h, const Scalar& r);

/// Two-dimensional bialgebra {1, t} with t grouplike and t² = t. It has no
/// antipode: t would need a convolution inverse.
HopfBundle idempotent_bialgebra(const FieldSpec& field = FieldSpec::rationals());

}  // namespace bhopf::fixtures
