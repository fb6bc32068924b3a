#pragma once

// Shared helpers for the test binaries: seeded random data and brute-force
// oracles that work from raw structure constants with plain loops, never
// through compose/tensor.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bhopf/field.hpp"
#include "bhopf/hopf.hpp"
#include "bhopf/morphism.hpp"

namespace support {

using bhopf::FieldSpec;
using bhopf::HopfBundle;
using bhopf::Morphism;
using bhopf::Scalar;

inline Scalar random_scalar(std::mt19937& rng, const FieldSpec& field) {
  if (field.is_prime()) return Scalar::from_int(field, rng() % field.modulus());
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  return Scalar::from_fraction(field, num(rng), den(rng));
}

inline Morphism random_matrix(std::mt19937& rng, const FieldSpec& field, std::size_t dom, std::size_t cod) {
  std::vector<Scalar> e;
  for (std::size_t k = 0; k < dom * cod; ++k) e.push_back(random_scalar(rng, field));
  return Morphism(field, dom, cod, std::move(e));
}

inline Morphism random_invertible(std::mt19937& rng, const FieldSpec& field, std::size_t n) {
  for (;;) {
    auto m = random_matrix(rng, field, n, n);
    if (bhopf::invert(m)) return m;
  }
}

inline Morphism matrix(const FieldSpec& field, std::size_t dom, std::size_t cod, const std::vector<std::int64_t>& v) {
  std::vector<Scalar> e;
  for (auto x : v) e.push_back(Scalar::from_int(field, x));
  return Morphism(field, dom, cod, std::move(e));
}

inline Morphism with_entry(const Morphism& m, std::size_t row, std::size_t col, const Scalar& s) {
  std::vector<Scalar> e(m.entries().begin(), m.entries().end());
  e[row * m.dom() + col] = s;
  return Morphism(m.field(), m.dom(), m.cod(), std::move(e));
}

// Plain triple-loop product, independent of the library's compose.
inline Morphism naive_product(const Morphism& g, const Morphism& f) {
  const auto field = f.field();
  std::vector<Scalar> e;
  for (std::size_t r = 0; r < g.cod(); ++r)
    for (std::size_t c = 0; c < f.dom(); ++c) {
      Scalar acc = Scalar::zero(field);
      for (std::size_t k = 0; k < f.cod(); ++k) acc += g.at(r, k) * f.at(k, c);
      e.push_back(acc);
    }
  return Morphism(field, f.dom(), g.cod(), std::move(e));
}

// Entry (r1*cod2 + r2, c1*dom2 + c2) = f(r1,c1) g(r2,c2), written out directly.
inline Morphism naive_kron(const Morphism& f, const Morphism& g) {
  std::vector<Scalar> e(f.cod() * g.cod() * f.dom() * g.dom(), Scalar::zero(f.field()));
  const auto dom = f.dom() * g.dom();
  for (std::size_t r1 = 0; r1 < f.cod(); ++r1)
    for (std::size_t r2 = 0; r2 < g.cod(); ++r2)
      for (std::size_t c1 = 0; c1 < f.dom(); ++c1)
        for (std::size_t c2 = 0; c2 < g.dom(); ++c2)
          e[(r1 * g.cod() + r2) * dom + c1 * g.dom() + c2] = f.at(r1, c1) * g.at(r2, c2);
  return Morphism(f.field(), dom, f.cod() * g.cod(), std::move(e));
}

// Classical (flip-braided) bialgebra axioms evaluated from structure
// constants: m(i,j;k) = mu.at(k, i*n+j), d(i;j,k) = delta.at(j*n+k, i).
struct ClassicalOracle {
  bool associative = true, unital = true, coassociative = true, counital = true, multiplicative = true,
       unit_grouplike = true, counit_multiplicative = true, counit_unit = true;
  bool all() const {
    return associative && unital && coassociative && counital && multiplicative && unit_grouplike &&
           counit_multiplicative && counit_unit;
  }
};

inline ClassicalOracle classical_oracle(const HopfBundle& b) {
  const auto n = b.dim();
  const auto F = b.field();
  auto m = [&](std::size_t i, std::size_t j, std::size_t k) { return b.mu().at(k, i * n + j); };
  auto d = [&](std::size_t i, std::size_t j, std::size_t k) { return b.delta().at(j * n + k, i); };
  auto eta = [&](std::size_t k) { return b.eta().at(k, 0); };
  auto eps = [&](std::size_t k) { return b.eps().at(0, k); };
  const auto zero = Scalar::zero(F), one = Scalar::one(F);
  ClassicalOracle o;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t t = 0; t < n; ++t) {
          Scalar l = zero, r = zero;
          for (std::size_t s = 0; s < n; ++s) {
            l += m(i, j, s) * m(s, k, t);
            r += m(j, k, s) * m(i, s, t);
          }
          if (!(l == r)) o.associative = false;
          Scalar dl = zero, dr = zero;
          for (std::size_t s = 0; s < n; ++s) {
            dl += d(t, s, k) * d(s, i, j);
            dr += d(t, i, s) * d(s, j, k);
          }
          if (!(dl == dr)) o.coassociative = false;
        }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < n; ++t) {
      Scalar left = zero, right = zero, cl = zero, cr = zero;
      for (std::size_t s = 0; s < n; ++s) {
        left += eta(s) * m(s, i, t);
        right += eta(s) * m(i, s, t);
        cl += eps(s) * d(i, s, t);
        cr += eps(s) * d(i, t, s);
      }
      const auto kd = i == t ? one : zero;
      if (!(left == kd) || !(right == kd)) o.unital = false;
      if (!(cl == kd) || !(cr == kd)) o.counital = false;
    }
  // Δ(ab) = Σ a₁b₁ ⊗ a₂b₂ with the classical flip.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
          Scalar lhs = zero, rhs = zero;
          for (std::size_t s = 0; s < n; ++s) lhs += m(a, c, s) * d(s, u, v);
          for (std::size_t a1 = 0; a1 < n; ++a1)
            for (std::size_t a2 = 0; a2 < n; ++a2) {
              if (d(a, a1, a2).is_zero()) continue;
              for (std::size_t c1 = 0; c1 < n; ++c1)
                for (std::size_t c2 = 0; c2 < n; ++c2)
                  rhs += d(a, a1, a2) * d(c, c1, c2) * m(a1, c1, u) * m(a2, c2, v);
            }
          if (!(lhs == rhs)) o.multiplicative = false;
        }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      Scalar lhs = zero;
      for (std::size_t s = 0; s < n; ++s) lhs += eta(s) * d(s, u, v);
      if (!(lhs == eta(u) * eta(v))) o.unit_grouplike = false;
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      Scalar lhs = zero;
      for (std::size_t s = 0; s < n; ++s) lhs += m(a, c, s) * eps(s);
      if (!(lhs == eps(a) * eps(c))) o.counit_multiplicative = false;
    }
  Scalar ee = zero;
  for (std::size_t s = 0; s < n; ++s) ee += eps(s) * eta(s);
  o.counit_unit = ee.is_one();
  return o;
}

// Gauss binomial over F_p as a sum over 0/1 words with k ones of q^{inversions}.
inline std::int64_t q_binomial_words(std::size_t n, std::size_t k, std::int64_t q, std::int64_t p) {
  std::int64_t total = 0;
  for (std::uint32_t w = 0; w < (1u << n); ++w) {
    if (static_cast<std::size_t>(__builtin_popcount(w)) != k) continue;
    std::int64_t inv = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (((w >> (n - 1 - a)) & 1) && !((w >> (n - 1 - b)) & 1)) ++inv;
    std::int64_t term = 1;
    for (std::int64_t e = 0; e < inv; ++e) term = term * q % p;
    total = (total + term) % p;
  }
  return total;
}

inline std::int64_t ipow(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  for (std::int64_t k = 0; k < e; ++k) r = r * b % p;
  return r;
}

// Braided line k[x]/(x^N) over F_p, Δ∘μ = (μ⊗μ)(id⊗c⊗id)(Δ⊗Δ) checked by
// expanding both sides on x^a ⊗ x^b with machine integers.
inline bool braided_line_delta_mu(std::size_t N, std::int64_t q, std::int64_t p, bool braid_factor = true) {
  auto qb = [&](std::size_t n, std::size_t k) { return q_binomial_words(n, k, q, p); };
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      std::vector<std::int64_t> lhs(N * N, 0), rhs(N * N, 0);
      if (a + b < N)
        for (std::size_t k = 0; k <= a + b; ++k) lhs[k * N + (a + b - k)] = qb(a + b, k);
      for (std::size_t i = 0; i <= a; ++i)
        for (std::size_t j = 0; j <= b; ++j) {
          if (i + j >= N || (a - i) + (b - j) >= N) continue;
          const auto twist = braid_factor ? ipow(q, (a - i) * j, p) : 1;
          auto& slot = rhs[(i + j) * N + (a - i + b - j)];
          slot = (slot + qb(a, i) * qb(b, j) % p * twist) % p;
        }
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace support
