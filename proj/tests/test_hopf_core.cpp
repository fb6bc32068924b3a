#include "doctest.h"

#include <functional>
#include <random>

#include "bhopf/errors.hpp"
#include "bhopf/fixtures.hpp"
#include "bhopf/hopf.hpp"
#include "support.hpp"

using namespace bhopf;
using support::matrix;
using support::with_entry;

namespace {

const auto Q = FieldSpec::rationals();
const auto F5 = FieldSpec::prime(5);

HopfBundle b42() { return fixtures::braided_line(4, Scalar::from_int(F5, 2)); }

HopfBundle with_mu(const HopfBundle& b, Morphism mu) {
  return HopfBundle(b.field(), b.basis(), std::move(mu), b.eta(), b.delta(), b.eps(), b.braid(), b.antipode());
}

HopfBundle with_maps(const HopfBundle& b, Morphism mu, Morphism eta, Morphism delta, Morphism eps) {
  return HopfBundle(b.field(), b.basis(), std::move(mu), std::move(eta), std::move(delta), std::move(eps), b.braid());
}

// Diagonal braid c(xⁱ⊗xʲ) = a(i,j) xʲ⊗xⁱ.
Morphism scaled_flip(const FieldSpec& field, std::size_t n, const std::function<Scalar(std::size_t, std::size_t)>& a) {
  auto m = Morphism::zero(field, n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m = with_entry(m, j * n + i, i * n + j, a(i, j));
  return m;
}

// Both sides of the braid equation on one basis triple, by naive products.
bool braid_triple_agrees(const Morphism& c, std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
  const auto id = Morphism::identity(c.field(), n);
  auto c12 = support::naive_kron(c, id), c23 = support::naive_kron(id, c);
  auto lhs = support::naive_product(c12, support::naive_product(c23, c12));
  auto rhs = support::naive_product(c23, support::naive_product(c12, c23));
  const auto col = (i * n + j) * n + k;
  for (std::size_t r = 0; r < n * n * n; ++r)
    if (!(lhs.at(r, col) == rhs.at(r, col))) return false;
  return true;
}

}  // namespace

TEST_CASE("bundle load-time invariants") {
  const auto c2 = fixtures::cyclic_group_algebra(2);
  CHECK_THROWS_AS(c2.with_braid(Morphism::zero(Q, 4, 4)), NotInvertible);
  CHECK_THROWS_WITH(c2.with_braid(Morphism::zero(Q, 4, 4)), "braid not invertible");
  CHECK_THROWS_AS(c2.with_braid(Morphism::identity(Q, 3)), DimensionMismatch);
  CHECK_THROWS_AS(c2.with_braid(Morphism::identity(F5, 4)), FieldMismatch);
  CHECK_THROWS_AS(HopfBundle(Q, {"e", "e"}, c2.mu(), c2.eta(), c2.delta(), c2.eps(), c2.braid()), FormatError);
  CHECK_THROWS_AS(fixtures::braided_line(4, Scalar::from_int(F5, 4)), FormatError);
}

TEST_CASE("check_algebra") {
  CHECK(check_algebra(fixtures::trivial()).passed());
  const auto c2 = fixtures::cyclic_group_algebra(2);
  CHECK(check_algebra(c2).passed());
  CHECK(support::classical_oracle(c2).associative);

  // g·g corrupted to g: a unital 2-dimensional algebra, hence still associative.
  auto gg = with_entry(with_entry(c2.mu(), 0, 3, Scalar::zero(Q)), 1, 3, Scalar::one(Q));
  CHECK(support::classical_oracle(with_mu(c2, gg)).associative);
  CHECK(check_algebra(with_mu(c2, gg)).passed());

  // g·e corrupted to e: (g·e)·g = g but g·(e·g) = e.
  auto ge = with_entry(with_entry(c2.mu(), 1, 2, Scalar::zero(Q)), 0, 2, Scalar::one(Q));
  const auto bad = with_mu(c2, ge);
  CHECK_FALSE(support::classical_oracle(bad).associative);
  auto r = check_algebra(bad);
  const auto* a = r.find("associativity");
  REQUIRE(a);
  CHECK_FALSE(a->passed);
  REQUIRE(a->witness);
  CHECK(a->witness->size() == 3);
  CHECK(*a->witness == std::vector<std::size_t>{1, 0, 1});
  CHECK_FALSE(r.find("right_unit")->passed);
}

TEST_CASE("check_coalgebra") {
  CHECK(check_coalgebra(fixtures::trivial()).passed());
  const auto c2 = fixtures::cyclic_group_algebra(2);
  CHECK(check_coalgebra(c2).passed());
  // Δ(g) = g⊗e: (ε⊗id)Δ(g) = e.
  auto d = with_entry(with_entry(c2.delta(), 3, 1, Scalar::zero(Q)), 2, 1, Scalar::one(Q));
  auto r = check_coalgebra(c2.with_delta(d));
  CHECK_FALSE(r.find("left_counit")->passed);
  CHECK(*r.find("left_counit")->witness == std::vector<std::size_t>{1});
  CHECK(r.find("right_counit")->passed);
}

TEST_CASE("check_braid_equation") {
  for (std::size_t n = 1; n <= 4; ++n) CHECK(check_braid_equation(Morphism::swap(Q, n, n), n).passed());
  CHECK(check_braid_equation(b42().braid(), 4).passed());
  CHECK_THROWS_AS(check_braid_equation(Morphism::identity(Q, 5), 2), DimensionMismatch);

  // Changing one coefficient of a scaled flip keeps the braid equation: each
  // side picks up a(i,j)a(i,k)a(j,k) on every triple.
  const auto q = Scalar::from_int(F5, 2);
  auto perturbed = scaled_flip(F5, 4, [&](std::size_t i, std::size_t j) {
    return i == 1 && j == 2 ? Scalar::one(F5) : q.pow(static_cast<std::int64_t>(i * j));
  });
  CHECK(check_braid_equation(perturbed, 4).passed());

  // A diagonal matrix (no flip) with one qⁱʲ replaced by 1 is not a braiding.
  auto diag = Morphism::zero(F5, 16, 16);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      diag = with_entry(diag, i * 4 + j, i * 4 + j,
                        i == 1 && j == 1 ? Scalar::one(F5) : q.pow(static_cast<std::int64_t>(i * j)));
  auto r = check_braid_equation(diag, 4);
  REQUIRE_FALSE(r.passed());
  const auto& w = *r.results().front().witness;
  CHECK_FALSE(braid_triple_agrees(diag, 4, w[0], w[1], w[2]));
  // Lexicographically first: every earlier triple agrees.
  for (std::size_t t = 0; t < (w[0] * 4 + w[1]) * 4 + w[2]; ++t)
    CHECK(braid_triple_agrees(diag, 4, t / 16, (t / 4) % 4, t % 4));
}

TEST_CASE("check_compat_algebra and check_compat_coalgebra") {
  const auto b = b42();
  const auto c2 = fixtures::cyclic_group_algebra(2);
  CHECK(check_compat_algebra(Morphism::swap(Q, 2, 3), c2.algebra(), 3, Side::VW).passed());
  CHECK(check_compat_coalgebra(Morphism::swap(Q, 2, 3), c2.coalgebra(), 3, Side::VW).passed());
  CHECK(check_compat_algebra(Morphism::swap(Q, 3, 2), c2.algebra(), 3, Side::WV).passed());
  CHECK(check_compat_coalgebra(Morphism::swap(Q, 3, 2), c2.coalgebra(), 3, Side::WV).passed());
  for (int r = 1; r <= 4; ++r) {
    const auto c = fixtures::scalar_cross_braid(4, 4, Scalar::from_int(F5, r));
    // c_LH: L⊗H → H⊗L is compatible with L on the left and H on the right.
    CHECK(check_compat_algebra(c, b.algebra(), 4, Side::VW).passed());
    CHECK(check_compat_algebra(c, b.algebra(), 4, Side::WV).passed());
    CHECK(check_compat_coalgebra(c, b.coalgebra(), 4, Side::VW).passed());
    CHECK(check_compat_coalgebra(c, b.coalgebra(), 4, Side::WV).passed());

    const auto zeroed = with_entry(c, 5, 5, Scalar::zero(F5));  // y⊗x ↦ 0
    CHECK_FALSE(check_compat_algebra(zeroed, b.algebra(), 4, Side::VW).passed());
    CHECK_FALSE(check_compat_coalgebra(zeroed, b.coalgebra(), 4, Side::VW).passed());
    const auto unit_zeroed = with_entry(c, 0, 0, Scalar::zero(F5));
    CHECK_FALSE(check_compat_algebra(unit_zeroed, b.algebra(), 4, Side::VW).find("unit")->passed);
  }
  CHECK_THROWS_AS(check_compat_algebra(Morphism::identity(Q, 5), c2.algebra(), 3, Side::VW), DimensionMismatch);
}

TEST_CASE("check_braided_bialgebra battery") {
  CHECK(check_braided_bialgebra(fixtures::trivial()).passed());
  CHECK(check_braided_bialgebra(fixtures::cyclic_group_algebra(2)).passed());
  CHECK(check_braided_bialgebra(fixtures::cyclic_group_algebra(5, F5)).passed());
  CHECK(check_braided_bialgebra(fixtures::braided_line(2, Scalar::from_int(Q, -1))).passed());

  const auto b = b42();
  CHECK(support::braided_line_delta_mu(4, 2, 5));
  auto r = check_braided_bialgebra(b);
  CHECK(r.passed());
  CHECK(r.results().size() == 19);

  // Plain flip: the q-binomial identity needs the braid factor.
  CHECK_FALSE(support::braided_line_delta_mu(4, 2, 5, false));
  auto flipped = check_braided_bialgebra(b.with_braid(Morphism::swap(F5, 4, 4)));
  const auto* dm = flipped.find("bialgebra.delta_mu");
  REQUIRE(dm);
  CHECK_FALSE(dm->passed);
  CHECK(dm->witness->size() == 2);
}

TEST_CASE("braided line coproduct matches the word-counting Gauss binomial") {
  for (std::size_t n = 0; n < 4; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      CHECK(fixtures::q_binomial(n, k, Scalar::from_int(F5, 2)) ==
            Scalar::from_int(F5, support::q_binomial_words(n, k, 2, 5)));
  const auto b = b42();
  for (std::size_t n = 0; n < 4; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      CHECK(b.delta().at(k * 4 + (n - k), n) == Scalar::from_int(F5, support::q_binomial_words(n, k, 2, 5)));
  CHECK(b.braid().at(3 * 4 + 2, 2 * 4 + 3) == Scalar::from_int(F5, 2).pow(6));
}

TEST_CASE("flip-braided bundles agree with the classical structure-constant oracle") {
  std::mt19937 rng(77);
  std::vector<HopfBundle> bases{fixtures::trivial(), fixtures::cyclic_group_algebra(2),
                                fixtures::cyclic_group_algebra(3), fixtures::product_group_algebra(2, 2),
                                fixtures::idempotent_bialgebra()};
  int corrupted_failures = 0;
  for (int t = 0; t < 60; ++t) {
    const auto& base = bases[t % bases.size()];
    auto mu = base.mu(), eta = base.eta(), delta = base.delta(), eps = base.eps();
    if (t >= static_cast<int>(bases.size())) {
      const auto pick = rng() % 4;
      auto& m = pick == 0 ? mu : pick == 1 ? eta : pick == 2 ? delta : eps;
      m = with_entry(m, rng() % m.cod(), rng() % m.dom(), Scalar::from_int(Q, static_cast<int>(rng() % 3) - 1));
    }
    const auto bundle = with_maps(base, mu, eta, delta, eps);
    const bool lib = check_braided_bialgebra(bundle).passed();
    CHECK(lib == support::classical_oracle(bundle).all());
    if (!lib) ++corrupted_failures;
  }
  CHECK(corrupted_failures > 10);
}

TEST_CASE("compute_antipode") {
  CHECK(*compute_antipode(fixtures::trivial()) == matrix(Q, 1, 1, {1}));
  CHECK(*compute_antipode(fixtures::cyclic_group_algebra(2)) == Morphism::identity(Q, 2));
  // Group inversion g^k ↦ g^{-k}.
  CHECK(*compute_antipode(fixtures::cyclic_group_algebra(3)) == matrix(Q, 3, 3, {1, 0, 0, 0, 0, 1, 0, 1, 0}));
  CHECK(*compute_antipode(fixtures::braided_line(2, Scalar::from_int(Q, -1))) == matrix(Q, 2, 2, {1, 0, 0, -1}));
  const auto b = b42();
  CHECK(*compute_antipode(b) == *b.antipode());
  CHECK_FALSE(compute_antipode(fixtures::idempotent_bialgebra()));
}

TEST_CASE("check_antipode") {
  CHECK(check_antipode(fixtures::trivial(), matrix(Q, 1, 1, {1})).passed());
  const auto c2 = fixtures::cyclic_group_algebra(2);
  CHECK(check_antipode(c2, Morphism::identity(Q, 2)).passed());
  auto r = check_antipode(c2, scale(Scalar::from_int(Q, -1), Morphism::identity(Q, 2)));
  CHECK_FALSE(r.find("antipode.left")->passed);
  CHECK_FALSE(r.find("antipode.right")->passed);
  CHECK(*r.find("antipode.left")->witness == std::vector<std::size_t>{0});
}

TEST_CASE("antipode uniqueness") {
  for (const auto& b : {fixtures::trivial(), fixtures::cyclic_group_algebra(2), fixtures::cyclic_group_algebra(3),
                        fixtures::braided_line(2, Scalar::from_int(Q, -1)), b42()}) {
    const auto s = compute_antipode(b);
    REQUIRE(s);
    // The left convolution system has trivial kernel, so S is its only solution.
    const auto left = convolution_system(b, ConvolutionSide::Left);
    CHECK(kernel(left).dom() == 0);
    CHECK(kernel(convolution_system(b, ConvolutionSide::Right)).dom() == 0);
    CHECK(convolution(b, *s, Morphism::identity(b.field(), b.dim())) == compose(b.eta(), b.eps()));
    // Any other candidate fails.
    std::mt19937 rng(b.dim());
    for (int t = 0; t < 5; ++t) {
      auto other = with_entry(*s, rng() % b.dim(), rng() % b.dim(), support::random_scalar(rng, b.field()));
      CHECK((other == *s) == check_antipode(b, other).passed());
    }
  }
}

TEST_CASE("checkers are deterministic") {
  const auto bad = b42().with_braid(Morphism::swap(F5, 4, 4));
  auto a = check_braided_bialgebra(bad), b = check_braided_bialgebra(bad);
  REQUIRE(a.results().size() == b.results().size());
  for (std::size_t k = 0; k < a.results().size(); ++k) {
    CHECK(a.results()[k].name == b.results()[k].name);
    CHECK(a.results()[k].passed == b.results()[k].passed);
    CHECK(a.results()[k].witness == b.results()[k].witness);
  }
}
