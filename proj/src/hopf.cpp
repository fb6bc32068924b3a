#include "bhopf/hopf.hpp"

#include <set>

#include "bhopf/composite.hpp"
#include "bhopf/errors.hpp"

namespace bhopf {

namespace {

void require_shape(const Morphism& m, std::size_t dom, std::size_t cod, const char* what) {
  if (m.dom() != dom || m.cod() != cod)
    throw DimensionMismatch(std::string(what) + " must be " + std::to_string(dom) + "->" + std::to_string(cod) +
                            ", got " + std::to_string(m.dom()) + "->" + std::to_string(m.cod()));
}

void require_field(const Morphism& m, const FieldSpec& field, const char* what) {
  if (m.field() != field) throw FieldMismatch(std::string(what) + " is over " + m.field().name());
}

Composite tensor3(const Composite& a, const Composite& b, const Composite& c) { return tensor(tensor(a, b), c); }

}  // namespace

HopfBundle::HopfBundle(FieldSpec field, std::vector<std::string> basis, Morphism mu, Morphism eta, Morphism delta,
                       Morphism eps, Morphism braid, std::optional<Morphism> antipode)
    : field_(field),
      basis_(std::move(basis)),
      algebra_{std::move(mu), std::move(eta)},
      coalgebra_{std::move(delta), std::move(eps)},
      braid_(std::move(braid)),
      braid_inverse_(braid_),
      antipode_(std::move(antipode)) {
  const auto n = basis_.size();
  if (std::set<std::string>(basis_.begin(), basis_.end()).size() != n)
    throw FormatError("basis labels must be distinct");
  require_shape(algebra_.mu, n * n, n, "mu");
  require_shape(algebra_.eta, 1, n, "eta");
  require_shape(coalgebra_.delta, n, n * n, "delta");
  require_shape(coalgebra_.eps, n, 1, "eps");
  require_shape(braid_, n * n, n * n, "braid");
  if (antipode_) require_shape(*antipode_, n, n, "antipode");
  require_field(algebra_.mu, field_, "mu");
  require_field(algebra_.eta, field_, "eta");
  require_field(coalgebra_.delta, field_, "delta");
  require_field(coalgebra_.eps, field_, "eps");
  require_field(braid_, field_, "braid");
  if (antipode_) require_field(*antipode_, field_, "antipode");
  auto inv = invert(braid_);
  if (!inv) throw NotInvertible("braid not invertible");
  braid_inverse_ = std::move(*inv);
}

HopfBundle HopfBundle::with_antipode(std::optional<Morphism> s) const {
  if (s) {
    require_shape(*s, dim(), dim(), "antipode");
    require_field(*s, field_, "antipode");
  }
  HopfBundle out = *this;
  out.antipode_ = std::move(s);
  return out;
}

HopfBundle HopfBundle::with_braid(Morphism braid) const {
  return HopfBundle(field_, basis_, mu(), eta(), delta(), eps(), std::move(braid), antipode_);
}

HopfBundle HopfBundle::with_delta(Morphism delta) const {
  return HopfBundle(field_, basis_, mu(), eta(), std::move(delta), eps(), braid_, antipode_);
}

CheckReport check_algebra(const HopfBundle& b) {
  const auto n = b.dim();
  const Composite mu(b.mu()), eta(b.eta()), id(Composite::identity(b.field(), n));
  const std::vector<std::size_t> three{n, n, n}, one{n};
  CheckReport report;
  report.add_equation("associativity", chain({tensor(mu, id), mu}), chain({tensor(id, mu), mu}), three);
  report.add_equation("left_unit", chain({tensor(eta, id), mu}), id, one);
  report.add_equation("right_unit", chain({tensor(id, eta), mu}), id, one);
  return report;
}

CheckReport check_coalgebra(const HopfBundle& b) {
  const auto n = b.dim();
  const Composite delta(b.delta()), eps(b.eps()), id(Composite::identity(b.field(), n));
  const std::vector<std::size_t> one{n};
  CheckReport report;
  report.add_equation("coassociativity", chain({delta, tensor(delta, id)}), chain({delta, tensor(id, delta)}), one);
  report.add_equation("left_counit", chain({delta, tensor(eps, id)}), id, one);
  report.add_equation("right_counit", chain({delta, tensor(id, eps)}), id, one);
  return report;
}

CheckReport check_braid_equation(const Morphism& c, std::size_t n) {
  require_shape(c, n * n, n * n, "braid");
  const Composite cc(c), id(Composite::identity(c.field(), n));
  const Composite c_left = tensor(cc, id), c_right = tensor(id, cc);
  const std::vector<std::size_t> three{n, n, n};
  CheckReport report;
  report.add_equation("braid_equation", chain({c_left, c_right, c_left}), chain({c_right, c_left, c_right}), three);
  return report;
}

CheckReport check_compat_algebra(const Morphism& c, const AlgebraMaps& v, std::size_t w_dim, Side side) {
  const auto n = v.dim(), w = w_dim;
  require_shape(c, n * w, n * w, "braid");
  const auto& field = c.field();
  const Composite cc(c), mu(v.mu), eta(v.eta);
  const auto id_v = Composite::identity(field, n), id_w = Composite::identity(field, w);
  CheckReport report;
  const std::vector<std::size_t> w_only{w};
  if (side == Side::VW) {
    const std::vector<std::size_t> vvw{n, n, w};
    report.add_equation("unit", chain({tensor(eta, id_w), cc}), tensor(id_w, eta), w_only);
    report.add_equation("product", chain({tensor(mu, id_w), cc}),
                        chain({tensor(id_v, cc), tensor(cc, id_v), tensor(id_w, mu)}), vvw);
  } else {
    const std::vector<std::size_t> wvv{w, n, n};
    report.add_equation("unit", chain({tensor(id_w, eta), cc}), tensor(eta, id_w), w_only);
    report.add_equation("product", chain({tensor(id_w, mu), cc}),
                        chain({tensor(cc, id_v), tensor(id_v, cc), tensor(mu, id_w)}), wvv);
  }
  return report;
}

CheckReport check_compat_coalgebra(const Morphism& c, const CoalgebraMaps& v, std::size_t w_dim, Side side) {
  const auto n = v.dim(), w = w_dim;
  require_shape(c, n * w, n * w, "braid");
  const auto& field = c.field();
  const Composite cc(c), delta(v.delta), eps(v.eps);
  const auto id_v = Composite::identity(field, n), id_w = Composite::identity(field, w);
  CheckReport report;
  if (side == Side::VW) {
    const std::vector<std::size_t> vw{n, w};
    report.add_equation("counit", chain({cc, tensor(id_w, eps)}), tensor(eps, id_w), vw);
    report.add_equation("coproduct", chain({cc, tensor(id_w, delta)}),
                        chain({tensor(delta, id_w), tensor(id_v, cc), tensor(cc, id_v)}), vw);
  } else {
    const std::vector<std::size_t> wv{w, n};
    report.add_equation("counit", chain({cc, tensor(eps, id_w)}), tensor(id_w, eps), wv);
    report.add_equation("coproduct", chain({cc, tensor(delta, id_w)}),
                        chain({tensor(id_w, delta), tensor(cc, id_v), tensor(id_v, cc)}), wv);
  }
  return report;
}

CheckReport check_braided_bialgebra(const HopfBundle& b) {
  const auto n = b.dim();
  CheckReport report;
  report.append(check_algebra(b), "algebra");
  report.append(check_coalgebra(b), "coalgebra");
  report.append(check_braid_equation(b.braid(), n), "braid");
  report.append(check_compat_algebra(b.braid(), b.algebra(), n, Side::VW), "braid.compat_algebra_left");
  report.append(check_compat_algebra(b.braid(), b.algebra(), n, Side::WV), "braid.compat_algebra_right");
  report.append(check_compat_coalgebra(b.braid(), b.coalgebra(), n, Side::VW), "braid.compat_coalgebra_left");
  report.append(check_compat_coalgebra(b.braid(), b.coalgebra(), n, Side::WV), "braid.compat_coalgebra_right");

  const Composite mu(b.mu()), eta(b.eta()), delta(b.delta()), eps(b.eps()), c(b.braid());
  const auto id = Composite::identity(b.field(), n);
  const std::vector<std::size_t> two{n, n}, none{};
  report.add_equation("bialgebra.delta_mu", chain({mu, delta}),
                      chain({tensor(delta, delta), tensor3(id, c, id), tensor(mu, mu)}), two);
  report.add_equation("bialgebra.delta_eta", chain({eta, delta}), tensor(eta, eta), none);
  report.add_equation("bialgebra.eps_mu", chain({mu, eps}), tensor(eps, eps), two);
  report.add_equation("bialgebra.eps_eta", chain({eta, eps}), Composite::identity(b.field(), 1), none);
  return report;
}

Morphism convolution(const HopfBundle& b, const Morphism& f, const Morphism& g) {
  return compose(b.mu(), compose(tensor(f, g), b.delta()));
}

Morphism convolution_system(const HopfBundle& b, ConvolutionSide side) {
  const auto n = b.dim();
  const auto& mu = b.mu();
  const auto& delta = b.delta();
  // (S⋆id)[a,bb] = Σ_{k,m,l} μ[a, k·n+l] S[k,m] Δ[m·n+l, bb]
  // (id⋆S)[a,bb] = Σ_{k,m,l} μ[a, l·n+k] S[k,m] Δ[l·n+m, bb]
  std::vector<Scalar> a(n * n * n * n, Scalar::zero(b.field()));
  const auto unknowns = n * n;
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) {
        const auto& mu_entry = side == ConvolutionSide::Left ? mu.at(row, k * n + l) : mu.at(row, l * n + k);
        if (mu_entry.is_zero()) continue;
        for (std::size_t m = 0; m < n; ++m)
          for (std::size_t col = 0; col < n; ++col) {
            const auto& d = side == ConvolutionSide::Left ? delta.at(m * n + l, col) : delta.at(l * n + m, col);
            if (!d.is_zero()) a[(row * n + col) * unknowns + k * n + m] += mu_entry * d;
          }
      }
  return Morphism(b.field(), unknowns, unknowns, std::move(a));
}

Morphism convolution_unit_vector(const HopfBundle& b) {
  auto unit = compose(b.eta(), b.eps());
  return Morphism(b.field(), 1, unit.dom() * unit.cod(), {unit.entries().begin(), unit.entries().end()});
}

std::optional<Morphism> compute_antipode(const HopfBundle& b) {
  const auto n = b.dim();
  auto x = solve_linear(convolution_system(b, ConvolutionSide::Left), convolution_unit_vector(b));
  if (!x) return std::nullopt;
  Morphism s(b.field(), n, n, {x->entries().begin(), x->entries().end()});
  if (!check_antipode(b, s).passed()) return std::nullopt;
  return s;
}

CheckReport check_antipode(const HopfBundle& b, const Morphism& s) {
  const auto n = b.dim();
  require_shape(s, n, n, "antipode");
  const Composite mu(b.mu()), delta(b.delta()), ss(s);
  const auto id = Composite::identity(b.field(), n);
  const Composite unit = chain({Composite(b.eps()), Composite(b.eta())});
  const std::vector<std::size_t> one{n};
  CheckReport report;
  report.add_equation("antipode.left", chain({delta, tensor(ss, id), mu}), unit, one);
  report.add_equation("antipode.right", chain({delta, tensor(id, ss), mu}), unit, one);
  return report;
}

}  // namespace bhopf
