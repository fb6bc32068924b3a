#include "bhopf/tensor_product.hpp"

#include "bhopf/composite.hpp"

namespace bhopf {

CrossBraid::CrossBraid(Morphism c_lh) : c_lh_(std::move(c_lh)), c_lh_inverse_(c_lh_) {
  auto inv = invert(c_lh_);
  if (!inv) throw NotInvertible("cross-braid not invertible");
  c_lh_inverse_ = std::move(*inv);
}

CrossBraid CrossBraid::canonical(const FieldSpec& field, std::size_t dim_l, std::size_t dim_h) {
  return CrossBraid(Morphism::swap(field, dim_l, dim_h));
}

PreconditionFailed::PreconditionFailed(CheckReport report)
    : Error("tensor product hypotheses fail: " + report.first_failure()->name), report_(std::move(report)) {}

namespace {

void require_cross_shape(const HopfBundle& h, const HopfBundle& l, const CrossBraid& x) {
  const auto n = h.dim() * l.dim();
  if (x.c_lh().dom() != n || x.c_lh().cod() != n)
    throw DimensionMismatch("cross-braid must be " + std::to_string(n) + "->" + std::to_string(n));
  if (h.field() != l.field() || x.c_lh().field() != h.field())
    throw FieldMismatch("tensor factors over different fields");
}

}  // namespace

CheckReport check_hexagons(const HopfBundle& h, const HopfBundle& l, const CrossBraid& x) {
  require_cross_shape(h, l, x);
  const auto dh = h.dim(), dl = l.dim();
  const Composite c(x.c_lh()), c_h(h.braid()), c_l(l.braid());
  const auto id_h = Composite::identity(h.field(), dh), id_l = Composite::identity(h.field(), dl);
  CheckReport report;
  const std::vector<std::size_t> llh{dl, dl, dh}, lhh{dl, dh, dh};
  report.add_equation("hexagon_LLH", chain({tensor(c_l, id_h), tensor(id_l, c), tensor(c, id_l)}),
                      chain({tensor(id_l, c), tensor(c, id_l), tensor(id_h, c_l)}), llh);
  report.add_equation("hexagon_LHH", chain({tensor(c, id_h), tensor(id_h, c), tensor(c_h, id_l)}),
                      chain({tensor(id_l, c_h), tensor(c, id_h), tensor(id_h, c)}), lhh);
  return report;
}

CheckReport check_cross_compat(const HopfBundle& h, const HopfBundle& l, const CrossBraid& x) {
  require_cross_shape(h, l, x);
  CheckReport report;
  report.append(check_compat_algebra(x.c_lh(), l.algebra(), h.dim(), Side::VW), "algebra_L");
  report.append(check_compat_algebra(x.c_lh(), h.algebra(), l.dim(), Side::WV), "algebra_H");
  report.append(check_compat_coalgebra(x.c_lh(), l.coalgebra(), h.dim(), Side::VW), "coalgebra_L");
  report.append(check_compat_coalgebra(x.c_lh(), h.coalgebra(), l.dim(), Side::WV), "coalgebra_H");
  return report;
}

CheckReport check_tensor_hypotheses(const HopfBundle& h, const HopfBundle& l, const CrossBraid& x) {
  CheckReport report;
  report.append(check_braided_bialgebra(h), "H");
  report.append(check_braided_bialgebra(l), "L");
  report.append(check_hexagons(h, l, x), "cross");
  report.append(check_cross_compat(h, l, x), "cross.compat");
  return report;
}

HopfBundle build_tensor_product(const HopfBundle& h, const HopfBundle& l, const CrossBraid& x, BuildMode mode) {
  require_cross_shape(h, l, x);
  if (mode == BuildMode::Strict) {
    auto report = check_tensor_hypotheses(h, l, x);
    if (!report.passed()) throw PreconditionFailed(std::move(report));
  }
  const auto& field = h.field();
  const auto id_h = Morphism::identity(field, h.dim()), id_l = Morphism::identity(field, l.dim());
  const auto cross = tensor({id_h, x.c_lh(), id_l}, field);
  const auto uncross = tensor({id_h, x.c_lh_inverse(), id_l}, field);

  std::vector<std::string> basis;
  for (const auto& a : h.basis())
    for (const auto& b : l.basis()) basis.push_back(a + "⊗" + b);

  std::optional<Morphism> antipode;
  if (h.antipode() && l.antipode()) antipode = tensor(*h.antipode(), *l.antipode());

  return HopfBundle(field, std::move(basis), compose(tensor(h.mu(), l.mu()), cross), tensor(h.eta(), l.eta()),
                    compose(uncross, tensor(h.delta(), l.delta())), tensor(h.eps(), l.eps()),
                    compose(uncross, compose(tensor(h.braid(), l.braid()), cross)), std::move(antipode));
}

HopfBundle build_square(const HopfBundle& h, BuildMode mode) {
  return build_tensor_product(h, h, CrossBraid(h.braid()), mode);
}

CheckReport check_tensor_braid_equation(const HopfBundle& hl) { return check_braid_equation(hl.braid(), hl.dim()); }

}  // namespace bhopf
