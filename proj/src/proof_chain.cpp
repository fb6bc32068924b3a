#include "bhopf/proof_chain.hpp"

namespace bhopf {

diagram::Environment proof_environment(const HopfBundle& h, const HopfBundle& l, const CrossBraid& x) {
  diagram::Environment env(h.field());
  env.add_object("H", h.dim());
  env.add_object("L", l.dim());
  for (const auto& [name, b] : {std::pair<std::string, const HopfBundle*>{"H", &h}, {"L", &l}}) {
    env.add_generator("mu_" + name, {name, name}, {name}, b->mu());
    env.add_generator("eta_" + name, {}, {name}, b->eta());
    env.add_generator("delta_" + name, {name}, {name, name}, b->delta());
    env.add_generator("eps_" + name, {name}, {}, b->eps());
    env.add_generator("c_" + name, {name, name}, {name, name}, b->braid());
  }
  env.add_generator("c_LH", {"L", "H"}, {"H", "L"}, x.c_lh());
  env.add_generator("c_LH_inv", {"H", "L"}, {"L", "H"}, x.c_lh_inverse());
  if (h.dim() == l.dim()) env.add_generator("c_LH_swapped", {"L", "H"}, {"H", "L"}, x.c_lh_inverse());
  return env;
}

std::vector<ProofStep> proof_chain() {
  return {
      {"delta_mu",
       "(id(H) * c_LH * id(L)) ; (mu_H * mu_L) ; (delta_H * delta_L) ; (id(H) * c_LH_inv * id(L))"},
      {"factorwise",
       "(id(H) * c_LH * id(L)) ; (delta_H * delta_H * delta_L * delta_L) ; "
       "(id(H) * c_H * id(H) * id(L) * c_L * id(L)) ; (mu_H * mu_H * mu_L * mu_L) ; "
       "(id(H) * c_LH_inv * id(L))"},
      {"crossed",
       "(delta_H * delta_L * delta_H * delta_L) ; (id(H,H,L) * c_LH * id(H,L,L)) ; "
       "(id(H,H) * c_LH * c_LH * id(L,L)) ; (id(H,H,H) * c_LH * id(L,L,L)) ; "
       "(id(H) * c_H * id(H,L) * c_L * id(L)) ; (id(H,H,H) * c_LH_inv * id(L,L,L)) ; "
       "(id(H,H) * c_LH_inv * c_LH_inv * id(L,L)) ; (id(H,H,L) * c_LH_inv * id(H,L,L)) ; "
       "(mu_H * mu_L * mu_H * mu_L)"},
      {"mu_delta",
       "(delta_H * delta_L * delta_H * delta_L) ; (id(H) * c_LH_inv * id(L,H) * c_LH_inv * id(L)) ; "
       "(id(H,L,H) * c_LH * id(L,H,L)) ; (id(H,L) * c_H * c_L * id(H,L)) ; "
       "(id(H,L,H) * c_LH_inv * id(L,H,L)) ; (id(H) * c_LH * id(L,H) * c_LH * id(L)) ; "
       "(mu_H * mu_L * mu_H * mu_L)"},
  };
}

ProofStep misbraided_step() {
  return {"crossed_misbraided",
          "(delta_H * delta_L * delta_H * delta_L) ; (id(H,H,L) * c_LH_swapped * id(H,L,L)) ; "
          "(id(H,H) * c_LH * c_LH * id(L,L)) ; (id(H,H,H) * c_LH * id(L,L,L)) ; "
          "(id(H) * c_H * id(H,L) * c_L * id(L)) ; (id(H,H,H) * c_LH_inv * id(L,L,L)) ; "
          "(id(H,H) * c_LH_inv * c_LH_inv * id(L,L)) ; (id(H,H,L) * c_LH_inv * id(H,L,L)) ; "
          "(mu_H * mu_L * mu_H * mu_L)"};
}

}  // namespace bhopf
