#pragma once

#include <optional>
#include <string>

#include "catsieve/bisimplicial.hpp"
#include "catsieve/fincat.hpp"

namespace catsieve {

// H : srep(Fα) × Δ¹ -> srep(F) for θ : α ⇒ β. A simplex over the chain
// a0 <- ... <- an with interval coordinate t (t leading ones) uses β(a_i)
// for i < t and α(a_i) for i >= t; the arrow crossing from α to β is
// θ∘α(σ). Its value is x, pushed along Fθ when the whole chain lies in β.
struct CylinderHomotopy {
  Replacement source;       // srep(Fα)
  Replacement beta_source;  // srep(Fβ)
  Replacement target;       // srep(F)
  BiSSetPtr cylinder;       // srep(Fα) × Δ¹
  BiSSetMap h;
  BiSSetMap i0;
  BiSSetMap i1;
  BiSSetMap projection;   // srep(Fα) × Δ¹ -> srep(Fα)
  BiSSetMap alpha_sharp;  // α_#
  BiSSetMap beta_sharp;   // β_#
  BiSSetMap f_theta;      // Fθ̂ : srep(Fα) -> srep(Fβ)
};

CylinderHomotopy cylinder_homotopy(const SSetDiagram& f, const NatTrans& theta, const Guards& guards = {});

// The same map assembled as θ̄_# ∘ φ through srep(Fθ̄) with
// θ̄ : C × [0 -> 1] -> D, together with the pushout square that defines φ.
struct CylinderPushout {
  CategoryPtr product;
  FinFunctor theta_bar;
  Replacement glued;    // srep(Fθ̄)
  BiSSetMap phi;        // srep(Fα) × Δ¹ -> srep(Fθ̄)
  BiSSetMap inclusion;  // srep(Fβ) -> srep(Fθ̄), induced by X |-> (X,1)
  BiSSetMap composite;  // θ̄_# ∘ φ
  bool square_commutes = false;
  bool is_pushout = false;
};

CylinderPushout cylinder_pushout(const CylinderHomotopy& h, const SSetDiagram& f, const NatTrans& theta,
                                 const Guards& guards = {});

struct CylinderReport {
  bool simplicial = false;
  bool h0_is_alpha_sharp = false;
  bool h1_is_beta_sharp_theta = false;
  bool factors_through_pushout = false;
  bool pushout_square = false;
  // diag(H0) and diag(H1) agree on homology through proxy_range.
  std::optional<bool> homology_proxy;
  std::size_t proxy_range = 0;
  std::string method = "homology-proxy";
  std::string witness;

  bool holds() const {
    return simplicial && h0_is_alpha_sharp && h1_is_beta_sharp_theta && factors_through_pushout && pushout_square &&
           homology_proxy.value_or(true);
  }
};

// proxy_degree < 0 skips the homology comparison.
CylinderReport check_cylinder(const SSetDiagram& f, const NatTrans& theta, int proxy_degree = -1,
                              const Guards& guards = {});

}  // namespace catsieve
