#pragma once

// Weak representations of a finite groupoid on linear groupoid bundles,
// equivariant maps, action groupoids and the conversions to and from Ruths
// and VB-groupoids.
//
// Conventions. The bundle V is a LinearGroupoidBundle over the objects of G;
// its fiber groupoid over y has objects V0(y) and arrows V1(y) (arrow index y).
//   a0[g] : V0(s g) -> V0(t g)        x ↦ g·x
//   a1[g] : V1(s g) -> V1(t g)        k ↦ g·k
//   alpha[(g,h)] : V0(s h) -> V1(t g) the arrow g·(h·x) -> (gh)·x
// An equivariant map (F, δ) : V -> W has
//   f0[y] : V0(y) -> W0(y), f1[y] : V1(y) -> W1(y),
//   delta[g] : V0(s g) -> W1(t g)     the arrow F(g·x) -> g·F(x).
// An arrow of the action groupoid over g : x -> y is (g, v, h) with h an arrow
// of V(y) ending at g·v; it is stored in coordinates (v, k), k ∈ ker t̃ at y in
// the basis kernel_matrix(t̃_y), and h = ũ(g·v) + K k.

#include <map>
#include <vector>

#include "wrep/groupoid.hpp"
#include "wrep/linear.hpp"
#include "wrep/report.hpp"
#include "wrep/ruth.hpp"
#include "wrep/semidirect.hpp"
#include "wrep/vb.hpp"

namespace wrep {

struct WeakRepresentation {
  FiniteGroupoid groupoid;
  LinearGroupoidBundle bundle;
  std::vector<Matrix> a0;
  std::vector<Matrix> a1;
  std::map<ArrowPair, Matrix> alpha;

  bool operator==(const WeakRepresentation&) const = default;
};

/// Throws StructureError on inconsistent tables or shapes.
void check_wrep_shapes(const WeakRepresentation& w);

/// Checks (on fiber bases) the bundle, unitality, functoriality of each a_g,
/// the endpoints, unit coherence and naturality of α, and the pentagon
///   α(g,kl,x)∘(g·α(k,l,x)) = α(gk,l,x)∘α(g,k,l·x).
Report validate_wrep(const WeakRepresentation& w);

struct EquivariantMap {
  std::vector<Matrix> f0;
  std::vector<Matrix> f1;
  std::vector<Matrix> delta;

  bool operator==(const EquivariantMap&) const = default;
};

void check_equivariant_shapes(const WeakRepresentation& v, const WeakRepresentation& w, const EquivariantMap& e);

/// F a map of bundles, δ with the right endpoints, natural, unital, and the hexagon
///   δ(gk,x)∘F(α(g,k,x)) = α'(g,k,Fx)∘(g·δ(k,x))∘δ(g,k·x).
Report validate_equivariant(const WeakRepresentation& v, const WeakRepresentation& w, const EquivariantMap& e);

EquivariantMap identity_equivariant(const WeakRepresentation& w);
/// e2 ∘ e1 with δ''(g,x) = δ2(g,F1 x)∘F2(δ1(g,x)); `target` is the codomain of e2.
/// Throws CompositionError when the maps do not compose.
EquivariantMap compose_equivariant(const WeakRepresentation& target, const EquivariantMap& e2, const EquivariantMap& e1);
bool is_isomorphism(const EquivariantMap& e);

/// Φ(G) on objects: bundle phi_object(E), a_g = Φ(λ_g), α(g,h) = Φ(Ω_{g,h}).
/// Throws ValidationError for an invalid Ruth.
WeakRepresentation wrep_from_ruth(const Ruth& r);
/// Φ(G) on morphisms: F = Φ(φ), δ_g = (-μ_g, φ1 λ1_g).
EquivariantMap equivariant_from_ruth_morphism(const Ruth& source, const Ruth& target, const RuthMorphism& m);

/// Splits the bundle and reads λ and Ω off the blocks. Throws NotInducedError
/// when a block that must vanish does not.
Ruth ruth_from_wrep(const WeakRepresentation& w);
/// The morphism ruth_from_wrep(v) -> ruth_from_wrep(w) read off (F, δ).
RuthMorphism ruth_morphism_from_equivariant(const WeakRepresentation& v, const WeakRepresentation& w,
                                            const EquivariantMap& e);

/// Rewrites w in new fiber bases q[y] : V0(y) -> V0'(y), p[y] : V1(y) -> V1'(y).
WeakRepresentation transport_wrep(const WeakRepresentation& w, const std::vector<Matrix>& q, const std::vector<Matrix>& p);
/// The equivariant isomorphism w -> transport_wrep(w, q, p) with trivial δ.
EquivariantMap fiber_iso_equivariant(const WeakRepresentation& transported, const std::vector<Matrix>& q,
                                     const std::vector<Matrix>& p);

/// K_y = kernel_matrix(t̃_y), the basis of the k-coordinate at object y.
Matrix action_kernel_basis(const WeakRepresentation& w, int y);
/// (v, k) ↦ h = ũ(g·v) + K k for the arrows of the action groupoid over g.
Matrix action_lift(const WeakRepresentation& w, int g);

/// The action groupoid as a VB-groupoid over G. Throws ValidationError for invalid w.
VBGroupoid action_groupoid(const WeakRepresentation& w);
/// Act(F, δ) : (g, v, h) ↦ (g, F v, δ(g,v)∘F(h)). Throws ValidationError for invalid e.
VBMap act_on_morphism(const WeakRepresentation& v, const WeakRepresentation& w, const EquivariantMap& e);
/// Recovers (F, δ) from a VB map action_groupoid(v) -> action_groupoid(w) over the
/// identity: δ(g,x) = p(φ(g,x,ũ(g·x))), F on arrows through v ↦ (u, s̃ v, v⁻¹).
/// Throws StructureError when φ does not cover the identity.
EquivariantMap reconstruct_equivariant(const WeakRepresentation& v, const WeakRepresentation& w, const VBMap& phi);

struct KernelRepresentation {
  WeakRepresentation rep;  // on kernel_groupoid(v)
  Connection connection;
  VBMap to_action;  // v -> action_groupoid(rep)
};

/// A0(g) = t̃ σ_g, A1(g,k) = σ_g(t̃k)·k·σ_g(s̃k)⁻¹,
/// α(g,h,x) = σ_{gh}(x)·σ_h(x)⁻¹·σ_g(h·x)⁻¹, and the isomorphism whose inverse
/// is (g,x,k) ↦ k⁻¹·σ_g(x). Throws ValidationError for invalid v or σ, or if the
/// resulting map fails to be an isomorphism.
KernelRepresentation vb_to_wrep(const VBGroupoid& v);
KernelRepresentation vb_to_wrep(const VBGroupoid& v, const Connection& sigma);

/// The equivariant isomorphism a.rep -> b.rep induced by two kernel
/// representations of the same v (for instance built from different connections).
EquivariantMap compare_kernel_representations(const KernelRepresentation& a, const KernelRepresentation& b);

/// The isomorphism action_groupoid(wrep_from_ruth(r)) -> semidirect(r),
/// (g, x, h) ↦ (g, -h⁰, x) where h⁰ is the E0 component of h.
VBMap triangle_iso(const Ruth& r);

/// A Ruth read off a VB-groupoid together with the isomorphism v -> semidirect(ruth).
struct VBSplitting {
  Ruth ruth;
  KernelRepresentation kernel;
  VBMap to_semidirect;
};

/// ruth = ruth_from_wrep(vb_to_wrep(v).rep); the isomorphism is
/// triangle_iso ∘ Act(splitting of the kernel bundle) ∘ to_action.
VBSplitting vb_to_ruth(const VBGroupoid& v);

}  // namespace wrep
