#pragma once

// Semi-direct products, connections and kernels of VB-groupoids.
//
// An arrow of semidirect(r) over g : x -> y is written (e0, e1) with
// e0 ∈ E0(y) first and e1 ∈ E1(x):
//   source (e0, e1) = e1,  target = δ e0 + λ1_g e1,
//   (g, e0, e1)·(h, f0, f1) = (gh, e0 + λ0_g f0 - Ω_{g,h} f1, f1),
//   unit = (0, e),  inverse = (-λ0_{g⁻¹} e0 + Ω_{g⁻¹,g} e1, δ e0 + λ1_g e1).

#include <vector>

#include "wrep/ruth.hpp"
#include "wrep/vb.hpp"

namespace wrep {

/// Throws ValidationError for an invalid Ruth.
VBGroupoid semidirect(const Ruth& r);
/// Same construction without validating r first (used to build mutants).
VBGroupoid semidirect_unchecked(const Ruth& r);

/// (g, e0, e1) ↦ (g, φ0 e0 + μ_g e1, φ1 e1), e ↦ φ1 e. Throws ValidationError for invalid m.
VBMap psi_morphism(const Ruth& source, const Ruth& target, const RuthMorphism& m);
/// Reads a VB map semidirect(source) -> semidirect(target) over the identity as
/// a RuthMorphism. Throws NotInducedError if the blocks are not of that form.
RuthMorphism morphism_from_semidirect_map(const Ruth& source, const Ruth& target, const VBMap& f);

/// σ_g : V0(s g) -> V1(g) for every arrow g.
struct Connection {
  std::vector<Matrix> sigma;

  bool operator==(const Connection&) const = default;
};

/// Checks source ∘ σ_g = id ("splitting") and σ_{u(x)} = ũ_x ("unital").
Report validate_connection(const VBGroupoid& v, const Connection& c);

/// σ at units is the unit map; elsewhere the pivot-rule section of the source map.
/// Throws StructureError when a source map is not surjective.
Connection find_unital_connection(const VBGroupoid& v);

/// Restriction to the unit arrows, as a bundle over the trivial groupoid on G0.
LinearGroupoidBundle kernel_groupoid(const VBGroupoid& v);

}  // namespace wrep
