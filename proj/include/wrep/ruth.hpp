#pragma once

#include <map>
#include <utility>
#include <vector>

#include "wrep/complex.hpp"
#include "wrep/groupoid.hpp"
#include "wrep/linear.hpp"
#include "wrep/report.hpp"
#include "wrep/vb.hpp"

namespace wrep {

/// A 2-term representation up to homotopy of G on E0 -> E1 (complex.base must
/// list the objects of G in order).
///   lambda0[g] : E0(s g) -> E0(t g)
///   lambda1[g] : E1(s g) -> E1(t g)
///   omega[(g,h)] : E1(s h) -> E0(t g), one per composable pair
struct Ruth {
  FiniteGroupoid groupoid;
  TwoTermComplex complex;
  std::vector<Matrix> lambda0;
  std::vector<Matrix> lambda1;
  std::map<ArrowPair, Matrix> omega;

  std::size_t dim0(int x) const { return complex.dim0(x); }
  std::size_t dim1(int x) const { return complex.dim1(x); }
  const Matrix& delta(int x) const { return complex.diff.at(static_cast<std::size_t>(x)); }
  const Matrix& omega_at(int g, int h) const { return omega.at({g, h}); }

  bool operator==(const Ruth&) const = default;
};

/// Throws StructureError on inconsistent tables or shapes.
void check_ruth_shapes(const Ruth& r);

/// Checks unitality, normalization and identities (1)-(4):
///   (1) δ λ0_g = λ1_g δ
///   (2) λ0_{gh} - λ0_g λ0_h = Ω_{g,h} δ
///   (3) λ1_{gh} - λ1_g λ1_h = δ Ω_{g,h}
///   (4) λ0_{g1} Ω_{g2,g3} - Ω_{g1g2,g3} + Ω_{g1,g2g3} - Ω_{g1,g2} λ1_{g3} = 0
Report validate_ruth(const Ruth& r);

/// Morphism r -> r' over the same groupoid.
///   phi0[x] : E0(x) -> E0'(x), phi1[x] : E1(x) -> E1'(x)
///   mu[g] : E1(s g) -> E0'(t g), zero at units
struct RuthMorphism {
  std::vector<Matrix> phi0;
  std::vector<Matrix> phi1;
  std::vector<Matrix> mu;

  bool operator==(const RuthMorphism&) const = default;
};

void check_morphism_shapes(const Ruth& source, const Ruth& target, const RuthMorphism& m);

///   (1) φ1 δ = δ' φ0
///   (2) φ0 λ0_g - λ0'_g φ0 = μ_g δ
///   (3) φ1 λ1_g - λ1'_g φ1 = δ' μ_g
///   (4) φ0 Ω_{g,h} + μ_g λ1_h + λ0'_g μ_h = μ_{gh} + Ω'_{g,h} φ1
Report validate_morphism(const Ruth& source, const Ruth& target, const RuthMorphism& m);

RuthMorphism identity_morphism(const Ruth& r);
/// m2 ∘ m1: φ = φ2 φ1, μ_g = φ2⁰ μ1_g + μ2_g φ1¹.
RuthMorphism compose_morphisms(const FiniteGroupoid& g, const RuthMorphism& m2, const RuthMorphism& m1);
bool is_isomorphism(const RuthMorphism& m);
/// Inverse of an invertible morphism m : r -> r'.
RuthMorphism inverse_morphism(const Ruth& source, const Ruth& target, const RuthMorphism& m);

struct GaugeResult {
  Ruth source;
  RuthMorphism morphism;  // source -> target
};

/// Pulls `target` back along invertible φ0, φ1 and unit-vanishing μ:
///   δ = φ1⁻¹ δ' φ0
///   λ0_g = φ0⁻¹ (λ0'_g φ0 + μ_g δ)
///   λ1_g = φ1⁻¹ (λ1'_g φ1 + δ' μ_g)
///   Ω_{g,h} = φ0⁻¹ (μ_{gh} + Ω'_{g,h} φ1 - μ_g λ1_h - λ0'_g μ_h)
/// Throws NotInvertibleError, StructureError.
GaugeResult gauge_transport(const Ruth& target, const std::vector<Matrix>& phi0, const std::vector<Matrix>& phi1,
                            const std::vector<Matrix>& mu);

}  // namespace wrep
