#pragma once

// The 2-functor from 2-term complexes to linear groupoid bundles and its
// inverse on each level.
//
// An arrow of phi_object(C) over x is written (c0, c1) with c0 ∈ C0(x) first:
// source (c0, c1) = c1, target = δ c0 + c1, and (c0, c1)·(c0', c1') = (c0 + c0', c1').

#include "wrep/complex.hpp"
#include "wrep/vb.hpp"

namespace wrep {

LinearGroupoidBundle phi_object(const TwoTermComplex& c);
/// f1 on objects, f0 ⊕ f1 on arrows.
VBMap phi_onemorphism(const ChainMap& f);
/// Component at x: c ↦ (Ω c, f1 c), an arrow from f1 c to g1 c.
BundleTransformation phi_twomorphism(const ChainHomotopy& h);

struct Splitting {
  TwoTermComplex complex;
  VBMap to_phi;    // v -> phi_object(complex)
  VBMap from_phi;  // phi_object(complex) -> v
};

/// C1 = objects, C0 = ker(source) over each object, δ = target on C0; V1 is
/// identified with C0 ⊕ ũ(V0).
Splitting split_bundle(const LinearGroupoidBundle& v);

/// Reads a functor between images of phi_object as a chain map.
/// Throws NotInducedError when the off-diagonal blocks are nonzero or the
/// object block disagrees with the map on objects.
ChainMap extract_chain_map(const TwoTermComplex& c, const TwoTermComplex& d, const VBMap& f);

/// Reads a transformation between phi_onemorphism(from) and phi_onemorphism(to)
/// as a homotopy. Throws NotInducedError when the source component is not
/// from.f1 or the homotopy equations fail.
ChainHomotopy extract_homotopy(const TwoTermComplex& c, const TwoTermComplex& d, const ChainMap& from,
                               const ChainMap& to, const BundleTransformation& alpha);

}  // namespace wrep
