#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wrep/linear.hpp"
#include "wrep/report.hpp"

namespace wrep {

/// A 2-term complex C0 -> C1 of vector bundles over a finite set. Objects of
/// `base` are kept in lexicographic order; fiber dimensions are read off the
/// shape of diff[x] : C0(x) -> C1(x).
struct TwoTermComplex {
  std::vector<std::string> base;
  std::vector<Matrix> diff;

  std::size_t dim0(int x) const { return diff.at(static_cast<std::size_t>(x)).cols(); }
  std::size_t dim1(int x) const { return diff.at(static_cast<std::size_t>(x)).rows(); }
  std::size_t size() const { return base.size(); }

  bool operator==(const TwoTermComplex&) const = default;
};

/// Throws StructureError unless base is sorted and duplicate-free and sized like diff.
void check_complex(const TwoTermComplex& c);

/// Chain map f : C -> D covering basemap : base(C) -> base(D).
struct ChainMap {
  std::vector<int> basemap;
  std::vector<Matrix> f0;  // per x: C0(x) -> D0(basemap x)
  std::vector<Matrix> f1;  // per x: C1(x) -> D1(basemap x)

  bool operator==(const ChainMap&) const = default;
};

/// Homotopy Ω : from => to, with δ^D Ω = to.f1 - from.f1 and Ω δ^C = to.f0 - from.f0.
struct ChainHomotopy {
  ChainMap from;
  ChainMap to;
  std::vector<Matrix> omega;  // per x: C1(x) -> D0(basemap x)

  bool operator==(const ChainHomotopy&) const = default;
};

Report validate_chain_map(const TwoTermComplex& c, const TwoTermComplex& d, const ChainMap& f);
Report validate_homotopy(const TwoTermComplex& c, const TwoTermComplex& d, const ChainHomotopy& h);

ChainMap identity_chain_map(const TwoTermComplex& c);
/// g ∘ f. Throws CompositionError on mismatched shapes.
ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainHomotopy zero_homotopy(const TwoTermComplex& c, const TwoTermComplex& d, const ChainMap& f);

/// a then b: omega = a.omega + b.omega. Throws CompositionError unless a.to == b.from.
ChainHomotopy vcompose(const ChainHomotopy& a, const ChainHomotopy& b);
/// psi : f => g (C -> D), omega : k => l (D -> E); result k∘f => l∘g with
/// component k0 ∘ Ψ + Ω ∘ g1.
ChainHomotopy hcompose(const ChainHomotopy& psi, const ChainHomotopy& omega);

/// psi : f => g, phi : g => h (C -> D); omega : k => l, chi : l => m (D -> E).
/// Compares hcompose(vcompose(psi, phi), vcompose(omega, chi)) with
/// vcompose(hcompose(psi, omega), hcompose(phi, chi)). Throws ValidationError
/// if an input is not a homotopy, CompositionError if they do not paste.
bool check_interchange(const TwoTermComplex& c, const TwoTermComplex& d, const TwoTermComplex& e,
                       const ChainHomotopy& psi, const ChainHomotopy& phi, const ChainHomotopy& omega,
                       const ChainHomotopy& chi);

}  // namespace wrep
