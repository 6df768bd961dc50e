#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wrep/groupoid.hpp"
#include "wrep/linear.hpp"
#include "wrep/report.hpp"

namespace wrep {

using ArrowPair = std::pair<int, int>;

/// A VB-groupoid over a finite groupoid G, presented fiberwise in fixed
/// ordered bases: V0 has fiber dimension objdim[x] over each object, V1 has
/// arrdim[g] over each arrow, and every structure map is a matrix between
/// fibers covering the corresponding structure map of G.
///
/// Multiplication over a composable pair (g, h) is a linear map on the
/// fibered product P(g,h) = {(v, w) : source(v) = target(w)} inside
/// V1(g) ⊕ V1(h), written in the basis `kernel_basis([source_g | -target_h])`.
struct VBGroupoid {
  FiniteGroupoid base;
  std::vector<std::size_t> objdim;
  std::vector<std::size_t> arrdim;
  std::vector<Matrix> source;  // per arrow g: V1(g) -> V0(s g)
  std::vector<Matrix> target;  // per arrow g: V1(g) -> V0(t g)
  std::vector<Matrix> unit;    // per object x: V0(x) -> V1(u x)
  std::vector<Matrix> inverse; // per arrow g: V1(g) -> V1(g^-1)
  std::map<ArrowPair, Matrix> mult;  // (g, h): P(g,h) -> V1(g∘h)

  bool operator==(const VBGroupoid&) const = default;
};

/// A linear groupoid bundle is a VB-groupoid over a trivial groupoid; the
/// fiber groupoid over object x lives at arrow index x.
using LinearGroupoidBundle = VBGroupoid;

bool is_over_trivial_base(const VBGroupoid& v);

/// Basis of P(g,h) (columns, in V1(g) ⊕ V1(h)).
Matrix fibered_product_basis(const VBGroupoid& v, int g, int h);

/// Cached fibered-product bases and coordinate maps for repeated multiplication.
class FiberedProducts {
 public:
  explicit FiberedProducts(const VBGroupoid& v);

  const Matrix& basis(int g, int h) const { return entries_.at({g, h}).basis; }
  /// Left inverse of basis(g, h): ambient pair -> coordinates.
  const Matrix& coordinates(int g, int h) const { return entries_.at({g, h}).coords; }

 private:
  struct Entry {
    Matrix basis;
    Matrix coords;
  };
  std::map<ArrowPair, Entry> entries_;
};

/// Multiplies the arrow-valued maps a: X -> V1(g) and b: X -> V1(h) pointwise:
/// x ↦ a(x)·b(x). Returns nullopt when source∘a != target∘b.
std::optional<Matrix> multiply_maps(const VBGroupoid& v, const FiberedProducts& fp, int g, int h, const Matrix& a,
                                    const Matrix& b);
/// As multiply_maps, throwing CompositionError when the maps are not composable.
Matrix multiply_maps_or_throw(const VBGroupoid& v, const FiberedProducts& fp, int g, int h, const Matrix& a,
                              const Matrix& b);

/// Shapes only; throws StructureError describing the first mismatch.
void check_vb_shapes(const VBGroupoid& v);

/// Fiberwise groupoid axioms on bases: source surjectivity, unit endpoints,
/// multiplication endpoints, unit laws, inverse laws, associativity.
/// Throws StructureError on inconsistent shapes.
Report validate_vb(const VBGroupoid& v);

/// A map of VB-groupoids (or of linear groupoid bundles) given fiberwise.
/// object_map / arrow_map are the maps of base groupoids; for maps over G they
/// are identities.
struct VBMap {
  std::vector<int> object_map;
  std::vector<int> arrow_map;
  std::vector<Matrix> on_objects;  // per object x: V0(x) -> W0(object_map[x])
  std::vector<Matrix> on_arrows;   // per arrow g: V1(g) -> W1(arrow_map[g])

  bool operator==(const VBMap&) const = default;
};

VBMap identity_vb_map(const VBGroupoid& v);
/// f2 ∘ f1.
VBMap compose(const VBMap& f2, const VBMap& f1);
bool is_fiberwise_invertible(const VBMap& f);
/// Inverse of a fiberwise invertible map over identity base maps.
VBMap inverse(const VBMap& f);

/// Functoriality and linear compatibility of f : v -> w.
Report validate_vb_map(const VBGroupoid& v, const VBGroupoid& w, const VBMap& f);

/// Natural transformation between maps of linear groupoid bundles F, G : V -> W:
/// per object x of the base of V, a linear map V0(x) -> W1(object_map[x]).
struct BundleTransformation {
  std::vector<Matrix> components;

  bool operator==(const BundleTransformation&) const = default;
};

Report validate_transformation(const LinearGroupoidBundle& v, const LinearGroupoidBundle& w, const VBMap& from,
                               const VBMap& to, const BundleTransformation& eta);

/// Rebuilds v in new fiber bases: object_iso[x] : V0(x) -> V0'(x) and
/// arrow_iso[g] : V1(g) -> V1'(g). Returns the transported groupoid; the
/// isomorphism v -> transported has the given matrices as components.
VBGroupoid transport(const VBGroupoid& v, const std::vector<Matrix>& object_iso, const std::vector<Matrix>& arrow_iso);

/// Wraps fiber isomorphisms as a VBMap over identity base maps.
VBMap fiber_iso_map(const VBGroupoid& v, std::vector<Matrix> object_iso, std::vector<Matrix> arrow_iso);

/// Multiplication expressed on the whole of V1(g) ⊕ V1(h) restricted to P(g,h):
/// given an ambient formula `ambient` : V1(g) ⊕ V1(h) -> V1(gh), returns the
/// stored form ambient ∘ basis(P(g,h)).
Matrix restrict_to_fibered_product(const VBGroupoid& v, int g, int h, const Matrix& ambient);

}  // namespace wrep
