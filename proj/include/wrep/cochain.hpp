#pragma once

// Groupoid cochains and the total operator of a 2-term representation up to
// homotopy.
//
// A degree-k cochain assigns to each composable k-tuple (g1, ..., gk) a vector
// in the fiber over t(g1); degree 0 cochains are sections over the objects.
// Sign convention for the total operator on C^n(G;E0) ⊕ C^{n-1}(G;E1):
//
//   D(ω, η) = (D_λ0 ω + Ω̂ η,  δ ω - D_λ1 η),   (Ω̂ η)(g1, ..., g_{m+2}) = Ω_{g1,g2} η(g3, ..., g_{m+2})
//
// where D_λ is the twisted differential
//
//   (D_λ ω)(g1..g_{k+1}) = λ_{g1} ω(g2..) + Σ_{i=1..k} (-1)^i ω(.., g_i g_{i+1}, ..) + (-1)^{k+1} ω(g1..g_k).
//
// With this choice D² = 0 holds exactly when identities (1)-(4) hold, and
// D(ω⋆f) = Dω⋆f + (-1)^n ω⋆δf for ω of total degree n.

#include <cstddef>
#include <utility>
#include <vector>

#include "wrep/groupoid.hpp"
#include "wrep/linear.hpp"
#include "wrep/report.hpp"
#include "wrep/ruth.hpp"

namespace wrep {

/// Nerves of a groupoid in degrees 0..max_degree.
class CochainContext {
 public:
  explicit CochainContext(FiniteGroupoid g, int max_degree = 4);

  const FiniteGroupoid& groupoid() const { return g_; }
  int max_degree() const { return max_degree_; }
  /// Throws DegreeError outside 0..max_degree.
  const Nerve& nerve(int k) const;
  /// Object over which a degree-k cochain takes its value at simplex i.
  int value_object(int k, std::size_t i) const;

 private:
  FiniteGroupoid g_;
  int max_degree_;
  std::vector<Nerve> nerves_;
};

/// Coefficient fiber dimensions per object; scalars use dimension 1.
using FiberDims = std::vector<std::size_t>;
FiberDims scalar_dims(const FiniteGroupoid& g);

struct Cochain {
  int degree = 0;
  std::vector<Vector> values;  // one per simplex of the nerve in this degree

  bool operator==(const Cochain&) const = default;
};

Cochain zero_cochain(const CochainContext& ctx, int degree, const FiberDims& dims);
bool is_zero(const Cochain& c);
Cochain operator+(const Cochain& a, const Cochain& b);
Cochain operator-(const Cochain& a, const Cochain& b);
Cochain operator-(const Cochain& a);
/// True when the cochain vanishes on every tuple containing a unit.
bool is_normalized(const CochainContext& ctx, const Cochain& c);

/// δf for a scalar cochain: degree 0 is f(s g) - f(t g), higher degrees use the
/// alternating sum. Throws DegreeError past the context's maximum.
Cochain coboundary(const CochainContext& ctx, const Cochain& f);

/// (ω⋆f)(g1..g_{p+q}) = f(g_{p+1}..g_{p+q}) · ω(g1..g_p). Throws DegreeError.
Cochain star(const CochainContext& ctx, const Cochain& w, const Cochain& f);

/// D_λ for a quasi-action λ (one matrix per arrow). Throws DegreeError.
Cochain twisted_differential(const CochainContext& ctx, const std::vector<Matrix>& lambda, const Cochain& w);

/// An element of total degree n: e0 in C^n(G;E0), e1 in C^{n-1}(G;E1) (empty when n = 0).
struct TotalCochain {
  int degree = 0;
  Cochain e0;
  Cochain e1;

  bool operator==(const TotalCochain&) const = default;
};

TotalCochain zero_total(const CochainContext& ctx, const Ruth& r, int degree);
/// Basis element of total degree n: layer 0 or 1, simplex index, fiber coordinate.
TotalCochain total_basis_element(const CochainContext& ctx, const Ruth& r, int degree, int layer, std::size_t simplex,
                                 std::size_t coord);
/// Number of basis elements of total degree n.
std::size_t total_dimension(const CochainContext& ctx, const Ruth& r, int degree);
TotalCochain total_basis_element(const CochainContext& ctx, const Ruth& r, int degree, std::size_t index);

TotalCochain total_operator(const CochainContext& ctx, const Ruth& r, const TotalCochain& c);
TotalCochain star(const CochainContext& ctx, const Ruth& r, const TotalCochain& w, const Cochain& f);

/// D as a block-sparse operator from total degree n to n+1: for each target
/// (layer, simplex), the source blocks (layer, simplex) with their matrices.
struct SparseOperator {
  struct Key {
    int layer;
    std::size_t simplex;
    auto operator<=>(const Key&) const = default;
  };
  int degree = 0;
  std::vector<std::pair<Key, std::vector<std::pair<Key, Matrix>>>> rows;
};

SparseOperator total_operator_blocks(const CochainContext& ctx, const Ruth& r, int degree);

/// Checks D∘D = 0 from every total degree 0..max_total_degree, blockwise.
/// Violations are reported at the target tuple with the offending source block.
Report check_d_squared(const Ruth& r, int max_total_degree = 2);

struct LeibnizSample {
  TotalCochain w;
  Cochain f;
};

/// D(ω⋆f) = Dω⋆f + (-1)^{|ω|} ω⋆δf on each sample.
Report check_leibniz(const CochainContext& ctx, const Ruth& r, const std::vector<LeibnizSample>& samples);

}  // namespace wrep
