#pragma once

// Fixture groupoids and representations, plus seeded random instances.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wrep/complex.hpp"
#include "wrep/groupoid.hpp"
#include "wrep/linear.hpp"
#include "wrep/ruth.hpp"
#include "wrep/semidirect.hpp"
#include "wrep/vb.hpp"

namespace wrep {

/// Seeded generator with portable integer draws (no std distributions, whose
/// output differs between standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [lo, hi].
  int range(int lo, int hi) { return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin() { return engine_() % 2 == 0; }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// One object "*", arrows e (unit) and g with g∘g = e.
FiniteGroupoid z2_groupoid();
/// Objects x, y; arrows 1x, 1y, a : x -> y, b : y -> x.
FiniteGroupoid pair_groupoid();
/// Cyclic group of order n on one object "*"; arrow "r<k>" is the k-th power.
FiniteGroupoid cyclic_group(int n);

/// Disjoint union of pair(n_i) × Z_{m_i} components.
struct ComponentShape {
  int objects;
  int order;
};
FiniteGroupoid product_groupoid(const std::vector<ComponentShape>& components);

/// Over Z2 with E0 = E1 = Q, δ = 0, λ0_g = λ1_g = -1 and Ω_{g,g} = ω.
Ruth z2_ruth(const Rational& omega);
/// Z2-RUTH(1) with λ1_g = +1, breaking identity (4) at (g,g,g).
Ruth z2_ruth_broken4();

/// Strict action where arrows of the k-th cyclic power act by R^k for a fixed
/// finite-order matrix R per layer. δ is chosen equivariant; Ω = 0.
Ruth strict_ruth(const FiniteGroupoid& g, Rng& rng, int max_dim);

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound = 2);
Matrix random_invertible(Rng& rng, std::size_t n, int bound = 2);

struct GaugeData {
  std::vector<Matrix> phi0, phi1, mu;
};
/// Random invertible φ and μ vanishing at units, shaped for gauge_transport(target, ...).
GaugeData random_gauge(const Ruth& target, Rng& rng);

struct RandomBounds {
  int max_objects = 3;
  int max_arrows = 8;
  int max_dim = 2;
};

FiniteGroupoid random_groupoid(Rng& rng, const RandomBounds& bounds);
/// A gauge transport of a random strict representation: valid, usually not strict.
Ruth random_ruth(Rng& rng, const RandomBounds& bounds);
/// A random valid morphism into r (r is the target); returns the transported source too.
GaugeResult random_morphism_into(const Ruth& r, Rng& rng);

/// A random valid 2-term complex over the given base (sorted names).
TwoTermComplex random_complex(Rng& rng, const std::vector<std::string>& base, int max_dim);
/// A random chain map C -> D over the identity base (D must share C's base);
/// built as the sum of a homotopically trivial part and a diagonal part.
ChainMap random_chain_map(Rng& rng, const TwoTermComplex& c, const TwoTermComplex& d);
/// A homotopy from f to f + (δΩ, Ωδ) for random Ω.
ChainHomotopy random_homotopy_from(Rng& rng, const TwoTermComplex& c, const TwoTermComplex& d, const ChainMap& f);

/// One random invertible matrix per entry of dims.
std::vector<Matrix> random_isos(Rng& rng, const std::vector<std::size_t>& dims);
/// semidirect(random_ruth) rewritten in random fiber bases.
VBGroupoid random_vb(Rng& rng, const RandomBounds& bounds);
/// σ'_g = σ_g + K_g Z_g with K_g a basis of ker s̃_g and random Z_g, zero at units.
Connection random_connection(const VBGroupoid& v, const Connection& sigma, Rng& rng);

}  // namespace wrep
