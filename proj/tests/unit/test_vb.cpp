#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wrep/errors.hpp"
#include "wrep/generate.hpp"
#include "wrep/phi.hpp"
#include "wrep/semidirect.hpp"

using namespace wrep;

namespace {

std::size_t at(const FiniteGroupoid& g, const std::string& a) { return static_cast<std::size_t>(g.arrow_index(a)); }

}  // namespace

TEST_CASE("semidirect of Z2-RUTH(1)") {
  const Ruth r = z2_ruth(1);
  const VBGroupoid v = semidirect(r);
  CHECK(validate_vb(v).ok());
  const auto& G = r.groupoid;
  const int g = static_cast<int>(at(G, "g")), e = static_cast<int>(at(G, "e"));
  const FiberedProducts fp(v);
  // (g, e0, e1)·(g, f0, f1) with e1 = -f1 so that the pair is composable
  for (int e0 = -2; e0 <= 2; ++e0)
    for (int f0 = -2; f0 <= 2; ++f0)
      for (int f1 = -2; f1 <= 2; ++f1) {
        const Matrix a = Matrix::column({e0, -f1}), b = Matrix::column({f0, f1});
        const auto prod = multiply_maps(v, fp, g, g, a, b);
        REQUIRE(prod.has_value());
        CHECK(*prod == Matrix::column({e0 - f0 - f1, f1}));
      }
  CHECK(G.compose(g, g) == e);
  // units (u(x), 0, e) have source and target e
  CHECK((v.source[at(G, "e")] * v.unit[0]).is_identity());
  CHECK((v.target[at(G, "e")] * v.unit[0]).is_identity());
}

TEST_CASE("semidirect rejects invalid input and detects a flipped omega sign") {
  CHECK_THROWS_AS(semidirect(z2_ruth_broken4()), ValidationError);
  Rng rng(41);
  int trials = 0, associativity = 0;
  for (int i = 0; i < 40; ++i) {
    const Ruth r = random_ruth(rng, {2, 6, 2});
    Ruth flipped = r;
    for (auto& [p, w] : flipped.omega) w = -w;
    // flipping Ω is harmless when the flipped data is itself a Ruth
    if (validate_ruth(flipped).ok()) continue;
    VBGroupoid mixed = semidirect(r);
    mixed.mult = semidirect_unchecked(flipped).mult;
    ++trials;
    const Report rep = validate_vb(mixed);
    CHECK_FALSE(rep.ok());
    if (rep.mentions("associativity")) ++associativity;
  }
  CHECK(trials > 0);
  CHECK(associativity > 0);

  // Z2-RUTH(1) with the flipped sign is Z2-RUTH(-1): still associative
  VBGroupoid z = semidirect(z2_ruth(1));
  z.mult = semidirect(z2_ruth(-1)).mult;
  CHECK_FALSE(validate_vb(z).mentions("associativity"));
}

TEST_CASE("strict degeneration is the action groupoid of lambda1") {
  Rng rng(43);
  const Ruth r = strict_ruth(cyclic_group(4), rng, 2);
  const VBGroupoid v = semidirect(r);
  CHECK(validate_vb(v).ok());
}

TEST_CASE("semidirect products of random Ruths are valid") {
  Rng rng(47);
  for (int i = 0; i < 25; ++i) CHECK(validate_vb(semidirect(random_ruth(rng, {3, 8, 2}))).ok());
  CHECK(validate_vb(semidirect(z2_ruth(0))).ok());
}

TEST_CASE("psi is functorial") {
  Rng rng(53);
  for (int i = 0; i < 20; ++i) {
    const Ruth r = random_ruth(rng, {3, 6, 2});
    const GaugeResult a = random_morphism_into(r, rng);
    const GaugeResult b = random_morphism_into(a.source, rng);
    const VBMap pa = psi_morphism(a.source, r, a.morphism);
    const VBMap pb = psi_morphism(b.source, a.source, b.morphism);
    CHECK(validate_vb_map(semidirect(a.source), semidirect(r), pa).ok());
    const RuthMorphism ab = compose_morphisms(r.groupoid, a.morphism, b.morphism);
    CHECK(psi_morphism(b.source, r, ab) == compose(pa, pb));
    CHECK(psi_morphism(r, r, identity_morphism(r)) == identity_vb_map(semidirect(r)));
    CHECK(morphism_from_semidirect_map(a.source, r, pa) == a.morphism);
  }
  Ruth r = z2_ruth(1);
  RuthMorphism m = identity_morphism(r);
  m.mu[at(r.groupoid, "e")] = Matrix(1, 1, {1});
  CHECK_THROWS_AS(psi_morphism(r, r, m), ValidationError);
}

TEST_CASE("unital connections") {
  const Ruth r = z2_ruth(1);
  const VBGroupoid v = semidirect(r);
  const Connection c = find_unital_connection(v);
  CHECK(validate_connection(v, c).ok());
  // σ_g(e) = (0, e)
  CHECK(c.sigma[at(r.groupoid, "g")] == Matrix::vstack(Matrix::zero(1, 1), Matrix::identity(1)));

  const VBGroupoid p = phi_object(TwoTermComplex{{"p", "q"}, {Matrix(1, 1, {1}), Matrix::zero(2, 1)}});
  const Connection cp = find_unital_connection(p);
  for (int x = 0; x < 2; ++x) CHECK(cp.sigma[static_cast<std::size_t>(x)] == p.unit[static_cast<std::size_t>(x)]);

  Rng rng(59);
  for (int i = 0; i < 20; ++i) {
    const Ruth s = random_ruth(rng, {3, 6, 2});
    const VBGroupoid w = semidirect(s);
    const VBGroupoid scrambled = transport(w, random_isos(rng, w.objdim), random_isos(rng, w.arrdim));
    REQUIRE(validate_vb(scrambled).ok());
    CHECK(validate_connection(scrambled, find_unital_connection(scrambled)).ok());
  }
}

TEST_CASE("kernel groupoid") {
  Rng rng(61);
  for (int i = 0; i < 15; ++i) {
    const Ruth r = random_ruth(rng, {3, 6, 2});
    const VBGroupoid v = semidirect(r);
    const LinearGroupoidBundle k = kernel_groupoid(v);
    CHECK(validate_vb(k).ok());
    CHECK(k == phi_object(r.complex));
    CHECK(split_bundle(k).complex == r.complex);
    for (int x = 0; x < static_cast<int>(v.objdim.size()); ++x) {
      const auto u = static_cast<std::size_t>(v.base.unit(x));
      CHECK(k.arrdim[static_cast<std::size_t>(x)] == v.objdim[static_cast<std::size_t>(x)] + kernel_basis(v.source[u]).size());
    }
  }
  const LinearGroupoidBundle p = phi_object(TwoTermComplex{{"p"}, {Matrix(1, 1, {1})}});
  CHECK(kernel_groupoid(p) == p);
}

TEST_CASE("transport gives an isomorphic VB-groupoid") {
  Rng rng(67);
  for (int i = 0; i < 10; ++i) {
    const VBGroupoid v = semidirect(random_ruth(rng, {2, 6, 2}));
    const auto q = random_isos(rng, v.objdim);
    const auto p = random_isos(rng, v.arrdim);
    const VBGroupoid w = transport(v, q, p);
    CHECK(validate_vb(w).ok());
    const VBMap f = fiber_iso_map(v, q, p);
    CHECK(validate_vb_map(v, w, f).ok());
    CHECK(validate_vb_map(w, v, inverse(f)).ok());
  }
}

TEST_CASE("validate_vb flags broken structure") {
  const VBGroupoid v = semidirect(z2_ruth(1));
  VBGroupoid bad = v;
  bad.inverse[1](0, 0) += 1;
  CHECK_FALSE(validate_vb(bad).ok());
  bad = v;
  bad.unit[0](0, 0) += 1;
  CHECK_FALSE(validate_vb(bad).ok());
  bad = v;
  bad.source[0] = Matrix::zero(1, 2);
  CHECK_FALSE(validate_vb(bad).ok());
  bad = v;
  bad.mult.erase(bad.mult.begin());
  CHECK_THROWS_AS(validate_vb(bad), StructureError);
}
