#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wrep/cochain.hpp"
#include "wrep/errors.hpp"
#include "wrep/generate.hpp"
#include "wrep/phi.hpp"
#include "wrep/semidirect.hpp"
#include "wrep/wrep.hpp"

using namespace wrep;

namespace {

int at(const FiniteGroupoid& g, const std::string& a) { return g.arrow_index(a); }

Matrix scalar(const Rational& q) { return Matrix(1, 1, {q}); }

// Z3 acting trivially on the complex Q -> Q with δ = 0.
Ruth trivial_z3() {
  Ruth r;
  r.groupoid = cyclic_group(3);
  r.complex = {{"*"}, {scalar(0)}};
  for (int g = 0; g < 3; ++g) {
    r.lambda0.push_back(scalar(1));
    r.lambda1.push_back(scalar(1));
  }
  for (int g = 0; g < 3; ++g)
    for (int h = 0; h < 3; ++h) r.omega[{g, h}] = scalar(0);
  return r;
}

void check_act_iso(const VBGroupoid& from, const VBGroupoid& to, const VBMap& f) {
  CHECK(validate_vb_map(from, to, f).ok());
  CHECK(is_fiberwise_invertible(f));
}

}  // namespace

TEST_CASE("Phi(G) on Z2-RUTH(1)") {
  const Ruth r = z2_ruth(1);
  const WeakRepresentation w = wrep_from_ruth(r);
  CHECK(validate_wrep(w).ok());
  const int g = at(r.groupoid, "g");
  CHECK(w.alpha.at({g, g}) == Matrix::vstack(scalar(1), scalar(1)));
  CHECK(w.a0[static_cast<std::size_t>(g)] == scalar(-1));
  CHECK(ruth_from_wrep(w) == r);

  const WeakRepresentation strict = wrep_from_ruth(z2_ruth(0));
  CHECK(validate_wrep(strict).ok());
  CHECK(strict.alpha.at({g, g}).rows_range(0, 1).is_zero());
  CHECK(ruth_from_wrep(strict).omega_at(g, g).is_zero());
  CHECK_THROWS_AS(wrep_from_ruth(z2_ruth_broken4()), ValidationError);
}

TEST_CASE("pentagon violation is located") {
  const Ruth r = trivial_z3();
  REQUIRE(validate_ruth(r).ok());
  WeakRepresentation w = wrep_from_ruth(r);
  REQUIRE(validate_wrep(w).ok());
  const int r1 = at(r.groupoid, "r1");
  // compose α(r1,r1,·) with the kernel arrow (1, 0): endpoints stay put since δ = 0
  w.alpha[{r1, r1}](0, 0) += 1;
  const Report rep = validate_wrep(w);
  CHECK(rep.mentions("pentagon"));
  CHECK_FALSE(rep.mentions("alpha-source"));
  CHECK_FALSE(rep.mentions("alpha-target"));
  bool located = false;
  for (const auto& v : rep.violations)
    if (v.check == "pentagon" && v.location.rfind("(r1,r1,", 0) == 0) located = true;
  CHECK(located);
}

TEST_CASE("unitality and alpha mutations are reported") {
  const Ruth r = z2_ruth(1);
  const int e = at(r.groupoid, "e"), g = at(r.groupoid, "g");
  WeakRepresentation w = wrep_from_ruth(r);
  w.a0[static_cast<std::size_t>(e)] = scalar(2);
  CHECK(validate_wrep(w).mentions("unitality"));
  w = wrep_from_ruth(r);
  w.alpha[{g, g}](1, 0) += 1;
  CHECK(validate_wrep(w).mentions("alpha-source"));
  w = wrep_from_ruth(r);
  w.alpha[{e, g}](0, 0) = 1;
  CHECK(validate_wrep(w).mentions("alpha-unit"));
  w = wrep_from_ruth(r);
  w.alpha.erase({g, g});
  CHECK_THROWS_AS(validate_wrep(w), StructureError);
}

TEST_CASE("Phi(G) round trips on random Ruths") {
  Rng rng(71);
  for (int i = 0; i < 25; ++i) {
    const Ruth r = random_ruth(rng, {3, 8, 2});
    const WeakRepresentation w = wrep_from_ruth(r);
    REQUIRE(validate_wrep(w).ok());
    CHECK(ruth_from_wrep(w) == r);

    // scrambled bases give an isomorphic Ruth, with a validated witness
    const auto q = random_isos(rng, w.bundle.objdim);
    const auto p = random_isos(rng, w.bundle.arrdim);
    const WeakRepresentation s = transport_wrep(w, q, p);
    REQUIRE(validate_wrep(s).ok());
    const EquivariantMap there = fiber_iso_equivariant(s, q, p);
    CHECK(validate_equivariant(w, s, there).ok());
    std::vector<Matrix> qi, pi;
    for (const auto& m : q) qi.push_back(inverse(m));
    for (const auto& m : p) pi.push_back(inverse(m));
    const EquivariantMap back = fiber_iso_equivariant(w, qi, pi);
    CHECK(validate_equivariant(s, w, back).ok());
    const Ruth rs = ruth_from_wrep(s);
    CHECK(validate_ruth(rs).ok());
    const RuthMorphism witness = ruth_morphism_from_equivariant(s, w, back);
    CHECK(validate_morphism(rs, r, witness).ok());
    CHECK(is_isomorphism(witness));
    CHECK(check_d_squared(rs).ok());
  }
}

TEST_CASE("Phi(G) on morphisms is functorial") {
  Rng rng(73);
  for (int i = 0; i < 20; ++i) {
    const Ruth r = random_ruth(rng, {3, 6, 2});
    const GaugeResult a = random_morphism_into(r, rng);
    const GaugeResult b = random_morphism_into(a.source, rng);
    const WeakRepresentation wr = wrep_from_ruth(r), wa = wrep_from_ruth(a.source), wb = wrep_from_ruth(b.source);
    const EquivariantMap ea = equivariant_from_ruth_morphism(a.source, r, a.morphism);
    const EquivariantMap eb = equivariant_from_ruth_morphism(b.source, a.source, b.morphism);
    CHECK(validate_equivariant(wa, wr, ea).ok());
    const EquivariantMap eab = compose_equivariant(wr, ea, eb);
    CHECK(validate_equivariant(wb, wr, eab).ok());
    CHECK(equivariant_from_ruth_morphism(b.source, r, compose_morphisms(r.groupoid, a.morphism, b.morphism)) == eab);
    CHECK(equivariant_from_ruth_morphism(r, r, identity_morphism(r)) == identity_equivariant(wr));
    CHECK(compose_equivariant(wr, ea, identity_equivariant(wa)) == ea);
    CHECK(ruth_morphism_from_equivariant(wa, wr, ea) == a.morphism);

    EquivariantMap broken = ea;
    broken.delta.back()(0, 0) += 1;
    CHECK_FALSE(validate_equivariant(wa, wr, broken).ok());
  }
}

TEST_CASE("action groupoid of Phi(G) images") {
  const Ruth r = z2_ruth(1);
  const WeakRepresentation w = wrep_from_ruth(r);
  const VBGroupoid act = action_groupoid(w);
  CHECK(validate_vb(act).ok());
  // unit (u, x, ũ x) has coordinates (x, 0)
  CHECK(act.unit[0] == Matrix::vstack(Matrix::identity(1), Matrix::zero(1, 1)));
  const VBMap theta = triangle_iso(r);
  check_act_iso(act, semidirect(r), theta);
  CHECK(theta.on_arrows[static_cast<std::size_t>(at(r.groupoid, "g"))] == Matrix::from_rows({{0, -1}, {1, 0}}));

  Rng rng(79);
  for (int i = 0; i < 25; ++i) {
    const Ruth s = random_ruth(rng, {3, 8, 2});
    const VBGroupoid a = action_groupoid(wrep_from_ruth(s));
    CHECK(validate_vb(a).ok());
    check_act_iso(a, semidirect(s), triangle_iso(s));
  }
}

TEST_CASE("Act is functorial and fully faithful") {
  Rng rng(83);
  for (int i = 0; i < 20; ++i) {
    const Ruth r = random_ruth(rng, {3, 6, 2});
    const GaugeResult a = random_morphism_into(r, rng);
    const GaugeResult b = random_morphism_into(a.source, rng);
    const WeakRepresentation wr = wrep_from_ruth(r), wa = wrep_from_ruth(a.source), wb = wrep_from_ruth(b.source);
    const EquivariantMap ea = equivariant_from_ruth_morphism(a.source, r, a.morphism);
    const EquivariantMap eb = equivariant_from_ruth_morphism(b.source, a.source, b.morphism);
    const VBMap fa = act_on_morphism(wa, wr, ea);
    CHECK(validate_vb_map(action_groupoid(wa), action_groupoid(wr), fa).ok());
    CHECK(act_on_morphism(wb, wr, compose_equivariant(wr, ea, eb)) == compose(fa, act_on_morphism(wb, wa, eb)));
    CHECK(act_on_morphism(wr, wr, identity_equivariant(wr)) == identity_vb_map(action_groupoid(wr)));
    CHECK(reconstruct_equivariant(wa, wr, fa) == ea);
    CHECK(act_on_morphism(wa, wr, reconstruct_equivariant(wa, wr, fa)) == fa);
    CHECK(reconstruct_equivariant(wr, wr, identity_vb_map(action_groupoid(wr))) == identity_equivariant(wr));

    // the same through scrambled bases
    const auto q = random_isos(rng, wr.bundle.objdim);
    const auto p = random_isos(rng, wr.bundle.arrdim);
    const WeakRepresentation s = transport_wrep(wr, q, p);
    const EquivariantMap to_s = compose_equivariant(s, fiber_iso_equivariant(s, q, p), ea);
    CHECK(validate_equivariant(wa, s, to_s).ok());
    const VBMap fs = act_on_morphism(wa, s, to_s);
    CHECK(reconstruct_equivariant(wa, s, fs) == to_s);
    CHECK(act_on_morphism(wa, s, reconstruct_equivariant(wa, s, fs)) == fs);
  }
  VBMap off = identity_vb_map(action_groupoid(wrep_from_ruth(z2_ruth(1))));
  off.arrow_map = {1, 0};
  CHECK_THROWS_AS(reconstruct_equivariant(wrep_from_ruth(z2_ruth(1)), wrep_from_ruth(z2_ruth(1)), off), StructureError);
}

TEST_CASE("essential surjectivity") {
  const Ruth z = z2_ruth(1);
  const VBGroupoid sz = semidirect(z);
  const KernelRepresentation k = vb_to_wrep(sz);
  CHECK(validate_wrep(k.rep).ok());
  CHECK(k.rep.bundle == phi_object(z.complex));
  for (int x = 0; x < 1; ++x) CHECK(k.rep.a1[static_cast<std::size_t>(sz.base.unit(x))].is_identity());
  check_act_iso(sz, action_groupoid(k.rep), k.to_action);

  Rng rng(89);
  for (int i = 0; i < 20; ++i) {
    const Ruth r = random_ruth(rng, {3, 8, 2});
    const VBGroupoid v = semidirect(r);
    const auto q = random_isos(rng, v.objdim);
    const VBGroupoid sv = transport(v, q, random_isos(rng, v.arrdim));
    const KernelRepresentation kr = vb_to_wrep(sv);
    CHECK(validate_wrep(kr.rep).ok());
    check_act_iso(sv, action_groupoid(kr.rep), kr.to_action);

    const Connection other = random_connection(sv, kr.connection, rng);
    REQUIRE(validate_connection(sv, other).ok());
    const KernelRepresentation kr2 = vb_to_wrep(sv, other);
    const EquivariantMap e = compare_kernel_representations(kr, kr2);
    CHECK(validate_equivariant(kr.rep, kr2.rep, e).ok());
    CHECK(is_isomorphism(e));

    const VBSplitting split = vb_to_ruth(sv);
    CHECK(validate_ruth(split.ruth).ok());
    check_act_iso(sv, semidirect(split.ruth), split.to_semidirect);
    const VBSplitting direct = vb_to_ruth(v);
    const RuthMorphism witness = morphism_from_semidirect_map(r, direct.ruth, direct.to_semidirect);
    CHECK(validate_morphism(r, direct.ruth, witness).ok());
    CHECK(is_isomorphism(witness));
  }
}

TEST_CASE("kernel representation over a trivial base") {
  const VBGroupoid p = phi_object(TwoTermComplex{{"p", "q"}, {scalar(1), Matrix::zero(2, 1)}});
  const KernelRepresentation k = vb_to_wrep(p);
  for (const auto& m : k.rep.a0) CHECK(m.is_identity());
  for (const auto& m : k.rep.a1) CHECK(m.is_identity());
  CHECK(k.rep.bundle == p);
  check_act_iso(p, action_groupoid(k.rep), k.to_action);
}
