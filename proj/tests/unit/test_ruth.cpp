#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wrep/cochain.hpp"
#include "wrep/errors.hpp"
#include "wrep/generate.hpp"
#include "wrep/ruth.hpp"

using namespace wrep;

namespace {

Matrix scalar(const Rational& q) { return Matrix(1, 1, {q}); }

std::size_t at(const FiniteGroupoid& g, const std::string& a) { return static_cast<std::size_t>(g.arrow_index(a)); }

}  // namespace

TEST_CASE("Z2-RUTH is valid for every omega") {
  for (int w : {-3, 0, 1, 7}) CHECK(validate_ruth(z2_ruth(w)).ok());
  CHECK(validate_ruth(z2_ruth(Rational(2, 5))).ok());
}

TEST_CASE("broken identity (4) is located at (g,g,g)") {
  const Report r = validate_ruth(z2_ruth_broken4());
  REQUIRE_FALSE(r.ok());
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].check == "identity(4)");
  CHECK(r.violations[0].location == "(g,g,g)");
  CHECK(r.violations[0].actual == "[[-2]]");
}

TEST_CASE("strict representations are valid") {
  Rng rng(11);
  for (int i = 0; i < 30; ++i) {
    const Ruth r = strict_ruth(random_groupoid(rng, {3, 8, 3}), rng, 3);
    CHECK(validate_ruth(r).ok());
  }
}

TEST_CASE("unitality and normalization are checked") {
  Ruth r = z2_ruth(1);
  r.omega[{static_cast<int>(at(r.groupoid, "e")), static_cast<int>(at(r.groupoid, "g"))}] = scalar(1);
  CHECK(validate_ruth(r).mentions("normalization"));
  r = z2_ruth(1);
  r.lambda0[at(r.groupoid, "e")] = scalar(2);
  CHECK(validate_ruth(r).mentions("unitality"));
}

TEST_CASE("shape errors throw") {
  Ruth r = z2_ruth(1);
  r.lambda0[0] = Matrix::zero(2, 1);
  CHECK_THROWS_AS(validate_ruth(r), StructureError);
}

TEST_CASE("gauge transport example") {
  const Ruth target = z2_ruth(1);
  const auto& G = target.groupoid;
  std::vector<Matrix> mu(2);
  mu[at(G, "e")] = scalar(0);
  mu[at(G, "g")] = scalar(1);
  const GaugeResult res = gauge_transport(target, {scalar(2)}, {scalar(2)}, mu);
  CHECK(res.source.delta(0) == scalar(0));
  CHECK(res.source.lambda0[at(G, "g")] == scalar(-1));
  CHECK(res.source.lambda1[at(G, "g")] == scalar(-1));
  CHECK(res.source.omega_at(static_cast<int>(at(G, "g")), static_cast<int>(at(G, "g"))) == scalar(2));
  CHECK(validate_ruth(res.source).ok());
  CHECK(validate_morphism(res.source, target, res.morphism).ok());
}

TEST_CASE("gauge transport rejects singular phi and unit mu") {
  const Ruth target = z2_ruth(1);
  std::vector<Matrix> mu{scalar(0), scalar(0)};
  CHECK_THROWS_AS(gauge_transport(target, {scalar(0)}, {scalar(1)}, mu), NotInvertibleError);
  mu[at(target.groupoid, "e")] = scalar(1);
  CHECK_THROWS_AS(gauge_transport(target, {scalar(1)}, {scalar(1)}, mu), StructureError);
}

TEST_CASE("identity, composition, inverse of morphisms") {
  Rng rng(5);
  for (int i = 0; i < 25; ++i) {
    const Ruth r = random_ruth(rng, {3, 6, 2});
    REQUIRE(validate_ruth(r).ok());
    CHECK(validate_morphism(r, r, identity_morphism(r)).ok());
    const GaugeResult a = random_morphism_into(r, rng);   // a.source -> r
    const GaugeResult b = random_morphism_into(a.source, rng);  // b.source -> a.source
    const GaugeResult c = random_morphism_into(b.source, rng);
    REQUIRE(validate_morphism(a.source, r, a.morphism).ok());
    const auto& G = r.groupoid;
    const RuthMorphism ab = compose_morphisms(G, a.morphism, b.morphism);
    CHECK(validate_morphism(b.source, r, ab).ok());
    CHECK(compose_morphisms(G, a.morphism, identity_morphism(a.source)) == a.morphism);
    CHECK(compose_morphisms(G, identity_morphism(r), a.morphism) == a.morphism);
    CHECK(compose_morphisms(G, compose_morphisms(G, a.morphism, b.morphism), c.morphism) ==
          compose_morphisms(G, a.morphism, compose_morphisms(G, b.morphism, c.morphism)));
    const RuthMorphism inv = inverse_morphism(a.source, r, a.morphism);
    CHECK(validate_morphism(r, a.source, inv).ok());
    CHECK(compose_morphisms(G, inv, a.morphism) == identity_morphism(a.source));
  }
}

TEST_CASE("perturbed mu breaks the fourth identity") {
  Rng rng(9);
  const Ruth target = z2_ruth(1);
  GaugeResult res = random_morphism_into(target, rng);
  res.morphism.mu[at(target.groupoid, "g")] += scalar(1);
  const Report rep = validate_morphism(res.source, target, res.morphism);
  CHECK(rep.mentions("morphism(4)"));
}

TEST_CASE("coboundary") {
  const FiniteGroupoid g = z2_groupoid();
  const CochainContext ctx(g, 4);
  const Cochain c0{0, {{5}}};
  CHECK(is_zero(coboundary(ctx, c0)));
  Cochain f{1, {}};
  f.values.resize(2);
  f.values[at(g, "e")] = {0};
  f.values[at(g, "g")] = {1};
  const Cochain df = coboundary(ctx, f);
  const std::size_t gg = *ctx.nerve(2).find({static_cast<int>(at(g, "g")), static_cast<int>(at(g, "g"))});
  CHECK(df.values[gg] == Vector{2});
  CHECK(is_zero(coboundary(ctx, df)));
  CHECK_THROWS_AS(coboundary(ctx, zero_cochain(ctx, 4, scalar_dims(g))), DegreeError);
}

TEST_CASE("coboundary squares to zero on random groupoids") {
  Rng rng(21);
  for (int i = 0; i < 10; ++i) {
    const FiniteGroupoid g = random_groupoid(rng, {3, 6, 1});
    const CochainContext ctx(g, 4);
    for (int k = 0; k <= 2; ++k) {
      Cochain f = zero_cochain(ctx, k, scalar_dims(g));
      for (auto& v : f.values) v[0] = rng.range(-3, 3);
      CHECK(is_zero(coboundary(ctx, coboundary(ctx, f))));
    }
  }
}

TEST_CASE("star") {
  const FiniteGroupoid g = z2_groupoid();
  const CochainContext ctx(g, 4);
  Cochain w = zero_cochain(ctx, 1, {1});
  w.values[at(g, "g")] = {1};
  Cochain f = zero_cochain(ctx, 1, scalar_dims(g));
  f.values[at(g, "g")] = {2};
  const Cochain wf = star(ctx, w, f);
  const int gi = static_cast<int>(at(g, "g"));
  CHECK(wf.values[*ctx.nerve(2).find({gi, gi})] == Vector{2});
  const Cochain one{0, {{1}}};
  CHECK(star(ctx, w, one) == w);
  const Cochain w0{0, {{3}}}, f0{0, {{4}}};
  CHECK(star(ctx, w0, f0) == Cochain{0, {{12}}});
}

TEST_CASE("twisted differential") {
  const FiniteGroupoid g = z2_groupoid();
  const CochainContext ctx(g, 4);
  const std::vector<Matrix> trivial{scalar(1), scalar(1)};
  Rng rng(2);
  for (int k = 0; k <= 2; ++k) {
    Cochain f = zero_cochain(ctx, k, scalar_dims(g));
    for (auto& v : f.values) v[0] = rng.range(-3, 3);
    CHECK(twisted_differential(ctx, trivial, f) == coboundary(ctx, f));
  }
  std::vector<Matrix> sign(2);
  sign[at(g, "e")] = scalar(1);
  sign[at(g, "g")] = scalar(-1);
  const Cochain one{0, {{1}}};
  const Cochain d = twisted_differential(ctx, sign, one);
  CHECK(d.values[at(g, "g")] == Vector{-2});
  for (int k = 0; k <= 1; ++k) {
    for (std::size_t i = 0; i < ctx.nerve(k).size(); ++i) {
      Cochain b = zero_cochain(ctx, k, {1});
      b.values[i][0] = 1;
      CHECK(is_zero(twisted_differential(ctx, sign, twisted_differential(ctx, sign, b))));
    }
  }
}

TEST_CASE("D squared on fixtures") {
  CHECK(check_d_squared(z2_ruth(0)).ok());
  CHECK(check_d_squared(z2_ruth(1)).ok());
  CHECK_FALSE(check_d_squared(z2_ruth_broken4()).ok());
}

TEST_CASE("D squared agrees with direct evaluation") {
  Rng rng(13);
  for (int trial = 0; trial < 6; ++trial) {
    Ruth r = random_ruth(rng, {2, 4, 2});
    if (trial % 2 == 1) {
      // break something at a non-unit arrow
      for (std::size_t a = 0; a < r.lambda1.size(); ++a)
        if (!r.groupoid.is_unit(static_cast<int>(a)) && r.lambda1[a].rows() > 0) {
          r.lambda1[a](0, 0) += 1;
          break;
        }
    }
    const CochainContext ctx(r.groupoid, 4);
    bool direct_zero = true;
    for (int n = 0; n <= 2; ++n)
      for (std::size_t i = 0; i < total_dimension(ctx, r, n); ++i) {
        const TotalCochain b = total_basis_element(ctx, r, n, i);
        const TotalCochain dd = total_operator(ctx, r, total_operator(ctx, r, b));
        if (!is_zero(dd.e0) || !is_zero(dd.e1)) direct_zero = false;
      }
    CHECK(direct_zero == check_d_squared(r).ok());
    const Report v = validate_ruth(r);
    CHECK(direct_zero == (!v.mentions("identity(1)") && !v.mentions("identity(2)") && !v.mentions("identity(3)") &&
                          !v.mentions("identity(4)")));
  }
}

TEST_CASE("Leibniz rule") {
  const Ruth r = z2_ruth(1);
  const CochainContext ctx(r.groupoid, 4);
  std::vector<LeibnizSample> samples;
  const Cochain one{0, {{1}}};
  for (int n = 0; n <= 1; ++n)
    for (std::size_t i = 0; i < total_dimension(ctx, r, n); ++i) {
      const TotalCochain w = total_basis_element(ctx, r, n, i);
      samples.push_back({w, one});
      for (int q = 0; q <= 2 - n; ++q)
        for (std::size_t j = 0; j < ctx.nerve(q).size(); ++j) {
          Cochain f = zero_cochain(ctx, q, scalar_dims(r.groupoid));
          f.values[j][0] = 1;
          samples.push_back({w, f});
        }
    }
  samples.push_back({zero_total(ctx, r, 1), Cochain{1, {{3}, {4}}}});
  CHECK(check_leibniz(ctx, r, samples).ok());

  Rng rng(4);
  const Ruth s = random_ruth(rng, {2, 4, 2});
  const CochainContext cs(s.groupoid, 4);
  std::vector<LeibnizSample> more;
  for (int n = 0; n <= 1; ++n)
    for (std::size_t i = 0; i < total_dimension(cs, s, n); ++i)
      for (int q = 0; q <= 1; ++q) {
        Cochain f = zero_cochain(cs, q, scalar_dims(s.groupoid));
        for (auto& v : f.values) v[0] = rng.range(-2, 2);
        more.push_back({total_basis_element(cs, s, n, i), f});
      }
  CHECK(check_leibniz(cs, s, more).ok());
}

TEST_CASE("D preserves normalized cochains") {
  Rng rng(8);
  const Ruth r = random_ruth(rng, {2, 4, 2});
  const CochainContext ctx(r.groupoid, 4);
  for (int n = 1; n <= 2; ++n) {
    TotalCochain c = zero_total(ctx, r, n);
    const auto f0 = degeneracy_positions(r.groupoid, ctx.nerve(n));
    for (std::size_t i = 0; i < c.e0.values.size(); ++i)
      if (!f0[i])
        for (auto& x : c.e0.values[i]) x = rng.range(-2, 2);
    const auto f1 = degeneracy_positions(r.groupoid, ctx.nerve(n - 1));
    for (std::size_t i = 0; i < c.e1.values.size(); ++i)
      if (n - 1 == 0 || !f1[i])
        for (auto& x : c.e1.values[i]) x = rng.range(-2, 2);
    const TotalCochain d = total_operator(ctx, r, c);
    CHECK(is_normalized(ctx, d.e0));
    CHECK(is_normalized(ctx, d.e1));
  }
}
