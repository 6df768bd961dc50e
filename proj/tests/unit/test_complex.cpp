#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wrep/complex.hpp"
#include "wrep/errors.hpp"
#include "wrep/generate.hpp"
#include "wrep/phi.hpp"

using namespace wrep;

namespace {

Matrix scalar(const Rational& q) { return Matrix(1, 1, {q}); }

TwoTermComplex point(const Matrix& d) { return {{"p"}, {d}}; }

ChainMap point_map(const Matrix& f0, const Matrix& f1) { return {{0}, {f0}, {f1}}; }

}  // namespace

TEST_CASE("vertical composition adds components") {
  const TwoTermComplex c = point(scalar(0));
  const ChainMap f = point_map(scalar(1), scalar(1));
  const ChainHomotopy a{f, f, {scalar(1)}}, b{f, f, {scalar(2)}};
  CHECK(vcompose(a, b).omega[0] == scalar(3));
  CHECK(vcompose(a, zero_homotopy(c, c, f)) == a);
  const ChainHomotopy neg{f, f, {scalar(-2)}};
  CHECK(vcompose(b, neg) == zero_homotopy(c, c, f));
  const ChainHomotopy other{point_map(scalar(2), scalar(2)), f, {scalar(0)}};
  CHECK_THROWS_AS(vcompose(other, other), CompositionError);
}

TEST_CASE("horizontal composition") {
  // δ = 0 everywhere so every map is a chain map and every Ω a homotopy between equal maps
  const TwoTermComplex c = point(scalar(0));
  const ChainMap g = point_map(scalar(11), scalar(7));
  const ChainMap k = point_map(scalar(2), scalar(13));
  const ChainHomotopy psi{g, g, {scalar(3)}}, omega{k, k, {scalar(5)}};
  CHECK(hcompose(psi, omega).omega[0] == scalar(41));
  const ChainHomotopy zero_psi = zero_homotopy(c, c, g);
  CHECK(hcompose(zero_psi, omega).omega[0] == scalar(5 * 7));
  CHECK(hcompose(zero_psi, zero_homotopy(c, c, k)) == zero_homotopy(c, c, compose(k, g)));
}

TEST_CASE("interchange law on random instances") {
  Rng rng(17);
  const std::vector<std::string> base{"a", "b"};
  for (int trial = 0; trial < 50; ++trial) {
    const TwoTermComplex c = random_complex(rng, base, 2), d = random_complex(rng, base, 2), e = random_complex(rng, base, 2);
    const ChainMap f = random_chain_map(rng, c, d), k = random_chain_map(rng, d, e);
    REQUIRE(validate_chain_map(c, d, f).ok());
    const ChainHomotopy psi = random_homotopy_from(rng, c, d, f);
    const ChainHomotopy phi = random_homotopy_from(rng, c, d, psi.to);
    const ChainHomotopy omega = random_homotopy_from(rng, d, e, k);
    const ChainHomotopy chi = random_homotopy_from(rng, d, e, omega.to);
    CHECK(check_interchange(c, d, e, psi, phi, omega, chi));
    CHECK(validate_homotopy(c, e, hcompose(psi, omega)).ok());
    CHECK(validate_homotopy(c, d, vcompose(psi, phi)).ok());
    if (trial < 5) {
      ChainHomotopy bad = omega;
      for (auto& m : bad.omega)
        if (m.rows() > 0 && m.cols() > 0) {
          m(0, 0) += 1;
          break;
        }
      if (!validate_homotopy(d, e, bad).ok()) CHECK_THROWS_AS(check_interchange(c, d, e, psi, phi, bad, chi), ValidationError);
      if (!(phi.to == psi.from)) CHECK_THROWS_AS(check_interchange(c, d, e, phi, psi, omega, chi), CompositionError);
    }
  }
  const TwoTermComplex z = point(Matrix::zero(1, 1));
  const ChainMap id = identity_chain_map(z);
  const ChainHomotopy zero = zero_homotopy(z, z, id);
  CHECK(check_interchange(z, z, z, zero, zero, zero, zero));
}

TEST_CASE("phi_object") {
  const TwoTermComplex zero = point(Matrix::zero(0, 0));
  const auto vz = phi_object(zero);
  CHECK(validate_vb(vz).ok());
  CHECK(vz.arrdim[0] == 0);

  const auto v0 = phi_object(point(scalar(0)));
  CHECK(validate_vb(v0).ok());
  CHECK(v0.source[0] == v0.target[0]);

  const auto v1 = phi_object(point(scalar(1)));
  CHECK(validate_vb(v1).ok());
  // the arrow (1, 0) goes from 0 to 1
  CHECK(v1.source[0].apply({1, 0}) == Vector{0});
  CHECK(v1.target[0].apply({1, 0}) == Vector{1});
}

TEST_CASE("phi on 1- and 2-morphisms") {
  const TwoTermComplex c = point(scalar(0));
  const auto v = phi_object(c);
  CHECK(phi_onemorphism(identity_chain_map(c)) == identity_vb_map(v));
  const ChainMap zero = point_map(scalar(0), scalar(0));
  const VBMap z = phi_onemorphism(zero);
  CHECK(validate_vb_map(v, v, z).ok());
  CHECK(z.on_arrows[0].is_zero());

  const ChainMap f = point_map(scalar(2), scalar(3));
  const VBMap F = phi_onemorphism(f);
  CHECK(F.on_arrows[0] == Matrix::block_diagonal(scalar(2), scalar(3)));
  CHECK(validate_vb_map(v, v, F).ok());

  const ChainHomotopy h{f, f, {scalar(5)}};
  const BundleTransformation t = phi_twomorphism(h);
  CHECK(t.components[0].apply({1}) == Vector{5, 3});
  CHECK(validate_transformation(v, v, F, phi_onemorphism(h.to), t).ok());
  const BundleTransformation unit = phi_twomorphism(zero_homotopy(c, c, f));
  CHECK(unit.components[0] == Matrix::vstack(scalar(0), scalar(3)));
}

TEST_CASE("extraction inverts phi") {
  Rng rng(23);
  const std::vector<std::string> base{"a", "b", "c"};
  for (int trial = 0; trial < 40; ++trial) {
    const TwoTermComplex c = random_complex(rng, base, 3), d = random_complex(rng, base, 3);
    const ChainMap f = random_chain_map(rng, c, d);
    const VBMap F = phi_onemorphism(f);
    CHECK(validate_vb_map(phi_object(c), phi_object(d), F).ok());
    CHECK(extract_chain_map(c, d, F) == f);
    const ChainHomotopy h = random_homotopy_from(rng, c, d, f);
    const BundleTransformation t = phi_twomorphism(h);
    CHECK(validate_transformation(phi_object(c), phi_object(d), F, phi_onemorphism(h.to), t).ok());
    CHECK(extract_homotopy(c, d, h.from, h.to, t) == h);

    const Splitting s = split_bundle(phi_object(c));
    CHECK(s.complex == c);
    for (const auto& m : s.to_phi.on_arrows) CHECK(m.is_identity());
  }
  const TwoTermComplex c = point(scalar(1));
  CHECK(extract_chain_map(c, c, identity_vb_map(phi_object(c))) == identity_chain_map(c));
  CHECK(extract_homotopy(c, c, identity_chain_map(c), identity_chain_map(c),
                         phi_twomorphism(zero_homotopy(c, c, identity_chain_map(c)))) ==
        zero_homotopy(c, c, identity_chain_map(c)));
}

TEST_CASE("a nonzero off-diagonal block is not induced") {
  const TwoTermComplex c = point(scalar(0));
  const auto v = phi_object(c);
  VBMap F = phi_onemorphism(point_map(scalar(1), scalar(1)));
  F.on_arrows[0](1, 0) = 1;  // C0 -> D1 block
  CHECK_THROWS_AS(extract_chain_map(c, c, F), NotInducedError);
  CHECK_FALSE(validate_vb_map(v, v, F).ok());
  VBMap G = phi_onemorphism(point_map(scalar(1), scalar(1)));
  G.on_arrows[0](0, 1) = 1;  // C1 -> D0 block
  CHECK_THROWS_AS(extract_chain_map(c, c, G), NotInducedError);
  CHECK_FALSE(validate_vb_map(v, v, G).ok());
  const BundleTransformation wrong{{Matrix::vstack(scalar(0), scalar(2))}};
  CHECK_THROWS_AS(extract_homotopy(c, c, identity_chain_map(c), identity_chain_map(c), wrong), NotInducedError);
}

TEST_CASE("split_bundle of a scrambled bundle") {
  Rng rng(31);
  const TwoTermComplex c = point(scalar(1));
  const auto v = phi_object(c);
  const std::vector<Matrix> q{random_invertible(rng, 1)};
  const std::vector<Matrix> p{random_invertible(rng, 2)};
  const auto w = transport(v, q, p);
  REQUIRE(validate_vb(w).ok());
  const Splitting s = split_bundle(w);
  CHECK(validate_vb(phi_object(s.complex)).ok());
  CHECK(validate_vb_map(w, phi_object(s.complex), s.to_phi).ok());
  CHECK(validate_vb_map(phi_object(s.complex), w, s.from_phi).ok());
  CHECK(compose(s.to_phi, s.from_phi) == identity_vb_map(phi_object(s.complex)));
  CHECK(rank(s.complex.diff[0]) == 1);

  const auto zero = split_bundle(phi_object(point(Matrix::zero(0, 0))));
  CHECK(zero.complex.dim0(0) == 0);
  CHECK(zero.complex.dim1(0) == 0);
}
