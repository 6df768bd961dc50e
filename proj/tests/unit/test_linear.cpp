#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wrep/errors.hpp"
#include "wrep/generate.hpp"
#include "wrep/linear.hpp"

using namespace wrep;

namespace {

Matrix M(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (int v : row) r.back().emplace_back(v);
  }
  return Matrix::from_rows(r);
}

}  // namespace

TEST_CASE("rationals parse and print in lowest terms") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-2/1")) == "-2");
  CHECK(to_string(parse_rational("0/5")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("compose") {
  const Matrix m = M({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
  CHECK(compose(Matrix::identity(3), m) == m);
  CHECK(compose(Matrix::zero(2, 3), m) == Matrix::zero(2, 3));
  CHECK(compose(M({{1, 1}, {0, 1}}), M({{1, 0}, {1, 1}})) == M({{2, 1}, {1, 1}}));
  CHECK_THROWS_AS(compose(Matrix::zero(2, 2), Matrix::zero(3, 3)), DimensionError);
}

TEST_CASE("kernel_basis") {
  CHECK(kernel_basis(Matrix::zero(2, 2)) == std::vector<Vector>{{1, 0}, {0, 1}});
  CHECK(kernel_basis(Matrix::identity(3)).empty());
  CHECK(kernel_basis(M({{1, 1}})) == std::vector<Vector>{{1, -1}});
  CHECK(kernel_basis(Matrix::zero(0, 2)).size() == 2);
}

TEST_CASE("right_inverse_on_image") {
  CHECK(right_inverse_on_image(Matrix::identity(3)) == Matrix::identity(3));
  CHECK(right_inverse_on_image(M({{1, 0}})) == M({{1}, {0}}));
  // pinned: the unit section (1,1) of the projection onto the first coordinate
  const Pinning pin{M({{1}}), M({{1}, {1}})};
  const Matrix g = right_inverse_on_image(M({{1, 0}}), pin);
  CHECK(g == M({{1}, {1}}));
  CHECK(M({{1, 0}}) * g == Matrix::identity(1));
  CHECK_THROWS_AS(right_inverse_on_image(M({{1, 0}, {2, 0}})), NotSurjectiveError);
  CHECK_THROWS_AS(right_inverse_on_image(M({{1, 0}}), Pinning{M({{1}}), M({{2}, {0}})}), PinningError);

  // partial pinning on a 2-dim target: the rest follows the pivot rule
  const Matrix f = M({{1, 0, 1}, {0, 1, 1}});
  const Matrix h = right_inverse_on_image(f, Pinning{M({{1}, {1}}), M({{0}, {0}, {1}})});
  CHECK(f * h == Matrix::identity(2));
  CHECK(h * M({{1}, {1}}) == M({{0}, {0}, {1}}));
}

TEST_CASE("solve") {
  CHECK(*solve(Matrix::identity(2), {3, 4}) == Vector{3, 4});
  CHECK(*solve(Matrix::zero(2, 2), {0, 0}) == Vector{0, 0});
  CHECK(*solve(M({{2}}), {3}) == Vector{Rational(3, 2)});
  CHECK_FALSE(solve(M({{1}, {1}}), {1, 2}).has_value());
  CHECK_THROWS_AS(solve(M({{2}}), {1, 2}), DimensionError);
}

TEST_CASE("inverse and left inverse") {
  const Matrix a = M({{2, 1}, {1, 1}});
  CHECK(inverse(a) * a == Matrix::identity(2));
  CHECK_THROWS_AS(inverse(M({{1, 2}, {2, 4}})), NotInvertibleError);
  const Matrix b = M({{1, 0}, {0, 1}, {1, 1}});
  CHECK(left_inverse(b) * b == Matrix::identity(2));
}

TEST_CASE("properties on random matrices") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = static_cast<std::size_t>(rng.range(0, 4)), c = static_cast<std::size_t>(rng.range(0, 4)),
               k = static_cast<std::size_t>(rng.range(0, 4)), l = static_cast<std::size_t>(rng.range(0, 4));
    const Matrix f = random_matrix(rng, r, c), g = random_matrix(rng, c, k), h = random_matrix(rng, k, l);
    CHECK((f * g) * h == f * (g * h));
    const auto ker = kernel_basis(f);
    CHECK(ker.size() == c - rank(f));
    for (const auto& v : ker) CHECK(is_zero(f.apply(v)));
    if (rank(f) == r) CHECK(f * right_inverse_on_image(f) == Matrix::identity(r));
  }
}
