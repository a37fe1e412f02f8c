#include <doctest.h>

#include "catpascal/errors.hpp"
#include "catpascal/series.hpp"

using namespace catpascal;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("series arithmetic") {
  auto x = Series::x(5);
  auto one = Series::one(5);
  auto geo = (one - x).pow(Rational(-1));
  CHECK(geo.integers() == ints({1, 1, 1, 1, 1, 1}));
  CHECK((geo * (one - x)) == one);
  auto e = x.exp();
  CHECK(e[3] == Rational(1, 6));
  CHECK_THROWS_AS(e.integers(), InternalError);
  CHECK((Rational(2) * x)[1] == 2);
  CHECK(series_sqrt_1m4x(3).integers() == ints({1, -2, -2, -4}));
}

TEST_CASE("H0 is the Catalan generating function") {
  auto h = series_h0(10);
  std::vector<BigInt> c;
  for (int n = 0; n <= 10; ++n) c.push_back(catalan(n));
  CHECK(h.integers() == c);
  auto x = Series::x(10);
  auto lhs = Series::one(10) + x * h * h - h;
  CHECK(lhs == Series(10));
}

TEST_CASE("H1 times sqrt(1-4x) is 1") {
  CHECK(series_h1(12) * series_sqrt_1m4x(12) == Series::one(12));
  CHECK(series_hlambda({2, 1}, 8) == series_h1(8));
  CHECK(series_h2(5).integers() == ints({1, 2, 8, 36, 168, 796}));
}

TEST_CASE("H^lambda counts closed walks on A(lambda)") {
  for (auto lambda : std::vector<std::vector<int>>{{}, {1}, {2, 1}, {3, 1}, {2, 2, 1}, {2, 2, 2, 1}, {2}, {1, 2}, {2, 0}})
    CHECK_MESSAGE(series_matches_walks(a_tree(lambda), series_hlambda(lambda, 8), 8), lambda.size());
  CHECK(series_matches_walks(a_inf(), series_h0(6), 6));
  CHECK_FALSE(series_matches_walks(a_inf(), series_h1(3), 3));
  CHECK(series_matches_walks(a_tree({2, 2, 1}), series_hlambda({2, 2, 1}, 5), 5));
}

TEST_CASE("Bell numbers from the exponential generating function") {
  CHECK(series_bell_egf(4) == ints({1, 1, 2, 5, 15}));
  CHECK(series_bell_egf(0) == ints({1}));
  auto b = series_bell_egf(12);
  CHECK(b[9] == 21147);
  CHECK(b == bell_by_recurrence(12));
  auto walks = catalan_numbers(double_young(), 9);
  for (int n = 0; n <= 9; ++n) CHECK(walks[static_cast<std::size_t>(n)] == b[static_cast<std::size_t>(n)]);
}
