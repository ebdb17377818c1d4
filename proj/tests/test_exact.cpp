#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "omt/combinat.hpp"
#include "omt/matrix.hpp"
#include "omt/permutation.hpp"
#include "omt/quadext.hpp"
#include "omt/rational.hpp"
#include "omt/sign.hpp"
#include "oracles.hpp"

using namespace omt;

namespace {

// Deterministic generator for exhaustive-ish arithmetic tests.
struct Lcg {
  std::uint64_t s;
  explicit Lcg(std::uint64_t seed) : s(seed) {}
  int next(int lo, int hi) {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + static_cast<int>((s >> 33) % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/6") == Rational(1) / 2);
  CHECK(parse_rational("-4/2") == Rational(-2));
  CHECK(parse_rational("+7") == Rational(7));
  CHECK(parse_rational("0") == Rational(0));
  CHECK(to_string(Rational(-7) / 2) == "-7/2");
  CHECK(to_string(Rational(4) / 2) == "2");

  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("2/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
}

TEST_CASE("quadext arithmetic satisfies sqrt5^2 = 5") {
  QuadExt s5 = QuadExt::sqrt5();
  CHECK(s5 * s5 == QuadExt(5));

  QuadExt phi = (QuadExt(1) + s5) / 2;  // golden ratio
  CHECK(phi * phi == phi + 1);
  CHECK(QuadExt(1) / phi == phi - 1);

  QuadExt t = (s5 - QuadExt(1)) / 2;  // 1/phi
  CHECK(t * t == QuadExt(1) - t);
  CHECK(t * phi == QuadExt(1));

  CHECK_THROWS_AS(phi / QuadExt(0), std::invalid_argument);
}

TEST_CASE("quadext sign matches interval bisection on a dense grid") {
  for (int an = -6; an <= 6; ++an)
    for (int ad = 1; ad <= 3; ++ad)
      for (int bn = -6; bn <= 6; ++bn)
        for (int bd = 1; bd <= 3; ++bd) {
          QuadExt x(Rational(an) / ad, Rational(bn) / bd);
          CAPTURE(an);
          CAPTURE(ad);
          CAPTURE(bn);
          CAPTURE(bd);
          CHECK(sign_of(x) == oracle::sign_by_bisection(x));
        }
}

TEST_CASE("quadext sign on near-cancelling convergents") {
  // 161/72 and 682/305 are continued-fraction convergents of sqrt5; the
  // differences below are tiny but have a definite sign.
  CHECK(sign_of(QuadExt(Rational(-161), Rational(72))) == Sign::Minus);  // 161/72 > sqrt5
  CHECK(sign_of(QuadExt(Rational(161), Rational(-72))) == Sign::Plus);
  CHECK(sign_of(QuadExt(Rational(682), Rational(-305))) == Sign::Minus); // 682/305 < sqrt5
  CHECK(sign_of(QuadExt(Rational(-682), Rational(305))) == Sign::Plus);
  CHECK(sign_of(QuadExt(Rational(0), Rational(0))) == Sign::Zero);

  for (auto [a, b] : {std::pair{-161, 72}, {161, -72}, {682, -305}, {-682, 305}}) {
    QuadExt x{Rational(a), Rational(b)};
    CHECK(sign_of(x) == oracle::sign_by_bisection(x));
  }
}

TEST_CASE("quadext text round trip") {
  std::vector<QuadExt> values = {
      QuadExt(0),
      QuadExt(Rational(-3) / 7),
      QuadExt::sqrt5(),
      QuadExt(Rational(0), Rational(-1) / 2),
      QuadExt(Rational(1) / 2, Rational(1) / 2),
      QuadExt(Rational(-2), Rational(3) / 5),
  };
  for (const QuadExt& v : values) CHECK(parse_quadext(to_string(v)) == v);

  CHECK(parse_quadext("1/2+1/2*sqrt5") == QuadExt(Rational(1) / 2, Rational(1) / 2));
  CHECK(parse_quadext("-1/2*sqrt5") == QuadExt(Rational(0), Rational(-1) / 2));
  CHECK(parse_quadext("3") == QuadExt(3));
  CHECK_THROWS_AS(parse_quadext("sqrt5+1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_quadext("2*sqrt5+1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_quadext("1+2*sqrt3"), std::invalid_argument);
}

TEST_CASE("det_sign agrees with cofactor expansion (rational)") {
  Lcg rng(2024);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 60; ++trial) {
      Matrix<Rational> m(n, std::vector<Rational>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = Rational(rng.next(-3, 3));
      CHECK(det_sign(m) == sign_of(oracle::det_cofactor(m)));
    }
  }
}

TEST_CASE("det_sign agrees with cofactor expansion (quadext)") {
  Lcg rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix<QuadExt> m(3, std::vector<QuadExt>(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        m[i][j] = QuadExt(Rational(rng.next(-2, 2)), Rational(rng.next(-2, 2)) / 2);
    CHECK(det_sign(m) == sign_of(oracle::det_cofactor(m)));
  }
}

TEST_CASE("det_sign edge cases") {
  CHECK(det_sign(Matrix<Rational>{}) == Sign::Plus);  // empty product
  CHECK(det_sign(Matrix<Rational>{{Rational(0)}}) == Sign::Zero);
  Matrix<Rational> singular = {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  CHECK(det_sign(singular) == Sign::Zero);
  Matrix<Rational> ragged = {{Rational(1), Rational(2)}, {Rational(3)}};
  CHECK_THROWS_AS(det_sign(ragged), std::invalid_argument);
}

TEST_CASE("matrix inverse and multiply") {
  Matrix<Rational> a = {{Rational(2), Rational(1), Rational(0)},
                        {Rational(0), Rational(1), Rational(3)},
                        {Rational(1), Rational(0), Rational(1)}};
  auto inv = inverse(a);
  REQUIRE(inv.has_value());
  Matrix<Rational> prod = multiply(a, *inv);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(prod[i][j] == Rational(i == j ? 1 : 0));

  Matrix<Rational> singular = {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  CHECK(!inverse(singular).has_value());

  Matrix<QuadExt> q = {{QuadExt::sqrt5(), QuadExt(1)}, {QuadExt(1), QuadExt(1)}};
  auto qinv = inverse(q);
  REQUIRE(qinv.has_value());
  Matrix<QuadExt> qprod = multiply(q, *qinv);
  CHECK(qprod[0][0] == QuadExt(1));
  CHECK(qprod[0][1] == QuadExt(0));
  CHECK(qprod[1][0] == QuadExt(0));
  CHECK(qprod[1][1] == QuadExt(1));
}

TEST_CASE("subset ranking round trip") {
  CHECK(binom(8, 4) == 70);
  CHECK(binom(4, 0) == 1);
  CHECK(binom(3, 5) == 0);

  for (int n : {5, 8}) {
    for (int r = 1; r <= n; ++r) {
      std::vector<int> s = first_subset(r);
      std::size_t idx = 0;
      do {
        CHECK(subset_rank(s, n) == idx);
        CHECK(subset_unrank(idx, n, r) == s);
        ++idx;
      } while (next_subset(s, n));
      CHECK(idx == binom(n, r));
    }
  }
}

TEST_CASE("sort_with_parity") {
  std::vector<int> t = {3, 1, 2};
  CHECK(sort_with_parity(t) == 1);  // even: two transpositions
  CHECK(t == std::vector<int>{1, 2, 3});

  std::vector<int> u = {2, 1};
  CHECK(sort_with_parity(u) == -1);

  std::vector<int> rep = {1, 1, 2};
  CHECK(sort_with_parity(rep) == 0);
}

TEST_CASE("permutation basics") {
  Permutation p({2, 3, 1, 4});
  CHECK(p(1) == 2);
  CHECK(p.order() == 3);
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.inverse() == Permutation({3, 1, 2, 4}));

  Permutation q({2, 1, 4, 3});
  CHECK((p * q) == Permutation({3, 2, 4, 1}));  // p(q(i))
  CHECK(q.cycles() == std::vector<std::vector<int>>{{1, 2}, {3, 4}});

  CHECK(Permutation::parse("3 4 5 6 1 2 7 8").to_string() == "3 4 5 6 1 2 7 8");
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("1 2 x"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("1 2 3", 4), std::invalid_argument);
}
