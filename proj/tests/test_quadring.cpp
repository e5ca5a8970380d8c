#include <doctest.h>

#include <random>

#include "bianchi/quadring.hpp"

using namespace bianchi;

TEST_SUITE_BEGIN("quadring");

TEST_CASE("make_ring picks the basis from d mod 4") {
  RingSpec r1 = make_ring(-1);
  CHECK(r1.t == 0);  // w^2 = -1
  CHECK(r1.s == -1);
  CHECK(r1.disc == -4);

  RingSpec r3 = make_ring(-3);
  CHECK(r3.t == 1);  // w^2 = w - 1
  CHECK(r3.s == -1);
  CHECK(r3.disc == -3);

  RingSpec r5 = make_ring(5);
  CHECK(r5.t == 1);
  CHECK(r5.s == 1);
  CHECK(r5.disc == 5);
}

TEST_CASE("make_ring rejects bad d") {
  CHECK_THROWS_AS(make_ring(12), std::invalid_argument);  // 4 | 12
  CHECK_THROWS_AS(make_ring(-12), std::invalid_argument);
  CHECK_THROWS_AS(make_ring(0), std::invalid_argument);
  CHECK_THROWS_AS(make_ring(1), std::invalid_argument);
  CHECK_THROWS_WITH(make_ring(12), doctest::Contains("4"));
}

TEST_CASE("multiplication follows the w^2 rule") {
  RingSpec r1 = make_ring(-1);
  CHECK(mul(QuadInt(0, 1), QuadInt(0, 1), r1) == QuadInt(-1, 0));  // i^2

  RingSpec r3 = make_ring(-3);
  CHECK(mul(QuadInt(0, 1), QuadInt(0, 1), r3) == QuadInt(-1, 1));

  RingSpec r5 = make_ring(-5);
  // (1 + w)(1 - w) = 1 + 5 = 6
  CHECK(mul(QuadInt(1, 1), QuadInt(1, -1), r5) == QuadInt(6, 0));
}

TEST_CASE("norm matches mul examples") {
  RingSpec r1 = make_ring(-1);
  CHECK(norm(QuadInt(1, 1), r1) == 2);
  CHECK(norm(QuadInt(1, 0), r1) == 1);

  RingSpec r5 = make_ring(-5);
  CHECK(norm(QuadInt(1, 1), r5) == 6);

  RingSpec r3 = make_ring(-3);
  CHECK(norm(QuadInt(0, 1), r3) == 1);  // w is a unit for d = -3
  CHECK(norm(QuadInt(1, 0), r3) == 1);
}

TEST_CASE("conjugation and trace") {
  RingSpec r1 = make_ring(-1);
  CHECK(conj(QuadInt(3, 4), r1) == QuadInt(3, -4));
  CHECK(trace(QuadInt(3, 4), r1) == 6);

  RingSpec r3 = make_ring(-3);
  CHECK(conj(QuadInt(0, 1), r3) == QuadInt(1, -1));  // conj(w) = 1 - w
  CHECK(trace(QuadInt(0, 1), r3) == 1);
  // x * conj(x) lands on the rational axis and equals the norm
  QuadInt x(5, -7);
  QuadInt xc = mul(x, conj(x, r3), r3);
  CHECK(xc.b == 0);
  CHECK(xc.a == norm(x, r3));
}

namespace {

QuadInt random_quadint(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-50, 50);
  return QuadInt(dist(rng), dist(rng));
}

}  // namespace

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(20240811);
  for (long d : {-1LL, -2LL, -3LL, -5LL, -7LL, -11LL, 5LL, 13LL}) {
    RingSpec R = make_ring(d);
    for (int i = 0; i < 200; ++i) {
      QuadInt x = random_quadint(rng), y = random_quadint(rng),
              z = random_quadint(rng);
      CHECK(mul(x, y, R) == mul(y, x, R));
      CHECK(mul(mul(x, y, R), z, R) == mul(x, mul(y, z, R), R));
      CHECK(mul(x, y + z, R) == mul(x, y, R) + mul(x, z, R));
      CHECK(norm(mul(x, y, R), R) == norm(x, R) * norm(y, R));
    }
  }
}

TEST_CASE("norm is positive definite for d < 0") {
  std::mt19937_64 rng(99);
  RingSpec R = make_ring(-19);
  CHECK(norm(QuadInt(0, 0), R) == 0);
  for (int i = 0; i < 300; ++i) {
    QuadInt x = random_quadint(rng);
    if (x.is_zero()) continue;
    CHECK(norm(x, R) > 0);
  }
}

TEST_CASE("element text round trip") {
  CHECK(parse_quadint("1+1*w") == QuadInt(1, 1));
  CHECK(parse_quadint("1-1*w") == QuadInt(1, -1));
  CHECK(parse_quadint("-3") == QuadInt(-3, 0));
  CHECK(parse_quadint("w") == QuadInt(0, 1));
  CHECK(parse_quadint("-w") == QuadInt(0, -1));
  CHECK(parse_quadint("5*w") == QuadInt(0, 5));
  CHECK(parse_quadint(" 2 + 3*w ") == QuadInt(2, 3));
  CHECK_THROWS_AS(parse_quadint(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_quadint("x+y"), std::invalid_argument);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    QuadInt x = random_quadint(rng);
    CHECK(parse_quadint(to_string(x)) == x);
  }
}

TEST_SUITE_END();
