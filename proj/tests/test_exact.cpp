#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "moonshine/exact.hpp"

using namespace ms;

TEST_CASE("gcd/lcm/mod helpers") {
  CHECK(gcd_z(12, 18) == 6);
  CHECK(gcd_z(0, 5) == 5);
  CHECK(lcm_z(4, 6) == 12);
  CHECK(mod_z(-1, 7) == 6);
  CHECK(mod_z(14, 7) == 0);
  CHECK(inv_mod(3, 7) == 5);
  CHECK(inv_mod(5, 1) == 0);
  CHECK_THROWS_AS(inv_mod(2, 4), std::domain_error);
}

TEST_CASE("exactly_divides") {
  CHECK(exactly_divides(4, 12));
  CHECK(exactly_divides(3, 12));
  CHECK(!exactly_divides(2, 12));  // gcd(2, 6) = 2
  CHECK(!exactly_divides(6, 12));
  CHECK(exactly_divides(1, 12));
  CHECK(exactly_divides(12, 12));
  CHECK(!exactly_divides(5, 12));
  CHECK(!exactly_divides(0, 12));
}

TEST_CASE("split_off removes exactly the shared primes") {
  Int r = 360;  // 2^3 3^2 5
  Int part = split_off(r, 6);
  CHECK(part == 72);  // 2^3 3^2
  CHECK(r == 5);
  CHECK(gcd_z(r, 6) == 1);
  r = 35;
  CHECK(split_off(r, 4) == 1);
  CHECK(r == 35);
}

TEST_CASE("ext_gcd_coprime frozen cases") {
  // documented case: a=1, b=0 keeps the base pair (1, 0)
  auto [x, y] = ext_gcd_coprime(1, 0, 5);
  CHECK(x == 1);
  CHECK(y == 0);
  // a=2, b=3, m=6: result must satisfy both constraints
  auto [x2, y2] = ext_gcd_coprime(2, 3, 6);
  CHECK(2 * x2 + 3 * y2 == 1);
  CHECK(gcd_z(x2 * 6, y2) == 1);
  CHECK_THROWS_AS(ext_gcd_coprime(2, 3, 0), std::domain_error);
  CHECK_THROWS_AS(ext_gcd_coprime(2, 4, 5), std::domain_error);
}

TEST_CASE("ext_gcd_coprime randomized property") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<long> dist(-500, 500);
  int done = 0;
  while (done < 400) {
    long a = dist(rng), b = dist(rng), m = dist(rng);
    if (m == 0) continue;
    if (gcd_z(Int(std::abs(a)), Int(std::abs(b))) != 1) continue;
    auto [x, y] = ext_gcd_coprime(a, b, m);
    REQUIRE(Int(a) * x + Int(b) * y == 1);
    REQUIRE(gcd_z(abs(x * m), abs(y)) == 1);
    ++done;
  }
}

TEST_CASE("cusp normalization") {
  CHECK(Cusp(2, 4) == Cusp(1, 2));
  CHECK(Cusp(1, -2) == Cusp(-1, 2));
  CHECK(Cusp(-3, -6) == Cusp(1, 2));
  CHECK(Cusp(5, 0).inf);
  CHECK(Cusp(5, 0) == Cusp::infinity());
  CHECK(Cusp(0, 7) == Cusp(0, 1));
  CHECK(Cusp(0, 1).y == 1);
}

TEST_CASE("cusp parse/print round trip") {
  for (const char* s : {"inf", "0", "1/2", "-5/18", "7"}) {
    CHECK(cusp_to_string(parse_cusp(s)) == s);
  }
  CHECK(parse_cusp("oo").inf);
  CHECK(parse_cusp(" 2 / 4 ") == Cusp(1, 2));
  CHECK_THROWS_AS(parse_cusp("x/y"), std::domain_error);
}

TEST_CASE("Mat2 determinant and inverse") {
  Mat2 m(Rat(2), Rat(3), Rat(1), Rat(2));
  CHECK(m.det() == 1);
  CHECK(m * m.inverse() == Mat2::identity());
  CHECK(m.inverse() * m == Mat2::identity());
  Mat2 half(Rat(1, 2), Rat(0), Rat(0), Rat(2));
  CHECK(half.det() == 1);
  CHECK(!half.is_integral());
  CHECK_THROWS_AS(Mat2(Rat(1), Rat(2), Rat(2), Rat(4)).inverse(), std::domain_error);
}

TEST_CASE("mat_act composes") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> dist(-9, 9);
  int done = 0;
  while (done < 200) {
    Mat2 a(Rat(dist(rng)), Rat(dist(rng)), Rat(dist(rng)), Rat(dist(rng)));
    Mat2 b(Rat(dist(rng)), Rat(dist(rng)), Rat(dist(rng)), Rat(dist(rng)));
    if (a.det() == 0 || b.det() == 0) continue;
    Cusp c(dist(rng), dist(rng));
    REQUIRE(mat_act(a * b, c) == mat_act(a, mat_act(b, c)));
    ++done;
  }
}

TEST_CASE("mat_act basics") {
  Mat2 s(Rat(0), Rat(-1), Rat(1), Rat(0));
  CHECK(mat_act(s, Cusp::infinity()) == Cusp(0, 1));
  CHECK(mat_act(s, Cusp(0, 1)) == Cusp::infinity());
  Mat2 t(Rat(1), Rat(1), Rat(0), Rat(1));
  CHECK(mat_act(t, Cusp(1, 3)) == Cusp(4, 3));
  CHECK(mat_act(t, Cusp::infinity()) == Cusp::infinity());
}

TEST_CASE("primitive_integer_form") {
  auto p = primitive_integer_form(Mat2(Rat(1, 2), Rat(0), Rat(3, 2), Rat(1)));
  REQUIRE(p);
  CHECK(*p == Mat2(Rat(1), Rat(0), Rat(3), Rat(2)));
  auto q = primitive_integer_form(Mat2(Rat(4), Rat(2), Rat(6), Rat(8)));
  REQUIRE(q);
  CHECK(*q == Mat2(Rat(2), Rat(1), Rat(3), Rat(4)));
  CHECK(!primitive_integer_form(Mat2(Rat(0), Rat(0), Rat(0), Rat(0))));
}

TEST_CASE("rational and matrix parse/print") {
  CHECK(rat_to_string(parse_rat("6/4")) == "3/2");
  CHECK(rat_to_string(parse_rat("-7")) == "-7");
  Mat2 m(Rat(0), Rat(-1), Rat(1, 2), Rat(3));
  CHECK(parse_mat(mat_to_string(m)) == m);
  CHECK_THROWS_AS(parse_mat("[[1,2],[3]]"), std::domain_error);
  CHECK_THROWS_AS(parse_rat("a/b"), std::domain_error);
}
