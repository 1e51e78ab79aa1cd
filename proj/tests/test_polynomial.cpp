#include <catch2/catch_amalgamated.hpp>
#include <latcert/polynomial.hpp>

#include <random>

using namespace latcert;

TEST_CASE("rational helpers") {
  CHECK(rat_str(Rat(3)) == "3");
  CHECK(rat_str(Rat(-7, 2)) == "-7/2");
  CHECK(rat_str(Rat(4, 2)) == "2");
  CHECK(parse_rat("9/2") == Rat(9, 2));
  CHECK(parse_rat("-6") == Rat(-6));
  CHECK(parse_rat("+15/7") == Rat(15, 7));
  CHECK(parse_rat("-10/4") == Rat(-5, 2));
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);

  CHECK(is_integer(Rat(8, 4)));
  CHECK(!is_integer(Rat(8, 3)));
  CHECK(to_int(Rat(-12, 4)) == -3);
  CHECK_THROWS_AS(to_int(Rat(1, 2)), std::domain_error);
  CHECK(is_even_integer(Rat(-4)));
  CHECK(!is_even_integer(Rat(3)));
  CHECK(!is_even_integer(Rat(4, 3)));

  CHECK(floor_div(Int(7), Int(2)) == 3);
  CHECK(floor_div(Int(-7), Int(2)) == -4);
  CHECK(floor_div(Int(7), Int(-2)) == -4);
  CHECK(rat_floor(Rat(-1, 2)) == -1);
  CHECK(rat_ceil(Rat(-1, 2)) == 0);
  CHECK(rat_ceil(Rat(5, 2)) == 3);

  CHECK(exact_sqrt(Int(49)) == Int(7));
  CHECK(!exact_sqrt(Int(50)));
  CHECK(!exact_sqrt(Int(-4)));
  CHECK(exact_sqrt(Rat(9, 4)) == Rat(3, 2));
  CHECK(!exact_sqrt(Rat(9, 5)));
  CHECK(exact_sqrt(Int(0)) == Int(0));
}

TEST_CASE("polynomial construction and normalization") {
  IntPoly zero;
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK(IntPoly(std::vector<Int>{Int(0), Int(0)}) == zero);

  IntPoly p(std::vector<Int>{Int(-64), Int(8), Int(2)});
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == -64);
  CHECK(p.coeff(2) == 2);
  CHECK(p.coeff(5) == 0);
  CHECK(!p.is_constant());
  CHECK(IntPoly(7).is_constant());
  CHECK(IntPoly(7).constant_value() == 7);
  CHECK_THROWS_AS(p.constant_value(), std::domain_error);

  auto x = IntPoly::var();
  CHECK(x.degree() == 1);
  CHECK((x * x + 8 * x - IntPoly(64)).coeff(1) == 8);
}

TEST_CASE("polynomial arithmetic identities") {
  std::mt19937 rng(20240917);
  std::uniform_int_distribution<int> coeff(-9, 9), deg(0, 4);
  auto rand_poly = [&]() {
    std::vector<Int> c(deg(rng) + 1);
    for (auto& v : c) v = coeff(rng);
    return IntPoly(std::move(c));
  };
  for (int trial = 0; trial < 200; ++trial) {
    IntPoly a = rand_poly(), b = rand_poly(), c = rand_poly();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * (a - b) == a * a - b * b);
    CHECK(a - a == IntPoly());
    Rat at = Rat(coeff(rng), 7);
    CHECK((a * b).eval(at) == a.eval(at) * b.eval(at));
    CHECK((a + b).eval(at) == a.eval(at) + b.eval(at));
  }
}

TEST_CASE("polynomial printing") {
  auto x = IntPoly::var();
  CHECK(IntPoly().to_string() == "0");
  CHECK(IntPoly(-3).to_string() == "-3");
  CHECK(x.to_string() == "x");
  CHECK((-x).to_string() == "-x");
  CHECK((2 * x * x + 8 * x - IntPoly(64)).to_string() == "2*x^2 + 8*x - 64");
  CHECK((x * x - IntPoly(1)).to_string("t") == "t^2 - 1");
  CHECK((IntPoly(10) - 2 * x).to_string() == "-2*x + 10");
  RatPoly h(std::vector<Rat>{Rat(1, 2), Rat(-3, 4)});
  CHECK(h.to_string() == "-3/4*x + 1/2");
}

TEST_CASE("exact division") {
  std::mt19937 rng(8675309);
  std::uniform_int_distribution<int> coeff(-9, 9), deg(0, 3);
  auto rand_poly = [&]() {
    std::vector<Int> c(deg(rng) + 1);
    for (auto& v : c) v = coeff(rng);
    return IntPoly(std::move(c));
  };
  int nontrivial = 0;
  for (int trial = 0; trial < 200; ++trial) {
    IntPoly a = rand_poly(), b = rand_poly();
    if (b.is_zero()) continue;
    auto q = divide_exact(a * b, b);
    REQUIRE(q);
    CHECK(*q == a);
    if (a.degree() >= 1 && b.degree() >= 1) ++nontrivial;
  }
  CHECK(nontrivial > 50);

  auto x = IntPoly::var();
  CHECK(!divide_exact(x * x + IntPoly(1), x));
  CHECK(!divide_exact(x, 2 * x));
  CHECK(divide_exact(IntPoly(), x));
  CHECK_THROWS_AS(divide_exact(x, IntPoly()), std::domain_error);
  // over Q the same quotient exists
  auto qr = divide_exact(to_rat_poly(x), to_rat_poly(2 * x));
  REQUIRE(qr);
  CHECK(*qr == RatPoly(Rat(1, 2)));
}

TEST_CASE("rational roots, hand-checked cases") {
  auto x = IntPoly::var();
  CHECK(rational_roots(IntPoly(5)).empty());
  CHECK_THROWS_AS(rational_roots(IntPoly()), std::domain_error);
  CHECK_THROWS_AS(rational_roots(x * x * x), std::domain_error);

  CHECK(rational_roots(2 * x - IntPoly(16)) == std::vector<Rat>{Rat(8)});
  CHECK(rational_roots(16 * x - IntPoly(128)) == std::vector<Rat>{Rat(8)});

  IntPoly q1 = 32 * x * x - 272 * x + IntPoly(576);
  CHECK(rational_roots(q1) == std::vector<Rat>{Rat(4), Rat(9, 2)});
  IntPoly q2 = 32 * x * x - 544 * x + IntPoly(2304);
  CHECK(rational_roots(q2) == std::vector<Rat>{Rat(8), Rat(9)});
  IntPoly q3 = 32 * x * x - 496 * x + IntPoly(1920);
  CHECK(rational_roots(q3) == std::vector<Rat>{Rat(15, 2), Rat(8)});
  IntPoly q4 = 2 * x * x + 8 * x - IntPoly(64);
  CHECK(rational_roots(q4) == std::vector<Rat>{Rat(-8), Rat(4)});

  CHECK(rational_roots(x * x - IntPoly(2)).empty());
  CHECK(rational_roots(x * x + IntPoly(1)).empty());
  CHECK(rational_roots(x * x - 4 * x + IntPoly(4)) == std::vector<Rat>{Rat(2)});
}

TEST_CASE("rational roots, reconstruction property") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> numer(-12, 12);
  std::uniform_int_distribution<int> denom(1, 6);
  for (int trial = 0; trial < 400; ++trial) {
    Rat r1(numer(rng), denom(rng)), r2(numer(rng), denom(rng));
    Rat a(numer(rng), denom(rng));
    if (a == 0) a = 1;
    auto xv = RatPoly::var();
    RatPoly p = a * ((xv - RatPoly(r1)) * (xv - RatPoly(r2)));
    auto roots = rational_roots(p);
    if (r1 == r2) {
      REQUIRE(roots.size() == 1);
      CHECK(roots[0] == r1);
    } else {
      REQUIRE(roots.size() == 2);
      CHECK(roots[0] == std::min(r1, r2));
      CHECK(roots[1] == std::max(r1, r2));
    }
    for (const auto& r : roots) CHECK(p.eval(r) == 0);
  }
}
