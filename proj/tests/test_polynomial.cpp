#include <doctest.h>

#include <random>

#include "frobkit/polynomial.hpp"

using namespace frobkit;

namespace {

RingPtr ring2(std::vector<std::string> names,
              std::vector<Rational> w = {}) {
  if (w.empty()) w.assign(names.size(), Rational(1));
  return std::make_shared<PolyRing>(PrimeField(2), names, w);
}

Poly parse(const PolyRing& R, const std::string& s) { return poly_parse(R, s); }

Poly random_poly(const PolyRing& R, std::mt19937& rng, int max_deg = 4,
                 int max_terms = 5) {
  std::uniform_int_distribution<int> nt(0, max_terms);
  std::uniform_int_distribution<int> ed(0, max_deg);
  std::uniform_int_distribution<int> cd(0, int(R.p()) - 1);
  std::vector<Term> ts;
  int n = nt(rng);
  for (int i = 0; i < n; ++i) {
    Term t;
    int budget = max_deg;
    for (int v = 0; v < R.nvars(); ++v) {
      int e = ed(rng) % (budget + 1);
      t.m.e[v] = std::uint16_t(e);
      budget -= e;
    }
    t.c = std::uint32_t(cd(rng));
    ts.push_back(t);
  }
  return poly_make(R, std::move(ts));
}

}  // namespace

TEST_CASE("degrevlex compare on equal weighted degree") {
  auto R = ring2({"x", "y"});
  Poly x2 = parse(*R, "x^2"), xy = parse(*R, "x*y");
  Term a = x2.lead(), b = xy.lead();
  CHECK(cmp_mono(*R, a, b) > 0);  // x^2 > xy
  CHECK(cmp_mono(*R, a, a) == 0);
}

TEST_CASE("weighted degrees dominate the tie-break") {
  auto R = std::make_shared<PolyRing>(
      PrimeField(2), std::vector<std::string>{"x", "y"},
      std::vector<Rational>{Rational(2), Rational(1)});
  Poly y3 = parse(*R, "y^3"), x = parse(*R, "x");
  CHECK(cmp_mono(*R, y3.lead(), x.lead()) > 0);  // deg 3 > deg 2
}

TEST_CASE("products reduce mod p") {
  auto R = ring2({"x", "y"});
  Poly s = parse(*R, "x + y");
  CHECK(poly_mul(*R, s, s) == parse(*R, "x^2 + y^2"));

  auto R3 = std::make_shared<PolyRing>(PrimeField(3),
                                       std::vector<std::string>{"x"},
                                       std::vector<Rational>{Rational(1)});
  Poly f = parse(*R3, "x + 1"), g = parse(*R3, "x + 2");
  CHECK(poly_mul(*R3, f, g) == parse(*R3, "x^2 + 2"));

  CHECK(poly_mul(*R, s, poly_zero()).is_zero());
}

TEST_CASE("weighted degree of homogeneous and inhomogeneous polynomials") {
  auto R = ring2({"x", "y"});
  CHECK(*poly_degree(*R, parse(*R, "x^2 + x*y")) == Rational(2));
  CHECK(!poly_degree(*R, parse(*R, "x + x^2")).has_value());

  auto Rw = std::make_shared<PolyRing>(
      PrimeField(2), std::vector<std::string>{"u", "v"},
      std::vector<Rational>{Rational(2), Rational(1)});
  CHECK(*poly_degree(*Rw, parse(*Rw, "u + v^2")) == Rational(2));
}

TEST_CASE("ring axioms on random polynomials") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto R = std::make_shared<PolyRing>(
        PrimeField(p), std::vector<std::string>{"x", "y", "z"},
        std::vector<Rational>{Rational(1), Rational(1), Rational(1)});
    std::mt19937 rng(7 + p);
    for (int iter = 0; iter < 400; ++iter) {
      Poly a = random_poly(*R, rng), b = random_poly(*R, rng),
           c = random_poly(*R, rng);
      // associativity and commutativity of *
      CHECK(poly_mul(*R, poly_mul(*R, a, b), c) ==
            poly_mul(*R, a, poly_mul(*R, b, c)));
      CHECK(poly_mul(*R, a, b) == poly_mul(*R, b, a));
      // distributivity
      CHECK(poly_mul(*R, a, poly_add(*R, b, c)) ==
            poly_add(*R, poly_mul(*R, a, b), poly_mul(*R, a, c)));
      // canonical form: a - a == 0
      CHECK(poly_sub(*R, a, a).is_zero());
    }
  }
}

TEST_CASE("frobenius identity f^p = termwise p-th power") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto R = std::make_shared<PolyRing>(
        PrimeField(p), std::vector<std::string>{"x", "y"},
        std::vector<Rational>{Rational(1), Rational(1)});
    std::mt19937 rng(100 + p);
    for (int iter = 0; iter < 60; ++iter) {
      Poly f = random_poly(*R, rng, 3, 4);
      Poly fp = poly_pow(*R, f, p);
      std::vector<Term> ts;
      for (const auto& t : f.t) {
        Term u;
        for (int i = 0; i < R->nvars(); ++i)
          u.m.e[i] = std::uint16_t(t.m.e[i] * p);
        u.c = R->field().pow(t.c, p);
        ts.push_back(u);
      }
      CHECK(fp == poly_make(*R, std::move(ts)));
    }
  }
}

TEST_CASE("parser round trips and rejects junk") {
  auto R = ring2({"u", "v", "w"});
  Poly f = parse(*R, "v^2 + u*w");
  CHECK(f == poly_parse(*R, poly_str(*R, f)));
  CHECK_THROWS_AS(parse(*R, "v^2 + q"), std::invalid_argument);
  CHECK_THROWS_AS(parse(*R, ""), std::invalid_argument);
  CHECK(parse(*R, "2*v").is_zero());  // coefficients live in F_2
}

TEST_CASE("substitution is a ring map") {
  auto R = ring2({"u"});
  auto S = ring2({"x", "y"});
  std::vector<Poly> im = {parse(*S, "x + y")};
  Poly f = parse(*R, "u^2 + u");
  Poly g = poly_substitute(*R, f, *S, im);
  CHECK(g == parse(*S, "x^2 + y^2 + x + y"));
}
