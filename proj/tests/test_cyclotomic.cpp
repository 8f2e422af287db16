#include <doctest.h>

#include <random>

#include "lietor/cyclotomic.hpp"

using namespace lietor;

TEST_CASE("roots of unity basics") {
  CHECK(Cyc::root_of_unity(4, 2) == Cyc(-1));
  CHECK(Cyc::root_of_unity(1, 0) == Cyc(1));
  CHECK(Cyc::root_of_unity(3, 1) + Cyc::root_of_unity(3, 2) == Cyc(-1));
  CHECK(Cyc::root_of_unity(8, 4) + Cyc(1) == Cyc(0));
  CHECK((Cyc::root_of_unity(8, 4) + Cyc(1)).is_zero());
}

TEST_CASE("field operations") {
  Cyc z5 = Cyc::root_of_unity(5, 1);
  CHECK(z5.inverse() == Cyc::root_of_unity(5, 4));
  CHECK(z5 * z5.inverse() == Cyc(1));
  Cyc half(rat_of(1, 2));
  CHECK(half * Cyc::root_of_unity(6, 1) + half * Cyc::root_of_unity(6, 1) ==
        Cyc::root_of_unity(6, 1));
  CHECK_THROWS_AS(Cyc(0).inverse(), Error);
  CHECK_THROWS_AS(Cyc(1) / Cyc(0), Error);
}

TEST_CASE("cyclotomic relations") {
  for (long n : {1L, 2L, 3L, 4L, 5L, 6L, 8L, 12L}) {
    CHECK(Cyc::root_of_unity(n, 1).pow(n) == Cyc(1));
  }
  for (long p : {2L, 3L, 5L, 7L}) {
    Cyc s(0);
    for (long j = 0; j < p; ++j) s += Cyc::root_of_unity(p, j);
    CHECK(s.is_zero());
  }
}

TEST_CASE("promotion is a field embedding") {
  CHECK(Cyc(-1).promoted(4) == Cyc::root_of_unity(4, 2));
  CHECK(Cyc(1).promoted(6) == Cyc(1));
  CHECK(Cyc::root_of_unity(3, 1).promoted(6) == Cyc::root_of_unity(6, 2));
  CHECK_THROWS_AS(Cyc::root_of_unity(4, 1).promoted(6), Error);

  std::mt19937_64 rng(20240811);
  auto rand_cyc = [&](long n) {
    Cyc out;
    for (int t = 0; t < 3; ++t) {
      long num = (long)(rng() % 19) - 9;
      long den = 1 + (long)(rng() % 7);
      out += Cyc(rat_of(num, den)) * Cyc::root_of_unity(n, (long)(rng() % n));
    }
    return out;
  };
  for (int rep = 0; rep < 25; ++rep) {
    Cyc a = rand_cyc(6), b = rand_cyc(6);
    CHECK((a * b).promoted(12) == a.promoted(12) * b.promoted(12));
    CHECK((a + b).promoted(12) == a.promoted(12) + b.promoted(12));
  }
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(7);
  auto rand_cyc = [&](long n) {
    Cyc out;
    for (int t = 0; t < 2; ++t) {
      long num = (long)(rng() % 15) - 7;
      out += Cyc(rat_of(num, 1 + (long)(rng() % 5))) * Cyc::root_of_unity(n, (long)(rng() % n));
    }
    return out;
  };
  for (int rep = 0; rep < 40; ++rep) {
    long n = std::vector<long>{2, 3, 4, 6, 8}[rep % 5];
    Cyc a = rand_cyc(n), b = rand_cyc(n), c = rand_cyc(n);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == Cyc(1));
  }
}

TEST_CASE("conjugation and torsion order") {
  Cyc z8 = Cyc::root_of_unity(8, 1);
  CHECK(z8.conj() == Cyc::root_of_unity(8, 7));
  CHECK(z8 * z8.conj() == Cyc(1));
  CHECK(z8.torsion_order() == 8);
  CHECK(Cyc(-1).torsion_order() == 2);
  CHECK(Cyc(1).torsion_order() == 1);
  CHECK(Cyc(rat_of(1, 2)).torsion_order() == 0);
  CHECK((-Cyc::root_of_unity(3, 1)).torsion_order() == 6);
}

TEST_CASE("parse and render") {
  CHECK(parse_cyc("-1/2") == Cyc(rat_of(-1, 2)));
  CHECK(parse_cyc("z^2@4") == Cyc(-1));
  CHECK(parse_cyc("1/2*z@6 + 1/2*z@6") == Cyc::root_of_unity(6, 1));
  CHECK(parse_cyc("z", 5) == Cyc::root_of_unity(5, 1));
  CHECK(parse_cyc("1 + z@3 + z^2@3").is_zero());
  CHECK_THROWS_AS(parse_cyc("zebra"), Error);
  CHECK_THROWS_AS(parse_cyc(""), Error);

  Cyc v = Cyc(rat_of(3, 2)) - Cyc(rat_of(1, 3)) * Cyc::root_of_unity(5, 2);
  CHECK(parse_cyc(v.str(), 5) == v);
  CHECK(Cyc(0).str() == "0");
}
