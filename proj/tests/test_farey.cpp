#include <doctest.h>

#include <stdexcept>

#include "heckoid/farey.hpp"

using namespace heckoid;

TEST_CASE("reflections") {
  CHECK(reflect_at(0)(Slope(3, 10)) == Slope(-3, 10));
  CHECK(reflect_at(1)(Slope(5, 17)) == Slope(29, 17));
  CHECK(reflect_at(7)(Slope::infinity()).is_infinity());
  CHECK(reflect_at(2).determinant() == -1);
}

TEST_CASE("projective matrix identities") {
  ExtendedMoebius g(121, -36, 400, -119);
  CHECK(g == ExtendedMoebius(-121, 36, -400, 119));
  CHECK(g(Slope(5, 17)) == Slope(7, 23));
  CHECK(g.compose(g.inverse()) == ExtendedMoebius());
  CHECK(ExtendedMoebius()(Slope(2, 5)) == Slope(2, 5));
  CHECK(ExtendedMoebius(-1, 0, 0, 1)(Slope::infinity()).is_infinity());
  CHECK_THROWS_AS(ExtendedMoebius(2, 0, 0, 1), std::invalid_argument);
}

TEST_CASE("parabolic generator") {
  ExtendedMoebius g = parabolic_generator(Slope(3, 10), 2);
  CHECK(g == ExtendedMoebius(121, -36, 400, -119));
  CHECK(g(Slope(5, 17)) == Slope(7, 23));

  ExtendedMoebius h = parabolic_generator(Slope(2, 5), 2);
  CHECK(h(Slope(2, 5)) == Slope(2, 5));              // fixed slope
  CHECK(abs(h.a() + h.d()) == 2);                    // parabolic trace
  CHECK(h.determinant() == 1);
  bool hits = h(Slope::infinity()) == Slope(41, 100) ||
              h.inverse()(Slope::infinity()) == Slope(41, 100);
  CHECK(hits);

  CHECK_THROWS_AS(parabolic_generator(Slope(2, 1), 2), std::domain_error);
  CHECK_THROWS_AS(parabolic_generator(Slope(2, 5), 1), std::domain_error);
}

TEST_CASE("interval endpoints") {
  auto fig = interval_endpoints(Slope(3, 10), 2);
  CHECK(fig.r1 == Slope(5, 17));
  CHECK(fig.r2 == Slope(7, 23));
  CHECK(fig.i1_closed_at_r1);
  CHECK_FALSE(fig.i2_closed_at_r2);
  CHECK_FALSE(fig.degenerate);

  auto two5 = interval_endpoints(Slope(2, 5), 2);
  CHECK(two5.r1 == Slope(3, 8));
  CHECK(two5.r2 == Slope(5, 12));

  auto third = interval_endpoints(Slope(1, 3), 2);  // k = 1, odd
  CHECK(third.r1 == Slope(2, 7));
  CHECK(third.r2 == Slope(2, 5));
  CHECK_FALSE(third.i1_closed_at_r1);
  CHECK(third.i2_closed_at_r2);
  CHECK(third.degenerate);  // r = 1/p residue class

  CHECK(interval_endpoints(Slope(2, 3), 2).degenerate);  // r = 1 - 1/p
  CHECK_FALSE(interval_endpoints(Slope(2, 5), 2).degenerate);
  CHECK_THROWS_AS(interval_endpoints(Slope(1, 1), 2), std::domain_error);
}

TEST_CASE("slope classification") {
  CHECK(classify_slope(Slope(5, 17), Slope(3, 10), 2) == SlopeClass::InI1);
  CHECK(classify_slope(Slope(7, 23), Slope(3, 10), 2) == SlopeClass::Gap);
  CHECK(classify_slope(Slope(3, 10), Slope(3, 10), 2) == SlopeClass::IsR);
  CHECK(classify_slope(Slope::infinity(), Slope(3, 10), 2) == SlopeClass::IsInfinity);
  CHECK(classify_slope(Slope(-1, 7), Slope(3, 10), 2) == SlopeClass::OutsideUnit);
  CHECK(classify_slope(Slope(0, 1), Slope(3, 10), 2) == SlopeClass::InI1);
  CHECK(classify_slope(Slope(1, 1), Slope(3, 10), 2) == SlopeClass::InI2);
  // k odd: r1 excluded, r2 included
  CHECK(classify_slope(Slope(2, 7), Slope(1, 3), 2) == SlopeClass::Gap);
  CHECK(classify_slope(Slope(2, 5), Slope(1, 3), 2) == SlopeClass::InI2);
}

TEST_CASE("reduction to the canonical representative") {
  FareyContext fig(Slope(3, 10), 2);
  auto a = fig.reduce(Slope::infinity());
  CHECK(a.canonical.is_infinity());
  CHECK(a.witness.empty());

  auto b = fig.reduce(Slope(7, 23));
  CHECK(b.canonical == Slope(5, 17));
  REQUIRE(b.witness.size() == 1);
  CHECK(b.witness[0].kind == GeneratorStep::Kind::ParabolicPower);
  CHECK(abs(b.witness[0].value) == 1);

  FareyContext two5(Slope(2, 5), 2);
  auto c = two5.reduce(Slope(41, 100));
  CHECK(c.canonical.is_infinity());
  REQUIRE(c.witness.size() == 1);
  CHECK(c.witness[0].kind == GeneratorStep::Kind::ParabolicPower);
  CHECK(abs(c.witness[0].value) == 1);

  CHECK(in_orbit_of_infinity(Slope(41, 100), Slope(2, 5), 2));
  CHECK_FALSE(in_orbit_of_infinity(Slope(1, 3), Slope(2, 5), 2));
  CHECK(in_orbit_of_infinity(Slope::infinity(), Slope(2, 5), 2));
}

TEST_CASE("reduction witnesses replay exactly and are idempotent") {
  FareyContext ctx(Slope(3, 10), 2);
  std::vector<Slope> samples;
  for (long long num = -40; num <= 40; ++num)
    for (long long den = 1; den <= 23; ++den) samples.emplace_back(num, den);
  samples.push_back(Slope::infinity());

  for (const Slope& s : samples) {
    Reduction red = ctx.reduce(s);
    REQUIRE(ctx.apply_witness(red.witness, s) == red.canonical);
    SlopeClass c = ctx.classify(red.canonical);
    REQUIRE((c == SlopeClass::InI1 || c == SlopeClass::InI2 || c == SlopeClass::IsR ||
             c == SlopeClass::IsInfinity));
    Reduction again = ctx.reduce(red.canonical);
    REQUIRE(again.canonical == red.canonical);
    REQUIRE(again.witness.empty());
  }
}

TEST_CASE("every canonical representative is a reduction fixed point") {
  for (auto [q, p, n] :
       {std::tuple<long long, long long, int>{3, 10, 2}, {2, 5, 3}, {1, 2, 2}, {5, 7, 2}}) {
    FareyContext ctx(Slope(q, p), n);
    std::vector<Slope> canonicals{Slope::infinity(), ctx.r()};
    for (const Slope& s : reduced_slopes_in_unit(20, true, true)) {
      SlopeClass c = ctx.classify(s);
      if (c == SlopeClass::InI1 || c == SlopeClass::InI2) canonicals.push_back(s);
    }
    for (const Slope& s0 : canonicals) {
      Reduction red = ctx.reduce(s0);
      REQUIRE(red.canonical == s0);
      REQUIRE(red.witness.empty());
    }
  }
}

TEST_CASE("witness serialization") {
  GeneratorWord w{GeneratorStep::reflect(0), GeneratorStep::parabolic(-1),
                  GeneratorStep::reflect(1)};
  CHECK(witness_str(w) == "R(0) P(-1) R(1)");
  CHECK(witness_str({}) == "");
}

TEST_CASE("orbit brute force") {
  auto base = orbit_bfs_oracle(Slope(2, 5), 2, 0, 100);
  CHECK(base == std::set<Slope>{Slope::infinity()});

  auto depth1 = orbit_bfs_oracle(Slope(2, 5), 2, 1, 100);
  CHECK(depth1.count(Slope(41, 100)) == 1);
  CHECK(depth1.count(Slope(39, 100)) == 1);

  FareyContext ctx(Slope(2, 5), 2);
  auto orbit = orbit_bfs_oracle(Slope(2, 5), 2, 5, 150);
  for (const Slope& s : orbit) REQUIRE(ctx.in_orbit_of_infinity(s));
}

TEST_CASE("bounded orbits of distinct canonical points never meet") {
  for (int n : {2, 3}) {
    FareyContext ctx(Slope(2, 5), n);
    std::vector<Slope> canonicals{Slope::infinity(), Slope(2, 5)};
    for (const Slope& s : reduced_slopes_in_unit(9, true, true)) {
      SlopeClass c = ctx.classify(s);
      if (c == SlopeClass::InI1 || c == SlopeClass::InI2) canonicals.push_back(s);
    }
    for (const Slope& a : canonicals) {
      auto orbit = orbit_bfs_from(ctx, a, 4, 60);
      for (const Slope& b : canonicals)
        if (!(a == b)) REQUIRE(orbit.count(b) == 0);
    }
  }
}

TEST_CASE("fundamental-domain pairing on a denominator sweep") {
  for (long long p = 2; p <= 30; ++p)
    for (long long q = 1; q < p; ++q) {
      if (gcd(Int(q), Int(p)) != 1) continue;
      for (int n : {2, 3}) {
        Slope r(q, p);
        auto fi = interval_endpoints(r, n);
        REQUIRE(parabolic_generator(r, n)(fi.r1) == fi.r2);
        REQUIRE(Slope(0, 1) < fi.r1);
        REQUIRE(fi.r1 < r);
        REQUIRE(r < fi.r2);
        REQUIRE(fi.r2 < Slope(1, 1));
        REQUIRE(fi.i1_closed_at_r1 != fi.i2_closed_at_r2);
      }
    }
}
