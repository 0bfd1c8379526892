#include <doctest.h>

#include "oracles.hpp"
#include "triang/automorphism.hpp"
#include "triang/errors.hpp"
#include "triang/parse.hpp"
#include "triang/witness.hpp"

using namespace triang;

namespace {

Polynomial P(const char* text) { return parse_polynomial(text); }

// (x1, x2 + x1^2, x3 + x2^2)
TriangularAutomorphism square_shear() {
  return TriangularAutomorphism::make(3, {1, 1, 1}, {P("0"), P("x1^2"), P("x2^2")});
}

TriangularAutomorphism from_coords(std::size_t n, std::initializer_list<const char*> coords) {
  std::string text = "n=" + std::to_string(n) + "\n";
  std::size_t i = 1;
  for (const char* c : coords) text += "x" + std::to_string(i++) + " -> " + c + "\n";
  return parse_automorphism(text);
}

}  // namespace

TEST_CASE("make validates triangularity") {
  const auto phi = square_shear();
  CHECK(phi.coordinate(1) == P("x1"));
  CHECK(phi.coordinate(2) == P("x2 + x1^2"));
  CHECK(phi.coordinate(3) == P("x3 + x2^2"));

  CHECK_THROWS_AS(TriangularAutomorphism::make(2, {1, 1}, {P("0"), P("x2")}), InputError);
  CHECK_THROWS_AS(TriangularAutomorphism::make(2, {1, 1}, {P("x1"), P("0")}), InputError);
  CHECK_THROWS_AS(TriangularAutomorphism::make(2, {1, 0}, {P("0"), P("0")}), InputError);
  CHECK_THROWS_AS(TriangularAutomorphism::make(2, {1}, {P("0")}), InputError);

  const auto affine = TriangularAutomorphism::make(1, {2}, {P("1/2")});
  CHECK(affine.coordinate(1) == P("2*x1 + 1/2"));
}

TEST_CASE("identity") {
  CHECK(TriangularAutomorphism::identity(1).coordinate(1) == P("x1"));
  const auto id3 = TriangularAutomorphism::identity(3);
  CHECK(id3.coordinates() == oracle::identity_coords(3));
  CHECK(degree(id3) == 1);
}

TEST_CASE("compose reproduces the degree-4 square") {
  const auto phi = square_shear();
  const auto sq = compose(phi, phi);
  CHECK(sq == from_coords(3, {"x1", "x2 + 2*x1^2", "x3 + 2*x2^2 + 2*x1^2*x2 + x1^4"}));
  CHECK(degree(phi) == 2);
  CHECK(degree(sq) == 4);

  const auto id = TriangularAutomorphism::identity(3);
  CHECK(compose(id, phi) == phi);
  CHECK(compose(phi, id) == phi);
  CHECK(compose(phi, invert(phi)) == id);

  CHECK_THROWS_AS(compose(phi, TriangularAutomorphism::identity(2)), InputError);
}

TEST_CASE("compose agrees with whole-coordinate substitution") {
  Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 4;
    const RandomTriangularOptions opts{.n = n, .m = static_cast<std::size_t>(1 + t % 3)};
    const auto a = random_triangular(opts, rng);
    const auto b = random_triangular(opts, rng);
    CHECK(compose(a, b).coordinates() ==
          oracle::compose_coords(a.coordinates(), b.coordinates()));
  }
}

TEST_CASE("invert") {
  CHECK(invert(from_coords(2, {"x1", "x2 + x1^2"})) == from_coords(2, {"x1", "x2 - x1^2"}));

  const auto phi = square_shear();
  const auto expected = from_coords(3, {"x1", "x2 - x1^2", "x3 - (x2 - x1^2)^2"});
  CHECK(invert(phi) == expected);
  // both sides by plain substitution
  CHECK(oracle::compose_coords(phi.coordinates(), expected.coordinates()) ==
        oracle::identity_coords(3));
  CHECK(oracle::compose_coords(expected.coordinates(), phi.coordinates()) ==
        oracle::identity_coords(3));

  const auto affine = from_coords(1, {"2*x1 + 1"});
  CHECK(invert(affine) == from_coords(1, {"x1/2 - 1/2"}));
  CHECK(invert(affine).lambda(1) == Rational(1, 2));
}

TEST_CASE("power") {
  const auto phi = square_shear();
  CHECK(power(phi, 0) == TriangularAutomorphism::identity(3));
  CHECK(power(phi, 2) == compose(phi, phi));
  CHECK(power(phi, 3) == compose(phi, compose(phi, phi)));
  CHECK(power(phi, -2) == invert(compose(phi, phi)));
}

TEST_CASE("commutator") {
  const auto phi = square_shear();
  const auto id = TriangularAutomorphism::identity(3);
  CHECK(commutator(phi, phi) == id);
  CHECK(commutator(phi, id) == id);

  // n = 1: scaling by 2 against translation by 1, expanded by hand through
  // the four compositions: 2x1+2, then x1+2, then x1+1.
  const auto scale = from_coords(1, {"2*x1"});
  const auto shift = from_coords(1, {"x1 + 1"});
  const auto c = commutator(scale, shift);
  CHECK(c == from_coords(1, {"x1 + 1"}));
  const auto by_hand = oracle::compose_coords(
      oracle::compose_coords(oracle::compose_coords(scale.coordinates(), shift.coordinates()),
                             invert(scale).coordinates()),
      invert(shift).coordinates());
  CHECK(c.coordinates() == by_hand);
  CHECK(is_unitriangular(c));
}

TEST_CASE("is_unitriangular and fixes_prefix") {
  const auto id = TriangularAutomorphism::identity(4);
  CHECK(fixes_prefix(id, 4));
  CHECK(is_unitriangular(square_shear()));
  const auto s = from_coords(2, {"2*x1", "x2"});
  CHECK(fixes_prefix(s, 0));
  CHECK_FALSE(fixes_prefix(s, 1));
  CHECK_FALSE(is_unitriangular(s));
  CHECK(fixes_prefix(square_shear(), 1));
  CHECK_FALSE(fixes_prefix(square_shear(), 2));
  CHECK_THROWS_AS(fixes_prefix(s, 3), InputError);
}

TEST_CASE("elementary_factorization") {
  const auto single = from_coords(2, {"x1", "x2 + x1^2"});
  const auto f1 = elementary_factorization(single);
  REQUIRE(f1.size() == 1);
  CHECK(f1[0] == elementary_shear(2, 2, Monomial::variable(1, 2), 1));

  CHECK(elementary_factorization(TriangularAutomorphism::identity(3)).empty());

  const auto phi = square_shear();
  const auto f = elementary_factorization(phi);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == elementary_shear(3, 2, Monomial::variable(1, 2), 1));
  CHECK(f[1] == elementary_shear(3, 3, Monomial::variable(2, 2), 1));
  CHECK(oracle::compose_coords(f[0].coordinates(), f[1].coordinates()) == phi.coordinates());

  const auto general = from_coords(2, {"-3*x1 + 2", "1/2*x2 - x1^2 + 4*x1 - 1"});
  const auto g = elementary_factorization(general);
  CHECK(g.size() == 6);  // 1 shear + scaling for x1, 3 shears + scaling for x2
  CHECK(compose_all(g, 2) == general);
}

TEST_CASE("elementary_factorization round-trips on random input") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 4;
    const auto phi = random_triangular(RandomTriangularOptions{.n = n, .m = static_cast<std::size_t>(1 + t % 3)}, rng);
    const auto factors = elementary_factorization(phi);
    std::size_t tail_terms = 0;
    for (std::size_t i = 1; i <= n; ++i) tail_terms += phi.tail(i).term_count();
    CHECK(factors.size() <= n + tail_terms);
    for (const auto& f : factors) CHECK(degree(f) <= degree(phi));
    CHECK(compose_all(factors, n) == phi);
  }
}

TEST_CASE("group laws on random triples") {
  Rng rng(3);
  for (int t = 0; t < 80; ++t) {
    const std::size_t n = 1 + t % 4;
    const RandomTriangularOptions opts{.n = n, .m = static_cast<std::size_t>(1 + t % 2), .coeff_bound = 2};
    const auto a = random_triangular(opts, rng);
    const auto b = random_triangular(opts, rng);
    const auto c = random_triangular(opts, rng);
    const auto id = TriangularAutomorphism::identity(n);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, invert(a)) == id);
    CHECK(compose(invert(a), a) == id);
    CHECK(invert(a).lambda(n) == 1 / a.lambda(n));
    CHECK(degree(invert(a)) <= degree_bound(n, degree(a)));
    CHECK(is_unitriangular(commutator(a, b)));
  }
}

TEST_CASE("affine triangular maps are closed under compose and invert") {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const RandomTriangularOptions opts{.n = 4, .m = 1, .density = 0.8};
    const auto a = random_triangular(opts, rng);
    const auto b = random_triangular(opts, rng);
    CHECK(degree(compose(a, b)) == 1);
    CHECK(degree(invert(a)) == 1);
  }
}

TEST_CASE("random_triangular") {
  CHECK(random_triangular(3, 2, 99) == random_triangular(3, 2, 99));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CHECK(DegreeClass{3, 2}.contains(random_triangular(3, 2, seed)));
    const auto line = random_triangular(1, 3, seed);
    CHECK(degree(line) == 1);
    CHECK(line.tail(1).is_constant());
    CHECK(abs(line.lambda(1)) <= 3);
  }
}
