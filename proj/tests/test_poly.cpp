#include <doctest.h>

#include <random>

#include "triang/errors.hpp"
#include "triang/parse.hpp"
#include "triang/poly.hpp"

using namespace triang;

namespace {

Polynomial P(const char* text) { return parse_polynomial(text); }
Polynomial x(std::size_t i) { return Polynomial::variable(i); }

Polynomial random_poly(std::mt19937_64& rng, std::size_t vars, std::size_t max_deg) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::bernoulli_distribution keep(0.4);
  Polynomial::Terms terms;
  for (const auto& m : monomials_up_to(vars, max_deg)) {
    if (keep(rng)) terms.emplace(m, Rational(coeff(rng)));
  }
  return Polynomial::from_terms(std::move(terms), vars);
}

}  // namespace

TEST_CASE("monomial order is graded lex with x1 < x2 < ... < xn") {
  const Monomial one;
  const Monomial x1 = Monomial::variable(1);
  const Monomial x2 = Monomial::variable(2);
  const Monomial x1sq = Monomial::variable(1, 2);
  const Monomial x1x2 = x1 * x2;
  CHECK(one < x1);
  CHECK(x1 < x2);
  CHECK(x2 < x1sq);
  CHECK(x1sq < x1x2);
  CHECK(x1x2 < Monomial::variable(2, 2));
  CHECK(Monomial({0, 2, 0, 0}) == Monomial({0, 2}));
  CHECK(Monomial({0, 2, 0}).degree() == 2);
  CHECK(Monomial({0, 2, 0}).max_variable() == 2);
}

TEST_CASE("monomials_up_to enumerates the bounded-degree monomials") {
  CHECK(monomials_up_to(0, 5).size() == 1);
  CHECK(monomials_up_to(2, 2).size() == 6);
  CHECK(monomials_up_to(3, 3).size() == 20);
}

TEST_CASE("add") {
  // the squared example's last coordinate, assembled term by term
  CHECK(x(2).pow(2) + P("2*x1^2*x2 + x1^4") == P("x2^2 + 2*x1^2*x2 + x1^4"));
  const Polynomial p = P("3*x1*x2 - 1/2");
  CHECK(p + Polynomial() == p);
  CHECK((p + (-p)).is_zero());
  CHECK((P("x1 + x2") + P("x3")).ambient_n() == 3);
}

TEST_CASE("mul") {
  const Polynomial f = x(2) + x(1).pow(2);
  CHECK(f * f == P("x2^2 + 2*x1^2*x2 + x1^4"));
  CHECK(f * Polynomial(Rational(1)) == f);
  CHECK((f * Polynomial()).is_zero());
}

TEST_CASE("substitute") {
  const std::vector<Polynomial> images{x(1), x(2) + x(1).pow(2)};
  CHECK(substitute(x(2).pow(2), images) == P("x2^2 + 2*x1^2*x2 + x1^4"));
  const Polynomial p = P("x1*x3^2 - 7*x2 + 2/3");
  const std::vector<Polynomial> ids{x(1), x(2), x(3)};
  CHECK(substitute(p, ids) == p);
  const std::vector<Polynomial> swap{x(2), x(1)};
  CHECK(substitute(P("x1 + x2"), swap) == P("x1 + x2"));
  CHECK_THROWS_AS(substitute(p.with_ambient(3), std::vector<Polynomial>{x(1)}), InputError);
}

TEST_CASE("partial") {
  CHECK(partial(P("x1^4"), 1) == P("4*x1^3"));
  CHECK(partial(P("x2^2"), 1).is_zero());
  CHECK(partial(P("2*x1^2*x2"), 2) == P("2*x1^2"));
  CHECK_THROWS_AS(partial(P("x1"), 2), InputError);
  CHECK_THROWS_AS(partial(P("x1"), 0), InputError);
}

TEST_CASE("total_degree and the zero sentinel") {
  CHECK(P("x3 + 2*x2^2 + 2*x1^2*x2 + x1^4").total_degree() == Degree(4));
  CHECK(Polynomial().total_degree().is_zero_polynomial());
  CHECK(Polynomial().total_degree().at_most(0));
  CHECK(Polynomial().total_degree() < Degree(0));
  CHECK(P("7/2").total_degree() == Degree(0));
  CHECK_THROWS_AS(Polynomial().total_degree().value(), std::logic_error);
  CHECK(std::max(Polynomial().total_degree(), Degree(3)) == Degree(3));
}

TEST_CASE("max_variable") {
  CHECK(P("x2 + x1^2").max_variable() == 2);
  CHECK(P("5").max_variable() == 0);
  CHECK(P("x1^4 + x3").max_variable() == 3);
}

TEST_CASE("printing is canonical") {
  CHECK(to_string(P("x1^4 + 2*x1^2*x2 + 2*x2^2 + x3")) == "x3 + 2*x2^2 + 2*x1^2*x2 + x1^4");
  CHECK(to_string(P("x1/2 - 1/2")) == "-1/2 + 1/2*x1");
  CHECK(to_string(P("-x1*x2")) == "-x1*x2");
  CHECK(to_string(Polynomial()) == "0");
  CHECK(to_string(P("6/4")) == "3/2");
}

TEST_CASE("ring axioms, homomorphism and Leibniz on random inputs") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const Polynomial p = random_poly(rng, 3, 3);
    const Polynomial q = random_poly(rng, 3, 3);
    const Polynomial r = random_poly(rng, 3, 2);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    if (!p.is_zero() && !q.is_zero()) {
      CHECK((p * q).total_degree().value() ==
            p.total_degree().value() + q.total_degree().value());
    }
    for (std::size_t i = 1; i <= 3; ++i) {
      CHECK(partial(p * q, i) == p * partial(q, i) + q * partial(p, i));
    }

    const std::vector<Polynomial> u{random_poly(rng, 3, 2), random_poly(rng, 3, 2),
                                    random_poly(rng, 3, 1)};
    const std::vector<Polynomial> v{random_poly(rng, 3, 1), random_poly(rng, 3, 2),
                                    random_poly(rng, 3, 1)};
    CHECK(substitute(p + q, u) == substitute(p, u) + substitute(q, u));
    CHECK(substitute(p * q, u) == substitute(p, u) * substitute(q, u));
    std::vector<Polynomial> uv;
    for (const auto& ui : u) uv.push_back(substitute(ui, v));
    CHECK(substitute(substitute(p, u), v) == substitute(p, uv));
  }
}
