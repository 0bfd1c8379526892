// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "triang/errors.hpp"
#include "triang/lie.hpp"
#include "triang/parse.hpp"
#include "triang/witness.hpp"

using namespace triang;

namespace {

struct Verdict {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail.str("");
      detail << what;
    }
  }
};

TriangularAutomorphism square_shear() {
  return parse_automorphism("n=3\nx1 -> x1\nx2 -> x2 + x1^2\nx3 -> x3 + x2^2\n");
}

TriangularDerivation D(std::size_t n, std::initializer_list<const char*> coeffs) {
  std::vector<Polynomial> g;
  for (const char* c : coeffs) g.push_back(parse_polynomial(c));
  return TriangularDerivation::make(n, std::move(g));
}

Rational random_rational(Rng& rng) {
  std::uniform_int_distribution<long> num(-7, 7), den(1, 6);
  Rational r{mpz_class(num(rng)), mpz_class(den(rng))};
  r.canonicalize();
  return r;
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

void golden_square(Verdict& v) {
  const auto phi = square_shear();
  const auto expected = TriangularAutomorphism::make(
      3, {1, 1, 1},
      {Polynomial(), parse_polynomial("2*x1^2"), parse_polynomial("2*x2^2 + 2*x1^2*x2 + x1^4")});
  const auto sq = compose(phi, phi);
  v.require(sq == expected, "phi o phi = " + format_automorphism(sq));
  v.require(degree(sq) == 4, "degree " + std::to_string(degree(sq)));
  v.detail << to_string(sq.coordinate(3)) << ", degree " << degree(sq);
}

void degree_bound_holds(Verdict& v) {
  std::size_t cells = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t m = 1; m <= 3; ++m) {
      const auto r = degree_fuzz(FuzzOptions{.n = n, .m = m, .max_word_len = 8, .trials = 1000,
                                             .seed = 1000 * n + m});
      v.require(r.max_degree <= r.bound && r.bound == degree_bound(n, m),
                "n=" + std::to_string(n) + " m=" + std::to_string(m) + " max " +
                    std::to_string(r.max_degree));
      ++cells;
    }
  }
  const GeneratorTable table{{"phi", square_shear()}};
  const auto word = GroupWord(3, table, {{"phi", 1}, {"phi", 1}});
  v.require(degree(evaluate(word)) == 4, "phi phi does not reach degree 4");
  FuzzOptions fixed{.n = 3, .m = 2, .max_word_len = 8, .trials = 1000, .seed = 7};
  fixed.generators = table;
  const auto r = degree_fuzz(fixed);
  v.require(r.max_degree == 4, "(3,2) over phi reached " + std::to_string(r.max_degree));
  v.detail << cells << " cells x 1000 trials within m^(n-1); (3,2) attains 4 at "
           << to_string(word);
}

void group_axioms(Verdict& v) {
  Rng rng(303);
  for (int t = 0; t < 500; ++t) {
    const RandomTriangularOptions opts{.n = uniform(rng, 1, 4), .m = uniform(rng, 1, 3),
                                       .coeff_bound = 3};
    const auto a = random_triangular(opts, rng);
    const auto b = random_triangular(opts, rng);
    const auto c = random_triangular(opts, rng);
    v.require(compose(compose(a, b), c) == compose(a, compose(b, c)),
              "associativity failed on\n" + format_automorphism(a));
  }
  for (int t = 0; t < 500; ++t) {
    const RandomTriangularOptions opts{.n = uniform(rng, 1, 4), .m = uniform(rng, 1, 3),
                                       .coeff_bound = 3};
    const auto a = random_triangular(opts, rng);
    const auto inv = invert(a);
    const auto id = TriangularAutomorphism::identity(opts.n);
    v.require(compose(a, inv) == id && compose(inv, a) == id,
              "inverse round-trip failed on\n" + format_automorphism(a));
    v.require(degree(inv) <= degree_bound(opts.n, opts.m),
              "inverse degree " + std::to_string(degree(inv)) + " exceeds bound");
  }
  v.detail << "500 associative triples, 500 two-sided inverses";
}

void solvability(Verdict& v) {
  std::size_t samples = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t depth = 1; depth <= n + 1; ++depth) {
      const auto r = derived_depth_test(DepthOptions{.n = n, .depth = depth, .trials = 20,
                                                     .seed = 40 + 10 * n + depth});
      const std::string cell = "n=" + std::to_string(n) + " depth=" + std::to_string(depth);
      v.require(r.passed && r.unitriangular == r.trials && r.prefix_fixed == r.trials,
                cell + " failed");
      if (depth == n + 1) v.require(r.identity == r.trials, cell + " not the identity");
      samples += r.trials;
    }
  }
  v.detail << samples << " iterated commutators; depth n+1 always the identity";
}

void unipotent_products(Verdict& v) {
  Rng rng(505);
  std::size_t products = 0;
  for (int set = 0; set < 100; ++set) {
    const std::size_t n = uniform(rng, 1, 4);
    std::vector<TriangularDerivation> ds;
    for (std::size_t k = uniform(rng, 1, 3); k > 0; --k) {
      ds.push_back(random_derivation(RandomDerivationOptions{.n = n, .max_degree = 2}, rng));
    }
    const auto r = unipotent_generation_test(
        ds, UnipotentOptions{.max_word_len = 6, .trials = 5, .seed = 9000 + std::uint64_t(set)});
    v.require(r.passed && r.unitriangular == r.trials, "set " + std::to_string(set) + " failed");
    products += r.trials;
  }
  v.detail << products << " products, all unitriangular";
}

void lie_closures(Verdict& v) {
  Rng rng(606);
  std::size_t max_dim = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = uniform(rng, 1, 4);
    std::vector<TriangularDerivation> gens;
    for (std::size_t k = uniform(rng, 1, 3); k > 0; --k) {
      gens.push_back(random_derivation(
          RandomDerivationOptions{.n = n, .max_degree = 2, .coeff_bound = 3, .density = 0.4}, rng));
    }
    const auto basis = lie_closure(gens);
    const auto lcs = lower_central_series(basis);
    v.require(lcs.back() == 0, "lower central series stalls on sample " + std::to_string(t));
    max_dim = std::max(max_dim, basis.dimension());
  }

  const std::vector<TriangularDerivation> heis{D(2, {"1", "0"}), D(2, {"0", "x1"})};
  const auto basis = lie_closure(heis);
  const auto lcs = lower_central_series(basis);
  const auto brute = oracle::saturate(heis);
  v.require(basis.dimension() == 3 && brute.size() == 3, "Heisenberg dimension is not 3");
  v.require(series_length(lcs) == 2, "Heisenberg nilpotency class is not 2");
  v.require(oracle::bracket_span(brute, brute).size() == 1 &&
                oracle::bracket_span(brute, oracle::bracket_span(brute, brute)).empty(),
            "oracle disagrees on the Heisenberg series");
  v.detail << "200 closures nilpotent (largest dimension " << max_dim
           << "); Heisenberg dimension 3, class 2";
}

void one_parameter(Verdict& v) {
  Rng rng(707);
  for (int t = 0; t < 100; ++t) {
    const auto d = random_derivation(
        RandomDerivationOptions{.n = uniform(rng, 1, 4), .max_degree = 2}, rng);
    const Rational s = random_rational(rng);
    const Rational u = random_rational(rng);
    v.require(compose(exp(d, s), exp(d, u)) == exp(d, s + u),
              "exp(sD) exp(tD) != exp((s+t)D) for\n" + format_derivation(d));
  }
  v.detail << "100 cases exact";
}

void counterexample(Verdict& v) {
  const auto r = nonconnected_counterexample(1, 0, 12);
  v.require(r.all_in_lattice, "an element of determinant 1 is off the lattice");
  std::size_t previous = 0;
  for (long L = 1; L <= 6; ++L) {
    std::vector<mpz_class> expected;
    for (long k = -L; k <= L; ++k) expected.emplace_back(k);
    const auto& got = r.lengths[2 * L].k_values;
    v.require(got == expected, "L=" + std::to_string(L) + " gives " +
                                   std::to_string(got.size()) + " elements");
    v.require(got.size() > previous, "not strictly increasing at L=" + std::to_string(L));
    previous = got.size();
    v.detail << (L > 1 ? " " : "sizes ") << got.size();
  }
}

void factorization(Verdict& v) {
  Rng rng(909);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = uniform(rng, 1, 4);
    const auto phi = random_triangular(
        RandomTriangularOptions{.n = n, .m = uniform(rng, 1, 3), .coeff_bound = 4}, rng);
    const auto factors = elementary_factorization(phi);
    v.require(compose_all(factors, n) == phi, "product differs for\n" + format_automorphism(phi));
    for (const auto& f : factors) {
      v.require(degree(f) <= degree(phi), "factor degree exceeds input degree");
    }
  }
  v.detail << "500 factorizations recompose exactly";
}

void round_trip(Verdict& v) {
  Rng rng(1010);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = uniform(rng, 1, 4);
    std::string once, twice;
    switch (t % 3) {
      case 0: {
        const auto phi = random_triangular(
            RandomTriangularOptions{.n = n, .m = uniform(rng, 1, 4), .coeff_bound = 9}, rng);
        const auto p = substitute(phi.coordinate(n), random_triangular(
                                                         RandomTriangularOptions{.n = n}, rng)
                                                         .coordinates()) /
                       Rational(uniform(rng, 1, 7));
        once = to_string(p);
        twice = to_string(parse_polynomial(once));
        break;
      }
      case 1: {
        const auto phi = random_triangular(
            RandomTriangularOptions{.n = n, .m = uniform(rng, 1, 3), .coeff_bound = 9}, rng);
        once = format_automorphism(invert(phi));
        twice = format_automorphism(parse_automorphism(once));
        break;
      }
      default: {
        const auto d = random_derivation(
            RandomDerivationOptions{.n = n, .max_degree = uniform(rng, 0, 3), .coeff_bound = 9},
            rng);
        once = format_derivation(Rational(1, 3) * d);
        twice = format_derivation(parse_derivation(once));
      }
    }
    v.require(once == twice, "round-trip changed\n" + once + "into\n" + twice);
  }
  v.detail << "1000 texts reprinted identically";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria{
      {"golden square", golden_square},
      {"degree bound m^(n-1)", degree_bound_holds},
      {"group axioms", group_axioms},
      {"iterated commutators", solvability},
      {"unipotent products", unipotent_products},
      {"nilpotent closures", lie_closures},
      {"one-parameter law", one_parameter},
      {"determinant-1 counterexample", counterexample},
      {"elementary factorization", factorization},
      {"print/parse round-trip", round_trip},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(v);
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail.str("");
      v.detail << "exception: " << e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!v.ok) ++failures;
    std::printf("criterion %2zu %s  %-30s %7.2fs  %s\n", i + 1, v.ok ? "PASS" : "FAIL",
                criteria[i].first.c_str(), secs, v.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
