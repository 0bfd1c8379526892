#include "triang/automorphism.hpp"

#include <algorithm>
#include <string>

#include "triang/errors.hpp"

namespace triang {

TriangularAutomorphism TriangularAutomorphism::make(std::size_t n,
                                                    std::vector<Rational> lambdas,
                                                    std::vector<Polynomial> tails) {
  if (n == 0) throw InputError("dimension must be at least 1");
  if (lambdas.size() != n || tails.size() != n) {
    throw InputError("expected " + std::to_string(n) + " lambdas and tails, got " +
                     std::to_string(lambdas.size()) + " and " +
                     std::to_string(tails.size()));
  }
  TriangularAutomorphism phi;
  phi.coords_.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    Rational& lambda = lambdas[i - 1];
    lambda.canonicalize();
    if (sgn(lambda) == 0) {
      throw InputError("coordinate " + std::to_string(i) + ": linear coefficient is zero");
    }
    Polynomial& h = tails[i - 1];
    if (h.max_variable() >= i) {
      throw InputError("coordinate " + std::to_string(i) + ": tail " + to_string(h) +
                       " mentions x" + std::to_string(h.max_variable()) +
                       "; only x1..x" + std::to_string(i - 1) + " are allowed");
    }
    if (h.ambient_n() > n) {
      throw InputError("coordinate " + std::to_string(i) + ": tail lives in " +
                       std::to_string(h.ambient_n()) + " variables, dimension is " +
                       std::to_string(n));
    }
    h = h.with_ambient(n);
    phi.coords_.push_back(Polynomial(Monomial::variable(i), lambda, n) + h);
  }
  phi.lambdas_ = std::move(lambdas);
  phi.tails_ = std::move(tails);
  return phi;
}

TriangularAutomorphism TriangularAutomorphism::identity(std::size_t n) {
  return make(n, std::vector<Rational>(n, Rational(1)),
              std::vector<Polynomial>(n, Polynomial(Rational(0), n)));
}

bool DegreeClass::contains(const TriangularAutomorphism& phi) const {
  return phi.dimension() == n && degree(phi) <= m;
}

namespace {

void require_same_dimension(const TriangularAutomorphism& a, const TriangularAutomorphism& b,
                            const char* op) {
  if (a.dimension() != b.dimension()) {
    throw InputError(std::string(op) + ": dimension mismatch (" +
                     std::to_string(a.dimension()) + " vs " +
                     std::to_string(b.dimension()) + ")");
  }
}

}  // namespace

TriangularAutomorphism compose(const TriangularAutomorphism& outer,
                               const TriangularAutomorphism& inner) {
  require_same_dimension(outer, inner, "compose");
  const std::size_t n = outer.dimension();
  std::vector<Rational> lambdas;
  std::vector<Polynomial> tails;
  lambdas.reserve(n);
  tails.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) {
    // mu'_j mu_j x_j + mu'_j p_j + p'_j(inner_1, ..., inner_{j-1})
    lambdas.emplace_back(outer.lambda(j) * inner.lambda(j));
    tails.push_back(outer.lambda(j) * inner.tail(j) +
                    substitute(outer.tail(j), inner.coordinates()));
  }
  return TriangularAutomorphism::make(n, std::move(lambdas), std::move(tails));
}

TriangularAutomorphism invert(const TriangularAutomorphism& phi) {
  const std::size_t n = phi.dimension();
  // Back-substitution: g_i = lambda_i^-1 (x_i - h_i(g_1, ..., g_{i-1})).
  // Slots past i-1 keep x_j; h_i never reads them.
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) images.push_back(Polynomial::variable(i, n));

  std::vector<Rational> lambdas;
  std::vector<Polynomial> tails;
  for (std::size_t i = 1; i <= n; ++i) {
    const Rational inv = 1 / phi.lambda(i);
    lambdas.push_back(inv);
    tails.push_back(-(inv * substitute(phi.tail(i), images)));
    images[i - 1] = Polynomial(Monomial::variable(i), inv, n) + tails.back();
  }
  return TriangularAutomorphism::make(n, std::move(lambdas), std::move(tails));
}

TriangularAutomorphism power(const TriangularAutomorphism& phi, long k) {
  const std::size_t n = phi.dimension();
  TriangularAutomorphism base = k < 0 ? invert(phi) : phi;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-(k + 1)) + 1 : static_cast<unsigned long>(k);
  TriangularAutomorphism result = TriangularAutomorphism::identity(n);
  while (e > 0) {
    if (e & 1ul) result = compose(result, base);
    e >>= 1;
    if (e > 0) base = compose(base, base);
  }
  return result;
}

std::size_t degree(const TriangularAutomorphism& phi) {
  std::size_t d = 1;
  for (const auto& f : phi.coordinates()) d = std::max(d, f.total_degree().value());
  return d;
}

TriangularAutomorphism commutator(const TriangularAutomorphism& phi,
                                  const TriangularAutomorphism& psi) {
  require_same_dimension(phi, psi, "commutator");
  return compose(compose(compose(phi, psi), invert(phi)), invert(psi));
}

bool is_unitriangular(const TriangularAutomorphism& phi) {
  for (std::size_t i = 1; i <= phi.dimension(); ++i) {
    if (phi.lambda(i) != 1) return false;
  }
  return true;
}

bool fixes_prefix(const TriangularAutomorphism& phi, std::size_t s) {
  if (s > phi.dimension()) {
    throw InputError("fixes_prefix: prefix length " + std::to_string(s) +
                     " exceeds dimension " + std::to_string(phi.dimension()));
  }
  for (std::size_t i = 1; i <= s; ++i) {
    if (phi.lambda(i) != 1 || !phi.tail(i).is_zero()) return false;
  }
  return true;
}

bool is_identity(const TriangularAutomorphism& phi) {
  return fixes_prefix(phi, phi.dimension());
}

TriangularAutomorphism elementary_scaling(std::size_t n, std::size_t i,
                                          const Rational& lambda) {
  std::vector<Rational> lambdas(n, Rational(1));
  lambdas.at(i - 1) = lambda;
  return TriangularAutomorphism::make(n, std::move(lambdas),
                                      std::vector<Polynomial>(n, Polynomial(Rational(0), n)));
}

TriangularAutomorphism elementary_shear(std::size_t n, std::size_t i, const Monomial& alpha,
                                        const Rational& c) {
  std::vector<Polynomial> tails(n, Polynomial(Rational(0), n));
  tails.at(i - 1) = Polynomial(alpha, c, n);
  return TriangularAutomorphism::make(n, std::vector<Rational>(n, Rational(1)),
                                      std::move(tails));
}

std::vector<TriangularAutomorphism> elementary_factorization(
    const TriangularAutomorphism& phi) {
  const std::size_t n = phi.dimension();
  std::vector<TriangularAutomorphism> factors;
  for (std::size_t i = 1; i <= n; ++i) {
    for (const auto& [alpha, c] : phi.tail(i).terms()) {
      factors.push_back(elementary_shear(n, i, alpha, c));
    }
    if (phi.lambda(i) != 1) factors.push_back(elementary_scaling(n, i, phi.lambda(i)));
  }
  return factors;
}

TriangularAutomorphism compose_all(std::span<const TriangularAutomorphism> factors,
                                   std::size_t n) {
  TriangularAutomorphism result = TriangularAutomorphism::identity(n);
  for (const auto& f : factors) result = compose(result, f);
  return result;
}

long random_nonzero(Rng& rng, long bound) {
  if (bound < 1) bound = 1;
  std::uniform_int_distribution<long> pick(1, 2 * bound);
  const long v = pick(rng);
  return v <= bound ? v : bound - v;
}

TriangularAutomorphism random_triangular(const RandomTriangularOptions& options, Rng& rng) {
  const std::size_t n = options.n;
  if (n == 0 || options.m == 0) throw InputError("random_triangular: need n >= 1 and m >= 1");
  std::bernoulli_distribution keep(std::clamp(options.density, 0.0, 1.0));
  std::vector<Rational> lambdas;
  std::vector<Polynomial> tails;
  for (std::size_t i = 1; i <= n; ++i) {
    lambdas.emplace_back(options.unitriangular ? 1 : random_nonzero(rng, options.coeff_bound));
    Polynomial::Terms terms;
    for (const auto& alpha : monomials_up_to(i - 1, options.m)) {
      if (keep(rng)) terms.emplace(alpha, Rational(random_nonzero(rng, options.coeff_bound)));
    }
    tails.push_back(Polynomial::from_terms(std::move(terms), n));
  }
  return TriangularAutomorphism::make(n, std::move(lambdas), std::move(tails));
}

TriangularAutomorphism random_triangular(std::size_t n, std::size_t m, std::uint64_t seed,
                                         long coeff_bound, double density) {
  Rng rng(seed);
  return random_triangular(
      RandomTriangularOptions{.n = n, .m = m, .coeff_bound = coeff_bound, .density = density},
      rng);
}

}  // namespace triang
