#include "triang/derivation.hpp"

#include <algorithm>
#include <string>

#include "triang/errors.hpp"

namespace triang {

TriangularDerivation TriangularDerivation::make(std::size_t n, std::vector<Polynomial> coeffs) {
  if (n == 0) throw InputError("dimension must be at least 1");
  if (coeffs.size() != n) {
    throw InputError("expected " + std::to_string(n) + " coefficients, got " +
                     std::to_string(coeffs.size()));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    Polynomial& g = coeffs[i - 1];
    if (g.max_variable() >= i) {
      throw InputError("coefficient of d/dx" + std::to_string(i) + " (" + to_string(g) +
                       ") mentions x" + std::to_string(g.max_variable()) +
                       "; only x1..x" + std::to_string(i - 1) + " are allowed");
    }
    if (g.ambient_n() > n) {
      throw InputError("coefficient of d/dx" + std::to_string(i) + " lives in " +
                       std::to_string(g.ambient_n()) + " variables, dimension is " +
                       std::to_string(n));
    }
    g = g.with_ambient(n);
  }
  TriangularDerivation d;
  d.coeffs_ = std::move(coeffs);
  return d;
}

TriangularDerivation TriangularDerivation::zero(std::size_t n) {
  return make(n, std::vector<Polynomial>(n, Polynomial(Rational(0), n)));
}

TriangularDerivation TriangularDerivation::single(std::size_t n, std::size_t i,
                                                  const Polynomial& g) {
  std::vector<Polynomial> coeffs(n, Polynomial(Rational(0), n));
  coeffs.at(i - 1) = g;
  return make(n, std::move(coeffs));
}

bool TriangularDerivation::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Polynomial& g) { return g.is_zero(); });
}

TriangularDerivation TriangularDerivation::operator-() const {
  TriangularDerivation d = *this;
  for (auto& g : d.coeffs_) g = -g;
  return d;
}

TriangularDerivation operator+(const TriangularDerivation& a, const TriangularDerivation& b) {
  if (a.dimension() != b.dimension()) throw InputError("derivation sum: dimension mismatch");
  TriangularDerivation d = a;
  for (std::size_t i = 0; i < d.coeffs_.size(); ++i) d.coeffs_[i] = d.coeffs_[i] + b.coeffs_[i];
  return d;
}

TriangularDerivation operator-(const TriangularDerivation& a, const TriangularDerivation& b) {
  return a + (-b);
}

TriangularDerivation operator*(const Rational& c, const TriangularDerivation& d) {
  TriangularDerivation r = d;
  for (auto& g : r.coeffs_) g = c * g;
  return r;
}

Polynomial apply(const TriangularDerivation& d, const Polynomial& p) {
  const std::size_t n = d.dimension();
  if (p.max_variable() > n) {
    throw InputError("apply: polynomial mentions x" + std::to_string(p.max_variable()) +
                     " but the derivation acts on " + std::to_string(n) + " variables");
  }
  const Polynomial q = p.with_ambient(n);
  Polynomial result(Rational(0), n);
  for (std::size_t i = 1; i <= n; ++i) {
    const Polynomial& g = d.coefficient(i);
    if (g.is_zero()) continue;
    const Polynomial dq = partial(q, i);
    if (!dq.is_zero()) result = result + g * dq;
  }
  return result;
}

TriangularDerivation bracket(const TriangularDerivation& d1, const TriangularDerivation& d2) {
  if (d1.dimension() != d2.dimension()) {
    throw InputError("bracket: dimension mismatch (" + std::to_string(d1.dimension()) +
                     " vs " + std::to_string(d2.dimension()) + ")");
  }
  const std::size_t n = d1.dimension();
  std::vector<Polynomial> coeffs;
  coeffs.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    coeffs.push_back(apply(d1, d2.coefficient(i)) - apply(d2, d1.coefficient(i)));
  }
  return TriangularDerivation::make(n, std::move(coeffs));
}

namespace {

std::size_t index_with_cap(const TriangularDerivation& d, Polynomial p, std::size_t cap) {
  std::size_t k = 0;
  while (!p.is_zero()) {
    if (++k > cap) {
      throw PropertyViolation("nilpotency index exceeds the safety cap " +
                              std::to_string(cap) +
                              "; a triangular derivation must be locally nilpotent");
    }
    p = apply(d, p);
  }
  return k;
}

// Actual nilpotency indices of x1..xn. The cap for x_i follows from
// D(x_i) = g_i in K[x1..x_{i-1}] and index(prod) <= 1 + deg * max index.
std::vector<std::size_t> variable_indices(const TriangularDerivation& d) {
  const std::size_t n = d.dimension();
  std::vector<std::size_t> nu;
  std::size_t max_earlier = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const Polynomial& g = d.coefficient(i);
    const std::size_t cap =
        g.is_zero() ? 1 : 2 + g.total_degree().value() * max_earlier;
    nu.push_back(index_with_cap(d, Polynomial::variable(i, n), cap));
    max_earlier = std::max(max_earlier, nu.back());
  }
  return nu;
}

}  // namespace

std::size_t nilpotency_index(const TriangularDerivation& d, const Polynomial& p) {
  if (p.is_zero()) return 0;
  const auto nu = variable_indices(d);
  const std::size_t top = *std::max_element(nu.begin(), nu.end());
  return index_with_cap(d, p, 1 + p.total_degree().value() * top);
}

Polynomial exp_apply(const TriangularDerivation& d, const Rational& s, const Polynomial& p) {
  const std::size_t n = std::max(d.dimension(), p.ambient_n());
  Polynomial result(Rational(0), n);
  Polynomial current = p;
  Rational factor = 1;  // s^k / k!
  const std::size_t cap = nilpotency_index(d, p);
  for (std::size_t k = 0; k < cap && !current.is_zero(); ++k) {
    result = result + factor * current;
    current = apply(d, current);
    factor = factor * s / Rational(static_cast<unsigned long>(k + 1));
  }
  return result;
}

TriangularAutomorphism exp(const TriangularDerivation& d, const Rational& s) {
  const std::size_t n = d.dimension();
  std::vector<Rational> lambdas;
  std::vector<Polynomial> tails;
  for (std::size_t i = 1; i <= n; ++i) {
    const Polynomial xi = Polynomial::variable(i, n);
    lambdas.emplace_back(1);
    tails.push_back(exp_apply(d, s, xi) - xi);
  }
  return TriangularAutomorphism::make(n, std::move(lambdas), std::move(tails));
}

TriangularDerivation random_derivation(const RandomDerivationOptions& options, Rng& rng) {
  const std::size_t n = options.n;
  if (n == 0) throw InputError("random_derivation: need n >= 1");
  std::bernoulli_distribution keep(std::clamp(options.density, 0.0, 1.0));
  std::vector<Polynomial> coeffs;
  for (std::size_t i = 1; i <= n; ++i) {
    Polynomial::Terms terms;
    for (const auto& alpha : monomials_up_to(i - 1, options.max_degree)) {
      if (keep(rng)) terms.emplace(alpha, Rational(random_nonzero(rng, options.coeff_bound)));
    }
    coeffs.push_back(Polynomial::from_terms(std::move(terms), n));
  }
  return TriangularDerivation::make(n, std::move(coeffs));
}

}  // namespace triang
