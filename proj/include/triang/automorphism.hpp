#ifndef TRIANG_AUTOMORPHISM_HPP
#define TRIANG_AUTOMORPHISM_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "triang/poly.hpp"

namespace triang {

using Rng = std::mt19937_64;

/*
 * Triangular automorphism (f1, ..., fn) of affine n-space with
 *
 *     f_i = lambda_i * x_i + h_i,   lambda_i != 0,   h_i in K[x1, ..., x_{i-1}],
 *
 * and h_1 a constant. Coordinates are indexed from 1. The tuple lists the
 * images of the variables, so an automorphism is also a polynomial map
 * p -> (f1(p), ..., fn(p)).
 */
class TriangularAutomorphism {
 public:
  // Throws InputError on a zero lambda or a tail that mentions x_j, j >= i.
  static TriangularAutomorphism make(std::size_t n, std::vector<Rational> lambdas,
                                     std::vector<Polynomial> tails);
  static TriangularAutomorphism identity(std::size_t n);

  std::size_t dimension() const noexcept { return lambdas_.size(); }
  const Rational& lambda(std::size_t i) const { return lambdas_.at(i - 1); }
  const Polynomial& tail(std::size_t i) const { return tails_.at(i - 1); }
  const Polynomial& coordinate(std::size_t i) const { return coords_.at(i - 1); }
  const std::vector<Polynomial>& coordinates() const noexcept { return coords_; }

  friend bool operator==(const TriangularAutomorphism& a,
                         const TriangularAutomorphism& b) {
    return a.lambdas_ == b.lambdas_ && a.tails_ == b.tails_;
  }

 private:
  TriangularAutomorphism() = default;

  std::vector<Rational> lambdas_;
  std::vector<Polynomial> tails_;
  std::vector<Polynomial> coords_;
};

// The class T(m): triangular automorphisms of A^n with all deg f_i <= m.
struct DegreeClass {
  std::size_t n;
  std::size_t m;

  bool contains(const TriangularAutomorphism& phi) const;
};

// compose(outer, inner) substitutes the coordinates of inner into those of
// outer: coordinate j is outer_j(inner_1, ..., inner_n). As point maps this
// is outer after inner.
TriangularAutomorphism compose(const TriangularAutomorphism& outer,
                               const TriangularAutomorphism& inner);

TriangularAutomorphism invert(const TriangularAutomorphism& phi);

// phi^k for any integer k; negative powers go through invert.
TriangularAutomorphism power(const TriangularAutomorphism& phi, long k);

// max_i deg f_i, always >= 1.
std::size_t degree(const TriangularAutomorphism& phi);

// phi * psi * phi^-1 * psi^-1
TriangularAutomorphism commutator(const TriangularAutomorphism& phi,
                                  const TriangularAutomorphism& psi);

bool is_unitriangular(const TriangularAutomorphism& phi);
bool is_identity(const TriangularAutomorphism& phi);
// f_i = x_i for every i <= s.
bool fixes_prefix(const TriangularAutomorphism& phi, std::size_t s);

// (x1, ..., lambda * x_i, ..., xn)
TriangularAutomorphism elementary_scaling(std::size_t n, std::size_t i,
                                          const Rational& lambda);
// (x1, ..., x_i + c * x^alpha, ..., xn), alpha supported on x1..x_{i-1}.
TriangularAutomorphism elementary_shear(std::size_t n, std::size_t i,
                                        const Monomial& alpha, const Rational& c);

/*
 * Writes phi as an ordered product of elementary factors, outermost first,
 * so that folding compose over the list reproduces phi.
 *
 * phi = tau_1 . tau_2 . ... . tau_n where tau_i replaces only x_i by f_i;
 * each tau_i splits further into one shear per tail monomial (in term
 * order) followed by the scaling x_i -> lambda_i x_i. Scalings with
 * lambda_i = 1 are omitted, so the identity factors into the empty list.
 */
std::vector<TriangularAutomorphism> elementary_factorization(
    const TriangularAutomorphism& phi);

TriangularAutomorphism compose_all(std::span<const TriangularAutomorphism> factors,
                                   std::size_t n);

struct RandomTriangularOptions {
  std::size_t n = 3;
  std::size_t m = 2;
  long coeff_bound = 3;
  double density = 0.5;
  bool unitriangular = false;
};

// Random element of T(m). Each candidate tail monomial of degree <= m is kept
// with probability `density`, with a uniform nonzero integer coefficient in
// [-coeff_bound, coeff_bound]; lambdas are drawn from the same range.
TriangularAutomorphism random_triangular(const RandomTriangularOptions& options, Rng& rng);
TriangularAutomorphism random_triangular(std::size_t n, std::size_t m, std::uint64_t seed,
                                         long coeff_bound = 3, double density = 0.5);

// Uniform nonzero integer in [-bound, bound].
long random_nonzero(Rng& rng, long bound);

}  // namespace triang

#endif  // TRIANG_AUTOMORPHISM_HPP
