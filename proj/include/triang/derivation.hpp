#ifndef TRIANG_DERIVATION_HPP
#define TRIANG_DERIVATION_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "triang/automorphism.hpp"
#include "triang/poly.hpp"

namespace triang {

// D = g1 d/dx1 + ... + gn d/dxn with g1 constant and g_i in K[x1..x_{i-1}].
class TriangularDerivation {
 public:
  // Throws InputError if some g_i mentions x_j with j >= i.
  static TriangularDerivation make(std::size_t n, std::vector<Polynomial> coeffs);
  static TriangularDerivation zero(std::size_t n);
  // g d/dx_i
  static TriangularDerivation single(std::size_t n, std::size_t i, const Polynomial& g);

  std::size_t dimension() const noexcept { return coeffs_.size(); }
  const Polynomial& coefficient(std::size_t i) const { return coeffs_.at(i - 1); }
  const std::vector<Polynomial>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept;

  TriangularDerivation operator-() const;
  friend TriangularDerivation operator+(const TriangularDerivation& a,
                                        const TriangularDerivation& b);
  friend TriangularDerivation operator-(const TriangularDerivation& a,
                                        const TriangularDerivation& b);
  friend TriangularDerivation operator*(const Rational& c, const TriangularDerivation& d);

  friend bool operator==(const TriangularDerivation&, const TriangularDerivation&) = default;

 private:
  TriangularDerivation() = default;
  std::vector<Polynomial> coeffs_;
};

inline TriangularDerivation make_derivation(std::size_t n, std::vector<Polynomial> coeffs) {
  return TriangularDerivation::make(n, std::move(coeffs));
}

// D(p) = sum_i g_i * dp/dx_i
Polynomial apply(const TriangularDerivation& d, const Polynomial& p);

// [D1, D2] = D1 D2 - D2 D1; coefficient i is D1(g2_i) - D2(g1_i).
TriangularDerivation bracket(const TriangularDerivation& d1, const TriangularDerivation& d2);

// Least k with D^k(p) = 0 (0 for p = 0). Throws PropertyViolation if the
// iteration runs past 1 + deg(p) * max_i nilpotency_index(D, x_i).
std::size_t nilpotency_index(const TriangularDerivation& d, const Polynomial& p);

// exp(sD): coordinate i is sum_k s^k D^k(x_i) / k!, a finite sum.
TriangularAutomorphism exp(const TriangularDerivation& d, const Rational& s);

// sum_k s^k D^k(p) / k! for an arbitrary polynomial p.
Polynomial exp_apply(const TriangularDerivation& d, const Rational& s, const Polynomial& p);

struct RandomDerivationOptions {
  std::size_t n = 3;
  std::size_t max_degree = 2;
  long coeff_bound = 3;
  double density = 0.5;
};

TriangularDerivation random_derivation(const RandomDerivationOptions& options, Rng& rng);

}  // namespace triang

#endif  // TRIANG_DERIVATION_HPP
