#ifndef TRIANG_POLY_HPP
#define TRIANG_POLY_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace triang {

using Rational = mpq_class;

/*
 * Monomial x1^e1 * ... * xn^en.
 *
 * Exponents are stored with trailing zeros trimmed, so two monomials that
 * agree after zero padding compare equal regardless of the ambient
 * dimension they were built in. Variable indices are 1-based throughout
 * the public interface.
 *
 * Ordering is graded lexicographic with x1 < x2 < ... < xn: total degree
 * first, then the exponent of the highest-index variable where the two
 * monomials differ.
 */
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents);

  static Monomial variable(std::size_t index, std::uint32_t power = 1);

  std::uint32_t exponent(std::size_t index) const noexcept;
  std::span<const std::uint32_t> exponents() const noexcept { return exps_; }
  std::size_t degree() const noexcept;
  // Largest index with a nonzero exponent, 0 for the constant monomial.
  std::size_t max_variable() const noexcept { return exps_.size(); }
  bool is_constant() const noexcept { return exps_.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<std::uint32_t> exps_;
};

// All monomials in x1..x_vars of total degree <= max_degree, ascending.
std::vector<Monomial> monomials_up_to(std::size_t vars, std::size_t max_degree);

/*
 * Total degree of a polynomial. The zero polynomial carries a sentinel that
 * orders below every finite degree and satisfies every upper bound.
 */
class Degree {
 public:
  constexpr explicit Degree(std::size_t value) : value_(value) {}
  static constexpr Degree of_zero() { return Degree(); }

  constexpr bool is_zero_polynomial() const noexcept { return !value_.has_value(); }
  // Throws std::logic_error on the sentinel.
  std::size_t value() const;
  constexpr bool at_most(std::size_t bound) const noexcept {
    return !value_ || *value_ <= bound;
  }

  friend constexpr bool operator==(const Degree&, const Degree&) = default;
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (!a.value_ || !b.value_) return a.value_.has_value() <=> b.value_.has_value();
    return *a.value_ <=> *b.value_;
  }

  std::string to_string() const;

 private:
  constexpr Degree() = default;
  std::optional<std::size_t> value_;
};

/*
 * Sparse multivariate polynomial with exact rational coefficients.
 *
 * Canonical form: no stored coefficient is zero. The ambient dimension is
 * metadata only; equality compares terms. Binary operations promote to the
 * larger ambient dimension. Values are immutable after construction.
 */
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(const Rational& constant, std::size_t ambient_n = 0);
  Polynomial(const Monomial& monomial, const Rational& coefficient,
             std::size_t ambient_n = 0);
  // Drops zero coefficients; ambient dimension grows to cover every term.
  static Polynomial from_terms(Terms terms, std::size_t ambient_n = 0);
  static Polynomial variable(std::size_t index, std::size_t ambient_n = 0);

  const Terms& terms() const noexcept { return terms_; }
  std::size_t ambient_n() const noexcept { return n_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial()); }

  Degree total_degree() const noexcept;
  std::size_t max_variable() const noexcept;

  Polynomial with_ambient(std::size_t n) const;
  Polynomial pow(unsigned exponent) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend Polynomial operator/(const Polynomial& p, const Rational& c);

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    return p.terms_ == q.terms_;
  }

 private:
  Terms terms_;
  std::size_t n_ = 0;
};

inline Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }
inline Degree total_degree(const Polynomial& p) { return p.total_degree(); }
inline std::size_t max_variable(const Polynomial& p) { return p.max_variable(); }

// Replaces x_i by images[i-1] and expands. Requires images.size() >= p.ambient_n().
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images);

// Formal partial derivative d/dx_index, 1 <= index <= p.ambient_n().
Polynomial partial(const Polynomial& p, std::size_t index);

// Canonical text: ascending graded lex order, explicit '*', '^' only for
// exponents >= 2, reduced fractions, "0" for the zero polynomial.
std::string to_string(const Polynomial& p);
std::string to_string(const Monomial& m);
std::string to_string(const Rational& r);

}  // namespace triang

#endif  // TRIANG_POLY_HPP
