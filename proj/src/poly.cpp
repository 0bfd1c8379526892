#include "triang/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "triang/errors.hpp"

namespace triang {

namespace {

void trim(std::vector<std::uint32_t>& exps) {
  while (!exps.empty() && exps.back() == 0) exps.pop_back();
}

void erase_zeros(Polynomial::Terms& terms) {
  std::erase_if(terms, [](const auto& kv) { return sgn(kv.second) == 0; });
}

}  // namespace

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) {
  trim(exps_);
}

Monomial Monomial::variable(std::size_t index, std::uint32_t power) {
  if (index == 0) throw InputError("variable index must be >= 1");
  std::vector<std::uint32_t> exps(index, 0);
  exps[index - 1] = power;
  return Monomial(std::move(exps));
}

std::uint32_t Monomial::exponent(std::size_t index) const noexcept {
  if (index == 0 || index > exps_.size()) return 0;
  return exps_[index - 1];
}

std::size_t Monomial::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::size_t{0});
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> exps(std::max(a.exps_.size(), b.exps_.size()), 0);
  for (std::size_t i = 0; i < a.exps_.size(); ++i) exps[i] += a.exps_[i];
  for (std::size_t i = 0; i < b.exps_.size(); ++i) exps[i] += b.exps_[i];
  return Monomial(std::move(exps));
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const std::size_t top = std::max(a.exps_.size(), b.exps_.size());
  for (std::size_t i = top; i >= 1; --i) {
    if (auto c = a.exponent(i) <=> b.exponent(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::vector<Monomial> monomials_up_to(std::size_t vars, std::size_t max_degree) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> exps(vars, 0);
  // Odometer over exponent vectors with bounded total degree.
  auto recurse = [&](auto&& self, std::size_t pos, std::size_t budget) -> void {
    if (pos == vars) {
      out.emplace_back(exps);
      return;
    }
    for (std::size_t e = 0; e <= budget; ++e) {
      exps[pos] = static_cast<std::uint32_t>(e);
      self(self, pos + 1, budget - e);
    }
    exps[pos] = 0;
  };
  recurse(recurse, 0, max_degree);
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------------ Degree

std::size_t Degree::value() const {
  if (!value_) throw std::logic_error("degree of the zero polynomial has no value");
  return *value_;
}

std::string Degree::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("-inf");
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& constant, std::size_t ambient_n) : n_(ambient_n) {
  if (sgn(constant) != 0) terms_.emplace(Monomial(), constant);
}

Polynomial::Polynomial(const Monomial& monomial, const Rational& coefficient,
                       std::size_t ambient_n)
    : n_(std::max(ambient_n, monomial.max_variable())) {
  if (sgn(coefficient) != 0) terms_.emplace(monomial, coefficient);
}

Polynomial Polynomial::from_terms(Terms terms, std::size_t ambient_n) {
  erase_zeros(terms);
  Polynomial p;
  p.terms_ = std::move(terms);
  p.n_ = std::max(ambient_n, p.max_variable());
  return p;
}

Polynomial Polynomial::variable(std::size_t index, std::size_t ambient_n) {
  return Polynomial(Monomial::variable(index), Rational(1), ambient_n);
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Degree Polynomial::total_degree() const noexcept {
  // Graded order: the last term has maximal degree.
  if (terms_.empty()) return Degree::of_zero();
  return Degree(terms_.rbegin()->first.degree());
}

std::size_t Polynomial::max_variable() const noexcept {
  std::size_t top = 0;
  for (const auto& [m, c] : terms_) top = std::max(top, m.max_variable());
  return top;
}

Polynomial Polynomial::with_ambient(std::size_t n) const {
  Polynomial p = *this;
  p.n_ = std::max(n, max_variable());
  return p;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(Rational(1), n_);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  Polynomial r = p.terms_.size() >= q.terms_.size() ? p : q;
  const Polynomial& other = p.terms_.size() >= q.terms_.size() ? q : p;
  for (const auto& [m, c] : other.terms_) {
    auto [it, inserted] = r.terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) r.terms_.erase(it);
    }
  }
  r.n_ = std::max(p.n_, q.n_);
  return r;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  Polynomial::Terms out;
  Rational prod;
  for (const auto& [mp, cp] : p.terms_) {
    for (const auto& [mq, cq] : q.terms_) {
      prod = cp * cq;
      auto [it, inserted] = out.try_emplace(mp * mq, prod);
      if (!inserted) it->second += prod;
    }
  }
  return Polynomial::from_terms(std::move(out), std::max(p.n_, q.n_));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  if (sgn(c) == 0) return Polynomial(Rational(0), p.n_);
  Polynomial r = p;
  for (auto& [m, coeff] : r.terms_) coeff *= c;
  return r;
}

Polynomial operator/(const Polynomial& p, const Rational& c) {
  if (sgn(c) == 0) throw InputError("division of a polynomial by zero");
  Polynomial r = p;
  for (auto& [m, coeff] : r.terms_) coeff /= c;
  return r;
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) {
  if (images.size() < p.ambient_n()) {
    throw InputError("substitute: " + std::to_string(images.size()) +
                     " images for a polynomial in " + std::to_string(p.ambient_n()) +
                     " variables");
  }
  std::size_t n = 0;
  for (const auto& img : images) n = std::max(n, img.ambient_n());

  // powers[i][e] = images[i]^e, filled on demand.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power_of = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) {
      cache.emplace_back(Rational(1), n);
      cache.push_back(images[i]);
    }
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };

  Polynomial result(Rational(0), n);
  for (const auto& [m, c] : p.terms()) {
    Polynomial term(c, n);
    const auto exps = m.exponents();
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] != 0) term = term * power_of(i, exps[i]);
    }
    result = result + term;
  }
  return result;
}

Polynomial partial(const Polynomial& p, std::size_t index) {
  if (index == 0 || index > std::max(p.ambient_n(), p.max_variable())) {
    throw InputError("partial: variable index " + std::to_string(index) +
                     " out of range 1.." + std::to_string(p.ambient_n()));
  }
  Polynomial::Terms out;
  for (const auto& [m, c] : p.terms()) {
    const std::uint32_t e = m.exponent(index);
    if (e == 0) continue;
    std::vector<std::uint32_t> exps(m.exponents().begin(), m.exponents().end());
    exps[index - 1] -= 1;
    out.emplace(Monomial(std::move(exps)), c * e);
  }
  return Polynomial::from_terms(std::move(out), p.ambient_n());
}

// ---------------------------------------------------------------- printing

std::string to_string(const Rational& r) {
  Rational canonical = r;
  canonical.canonicalize();
  return canonical.get_str();
}

std::string to_string(const Monomial& m) {
  std::string out;
  const auto exps = m.exponents();
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (exps[i] >= 2) out += '^' + std::to_string(exps[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = abs(c);
    if (m.is_constant()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += to_string(m);
    } else {
      out += to_string(magnitude) + '*' + to_string(m);
    }
  }
  return out;
}

}  // namespace triang
