#ifndef TRIANG_WITNESS_HPP
#define TRIANG_WITNESS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "triang/automorphism.hpp"
#include "triang/derivation.hpp"

namespace triang {

// Independent, reproducible seed for trial `trial` of a run seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

struct Letter {
  std::string label;
  int exponent = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

using GeneratorTable = std::map<std::string, TriangularAutomorphism>;

/*
 * Formal word over labeled generators and their inverses. Evaluation composes
 * the letters in order, the first letter outermost; the empty word is the
 * identity of A^n.
 */
class GroupWord {
 public:
  // Throws InputError on unresolved labels, mixed dimensions or exponents other than +-1.
  GroupWord(std::size_t n, GeneratorTable generators, std::vector<Letter> letters = {});

  std::size_t dimension() const noexcept { return n_; }
  std::size_t length() const noexcept { return letters_.size(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  const GeneratorTable& generators() const noexcept { return generators_; }

  // Concatenation; shared labels must name the same generator.
  friend GroupWord operator*(const GroupWord& u, const GroupWord& v);

 private:
  std::size_t n_;
  GeneratorTable generators_;
  std::vector<Letter> letters_;
};

TriangularAutomorphism evaluate(const GroupWord& word);
// "g1 g2^-1 g1", or "1" for the empty word.
std::string to_string(const GroupWord& word);

// ---------------------------------------------------------- degree fuzzing

struct FuzzOptions {
  std::size_t n = 3;
  std::size_t m = 2;
  std::size_t max_word_len = 8;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  long coeff_bound = 2;
  double density = 0.5;
  // Words over these generators instead of fresh random elements of T(m).
  std::optional<GeneratorTable> generators;
};

struct FuzzReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t trials = 0;
  std::size_t max_word_len = 0;
  std::size_t max_degree = 0;
  std::size_t bound = 0;  // m^(n-1)
  std::optional<GroupWord> witness;  // first word attaining max_degree
};

// m^(n-1)
std::size_t degree_bound(std::size_t n, std::size_t m);

// Evaluates random words of length 1..max_word_len in elements of T(m) and
// their inverses. Throws PropertyViolation if some word leaves T(m^(n-1)).
FuzzReport degree_fuzz(const FuzzOptions& options);

// ------------------------------------------------ iterated commutator depth

struct DepthOptions {
  std::size_t n = 3;
  std::size_t depth = 1;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  std::size_t m = 2;
  long coeff_bound = 2;
  double density = 0.5;
};

struct DepthReport {
  std::size_t n = 0;
  std::size_t depth = 0;
  std::size_t trials = 0;
  std::size_t unitriangular = 0;
  std::size_t prefix_fixed = 0;  // fixes x1..x_{depth-1}
  std::size_t identity = 0;
  std::size_t max_degree = 0;
  bool passed = false;
};

// Depth-d iterated commutator of 2^d random triangular automorphisms.
TriangularAutomorphism iterated_commutator(const DepthOptions& options, std::size_t depth,
                                           Rng& rng);

// Each sample must be unitriangular and fix x1..x_{depth-1}; depth n+1 must
// give the identity. Throws PropertyViolation on the first failure.
DepthReport derived_depth_test(const DepthOptions& options);

// ------------------------------------------------------------- unipotency

struct UnipotentOptions {
  std::size_t max_word_len = 6;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
};

struct UnipotentReport {
  std::size_t trials = 0;
  std::size_t generators = 0;
  std::size_t unitriangular = 0;
  std::size_t max_degree = 0;
  bool passed = false;
};

// Products exp(s_1 D_{i_1}) ... exp(s_L D_{i_L}) with random rational s_j.
// Throws PropertyViolation if a product is not unitriangular.
UnipotentReport unipotent_generation_test(const std::vector<TriangularDerivation>& derivations,
                                          const UnipotentOptions& options);

// -------------------------------------------- non-connected counterexample

struct LengthCount {
  std::size_t length = 0;
  std::size_t words = 0;            // reduced words of exactly this length
  std::size_t determinant_one = 0;  // of those, with determinant 1
  std::vector<mpz_class> k_values;  // distinct k over all lengths <= length, ascending
};

struct CounterexampleReport {
  Rational a;
  Rational b;
  std::size_t max_word_len = 0;
  std::vector<LengthCount> lengths;
  bool all_in_lattice = false;       // every determinant-1 element is (1, k(a-b); 0, 1)
  bool strictly_increasing = false;  // distinct count grows at every even length
};

// The involutions A = (1 a; 0 -1) and B = (1 b; 0 -1) as triangular
// automorphisms of A^2 in reversed variables: (-x1, x2 + a x1).
TriangularAutomorphism reflection_generator(const Rational& a);

// Enumerates all reduced words in A and B (no letter repeated back to back)
// up to max_word_len. Throws InputError if a == b and PropertyViolation if
// a determinant-1 element falls outside {(1, k(a-b); 0, 1)}.
CounterexampleReport nonconnected_counterexample(const Rational& a, const Rational& b,
                                                 std::size_t max_word_len);

}  // namespace triang

#endif  // TRIANG_WITNESS_HPP
