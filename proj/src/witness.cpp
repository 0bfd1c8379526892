#include "triang/witness.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "triang/errors.hpp"

namespace triang {

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  // splitmix64 finalizer over the pair
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// --------------------------------------------------------------- GroupWord

GroupWord::GroupWord(std::size_t n, GeneratorTable generators, std::vector<Letter> letters)
    : n_(n), generators_(std::move(generators)), letters_(std::move(letters)) {
  if (n_ == 0) throw InputError("GroupWord: dimension must be at least 1");
  for (const auto& [label, g] : generators_) {
    if (g.dimension() != n_) {
      throw InputError("GroupWord: generator " + label + " has dimension " +
                       std::to_string(g.dimension()) + ", expected " + std::to_string(n_));
    }
  }
  for (const auto& letter : letters_) {
    if (!generators_.contains(letter.label)) {
      throw InputError("GroupWord: unknown generator '" + letter.label + "'");
    }
    if (letter.exponent != 1 && letter.exponent != -1) {
      throw InputError("GroupWord: exponent must be +1 or -1");
    }
  }
}

GroupWord operator*(const GroupWord& u, const GroupWord& v) {
  if (u.n_ != v.n_) throw InputError("GroupWord: cannot concatenate words of different dimension");
  GeneratorTable table = u.generators_;
  for (const auto& [label, g] : v.generators_) {
    auto [it, inserted] = table.try_emplace(label, g);
    if (!inserted && !(it->second == g)) {
      throw InputError("GroupWord: label " + label + " names different generators");
    }
  }
  std::vector<Letter> letters = u.letters_;
  letters.insert(letters.end(), v.letters_.begin(), v.letters_.end());
  return GroupWord(u.n_, std::move(table), std::move(letters));
}

TriangularAutomorphism evaluate(const GroupWord& word) {
  std::map<std::string, TriangularAutomorphism> inverses;
  TriangularAutomorphism result = TriangularAutomorphism::identity(word.dimension());
  for (const auto& letter : word.letters()) {
    const auto& g = word.generators().at(letter.label);
    if (letter.exponent == 1) {
      result = compose(result, g);
    } else {
      auto it = inverses.find(letter.label);
      if (it == inverses.end()) it = inverses.emplace(letter.label, invert(g)).first;
      result = compose(result, it->second);
    }
  }
  return result;
}

std::string to_string(const GroupWord& word) {
  if (word.letters().empty()) return "1";
  std::string out;
  for (const auto& letter : word.letters()) {
    if (!out.empty()) out += ' ';
    out += letter.label;
    if (letter.exponent == -1) out += "^-1";
  }
  return out;
}

// ------------------------------------------------------------- degree_fuzz

std::size_t degree_bound(std::size_t n, std::size_t m) {
  std::size_t bound = 1;
  for (std::size_t i = 1; i < n; ++i) bound *= m;
  return bound;
}

FuzzReport degree_fuzz(const FuzzOptions& options) {
  if (options.n == 0 || options.m == 0 || options.max_word_len == 0 || options.trials == 0) {
    throw InputError("degree_fuzz: n, m, word length and trials must be positive");
  }
  std::vector<std::string> fixed_labels;
  if (options.generators) {
    if (options.generators->empty()) throw InputError("degree_fuzz: empty generator table");
    const DegreeClass cls{options.n, options.m};
    for (const auto& [label, g] : *options.generators) {
      if (!cls.contains(g)) {
        throw InputError("degree_fuzz: generator " + label + " is not in T(" +
                         std::to_string(options.m) + ") of dimension " +
                         std::to_string(options.n));
      }
      fixed_labels.push_back(label);
    }
  }

  FuzzReport report;
  report.n = options.n;
  report.m = options.m;
  report.trials = options.trials;
  report.max_word_len = options.max_word_len;
  report.bound = degree_bound(options.n, options.m);

  const RandomTriangularOptions sample{.n = options.n,
                                       .m = options.m,
                                       .coeff_bound = options.coeff_bound,
                                       .density = options.density};
  for (std::size_t t = 0; t < options.trials; ++t) {
    Rng rng(trial_seed(options.seed, t));
    std::uniform_int_distribution<std::size_t> pick_len(1, options.max_word_len);
    std::bernoulli_distribution inverse(0.5);
    const std::size_t len = pick_len(rng);

    GeneratorTable table;
    std::vector<Letter> letters;
    if (options.generators) {
      table = *options.generators;
      std::uniform_int_distribution<std::size_t> pick(0, fixed_labels.size() - 1);
      for (std::size_t k = 0; k < len; ++k) {
        const auto& label = fixed_labels[pick(rng)];
        letters.push_back({label, inverse(rng) ? -1 : 1});
      }
    } else {
      for (std::size_t k = 0; k < len; ++k) {
        std::string label = "g" + std::to_string(k + 1);
        table.emplace(label, random_triangular(sample, rng));
        letters.push_back({std::move(label), inverse(rng) ? -1 : 1});
      }
    }
    GroupWord word(options.n, std::move(table), std::move(letters));
    const std::size_t d = degree(evaluate(word));
    if (d > report.bound) {
      throw PropertyViolation("degree_fuzz: word " + to_string(word) + " (trial " +
                              std::to_string(t) + ") has degree " + std::to_string(d) +
                              " > m^(n-1) = " + std::to_string(report.bound));
    }
    if (!report.witness || d > report.max_degree) {
      report.max_degree = d;
      report.witness = std::move(word);
    }
  }
  return report;
}

// ------------------------------------------------------ derived_depth_test

TriangularAutomorphism iterated_commutator(const DepthOptions& options, std::size_t depth,
                                           Rng& rng) {
  if (depth == 0) {
    return random_triangular(RandomTriangularOptions{.n = options.n,
                                                     .m = options.m,
                                                     .coeff_bound = options.coeff_bound,
                                                     .density = options.density},
                             rng);
  }
  auto left = iterated_commutator(options, depth - 1, rng);
  auto right = iterated_commutator(options, depth - 1, rng);
  return commutator(left, right);
}

DepthReport derived_depth_test(const DepthOptions& options) {
  if (options.n == 0 || options.depth == 0 || options.depth > options.n + 1) {
    throw InputError("derived_depth_test: need 1 <= depth <= n + 1");
  }
  DepthReport report;
  report.n = options.n;
  report.depth = options.depth;
  report.trials = options.trials;
  for (std::size_t t = 0; t < options.trials; ++t) {
    Rng rng(trial_seed(options.seed, t));
    const auto c = iterated_commutator(options, options.depth, rng);
    report.max_degree = std::max(report.max_degree, degree(c));
    if (!is_unitriangular(c)) {
      throw PropertyViolation("derived_depth_test: depth-" + std::to_string(options.depth) +
                              " commutator (trial " + std::to_string(t) +
                              ") is not unitriangular");
    }
    ++report.unitriangular;
    if (!fixes_prefix(c, options.depth - 1)) {
      throw PropertyViolation("derived_depth_test: depth-" + std::to_string(options.depth) +
                              " commutator (trial " + std::to_string(t) + ") moves one of x1..x" +
                              std::to_string(options.depth - 1));
    }
    ++report.prefix_fixed;
    if (is_identity(c)) ++report.identity;
  }
  if (options.depth == options.n + 1 && report.identity != report.trials) {
    throw PropertyViolation("derived_depth_test: depth n+1 produced a non-identity element");
  }
  report.passed = true;
  return report;
}

// ----------------------------------------------- unipotent_generation_test

UnipotentReport unipotent_generation_test(const std::vector<TriangularDerivation>& derivations,
                                          const UnipotentOptions& options) {
  if (derivations.empty()) throw InputError("unipotent_generation_test: no derivations");
  const std::size_t n = derivations.front().dimension();
  for (const auto& d : derivations) {
    if (d.dimension() != n) throw InputError("unipotent_generation_test: mixed dimensions");
  }
  UnipotentReport report;
  report.trials = options.trials;
  report.generators = derivations.size();
  for (std::size_t t = 0; t < options.trials; ++t) {
    Rng rng(trial_seed(options.seed, t));
    std::uniform_int_distribution<std::size_t> pick_len(0, options.max_word_len);
    std::uniform_int_distribution<std::size_t> pick_gen(0, derivations.size() - 1);
    std::uniform_int_distribution<long> numerator(-5, 5);
    std::uniform_int_distribution<long> denominator(1, 4);

    TriangularAutomorphism product = TriangularAutomorphism::identity(n);
    const std::size_t len = pick_len(rng);
    for (std::size_t k = 0; k < len; ++k) {
      const auto& d = derivations[pick_gen(rng)];
      const long p = numerator(rng);
      const long q = denominator(rng);
      Rational s{mpz_class(p), mpz_class(q)};
      s.canonicalize();
      product = compose(product, exp(d, s));
    }
    if (!is_unitriangular(product)) {
      throw PropertyViolation("unipotent_generation_test: product of exponentials (trial " +
                              std::to_string(t) + ") is not unitriangular");
    }
    ++report.unitriangular;
    report.max_degree = std::max(report.max_degree, degree(product));
  }
  report.passed = true;
  return report;
}

// --------------------------------------------- nonconnected_counterexample

TriangularAutomorphism reflection_generator(const Rational& a) {
  return TriangularAutomorphism::make(
      2, {Rational(-1), Rational(1)},
      {Polynomial(Rational(0), 2), Polynomial(Monomial::variable(1), a, 2)});
}

CounterexampleReport nonconnected_counterexample(const Rational& a, const Rational& b,
                                                 std::size_t max_word_len) {
  if (a == b) throw InputError("counterexample: a and b must differ");
  const Rational spacing = a - b;
  const std::array<TriangularAutomorphism, 2> gens{reflection_generator(a),
                                                   reflection_generator(b)};
  const Monomial y1 = Monomial::variable(1);

  CounterexampleReport report;
  report.a = a;
  report.b = b;
  report.max_word_len = max_word_len;
  report.all_in_lattice = true;
  report.strictly_increasing = true;

  std::set<mpz_class> ks;
  // Reduced words of the current length, keyed by last letter with their values.
  struct Frontier {
    int last;
    TriangularAutomorphism value;
  };
  std::vector<Frontier> frontier;

  auto record = [&](const TriangularAutomorphism& g, LengthCount& count) {
    if (g.lambda(1) * g.lambda(2) != 1) return;
    ++count.determinant_one;
    const Polynomial& t2 = g.tail(2);
    const bool shape = g.lambda(1) == 1 && g.lambda(2) == 1 && g.tail(1).is_zero() &&
                       t2.term_count() <= 1 && (t2.is_zero() || t2.terms().begin()->first == y1);
    const Rational k = t2.coefficient(y1) / spacing;
    if (!shape || k.get_den() != 1) {
      report.all_in_lattice = false;
      throw PropertyViolation("counterexample: determinant-1 element (" + to_string(g.tail(2)) +
                              ") is not of the form (1, k(a-b); 0, 1)");
    }
    ks.insert(k.get_num());
  };

  for (std::size_t len = 0; len <= max_word_len; ++len) {
    LengthCount count;
    count.length = len;
    if (len == 0) {
      frontier.push_back({-1, TriangularAutomorphism::identity(2)});
    } else {
      std::vector<Frontier> next;
      for (const auto& word : frontier) {
        for (int letter = 0; letter < 2; ++letter) {
          if (letter == word.last) continue;
          next.push_back({letter, compose(word.value, gens[letter])});
        }
      }
      frontier = std::move(next);
    }
    count.words = frontier.size();
    for (const auto& word : frontier) record(word.value, count);
    count.k_values.assign(ks.begin(), ks.end());

    if (len >= 1) {
      const std::size_t before = report.lengths.back().k_values.size();
      if (len % 2 == 0 && count.k_values.size() <= before) report.strictly_increasing = false;
    }
    report.lengths.push_back(std::move(count));
  }
  if (!report.strictly_increasing) {
    throw PropertyViolation("counterexample: determinant-1 set stopped growing");
  }
  return report;
}

}  // namespace triang
