#include "triang/report.hpp"

namespace triang {

using nlohmann::json;

namespace {

json integer(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

}  // namespace

json to_json(const TriangularAutomorphism& phi) { return format_automorphism(phi); }

json to_json(const TriangularDerivation& d) { return format_derivation(d); }

json to_json(const GroupWord& word) {
  json generators = json::object();
  for (const auto& [label, g] : word.generators()) generators[label] = format_automorphism(g);
  return {{"word", to_string(word)},
          {"length", word.length()},
          {"generators", std::move(generators)},
          {"value", format_automorphism(evaluate(word))}};
}

json to_json(const FuzzReport& report) {
  return {{"n", report.n},
          {"m", report.m},
          {"trials", report.trials},
          {"max_word_len", report.max_word_len},
          {"max_degree", report.max_degree},
          {"bound", report.bound},
          {"witness", report.witness ? to_json(*report.witness) : json(nullptr)}};
}

json to_json(const DepthReport& report) {
  return {{"n", report.n},
          {"depth", report.depth},
          {"trials", report.trials},
          {"unitriangular", report.unitriangular},
          {"prefix_fixed", report.prefix_fixed},
          {"identity", report.identity},
          {"max_degree", report.max_degree},
          {"passed", report.passed}};
}

json to_json(const UnipotentReport& report) {
  return {{"trials", report.trials},
          {"generators", report.generators},
          {"unitriangular", report.unitriangular},
          {"max_degree", report.max_degree},
          {"passed", report.passed}};
}

json to_json(const CounterexampleReport& report) {
  json lengths = json::array();
  for (const auto& count : report.lengths) {
    json ks = json::array();
    for (const auto& k : count.k_values) ks.push_back(integer(k));
    lengths.push_back({{"length", count.length},
                       {"words", count.words},
                       {"determinant_one", count.determinant_one},
                       {"distinct", count.k_values.size()},
                       {"k_values", std::move(ks)}});
  }
  return {{"a", to_string(report.a)},
          {"b", to_string(report.b)},
          {"max_word_len", report.max_word_len},
          {"lengths", std::move(lengths)},
          {"all_in_lattice", report.all_in_lattice},
          {"strictly_increasing", report.strictly_increasing}};
}

json lie_report(const LieBasis& basis) {
  json elements = json::array();
  for (const auto& d : basis.elements()) elements.push_back(format_derivation(d));
  const auto lcs = lower_central_series(basis);
  const auto ds = derived_series(basis);
  return {{"dimension", basis.dimension()},
          {"basis", std::move(elements)},
          {"lower_central_series", lcs},
          {"derived_series", ds},
          {"nilpotency_class", series_length(lcs)},
          {"derived_length", series_length(ds)}};
}

}  // namespace triang
