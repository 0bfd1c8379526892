#include "triang/lie.hpp"

#include <string>

#include "triang/errors.hpp"

namespace triang {

// ----------------------------------------------------------- MonomialFrame

std::optional<std::size_t> MonomialFrame::column(const FrameKey& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void MonomialFrame::extend(const TriangularDerivation& d) {
  for (std::size_t i = 1; i <= d.dimension(); ++i) {
    for (const auto& [m, c] : d.coefficient(i).terms()) {
      FrameKey key{i, m};
      if (index_.try_emplace(key, keys_.size()).second) keys_.push_back(std::move(key));
    }
  }
}

RationalVector vectorize(const TriangularDerivation& d, const MonomialFrame& frame) {
  RationalVector v(frame.size(), Rational(0));
  for (std::size_t i = 1; i <= d.dimension(); ++i) {
    for (const auto& [m, c] : d.coefficient(i).terms()) {
      auto col = frame.column(FrameKey{i, m});
      if (!col) {
        throw InputError("vectorize: frame has no column for " + to_string(m) + " d/dx" +
                         std::to_string(i));
      }
      v[*col] = c;
    }
  }
  return v;
}

// ------------------------------------------------------------ EchelonBasis

namespace {

bool is_zero_vector(const RationalVector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

// axpy: v -= c * row
void subtract_multiple(RationalVector& v, const Rational& c, const RationalVector& row) {
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (sgn(row[j]) != 0) v[j] -= c * row[j];
  }
}

}  // namespace

void EchelonBasis::widen(std::size_t width) {
  if (width <= width_) return;
  for (auto& row : rows_) row.resize(width, Rational(0));
  width_ = width;
}

RationalVector EchelonBasis::reduce(RationalVector v) const {
  if (v.size() > width_) {
    throw InputError("EchelonBasis: vector of length " + std::to_string(v.size()) +
                     " is wider than the basis (" + std::to_string(width_) + ")");
  }
  v.resize(width_, Rational(0));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational c = v[pivots_[r]];
    if (sgn(c) != 0) subtract_multiple(v, c, rows_[r]);
  }
  return v;
}

bool EchelonBasis::contains(const RationalVector& v) const {
  return is_zero_vector(reduce(v));
}

bool EchelonBasis::insert(RationalVector v) {
  v = reduce(std::move(v));
  std::optional<std::size_t> pivot;
  mpz_class best;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (sgn(v[j]) == 0) continue;
    mpz_class size = abs(v[j].get_num()) * v[j].get_den();
    if (!pivot || size < best) {
      pivot = j;
      best = size;
    }
  }
  if (!pivot) return false;

  const Rational scale = 1 / v[*pivot];
  for (auto& x : v) x *= scale;
  for (auto& row : rows_) {
    const Rational c = row[*pivot];
    if (sgn(c) != 0) subtract_multiple(row, c, v);
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(*pivot);
  return true;
}

// ---------------------------------------------------------------- LieBasis

bool LieBasis::contains(const TriangularDerivation& d) const {
  if (d.dimension() != n_) return false;
  RationalVector v;
  try {
    v = vectorize(d, frame_);
  } catch (const InputError&) {
    // A coefficient outside the frame cannot lie in the span.
    return false;
  }
  return echelon_.contains(v);
}

bool LieBasis::insert(const TriangularDerivation& d) {
  if (d.dimension() != n_) {
    throw InputError("LieBasis: derivation in dimension " + std::to_string(d.dimension()) +
                     ", basis in dimension " + std::to_string(n_));
  }
  frame_.extend(d);
  echelon_.widen(frame_.size());
  if (!echelon_.insert(vectorize(d, frame_))) return false;
  elements_.push_back(d);
  return true;
}

bool LieBasis::is_bracket_closed() const {
  for (std::size_t a = 0; a < elements_.size(); ++a) {
    for (std::size_t b = a + 1; b < elements_.size(); ++b) {
      if (!contains(bracket(elements_[a], elements_[b]))) return false;
    }
  }
  return true;
}

LieBasis lie_closure(const std::vector<TriangularDerivation>& generators, std::size_t cap) {
  if (generators.empty()) throw InputError("lie_closure: no generators");
  const std::size_t n = generators.front().dimension();
  LieBasis basis(n);
  std::vector<std::size_t> fresh;
  for (const auto& g : generators) {
    if (g.dimension() != n) throw InputError("lie_closure: generators differ in dimension");
    if (basis.insert(g)) fresh.push_back(basis.dimension() - 1);
  }

  std::size_t rounds = 0;
  while (!fresh.empty()) {
    if (++rounds > cap) {
      throw PropertyViolation("lie_closure: no fixed point after " + std::to_string(cap) +
                              " rounds (dimension " + std::to_string(basis.dimension()) + ")");
    }
    const std::size_t known = basis.dimension();
    std::vector<bool> is_fresh(known, false);
    for (auto idx : fresh) is_fresh[idx] = true;

    std::vector<std::size_t> next;
    for (auto a : fresh) {
      for (std::size_t b = 0; b < known; ++b) {
        // (new, old) pairs, and each (new, new) pair once.
        if (is_fresh[b] && b <= a) continue;
        auto br = bracket(basis.elements()[a], basis.elements()[b]);
        if (!br.is_zero() && basis.insert(br)) next.push_back(basis.dimension() - 1);
      }
    }
    fresh = std::move(next);
  }
  return basis;
}

namespace {

// Independent elements spanning [left, right], expressed in the frame of L.
std::vector<TriangularDerivation> bracket_span(const LieBasis& whole,
                                               const std::vector<TriangularDerivation>& left,
                                               const std::vector<TriangularDerivation>& right) {
  EchelonBasis span;
  span.widen(whole.frame().size());
  std::vector<TriangularDerivation> out;
  for (const auto& x : left) {
    for (const auto& y : right) {
      auto br = bracket(x, y);
      if (br.is_zero()) continue;
      if (!whole.contains(br)) {
        throw InputError("series: basis is not closed under the bracket");
      }
      if (span.insert(vectorize(br, whole.frame()))) out.push_back(std::move(br));
    }
  }
  return out;
}

template <typename Step>
std::vector<std::size_t> descending_series(const LieBasis& basis, Step step, const char* name) {
  std::vector<std::size_t> dims{basis.dimension()};
  std::vector<TriangularDerivation> current = basis.elements();
  while (!current.empty()) {
    auto next = step(current);
    if (next.size() == current.size()) {
      throw PropertyViolation(std::string(name) + " stabilizes at dimension " +
                              std::to_string(next.size()) + " > 0");
    }
    dims.push_back(next.size());
    current = std::move(next);
  }
  return dims;
}

}  // namespace

std::vector<std::size_t> lower_central_series(const LieBasis& basis) {
  const auto& all = basis.elements();
  return descending_series(
      basis,
      [&](const std::vector<TriangularDerivation>& cur) { return bracket_span(basis, all, cur); },
      "lower central series");
}

std::vector<std::size_t> derived_series(const LieBasis& basis) {
  return descending_series(
      basis,
      [&](const std::vector<TriangularDerivation>& cur) { return bracket_span(basis, cur, cur); },
      "derived series");
}

}  // namespace triang
