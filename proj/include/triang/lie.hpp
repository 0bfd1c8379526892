#ifndef TRIANG_LIE_HPP
#define TRIANG_LIE_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "triang/derivation.hpp"

namespace triang {

// One coordinate of a derivation vector: the coefficient of monomial in g_i.
struct FrameKey {
  std::size_t coordinate;
  Monomial monomial;

  friend bool operator==(const FrameKey&, const FrameKey&) = default;
  friend std::strong_ordering operator<=>(const FrameKey&, const FrameKey&) = default;
};

// Ordered list of frame keys, grown lazily. Keys keep their column once added.
class MonomialFrame {
 public:
  std::size_t size() const noexcept { return keys_.size(); }
  const std::vector<FrameKey>& keys() const noexcept { return keys_; }
  std::optional<std::size_t> column(const FrameKey& key) const;

  // Appends every (coordinate, monomial) pair of d not yet present.
  void extend(const TriangularDerivation& d);

 private:
  std::vector<FrameKey> keys_;
  std::map<FrameKey, std::size_t> index_;
};

using RationalVector = std::vector<Rational>;

// Coordinates of d in the frame. Throws InputError if the frame lacks a key of d.
RationalVector vectorize(const TriangularDerivation& d, const MonomialFrame& frame);

/*
 * Incremental reduced row echelon form over the rationals.
 *
 * Rows are kept fully reduced: each pivot column is zero in every other row
 * and the pivot entry is 1. Among the nonzero entries of a new residual the
 * pivot is the one with the smallest |numerator * denominator|, ties going to
 * the lowest column.
 */
class EchelonBasis {
 public:
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t width() const noexcept { return width_; }
  const std::vector<RationalVector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  // Zero-pads every row to the new width.
  void widen(std::size_t width);

  // v minus its projection onto the row space along the pivots.
  RationalVector reduce(RationalVector v) const;
  bool contains(const RationalVector& v) const;
  // Returns true and extends the basis if v is independent of the rows.
  bool insert(RationalVector v);

 private:
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> pivots_;
  std::size_t width_ = 0;
};

/*
 * Linearly independent derivations spanning a subspace, with the frame and
 * reduced matrix used to test membership. A LieBasis returned by
 * lie_closure is closed under the bracket.
 */
class LieBasis {
 public:
  explicit LieBasis(std::size_t n) : n_(n) {}

  std::size_t dimension() const noexcept { return elements_.size(); }
  std::size_t ambient_n() const noexcept { return n_; }
  const std::vector<TriangularDerivation>& elements() const noexcept { return elements_; }
  const MonomialFrame& frame() const noexcept { return frame_; }
  const EchelonBasis& reduced_matrix() const noexcept { return echelon_; }

  bool contains(const TriangularDerivation& d) const;
  // Adds d if it is independent of the current elements; grows the frame.
  bool insert(const TriangularDerivation& d);
  bool is_bracket_closed() const;

 private:
  std::size_t n_;
  std::vector<TriangularDerivation> elements_;
  MonomialFrame frame_;
  EchelonBasis echelon_;
};

inline constexpr std::size_t kDefaultClosureCap = 50;

// Bracket-saturation of the span of generators. Each round brackets the
// elements added in the previous round against everything known. Throws
// PropertyViolation if more than `cap` rounds are needed.
LieBasis lie_closure(const std::vector<TriangularDerivation>& generators,
                     std::size_t cap = kDefaultClosureCap);

// Dimensions of L, [L,L], [L,[L,L]], ... ending with 0. Throws
// PropertyViolation if the series stalls above 0 and InputError if the
// basis is not bracket-closed.
std::vector<std::size_t> lower_central_series(const LieBasis& basis);
// Dimensions of L, [L,L], [[L,L],[L,L]], ... ending with 0.
std::vector<std::size_t> derived_series(const LieBasis& basis);

// Number of steps to reach 0, i.e. series.size() - 1.
inline std::size_t series_length(const std::vector<std::size_t>& series) {
  return series.empty() ? 0 : series.size() - 1;
}

}  // namespace triang

#endif  // TRIANG_LIE_HPP
