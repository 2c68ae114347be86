#ifndef XC01_LOWER_BOUNDS_HPP
#define XC01_LOWER_BOUNDS_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "xc01/exact_geometry.hpp"

namespace xc01 {

/// Fixed-width bitset over the cells of a matrix (row-major).
class CellSet {
 public:
  static constexpr int kWords = 8;
  static constexpr int kCapacity = 64 * kWords;

  void set(int c) { w_[c >> 6] |= std::uint64_t{1} << (c & 63); }
  void reset(int c) { w_[c >> 6] &= ~(std::uint64_t{1} << (c & 63)); }
  bool test(int c) const { return (w_[c >> 6] >> (c & 63)) & 1U; }

  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }
  int count() const {
    int n = 0;
    for (auto x : w_) n += std::popcount(x);
    return n;
  }
  /// Lowest set cell, or -1.
  int first() const {
    for (int k = 0; k < kWords; ++k)
      if (w_[k]) return 64 * k + std::countr_zero(w_[k]);
    return -1;
  }
  bool intersects(const CellSet& o) const {
    for (int k = 0; k < kWords; ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }
  bool contains_all(const CellSet& o) const {
    for (int k = 0; k < kWords; ++k)
      if (o.w_[k] & ~w_[k]) return false;
    return true;
  }

  CellSet& operator|=(const CellSet& o) {
    for (int k = 0; k < kWords; ++k) w_[k] |= o.w_[k];
    return *this;
  }
  CellSet& operator&=(const CellSet& o) {
    for (int k = 0; k < kWords; ++k) w_[k] &= o.w_[k];
    return *this;
  }
  CellSet minus(const CellSet& o) const {
    CellSet r;
    for (int k = 0; k < kWords; ++k) r.w_[k] = w_[k] & ~o.w_[k];
    return r;
  }

  template <class F>
  void for_each(F&& f) const {
    for (int k = 0; k < kWords; ++k)
      for (std::uint64_t x = w_[k]; x; x &= x - 1) f(64 * k + std::countr_zero(x));
  }

  friend bool operator==(const CellSet&, const CellSet&) = default;

 private:
  std::array<std::uint64_t, kWords> w_{};
};

/// supp(S): bits[i] has bit j set iff S(i,j) > 0.
struct SupportPattern {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint64_t> bits;

  bool operator()(int i, int j) const { return (bits[i] >> j) & 1U; }
};

SupportPattern support_pattern(const SlackMatrix& s);

/// row_set x col_set contained in supp(S); bit i of row_set selects row i.
struct Rectangle {
  std::uint64_t row_set = 0;
  std::uint64_t col_set = 0;

  bool contains(int i, int j) const { return ((row_set >> i) & 1U) && ((col_set >> j) & 1U); }

  friend auto operator<=>(const Rectangle&, const Rectangle&) = default;
};

/// Unordered cell pair with S(i1,j1) S(i2,j2) > S(i1,j2) S(i2,j1).
struct DetPair {
  int i1 = 0, j1 = 0;
  int i2 = 0, j2 = 0;

  friend bool operator==(const DetPair&, const DetPair&) = default;
};

int fooling_set_number(const SlackMatrix& s);

/// All inclusion-maximal rectangles, sorted by (col_set, row_set).
std::vector<Rectangle> enumerate_maximal_rectangles(const SlackMatrix& s);

int rectangle_covering_number(const SlackMatrix& s);

std::vector<DetPair> determinant_pairs(const SlackMatrix& s);

/// Minimum length of a list of rectangles covering supp(S) such that every
/// determinant pair meets at least two list entries.
int refined_rectangle_covering_number(const SlackMatrix& s);

/// Exhaustive search over lists of arbitrary (not only maximal) rectangles.
/// Accepts supports of at most 12 cells or matrices of at most 6 x 6; throws
/// InvalidInput otherwise. Cost grows quickly with the answer.
int min_cover_oracle(const SlackMatrix& s, bool refined);

struct LowerBounds {
  int omega = 0;
  int rc = 0;
  int rrc = 0;

  friend bool operator==(const LowerBounds&, const LowerBounds&) = default;
};

LowerBounds compute_lower_bounds(const SlackMatrix& s);

}  // namespace xc01

#endif  // XC01_LOWER_BOUNDS_HPP
