#ifndef XC01_RATIONAL_HPP
#define XC01_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace xc01 {

using Rational = mpq_class;
using RVector = std::vector<Rational>;

/// Dense row-major rational matrix.
class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

  static RMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

  RVector row(int i) const;
  void append_row(const RVector& r);

  RMatrix operator*(const RMatrix& other) const;
  RVector operator*(const RVector& x) const;

  friend bool operator==(const RMatrix&, const RMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(RMatrix& m);

int rank(RMatrix m);

/// Unique solution of the square system A x = b, or nullopt when A is singular.
std::optional<RVector> solve_unique(const RMatrix& a, const RVector& b);

/// Columns spanning {x : A x = 0}; an n x k matrix.
RMatrix nullspace(const RMatrix& a);

/// General solution x = particular + basis * t of A x = b.
struct AffineSolution {
  RVector particular;
  RMatrix basis;
};

std::optional<AffineSolution> solve_affine(const RMatrix& a, const RVector& b);

/// Rank of a small integer matrix (fraction-free elimination).
int integer_rank(std::vector<std::vector<std::int64_t>> rows);

/// Scales a rational vector to the primitive integer vector with the same direction.
std::vector<std::int64_t> primitive_integer(const RVector& v);

std::int64_t to_int64(const Rational& q);

std::string to_string(const RVector& v);

}  // namespace xc01

#endif  // XC01_RATIONAL_HPP
