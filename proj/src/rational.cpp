#include "xc01/rational.hpp"

#include <numeric>
#include <sstream>
#include <utility>

#include "xc01/core_types.hpp"

namespace xc01 {

RMatrix RMatrix::identity(int n) {
  RMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RVector RMatrix::row(int i) const {
  return RVector(data_.begin() + std::size_t(i) * cols_, data_.begin() + std::size_t(i + 1) * cols_);
}

void RMatrix::append_row(const RVector& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(r.size());
  if (static_cast<int>(r.size()) != cols_) throw InvalidInput("RMatrix::append_row: width mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

RMatrix RMatrix::operator*(const RMatrix& other) const {
  if (cols_ != other.rows_) throw InvalidInput("RMatrix: shape mismatch in product");
  RMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

RVector RMatrix::operator*(const RVector& x) const {
  if (static_cast<int>(x.size()) != cols_) throw InvalidInput("RMatrix: shape mismatch in product");
  RVector out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * x[j];
  return out;
}

std::vector<int> rref(RMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(RMatrix m) { return static_cast<int>(rref(m).size()); }

std::optional<RVector> solve_unique(const RMatrix& a, const RVector& b) {
  int n = a.rows();
  if (a.cols() != n || static_cast<int>(b.size()) != n)
    throw InvalidInput("solve_unique: system is not square");
  RMatrix aug(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  auto piv = rref(aug);
  if (static_cast<int>(piv.size()) < n || piv.back() >= n) return std::nullopt;
  RVector x(n);
  for (int i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

RMatrix nullspace(const RMatrix& a) {
  RMatrix m = a;
  auto piv = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  RMatrix basis(a.cols(), static_cast<int>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    int f = free_cols[k];
    basis(f, static_cast<int>(k)) = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) basis(piv[r], static_cast<int>(k)) = -m(static_cast<int>(r), f);
  }
  return basis;
}

std::optional<AffineSolution> solve_affine(const RMatrix& a, const RVector& b) {
  int n = a.cols();
  if (static_cast<int>(b.size()) != a.rows()) throw InvalidInput("solve_affine: shape mismatch");
  RMatrix aug(a.rows(), n + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == n) return std::nullopt;
  AffineSolution sol;
  sol.particular.assign(n, 0);
  for (std::size_t r = 0; r < piv.size(); ++r) sol.particular[piv[r]] = aug(static_cast<int>(r), n);
  sol.basis = nullspace(a);
  return sol;
}

int integer_rank(std::vector<std::vector<std::int64_t>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int r = 0;
  for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      std::int64_t a = rows[r][c], b = rows[i][c];
      std::int64_t g = 0;
      for (std::size_t j = 0; j < cols; ++j) {
        rows[i][j] = rows[i][j] * a - rows[r][j] * b;
        g = std::gcd(g, rows[i][j]);
      }
      if (g > 1)
        for (auto& x : rows[i]) x /= g;
    }
    ++r;
  }
  return r;
}

std::vector<std::int64_t> primitive_integer(const RVector& v) {
  mpz_class l = 1;
  for (const auto& q : v) l = lcm(l, mpz_class(q.get_den()));
  std::vector<mpz_class> z(v.size());
  mpz_class g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    z[i] = mpz_class(v[i].get_num() * (l / v[i].get_den()));
    g = gcd(g, z[i]);
  }
  std::vector<std::int64_t> out(v.size(), 0);
  if (g == 0) return out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_class q = z[i] / g;
    if (!q.fits_slong_p()) throw InternalError("primitive_integer: overflow");
    out[i] = q.get_si();
  }
  return out;
}

std::int64_t to_int64(const Rational& q) {
  if (q.get_den() != 1) throw InternalError("to_int64: value is not an integer");
  if (!q.get_num().fits_slong_p()) throw InternalError("to_int64: overflow");
  return q.get_num().get_si();
}

std::string to_string(const RVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

}  // namespace xc01
