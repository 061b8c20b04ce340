#include "stiefel/matrix.hpp"

#include <map>
#include <utility>

#include "stiefel/errors.hpp"

namespace stiefel {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw DimensionError("matrix data has wrong size");
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

Rational RationalMatrix::trace() const {
  if (!is_square()) throw DimensionError("trace of a non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

std::vector<Rational> RationalMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = (*this)(r, c);
      if (a != 0 && v[c] != 0) s += a * v[c];
    }
    out[r] = std::move(s);
  }
  return out;
}

std::vector<Rational> RationalMatrix::apply_transpose(std::span<const Rational> v) const {
  if (v.size() != rows_) throw DimensionError("matrix-vector size mismatch");
  std::vector<Rational> out(cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (v[r] == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = (*this)(r, c);
      if (a != 0) out[c] += a * v[r];
    }
  }
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product size mismatch");
  RationalMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) p(i, j) += aik * b(k, j);
    }
  return p;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum size mismatch");
  RationalMatrix s(a);
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  // Scale each row by the lcm of its denominators; the scale is positive so only the
  // magnitude changes, and it is divided back out at the end.
  std::vector<Integer> a(n * n);
  Integer scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    scale *= l;
    for (std::size_t c = 0; c < n; ++c) a[r * n + c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }

  int swaps = 0;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[p * n + c]);
      ++swaps;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer& aij = a[i * n + j];
        aij = a[k * n + k] * aij - a[i * n + k] * a[k * n + j];
        mpz_divexact(aij.get_mpz_t(), aij.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * n + k] = 0;
    }
    prev = a[k * n + k];
  }
  Rational det(a[n * n - 1], scale);
  det.canonicalize();
  return swaps % 2 == 0 ? det : Rational(-det);
}

int rational_matrix_det_sign(const RationalMatrix& m) { return sgn(determinant(m)); }

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, Variables vars)
    : rows_(rows), cols_(cols), vars_(vars), entries_(rows * cols, Polynomial(vars)) {
  if (rows == 0 || cols == 0) throw DimensionError("polynomial matrix must have positive dimensions");
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Polynomial> row_major)
    : rows_(rows), cols_(cols), entries_(std::move(row_major)) {
  if (rows == 0 || cols == 0) throw DimensionError("polynomial matrix must have positive dimensions");
  if (entries_.size() != rows * cols) throw DimensionError("polynomial matrix data has wrong size");
  vars_ = entries_.front().variables();
  for (const auto& e : entries_)
    if (!same_ring(e.variables(), vars_)) throw VariableMismatch("matrix entries differ in ring");
}

PolyMatrix PolyMatrix::from_columns(const std::vector<std::vector<Polynomial>>& columns) {
  if (columns.empty() || columns.front().empty()) throw DimensionError("empty column list");
  const std::size_t rows = columns.front().size();
  std::vector<Polynomial> data;
  data.reserve(rows * columns.size());
  for (std::size_t r = 0; r < rows; ++r)
    for (const auto& col : columns) {
      if (col.size() != rows) throw DimensionError("columns differ in length");
      data.push_back(col[r]);
    }
  return PolyMatrix(rows, columns.size(), std::move(data));
}

std::vector<Polynomial> PolyMatrix::column(std::size_t c) const {
  std::vector<Polynomial> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

PolyMatrix PolyMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  std::vector<Polynomial> data;
  data.reserve(rows.size() * cols.size());
  for (auto r : rows)
    for (auto c : cols) data.push_back((*this)(r, c));
  return PolyMatrix(rows.size(), cols.size(), std::move(data));
}

RationalMatrix PolyMatrix::evaluate(std::span<const Rational> point) const {
  RationalMatrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = stiefel::evaluate((*this)(r, c), point);
  return m;
}

std::vector<double> PolyMatrix::evaluate(std::span<const double> point) const {
  std::vector<double> m(rows_ * cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) m[i] = stiefel::evaluate(entries_[i], point);
  return m;
}

namespace {

// Laplace expansion along the leftmost remaining column; minors are keyed by the
// bitmask of the rows still in play (the columns are always the trailing ones).
class CofactorExpansion {
 public:
  explicit CofactorExpansion(const PolyMatrix& m) : m_(m) {}

  Polynomial det(std::uint64_t rows, std::size_t col) {
    if (col == m_.cols()) return Polynomial::constant(m_.variables(), 1);
    auto key = std::make_pair(rows, col);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Polynomial sum(m_.variables());
    int sign = 1;
    for (std::size_t r = 0; r < m_.rows(); ++r) {
      if (!(rows & (std::uint64_t{1} << r))) continue;
      const Polynomial& entry = m_(r, col);
      if (!entry.is_zero()) {
        Polynomial term = entry * det(rows & ~(std::uint64_t{1} << r), col + 1);
        if (sign > 0)
          sum += term;
        else
          sum -= term;
      }
      sign = -sign;
    }
    memo_.emplace(key, sum);
    return sum;
  }

 private:
  const PolyMatrix& m_;
  std::map<std::pair<std::uint64_t, std::size_t>, Polynomial> memo_;
};

}  // namespace

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  if (m.rows() > 63) throw DimensionError("polynomial determinant limited to 63 rows");
  CofactorExpansion expansion(m);
  return expansion.det((std::uint64_t{1} << m.rows()) - 1, 0);
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<Polynomial> all_maximal_minors(const PolyMatrix& m) {
  if (m.rows() < m.cols()) throw DimensionError("maximal minors need rows >= cols");
  std::vector<std::size_t> all_cols(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) all_cols[c] = c;
  std::vector<Polynomial> minors;
  for (const auto& rows : combinations(m.rows(), m.cols()))
    minors.push_back(determinant(m.submatrix(rows, all_cols)));
  return minors;
}

}  // namespace stiefel
