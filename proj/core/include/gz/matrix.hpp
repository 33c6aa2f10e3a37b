#ifndef GZ_MATRIX_HPP
#define GZ_MATRIX_HPP

#include <gz/rational.hpp>

#include <cassert>
#include <initializer_list>
#include <string>
#include <vector>

namespace gz {

using RationalVector = std::vector<Rational>;

/// Dense matrix of exact rationals, row-major. Immutable in spirit: every
/// operation returns a fresh value; equality is entrywise.
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, Rational(0)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix: negative dimension");
  }

  static RationalMatrix identity(int n);
  static RationalMatrix zero(int rows, int cols) { return RationalMatrix(rows, cols); }
  /// Elementary matrix E_{rc} (1-based indices, matching the root-space convention).
  static RationalMatrix elementary(int n, int r, int c);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  /// Convenience for integer test data.
  static RationalMatrix from_int_rows(const std::vector<std::vector<long>>& rows);
  static RationalMatrix diagonal(const RationalVector& d);
  static RationalMatrix column(const RationalVector& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Rational& at(int r, int c) const {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return e_[static_cast<std::size_t>(r) * cols_ + c];
  }
  Rational& at(int r, int c) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return e_[static_cast<std::size_t>(r) * cols_ + c];
  }

  bool operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

  RationalMatrix operator+(const RationalMatrix& o) const;
  RationalMatrix operator-(const RationalMatrix& o) const;
  RationalMatrix operator-() const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator*(const Rational& s) const;
  RationalVector operator*(const RationalVector& v) const;

  RationalMatrix transpose() const;
  Rational trace() const;
  bool is_zero() const;

  /// Leading principal k x k submatrix.
  RationalMatrix leading_principal(int k) const;
  /// Upper-left embedding into an n x n matrix (zero padding).
  RationalMatrix pad_to(int n) const;
  /// m-th power of a square matrix (m >= 0).
  RationalMatrix power(int m) const;

  /// Row-major flattening, used whenever matrices are treated as vectors.
  RationalVector flatten() const { return e_; }
  static RationalMatrix unflatten(const RationalVector& v, int rows, int cols);

  std::string str() const;

 private:
  int rows_, cols_;
  RationalVector e_;
};

inline RationalMatrix operator*(const Rational& s, const RationalMatrix& m) { return m * s; }

/// Commutator AB - BA.
RationalMatrix bracket(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace gz

#endif
