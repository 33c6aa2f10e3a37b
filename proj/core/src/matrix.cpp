#include <gz/matrix.hpp>

#include <sstream>

namespace gz {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::elementary(int n, int r, int c) {
  if (r < 1 || r > n || c < 1 || c > n)
    throw std::invalid_argument("elementary: index out of range");
  RationalMatrix m(n, n);
  m.at(r - 1, c - 1) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  RationalMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("from_rows: ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::from_int_rows(const std::vector<std::vector<long>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  RationalMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("from_int_rows: ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::diagonal(const RationalVector& d) {
  const int n = static_cast<int>(d.size());
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = d[i];
  return m;
}

RationalMatrix RationalMatrix::column(const RationalVector& v) {
  RationalMatrix m(static_cast<int>(v.size()), 1);
  for (int i = 0; i < m.rows(); ++i) m.at(i, 0) = v[i];
  return m;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix +: shape mismatch");
  RationalMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
  return m;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix -: shape mismatch");
  RationalMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - o.e_[i];
  return m;
}

RationalMatrix RationalMatrix::operator-() const {
  RationalMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix *: shape mismatch");
  RationalMatrix m(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) m.at(i, j) += a * o.at(k, j);
    }
  return m;
}

RationalMatrix RationalMatrix::operator*(const Rational& s) const {
  RationalMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] * s;
  return m;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
  if (cols_ != static_cast<int>(v.size())) throw std::invalid_argument("matrix * vector: shape mismatch");
  RationalVector r(rows_, Rational(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += at(i, j) * v[j];
  return r;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Rational RationalMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace: non-square matrix");
  Rational t(0);
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

RationalMatrix RationalMatrix::leading_principal(int k) const {
  if (k < 0 || k > rows_ || k > cols_)
    throw std::invalid_argument("leading_principal: size out of range");
  RationalMatrix m(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m.at(i, j) = at(i, j);
  return m;
}

RationalMatrix RationalMatrix::pad_to(int n) const {
  if (n < rows_ || n < cols_) throw std::invalid_argument("pad_to: target too small");
  RationalMatrix m(n, n);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
  return m;
}

RationalMatrix RationalMatrix::power(int m) const {
  if (!is_square()) throw std::invalid_argument("power: non-square matrix");
  if (m < 0) throw std::invalid_argument("power: negative exponent");
  RationalMatrix r = identity(rows_);
  for (int k = 0; k < m; ++k) r = r * (*this);
  return r;
}

RationalMatrix RationalMatrix::unflatten(const RationalVector& v, int rows, int cols) {
  if (static_cast<int>(v.size()) != rows * cols)
    throw std::invalid_argument("unflatten: size mismatch");
  RationalMatrix m(rows, cols);
  m.e_ = v;
  return m;
}

std::string RationalMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ") << "[";
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << to_string(at(i, j));
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

RationalMatrix bracket(const RationalMatrix& a, const RationalMatrix& b) {
  return a * b - b * a;
}

}  // namespace gz
