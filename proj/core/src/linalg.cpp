#include <gz/linalg.hpp>

#include <cassert>
#include <stdexcept>

namespace gz {

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Clears denominators row by row (row scaling changes neither rank nor the
// right kernel).
IntMatrix integerize(const RationalMatrix& m) {
  IntMatrix a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    mpz_class l(1);
    for (int j = 0; j < m.cols(); ++j) {
      const mpz_class den = m.at(i, j).get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    for (int j = 0; j < m.cols(); ++j) {
      mpq_class scaled = m.at(i, j) * Rational(l);
      assert(scaled.get_den() == 1);
      a[i][j] = scaled.get_num();
    }
  }
  return a;
}

struct EchelonResult {
  IntMatrix mat;               // row echelon, fraction-free entries
  std::vector<int> pivot_cols; // pivot column per pivot row
  int swaps = 0;
  mpz_class last_pivot{1};
};

// Bareiss one-step fraction-free elimination. Pivot: first row with a
// nonzero entry in the current column. Intermediate divisions are exact.
EchelonResult bareiss_echelon(IntMatrix a) {
  EchelonResult res;
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  mpz_class prev(1);
  int pr = 0;
  for (int c = 0; c < cols && pr < rows; ++c) {
    int piv = -1;
    for (int r = pr; r < rows; ++r)
      if (a[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != pr) {
      std::swap(a[piv], a[pr]);
      ++res.swaps;
    }
    for (int r = pr + 1; r < rows; ++r) {
      for (int j = c + 1; j < cols; ++j) {
        mpz_class t = a[r][j] * a[pr][c] - a[r][c] * a[pr][j];
        assert(mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()));
        mpz_divexact(a[r][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = a[pr][c];
    res.pivot_cols.push_back(c);
    ++pr;
  }
  res.last_pivot = prev;
  res.mat = std::move(a);
  return res;
}

struct RrefResult {
  RationalMatrix mat;
  std::vector<int> pivot_cols;
  int rank = 0;
};

RrefResult rref(const RationalMatrix& m) {
  EchelonResult e = bareiss_echelon(integerize(m));
  RrefResult r;
  r.pivot_cols = e.pivot_cols;
  r.rank = static_cast<int>(e.pivot_cols.size());
  RationalMatrix q(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) q.at(i, j) = Rational(e.mat[i][j]);
  // Normalize pivots to 1 and eliminate above.
  for (int pr = r.rank - 1; pr >= 0; --pr) {
    const int pc = r.pivot_cols[pr];
    const Rational inv = Rational(1) / q.at(pr, pc);
    for (int j = pc; j < m.cols(); ++j) q.at(pr, j) *= inv;
    for (int i = 0; i < pr; ++i) {
      const Rational f = q.at(i, pc);
      if (f == 0) continue;
      for (int j = pc; j < m.cols(); ++j) q.at(i, j) -= f * q.at(pr, j);
    }
  }
  r.mat = std::move(q);
  return r;
}

void require_square(const RationalMatrix& m, const char* who) {
  if (!m.is_square()) throw std::invalid_argument(std::string(who) + ": non-square matrix");
}

}  // namespace

int rank(const RationalMatrix& m) {
  return static_cast<int>(bareiss_echelon(integerize(m)).pivot_cols.size());
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m.cols(), Rational(0));
    v[f] = 1;
    for (int pr = 0; pr < r.rank; ++pr) v[r.pivot_cols[pr]] = -r.mat.at(pr, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Polynomial charpoly(const RationalMatrix& m) {
  require_square(m, "charpoly");
  const int k = m.rows();
  if (k == 0) return Polynomial::constant(Rational(1));
  RationalVector c(k + 1, Rational(0));
  c[k] = 1;
  RationalMatrix mj = m;
  c[k - 1] = -mj.trace();
  for (int j = 2; j <= k; ++j) {
    RationalMatrix t = mj;
    for (int i = 0; i < k; ++i) t.at(i, i) += c[k - j + 1];
    mj = m * t;
    c[k - j] = -mj.trace() / Rational(j);
  }
  return Polynomial(std::move(c));
}

bool is_nilpotent(const RationalMatrix& m) {
  require_square(m, "is_nilpotent");
  return charpoly(m) == Polynomial::monomial(m.rows());
}

bool is_squarefree_charpoly(const RationalMatrix& m) {
  require_square(m, "is_squarefree_charpoly");
  const Polynomial chi = charpoly(m);
  return poly_gcd(chi, chi.derivative()).degree() == 0;
}

std::vector<RationalMatrix> centralizer_basis(const RationalMatrix& m) {
  require_square(m, "centralizer_basis");
  return common_centralizer_basis({m});
}

std::vector<RationalMatrix> common_centralizer_basis(const std::vector<RationalMatrix>& us) {
  if (us.empty()) throw std::invalid_argument("common_centralizer_basis: empty constraint set");
  const int k = us.front().rows();
  for (const auto& u : us)
    if (!u.is_square() || u.rows() != k)
      throw std::invalid_argument("common_centralizer_basis: shape mismatch");
  // Rows: for each constraint u, the k^2 linear conditions of [Y, u] = 0 on
  // the flattened Y. Column (p, q) corresponds to the coefficient of E_pq.
  RationalMatrix op(static_cast<int>(us.size()) * k * k, k * k);
  int row0 = 0;
  for (const auto& u : us) {
    for (int p = 0; p < k; ++p)
      for (int q = 0; q < k; ++q) {
        // u E_pq - E_pq u: column q picks up u[:,p], row p picks up -u[q,:].
        const int col = p * k + q;
        for (int i = 0; i < k; ++i) op.at(row0 + i * k + q, col) += u.at(i, p);
        for (int j = 0; j < k; ++j) op.at(row0 + p * k + j, col) -= u.at(q, j);
      }
    row0 += k * k;
  }
  std::vector<RationalMatrix> basis;
  for (const auto& v : kernel_basis(op)) basis.push_back(RationalMatrix::unflatten(v, k, k));
  return basis;
}

std::vector<RationalMatrix> subspace_intersection(const std::vector<RationalMatrix>& bas_a,
                                                  const std::vector<RationalMatrix>& bas_b) {
  if (bas_a.empty() || bas_b.empty()) return {};
  const int rows = bas_a.front().rows(), cols = bas_a.front().cols();
  for (const auto& m : bas_a)
    if (m.rows() != rows || m.cols() != cols)
      throw std::invalid_argument("subspace_intersection: shape mismatch");
  for (const auto& m : bas_b)
    if (m.rows() != rows || m.cols() != cols)
      throw std::invalid_argument("subspace_intersection: shape mismatch");
  const int d = rows * cols;
  const int p = static_cast<int>(bas_a.size()), q = static_cast<int>(bas_b.size());
  RationalMatrix stacked(d, p + q);
  for (int t = 0; t < p; ++t) {
    const RationalVector f = bas_a[t].flatten();
    for (int i = 0; i < d; ++i) stacked.at(i, t) = f[i];
  }
  for (int t = 0; t < q; ++t) {
    const RationalVector f = bas_b[t].flatten();
    for (int i = 0; i < d; ++i) stacked.at(i, p + t) = -f[i];
  }
  // Kernel vectors (x; y) satisfy A x = B y, so A x runs over the intersection.
  std::vector<RationalVector> members;
  for (const auto& v : kernel_basis(stacked)) {
    RationalVector w(d, Rational(0));
    for (int t = 0; t < p; ++t) {
      if (v[t] == 0) continue;
      const RationalVector f = bas_a[t].flatten();
      for (int i = 0; i < d; ++i) w[i] += v[t] * f[i];
    }
    members.push_back(std::move(w));
  }
  std::vector<RationalMatrix> basis;
  for (const auto& w : span_reduce(members)) basis.push_back(RationalMatrix::unflatten(w, rows, cols));
  return basis;
}

Rational det(const RationalMatrix& m) {
  require_square(m, "det");
  if (m.rows() == 0) return Rational(1);
  // Track the row scalings used to clear denominators.
  Rational scale(1);
  IntMatrix a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    mpz_class l(1);
    for (int j = 0; j < m.cols(); ++j) {
      const mpz_class den = m.at(i, j).get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    scale *= Rational(l);
    for (int j = 0; j < m.cols(); ++j) {
      mpq_class scaled = m.at(i, j) * Rational(l);
      a[i][j] = scaled.get_num();
    }
  }
  EchelonResult e = bareiss_echelon(std::move(a));
  if (static_cast<int>(e.pivot_cols.size()) < m.rows()) return Rational(0);
  Rational d = Rational(e.last_pivot) / scale;
  return (e.swaps % 2 == 0) ? d : Rational(-d);
}

bool is_invertible(const RationalMatrix& m) {
  return m.is_square() && rank(m) == m.rows();
}

RationalMatrix inverse(const RationalMatrix& m) {
  require_square(m, "inverse");
  const int n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  const RrefResult r = rref(aug);
  if (r.rank < n || r.pivot_cols[n - 1] != n - 1)
    throw std::invalid_argument("inverse: singular matrix");
  RationalMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
  return inv;
}

RationalMatrix conjugate(const RationalMatrix& g, const RationalMatrix& m) {
  return g * m * inverse(g);
}

std::vector<RationalVector> span_reduce(const std::vector<RationalVector>& vs) {
  if (vs.empty()) return {};
  const int d = static_cast<int>(vs.front().size());
  RationalMatrix m(static_cast<int>(vs.size()), d);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (static_cast<int>(vs[i].size()) != d)
      throw std::invalid_argument("span_reduce: length mismatch");
    for (int j = 0; j < d; ++j) m.at(static_cast<int>(i), j) = vs[i][j];
  }
  const RrefResult r = rref(m);
  std::vector<RationalVector> basis;
  for (int i = 0; i < r.rank; ++i) {
    RationalVector v(d);
    for (int j = 0; j < d; ++j) v[j] = r.mat.at(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_span(const RationalVector& v, const std::vector<RationalVector>& basis) {
  std::vector<RationalVector> with = basis;
  with.push_back(v);
  return span_dim(with) == span_dim(basis);
}

bool spans_equal(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b) {
  return span_reduce(a) == span_reduce(b);
}

int span_dim(const std::vector<RationalVector>& vs) {
  if (vs.empty()) return 0;
  return static_cast<int>(span_reduce(vs).size());
}

std::vector<RationalVector> flatten_all(const std::vector<RationalMatrix>& ms) {
  std::vector<RationalVector> vs;
  vs.reserve(ms.size());
  for (const auto& m : ms) vs.push_back(m.flatten());
  return vs;
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& rhs) {
  if (static_cast<int>(rhs.size()) != m.rows()) throw std::invalid_argument("solve: shape mismatch");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = rhs[i];
  }
  const RrefResult r = rref(aug);
  for (int pc : r.pivot_cols)
    if (pc == m.cols()) return std::nullopt;
  RationalVector x(m.cols(), Rational(0));
  for (int pr = 0; pr < r.rank; ++pr) x[r.pivot_cols[pr]] = r.mat.at(pr, m.cols());
  return x;
}

}  // namespace gz
