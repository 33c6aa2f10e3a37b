#include <gz/korbits.hpp>

#include <sstream>
#include <stdexcept>

namespace gz {

Flag::Flag(RationalMatrix basis) : basis_(std::move(basis)) {
  if (!basis_.is_square()) throw std::invalid_argument("flag: basis must be square");
  if (!is_invertible(basis_)) throw std::invalid_argument("flag: singular basis");
}

OrbitClass OrbitClass::non_closed(int i, int j) {
  if (!(1 <= i && i < j)) throw std::invalid_argument("orbit class: need 1 <= i < j");
  return {Kind::NonClosed, i, j};
}

std::string OrbitClass::str() const {
  std::ostringstream os;
  if (is_closed())
    os << "closed(" << i << ")";
  else
    os << "nonclosed(" << i << "," << j << ")";
  return os.str();
}

std::vector<OrbitClass> all_orbit_classes(int n_plus_1) {
  std::vector<OrbitClass> cs;
  for (int i = 1; i <= n_plus_1; ++i) cs.push_back(OrbitClass::closed(i));
  for (int i = 1; i <= n_plus_1; ++i)
    for (int j = i + 1; j <= n_plus_1; ++j) cs.push_back(OrbitClass::non_closed(i, j));
  return cs;
}

BorelSubalgebra::BorelSubalgebra(RationalMatrix conjugator)
    : g_(std::move(conjugator)), g_inv_(inverse(g_)) {
  const int n = g_.rows();
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b) {
      RationalMatrix m = g_ * RationalMatrix::elementary(n, a, b) * g_inv_;
      if (a < b) nil_basis_.push_back(m);
      basis_.push_back(std::move(m));
    }
}

bool BorelSubalgebra::contains(const RationalMatrix& x) const {
  return in_span(x.flatten(), flatten_all(basis_));
}

BorelSubalgebra stabilizer_borel(const Flag& f) { return BorelSubalgebra(f.basis()); }

RationalMatrix theta(const RationalMatrix& x) {
  if (!x.is_square()) throw std::invalid_argument("theta: non-square matrix");
  const int n = x.rows();
  RationalMatrix y = x;
  for (int k = 0; k + 1 < n; ++k) {
    y.at(k, n - 1) = -y.at(k, n - 1);
    y.at(n - 1, k) = -y.at(n - 1, k);
  }
  return y;
}

RationalMatrix pi_k(const RationalMatrix& x) {
  if (!x.is_square()) throw std::invalid_argument("pi_k: non-square matrix");
  return (x + theta(x)) * rat(1, 2);
}

OrbitClass classify_korbit(const Flag& f) {
  const int np1 = f.size();
  const RationalMatrix& g = f.basis();
  // a: first column whose last coordinate is nonzero.
  int a = 0;
  for (int c = 0; c < np1; ++c)
    if (g.at(np1 - 1, c) != 0) {
      a = c + 1;
      break;
    }
  // b: first k with e_{n+1} in the span of the first k columns.
  int b = 0;
  for (int k = a; k <= np1; ++k) {
    RationalMatrix head(np1, k);
    for (int r = 0; r < np1; ++r)
      for (int c = 0; c < k; ++c) head.at(r, c) = g.at(r, c);
    RationalVector e_last(np1, Rational(0));
    e_last[np1 - 1] = 1;
    if (solve(head, e_last).has_value()) {
      b = k;
      break;
    }
  }
  if (a == 0 || b == 0) throw std::logic_error("classify_korbit: invariants not found");
  return a == b ? OrbitClass::closed(a) : OrbitClass::non_closed(a, b);
}

Flag representative_flag(const OrbitClass& c, int n_plus_1) {
  const auto e = [&](int k) {
    RationalVector v(n_plus_1, Rational(0));
    v[k - 1] = 1;
    return v;
  };
  std::vector<RationalVector> cols;
  if (c.is_closed()) {
    if (c.i < 1 || c.i > n_plus_1) throw std::invalid_argument("representative_flag: index out of range");
    for (int k = 1; k <= c.i - 1; ++k) cols.push_back(e(k));
    cols.push_back(e(n_plus_1));
    for (int k = c.i; k <= n_plus_1 - 1; ++k) cols.push_back(e(k));
  } else {
    if (c.i < 1 || c.j > n_plus_1 || c.i >= c.j)
      throw std::invalid_argument("representative_flag: index out of range");
    for (int k = 1; k <= c.i - 1; ++k) cols.push_back(e(k));
    RationalVector mid = e(c.i);
    mid[n_plus_1 - 1] = 1;
    cols.push_back(mid);  // e_i + e_{n+1} at position i
    for (int k = c.i + 1; k <= c.j - 1; ++k) cols.push_back(e(k));
    cols.push_back(e(c.i));  // e_i at position j
    for (int k = c.j; k <= n_plus_1 - 1; ++k) cols.push_back(e(k));
  }
  RationalMatrix basis(n_plus_1, n_plus_1);
  for (int col = 0; col < n_plus_1; ++col)
    for (int r = 0; r < n_plus_1; ++r) basis.at(r, col) = cols[col][r];
  return Flag(basis);
}

RationalMatrix v_element(int i, int j, int n_plus_1) {
  if (!(1 <= i && i < j && j <= n_plus_1)) throw std::invalid_argument("v_element: need 1 <= i < j <= n+1");
  std::vector<int> wcyc;
  for (int k = n_plus_1; k >= i; --k) wcyc.push_back(k);
  const RationalMatrix w = Permutation::from_cycle(wcyc, n_plus_1).matrix();
  std::vector<int> scyc;
  for (int k = i + 1; k <= j; ++k) scyc.push_back(k);
  const RationalMatrix sigma = Permutation::from_cycle(scyc, n_plus_1).matrix();
  // Cayley transform at alpha_i: e_i -> e_i + e_{i+1}, e_{i+1} -> -e_i + e_{i+1}.
  RationalMatrix u = RationalMatrix::identity(n_plus_1);
  u.at(i - 1, i - 1) = 1;
  u.at(i, i - 1) = 1;
  u.at(i - 1, i) = -1;
  u.at(i, i) = 1;
  return w * u * sigma;
}

VIdentityResult check_v_identity(int i, int j, int n_plus_1) {
  const RationalMatrix v = v_element(i, j, n_plus_1);
  const RationalMatrix m = inverse(v) * theta(v);
  const RationalMatrix tau = Permutation::transposition(i, j, n_plus_1).matrix();
  const RationalMatrix t = tau * m;  // tau is an involution
  VIdentityResult res;
  res.t = t;
  for (int r = 0; r < n_plus_1; ++r)
    for (int c = 0; c < n_plus_1; ++c) {
      if (r != c && t.at(r, c) != 0) return res;
      if (r == c && t.at(r, c) * t.at(r, c) != 1) return res;
    }
  res.holds = (tau * t == m);
  return res;
}

namespace {

// y = sum a_k E_{k,k+1} + z with all a_k nonzero and z supported strictly
// above the superdiagonal: exactly the regular elements of the standard
// nilradical.
RationalMatrix random_standard_regular_nilpotent(int n_plus_1, Rng& rng,
                                                 RationalVector* superdiag = nullptr) {
  RationalMatrix y(n_plus_1, n_plus_1);
  for (int k = 0; k + 1 < n_plus_1; ++k) {
    y.at(k, k + 1) = rng.nonzero_uniform(-5, 5);
    if (superdiag) superdiag->push_back(y.at(k, k + 1));
  }
  for (int r = 0; r < n_plus_1; ++r)
    for (int c = r + 2; c < n_plus_1; ++c) y.at(r, c) = rng.uniform(-5, 5);
  return y;
}

}  // namespace

RationalMatrix sample_regular_nilpotent(const BorelSubalgebra& b, Rng& rng) {
  return b.ad(random_standard_regular_nilpotent(b.size(), rng));
}

TrialReport nilpsink_check(const OrbitClass& c, int n_plus_1, int trials, Rng& rng) {
  if (c.is_closed()) throw std::invalid_argument("nilpsink_check: class must be non-closed");
  const BorelSubalgebra b = stabilizer_borel(representative_flag(c, n_plus_1));
  TrialReport rep;
  rep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const RationalMatrix x = sample_regular_nilpotent(b, rng);
    if (is_nilpotent(pi_k(x))) ++rep.failures;
  }
  return rep;
}

TrialReport closed_projection_check(int i, int n_plus_1, int trials, Rng& rng) {
  const BorelSubalgebra b = stabilizer_borel(representative_flag(OrbitClass::closed(i), n_plus_1));
  TrialReport rep;
  rep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const RationalMatrix x = sample_regular_nilpotent(b, rng);
    if (!is_nilpotent(pi_k(x))) ++rep.failures;
  }
  return rep;
}

TrialReport open_orbit_determinant_check(int n_plus_1, int trials, Rng& rng) {
  const int n = n_plus_1 - 1;
  if (n < 1) throw std::invalid_argument("open_orbit_determinant_check: need size >= 2");
  RationalMatrix g = RationalMatrix::identity(n_plus_1);
  g.at(n_plus_1 - 1, 0) = 1;  // bordered conjugator, columns e_1+e_{n+1}, e_2, ..., e_{n+1}
  const RationalMatrix g_inv = inverse(g);
  TrialReport rep;
  rep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    RationalVector a;
    const RationalMatrix y = random_standard_regular_nilpotent(n_plus_1, rng, &a);
    const RationalMatrix x = g * y * g_inv;
    bool ok = true;
    // Superdiagonal coefficients are readable off the bordered form.
    for (int k = 0; k < n; ++k) ok = ok && x.at(k, k + 1) == a[k];
    // Last row equals first row; first column is the negated last column.
    for (int c = 0; c < n_plus_1 && ok; ++c) ok = x.at(n_plus_1 - 1, c) == x.at(0, c);
    for (int r = 0; r < n_plus_1 && ok; ++r) ok = x.at(r, 0) == -x.at(r, n_plus_1 - 1);
    Rational prod(1);
    for (const auto& ak : a) prod *= ak;
    if (n % 2 != 0) prod = -prod;
    ok = ok && det(cutoff(x, n)) == prod;
    if (!ok) ++rep.failures;
  }
  return rep;
}

std::optional<RationalMatrix> common_centralizer_witness(const OrbitClass& c, int n_plus_1) {
  if (!c.is_closed()) throw std::invalid_argument("common_centralizer_witness: class must be closed");
  if (n_plus_1 == 1) return std::nullopt;
  const int n = n_plus_1 - 1;
  const BorelSubalgebra b = stabilizer_borel(representative_flag(c, n_plus_1));
  const std::vector<RationalMatrix>& nil = b.nilradical_basis();
  const std::vector<RationalMatrix> z_full = common_centralizer_basis(nil);

  // Projection of the nilradical to gl(n) and its centralizer there.
  std::vector<RationalVector> proj;
  for (const auto& u : nil) proj.push_back(cutoff(u, n).flatten());
  std::vector<RationalMatrix> proj_basis;
  for (const auto& v : span_reduce(proj)) {
    RationalMatrix m = RationalMatrix::unflatten(v, n, n);
    if (!m.is_zero()) proj_basis.push_back(std::move(m));
  }
  std::vector<RationalMatrix> z_proj;
  if (proj_basis.empty()) {
    for (int a = 1; a <= n; ++a)
      for (int d = 1; d <= n; ++d) z_proj.push_back(RationalMatrix::elementary(n, a, d));
  } else {
    z_proj = common_centralizer_basis(proj_basis);
  }
  std::vector<RationalMatrix> z_proj_padded;
  for (const auto& m : z_proj) z_proj_padded.push_back(m.pad_to(n_plus_1));

  const std::vector<RationalMatrix> meet = subspace_intersection(z_proj_padded, z_full);
  const bool interior = 1 < c.i && c.i < n_plus_1;
  if (interior) {
    if (meet.empty())
      throw TheoremViolation("common_centralizer_witness: expected nonzero intersection at " + c.str());
    return meet.front();
  }
  if (!meet.empty())
    throw TheoremViolation("common_centralizer_witness: expected zero intersection at " + c.str());
  return std::nullopt;
}

Flag flag_of_regular_nilpotent(const RationalMatrix& x) {
  if (!x.is_square()) throw std::invalid_argument("flag_of_regular_nilpotent: non-square matrix");
  const int k = x.rows();
  if (!is_regular_nilpotent(x))
    throw std::invalid_argument("flag_of_regular_nilpotent: matrix is not regular nilpotent");
  std::vector<RationalVector> chosen;
  RationalMatrix pw = x;
  for (int j = 1; j <= k; ++j) {
    const std::vector<RationalVector> ker = kernel_basis(j == k ? RationalMatrix::zero(k, k) : pw);
    if (static_cast<int>(ker.size()) != j)
      throw std::logic_error("flag_of_regular_nilpotent: unexpected kernel dimension");
    bool extended = false;
    for (const auto& v : ker)
      if (!in_span(v, chosen)) {
        chosen.push_back(v);
        extended = true;
        break;
      }
    if (!extended) throw std::logic_error("flag_of_regular_nilpotent: chain did not grow");
    pw = pw * x;
  }
  RationalMatrix basis(k, k);
  for (int c = 0; c < k; ++c)
    for (int r = 0; r < k; ++r) basis.at(r, c) = chosen[c][r];
  return Flag(basis);
}

BorelRecognition recognize_borel(const std::vector<RationalMatrix>& subspace_basis) {
  BorelRecognition rec;
  if (subspace_basis.empty()) return rec;
  const int k = subspace_basis.front().rows();
  for (const auto& m : subspace_basis)
    if (!m.is_square() || m.rows() != k) throw std::invalid_argument("recognize_borel: shape mismatch");

  const std::vector<RationalVector> reduced = span_reduce(flatten_all(subspace_basis));
  if (static_cast<int>(reduced.size()) != k * (k + 1) / 2) return rec;
  if (k == 1) {
    rec.is_borel = true;
    rec.flag = Flag(RationalMatrix::identity(1));
    return rec;
  }
  std::vector<RationalMatrix> basis;
  for (const auto& v : reduced) basis.push_back(RationalMatrix::unflatten(v, k, k));

  // Bracket closure, and the derived algebra must have nilradical dimension.
  std::vector<RationalVector> brackets;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b)
      brackets.push_back(bracket(basis[a], basis[b]).flatten());
  std::vector<RationalVector> closure = reduced;
  closure.insert(closure.end(), brackets.begin(), brackets.end());
  if (span_dim(closure) != static_cast<int>(reduced.size())) return rec;
  const std::vector<RationalVector> nil_reduced = span_reduce(brackets);
  if (static_cast<int>(nil_reduced.size()) != k * (k - 1) / 2) return rec;
  std::vector<RationalMatrix> nil;
  for (const auto& v : nil_reduced) nil.push_back(RationalMatrix::unflatten(v, k, k));

  // Image chain of the nilradical: W_{j-1} = n . W_j drops dimension by one
  // each step and recovers the stabilized flag.
  std::vector<std::vector<RationalVector>> steps(k + 1);
  steps[k].clear();
  for (int c = 0; c < k; ++c) {
    RationalVector e(k, Rational(0));
    e[c] = 1;
    steps[k].push_back(std::move(e));
  }
  for (int j = k; j >= 1; --j) {
    std::vector<RationalVector> images;
    for (const auto& u : nil)
      for (const auto& w : steps[j]) images.push_back(u * w);
    steps[j - 1] = span_reduce(images);
    if (static_cast<int>(steps[j - 1].size()) != j - 1) return rec;
  }
  // Flag basis extending each step.
  std::vector<RationalVector> chosen;
  for (int j = 1; j <= k; ++j) {
    bool extended = false;
    for (const auto& v : steps[j])
      if (!in_span(v, chosen)) {
        chosen.push_back(v);
        extended = true;
        break;
      }
    if (!extended) return rec;
  }
  // The subspace must stabilize every step; with matching dimension that
  // pins it as the stabilizer Borel of this flag.
  for (int j = 1; j < k; ++j) {
    std::vector<RationalVector> stacked = steps[j];
    for (const auto& m : basis)
      for (const auto& w : steps[j]) stacked.push_back(m * w);
    if (span_dim(stacked) != j) return rec;
  }

  RationalMatrix fb(k, k);
  for (int c = 0; c < k; ++c)
    for (int r = 0; r < k; ++r) fb.at(r, c) = chosen[c][r];
  rec.is_borel = true;
  rec.flag = Flag(fb);
  return rec;
}

}  // namespace gz
