#include <gz/gelfand_zeitlin.hpp>

#include <stdexcept>

namespace gz {

namespace {
void require_square(const RationalMatrix& x, const char* who) {
  if (!x.is_square()) throw std::invalid_argument(std::string(who) + ": non-square matrix");
}
}  // namespace

bool GZSpectrum::is_zero_fibre() const {
  for (int i = 1; i <= levels(); ++i)
    if (level_polys[i - 1] != Polynomial::monomial(i)) return false;
  return true;
}

RationalMatrix cutoff(const RationalMatrix& x, int i) {
  require_square(x, "cutoff");
  if (i < 1 || i > x.rows()) throw std::invalid_argument("cutoff: level out of range");
  return x.leading_principal(i);
}

Rational gz_trace(const RationalMatrix& x, int i, int j) {
  require_square(x, "gz_trace");
  if (i < 1 || i > x.rows() || j < 1 || j > i)
    throw std::invalid_argument("gz_trace: index out of range");
  return cutoff(x, i).power(j).trace();
}

GZSpectrum kw_map(const RationalMatrix& x) {
  require_square(x, "kw_map");
  GZSpectrum s;
  s.level_polys.reserve(x.rows());
  for (int i = 1; i <= x.rows(); ++i) s.level_polys.push_back(charpoly(cutoff(x, i)));
  return s;
}

bool is_regular(const RationalMatrix& m) {
  require_square(m, "is_regular");
  return static_cast<int>(centralizer_basis(m).size()) == m.rows();
}

bool is_regular_nilpotent(const RationalMatrix& m) {
  return is_nilpotent(m) && is_regular(m);
}

std::vector<RationalMatrix> padded_cutoff_centralizer(const RationalMatrix& x, int i, int target) {
  std::vector<RationalMatrix> padded;
  for (const auto& y : centralizer_basis(cutoff(x, i))) padded.push_back(y.pad_to(target));
  return padded;
}

bool is_sreg_centralizer(const RationalMatrix& x) {
  require_square(x, "is_sreg_centralizer");
  const int np1 = x.rows();
  std::vector<std::vector<RationalMatrix>> cents(np1);
  for (int i = 1; i <= np1; ++i) {
    cents[i - 1] = centralizer_basis(cutoff(x, i));
    if (static_cast<int>(cents[i - 1].size()) != i) return false;
  }
  for (int i = 1; i <= np1 - 1; ++i) {
    std::vector<RationalMatrix> lower;
    for (const auto& y : cents[i - 1]) lower.push_back(y.pad_to(i + 1));
    if (!subspace_intersection(lower, cents[i]).empty()) return false;
  }
  return true;
}

bool is_sreg_differentials(const RationalMatrix& x) {
  require_square(x, "is_sreg_differentials");
  const int np1 = x.rows();
  // Gradient of Tr(x_i^j) under the trace pairing: j * (x_i)^(j-1), padded.
  std::vector<RationalVector> grads;
  for (int i = 1; i <= np1; ++i) {
    const RationalMatrix xi = cutoff(x, i);
    RationalMatrix pw = RationalMatrix::identity(i);
    for (int j = 1; j <= i; ++j) {
      grads.push_back((pw * Rational(j)).pad_to(np1).flatten());
      pw = pw * xi;
    }
  }
  const int expected = np1 * (np1 + 1) / 2;  // one gradient per pair j <= i
  return span_dim(grads) == expected;
}

bool is_nilfibre_sreg(const RationalMatrix& x) {
  return kw_map(x).is_zero_fibre() && is_sreg_centralizer(x);
}

SregDiagnostics sreg_diagnostics(const RationalMatrix& x) {
  require_square(x, "sreg_diagnostics");
  SregDiagnostics d;
  d.n_plus_1 = x.rows();
  std::vector<std::vector<RationalMatrix>> cents(d.n_plus_1);
  bool all_regular = true;
  for (int i = 1; i <= d.n_plus_1; ++i) {
    cents[i - 1] = centralizer_basis(cutoff(x, i));
    const bool reg = static_cast<int>(cents[i - 1].size()) == i;
    d.level_regular.push_back(reg);
    all_regular = all_regular && reg;
  }
  bool intersections_trivial = true;
  for (int i = 1; i <= d.n_plus_1 - 1; ++i) {
    std::vector<RationalMatrix> lower;
    for (const auto& y : cents[i - 1]) lower.push_back(y.pad_to(i + 1));
    const int dim = static_cast<int>(subspace_intersection(lower, cents[i]).size());
    d.intersection_dims.push_back(dim);
    intersections_trivial = intersections_trivial && dim == 0;
  }
  d.sreg_centralizer = all_regular && intersections_trivial;
  d.sreg_differentials = is_sreg_differentials(x);
  d.zero_fibre = kw_map(x).is_zero_fibre();
  d.nilfibre_sreg = d.zero_fibre && d.sreg_centralizer;
  return d;
}

}  // namespace gz
