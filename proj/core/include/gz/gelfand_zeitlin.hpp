#ifndef GZ_GELFAND_ZEITLIN_HPP
#define GZ_GELFAND_ZEITLIN_HPP

#include <gz/linalg.hpp>
#include <gz/matrix.hpp>
#include <gz/polynomial.hpp>

#include <vector>

namespace gz {

// Square rational matrices stand for elements of gl(k). The "cutoff" x_i is
// the upper-left i x i corner; levels are 1-based throughout.

/// All level characteristic polynomials of a matrix: entry i-1 is the degree-i
/// characteristic polynomial of the i x i cutoff. Two matrices have the same
/// spectrum at every level exactly when all their trace-power invariants
/// Tr(x_i^j) agree, so this is a faithful stand-in for the moment map value.
struct GZSpectrum {
  std::vector<Polynomial> level_polys;

  int levels() const { return static_cast<int>(level_polys.size()); }
  /// True iff every cutoff is nilpotent (level polynomial t^i).
  bool is_zero_fibre() const;
  bool operator==(const GZSpectrum& o) const { return level_polys == o.level_polys; }
};

/// The i x i leading principal submatrix x_i, 1 <= i <= size.
RationalMatrix cutoff(const RationalMatrix& x, int i);

/// Tr(x_i^j), 1 <= j <= i <= size.
Rational gz_trace(const RationalMatrix& x, int i, int j);

/// Levelwise characteristic polynomials of all cutoffs.
GZSpectrum kw_map(const RationalMatrix& x);

/// Regular = centralizer of minimal dimension (equal to the matrix size).
bool is_regular(const RationalMatrix& m);

bool is_regular_nilpotent(const RationalMatrix& m);

/// Centralizer of x_i inside gl(i), zero-padded into gl(target) matrices.
std::vector<RationalMatrix> padded_cutoff_centralizer(const RationalMatrix& x, int i, int target);

/// Criterion via centralizers: every cutoff x_i is regular and consecutive
/// cutoff centralizers, the smaller embedded in the upper-left corner,
/// intersect trivially.
bool is_sreg_centralizer(const RationalMatrix& x);

/// Criterion via differentials: the gradients of all trace-power invariants
/// at x, identified with zero-padded j*(x_i)^(j-1) through the trace form,
/// have full rank (size+1 choose 2).
bool is_sreg_differentials(const RationalMatrix& x);

/// In the zero fibre (all cutoffs nilpotent) and strongly regular.
bool is_nilfibre_sreg(const RationalMatrix& x);

/// Per-level breakdown backing the CLI verdicts.
struct SregDiagnostics {
  int n_plus_1 = 0;
  std::vector<bool> level_regular;            // x_i regular, i = 1..n+1
  std::vector<int> intersection_dims;         // dim(z(x_i) ∩ z(x_{i+1})), i = 1..n
  bool sreg_centralizer = false;
  bool sreg_differentials = false;
  bool zero_fibre = false;
  bool nilfibre_sreg = false;
  bool criteria_agree() const { return sreg_centralizer == sreg_differentials; }
};

SregDiagnostics sreg_diagnostics(const RationalMatrix& x);

}  // namespace gz

#endif
