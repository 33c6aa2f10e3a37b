#ifndef GZ_NILFIBRE_HPP
#define GZ_NILFIBRE_HPP

#include <gz/korbits.hpp>
#include <gz/matrix.hpp>
#include <gz/rng.hpp>

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gz {

/// Word over {+,-} of length n+1 with fixed first letter '+': at level 1 the
/// upper and lower orbits coincide, so 2^n sequences index the components.
class SignSequence {
 public:
  explicit SignSequence(std::vector<bool> plus);
  static SignSequence from_string(const std::string& s);  // e.g. "++-"
  static std::vector<SignSequence> all(int n);            // all 2^n of length n+1

  int levels() const { return static_cast<int>(plus_.size()); }
  bool is_plus(int level) const { return plus_[level - 1]; }
  std::string str() const;
  bool operator==(const SignSequence& o) const { return plus_ == o.plus_; }
  bool operator<(const SignSequence& o) const { return plus_ < o.plus_; }

 private:
  std::vector<bool> plus_;
};

/// Sequence of closed-orbit indices, one per level: entry i lies in 1..i.
class ClosedOrbitSequence {
 public:
  explicit ClosedOrbitSequence(std::vector<int> indices);
  static ClosedOrbitSequence from_signs(const SignSequence& s);
  /// All (n+1)! sequences for ambient size n+1.
  static std::vector<ClosedOrbitSequence> all(int n_plus_1);

  int levels() const { return static_cast<int>(idx_.size()); }
  int index(int level) const { return idx_[level - 1]; }
  /// The sign reading when every index is extremal (1 or the level), else nullopt.
  std::optional<SignSequence> signs() const;
  std::string str() const;
  bool operator==(const ClosedOrbitSequence& o) const { return idx_ == o.idx_; }

 private:
  std::vector<int> idx_;
};

/// A standard Borel subalgebra (containing the diagonal Cartan) as a set of
/// positions: the supports w . (upper triangular) . w^{-1} for a permutation
/// w, recorded via the total order the pattern induces on indices.
class BorelPattern {
 public:
  /// order[a-1] = the index occupying position a; positions (earlier, later).
  explicit BorelPattern(std::vector<int> order);

  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<int>& order() const { return order_; }
  /// Off-diagonal positions (row, col), 1-based.
  const std::set<std::pair<int, int>>& positions() const { return positions_; }
  /// Consecutive-order positions; forcing these nonzero in the nilradical
  /// gives exactly the regular nilpotent elements.
  std::vector<std::pair<int, int>> simple_positions() const;
  bool has_position(int r, int c) const;
  /// Support of x lies within pattern + diagonal.
  bool contains_support(const RationalMatrix& x) const;
  /// Support of x lies within the off-diagonal pattern.
  bool nilradical_contains_support(const RationalMatrix& x) const;
  Permutation permutation() const { return Permutation::from_images(positional_images()); }
  BorelSubalgebra subalgebra() const;
  bool operator==(const BorelPattern& o) const { return order_ == o.order_; }

 private:
  std::vector<int> order_;
  std::set<std::pair<int, int>> positions_;
  std::vector<int> positional_images() const;
};

/// The tower Borel of a sign sequence: diagonal plus, at each level i >= 2,
/// the column positions (k, i), k < i for '+' or the row positions (i, k),
/// k < i for '-'.
BorelPattern build_bq(const SignSequence& s);

/// Standard Borel attached to any closed-orbit sequence: index i enters the
/// order at position q_i.
BorelPattern pattern_of_orbit_sequence(const ClosedOrbitSequence& q);

/// Inverse of the above: level-by-level classification of a pattern.
ClosedOrbitSequence orbit_sequence_of_pattern(const BorelPattern& b);

struct XqCheck {
  bool member = false;
  int non_borel_level = 0;   // first level whose projection is not a Borel (0 = none)
  int mismatch_level = 0;    // first level classifying away from the target (0 = none)
};

/// Levelwise membership: projects b to gl(i), certifies the projection is a
/// Borel, recovers its flag, classifies, and compares with Closed(q_i).
XqCheck xq_membership(const BorelSubalgebra& b, const ClosedOrbitSequence& q);

/// Random element of the nilradical pattern of build_bq(s) with the simple
/// positions forced nonzero; verified regular nilpotent (resampled on
/// failure, which has probability zero at generic values).
RationalMatrix nq_reg_sample(const SignSequence& s, Rng& rng);

/// The sign word of a strongly regular zero-fibre element: at each level the
/// unique Borel through the regular nilpotent cutoff classifies to the top
/// closed orbit ('+') or the bottom one ('-').
SignSequence component_of(const RationalMatrix& x);

/// Closed-form characteristic polynomial of the bordered matrix
/// [[y, b], [c, d]] for nilpotent y:  (t - d) t^i - sum_k (c y^k b) t^{i-1-k}.
Polynomial bordered_charpoly_closed_form(const RationalMatrix& y, const RationalVector& b,
                                         const RationalVector& c, const Rational& d);

RationalMatrix bordered_matrix(const RationalMatrix& y, const RationalVector& b,
                               const RationalVector& c, const Rational& d);

struct BorderedExtension {
  RationalVector b, c;
  Rational d{0};
  RationalMatrix full;
  bool regular = false;
  bool intersection_zero = false;
  bool strongly_regular() const { return regular && intersection_zero; }
  std::optional<OrbitClass> borel_class;  // set for strongly regular extensions
};

struct ExtensionGridSpec {
  long b_box = 2;             // b runs over integer vectors with entries in [-b_box, b_box]
  long kernel_coeff_box = 2;  // admissible c = integer combinations of the kernel basis
  std::vector<long> d_values = {0, 1, -1};
};

struct ExtensionOracleReport {
  int candidates = 0;
  int nilpotent = 0;
  int rejected_nonzero_d = 0;
  int strongly_regular = 0;
  bool closed_form_agrees = true;  // closed-form charpoly vs direct, all candidates
  std::vector<BorderedExtension> accepted;
};

/// Brute-force bordered extensions of a regular nilpotent y: admissible c
/// sweeps a rational grid of the kernel of the transposed Krylov matrix
/// [b | yb | ... | y^{i-1}b]; every candidate is accepted or rejected by the
/// exact characteristic polynomial, never by the parameterization alone.
ExtensionOracleReport extension_solutions_oracle(const RationalMatrix& y,
                                                 const std::vector<RationalVector>& b_grid,
                                                 const ExtensionGridSpec& spec);

/// All integer vectors of the given dimension with entries in [-box, box].
std::vector<RationalVector> integer_vector_grid(int dim, long box);

struct ComponentReport {
  SignSequence seq;
  int samples = 0;
  int sreg_failures = 0;      // samples failing the zero-fibre strong regularity test
  int classify_failures = 0;  // samples whose component is not the generator
  BorelPattern pattern;
};

struct CensusReport {
  int n = 0;
  std::vector<ComponentReport> components;
  bool patterns_distinct = false;
  int total_failures() const;
  bool clean() const { return patterns_distinct && total_failures() == 0; }
};

/// Enumerates all 2^n sign sequences, samples each component, and checks the
/// samples land back on their generating sequence.
CensusReport component_census(int n, int samples_per_component, Rng& rng);

}  // namespace gz

#endif
