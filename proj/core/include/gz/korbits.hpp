#ifndef GZ_KORBITS_HPP
#define GZ_KORBITS_HPP

#include <gz/gelfand_zeitlin.hpp>
#include <gz/linalg.hpp>
#include <gz/matrix.hpp>
#include <gz/permutation.hpp>
#include <gz/rng.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gz {

/// Thrown when a computation contradicts a verified structural statement;
/// never expected on valid inputs.
class TheoremViolation : public std::logic_error {
 public:
  explicit TheoremViolation(const std::string& what) : std::logic_error(what) {}
};

/// Full flag in C^(n+1), encoded by an invertible basis matrix whose first k
/// columns span the k-dimensional step V_k.
class Flag {
 public:
  explicit Flag(RationalMatrix basis);
  const RationalMatrix& basis() const { return basis_; }
  int size() const { return basis_.rows(); }

 private:
  RationalMatrix basis_;
};

/// K-orbit of a Borel subalgebra on the flag variety, for the block subgroup
/// K = GL(n) x GL(1): either one of the n+1 closed orbits or one of the
/// (n+1 choose 2) non-closed ones. For size n+1, Closed(n+1) is the orbit of
/// the upper triangular Borel and Closed(1) the orbit of the lower
/// triangular one.
struct OrbitClass {
  enum class Kind { Closed, NonClosed };
  Kind kind;
  int i = 0;
  int j = 0;  // only for NonClosed, i < j

  static OrbitClass closed(int i) { return {Kind::Closed, i, 0}; }
  static OrbitClass non_closed(int i, int j);
  bool is_closed() const { return kind == Kind::Closed; }
  bool operator==(const OrbitClass& o) const {
    return kind == o.kind && i == o.i && j == o.j;
  }
  std::string str() const;
};

/// All orbit classes for ambient size n+1, closed first, deterministic order.
std::vector<OrbitClass> all_orbit_classes(int n_plus_1);

/// Borel subalgebra stored by a conjugator g: the algebra is
/// g . (upper triangulars) . g^{-1}. The subspace basis is derived once.
class BorelSubalgebra {
 public:
  explicit BorelSubalgebra(RationalMatrix conjugator);
  int size() const { return g_.rows(); }
  const RationalMatrix& conjugator() const { return g_; }
  const RationalMatrix& conjugator_inv() const { return g_inv_; }
  /// Basis g E_ab g^{-1}, a <= b, in row-major order of (a, b).
  const std::vector<RationalMatrix>& basis() const { return basis_; }
  /// Basis of the nilradical g E_ab g^{-1}, a < b.
  const std::vector<RationalMatrix>& nilradical_basis() const { return nil_basis_; }
  bool contains(const RationalMatrix& x) const;
  RationalMatrix ad(const RationalMatrix& y) const { return g_ * y * g_inv_; }

 private:
  RationalMatrix g_, g_inv_;
  std::vector<RationalMatrix> basis_, nil_basis_;
};

/// Stabilizer of a flag, i.e. the Borel with conjugator the basis matrix.
BorelSubalgebra stabilizer_borel(const Flag& f);

/// Conjugation by diag(1, ..., 1, -1): flips the sign of the last row and
/// last column away from the corner.
RationalMatrix theta(const RationalMatrix& x);

/// (x + theta(x)) / 2: the block-diagonal part x_n ⊕ x_{n+1,n+1}.
RationalMatrix pi_k(const RationalMatrix& x);

/// Classification invariants: a = first flag step leaving the coordinate
/// hyperplane span(e_1..e_n), b = first step containing e_{n+1}. Both are
/// constant on K-orbits; a = b gives Closed(a), otherwise NonClosed(a, b).
OrbitClass classify_korbit(const Flag& f);

/// The explicit representative flag of an orbit class.
Flag representative_flag(const OrbitClass& c, int n_plus_1);

/// v = w u_alpha sigma with w the cycle (n+1, n, ..., i), sigma the cycle
/// (i+1, ..., j) and u_alpha the Cayley transform at the simple root alpha_i.
/// Maps the standard flag to the NonClosed(i, j) representative flag.
RationalMatrix v_element(int i, int j, int n_plus_1);

struct VIdentityResult {
  bool holds = false;
  RationalMatrix t;  // extracted diagonal factor, t^2 = I when holds
};

/// Verifies v^{-1} theta(v) = tau_{i,j} t with t diagonal and t^2 = I.
VIdentityResult check_v_identity(int i, int j, int n_plus_1);

/// Random regular nilpotent element of b: conjugate of a superdiagonal with
/// nonzero coefficients plus a random element of the second derived span.
RationalMatrix sample_regular_nilpotent(const BorelSubalgebra& b, Rng& rng);

struct TrialReport {
  int trials = 0;
  int failures = 0;
  bool clean() const { return failures == 0; }
};

/// Samples regular nilpotents in the representative Borel of a non-closed
/// orbit; a failure is a block-diagonal projection that is nilpotent
/// (expected never).
TrialReport nilpsink_check(const OrbitClass& c, int n_plus_1, int trials, Rng& rng);

/// Contrast for closed orbits: the projection must always be nilpotent.
TrialReport closed_projection_check(int i, int n_plus_1, int trials, Rng& rng);

/// Open-orbit determinant identity: for the bordered conjugator
/// g = I + E_{n+1,1}, the upper-left n x n block of pi_k(x) has determinant
/// (-1)^n * (product of superdiagonal coefficients), exactly; also checks
/// the displayed bordered shape (last row = first row, first column =
/// negated last column away from the border).
TrialReport open_orbit_determinant_check(int n_plus_1, int trials, Rng& rng);

/// For a closed orbit Closed(i): a nonzero element of gl(n) commuting with
/// the whole nilradical of the representative Borel and with its projection
/// to gl(n), when 1 < i < n+1; std::nullopt (with the intersection verified
/// to be zero) when i is 1 or n+1.
std::optional<RationalMatrix> common_centralizer_witness(const OrbitClass& c, int n_plus_1);

/// The flag of kernels ker(x) ⊂ ker(x^2) ⊂ ...; x must be regular nilpotent.
/// Its stabilizer is the unique Borel containing x.
Flag flag_of_regular_nilpotent(const RationalMatrix& x);

struct BorelRecognition {
  bool is_borel = false;
  std::optional<Flag> flag;  // present when is_borel
};

/// Decides whether a subspace of gl(k) is a Borel subalgebra (dimension,
/// bracket closure, nilradical chain) and if so recovers its full flag.
BorelRecognition recognize_borel(const std::vector<RationalMatrix>& subspace_basis);

}  // namespace gz

#endif
