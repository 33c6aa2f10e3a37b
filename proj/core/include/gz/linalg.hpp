#ifndef GZ_LINALG_HPP
#define GZ_LINALG_HPP

#include <gz/matrix.hpp>
#include <gz/polynomial.hpp>

#include <optional>
#include <vector>

namespace gz {

/// Rank over the rationals, by fraction-free (Bareiss) elimination after
/// clearing row denominators. Pivot choice is the first nonzero entry in
/// column order, so reruns are bit-identical.
int rank(const RationalMatrix& m);

/// Basis of the right null space {v : m v = 0}; empty iff rank = cols.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

/// Monic characteristic polynomial det(tI - m), exact (Faddeev-LeVerrier).
Polynomial charpoly(const RationalMatrix& m);

/// True iff charpoly(m) = t^k.
bool is_nilpotent(const RationalMatrix& m);

/// True iff gcd(chi, chi') is constant, i.e. m has distinct eigenvalues
/// over the complex numbers (regular semisimple).
bool is_squarefree_charpoly(const RationalMatrix& m);

/// Basis of {Y : mY - Ym = 0}, as the kernel of the k^2 x k^2 commutator
/// operator acting on flattened matrices.
std::vector<RationalMatrix> centralizer_basis(const RationalMatrix& m);

/// Common centralizer of a set of matrices: {Y : [Y, u] = 0 for all u}.
std::vector<RationalMatrix> common_centralizer_basis(const std::vector<RationalMatrix>& us);

/// Basis of span(bas_a) ∩ span(bas_b); all matrices must share one shape.
std::vector<RationalMatrix> subspace_intersection(const std::vector<RationalMatrix>& bas_a,
                                                  const std::vector<RationalMatrix>& bas_b);

/// Determinant by fraction-free elimination.
Rational det(const RationalMatrix& m);

bool is_invertible(const RationalMatrix& m);

/// Exact inverse; throws std::invalid_argument on singular input.
RationalMatrix inverse(const RationalMatrix& m);

/// g m g^{-1}.
RationalMatrix conjugate(const RationalMatrix& g, const RationalMatrix& m);

// --- span utilities on flattened vectors -------------------------------------

/// Canonical (RREF-row) basis of the span of the given vectors.
std::vector<RationalVector> span_reduce(const std::vector<RationalVector>& vs);
bool in_span(const RationalVector& v, const std::vector<RationalVector>& basis);
bool spans_equal(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b);
int span_dim(const std::vector<RationalVector>& vs);

std::vector<RationalVector> flatten_all(const std::vector<RationalMatrix>& ms);

/// Solves m x = rhs; empty optional when inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& rhs);

}  // namespace gz

#endif
