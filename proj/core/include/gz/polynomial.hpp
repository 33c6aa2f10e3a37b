#ifndef GZ_POLYNOMIAL_HPP
#define GZ_POLYNOMIAL_HPP

#include <gz/matrix.hpp>
#include <gz/rational.hpp>

#include <string>
#include <vector>

namespace gz {

/// Univariate polynomial over the rationals, coefficients lowest degree
/// first, trailing zeros stripped (the zero polynomial has no coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RationalVector coeffs);
  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(const Rational& c);
  /// t^k
  static Polynomial monomial(int k, const Rational& c = Rational(1));

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  const RationalVector& coefficients() const { return c_; }
  Rational coeff(int k) const;
  Rational leading() const;

  bool operator==(const Polynomial& o) const { return c_ == o.c_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& s) const;

  Rational eval(const Rational& x) const;
  /// Evaluates the polynomial at a square matrix (for Cayley-Hamilton checks).
  RationalMatrix eval(const RationalMatrix& m) const;
  Polynomial derivative() const;
  /// Quotient/remainder by a nonzero divisor; exact rational arithmetic.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  /// Scales so the leading coefficient is 1 (identity on the zero polynomial).
  Polynomial monic() const;

  std::string str(const std::string& var = "t") const;

 private:
  RationalVector c_;
  void strip();
};

/// Monic gcd via the Euclidean algorithm.
Polynomial poly_gcd(Polynomial a, Polynomial b);

}  // namespace gz

#endif
