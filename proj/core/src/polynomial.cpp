#include <gz/polynomial.hpp>

#include <sstream>
#include <stdexcept>

namespace gz {

Polynomial::Polynomial(RationalVector coeffs) : c_(std::move(coeffs)) { strip(); }

void Polynomial::strip() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(RationalVector{c}); }

Polynomial Polynomial::monomial(int k, const Rational& c) {
  if (k < 0) throw std::invalid_argument("monomial: negative degree");
  RationalVector v(k + 1, Rational(0));
  v[k] = c;
  return Polynomial(std::move(v));
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[k];
}

Rational Polynomial::leading() const {
  if (c_.empty()) return Rational(0);
  return c_.back();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  RationalVector v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  RationalVector v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  RationalVector v(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Rational& s) const {
  RationalVector v = c_;
  for (auto& x : v) x *= s;
  return Polynomial(std::move(v));
}

Rational Polynomial::eval(const Rational& x) const {
  Rational r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

RationalMatrix Polynomial::eval(const RationalMatrix& m) const {
  if (!m.is_square()) throw std::invalid_argument("poly eval: non-square matrix");
  RationalMatrix r(m.rows(), m.rows());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r = r * m;
    for (int i = 0; i < m.rows(); ++i) r.at(i, i) += *it;
  }
  return r;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  RationalVector v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
  Polynomial r = *this;
  RationalVector q(degree() >= d.degree() ? degree() - d.degree() + 1 : 0, Rational(0));
  while (!r.is_zero() && r.degree() >= d.degree()) {
    const int k = r.degree() - d.degree();
    const Rational f = r.leading() / d.leading();
    q[k] = f;
    r = r - Polynomial::monomial(k, f) * d;
  }
  return {Polynomial(std::move(q)), r};
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / leading());
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational a = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (k == 0 || a != 1) os << to_string(a);
    if (k > 0 && a != 1) os << "*";
    if (k > 0) os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace gz
