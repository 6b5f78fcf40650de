#pragma once

#include <vector>

#include "linkforge/scalar.hpp"

namespace linkforge {

// Univariate polynomial over ComplexScalar, coefficients ascending by
// degree, trailing zeros trimmed; the zero polynomial has degree -1.
class CPoly {
 public:
  CPoly() : b_(Backend::Exact) {}
  explicit CPoly(Backend b) : b_(b) {}
  CPoly(Backend b, std::vector<Scalar> coeffs);

  static CPoly constant(const Scalar& c);
  static CPoly one(Backend b) { return constant(Scalar::one(b)); }
  // t - r
  static CPoly linear_root(const Scalar& r);
  static CPoly from_roots(Backend b, const std::vector<Scalar>& roots);

  Backend backend() const { return b_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(int i) const;  // 0 beyond degree
  Scalar leading() const;     // 0 for the zero polynomial

  CPoly operator+(const CPoly& o) const;
  CPoly operator-(const CPoly& o) const;
  CPoly operator*(const CPoly& o) const;
  CPoly operator-() const;
  CPoly scaled(const Scalar& c) const;
  CPoly conj() const;
  CPoly derivative() const;
  CPoly pow(int e) const;
  // Coefficients reversed: t^deg * p(1/t).
  CPoly reversed() const;

  Scalar eval(const Scalar& t) const;

  bool is_real() const;   // equal to its own conjugate
  bool is_monic() const;
  CPoly monicized() const;  // throws DivisionByZero on the zero polynomial

  // Euclidean division; divisor must be nonzero.
  struct DivMod;
  DivMod divmod(const CPoly& d) const;
  bool divides(const CPoly& p) const;  // this | p

  bool operator==(const CPoly& o) const;
  bool operator!=(const CPoly& o) const { return !(*this == o); }

  std::string str() const;  // human-readable, variable "t"

 private:
  void trim();
  Backend b_;
  std::vector<Scalar> c_;
};

struct CPoly::DivMod {
  CPoly q, r;
};

// Monic gcd by the Euclidean algorithm (exact backend; approx callers
// should prefer root clustering, see roots module).
CPoly euclid_gcd(const CPoly& a, const CPoly& b);

}  // namespace linkforge
