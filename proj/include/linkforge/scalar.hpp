#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

#include "linkforge/errors.hpp"

namespace linkforge {

enum class Backend { Exact, Approx };

// Global tolerance for the approximate backend; every equality-like
// predicate goes through it. Initialized from LINKFORGE_EPS if set.
double approx_eps();
void set_approx_eps(double eps);

// Complex number over one of two backends: Gaussian rationals (exact)
// or double-precision complex with a global eps (approx).
class Scalar {
 public:
  Scalar() : b_(Backend::Exact) {}

  static Scalar exact(mpq_class re, mpq_class im);
  static Scalar exact_int(long re, long im = 0);
  static Scalar approx(std::complex<double> v);
  static Scalar zero(Backend b);
  static Scalar one(Backend b);
  static Scalar imag_unit(Backend b);

  Backend backend() const { return b_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws DivisionByZero
  Scalar operator-() const;
  Scalar conj() const;
  Scalar norm() const { return *this * conj(); }  // |x|^2, real

  bool is_zero() const;
  bool is_real() const;
  bool operator==(const Scalar& o) const;  // eps-aware on approx
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Numeric view (exact: rounded to double).
  std::complex<double> to_complex() const;

  // Exact accessors; only valid on the exact backend.
  const mpq_class& re_q() const { require_exact(); return re_; }
  const mpq_class& im_q() const { require_exact(); return im_; }

  // Deterministic total order on (Re, Im); exact backend compares
  // exactly, approx compares doubles. Used only for canonical sorting.
  static bool lex_less(const Scalar& a, const Scalar& b);

  // Canonical text form: exact "p/q" components, approx decimal
  // (17 significant digits). "a", "bi", "a+bi", "a-bi" etc.
  std::string str() const;

 private:
  void require_exact() const {
    if (b_ != Backend::Exact) throw Error("exact accessor on approx scalar");
  }
  static void check(const Scalar& a, const Scalar& b) {
    if (a.b_ != b.b_) throw MixedBackend();
  }

  Backend b_;
  mpq_class re_, im_;        // exact payload
  std::complex<double> v_{};  // approx payload
};

}  // namespace linkforge
