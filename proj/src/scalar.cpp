#include "linkforge/scalar.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace linkforge {

namespace {
double g_eps = [] {
  if (const char* env = std::getenv("LINKFORGE_EPS")) {
    double v = std::atof(env);
    if (v > 0) return v;
  }
  return 1e-9;
}();
}  // namespace

double approx_eps() { return g_eps; }
void set_approx_eps(double eps) { g_eps = eps; }

Scalar Scalar::exact(mpq_class re, mpq_class im) {
  Scalar s;
  s.b_ = Backend::Exact;
  re.canonicalize();
  im.canonicalize();
  s.re_ = std::move(re);
  s.im_ = std::move(im);
  return s;
}

Scalar Scalar::exact_int(long re, long im) {
  return exact(mpq_class(re), mpq_class(im));
}

Scalar Scalar::approx(std::complex<double> v) {
  Scalar s;
  s.b_ = Backend::Approx;
  s.v_ = v;
  return s;
}

Scalar Scalar::zero(Backend b) {
  return b == Backend::Exact ? exact_int(0) : approx(0.0);
}
Scalar Scalar::one(Backend b) {
  return b == Backend::Exact ? exact_int(1) : approx(1.0);
}
Scalar Scalar::imag_unit(Backend b) {
  return b == Backend::Exact ? exact_int(0, 1) : approx({0.0, 1.0});
}

Scalar Scalar::operator+(const Scalar& o) const {
  check(*this, o);
  if (b_ == Backend::Exact) return exact(re_ + o.re_, im_ + o.im_);
  return approx(v_ + o.v_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  check(*this, o);
  if (b_ == Backend::Exact) return exact(re_ - o.re_, im_ - o.im_);
  return approx(v_ - o.v_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  check(*this, o);
  if (b_ == Backend::Exact)
    return exact(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
  return approx(v_ * o.v_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  check(*this, o);
  if (o.is_zero()) throw DivisionByZero();
  if (b_ == Backend::Exact) {
    mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
    return exact((re_ * o.re_ + im_ * o.im_) / n,
                 (im_ * o.re_ - re_ * o.im_) / n);
  }
  return approx(v_ / o.v_);
}

Scalar Scalar::operator-() const {
  if (b_ == Backend::Exact) return exact(-re_, -im_);
  return approx(-v_);
}

Scalar Scalar::conj() const {
  if (b_ == Backend::Exact) return exact(re_, -im_);
  return approx(std::conj(v_));
}

bool Scalar::is_zero() const {
  if (b_ == Backend::Exact) return re_ == 0 && im_ == 0;
  return std::abs(v_) <= g_eps;
}

bool Scalar::is_real() const {
  if (b_ == Backend::Exact) return im_ == 0;
  return std::abs(v_.imag()) <= g_eps;
}

bool Scalar::operator==(const Scalar& o) const {
  check(*this, o);
  if (b_ == Backend::Exact) return re_ == o.re_ && im_ == o.im_;
  return std::abs(v_ - o.v_) <= g_eps;
}

std::complex<double> Scalar::to_complex() const {
  if (b_ == Backend::Exact) return {re_.get_d(), im_.get_d()};
  return v_;
}

bool Scalar::lex_less(const Scalar& a, const Scalar& b) {
  check(a, b);
  if (a.b_ == Backend::Exact) {
    int c = cmp(a.re_, b.re_);
    if (c != 0) return c < 0;
    return cmp(a.im_, b.im_) < 0;
  }
  if (a.v_.real() != b.v_.real()) return a.v_.real() < b.v_.real();
  return a.v_.imag() < b.v_.imag();
}

namespace {
std::string dbl_str(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}
}  // namespace

std::string Scalar::str() const {
  std::string re, im;
  bool re0, im0, im_neg;
  if (b_ == Backend::Exact) {
    re = re_.get_str();
    re0 = re_ == 0;
    im0 = im_ == 0;
    im_neg = im_ < 0;
    im = im_neg ? mpq_class(-im_).get_str() : im_.get_str();
  } else {
    re = dbl_str(v_.real());
    re0 = v_.real() == 0;
    im0 = v_.imag() == 0;
    im_neg = v_.imag() < 0;
    im = dbl_str(std::abs(v_.imag()));
  }
  if (im0) return re;
  std::string imt = (im == "1" ? "i" : im + "i");
  if (re0) return (im_neg ? "-" : "") + imt;
  return re + (im_neg ? "-" : "+") + imt;
}

}  // namespace linkforge
