#include "linkforge/poly.hpp"

#include <sstream>

namespace linkforge {

CPoly::CPoly(Backend b, std::vector<Scalar> coeffs) : b_(b), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (c.backend() != b_) throw MixedBackend();
  trim();
}

void CPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

CPoly CPoly::constant(const Scalar& c) {
  return CPoly(c.backend(), {c});
}

CPoly CPoly::linear_root(const Scalar& r) {
  return CPoly(r.backend(), {-r, Scalar::one(r.backend())});
}

CPoly CPoly::from_roots(Backend b, const std::vector<Scalar>& roots) {
  CPoly p = one(b);
  for (const auto& r : roots) p = p * linear_root(r);
  return p;
}

Scalar CPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar::zero(b_);
  return c_[i];
}

Scalar CPoly::leading() const {
  return c_.empty() ? Scalar::zero(b_) : c_.back();
}

CPoly CPoly::operator+(const CPoly& o) const {
  if (b_ != o.b_) throw MixedBackend();
  std::vector<Scalar> r(std::max(c_.size(), o.c_.size()), Scalar::zero(b_));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
  return CPoly(b_, std::move(r));
}

CPoly CPoly::operator-(const CPoly& o) const { return *this + (-o); }

CPoly CPoly::operator-() const {
  std::vector<Scalar> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(-c);
  return CPoly(b_, std::move(r));
}

CPoly CPoly::operator*(const CPoly& o) const {
  if (b_ != o.b_) throw MixedBackend();
  if (c_.empty() || o.c_.empty()) return CPoly(b_);
  std::vector<Scalar> r(c_.size() + o.c_.size() - 1, Scalar::zero(b_));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
  return CPoly(b_, std::move(r));
}

CPoly CPoly::scaled(const Scalar& c) const {
  std::vector<Scalar> r;
  r.reserve(c_.size());
  for (const auto& x : c_) r.push_back(x * c);
  return CPoly(b_, std::move(r));
}

CPoly CPoly::conj() const {
  std::vector<Scalar> r;
  r.reserve(c_.size());
  for (const auto& x : c_) r.push_back(x.conj());
  return CPoly(b_, std::move(r));
}

CPoly CPoly::derivative() const {
  std::vector<Scalar> r;
  for (size_t i = 1; i < c_.size(); ++i) {
    Scalar k = b_ == Backend::Exact ? Scalar::exact_int(static_cast<long>(i))
                                    : Scalar::approx(static_cast<double>(i));
    r.push_back(c_[i] * k);
  }
  return CPoly(b_, std::move(r));
}

CPoly CPoly::pow(int e) const {
  CPoly r = one(b_);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

CPoly CPoly::reversed() const {
  std::vector<Scalar> r(c_.rbegin(), c_.rend());
  return CPoly(b_, std::move(r));
}

Scalar CPoly::eval(const Scalar& t) const {
  Scalar acc = Scalar::zero(b_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

bool CPoly::is_real() const {
  for (const auto& c : c_)
    if (!c.is_real()) return false;
  return true;
}

bool CPoly::is_monic() const {
  return !c_.empty() && leading() == Scalar::one(b_);
}

CPoly CPoly::monicized() const {
  if (c_.empty()) throw DivisionByZero();
  return scaled(Scalar::one(b_) / leading());
}

CPoly::DivMod CPoly::divmod(const CPoly& d) const {
  if (b_ != d.b_) throw MixedBackend();
  if (d.is_zero()) throw DivisionByZero();
  CPoly r = *this;
  std::vector<Scalar> q(std::max<int>(0, degree() - d.degree() + 1), Scalar::zero(b_));
  Scalar lead = d.leading();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int k = r.degree() - d.degree();
    Scalar f = r.leading() / lead;
    q[k] = q[k] + f;
    std::vector<Scalar> sub(k, Scalar::zero(b_));
    sub.insert(sub.end(), d.c_.begin(), d.c_.end());
    r = r - CPoly(b_, std::move(sub)).scaled(f);
    // Guard against non-decreasing degree from approx cancellation noise.
    if (!r.is_zero() && r.degree() >= d.degree() + k) {
      auto cs = r.c_;
      cs.resize(d.degree() + k);
      r = CPoly(b_, std::move(cs));
    }
  }
  return {CPoly(b_, std::move(q)), r};
}

bool CPoly::divides(const CPoly& p) const {
  if (is_zero()) return p.is_zero();
  return p.divmod(*this).r.is_zero();
}

bool CPoly::operator==(const CPoly& o) const {
  if (b_ != o.b_) throw MixedBackend();
  if (b_ == Backend::Exact) {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != o.c_[i]) return false;
    return true;
  }
  size_t n = std::max(c_.size(), o.c_.size());
  for (size_t i = 0; i < n; ++i)
    if (!(coeff(static_cast<int>(i)) == o.coeff(static_cast<int>(i)))) return false;
  return true;
}

std::string CPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Scalar c = coeff(i);
    if (c.is_zero() && degree() > 0) continue;
    if (!first) os << " + ";
    first = false;
    std::string cs = c.str();
    if (i == 0) {
      os << cs;
    } else {
      if (cs == "1") {
      } else if (cs.find('+') != std::string::npos ||
                 (cs.find('-') != std::string::npos && cs.rfind('-') > 0)) {
        os << "(" << cs << ") ";
      } else {
        os << cs << " ";
      }
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

CPoly euclid_gcd(const CPoly& a, const CPoly& b) {
  CPoly x = a, y = b;
  while (!y.is_zero()) {
    CPoly r = x.divmod(y).r;
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return x.monicized();
}

}  // namespace linkforge
