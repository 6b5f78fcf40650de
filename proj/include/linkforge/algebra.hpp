#pragma once

#include "linkforge/poly.hpp"

namespace linkforge {

// Element z + eta*w of K = C[eta]/(eta^2, i*eta + eta*i). Represents a
// direct planar isometry when z != 0. A plane point is stored as the
// complex number x + i*y.
struct KElement {
  Scalar z, w;

  Backend backend() const { return z.backend(); }
  bool operator==(const KElement& o) const { return z == o.z && w == o.w; }
};

KElement k_mul(const KElement& a, const KElement& b);
KElement k_inv(const KElement& k);  // throws ZeroPrimal
// (u*z^2 + z*w) / |z|^2
Scalar act_point(const KElement& k, const Scalar& u);  // throws ZeroPrimal
// w / (conj(z) - z), the fixed point of the rotation t - k.
Scalar midpt(const KElement& k);  // throws RealPrimal

// Motion polynomial Z + eta*W in K[t]; t is central.
struct MPoly {
  CPoly Z, W;

  MPoly() = default;
  MPoly(CPoly z, CPoly w);
  explicit MPoly(Backend b) : Z(b), W(b) {}

  Backend backend() const { return Z.backend(); }
  int degree() const { return std::max(Z.degree(), W.degree()); }
  bool is_monic() const;

  KElement coeff(int i) const { return {Z.coeff(i), W.coeff(i)}; }
  std::string str() const;
  bool operator==(const MPoly& o) const { return Z == o.Z && W == o.W; }
};

// t - k
MPoly mp_linear(const KElement& k);
MPoly mp_one(Backend b);
MPoly poly_mul(const MPoly& p, const MPoly& q);
// Left-multiplication by a coefficient polynomial: C*(Z+eta*W) =
// C*Z + eta*(conj(C)*W).
MPoly mp_scale(const CPoly& c, const MPoly& p);
MPoly operator+(const MPoly& p, const MPoly& q);

// Evaluation at real t; at_inf = true evaluates "t = infinity", i.e.
// returns the leading coefficient.
KElement poly_eval(const MPoly& p, const Scalar& t);
KElement poly_eval_inf(const MPoly& p);

}  // namespace linkforge
