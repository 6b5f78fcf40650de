#include "linkforge/algebra.hpp"

namespace linkforge {

KElement k_mul(const KElement& a, const KElement& b) {
  return {a.z * b.z, a.z.conj() * b.w + b.z * a.w};
}

KElement k_inv(const KElement& k) {
  if (k.z.is_zero()) throw ZeroPrimal();
  return {k.z.conj(), -k.w};
}

Scalar act_point(const KElement& k, const Scalar& u) {
  if (k.z.is_zero()) throw ZeroPrimal();
  return (u * k.z * k.z + k.z * k.w) / k.z.norm();
}

Scalar midpt(const KElement& k) {
  if (k.z.is_real()) throw RealPrimal();
  return k.w / (k.z.conj() - k.z);
}

MPoly::MPoly(CPoly z, CPoly w) : Z(std::move(z)), W(std::move(w)) {
  if (Z.backend() != W.backend()) throw MixedBackend();
}

bool MPoly::is_monic() const {
  return Z.degree() >= W.degree() && Z.is_monic();
}

std::string MPoly::str() const {
  if (W.is_zero()) return Z.str();
  return "(" + Z.str() + ") + (" + W.str() + ")e";
}

MPoly mp_linear(const KElement& k) {
  Backend b = k.backend();
  return {CPoly(b, {-k.z, Scalar::one(b)}), CPoly(b, {-k.w})};
}

MPoly mp_one(Backend b) { return {CPoly::one(b), CPoly(b)}; }

MPoly poly_mul(const MPoly& p, const MPoly& q) {
  // pp(PQ) = pp(P) pp(Q); sp(PQ) = conj(pp(P)) sp(Q) + pp(Q) sp(P)
  return {p.Z * q.Z, p.Z.conj() * q.W + q.Z * p.W};
}

MPoly mp_scale(const CPoly& c, const MPoly& p) {
  return {c * p.Z, c.conj() * p.W};
}

MPoly operator+(const MPoly& p, const MPoly& q) {
  return {p.Z + q.Z, p.W + q.W};
}

KElement poly_eval(const MPoly& p, const Scalar& t) {
  return {p.Z.eval(t), p.W.eval(t)};
}

KElement poly_eval_inf(const MPoly& p) {
  int d = p.degree();
  return {p.Z.coeff(d), p.W.coeff(d)};
}

}  // namespace linkforge
