#include <doctest.h>

#include <cmath>
#include <random>

#include "linkforge/collision.hpp"
#include "linkforge/factor.hpp"
#include "linkforge/flip.hpp"
#include "linkforge/linalg.hpp"
#include "linkforge/parse.hpp"

using namespace linkforge;

namespace {

Scalar sq(long re, long im = 0) { return Scalar::exact_int(re, im); }

KElement random_k(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-6, 6);
  return {Scalar::exact_int(d(rng), d(rng)), Scalar::exact_int(d(rng), d(rng))};
}

// M_n with rows indexed by the coefficient of t^0 .. t^{n-1} and columns
// by Q_1 .. Q_n.
Mat q_matrix(const RootPerm& z) {
  int n = static_cast<int>(z.size());
  Mat m(n, Vec(n));
  for (int col = 1; col <= n; ++col) {
    CPoly q = build_Q(z, col);
    for (int row = 0; row < n; ++row) m[row][col - 1] = q.coeff(row);
  }
  return m;
}

Scalar conj_vandermonde(const RootPerm& z) {
  Scalar prod = Scalar::one(z.empty() ? Backend::Exact : z[0].backend());
  for (size_t i = 0; i < z.size(); ++i)
    for (size_t j = i + 1; j < z.size(); ++j)
      prod = prod * (z[i].conj() - z[j]);
  return prod;
}

}  // namespace

TEST_CASE("flip product invariance over 1000 random FM pairs") {
  std::mt19937 rng(1009);
  int done = 0;
  while (done < 1000) {
    KElement k1 = random_k(rng), k2 = random_k(rng);
    if (!fm(k1, k2)) continue;
    FlipPair f = flip(k1, k2);
    CHECK(poly_mul(mp_linear(k1), mp_linear(k2)) ==
          poly_mul(mp_linear(f.k3), mp_linear(f.k4)));
    ++done;
  }
}

TEST_CASE("determinant identity, exact backend") {
  std::mt19937 rng(211);
  std::uniform_int_distribution<int> d(-4, 4), len(2, 5);
  for (int trial = 0; trial < 50; ++trial) {
    RootPerm z;
    int n = len(rng);
    for (int i = 0; i < n; ++i) z.push_back(sq(d(rng), d(rng)));
    CHECK(det(q_matrix(z)) == conj_vandermonde(z));
  }
}

TEST_CASE("determinant identity, approx backend, 200 random tuples") {
  std::mt19937 rng(389);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  std::uniform_int_distribution<int> len(2, 5);
  for (int trial = 0; trial < 200; ++trial) {
    RootPerm z;
    int n = len(rng);
    for (int i = 0; i < n; ++i) z.push_back(Scalar::approx({d(rng), d(rng)}));
    std::complex<double> lhs = det(q_matrix(z)).to_complex();
    std::complex<double> rhs = conj_vandermonde(z).to_complex();
    double scale = std::max(1.0, std::abs(rhs));
    CHECK(std::abs(lhs - rhs) / scale < 1e-9);
  }
}

TEST_CASE("gcd characterization over 500 random conjugate-pair tuples") {
  std::mt19937 rng(499);
  Scalar pool[4] = {sq(2, 3), sq(2, -3), sq(-1, 2), sq(-1, -2)};
  std::uniform_int_distribution<int> pick(0, 3), len(1, 7);
  for (int trial = 0; trial < 500; ++trial) {
    RootPerm z;
    int n = len(rng);
    for (int i = 0; i < n; ++i) z.push_back(pool[pick(rng)]);
    CPoly combinatorial = gcd_of_Q(z);
    CPoly euclidean = build_Q(z, 1);
    for (int i = 2; i <= n; ++i) euclidean = euclid_gcd(euclidean, build_Q(z, i));
    CHECK(combinatorial == euclidean);
    CHECK(combinatorial.degree() ==
          static_cast<int>(max_matching(z).size()));
  }
}

TEST_CASE("span membership is divisibility by G (rank test)") {
  std::mt19937 rng(601);
  Scalar pool[4] = {sq(0, 1), sq(0, -1), sq(1, 1), sq(1, -1)};
  std::uniform_int_distribution<int> pick(0, 3), len(2, 6), c(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    RootPerm z;
    int n = len(rng);
    for (int i = 0; i < n; ++i) z.push_back(pool[pick(rng)]);
    CPoly G = gcd_of_Q(z);

    std::vector<Scalar> wc;
    for (int i = 0; i < n; ++i) wc.push_back(sq(c(rng), c(rng)));
    CPoly w(Backend::Exact, wc);

    // Span membership as a rank statement: appending w as a column must
    // not increase the rank of the Q-coefficient matrix.
    Mat m = q_matrix(z);
    Mat ext = m;
    for (int row = 0; row < n; ++row) ext[row].push_back(w.coeff(row));
    bool in_span = rank(ext) == rank(m);
    CHECK(in_span == (w.is_zero() || G.divides(w)));
  }
}

TEST_CASE("the elliptic motion admits no factorization without R") {
  // Z = t^2+1 has the two primal-part permutations (i,-i) and (-i,i);
  // neither spans W = it-2.
  CPoly w = parse_cpoly("it-2", Backend::Exact);
  for (RootPerm z : {RootPerm{sq(0, 1), sq(0, -1)}, RootPerm{sq(0, -1), sq(0, 1)}}) {
    Mat m = q_matrix(z);
    Mat ext = m;
    for (int row = 0; row < 2; ++row) ext[row].push_back(w.coeff(row));
    CHECK(rank(ext) > rank(m));
    CHECK_THROWS_AS(solve_secondary(z, w), Inconsistent);
  }
}

TEST_CASE("mobility of random FM four-bars is one") {
  std::mt19937 rng(701);
  int done = 0;
  while (done < 10) {
    KElement k1 = random_k(rng), k2 = random_k(rng);
    if (!fm(k1, k2)) continue;
    Linkage fb = flip_linkage(k1, k2);
    CHECK(mobility_sample_check(fb, 3).dimension == 1);
    ++done;
  }
}

TEST_CASE("synthesized ladders have mobility one") {
  for (int n = 2; n <= 4; ++n) {
    std::vector<KElement> ks;
    for (int j = 1; j <= n; ++j) ks.push_back({sq(0, 1), sq(0, 2 * j)});
    Linkage ladder = construct_strong_from(ks, choose_l(ks));
    CHECK(mobility_sample_check(ladder, 3).dimension == 1);
  }
}
