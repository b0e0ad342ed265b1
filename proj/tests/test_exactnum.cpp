#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinpoly/cyclotomic.hpp"
#include <random>

using namespace spinpoly;

namespace {

CycNum zeta(long N, long k = 1) { return CycNum::root_of_unity(N, k); }

CycNum random_value(std::mt19937& rng) {
  static const long conductors[] = {1, 2, 3, 4, 5, 6, 8, 12, 24};
  std::uniform_int_distribution<int> pick(0, 8);
  std::uniform_int_distribution<long> coef(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  long N = conductors[pick(rng)];
  long d = euler_phi(N);
  std::vector<Rat> c(d);
  for (long j = 0; j < d; ++j) c[j] = rat(coef(rng), den(rng));
  return CycNum::from_coeffs(N, std::move(c));
}

} // namespace

TEST_CASE("defining relations of the stock constants") {
  CHECK(CycNum::sqrt2() * CycNum::sqrt2() == 2);
  CHECK(CycNum::i() * CycNum::i() == -1);
  CHECK(zeta(3) + zeta(3, 2) == -1);
  CHECK(zeta(2) == -1);
  CHECK(zeta(4) == CycNum::i());
  CHECK(zeta(8) + zeta(8, 7) == CycNum::sqrt2());

  CycNum isqrt2 = (zeta(8) + zeta(8, 7)) * CycNum::i(); // i*sqrt(2)
  CHECK(isqrt2 * isqrt2 == -2);
}

TEST_CASE("roots of unity have exact order") {
  for (long N = 1; N <= 16; ++N) {
    CycNum z = zeta(N), p = CycNum::one();
    for (long k = 1; k < N; ++k) {
      p *= z;
      CHECK(p != 1);
    }
    p *= z;
    CHECK(p == 1);
  }
}

TEST_CASE("conjugation") {
  CHECK(CycNum::i().conjugate() == -CycNum::i());
  CHECK(CycNum::sqrt2().conjugate() == CycNum::sqrt2());
  CHECK(zeta(5).conjugate() == zeta(5, 4));

  std::mt19937 rng(20250819);
  for (int t = 0; t < 40; ++t) {
    CycNum a = random_value(rng), b = random_value(rng);
    CHECK(a.conjugate().conjugate() == a);
    CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
    CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());
  }
}

TEST_CASE("field axioms on random values") {
  std::mt19937 rng(68111);
  for (int t = 0; t < 40; ++t) {
    CycNum a = random_value(rng), b = random_value(rng), c = random_value(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == 0);
    if (!b.is_zero()) {
      CHECK(b * b.inverse() == 1);
      CHECK((a / b) * b == a);
    }
  }
}

TEST_CASE("promotion and minimal-conductor reduction round-trip") {
  std::mt19937 rng(424242);
  const std::pair<long, long> pairs[] = {{1, 8},  {2, 8},  {3, 12}, {4, 12},
                                         {6, 24}, {8, 24}, {12, 24}, {5, 15}};
  for (auto [N, M] : pairs) {
    long d = euler_phi(N);
    std::uniform_int_distribution<long> coef(-5, 5);
    for (int t = 0; t < 10; ++t) {
      std::vector<Rat> c(d);
      for (long j = 0; j < d; ++j) c[j] = rat(coef(rng), 1);
      CycNum a = CycNum::from_coeffs(N, std::move(c));
      CycNum up = a.promoted(M);
      CHECK(up == a);
      CycNum back = up.reduced();
      CHECK(back == a);
      CHECK(back.conductor() <= N);
    }
  }
  // A value whose minimal conductor is a strict divisor with the same degree.
  CycNum v = zeta(6); // lives in Q(zeta_3)
  CHECK(v.reduced().conductor() == 3);
  CHECK(v.reduced() == v);
  CHECK(zeta(6, 3).reduced().conductor() == 1); // -1
}

TEST_CASE("exact integer square roots via Gauss sums") {
  for (long m : {0L, 1L, 2L, 3L, 4L, 5L, 6L, 7L, 8L, 12L, 15L, 35L}) {
    CycNum s = CycNum::sqrt_int(m);
    CHECK(s * s == m);
  }
  CHECK(CycNum::sqrt_int(4) == 2);
  CHECK(CycNum::sqrt_int(8) == CycNum(2) * CycNum::sqrt2());
  // Positive square root: approx values must be positive reals.
  for (long m : {2L, 3L, 5L, 7L, 15L}) {
    auto z = CycNum::sqrt_int(m).approx();
    CHECK(z.real() > 0.0);
    CHECK(std::abs(z.imag()) < 1e-9);
  }
}

TEST_CASE("rationality predicates") {
  CHECK(CycNum(7).is_integer());
  CHECK(CycNum(rat(3, 2)).is_rational());
  CHECK(!CycNum(rat(3, 2)).is_integer());
  CHECK(!zeta(5).is_rational());
  CHECK((zeta(3) + zeta(3, 2)).promoted(3).is_rational()); // sums can collapse
  CHECK(zeta(4).pow(2) == -1);
  CHECK(zeta(12).pow(-1) == zeta(12, 11));
}
