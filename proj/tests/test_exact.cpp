#include <random>

#include "doctest.h"
#include "rankforge/exact.hpp"

using namespace rankforge;

TEST_SUITE_BEGIN("exact");

TEST_CASE("binomial coefficients") {
  CHECK(binom(52, 7) == Int("133784560"));
  CHECK(binom(36, 7) == Int("8347680"));
  CHECK(binom(3, 5) == 0);
  CHECK(binom(-2, 3) == 0);
  CHECK(binom(0, 0) == 1);
  CHECK_THROWS_AS((void)binom(5, -1), std::invalid_argument);
}

TEST_CASE("binom_poly matches binom on integers") {
  CHECK(binom_poly(1, 0, 1) == Poly::monomial(Rat(1), 1));
  CHECK(binom_poly(4, 0, 7).eval_integer(Int(13)) == Int("133784560"));
  CHECK(binom_poly(4, -4, 3).eval_integer(Int(13)) == binom(48, 3));
  CHECK(binom(48, 3) == 17296);

  for (long a : {1L, 3L, 4L}) {
    for (long b : {-7L, -4L, 0L, 2L}) {
      for (unsigned k = 0; k <= 7; ++k) {
        const Poly p = binom_poly(a, b, k);
        CHECK(p.degree() == static_cast<int>(k));
        for (long n = k; n <= static_cast<long>(k) + 50; ++n) {
          const long long arg = a * n + b;
          if (arg < static_cast<long long>(k)) continue;
          REQUIRE(p.eval_integer(Int(n)) == binom(arg, k));
        }
      }
    }
  }
}

TEST_CASE("polynomial ring laws on random degree-<=7 polynomials") {
  std::mt19937_64 rng(99);
  auto random_poly = [&]() {
    std::uniform_int_distribution<int> deg(0, 7), num(-20, 20), den(1, 9);
    std::vector<Rat> c(static_cast<size_t>(deg(rng)) + 1);
    for (auto& v : c) {
      v = Rat(num(rng), den(rng));
      v.canonicalize();  // mpq arithmetic assumes canonical operands
    }
    return Poly(std::move(c));
  };
  for (int i = 0; i < 300; ++i) {
    const Poly a = random_poly(), b = random_poly(), c = random_poly();
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE(a - a == Poly{});
  }
}

TEST_CASE("taylor shift") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(-9, 9);
  for (int i = 0; i < 200; ++i) {
    std::vector<Rat> c(8);
    for (auto& v : c) v = Rat(num(rng));
    const Poly p(std::move(c));
    const Int s = num(rng);
    const Poly q = p.shifted(s);
    for (long x = -5; x <= 5; ++x) {
      REQUIRE(q.eval(Rat(x)) == p.eval(Rat(x + s)));
    }
  }
}

TEST_CASE("sign permanence: positive linear polynomial") {
  const Poly p(std::vector<Rat>{Rat(-5), Rat(1)});  // r - 5
  const SignCertificate cert = certify_sign_permanence(p, Int(6));
  CHECK(cert.ok);
  CHECK(cert.sign == 1);
  CHECK(cert.method == SignCertificate::Method::ShiftedCoefficients);
}

TEST_CASE("sign permanence: detects sign changes with a witness") {
  // (r - 10)*(r - 20) is negative between the roots.
  const Poly p = Poly(std::vector<Rat>{Rat(-10), Rat(1)}) *
                 Poly(std::vector<Rat>{Rat(-20), Rat(1)});
  const SignCertificate bad = certify_sign_permanence(p, Int(5));
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.witness.has_value());
  CHECK(*bad.witness == 10);  // scan reaches the root first

  const SignCertificate good = certify_sign_permanence(p, Int(21));
  CHECK(good.ok);
  CHECK(good.sign == 1);
}

TEST_CASE("sign permanence: integer-scan fallback") {
  // (r - 3)^2 + tiny dip: shifted coefficients from 0 are mixed, but values
  // at integers >= 0 stay positive.
  const Poly p(std::vector<Rat>{Rat(5), Rat(-4), Rat(1)});  // r^2 - 4r + 5 > 0
  const SignCertificate cert = certify_sign_permanence(p, Int(0));
  CHECK(cert.ok);
  CHECK(cert.sign == 1);
  CHECK(cert.method == SignCertificate::Method::IntegerScan);
}

TEST_CASE("certified sign holds on a long integer stretch") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-6, 6);
  int certified = 0;
  for (int i = 0; i < 200; ++i) {
    std::vector<Rat> c(static_cast<size_t>(rng() % 7) + 1);
    for (auto& v : c) v = Rat(num(rng));
    const Poly p(std::move(c));
    if (p.is_zero()) continue;
    const Int x0 = static_cast<long>(rng() % 50);
    const SignCertificate cert = certify_sign_permanence(p, x0);
    if (!cert.ok) continue;
    ++certified;
    for (Int n = x0; n <= x0 + 1000; n += 37) {
      const Rat v = p.eval_int(n);
      if (cert.sign > 0) REQUIRE(v >= 0);
      if (cert.sign < 0) REQUIRE(v <= 0);
    }
  }
  CHECK(certified > 50);  // the property must actually exercise certificates
}

TEST_SUITE_END();
