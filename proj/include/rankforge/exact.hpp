#pragma once
// Exact arithmetic: arbitrary-precision integers and rationals (GMP), small
// dense polynomials with rational coefficients, and sign-permanence
// certificates for polynomial differences. No floating point anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rankforge {

using Int = mpz_class;
using Rat = mpq_class;

// Binomial coefficient with the zero convention: 0 when n < 0 or n < k.
// Negative k is rejected.
Int binom(long long n, long long k);

// Dense polynomial in one variable over the rationals. Degree stays small
// (<= 7 throughout this codebase) so naive arithmetic is exact and fast.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rat constant);
  explicit Poly(std::vector<Rat> coeffs);  // coeffs[i] multiplies x^i

  static Poly monomial(Rat coeff, unsigned degree);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  Rat coeff(unsigned i) const;
  const Rat& leading() const;  // undefined on the zero polynomial
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  Rat eval(const Rat& x) const;
  Rat eval_int(const Int& x) const;
  // Evaluation that must land on an integer; throws std::domain_error if not.
  Int eval_integer(const Int& x) const;

  // p(x + shift), computed by iterated synthetic division (exact).
  Poly shifted(const Int& shift) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;  // e.g. "32*r^3 - 5*r + 1/2"

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

// The degree-k polynomial p with p(r) = C(a*r + b, k) whenever a*r + b >= 0.
Poly binom_poly(long a, long b, unsigned k);

// Certificate that a polynomial keeps one sign from x0 on.
//
// Primary criterion: expand p(x + x0); if every nonzero coefficient shares one
// sign, p has that sign for all real x >= x0 (strictly, for x > x0 when
// p(x0) == 0). Fallback: all real roots lie below the Cauchy bound
// B = 1 + max|a_i/a_d|, so scanning integers x0..ceil(B) certifies one sign on
// every integer >= x0.
struct SignCertificate {
  enum class Method { ShiftedCoefficients, IntegerScan };
  bool ok = false;
  Method method = Method::ShiftedCoefficients;
  int sign = 0;                          // +1 or -1 when ok
  std::optional<Int> witness;            // first violating integer >= x0 when !ok
  std::string note;
};

SignCertificate certify_sign_permanence(const Poly& p, const Int& x0);

const char* method_name(SignCertificate::Method m);

}  // namespace rankforge
