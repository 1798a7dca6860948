#include "rankforge/exact.hpp"

#include <stdexcept>
#include <utility>

namespace rankforge {

Int binom(long long n, long long k) {
  if (k < 0) throw std::invalid_argument("binom: negative k");
  if (n < 0 || n < k) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Poly::Poly(Rat constant) {
  constant.canonicalize();  // mpq arithmetic assumes canonical operands
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  for (Rat& c : coeffs_) c.canonicalize();
  trim();
}

Poly Poly::monomial(Rat coeff, unsigned degree) {
  if (coeff == 0) return Poly{};
  std::vector<Rat> c(degree + 1, Rat(0));
  c[degree] = std::move(coeff);
  return Poly(std::move(c));
}

Rat Poly::coeff(unsigned i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rat(0);
}

const Rat& Poly::leading() const { return coeffs_.back(); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat Poly::eval_int(const Int& x) const { return eval(Rat(x)); }

Int Poly::eval_integer(const Int& x) const {
  Rat v = eval_int(x);
  v.canonicalize();
  if (v.get_den() != 1) throw std::domain_error("eval_integer: non-integral value " + v.get_str());
  return v.get_num();
}

Poly Poly::shifted(const Int& shift) const {
  if (is_zero()) return {};
  // Taylor shift by repeated synthetic division with root -shift.
  std::vector<Rat> work = coeffs_;
  std::vector<Rat> out(coeffs_.size(), Rat(0));
  const Rat s{shift};
  const size_t n = work.size();
  for (size_t j = 0; j < n; ++j) {
    for (size_t i = n - 1; i > j; --i) work[i - 1] += work[i] * s;
    out[j] = work[j];
  }
  return Poly(std::move(out));
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    const Rat& c = coeffs_[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    Rat mag = neg ? Rat(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = mag == 1 && i > 0;
    if (!unit) out += mag.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += "r";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Poly binom_poly(long a, long b, unsigned k) {
  // C(a*r + b, k) = (1/k!) * prod_{i=0}^{k-1} (a*r + b - i)
  Poly prod{Rat(1)};
  for (unsigned i = 0; i < k; ++i) {
    prod *= Poly(std::vector<Rat>{Rat(b - static_cast<long>(i)), Rat(a)});
  }
  Int kfact;
  mpz_fac_ui(kfact.get_mpz_t(), k);
  prod *= Rat(1, kfact);
  return prod;
}

const char* method_name(SignCertificate::Method m) {
  switch (m) {
    case SignCertificate::Method::ShiftedCoefficients:
      return "shifted-coefficients";
    case SignCertificate::Method::IntegerScan:
      return "integer-scan";
  }
  return "?";
}

namespace {
int sign_of(const Rat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
}  // namespace

SignCertificate certify_sign_permanence(const Poly& p, const Int& x0) {
  if (p.is_zero()) throw std::invalid_argument("certify_sign_permanence: zero polynomial");

  SignCertificate cert;

  // Shifted-coefficient test.
  const Poly q = p.shifted(x0);
  int sign = 0;
  bool mixed = false;
  for (const Rat& c : q.coeffs()) {
    const int s = sign_of(c);
    if (s == 0) continue;
    if (sign == 0) sign = s;
    else if (sign != s) {
      mixed = true;
      break;
    }
  }
  if (!mixed) {
    cert.ok = true;
    cert.method = SignCertificate::Method::ShiftedCoefficients;
    cert.sign = sign;
    cert.note = "all nonzero coefficients of p(x+" + Int(x0).get_str() + ") are " +
                (sign > 0 ? std::string("positive") : std::string("negative"));
    return cert;
  }

  // Fallback: every real root of p lies within the Cauchy bound, so checking
  // integers up to it settles the sign on all integers >= x0.
  const int deg = p.degree();
  Rat max_ratio(0);
  for (int i = 0; i < deg; ++i) {
    Rat ratio = abs(p.coeff(i) / p.leading());
    if (ratio > max_ratio) max_ratio = ratio;
  }
  Rat bound_q = max_ratio + 1;
  Int bound = bound_q.get_num() / bound_q.get_den() + 1;  // >= ceil(bound_q)
  if (bound < x0) bound = x0;

  const int lead_sign = sign_of(p.leading());
  int first_sign = 0;
  for (Int n = x0; n <= bound; ++n) {
    const int s = sign_of(p.eval_int(n));
    if (s == 0 || (first_sign != 0 && s != first_sign)) {
      cert.ok = false;
      cert.method = SignCertificate::Method::IntegerScan;
      cert.witness = n;
      cert.note = s == 0 ? "p vanishes at r=" + n.get_str()
                         : "sign change at r=" + n.get_str();
      return cert;
    }
    if (first_sign == 0) first_sign = s;
  }
  if (first_sign != lead_sign) {
    // Values flip somewhere past the scan otherwise, which the root bound
    // excludes; treat as a failed certificate with the bound as witness.
    cert.ok = false;
    cert.method = SignCertificate::Method::IntegerScan;
    cert.witness = bound;
    cert.note = "scanned sign disagrees with leading coefficient";
    return cert;
  }
  cert.ok = true;
  cert.method = SignCertificate::Method::IntegerScan;
  cert.sign = first_sign;
  cert.note = "integers " + Int(x0).get_str() + ".." + bound.get_str() +
              " all " + (first_sign > 0 ? std::string("positive") : std::string("negative")) +
              ", matching the leading coefficient";
  return cert;
}

}  // namespace rankforge
