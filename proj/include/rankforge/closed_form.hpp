#pragma once
// Closed-form inclusive frequency formulas per hand class, as piecewise-valid
// polynomials in the rank count r. Each formula is kept as a sum of audited
// product terms; the expanded polynomial and its leading term are derived
// from the terms once at startup.

#include <stdexcept>
#include <vector>

#include "rankforge/cards.hpp"
#include "rankforge/exact.hpp"

namespace rankforge {

// One multiplicand C(a*r + b, k) of a formula term.
struct BinomFactor {
  long a;
  long b;
  unsigned k;
};

struct FormulaTerm {
  Rat scale;                         // plain numeric factors (2, 4^5, 1/2, ...)
  std::vector<BinomFactor> factors;  // binomials in r
  bool asymptotic;                   // contributes the leading term

  Poly poly() const;
  Rat value_at(unsigned r) const;  // zero-convention binomials
};

struct FormulaEntry {
  HandClass cls;
  unsigned min_valid_r;  // below this the enumerator is authoritative
  std::vector<FormulaTerm> terms;
  Poly poly;            // sum of term polynomials, fully expanded
  Rat leading_coeff;
  int leading_degree;
};

// Thrown when a closed form is evaluated below its validity range.
class FormulaRangeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Formula (with expanded polynomial) for one class. HighCard is the trivial
// total C(4r,7).
const FormulaEntry& freq_formula(HandClass h);

unsigned formula_min_valid_r(HandClass h);

// Exact inclusive count of hands containing h in a deck with r ranks.
// Throws FormulaRangeError below min_valid_r ("use enumeration").
Int freq_closed(HandClass h, unsigned r);

}  // namespace rankforge
