#include "rankforge/closed_form.hpp"

#include <array>
#include <cassert>
#include <string>

namespace rankforge {

Poly FormulaTerm::poly() const {
  Poly p{scale};
  for (const BinomFactor& f : factors) p *= binom_poly(f.a, f.b, f.k);
  return p;
}

Rat FormulaTerm::value_at(unsigned r) const {
  Rat v = scale;
  for (const BinomFactor& f : factors) {
    v *= Rat(binom(f.a * static_cast<long long>(r) + f.b, f.k));
    if (v == 0) return v;
  }
  return v;
}

namespace {

constexpr bool kBold = true;
constexpr bool kRest = false;

FormulaTerm term(Rat scale, std::vector<BinomFactor> factors, bool asymptotic) {
  return FormulaTerm{std::move(scale), std::move(factors), asymptotic};
}

// Straight flushes, valid from r = 6 (at r = 5 the two extremal windows
// coincide). Five-card windows split into r-5 interior and 2 extremal
// positions; longer same-suit runs are counted once via the 6- and 7-card
// corrections.
FormulaEntry make_sf() {
  FormulaEntry e{HandClass::StraightFlush, 6, {}, {}, Rat(0), 0};
  // C(4,1) C(2,1) C(4r-6,2)
  e.terms.push_back(term(Rat(4) * 2, {{4, -6, 2}}, kRest));
  // C(4,1) C(r-5,1) C(4r-7,2)
  e.terms.push_back(term(Rat(4), {{1, -5, 1}, {4, -7, 2}}, kBold));
  // C(4,1) C(2,1) C(4r-7,1)
  e.terms.push_back(term(Rat(4) * 2, {{4, -7, 1}}, kRest));
  // C(4,1) C(r-6,1) C(4r-8,1)
  e.terms.push_back(term(Rat(4), {{1, -6, 1}, {4, -8, 1}}, kRest));
  // C(4,1) C(r-5,1)
  e.terms.push_back(term(Rat(4), {{1, -5, 1}}, kRest));
  return e;
}

// Straights, valid from r = 8. Terms are grouped by the straight's window
// (interior vs extremal) and by how the two spare cards repeat window ranks.
FormulaEntry make_st() {
  FormulaEntry e{HandClass::Straight, 8, {}, {}, Rat(0), 0};
  const Rat p4_3 = 64, p4_4 = 256, p4_5 = 1024, p4_6 = 4096, p4_7 = 16384;
  // C(r-5,1) 4^5 C(4r-28,2)
  e.terms.push_back(term(p4_5, {{1, -5, 1}, {4, -28, 2}}, kBold));
  // C(2,1) 4^5 C(4r-24,2)
  e.terms.push_back(term(Rat(2) * p4_5, {{4, -24, 2}}, kRest));
  // C(r-5,1) C(5,1) C(4,2) 4^4 C(4r-28,1)
  e.terms.push_back(term(Rat(5) * 6 * p4_4, {{1, -5, 1}, {4, -28, 1}}, kRest));
  // C(2,1) C(5,1) C(4,2) 4^4 C(4r-24,1)
  e.terms.push_back(term(Rat(2) * 5 * 6 * p4_4, {{4, -24, 1}}, kRest));
  // C(r-5,1) C(5,2) C(4,2)^2 4^3
  e.terms.push_back(term(Rat(10) * 36 * p4_3, {{1, -5, 1}}, kRest));
  // C(2,1) C(5,2) C(4,2)^2 4^3
  e.terms.push_back(term(Rat(2) * 10 * 36 * p4_3, {}, kRest));
  // C(r-3,1) C(5,1) C(4,3) 4^4
  e.terms.push_back(term(Rat(5) * 4 * p4_4, {{1, -3, 1}}, kRest));
  // C(r-6,1) 4^6 C(4r-32,1)
  e.terms.push_back(term(p4_6, {{1, -6, 1}, {4, -32, 1}}, kRest));
  // C(2,1) 4^6 C(4r-28,1)
  e.terms.push_back(term(Rat(2) * p4_6, {{4, -28, 1}}, kRest));
  // C(r-6,1) C(6,1) C(4,2) 4^5
  e.terms.push_back(term(Rat(6) * 6 * p4_5, {{1, -6, 1}}, kRest));
  // C(2,1) C(6,1) C(4,2) 4^5
  e.terms.push_back(term(Rat(2) * 6 * 6 * p4_5, {}, kRest));
  // C(r-7,1) 4^7
  e.terms.push_back(term(p4_7, {{1, -7, 1}}, kRest));
  // C(2,1) 4^7
  e.terms.push_back(term(Rat(2) * p4_7, {}, kRest));
  return e;
}

FormulaEntry make_quads() {
  FormulaEntry e{HandClass::Quads, 5, {}, {}, Rat(0), 0};
  // C(r,1) C(4r-4,3)
  e.terms.push_back(term(Rat(1), {{1, 0, 1}, {4, -4, 3}}, kBold));
  return e;
}

// Full houses, one term per rank-multiset containing {3,2}: quad+pair+kicker,
// trip+trip+kicker, trip+pair+pair, trip+pair+2 kickers, quad+trip. The 1/2
// factors absorb unordered choices of same-role ranks and cancel at integers.
FormulaEntry make_fh() {
  FormulaEntry e{HandClass::FullHouse, 5, {}, {}, Rat(0), 0};
  // C(r,1) C(r-1,1) C(4,2) C(r-2,1) C(4,1)
  e.terms.push_back(term(Rat(6) * 4, {{1, 0, 1}, {1, -1, 1}, {1, -2, 1}}, kRest));
  // 1/2 C(r,1) C(4,3) C(r-1,1) C(4,3) C(r-2,1) C(4,1)
  e.terms.push_back(term(Rat(1, 2) * 4 * 4 * 4, {{1, 0, 1}, {1, -1, 1}, {1, -2, 1}}, kRest));
  // 1/2 C(r,1) C(4,3) C(r-1,1) C(4,2) C(r-2,1) C(4,2)
  e.terms.push_back(term(Rat(1, 2) * 4 * 6 * 6, {{1, 0, 1}, {1, -1, 1}, {1, -2, 1}}, kRest));
  // 1/2 C(r,1) C(4,3) C(r-1,1) C(4,2) C(r-2,1) C(4,1) C(r-3,1) C(4,1)
  e.terms.push_back(
      term(Rat(1, 2) * 4 * 6 * 4 * 4, {{1, 0, 1}, {1, -1, 1}, {1, -2, 1}, {1, -3, 1}}, kBold));
  // C(r,1) C(r-1,1) C(4,3)
  e.terms.push_back(term(Rat(4), {{1, 0, 1}, {1, -1, 1}}, kRest));
  return e;
}

// Trips, one term per rank-multiset with a rank of multiplicity >= 3:
// {4,3}, {3,3,1}, {3,2,1,1}, {3,2,2}, {3,1,1,1,1}, {4,2,1}, {4,1,1,1}.
FormulaEntry make_trips() {
  FormulaEntry e{HandClass::Trips, 5, {}, {}, Rat(0), 0};
  // 2 C(r,2) C(4,3)
  e.terms.push_back(term(Rat(2) * 4, {{1, 0, 2}}, kRest));
  // C(r,3) C(3,1) C(4,3) C(4,3) C(4,1)
  e.terms.push_back(term(Rat(3) * 4 * 4 * 4, {{1, 0, 3}}, kRest));
  // C(r,4) C(4,2) C(2,1) C(4,3) C(4,2) C(4,1) C(4,1)
  e.terms.push_back(term(Rat(6) * 2 * 4 * 6 * 4 * 4, {{1, 0, 4}}, kRest));
  // C(r,3) C(3,1) C(4,3) C(4,2) C(4,2)
  e.terms.push_back(term(Rat(3) * 4 * 6 * 6, {{1, 0, 3}}, kRest));
  // C(r,5) C(5,1) 4^5
  e.terms.push_back(term(Rat(5) * 1024, {{1, 0, 5}}, kBold));
  // 6 C(r,3) C(4,2) C(4,1)
  e.terms.push_back(term(Rat(6) * 6 * 4, {{1, 0, 3}}, kRest));
  // C(r,4) C(4,1) 4^3
  e.terms.push_back(term(Rat(4) * 64, {{1, 0, 4}}, kRest));
  return e;
}

// Two pair: the trips multisets other than {3,1,1,1,1}, plus {2,2,2,1} and
// {2,2,1,1,1}. A bare quad counts as two pair.
FormulaEntry make_two_pair() {
  FormulaEntry e{HandClass::TwoPair, 5, {}, {}, Rat(0), 0};
  // 2 C(r,2) C(4,3)
  e.terms.push_back(term(Rat(2) * 4, {{1, 0, 2}}, kRest));
  // C(r,3) C(3,1) C(4,3) C(4,3) C(4,1)
  e.terms.push_back(term(Rat(3) * 4 * 4 * 4, {{1, 0, 3}}, kRest));
  // C(r,4) C(4,2) C(2,1) C(4,3) C(4,2) C(4,1) C(4,1)
  e.terms.push_back(term(Rat(6) * 2 * 4 * 6 * 4 * 4, {{1, 0, 4}}, kRest));
  // C(r,3) C(3,1) C(4,3) C(4,2) C(4,2)
  e.terms.push_back(term(Rat(3) * 4 * 6 * 6, {{1, 0, 3}}, kRest));
  // 6 C(r,3) C(4,2) C(4,1)
  e.terms.push_back(term(Rat(6) * 6 * 4, {{1, 0, 3}}, kRest));
  // C(r,4) C(4,1) 4^3
  e.terms.push_back(term(Rat(4) * 64, {{1, 0, 4}}, kRest));
  // C(r,4) C(4,1) C(4,2)^3 C(4,1)
  e.terms.push_back(term(Rat(4) * 216 * 4, {{1, 0, 4}}, kRest));
  // C(r,5) C(5,2) C(4,2)^2 C(4,1)^3
  e.terms.push_back(term(Rat(10) * 36 * 64, {{1, 0, 5}}, kBold));
  return e;
}

FormulaEntry make_one_pair() {
  FormulaEntry e{HandClass::OnePair, 5, {}, {}, Rat(0), 0};
  // C(4r,7) - 4^7 C(r,7): every hand minus the rank-distinct ones. The r^7
  // terms cancel, leaving degree 6.
  e.terms.push_back(term(Rat(1), {{4, 0, 7}}, kBold));
  e.terms.push_back(term(Rat(-16384), {{1, 0, 7}}, kBold));
  return e;
}

// Flushes partitioned by 5, 6, or 7 cards in the flush suit.
FormulaEntry make_flush() {
  FormulaEntry e{HandClass::Flush, 5, {}, {}, Rat(0), 0};
  // C(4,1) C(r,5) C(3r,2)
  e.terms.push_back(term(Rat(4), {{1, 0, 5}, {3, 0, 2}}, kBold));
  // C(4,1) C(r,6) C(3r,1)
  e.terms.push_back(term(Rat(4), {{1, 0, 6}, {3, 0, 1}}, kBold));
  // C(4,1) C(r,7)
  e.terms.push_back(term(Rat(4), {{1, 0, 7}}, kBold));
  return e;
}

FormulaEntry make_high_card() {
  FormulaEntry e{HandClass::HighCard, 5, {}, {}, Rat(0), 0};
  // C(4r,7): every hand has a high card.
  e.terms.push_back(term(Rat(1), {{4, 0, 7}}, kBold));
  return e;
}

FormulaEntry finish(FormulaEntry e) {
  Poly sum;
  for (const FormulaTerm& t : e.terms) sum += t.poly();
  e.poly = std::move(sum);
  assert(!e.poly.is_zero());
  e.leading_coeff = e.poly.leading();
  e.leading_degree = e.poly.degree();
  return e;
}

const std::array<FormulaEntry, kNumClasses>& table() {
  static const std::array<FormulaEntry, kNumClasses> t = [] {
    std::array<FormulaEntry, kNumClasses> a{};
    a[class_index(HandClass::HighCard)] = finish(make_high_card());
    a[class_index(HandClass::OnePair)] = finish(make_one_pair());
    a[class_index(HandClass::TwoPair)] = finish(make_two_pair());
    a[class_index(HandClass::Trips)] = finish(make_trips());
    a[class_index(HandClass::Straight)] = finish(make_st());
    a[class_index(HandClass::Flush)] = finish(make_flush());
    a[class_index(HandClass::FullHouse)] = finish(make_fh());
    a[class_index(HandClass::Quads)] = finish(make_quads());
    a[class_index(HandClass::StraightFlush)] = finish(make_sf());
    return a;
  }();
  return t;
}

}  // namespace

const FormulaEntry& freq_formula(HandClass h) { return table()[class_index(h)]; }

unsigned formula_min_valid_r(HandClass h) { return freq_formula(h).min_valid_r; }

Int freq_closed(HandClass h, unsigned r) {
  const FormulaEntry& e = freq_formula(h);
  if (r < e.min_valid_r) {
    throw FormulaRangeError(std::string("freq_closed: no closed form for ") +
                            std::string(class_name(h)) + " at r=" + std::to_string(r) +
                            "; use enumeration");
  }
  Rat sum(0);
  for (const FormulaTerm& t : e.terms) sum += t.value_at(r);
  sum.canonicalize();
  if (sum.get_den() != 1)
    throw std::logic_error("freq_closed: non-integral total for " + std::string(class_name(h)));
  return sum.get_num();
}

}  // namespace rankforge
