#include "doctest.h"
#include "rankforge/rank_analysis.hpp"

using namespace rankforge;

namespace {

std::vector<std::string> groups_of(const Ranking& rk) {
  std::vector<std::string> out;
  std::string cur;
  for (unsigned pos = 0; pos < kNumClasses; ++pos) {
    const bool tie_with_prev =
        pos > 0 && rk.level[class_index(rk.order[pos])] == rk.level[class_index(rk.order[pos - 1])];
    if (pos == 0) {
      cur = class_name(rk.order[pos]);
    } else if (tie_with_prev) {
      cur += "=";
      cur += class_name(rk.order[pos]);
    } else {
      out.push_back(cur);
      cur = class_name(rk.order[pos]);
    }
  }
  out.push_back(cur);
  return out;
}

Enumerator& shared_enumerator() {
  static Enumerator en{[] {
    SweepOptions o;
    o.threads = 2;
    return o;
  }()};
  return en;
}

}  // namespace

TEST_SUITE_BEGIN("ranking");

TEST_CASE("ranking construction, ties, and equality semantics") {
  std::array<Int, kNumClasses> counts;
  counts[class_index(HandClass::HighCard)] = 100;
  counts[class_index(HandClass::OnePair)] = 90;
  counts[class_index(HandClass::TwoPair)] = 80;
  counts[class_index(HandClass::Trips)] = 70;
  counts[class_index(HandClass::Straight)] = 60;
  counts[class_index(HandClass::Flush)] = 50;   // tie
  counts[class_index(HandClass::FullHouse)] = 50;  // tie
  counts[class_index(HandClass::Quads)] = 20;
  counts[class_index(HandClass::StraightFlush)] = 10;
  const Ranking rk = Ranking::from_counts(counts);

  CHECK(rk.order[0] == HandClass::HighCard);
  CHECK(rk.order[8] == HandClass::StraightFlush);
  REQUIRE(rk.ties.size() == 1);
  CHECK(rk.ties[0] == std::vector<HandClass>{HandClass::Flush, HandClass::FullHouse});
  CHECK(rk.level[class_index(HandClass::Flush)] == rk.level[class_index(HandClass::FullHouse)]);

  // Equality ignores the internal order of a tie group.
  const Ranking same = Ranking::from_groups({{HandClass::HighCard},
                                             {HandClass::OnePair},
                                             {HandClass::TwoPair},
                                             {HandClass::Trips},
                                             {HandClass::Straight},
                                             {HandClass::FullHouse, HandClass::Flush},
                                             {HandClass::Quads},
                                             {HandClass::StraightFlush}});
  CHECK(rk.same_order(same));

  const Ranking swapped = Ranking::from_groups({{HandClass::HighCard},
                                                {HandClass::OnePair},
                                                {HandClass::TwoPair},
                                                {HandClass::Trips},
                                                {HandClass::Straight},
                                                {HandClass::Flush},
                                                {HandClass::FullHouse},
                                                {HandClass::Quads},
                                                {HandClass::StraightFlush}});
  CHECK_FALSE(rk.same_order(swapped));
  CHECK(rk.same_order_excluding(swapped, HandClass::Flush));
}

TEST_CASE("ranking file format round trips") {
  Enumerator& en = shared_enumerator();
  for (unsigned r : {5u, 9u, 13u}) {
    const Ranking rk = frequency_ranking(r, en);
    const Ranking back = Ranking::parse(rk.serialize());
    REQUIRE(back.same_order(rk));
  }
  CHECK_THROWS_AS((void)Ranking::parse("HC\n1P\n"), std::invalid_argument);
  CHECK_THROWS_AS((void)Ranking::parse("HC\nXX\n"), std::invalid_argument);
  const Ranking tied = Ranking::parse("HC\n1P\n2P\n3X\nFH\nST\n4X\nFL=SF\n");
  REQUIRE(tied.ties.size() == 1);
  CHECK(tied.ties[0] == std::vector<HandClass>{HandClass::Flush, HandClass::StraightFlush});
}

TEST_CASE("best class follows the ranking, ties resolve canonically") {
  Enumerator& en = shared_enumerator();
  const Ranking r13 = frequency_ranking(13, en);

  ClassSet p;
  p.add(HandClass::HighCard);
  p.add(HandClass::OnePair);
  p.add(HandClass::TwoPair);
  CHECK(r13.best(p) == HandClass::TwoPair);

  ClassSet only_hc;
  only_hc.add(HandClass::HighCard);
  CHECK(r13.best(only_hc) == HandClass::HighCard);

  const Ranking r9 = frequency_ranking(9, en);
  ClassSet q;
  q.add(HandClass::HighCard);
  q.add(HandClass::OnePair);
  q.add(HandClass::Trips);
  q.add(HandClass::FullHouse);
  CHECK(r9.best(q) == HandClass::FullHouse);

  // r=5: FL and SF tie; the later canonical class wins and the tie is flagged.
  const Ranking r5 = frequency_ranking(5, en);
  ClassSet fl_sf;
  fl_sf.add(HandClass::HighCard);
  fl_sf.add(HandClass::OnePair);
  fl_sf.add(HandClass::Straight);
  fl_sf.add(HandClass::Flush);
  fl_sf.add(HandClass::StraightFlush);
  bool tied = false;
  CHECK(r5.best(fl_sf, &tied) == HandClass::StraightFlush);
  CHECK(tied);
}

TEST_CASE("frequency rankings for reference decks") {
  Enumerator& en = shared_enumerator();
  CHECK(groups_of(frequency_ranking(13, en)) ==
        std::vector<std::string>{"HC", "1P", "2P", "3X", "ST", "FL", "FH", "4X", "SF"});
  CHECK(groups_of(frequency_ranking(9, en)) ==
        std::vector<std::string>{"HC", "1P", "2P", "3X", "ST", "FH", "FL", "4X", "SF"});
  // r=5 carries two exact ties: HC=1P (every hand is paired) and FL=SF.
  CHECK(groups_of(frequency_ranking(5, en)) ==
        std::vector<std::string>{"HC=1P", "2P", "3X", "FH", "ST", "4X", "FL=SF"});
}

TEST_CASE("breakpoint scan up to r=40 finds the early segment starts") {
  Enumerator& en = shared_enumerator();
  const BreakpointReport report = scan_breakpoints(5, 40, en);
  CHECK(report.starts() == std::vector<unsigned>{5, 6, 7, 8, 13, 15, 19, 36});
  CHECK(report.segments.back().r_high == 40);
  // The standard deck and r=14 share one ranking.
  CHECK(scan_breakpoints(13, 14, en).segments.size() == 1);
  // Closed-form path and enumeration path agree where they overlap.
  for (unsigned r = 8; r <= 14; ++r) {
    const Ranking closed = frequency_ranking(r, en);
    const Ranking enumerated = Ranking::from_counts(en.inclusive(r).counts);
    REQUIRE(closed.same_order(enumerated));
  }
}

TEST_CASE("high card and straight flush bound every ranking") {
  Enumerator& en = shared_enumerator();
  for (unsigned r = 5; r <= 2000; ++r) {
    const Ranking rk = frequency_ranking(r, en);
    REQUIRE(rk.level[class_index(HandClass::HighCard)] == 0);
    const uint8_t top = rk.level[class_index(rk.order[kNumClasses - 1])];
    REQUIRE(rk.level[class_index(HandClass::StraightFlush)] == top);
  }
}

TEST_CASE("stability certificates") {
  const StabilityReport at761 = certify_stability(761);
  CHECK(at761.ok());
  CHECK(at761.pairs.size() == 7);  // adjacent pairs over the eight non-HC classes
  for (const auto& p : at761.pairs) {
    CHECK(p.ok());
    CHECK(p.cert.method == SignCertificate::Method::ShiftedCoefficients);
  }

  const StabilityReport at760 = certify_stability(760);
  CHECK_FALSE(at760.ok());
  bool found_st_4x = false;
  for (const auto& p : at760.pairs) {
    if (!p.ok()) {
      found_st_4x = p.lower == HandClass::Straight && p.higher == HandClass::Quads;
      REQUIRE(p.cert.witness.has_value());
      CHECK(*p.cert.witness == 761);
    }
  }
  CHECK(found_st_4x);

  const StabilityReport fl_1p = certify_stability_pair(307, HandClass::Flush, HandClass::OnePair);
  CHECK(fl_1p.ok());
  REQUIRE(fl_1p.pairs.size() == 1);
  CHECK(fl_1p.pairs[0].lower == HandClass::Flush);  // flushes more common from 307 on

  const StabilityReport fl_1p_306 =
      certify_stability_pair(306, HandClass::Flush, HandClass::OnePair);
  CHECK_FALSE(fl_1p_306.ok());
  REQUIRE(fl_1p_306.pairs[0].cert.witness.has_value());
  CHECK(*fl_1p_306.pairs[0].cert.witness == 307);
}

TEST_CASE("difference polynomials certify with the expected signs") {
  // 1P - FL turns permanently negative at 307; 4X - ST permanently positive
  // at 761 (straights become the rarest class short of straight flushes).
  const Poly p1 = freq_formula(HandClass::OnePair).poly - freq_formula(HandClass::Flush).poly;
  const SignCertificate c1 = certify_sign_permanence(p1, Int(307));
  CHECK(c1.ok);
  CHECK(c1.sign == -1);

  const Poly p2 = freq_formula(HandClass::Quads).poly - freq_formula(HandClass::Straight).poly;
  const SignCertificate c2 = certify_sign_permanence(p2, Int(761));
  CHECK(c2.ok);
  CHECK(c2.sign == 1);

  const SignCertificate c3 = certify_sign_permanence(p2, Int(760));
  CHECK_FALSE(c3.ok);
}

TEST_CASE("showdown rankings for reference decks") {
  Enumerator& en = shared_enumerator();
  const Ranking sd9 = showdown_ranking(9, frequency_ranking(9, en), en);
  CHECK(groups_of(sd9) ==
        std::vector<std::string>{"2P", "1P", "ST", "FH", "3X", "HC", "FL", "4X", "SF"});

  const Ranking fr13 = frequency_ranking(13, en);
  const Ranking sd13 = showdown_ranking(13, fr13, en);
  CHECK(groups_of(sd13) ==
        std::vector<std::string>{"1P", "2P", "HC", "3X", "ST", "FL", "FH", "4X", "SF"});
  CHECK(sd13.same_order_excluding(fr13, HandClass::HighCard));
  CHECK_FALSE(sd13.same_order(fr13));
  CHECK(en.nothing_count(13) == Int("23294460"));  // hands declared as bare high card

  // Short-deck inversions: every two-pair contains a pair and every full
  // house contains trips, yet the rarer containee declares more often.
  auto count = [&](const Ranking& base, HandClass c) {
    return en.showdown(9, base).counts[class_index(c)];
  };
  const Ranking fr9 = frequency_ranking(9, en);
  CHECK(count(fr9, HandClass::OnePair) < count(fr9, HandClass::TwoPair));
  CHECK(count(fr9, HandClass::Trips) < count(fr9, HandClass::FullHouse));
}

TEST_CASE("recursive showdown iteration: r=13 first step moves only HC") {
  Enumerator& en = shared_enumerator();
  const Ranking base = frequency_ranking(13, en);
  const IterationResult res = iterate_showdown(13, base, kDefaultMaxIterations, en);
  REQUIRE(res.trajectory.size() >= 2);
  CHECK(res.trajectory[1].same_order_excluding(base, HandClass::HighCard));
  CHECK_FALSE(res.trajectory[1].same_order(base));
  CHECK(res.kind != IterationResult::Kind::NoConvergence);
}

TEST_CASE("recursive showdown iteration: some small deck alternates forever") {
  Enumerator& en = shared_enumerator();
  std::vector<unsigned> two_cycles;
  for (unsigned r = 5; r <= 12; ++r) {
    const IterationResult res =
        iterate_showdown(r, frequency_ranking(r, en), kDefaultMaxIterations, en);
    REQUIRE(res.kind != IterationResult::Kind::NoConvergence);
    if (res.kind == IterationResult::Kind::Cycle && res.cycle_length == 2)
      two_cycles.push_back(r);
  }
  CHECK(!two_cycles.empty());
  std::string msg = "2-cycles at r =";
  for (unsigned r : two_cycles) msg += " " + std::to_string(r);
  MESSAGE(msg);
}

TEST_CASE("no deck below r=10 matches frequency and showdown rankings") {
  Enumerator& en = shared_enumerator();
  CHECK(find_min_agreement(false, 9, en) == std::nullopt);
  CHECK(find_min_agreement(true, 9, en) == std::nullopt);
}

TEST_SUITE_END();
