#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "tlwb/errors.hpp"
#include "tlwb/logic_ops.hpp"
#include "tlwb/parse.hpp"
#include "tlwb/semantics.hpp"
#include "tlwb/separations.hpp"
#include "tlwb/ttl2mitl.hpp"

using namespace tlwb;

TEST_CASE("the lag-window family scales with rounds times constant") {
  Thm2Family fam = gen_thm2(2, 2);
  CHECK(fam.n == 4);
  CHECK(fam.a.size() == 6);  // a at 0..4 plus one c
  CHECK(fam.a.untime_joined() == "aaaaac");
  CHECK(fam.a.time(6) == Rational(2 * 4 + 5, 2));
  CHECK(fam.b.time(6) == Rational(2 * 4 + 3, 2));
  CHECK(lang_member(fam.b, fam.phi));
  CHECK(!lang_member(fam.a, fam.phi));
  CHECK(fam.game.rounds == 2);
  CHECK(fam.game.kind == IntervalFamilyKind::BInt);
  CHECK(fam.game.k == 2);
}

TEST_CASE("the punctual-echo family at n = 1 matches the hand construction") {
  Thm3Family fam = gen_thm3(1);
  // delta = 1/16, eps = 1/256; three a's, three c's, no zero anchor.
  REQUIRE(fam.a.size() == 6);
  REQUIRE(fam.b.size() == 6);
  Rational delta(1, 16), eps(1, 256);
  for (int i = 1; i <= 3; ++i) {
    CHECK(fam.a.time(i) == Rational(i) * delta);
    CHECK(fam.b.time(i) == Rational(i) * delta);
    CHECK(fam.a.letter(i) == "a");
    CHECK(fam.a.time(i + 3) == Rational(3) + Rational(i) * delta + eps);
    CHECK(fam.a.letter(i + 3) == "c");
  }
  // Word b drops the middle echo onto the exact punctual distance.
  CHECK(fam.b.time(5) == Rational(3) + Rational(2) * delta);
  CHECK(fam.b.time(4) == fam.a.time(4));
  CHECK(fam.b.time(6) == fam.a.time(6));
  CHECK(!fam.a.anchored_zero());
  CHECK(fam.cap == 5);  // ceil(3 + 3/16 + 1/256) + 1
  CHECK(lang_member(fam.b, fam.phi));
  CHECK(!lang_member(fam.a, fam.phi));
}

TEST_CASE("the punctual-echo words differ at exactly one timestamp") {
  for (long long n : {1, 2, 4}) {
    Thm3Family fam = gen_thm3(n);
    REQUIRE(fam.a.size() == fam.b.size());
    int diffs = 0;
    for (std::size_t i = 1; i <= fam.a.size(); ++i) {
      CHECK(fam.a.letter(i) == fam.b.letter(i));
      if (fam.a.time(i) != fam.b.time(i)) ++diffs;
    }
    CHECK(diffs == 1);
    CHECK(fam.game.kind == IntervalFamilyKind::ExtInt);
    CHECK(fam.game.k == fam.cap);
  }
}

TEST_CASE("the freeze-witness family passes its own integrality audit") {
  Thm5Family fam = gen_thm5(1, 1);
  CHECK(fam.m == 5);
  CHECK(fam.audit_retries == 0);  // the first offset schedule works
  REQUIRE(fam.a.size() == 16);    // anchor plus three events per segment
  REQUIRE(fam.b.size() == 16);
  for (const TimedWord* w : {&fam.a, &fam.b}) {
    CHECK(w->letter(1) == "a");
    CHECK(w->time(1) == Rational(0));
    CHECK(w->strictly_monotonic());
    for (std::size_t i = 1; i <= w->size(); ++i)
      for (std::size_t j = i + 1; j <= w->size(); ++j)
        CHECK(!(w->time(j) - w->time(i)).is_integer());
  }
  // This family points the separating formula at word a, not word b.
  CHECK(eval_tptl(fam.a, 1, Valuation{}, fam.phi));
  CHECK(!eval_tptl(fam.b, 1, Valuation{}, fam.phi));
}

TEST_CASE("the freeze-witness schedule stays irrational-like as it grows") {
  Thm5Family fam = gen_thm5(2, 1);
  CHECK(fam.m == 9);
  CHECK(fam.a.size() == 28);
  CHECK(eval_tptl(fam.a, 1, Valuation{}, fam.phi));
  CHECK(!eval_tptl(fam.b, 1, Valuation{}, fam.phi));
}

TEST_CASE("the deterministic-jump family reuses the punctual words") {
  TtlIFamily fam = gen_ttl_i(1);
  Thm3Family base = gen_thm3(2);
  CHECK(serialize_word(fam.w) == serialize_word(base.a));
  CHECK(serialize_word(fam.v) == serialize_word(base.b));
  CHECK(fam.w.untime_joined() == "aaaaaccccc");
  // The formula is metric, so membership needs no zero anchor.
  CHECK(!lang_member(fam.w, fam.phi));
  CHECK(lang_member(fam.v, fam.phi));
}

TEST_CASE("the protected band sits centered in each block") {
  // Block length 2n+3; the band keeps indices m+2 .. 2n+2-m of each block.
  CHECK(ttl_i_middle_band(1, 1) == std::vector<std::size_t>{3, 8});
  CHECK(ttl_i_middle_band(2, 1) ==
        std::vector<std::size_t>{3, 4, 5, 10, 11, 12});
  CHECK(ttl_i_middle_band(2, 2) == std::vector<std::size_t>{4, 11});
}

TEST_CASE("a trivially guarded jump reaches one position inside the block") {
  // X over (a,true) lands on position 2 from the start. Any band that
  // includes position 2, as one block-wide reading of the claim would,
  // is therefore reachable at modal depth 1; the protected band rightly
  // starts at index 3.
  TtlIFamily fam = gen_ttl_i(1);
  ttl::Ptr probe = parse_ttl("(X (ev a (tt)) (top))");
  std::set<std::size_t> reach = reach_set(fam.w, probe);
  CHECK(reach.count(2) == 1);
  std::vector<std::size_t> band = ttl_i_middle_band(1, 1);
  for (std::size_t pos : band) CHECK(reach.count(pos) == 0);
}

TEST_CASE("the alteration family shifts one echo per variant word") {
  TtlIIFamily fam = gen_ttl_ii(1);
  REQUIRE(fam.alts.size() == 2);
  REQUIRE(fam.w.size() == 10);  // five (a,c) pairs
  for (std::size_t p = 1; p <= 5; ++p) {
    CHECK(fam.w.letter(2 * p - 1) == "a");
    CHECK(fam.w.time(2 * p - 1) == Rational(2 * static_cast<long long>(p)));
    CHECK(fam.w.letter(2 * p) == "c");
    CHECK(fam.w.time(2 * p) ==
          Rational(4 * static_cast<long long>(p) + 1, 2));
  }
  // Variant j moves the c of pair 2j right by 7/10.
  CHECK(fam.alts[0].time(4) == Rational(26, 5));
  CHECK(fam.alts[1].time(8) == Rational(46, 5));
  for (const TimedWord& v : fam.alts) {
    CHECK(v.strictly_monotonic());
    CHECK(lang_member(v, fam.phi));
  }
  CHECK(!lang_member(fam.w, fam.phi));
}

TEST_CASE("degenerate word generators produce their classes") {
  TimedWord inst = gen_instantaneous(5, {"a", "b", "c"});
  REQUIRE(inst.size() == 5);
  CHECK(inst.untime_joined() == "abcab");
  for (std::size_t i = 1; i <= 5; ++i) CHECK(inst.time(i) == Rational(0));

  TimedWord unit = gen_unitary(3, {"a"});
  REQUIRE(unit.size() == 3);
  CHECK(unit.untime_joined() == "aaa");
  CHECK(unit.time(1) == Rational(1, 4));
  CHECK(unit.time(2) == Rational(1, 2));
  CHECK(unit.time(3) == Rational(3, 4));
  CHECK(unit.strictly_monotonic());
}

TEST_CASE("word sampling respects its stated bounds") {
  Rng rng(81);
  WordSampleOpts o;
  o.min_len = 2;
  o.max_len = 5;
  o.max_time = 3;
  o.denominator = 2;
  o.zero_anchored = true;
  for (int trial = 0; trial < 200; ++trial) {
    TimedWord w = sample_word(rng, o);
    CHECK(w.size() >= 2);
    CHECK(w.size() <= 5);
    CHECK(w.time(1) == Rational(0));
    CHECK(w.time(w.size()) <= Rational(3));
    for (std::size_t i = 1; i <= w.size(); ++i) {
      Rational scaled = w.time(i) * Rational(2);
      CHECK(scaled.is_integer());
      CHECK(std::find(o.letters.begin(), o.letters.end(), w.letter(i)) !=
            o.letters.end());
    }
  }

  o.zero_anchored = false;
  o.strictly_monotonic = true;
  for (int trial = 0; trial < 200; ++trial) {
    TimedWord w = sample_word(rng, o);
    CHECK(w.strictly_monotonic());
  }
}

TEST_CASE("word sampling rejects impossible requests") {
  Rng rng(82);
  WordSampleOpts empty;
  empty.letters.clear();
  CHECK_THROWS_AS(sample_word(rng, empty), DomainError);

  WordSampleOpts crossed;
  crossed.min_len = 4;
  crossed.max_len = 2;
  CHECK_THROWS_AS(sample_word(rng, crossed), DomainError);

  WordSampleOpts coarse;  // 3 grid points cannot host 8 distinct stamps
  coarse.min_len = 8;
  coarse.max_len = 8;
  coarse.max_time = 2;
  coarse.denominator = 1;
  coarse.strictly_monotonic = true;
  CHECK_THROWS_AS(sample_word(rng, coarse), DomainError);
}

TEST_CASE("formula sampling respects depth, count and constant bounds") {
  Rng rng(83);
  FormulaSampleOpts o;
  o.max_depth = 3;
  o.max_constant = 2;
  for (int trial = 0; trial < 200; ++trial) {
    mtl::Ptr f = sample_mtl(rng, o);
    CHECK(modal_depth(f) <= 3);
    CHECK(classify_formula(f).max_constant <= 2);
    tptl::Ptr g = sample_tptl(rng, o);
    CHECK(modal_depth(g) <= 3);
    ttl::Ptr h = sample_ttl(rng, o);
    CHECK(modal_depth(h) <= 3);
  }
}

TEST_CASE("the event-logic sampler hits exact depths and modal budgets") {
  Rng rng(84);
  FormulaSampleOpts o;
  for (int d = 0; d <= 4; ++d) {
    o.exact_depth = d;
    for (int trial = 0; trial < 60; ++trial)
      CHECK(modal_depth(sample_ttl(rng, o)) == d);
  }
  o.exact_depth = -1;
  o.max_depth = 4;
  o.max_count = 3;
  for (int trial = 0; trial < 120; ++trial)
    CHECK(modal_count(sample_ttl(rng, o)) <= 3);
}

TEST_CASE("fresh freeze variables are never bound twice") {
  Rng rng(85);
  FormulaSampleOpts o;
  o.max_depth = 4;
  o.max_freeze_vars = 3;
  o.fresh_freeze_vars = true;
  for (int trial = 0; trial < 150; ++trial) {
    ttl::Ptr f = sample_ttl(rng, o);
    std::vector<std::string> bound;
    for (const ttl::Ptr& node : subformulas(f))
      if (node->op == ttl::Op::Freeze) bound.push_back(node->var);
    std::sort(bound.begin(), bound.end());
    CHECK(std::adjacent_find(bound.begin(), bound.end()) == bound.end());
  }
}

TEST_CASE("the runner reports carry per-check verdicts and notes") {
  SeparationParams p;
  p.samples = 40;
  SeparationReport rep = run_separation(CaseId::Thm2, p);
  CHECK(rep.passed());
  CHECK(!rep.edge.empty());
  CHECK(rep.checks.size() >= 3);
  std::string plain = render_report(rep, false);
  CHECK(plain.find("PASS") != std::string::npos);
  CHECK(plain.find("case thm2") != std::string::npos);
  std::string porcelain = render_report(rep, true);
  CHECK(porcelain.find("check\tthm2\t") != std::string::npos);
  CHECK(porcelain.find("case\tthm2\tPASS") != std::string::npos);
}

TEST_CASE("the degenerate-class runners pass at reduced sample counts") {
  SeparationParams p;
  p.samples = 40;
  p.length = 5;
  CHECK(run_separation(CaseId::Instantaneous, p).passed());
  CHECK(run_separation(CaseId::Unitary, p).passed());
}

TEST_CASE("case names round-trip through the lookup") {
  for (CaseId id : all_cases()) {
    auto back = case_from_name(case_name(id));
    REQUIRE(back.has_value());
    CHECK(*back == id);
  }
  CHECK(!case_from_name("nonsense").has_value());
}
