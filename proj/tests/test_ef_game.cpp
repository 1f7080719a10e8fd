#include <doctest.h>

#include <string>
#include <vector>

#include "tlwb/ef_game.hpp"
#include "tlwb/errors.hpp"
#include "tlwb/logic_ops.hpp"
#include "tlwb/parse.hpp"
#include "tlwb/semantics.hpp"
#include "tlwb/separations.hpp"
#include "testutil.hpp"

using namespace tlwb;

namespace {

std::vector<std::string> menu_strs(const IntervalMenu& m) {
  std::vector<std::string> out;
  for (const Interval& i : m.intervals) out.push_back(i.str());
  return out;
}

}  // namespace

TEST_CASE("menus enumerate their families in the documented order") {
  CHECK(menu_strs(build_menu(IntervalFamilyKind::BInt, 1)) ==
        std::vector<std::string>{"[0,0]", "[0,1]", "(0,1)", "[0,1)", "(0,1]",
                                 "[1,1]"});
  CHECK(menu_strs(build_menu(IntervalFamilyKind::Int, 0)) ==
        std::vector<std::string>{"[0,0]", "[0,inf)", "(0,inf)"});
  CHECK(menu_strs(build_menu(IntervalFamilyKind::ExtInt, 1)) ==
        std::vector<std::string>{"[0,1]", "(0,1)", "[0,1)", "(0,1]", "[0,inf)",
                                 "(0,inf)", "[1,inf)", "(1,inf)"});
  CHECK(menu_strs(build_menu(IntervalFamilyKind::BExtInt, 1)) ==
        std::vector<std::string>{"[0,1]", "(0,1)", "[0,1)", "(0,1]"});
}

TEST_CASE("menu sizes follow the family combinatorics") {
  // k+1 singletons, 4 bounded shapes per endpoint pair, 2(k+1) unbounded.
  CHECK(build_menu(IntervalFamilyKind::Int, 2).intervals.size() == 21);
  CHECK(build_menu(IntervalFamilyKind::BInt, 2).intervals.size() == 15);
  CHECK(build_menu(IntervalFamilyKind::ExtInt, 2).intervals.size() == 18);
  CHECK(build_menu(IntervalFamilyKind::BExtInt, 2).intervals.size() == 12);
}

TEST_CASE("identical words favour the duplicator at any round count") {
  TimedWord w = parse_word("a 0\nb 1\na 5/2\n");
  IntervalMenu menu = build_menu(IntervalFamilyKind::Int, 3);
  for (int rounds : {0, 1, 2, 3}) {
    GameOutcome out =
        duplicator_wins(w, w, 1, 1, rounds, menu, GameVariant::US);
    CHECK(out.winner == Winner::Duplicator);
    CHECK(replay_trace(w, w, 1, 1, rounds, menu, GameVariant::US, out) == "");
  }
}

TEST_CASE("zero rounds compare only the letters under the pebbles") {
  TimedWord wa = parse_word("a 0\n");
  TimedWord wb = parse_word("b 0\n");
  IntervalMenu menu = build_menu(IntervalFamilyKind::Int, 1);
  GameOutcome out = duplicator_wins(wa, wb, 1, 1, 0, menu, GameVariant::US);
  CHECK(out.winner == Winner::Spoiler);
  CHECK(out.trace.empty());
  CHECK(replay_trace(wa, wb, 1, 1, 0, menu, GameVariant::US, out) == "");

  TimedWord wa2 = parse_word("a 5\n");
  GameOutcome tie = duplicator_wins(wa, wa2, 1, 1, 0, menu, GameVariant::US);
  CHECK(tie.winner == Winner::Duplicator);  // timestamps are invisible
}

TEST_CASE("a distance the menu cannot express is no help to the spoiler") {
  TimedWord w0 = parse_word("a 0\nb 1\n");
  TimedWord w1 = parse_word("a 0\nb 2\n");
  // With [1,1] on the menu the spoiler pins the different lags down.
  GameOutcome sharp =
      duplicator_wins(w0, w1, 1, 1, 1, build_menu(IntervalFamilyKind::Int, 1),
                      GameVariant::US);
  CHECK(sharp.winner == Winner::Spoiler);
  // A menu of just [0,0] offers no legal move toward either b.
  GameOutcome blunt =
      duplicator_wins(w0, w1, 1, 1, 1, build_menu(IntervalFamilyKind::BInt, 0),
                      GameVariant::US);
  CHECK(blunt.winner == Winner::Duplicator);
}

TEST_CASE("the cap flag reports whether k clears the last timestamp") {
  TimedWord w0 = parse_word("a 0\nb 7/2\n");
  TimedWord w1 = parse_word("a 0\nb 7/2\n");
  auto play = [&](long long k) {
    return duplicator_wins(w0, w1, 1, 1, 1,
                           build_menu(IntervalFamilyKind::Int, k),
                           GameVariant::US);
  };
  CHECK(play(4).menu_cap_ok);   // 4 > 7/2
  CHECK(!play(3).menu_cap_ok);  // 3 < 7/2
}

TEST_CASE("the first family separation word pair matches the small example") {
  Thm2Family fam = gen_thm2(1, 1);
  CHECK(serialize_word(fam.a) == "a 0/1\na 1/1\nc 7/2\n");
  CHECK(serialize_word(fam.b) == "a 0/1\na 1/1\nc 5/2\n");
  CHECK(lang_member(fam.b, fam.phi));
  CHECK(!lang_member(fam.a, fam.phi));
  IntervalMenu menu = build_menu(fam.game.kind, fam.game.k);
  GameOutcome out = duplicator_wins(fam.a, fam.b, 1, 1, fam.game.rounds, menu,
                                    fam.game.variant);
  CHECK(out.winner == Winner::Duplicator);
  CHECK(replay_trace(fam.a, fam.b, 1, 1, fam.game.rounds, menu,
                     fam.game.variant, out) == "");
}

TEST_CASE("swapping the words never changes the winner") {
  testutil::Rng rng(51);
  testutil::WordOpts wo;
  wo.max_len = 5;
  IntervalMenu menu = build_menu(IntervalFamilyKind::Int, 2);
  for (int trial = 0; trial < 120; ++trial) {
    TimedWord w0 = testutil::random_word(rng, wo);
    TimedWord w1 = testutil::random_word(rng, wo);
    int rounds = testutil::pick(rng, 0, 2);
    GameVariant variant =
        testutil::pick(rng, 0, 1) ? GameVariant::US : GameVariant::FP;
    CHECK(duplicator_wins(w0, w1, 1, 1, rounds, menu, variant).winner ==
          duplicator_wins(w1, w0, 1, 1, rounds, menu, variant).winner);
  }
}

TEST_CASE("a duplicator win at r rounds implies one at fewer rounds") {
  testutil::Rng rng(52);
  testutil::WordOpts wo;
  wo.max_len = 5;
  IntervalMenu menu = build_menu(IntervalFamilyKind::Int, 2);
  for (int trial = 0; trial < 120; ++trial) {
    TimedWord w0 = testutil::random_word(rng, wo);
    TimedWord w1 = testutil::random_word(rng, wo);
    GameVariant variant =
        testutil::pick(rng, 0, 1) ? GameVariant::US : GameVariant::FP;
    bool dup3 =
        duplicator_wins(w0, w1, 1, 1, 3, menu, variant).winner ==
        Winner::Duplicator;
    bool dup2 =
        duplicator_wins(w0, w1, 1, 1, 2, menu, variant).winner ==
        Winner::Duplicator;
    bool dup1 =
        duplicator_wins(w0, w1, 1, 1, 1, menu, variant).winner ==
        Winner::Duplicator;
    if (dup3) CHECK(dup2);
    if (dup2) CHECK(dup1);
  }
}

TEST_CASE("an fp win for the spoiler is also a us win") {
  // The us spoiler has strictly more moves, so fp-spoiler wins carry over.
  testutil::Rng rng(53);
  testutil::WordOpts wo;
  wo.max_len = 5;
  IntervalMenu menu = build_menu(IntervalFamilyKind::Int, 2);
  for (int trial = 0; trial < 120; ++trial) {
    TimedWord w0 = testutil::random_word(rng, wo);
    TimedWord w1 = testutil::random_word(rng, wo);
    int rounds = testutil::pick(rng, 1, 2);
    bool fp_spoiler =
        duplicator_wins(w0, w1, 1, 1, rounds, menu, GameVariant::FP).winner ==
        Winner::Spoiler;
    if (fp_spoiler)
      CHECK(duplicator_wins(w0, w1, 1, 1, rounds, menu, GameVariant::US)
                .winner == Winner::Spoiler);
  }
}

TEST_CASE("principal variations replay cleanly on random instances") {
  testutil::Rng rng(54);
  testutil::WordOpts wo;
  wo.max_len = 5;
  for (int trial = 0; trial < 200; ++trial) {
    TimedWord w0 = testutil::random_word(rng, wo);
    TimedWord w1 = testutil::random_word(rng, wo);
    int rounds = testutil::pick(rng, 0, 2);
    IntervalMenu menu = build_menu(
        testutil::pick(rng, 0, 1) ? IntervalFamilyKind::Int
                                  : IntervalFamilyKind::BInt,
        testutil::pick(rng, 0, 2));
    GameVariant variant =
        testutil::pick(rng, 0, 1) ? GameVariant::US : GameVariant::FP;
    GameOutcome out = duplicator_wins(w0, w1, 1, 1, rounds, menu, variant);
    CHECK(replay_trace(w0, w1, 1, 1, rounds, menu, variant, out) == "");
  }
}

TEST_CASE("replay rejects tampered traces") {
  TimedWord w0 = parse_word("a 0\nb 1\n");
  TimedWord w1 = parse_word("a 0\nb 2\n");
  IntervalMenu menu = build_menu(IntervalFamilyKind::Int, 1);
  GameOutcome out = duplicator_wins(w0, w1, 1, 1, 1, menu, GameVariant::US);
  REQUIRE(out.winner == Winner::Spoiler);
  REQUIRE(!out.trace.empty());
  GameOutcome bent = out;
  bent.trace[0].spoiler_to = 1;  // retarget the move onto the current pebble
  CHECK(replay_trace(w0, w1, 1, 1, 1, menu, GameVariant::US, bent) != "");
  GameOutcome flipped = out;
  flipped.winner = Winner::Duplicator;
  CHECK(replay_trace(w0, w1, 1, 1, 1, menu, GameVariant::US, flipped) != "");
}

TEST_CASE("oversized inputs are refused rather than mis-solved") {
  std::vector<Event> evs;
  for (int i = 0; i < 65; ++i) evs.push_back({"a", Rational(i)});
  TimedWord big = TimedWord::from_events(std::move(evs));
  TimedWord tiny = parse_word("a 0\n");
  IntervalMenu menu = build_menu(IntervalFamilyKind::Int, 1);
  CHECK_THROWS_AS(
      duplicator_wins(big, tiny, 1, 1, 1, menu, GameVariant::US),
      CapExceeded);
  // Int at k = 11 has 300 intervals, past the 256-interval menu cap.
  CHECK_THROWS_AS(duplicator_wins(tiny, tiny, 1, 1, 1,
                                  build_menu(IntervalFamilyKind::Int, 11),
                                  GameVariant::US),
                  CapExceeded);
}

TEST_CASE("signatures call identical words equivalent and produce witnesses") {
  TimedWord w0 = parse_word("a 0\nb 1\n");
  IntervalMenu menu = build_menu(IntervalFamilyKind::Int, 1);
  SignatureResult same =
      signature_equivalence(w0, w0, 2, menu, GameVariant::US);
  CHECK(same.equivalent);
  CHECK(same.witness == nullptr);

  TimedWord w1 = parse_word("b 0\nb 1\n");
  SignatureResult diff =
      signature_equivalence(w0, w1, 0, menu, GameVariant::US);
  CHECK(!diff.equivalent);
  REQUIRE(diff.witness != nullptr);
  CHECK(eval_mtl(w0, 1, diff.witness) != eval_mtl(w1, 1, diff.witness));
}

TEST_CASE("signature witnesses respect the queried depth and distinguish") {
  testutil::Rng rng(55);
  testutil::WordOpts wo;
  wo.max_len = 4;
  IntervalMenu menu = build_menu(IntervalFamilyKind::BInt, 1);
  for (int trial = 0; trial < 60; ++trial) {
    TimedWord w0 = testutil::random_word(rng, wo);
    TimedWord w1 = testutil::random_word(rng, wo);
    int depth = testutil::pick(rng, 0, 2);
    SignatureResult r =
        signature_equivalence(w0, w1, depth, menu, GameVariant::US);
    if (!r.equivalent) {
      REQUIRE(r.witness != nullptr);
      CHECK(modal_depth(r.witness) <= depth);
      CHECK(eval_mtl(w0, 1, r.witness) != eval_mtl(w1, 1, r.witness));
    }
  }
}

TEST_CASE("game and signature verdicts coincide on random instances") {
  testutil::Rng rng(56);
  testutil::WordOpts wo;
  wo.max_len = 5;
  std::size_t in_cap = 0;
  for (int trial = 0; trial < 100; ++trial) {
    TimedWord w0 = testutil::random_word(rng, wo);
    TimedWord w1 = testutil::random_word(rng, wo);
    int rounds = testutil::pick(rng, 1, 2);
    IntervalMenu menu = build_menu(
        testutil::pick(rng, 0, 1) ? IntervalFamilyKind::BInt
                                  : IntervalFamilyKind::BExtInt,
        testutil::pick(rng, 0, 2));
    GameVariant variant =
        testutil::pick(rng, 0, 1) ? GameVariant::US : GameVariant::FP;
    CrosscheckReport rep = ef_crosscheck(w0, w1, rounds, menu, variant);
    if (!rep.in_cap) continue;
    ++in_cap;
    CHECK(rep.agree);
  }
  CHECK(in_cap > 50);  // the caps must not be eating the whole sample
}
