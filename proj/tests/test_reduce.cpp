#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "tlwb/logic_ops.hpp"
#include "tlwb/parse.hpp"
#include "tlwb/reduce.hpp"
#include "tlwb/semantics.hpp"
#include "testutil.hpp"

using namespace tlwb;

namespace {

void collect_intervals(const mtl::Ptr& f, std::vector<std::string>& out) {
  if (f->ivl) out.push_back(f->ivl->str());
  if (f->lhs) collect_intervals(f->lhs, out);
  if (f->rhs) collect_intervals(f->rhs, out);
}

bool mentions_only(const mtl::Ptr& f, const std::string& ivl) {
  std::vector<std::string> seen;
  collect_intervals(f, seen);
  return std::all_of(seen.begin(), seen.end(),
                     [&](const std::string& s) { return s == ivl; });
}

TimedWord random_instantaneous(testutil::Rng& rng, int max_len) {
  std::vector<Event> evs;
  int n = testutil::pick(rng, 1, max_len);
  for (int i = 0; i < n; ++i)
    evs.push_back({std::string(1, char('a' + testutil::pick(rng, 0, 2))),
                   Rational(0)});
  return TimedWord::from_events(std::move(evs));
}

TimedWord random_unitary(testutil::Rng& rng, int max_len) {
  std::vector<int> nums(16);
  for (int i = 0; i < 16; ++i) nums[i] = i + 1;
  std::shuffle(nums.begin(), nums.end(), rng);
  int n = testutil::pick(rng, 1, max_len);
  nums.resize(n);
  std::sort(nums.begin(), nums.end());
  std::vector<Event> evs;
  for (int num : nums)
    evs.push_back({std::string(1, char('a' + testutil::pick(rng, 0, 2))),
                   Rational(num, 17)});
  return TimedWord::from_events(std::move(evs));
}

}  // namespace

TEST_CASE("instantaneous rewrite keeps live windows and kills dead ones") {
  TimedWord w = parse_word("a 0\nb 0\nc 0\n");
  mtl::Ptr live = reduce_instantaneous(parse_mtl("(F [0,3] b)"));
  CHECK(mentions_only(live, "[0,0]"));
  CHECK(eval_mtl(w, 1, live));
  mtl::Ptr dead = reduce_instantaneous(parse_mtl("(F (1,2) b)"));
  CHECK(modal_depth(dead) == 1);
  for (std::size_t i = 1; i <= w.size(); ++i) CHECK(!eval_mtl(w, i, dead));
}

TEST_CASE("instantaneous rewrite agrees with the original on its word class") {
  testutil::Rng rng(41);
  testutil::MtlOpts fo;
  fo.alphabet = 3;
  for (int trial = 0; trial < 300; ++trial) {
    TimedWord w = random_instantaneous(rng, 7);
    mtl::Ptr f = testutil::random_mtl(rng, fo);
    mtl::Ptr g = reduce_instantaneous(f);
    CHECK(modal_depth(g) == modal_depth(f));
    CHECK(mentions_only(g, "[0,0]"));
    for (std::size_t i = 1; i <= w.size(); ++i)
      CHECK(eval_mtl(w, i, g) == eval_mtl(w, i, f));
  }
}

TEST_CASE("instantaneous rewrite decides clock guards and drops freezes") {
  // With every timestamp 0, a frozen clock always reads 0, so T-x ~ c is a
  // constant truth value.
  mtl::Ptr g =
      reduce_instantaneous(parse_tptl("(freeze x (F (and a (cmp T-x < 1))))"));
  CHECK(modal_depth(g) == 1);
  TimedWord w = parse_word("b 0\na 0\n");
  CHECK(eval_mtl(w, 1, g));  // the guard is true, only (F a) remains
  mtl::Ptr h =
      reduce_instantaneous(parse_tptl("(freeze x (F (and a (cmp T-x > 0))))"));
  CHECK(modal_depth(h) == 1);
  CHECK(!eval_mtl(w, 1, h));  // the guard is false, the window is dead
}

TEST_CASE("freeze-logic instantaneous rewrite agrees on its word class") {
  testutil::Rng rng(42);
  testutil::TptlOpts fo;
  fo.alphabet = 3;
  for (int trial = 0; trial < 300; ++trial) {
    TimedWord w = random_instantaneous(rng, 7);
    tptl::Ptr f = testutil::random_tptl(rng, fo);
    mtl::Ptr g = reduce_instantaneous(f);
    CHECK(modal_depth(g) == modal_depth(f));
    for (std::size_t i = 1; i <= w.size(); ++i)
      CHECK(eval_mtl(w, i, g) == eval_tptl(w, i, Valuation{}, f));
  }
}

TEST_CASE("unitary rewrite snaps windows to cover or miss") {
  TimedWord w = parse_word("a 1/17\nb 5/17\nb 16/17\n");
  // Integer-endpoint windows either contain all of (0,1) or none of it.
  mtl::Ptr cover = reduce_unitary(parse_mtl("(F [0,2) b)"));
  CHECK(mentions_only(cover, "(0,1)"));
  CHECK(eval_mtl(w, 1, cover));
  mtl::Ptr miss = reduce_unitary(parse_mtl("(F [1,2] b)"));
  CHECK(modal_depth(miss) == 1);
  for (std::size_t i = 1; i <= w.size(); ++i) CHECK(!eval_mtl(w, i, miss));
  // The punctual [0,0] window misses too: distinct times, positive gaps.
  mtl::Ptr punct = reduce_unitary(parse_mtl("(F [0,0] b)"));
  CHECK(!eval_mtl(w, 1, punct));
}

TEST_CASE("unitary rewrite agrees with the original on its word class") {
  testutil::Rng rng(43);
  testutil::MtlOpts fo;
  fo.alphabet = 3;
  for (int trial = 0; trial < 300; ++trial) {
    TimedWord w = random_unitary(rng, 7);
    mtl::Ptr f = testutil::random_mtl(rng, fo);
    mtl::Ptr g = reduce_unitary(f);
    CHECK(modal_depth(g) == modal_depth(f));
    CHECK(mentions_only(g, "(0,1)"));
    for (std::size_t i = 1; i <= w.size(); ++i)
      CHECK(eval_mtl(w, i, g) == eval_mtl(w, i, f));
  }
}
