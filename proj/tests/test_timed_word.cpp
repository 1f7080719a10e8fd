#include <doctest.h>

#include <random>

#include "tlwb/errors.hpp"
#include "tlwb/timed_word.hpp"

using namespace tlwb;

TEST_CASE("word parsing handles comments, blanks and both time syntaxes") {
  TimedWord w = parse_word("# header\n\na 0\nb 3/2  # inline\nc 1.5\n");
  REQUIRE(w.size() == 3);
  CHECK(w.letter(1) == "a");
  CHECK(w.time(1) == Rational(0));
  CHECK(w.letter(2) == "b");
  CHECK(w.time(2) == Rational(3, 2));
  CHECK(w.time(3) == Rational(3, 2));
  CHECK(w.anchored_zero());
  CHECK(!w.strictly_monotonic());  // positions 2 and 3 share a timestamp
}

TEST_CASE("word parse errors carry line context") {
  CHECK_THROWS_AS(parse_word("a 0\nb"), ParseError);
  CHECK_THROWS_AS(parse_word("a 0 extra\n"), ParseError);
  CHECK_THROWS_AS(parse_word("A 0\n"), ParseError);
  CHECK_THROWS_AS(parse_word("a zero\n"), ParseError);
  CHECK_THROWS_AS(parse_word(""), ParseError);            // empty word
  CHECK_THROWS_AS(parse_word("a 2\nb 1\n"), ParseError);  // decreasing
  CHECK_THROWS_AS(parse_word("a -1\n"), ParseError);      // negative time
}

TEST_CASE("word validation flags monotonicity and the zero anchor") {
  TimedWord strict = parse_word("a 0\nb 1\nc 2\n");
  CHECK(strict.strictly_monotonic());
  CHECK(strict.anchored_zero());

  TimedWord unanchored = parse_word("a 1/4\na 1/2\n");
  CHECK(!unanchored.anchored_zero());
  CHECK(unanchored.strictly_monotonic());

  TimedWord single = parse_word("a 0\n");
  CHECK(single.strictly_monotonic());
  CHECK(single.size() == 1);
}

TEST_CASE("word serialization always prints p/q and round-trips") {
  TimedWord w = parse_word("a 0\nb 3/2\n");
  CHECK(serialize_word(w) == "a 0/1\nb 3/2\n");
  TimedWord back = parse_word(serialize_word(w));
  REQUIRE(back.size() == w.size());
  for (std::size_t i = 1; i <= w.size(); ++i) {
    CHECK(back.letter(i) == w.letter(i));
    CHECK(back.time(i) == w.time(i));
  }
}

TEST_CASE("untime drops timestamps and keeps letter order") {
  TimedWord w = parse_word("a 0\na 1\nc 5/2\n");
  CHECK(w.untime_joined() == "aac");
  CHECK(w.untime() == std::vector<std::string>{"a", "a", "c"});
}

TEST_CASE("word positions are 1-based and bounds-checked") {
  TimedWord w = parse_word("a 0\nb 1\n");
  CHECK(w.letter(1) == "a");
  CHECK(w.letter(2) == "b");
  CHECK_THROWS_AS(w.at(0), DomainError);
  CHECK_THROWS_AS(w.at(3), DomainError);
}

TEST_CASE("multi-character letters are accepted") {
  TimedWord w = parse_word("req_1 0\nack2 1/3\n");
  CHECK(w.letter(1) == "req_1");
  CHECK(w.untime() == std::vector<std::string>{"req_1", "ack2"});
}

TEST_CASE("random words round-trip through serialize/parse") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(1, 12);
  std::uniform_int_distribution<int> letter(0, 2);
  std::uniform_int_distribution<int> step_num(0, 5);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Event> evs;
    Rational t(0);
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
      t += Rational(step_num(rng), 4);
      evs.push_back({std::string(1, char('a' + letter(rng))), t});
    }
    TimedWord w = TimedWord::from_events(evs);
    TimedWord back = parse_word(serialize_word(w));
    REQUIRE(back.size() == w.size());
    for (std::size_t i = 1; i <= w.size(); ++i) {
      CHECK(back.letter(i) == w.letter(i));
      CHECK(back.time(i) == w.time(i));
    }
    CHECK(back.anchored_zero() == w.anchored_zero());
    CHECK(back.strictly_monotonic() == w.strictly_monotonic());
  }
}
