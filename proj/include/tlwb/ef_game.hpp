#pragma once

// Exhaustive solver for k-round interval-menu EF games on a pair of timed
// words, plus an independent semantic oracle that decides the same question
// by enumerating achievable truth vectors. The two sides are cross-checked
// against each other in the test suite.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tlwb/formula.hpp"
#include "tlwb/interval.hpp"
#include "tlwb/timed_word.hpp"

namespace tlwb {

enum class IntervalFamilyKind { Int, ExtInt, BInt, BExtInt };

const char* family_name(IntervalFamilyKind kind);

// Finite stand-in for one of the interval families, capped at constant k.
// Enumeration order is deterministic: ascending left endpoint; for each,
// the singleton, then bounded intervals by right endpoint with openness
// order [], (), [), (], then the two unbounded shapes.
struct IntervalMenu {
  IntervalFamilyKind kind;
  long long k = 0;
  std::vector<Interval> intervals;
};

// k >= 0. ExtInt and BExtInt drop singletons; BInt and BExtInt drop
// unbounded intervals.
IntervalMenu build_menu(IntervalFamilyKind kind, long long k);

enum class GameVariant { US, FP };
enum class Winner { Spoiler, Duplicator };

// One round of play. Position 0 stands for "no position" (a stuck player
// or an unused field). `part` is 'F'/'U' after an until move, 'P'/'S'
// after a since move, '-' when the duplicator was stuck in Part I.
struct MoveRecord {
  int round = 0;  // rounds remaining at the start of this round
  int delta = 0;  // word the spoiler moved in
  bool until_move = true;
  Interval ivl;
  std::size_t from0 = 0, from1 = 0;
  std::size_t spoiler_to = 0;
  std::size_t dup_to = 0;
  char part = '-';
  std::size_t mid_spoiler = 0;  // in word 1-delta, U/S part only
  std::size_t mid_dup = 0;      // in word delta, U/S part only
};

struct GameOutcome {
  Winner winner = Winner::Duplicator;
  std::vector<MoveRecord> trace;
  std::string end_note;
  // False when the menu cap k is not an integer strictly above every
  // timestamp, i.e. the finite menu may miss distinguishing intervals.
  bool menu_cap_ok = true;
};

// Exact game value from configuration (i0,i1) with `rounds` rounds to play,
// by exhaustive search over one round at a time with position-pair tables.
// The trace is a deterministic principal variation for the winner.
// Throws DomainError on out-of-range positions, CapExceeded for words
// longer than 64 events or menus larger than 256 intervals.
GameOutcome duplicator_wins(const TimedWord& rho0, const TimedWord& rho1,
                            std::size_t i0, std::size_t i1, int rounds,
                            const IntervalMenu& menu, GameVariant variant);

// Validates that a trace replays legally from (i0,i1) and terminates in the
// recorded winner's victory condition. Empty string = valid; otherwise a
// diagnostic naming the first illegal step.
std::string replay_trace(const TimedWord& rho0, const TimedWord& rho1,
                         std::size_t i0, std::size_t i1, int rounds,
                         const IntervalMenu& menu, GameVariant variant,
                         const GameOutcome& outcome);

struct SignatureCaps {
  // The boolean closure of a layer is materialized as all unions of
  // coordinate classes, so its size is 2^classes.
  std::size_t max_classes = 16;
  // Abstract operation budget across all layers (modal applications are
  // charged quadratically in word length).
  unsigned long long max_work = 200'000'000;
};

struct SignatureResult {
  bool equivalent = true;
  // A formula of operator depth <= the queried depth whose truth at
  // position 1 differs between the words; null when equivalent.
  mtl::Ptr witness;
  std::size_t classes = 0;       // final coordinate-class count
  std::size_t generators = 0;    // distinct atom/modal vectors produced
  unsigned long long work = 0;
};

// Decides whether any menu-restricted formula of operator depth <= depth
// distinguishes (rho0,1) from (rho1,1), by computing the achievable truth
// vectors over the joint positions of both words: atoms, boolean closure,
// then one modal layer per depth unit. FP variant applies only unary F/P.
// Throws CapExceeded when the caps are hit.
SignatureResult signature_equivalence(const TimedWord& rho0,
                                      const TimedWord& rho1, int depth,
                                      const IntervalMenu& menu,
                                      GameVariant variant,
                                      const SignatureCaps& caps = {});

struct CrosscheckReport {
  bool in_cap = false;   // signature oracle completed within caps
  bool agree = false;    // meaningful only when in_cap
  GameOutcome game;
  SignatureResult sig;   // default-initialized when !in_cap
  std::string cap_note;  // why the oracle gave up, when !in_cap
};

// Runs both deciders on the same instance from configuration (1,1) and
// reports whether their verdicts coincide.
CrosscheckReport ef_crosscheck(const TimedWord& rho0, const TimedWord& rho1,
                               int rounds, const IntervalMenu& menu,
                               GameVariant variant,
                               const SignatureCaps& caps = {});

}  // namespace tlwb
