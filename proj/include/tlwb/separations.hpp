#pragma once

// Witness word families for the expressiveness separations, the seeded
// random samplers the evidence checks draw from, and a runner that turns
// each case into a pass/fail report with a lattice-edge summary line.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tlwb/ef_game.hpp"
#include "tlwb/formula.hpp"
#include "tlwb/timed_word.hpp"

namespace tlwb {

struct GameSettings {
  int rounds = 1;
  IntervalFamilyKind kind = IntervalFamilyKind::Int;
  long long k = 1;
  GameVariant variant = GameVariant::US;
};

// ---------------------------------------------------------------------------
// Word families. Each generator is deterministic; words validate on
// construction, so a family that builds at all is well formed.
// ---------------------------------------------------------------------------

// a's at integer times 0..n and one late c. The c sits 3/2 after the last a
// in word b (inside the window the formula asks for) and 5/2 after it in
// word a (between integers, where no bounded-interval formula of the played
// depth can pin it down).
struct Thm2Family {
  TimedWord a, b;
  mtl::Ptr phi;  // F_[0,inf) (a and F_(1,2) c)
  GameSettings game;
  long long n = 1, m = 1, k = 1;  // n = m*k
};
Thm2Family gen_thm2(long long m, long long k);

// 2n+1 a's packed within delta of each other, then 2n+1 c's three time units
// later. Word b moves the middle c to sit exactly 3 after the middle a; the
// punctual window [3,3] sees it, while every non-punctual window of modest
// depth cannot. Words are deliberately not anchored at time zero.
struct Thm3Family {
  TimedWord a, b;
  mtl::Ptr phi;  // F_(0,1) (a and F_[3,3] c)
  GameSettings game;
  long long n = 1;
  long long cap = 5;  // menu constant cap, ceil(last timestamp) + 1
};
Thm3Family gen_thm3(long long n);

// Overlapping three-letter segments after a quiet prefix. In word a the
// middle segment's c slides left so one freeze point sees both its b and c
// within (1,2); word b offers no such segment. Offsets are perturbed so no
// two events sit an exact integer apart, which the generator audits.
struct Thm5Family {
  TimedWord a, b;
  tptl::Ptr phi;  // F p.(a and F(b and T-p in (1,2) and F(c and T-p in (1,2))))
  GameSettings game;
  long long n = 1, k = 1;
  long long m = 5;  // segment count 2n(k+1)+1
  Rational delta, eps;
  int audit_retries = 0;  // 0 when the first offset schedule passed
};
Thm5Family gen_thm5(long long n, long long k);

// Reuse of the punctual family one size up: w_n cannot be told from v_n by
// any deterministic-freeze formula of modal depth at most n, because such
// formulas only ever parse positions near the block edges.
struct TtlIFamily {
  TimedWord w, v;
  mtl::Ptr phi;
  long long n = 1;
};
TtlIFamily gen_ttl_i(long long n);

// (a,c) pairs two apart with the c half a unit after its a; each altered
// word shifts one c right by 7/10 into the (1,2) window. More alterations
// than any modal-count-m formula can track.
struct TtlIIFamily {
  TimedWord w;
  std::vector<TimedWord> alts;  // one per group j = 1..2m
  mtl::Ptr phi;
  long long m = 1;
};
TtlIIFamily gen_ttl_ii(long long m);

// Degenerate word classes for importing untimed arguments: every event at
// time 0, or all events at distinct times strictly inside (0,1). Letters
// cycle through the alphabet.
TimedWord gen_instantaneous(std::size_t length,
                            const std::vector<std::string>& alphabet);
TimedWord gen_unitary(std::size_t length,
                      const std::vector<std::string>& alphabet);

// Positions of w_n from gen_ttl_i(n) that no modal-depth-m formula parses:
// the middle a's and the middle c's, m positions in from each block edge.
std::vector<std::size_t> ttl_i_middle_band(long long n, int m);

// ---------------------------------------------------------------------------
// Seeded random samplers. These feed the differential and property checks;
// they are inputs, not oracles, so sharing them between the runner and the
// test suite is sound.
// ---------------------------------------------------------------------------

using Rng = std::mt19937_64;

// The metric sampler reads letters, max_constant and max_depth; the freeze
// samplers additionally read the variable fields; exact_depth and max_count
// steer only the event-logic sampler.
struct FormulaSampleOpts {
  std::vector<std::string> letters{"a", "b", "c"};
  long long max_constant = 2;
  int max_depth = 3;       // modal depth budget
  int exact_depth = -1;    // when >= 0, produce exactly this modal depth
  int max_count = -1;      // when >= 0, cap total modal operators
  int max_freeze_vars = 2;
  bool fresh_freeze_vars = false;  // never bind the same variable twice
};

mtl::Ptr sample_mtl(Rng& rng, const FormulaSampleOpts& o);
tptl::Ptr sample_tptl(Rng& rng, const FormulaSampleOpts& o);
ttl::Ptr sample_ttl(Rng& rng, const FormulaSampleOpts& o);

struct WordSampleOpts {
  std::vector<std::string> letters{"a", "b", "c"};
  std::size_t min_len = 1, max_len = 6;
  long long max_time = 6;   // timestamps stay within [0, max_time]
  int denominator = 4;      // timestamps are multiples of 1/denominator
  bool zero_anchored = false;
  bool strictly_monotonic = false;
};

TimedWord sample_word(Rng& rng, const WordSampleOpts& o);

// ---------------------------------------------------------------------------
// Experiment runner.
// ---------------------------------------------------------------------------

enum class CaseId { Thm2, Thm3, Thm5, TtlI, TtlII, Instantaneous, Unitary };

const char* case_name(CaseId id);
std::optional<CaseId> case_from_name(const std::string& name);
std::vector<CaseId> all_cases();

struct SeparationParams {
  long long n = 1;
  long long k = 1;
  long long m = 1;
  long long r = 1;            // thm3 round count; words are drawn at 2r
  std::size_t samples = 200;  // sampled-property checks
  std::size_t length = 6;     // instantaneous / unitary word length
  std::uint64_t seed = 1;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SeparationReport {
  CaseId id = CaseId::Thm2;
  std::string params_line;
  std::string edge;  // which lattice edge this case witnesses
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;
  bool passed() const;
};

// Runs every check of one case; sub-check failures land in the report
// rather than throwing. Generator-level errors (bad parameters) do throw.
SeparationReport run_separation(CaseId id, const SeparationParams& p);

// Every case at its smallest parameters, in fixed case order.
std::vector<SeparationReport> run_all_small(std::uint64_t seed);

std::string render_report(const SeparationReport& r, bool porcelain);
std::string render_summary(const std::vector<SeparationReport>& rs,
                           bool porcelain);

}  // namespace tlwb
