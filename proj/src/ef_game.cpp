#include "tlwb/ef_game.hpp"

#include <algorithm>
#include <sstream>

#include "tlwb/errors.hpp"

namespace tlwb {

const char* family_name(IntervalFamilyKind kind) {
  switch (kind) {
    case IntervalFamilyKind::Int: return "Int";
    case IntervalFamilyKind::ExtInt: return "ExtInt";
    case IntervalFamilyKind::BInt: return "BInt";
    case IntervalFamilyKind::BExtInt: return "BExtInt";
  }
  return "?";
}

IntervalMenu build_menu(IntervalFamilyKind kind, long long k) {
  if (k < 0) throw DomainError("interval menu cap must be non-negative");
  const bool singular =
      kind == IntervalFamilyKind::Int || kind == IntervalFamilyKind::BInt;
  const bool unbounded =
      kind == IntervalFamilyKind::Int || kind == IntervalFamilyKind::ExtInt;
  IntervalMenu menu{kind, k, {}};
  for (long long lo = 0; lo <= k; ++lo) {
    if (singular) menu.intervals.push_back(Interval::singleton(lo));
    for (long long hi = lo + 1; hi <= k; ++hi) {
      menu.intervals.push_back(Interval::closed(lo, hi));
      menu.intervals.push_back(Interval::open(lo, hi));
      menu.intervals.push_back(Interval::closed_open(lo, hi));
      menu.intervals.push_back(Interval::open_closed(lo, hi));
    }
    if (unbounded) {
      menu.intervals.push_back(Interval::unbounded(lo, false));
      menu.intervals.push_back(Interval::unbounded(lo, true));
    }
  }
  return menu;
}

namespace {

using Mask = std::uint64_t;

// Bits of positions 1..p (position q maps to bit q-1).
inline Mask prefix(std::size_t p) {
  return p >= 64 ? ~Mask(0) : (Mask(1) << p) - 1;
}
inline Mask bit_of(std::size_t pos) { return Mask(1) << (pos - 1); }
// Positions strictly between a and b, for a < b.
inline Mask between(std::size_t a, std::size_t b) {
  return b <= a + 1 ? 0 : prefix(b - 1) ^ prefix(a);
}
inline std::size_t lowest_pos(Mask m) {
  return static_cast<std::size_t>(__builtin_ctzll(m)) + 1;
}

// Move geometry shared by the solver and the trace builder: for every start
// position and menu interval, the bitmask of positions a player may move to.
struct Board {
  const TimedWord* w[2];
  std::size_t n[2];
  std::size_t nmenu;
  // opts[mv][d][i-1][m]: mv 0 = until (later positions), 1 = since.
  std::vector<std::vector<Mask>> opts[2][2];
  std::vector<Mask> isop_row;  // indexed by i0-1, bit i1-1

  Board(const TimedWord& r0, const TimedWord& r1, const IntervalMenu& menu) {
    w[0] = &r0;
    w[1] = &r1;
    n[0] = r0.size();
    n[1] = r1.size();
    if (n[0] > 64 || n[1] > 64)
      throw CapExceeded("game solver handles words of at most 64 events");
    nmenu = menu.intervals.size();
    if (nmenu > 256)
      throw CapExceeded("game solver handles menus of at most 256 intervals");
    for (int d = 0; d < 2; ++d) {
      opts[0][d].assign(n[d], std::vector<Mask>(nmenu, 0));
      opts[1][d].assign(n[d], std::vector<Mask>(nmenu, 0));
      for (std::size_t i = 1; i <= n[d]; ++i) {
        for (std::size_t j = i + 1; j <= n[d]; ++j) {
          Rational diff = w[d]->time(j) - w[d]->time(i);
          for (std::size_t m = 0; m < nmenu; ++m) {
            if (menu.intervals[m].contains(diff)) {
              opts[0][d][i - 1][m] |= bit_of(j);
              opts[1][d][j - 1][m] |= bit_of(i);
            }
          }
        }
      }
    }
    isop_row.assign(n[0], 0);
    for (std::size_t i = 1; i <= n[0]; ++i)
      for (std::size_t j = 1; j <= n[1]; ++j)
        if (r0.letter(i) == r1.letter(j)) isop_row[i - 1] |= bit_of(j);
  }

  bool isop(std::size_t i0, std::size_t i1) const {
    return isop_row[i0 - 1] >> (i1 - 1) & 1;
  }
};

// Winning-configuration tables, one per remaining-round count.
// rows[r][i0-1] holds bit i1-1; cols[r] is the transpose.
struct Tables {
  std::vector<std::vector<Mask>> rows, cols;
};

struct RoundCtx {
  const Board& bd;
  const std::vector<Mask>& prow;  // duplicator-win rows, one round shorter
  const std::vector<Mask>& pcol;
  GameVariant variant;
};

inline bool prev_win(const RoundCtx& cx, std::size_t c0, std::size_t c1) {
  return cx.prow[c0 - 1] >> (c1 - 1) & 1;
}

// Does duplicator reply `rep` survive both Part-II branches of the given
// move? cfg is the round-start configuration, sp the spoiler's Part-I
// position in word delta. The reply is committed before the spoiler picks
// the branch, so it must survive each of them.
bool reply_survives(const RoundCtx& cx, int delta, int mv,
                    const std::size_t cfg[2], std::size_t sp,
                    std::size_t rep) {
  std::size_t c0 = delta == 0 ? sp : rep;
  std::size_t c1 = delta == 0 ? rep : sp;
  if (!prev_win(cx, c0, c1)) return false;  // F-part (or P-part)
  if (cx.variant == GameVariant::FP) return true;
  // U-part / S-part. Adjacency means advance by one in the move direction.
  // An adjacent reply leaves nothing strictly in between on the reply side,
  // so the left-argument obligation is vacuous and the round can only end
  // at the Part-I targets, already vetted above. The reverse mismatch is
  // fatal: a spoiler one-step advance against a non-adjacent reply realizes
  // an until with falsum on the left, which the reply's in-between
  // positions violate.
  bool adj_sp = mv == 0 ? sp == cfg[delta] + 1 : sp + 1 == cfg[delta];
  bool adj_rep =
      mv == 0 ? rep == cfg[1 - delta] + 1 : rep + 1 == cfg[1 - delta];
  if (adj_rep) return true;
  if (adj_sp) return false;
  // Both sides advanced by more than one step: the spoiler picks any
  // position strictly in between in the duplicator's word, the duplicator
  // answers strictly in between in the spoiler's word.
  Mask picks =
      mv == 0 ? between(cfg[1 - delta], rep) : between(rep, cfg[1 - delta]);
  Mask answers = mv == 0 ? between(cfg[delta], sp) : between(sp, cfg[delta]);
  if (delta == 0) {
    for (Mask p = picks; p; p &= p - 1)  // picks in word 1, answers in word 0
      if (!(cx.pcol[lowest_pos(p) - 1] & answers)) return false;
  } else {
    for (Mask p = picks; p; p &= p - 1)
      if (!(cx.prow[lowest_pos(p) - 1] & answers)) return false;
  }
  return true;
}

// One more round from (i0,i1): true iff the duplicator survives every
// available spoiler move.
bool config_survives(const RoundCtx& cx, std::size_t i0, std::size_t i1) {
  if (!cx.bd.isop(i0, i1)) return false;
  const std::size_t cfg[2] = {i0, i1};
  std::vector<std::pair<Mask, Mask>> pairs;
  for (int delta = 0; delta < 2; ++delta) {
    for (int mv = 0; mv < 2; ++mv) {
      pairs.clear();
      const auto& od = cx.bd.opts[mv][delta][cfg[delta] - 1];
      const auto& ob = cx.bd.opts[mv][1 - delta][cfg[1 - delta] - 1];
      for (std::size_t m = 0; m < cx.bd.nmenu; ++m) {
        Mask sps = od[m];
        if (!sps) continue;  // no Part-I position: move unavailable
        Mask reps = ob[m];
        if (!reps) return false;  // duplicator stuck in Part I
        pairs.emplace_back(sps, reps);
      }
      // Distinct intervals often induce identical move sets, and the game
      // value depends only on the sets.
      std::sort(pairs.begin(), pairs.end());
      pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
      for (const auto& [sps, reps] : pairs) {
        for (Mask s = sps; s; s &= s - 1) {
          std::size_t sp = lowest_pos(s);
          bool survivable = false;
          for (Mask r = reps; r && !survivable; r &= r - 1)
            survivable = reply_survives(cx, delta, mv, cfg, sp, lowest_pos(r));
          if (!survivable) return false;
        }
      }
    }
  }
  return true;
}

Tables solve(const Board& bd, int rounds, GameVariant variant) {
  Tables t;
  t.rows.assign(rounds + 1, std::vector<Mask>(bd.n[0], 0));
  t.cols.assign(rounds + 1, std::vector<Mask>(bd.n[1], 0));
  t.rows[0] = bd.isop_row;
  for (std::size_t i = 1; i <= bd.n[0]; ++i)
    for (std::size_t j = 1; j <= bd.n[1]; ++j)
      if (t.rows[0][i - 1] >> (j - 1) & 1) t.cols[0][j - 1] |= bit_of(i);
  for (int r = 1; r <= rounds; ++r) {
    RoundCtx cx{bd, t.rows[r - 1], t.cols[r - 1], variant};
    for (std::size_t i = 1; i <= bd.n[0]; ++i)
      for (std::size_t j = 1; j <= bd.n[1]; ++j)
        if (config_survives(cx, i, j)) {
          t.rows[r][i - 1] |= bit_of(j);
          t.cols[r][j - 1] |= bit_of(i);
        }
  }
  return t;
}

char part_char(int mv, bool full_part) {
  if (mv == 0) return full_part ? 'U' : 'F';
  return full_part ? 'S' : 'P';
}

// Deterministic principal variation from the solved tables. Canonical
// order: word 0 before word 1, until before since, menu order, lowest
// position first; the spoiler takes the F-part whenever it already wins.
GameOutcome build_trace(const Board& bd, const IntervalMenu& menu,
                        const Tables& t, std::size_t i0, std::size_t i1,
                        int rounds, GameVariant variant) {
  GameOutcome out;
  std::size_t c0 = i0, c1 = i1;
  int r = rounds;
  std::ostringstream note;
  for (;;) {
    if (!bd.isop(c0, c1)) {
      out.winner = Winner::Spoiler;
      note << "letters differ at configuration (" << c0 << "," << c1 << ")";
      break;
    }
    if (r == 0) {
      out.winner = Winner::Duplicator;
      note << "rounds exhausted with matching letters";
      break;
    }
    RoundCtx cx{bd, t.rows[r - 1], t.cols[r - 1], variant};
    const std::size_t cfg[2] = {c0, c1};
    const bool dup_here = t.rows[r][c0 - 1] >> (c1 - 1) & 1;
    MoveRecord rec;
    rec.round = r;
    rec.from0 = c0;
    rec.from1 = c1;
    bool recorded = false;
    bool dup_stuck = false;
    for (int delta = 0; delta < 2 && !recorded && !dup_stuck; ++delta) {
      for (int mv = 0; mv < 2 && !recorded && !dup_stuck; ++mv) {
        const auto& od = bd.opts[mv][delta][cfg[delta] - 1];
        const auto& ob = bd.opts[mv][1 - delta][cfg[1 - delta] - 1];
        for (std::size_t m = 0; m < bd.nmenu && !recorded && !dup_stuck;
             ++m) {
          Mask sps = od[m];
          if (!sps) continue;
          Mask reps = ob[m];
          rec.delta = delta;
          rec.until_move = mv == 0;
          rec.ivl = menu.intervals[m];
          if (dup_here) {
            // Any available move will do; the duplicator answers with the
            // first reply that survives both branches. One exists, or the
            // configuration would not be in the winning table.
            rec.spoiler_to = lowest_pos(sps);
            for (Mask rm = reps; rm; rm &= rm - 1) {
              std::size_t rep = lowest_pos(rm);
              if (reply_survives(cx, delta, mv, cfg, rec.spoiler_to, rep)) {
                rec.dup_to = rep;
                break;
              }
            }
            recorded = true;
            break;
          }
          if (!reps) {
            rec.spoiler_to = lowest_pos(sps);
            rec.dup_to = 0;
            rec.part = '-';
            dup_stuck = true;
            break;
          }
          for (Mask s = sps; s && !recorded; s &= s - 1) {
            std::size_t sp = lowest_pos(s);
            bool winning = true;
            for (Mask rm = reps; rm && winning; rm &= rm - 1)
              winning = !reply_survives(cx, delta, mv, cfg, sp, lowest_pos(rm));
            if (!winning) continue;
            rec.spoiler_to = sp;
            rec.dup_to = lowest_pos(reps);
            recorded = true;
          }
        }
      }
    }
    if (dup_stuck) {
      out.trace.push_back(rec);
      out.winner = Winner::Spoiler;
      note << "duplicator has no position realizing " << rec.ivl.str()
           << " in word " << (1 - rec.delta);
      break;
    }
    if (!recorded) {
      // No move type with a legal Part-I position exists anywhere.
      out.winner = Winner::Duplicator;
      note << "no spoiler move available from (" << c0 << "," << c1 << ")";
      break;
    }
    const int delta = rec.delta;
    const int mv = rec.until_move ? 0 : 1;
    const std::size_t sp = rec.spoiler_to, rep = rec.dup_to;
    const std::size_t adv0 = delta == 0 ? sp : rep;
    const std::size_t adv1 = delta == 0 ? rep : sp;
    if (dup_here || !prev_win(cx, adv0, adv1)) {
      // Winning duplicator keeps the game going through the F-part; a
      // winning spoiler takes the F-part when the advanced configuration
      // is already lost for the duplicator.
      rec.part = part_char(mv, false);
      out.trace.push_back(rec);
      c0 = adv0;
      c1 = adv1;
      --r;
      continue;
    }
    // The reply survives the F-part, so the U-part (or S-part) defeats it:
    // either the spoiler advanced one step against a wider reply, or the
    // in-between challenge finds an unanswerable position.
    rec.part = part_char(mv, true);
    bool adj_sp = mv == 0 ? sp == cfg[delta] + 1 : sp + 1 == cfg[delta];
    bool adj_rep =
        mv == 0 ? rep == cfg[1 - delta] + 1 : rep + 1 == cfg[1 - delta];
    if (adj_sp && !adj_rep) {
      out.trace.push_back(rec);
      out.winner = Winner::Spoiler;
      note << "spoiler advanced one step, the reply left positions in "
              "between";
      break;
    }
    Mask picks =
        mv == 0 ? between(cfg[1 - delta], rep) : between(rep, cfg[1 - delta]);
    Mask answers =
        mv == 0 ? between(cfg[delta], sp) : between(sp, cfg[delta]);
    for (Mask p = picks; p; p &= p - 1) {
      std::size_t cand = lowest_pos(p);
      Mask winning_answers =
          (delta == 0 ? cx.pcol[cand - 1] : cx.prow[cand - 1]) & answers;
      if (!winning_answers) {
        rec.mid_spoiler = cand;
        break;
      }
    }
    rec.mid_dup = lowest_pos(answers);
    out.trace.push_back(rec);
    c0 = delta == 0 ? rec.mid_dup : rec.mid_spoiler;
    c1 = delta == 0 ? rec.mid_spoiler : rec.mid_dup;
    --r;
  }
  out.end_note = note.str();
  return out;
}

}  // namespace

GameOutcome duplicator_wins(const TimedWord& rho0, const TimedWord& rho1,
                            std::size_t i0, std::size_t i1, int rounds,
                            const IntervalMenu& menu, GameVariant variant) {
  if (i0 < 1 || i0 > rho0.size() || i1 < 1 || i1 > rho1.size())
    throw DomainError("game configuration out of range");
  if (rounds < 0) throw DomainError("round count must be non-negative");
  Board bd(rho0, rho1, menu);
  Tables t = solve(bd, rounds, variant);
  GameOutcome out = build_trace(bd, menu, t, i0, i1, rounds, variant);
  const bool bounded_kind = menu.kind == IntervalFamilyKind::BInt ||
                            menu.kind == IntervalFamilyKind::BExtInt;
  Rational maxts = rho0.time(rho0.size());
  if (rho1.time(rho1.size()) > maxts) maxts = rho1.time(rho1.size());
  out.menu_cap_ok = bounded_kind || Rational(menu.k) > maxts;
  return out;
}

namespace {

bool legal_to(const TimedWord& w, std::size_t from, std::size_t to,
              bool until_move, const Interval& ivl) {
  if (until_move) {
    return to > from && to <= w.size() &&
           ivl.contains(w.time(to) - w.time(from));
  }
  return to >= 1 && to < from && ivl.contains(w.time(from) - w.time(to));
}

bool any_legal_to(const TimedWord& w, std::size_t from, bool until_move,
                  const Interval& ivl) {
  if (until_move) {
    for (std::size_t p = from + 1; p <= w.size(); ++p)
      if (ivl.contains(w.time(p) - w.time(from))) return true;
  } else {
    for (std::size_t p = 1; p < from; ++p)
      if (ivl.contains(w.time(from) - w.time(p))) return true;
  }
  return false;
}

bool any_move_available(const TimedWord& r0, const TimedWord& r1,
                        std::size_t c0, std::size_t c1,
                        const IntervalMenu& menu) {
  const TimedWord* ws[2] = {&r0, &r1};
  const std::size_t cs[2] = {c0, c1};
  for (int delta = 0; delta < 2; ++delta)
    for (int mv = 0; mv < 2; ++mv)
      for (const Interval& ivl : menu.intervals)
        if (any_legal_to(*ws[delta], cs[delta], mv == 0, ivl)) return true;
  return false;
}

}  // namespace

std::string replay_trace(const TimedWord& rho0, const TimedWord& rho1,
                         std::size_t i0, std::size_t i1, int rounds,
                         const IntervalMenu& menu, GameVariant variant,
                         const GameOutcome& outcome) {
  const TimedWord* ws[2] = {&rho0, &rho1};
  std::size_t c0 = i0, c1 = i1;
  int r = rounds;
  auto fail = [](std::size_t step, const std::string& why) {
    std::ostringstream os;
    os << "step " << step << ": " << why;
    return os.str();
  };
  for (std::size_t s = 0; s < outcome.trace.size(); ++s) {
    const MoveRecord& rec = outcome.trace[s];
    if (rho0.letter(c0) != rho1.letter(c1))
      return fail(s, "trace continues past a letter mismatch");
    if (r <= 0) return fail(s, "trace continues past round exhaustion");
    if (rec.from0 != c0 || rec.from1 != c1)
      return fail(s, "recorded start configuration does not match play");
    if (rec.round != r) return fail(s, "recorded round counter is wrong");
    bool in_menu = false;
    for (const Interval& ivl : menu.intervals)
      if (ivl == rec.ivl) in_menu = true;
    if (!in_menu) return fail(s, "interval " + rec.ivl.str() + " not in menu");
    if (rec.delta != 0 && rec.delta != 1) return fail(s, "bad word choice");
    const std::size_t cs[2] = {c0, c1};
    const int delta = rec.delta;
    if (!legal_to(*ws[delta], cs[delta], rec.spoiler_to, rec.until_move,
                  rec.ivl))
      return fail(s, "illegal spoiler Part-I position");
    if (rec.dup_to == 0) {
      if (any_legal_to(*ws[1 - delta], cs[1 - delta], rec.until_move,
                       rec.ivl))
        return fail(s, "duplicator declared stuck but a reply exists");
      if (s + 1 != outcome.trace.size() ||
          outcome.winner != Winner::Spoiler || rec.part != '-')
        return fail(s, "stuck duplicator must end the trace with a spoiler win");
      return "";
    }
    if (!legal_to(*ws[1 - delta], cs[1 - delta], rec.dup_to, rec.until_move,
                  rec.ivl))
      return fail(s, "illegal duplicator Part-I reply");
    const char expect_f = rec.until_move ? 'F' : 'P';
    const char expect_u = rec.until_move ? 'U' : 'S';
    const std::size_t adv0 = delta == 0 ? rec.spoiler_to : rec.dup_to;
    const std::size_t adv1 = delta == 0 ? rec.dup_to : rec.spoiler_to;
    if (rec.part == expect_f) {
      if (rec.mid_spoiler || rec.mid_dup)
        return fail(s, "F-part round carries in-between positions");
      c0 = adv0;
      c1 = adv1;
      --r;
      continue;
    }
    if (rec.part != expect_u) return fail(s, "unknown Part-II tag");
    if (variant == GameVariant::FP)
      return fail(s, "U/S-part is not playable in the unary game variant");
    bool adj_sp = rec.until_move ? rec.spoiler_to == cs[delta] + 1
                                 : rec.spoiler_to + 1 == cs[delta];
    bool adj_rep = rec.until_move ? rec.dup_to == cs[1 - delta] + 1
                                  : rec.dup_to + 1 == cs[1 - delta];
    if (adj_rep) {
      // An adjacent reply has no in-between positions to challenge, so the
      // round ends at the Part-I targets whatever the spoiler advanced.
      if (rec.mid_spoiler || rec.mid_dup)
        return fail(s, "adjacent advance carries in-between positions");
      c0 = adv0;
      c1 = adv1;
      --r;
      continue;
    }
    if (adj_sp) {
      if (rec.mid_spoiler || rec.mid_dup)
        return fail(s, "adjacency mismatch round carries in-between positions");
      if (s + 1 != outcome.trace.size() || outcome.winner != Winner::Spoiler)
        return fail(s, "adjacency mismatch must end the trace with a spoiler win");
      return "";
    }
    auto strictly_between = [](std::size_t x, std::size_t a, std::size_t b) {
      return a < b ? (a < x && x < b) : (b < x && x < a);
    };
    if (!rec.mid_spoiler || !rec.mid_dup)
      return fail(s, "non-adjacent U/S-part needs in-between positions");
    if (!strictly_between(rec.mid_spoiler, cs[1 - delta], rec.dup_to))
      return fail(s, "spoiler in-between pick out of range");
    if (!strictly_between(rec.mid_dup, cs[delta], rec.spoiler_to))
      return fail(s, "duplicator in-between answer out of range");
    c0 = delta == 0 ? rec.mid_dup : rec.mid_spoiler;
    c1 = delta == 0 ? rec.mid_spoiler : rec.mid_dup;
    --r;
  }
  const bool isop_end = rho0.letter(c0) == rho1.letter(c1);
  if (outcome.winner == Winner::Duplicator) {
    if (!isop_end)
      return fail(outcome.trace.size(), "duplicator declared winner without isop");
    if (r > 0 && any_move_available(rho0, rho1, c0, c1, menu))
      return fail(outcome.trace.size(),
                  "rounds remain and a spoiler move is available");
    return "";
  }
  if (isop_end)
    return fail(outcome.trace.size(),
                "spoiler declared winner but the final configuration matches");
  return "";
}

}  // namespace tlwb
