#pragma once

#include "tlwb/formula.hpp"
#include "tlwb/timed_word.hpp"

namespace tlwb {

// Truth of a clock-constraint conjunction at current time t under valuation
// nu: each atom compares nu(x) - t (or t - nu(x)) with its constant.
bool eval_guard(const Valuation& nu, const Rational& t, const Guard& g);
bool eval_guard(const Valuation& nu, const Rational& t, const GuardAtom& a);

// Pointwise truth at position pos (1-based). Until/since are strict: the
// witness lies strictly beyond pos and the left argument is only required
// strictly between. F_I / P_I coincide with (top U_I f) / (top S_I f).
// Shared subtrees of DAG-shaped formulas are evaluated once per position.
bool eval_mtl(const TimedWord& w, std::size_t pos, const mtl::Ptr& f);

// Freeze-logic truth at (pos, nu). Freeze binds the variable to the current
// timestamp; until/since are untimed and strict.
bool eval_tptl(const TimedWord& w, std::size_t pos, const Valuation& nu,
               const tptl::Ptr& f);

// Event-logic truth at (pos, nu). X jumps to the first later position whose
// event matches under nu, Y to the latest earlier one; both are false when
// no position matches. SP and EP re-anchor to the first and last position.
bool eval_ttl(const TimedWord& w, std::size_t pos, const Valuation& nu,
              const ttl::Ptr& f);

// Language membership: truth at position 1 (with the zero valuation for the
// freeze logics). The freeze logics additionally require the word to start
// at time 0; a DomainError is raised otherwise. The metric logic is
// shift-invariant, so no anchoring is demanded there.
bool lang_member(const TimedWord& w, const mtl::Ptr& f);
bool lang_member(const TimedWord& w, const tptl::Ptr& f);
bool lang_member(const TimedWord& w, const ttl::Ptr& f);

}  // namespace tlwb
