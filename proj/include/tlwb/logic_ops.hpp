#pragma once

#include "tlwb/formula.hpp"

namespace tlwb {

// Syntactic fragment facts about a metric formula. `unary` means every
// modality is F or P; `bounded` means no interval runs to infinity;
// `non_punctual` means no singular interval [c,c]; `max_constant` is the
// largest finite endpoint (0 when there are no intervals at all).
struct FragmentInfo {
  bool unary = true;
  bool bounded = true;
  bool non_punctual = true;
  long long max_constant = 0;
};

FragmentInfo classify_formula(const mtl::Ptr& f);

// Deepest nesting of modal operators; boolean connectives and freezes are
// free. For the event logic SP, EP, X and Y all count as modal.
int modal_depth(const mtl::Ptr& f);
int modal_depth(const tptl::Ptr& f);
int modal_depth(const ttl::Ptr& f);

// Total number of modal operator occurrences.
int modal_count(const mtl::Ptr& f);
int modal_count(const tptl::Ptr& f);
int modal_count(const ttl::Ptr& f);

// Truncation at n: every endpoint constant above n, and every infinity,
// becomes n; openness of each end is preserved. An interval collapsing to
// empty turns its modality into an equivalent-to-false subformula that keeps
// the original modal depth. For integer n larger than a word's final
// timestamp the truncated formula evaluates identically everywhere on it.
mtl::Ptr truncate_constants(const mtl::Ptr& f, long long n);

// Rewrites atoms with negative constants by flipping orientation and
// comparison (x-T < -2 becomes T-x > 2); equalities keep their shape.
// Idempotent; the result has only non-negative constants.
GuardAtom normalize_guard(const GuardAtom& a);
Guard normalize_guard(const Guard& g);

}  // namespace tlwb
