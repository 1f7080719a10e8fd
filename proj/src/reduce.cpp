#include "tlwb/reduce.hpp"

#include "tlwb/errors.hpp"
#include "tlwb/semantics.hpp"

namespace tlwb {

namespace {

bool contains_zero(const Interval& ivl) { return ivl.contains(Rational(0)); }

bool covers_unit(const Interval& ivl) {
  // (0,1) is a subset of an integer-endpoint interval iff the left end is 0
  // and the right end reaches at least 1.
  return ivl.lo == 0 && (!ivl.hi || *ivl.hi >= 1);
}

// A modality whose window can never fire: same operator and children, window
// pinned to `dead_ivl`, target conjoined with false. Semantically false,
// same modal depth as the original.
mtl::Ptr dead_until(mtl::Op op, const Interval& dead_ivl, mtl::Ptr l,
                    mtl::Ptr r) {
  auto blocked = mtl::conj(std::move(r), mtl::falsum());
  return op == mtl::Op::Until ? mtl::until(dead_ivl, std::move(l), blocked)
                              : mtl::since(dead_ivl, std::move(l), blocked);
}

mtl::Ptr dead_unary(mtl::Op op, const Interval& dead_ivl, mtl::Ptr body) {
  auto blocked = mtl::conj(std::move(body), mtl::falsum());
  return op == mtl::Op::F ? mtl::eventually(dead_ivl, blocked)
                          : mtl::once(dead_ivl, blocked);
}

mtl::Ptr rewrite_windows(const mtl::Ptr& f, const Interval& live,
                         bool (*window_live)(const Interval&)) {
  using mtl::Op;
  const mtl::Node& n = *f;
  switch (n.op) {
    case Op::Top:
    case Op::Atom:
      return f;
    case Op::Not:
      return mtl::negate(rewrite_windows(n.lhs, live, window_live));
    case Op::And:
      return mtl::conj(rewrite_windows(n.lhs, live, window_live),
                       rewrite_windows(n.rhs, live, window_live));
    case Op::Or:
      return mtl::disj(rewrite_windows(n.lhs, live, window_live),
                       rewrite_windows(n.rhs, live, window_live));
    case Op::Until:
    case Op::Since: {
      auto l = rewrite_windows(n.lhs, live, window_live);
      auto r = rewrite_windows(n.rhs, live, window_live);
      if (window_live(*n.ivl))
        return n.op == Op::Until ? mtl::until(live, l, r)
                                 : mtl::since(live, l, r);
      return dead_until(n.op, live, l, r);
    }
    case Op::F:
    case Op::P: {
      auto body = rewrite_windows(n.lhs, live, window_live);
      if (window_live(*n.ivl))
        return n.op == Op::F ? mtl::eventually(live, body)
                             : mtl::once(live, body);
      return dead_unary(n.op, live, body);
    }
  }
  throw Error("unreachable metric operator");
}

}  // namespace

mtl::Ptr reduce_instantaneous(const mtl::Ptr& f) {
  return rewrite_windows(f, Interval::singleton(0), contains_zero);
}

mtl::Ptr reduce_instantaneous(const tptl::Ptr& f) {
  using tptl::Op;
  const tptl::Node& n = *f;
  const Interval zero = Interval::singleton(0);
  switch (n.op) {
    case Op::Top: return mtl::top();
    case Op::Atom: return mtl::atom(n.atom);
    case Op::GuardAtomOp:
      // On an instantaneous word every clock and the current time are 0.
      return eval_guard(Valuation{}, Rational(0), n.guard_atom) ? mtl::top()
                                                                : mtl::falsum();
    case Op::Not: return mtl::negate(reduce_instantaneous(n.lhs));
    case Op::And:
      return mtl::conj(reduce_instantaneous(n.lhs), reduce_instantaneous(n.rhs));
    case Op::Or:
      return mtl::disj(reduce_instantaneous(n.lhs), reduce_instantaneous(n.rhs));
    case Op::Until:
      return mtl::until(zero, reduce_instantaneous(n.lhs),
                        reduce_instantaneous(n.rhs));
    case Op::Since:
      return mtl::since(zero, reduce_instantaneous(n.lhs),
                        reduce_instantaneous(n.rhs));
    case Op::F: return mtl::eventually(zero, reduce_instantaneous(n.lhs));
    case Op::P: return mtl::once(zero, reduce_instantaneous(n.lhs));
    case Op::Freeze: return reduce_instantaneous(n.lhs);
  }
  throw Error("unreachable freeze-logic operator");
}

mtl::Ptr reduce_unitary(const mtl::Ptr& f) {
  return rewrite_windows(f, Interval::open(0, 1), covers_unit);
}

}  // namespace tlwb
