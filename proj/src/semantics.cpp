#include "tlwb/semantics.hpp"

#include <unordered_map>

#include "tlwb/errors.hpp"

namespace tlwb {

bool eval_guard(const Valuation& nu, const Rational& t, const GuardAtom& a) {
  Rational d = a.orient == GuardOrient::FrozenMinusT ? nu.get(a.var) - t
                                                     : t - nu.get(a.var);
  Rational c(a.c);
  switch (a.op) {
    case CmpOp::LT: return d < c;
    case CmpOp::LE: return d <= c;
    case CmpOp::GT: return d > c;
    case CmpOp::GE: return d >= c;
    case CmpOp::EQ: return d == c;
  }
  throw Error("unreachable comparison operator");
}

bool eval_guard(const Valuation& nu, const Rational& t, const Guard& g) {
  for (const GuardAtom& a : g.atoms)
    if (!eval_guard(nu, t, a)) return false;
  return true;
}

namespace {

// Beta outputs of the translator share subtrees aggressively; caching on
// (node, position) keeps their evaluation linear in the DAG size.
class MtlEvaluator {
 public:
  explicit MtlEvaluator(const TimedWord& w) : w_(w) {}

  bool eval(std::size_t pos, const mtl::Node& n) {
    // Injective on user-space addresses (48 bits) and positions up to 2^16.
    std::uint64_t key = (reinterpret_cast<std::uintptr_t>(&n) << 16) |
                        (pos & 0xFFFF);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    bool v = compute(pos, n);
    cache_.emplace(key, v);
    return v;
  }

 private:
  bool compute(std::size_t pos, const mtl::Node& n) {
    using mtl::Op;
    switch (n.op) {
      case Op::Top: return true;
      case Op::Atom: return w_.letter(pos) == n.atom;
      case Op::Not: return !eval(pos, *n.lhs);
      case Op::And: return eval(pos, *n.lhs) && eval(pos, *n.rhs);
      case Op::Or: return eval(pos, *n.lhs) || eval(pos, *n.rhs);
      case Op::Until:
        for (std::size_t j = pos + 1; j <= w_.size(); ++j) {
          if (n.ivl->contains(w_.time(j) - w_.time(pos)) && eval(j, *n.rhs)) {
            bool gap = true;
            for (std::size_t k = pos + 1; k < j && gap; ++k)
              gap = eval(k, *n.lhs);
            if (gap) return true;
          }
        }
        return false;
      case Op::Since:
        for (std::size_t j = pos; j-- > 1;) {
          if (n.ivl->contains(w_.time(pos) - w_.time(j)) && eval(j, *n.rhs)) {
            bool gap = true;
            for (std::size_t k = j + 1; k < pos && gap; ++k)
              gap = eval(k, *n.lhs);
            if (gap) return true;
          }
        }
        return false;
      case Op::F:
        for (std::size_t j = pos + 1; j <= w_.size(); ++j)
          if (n.ivl->contains(w_.time(j) - w_.time(pos)) && eval(j, *n.lhs))
            return true;
        return false;
      case Op::P:
        for (std::size_t j = pos; j-- > 1;)
          if (n.ivl->contains(w_.time(pos) - w_.time(j)) && eval(j, *n.lhs))
            return true;
        return false;
    }
    throw Error("unreachable metric operator");
  }

  const TimedWord& w_;
  std::unordered_map<std::uint64_t, bool> cache_;
};

}  // namespace

bool eval_mtl(const TimedWord& w, std::size_t pos, const mtl::Ptr& f) {
  w.at(pos);  // bounds check
  MtlEvaluator ev(w);
  return ev.eval(pos, *f);
}

bool eval_tptl(const TimedWord& w, std::size_t pos, const Valuation& nu,
               const tptl::Ptr& f) {
  using tptl::Op;
  w.at(pos);
  const tptl::Node& n = *f;
  switch (n.op) {
    case Op::Top: return true;
    case Op::Atom: return w.letter(pos) == n.atom;
    case Op::GuardAtomOp: return eval_guard(nu, w.time(pos), n.guard_atom);
    case Op::Not: return !eval_tptl(w, pos, nu, n.lhs);
    case Op::And:
      return eval_tptl(w, pos, nu, n.lhs) && eval_tptl(w, pos, nu, n.rhs);
    case Op::Or:
      return eval_tptl(w, pos, nu, n.lhs) || eval_tptl(w, pos, nu, n.rhs);
    case Op::Until:
      for (std::size_t j = pos + 1; j <= w.size(); ++j) {
        if (eval_tptl(w, j, nu, n.rhs)) {
          bool gap = true;
          for (std::size_t k = pos + 1; k < j && gap; ++k)
            gap = eval_tptl(w, k, nu, n.lhs);
          if (gap) return true;
        }
      }
      return false;
    case Op::Since:
      for (std::size_t j = pos; j-- > 1;) {
        if (eval_tptl(w, j, nu, n.rhs)) {
          bool gap = true;
          for (std::size_t k = j + 1; k < pos && gap; ++k)
            gap = eval_tptl(w, k, nu, n.lhs);
          if (gap) return true;
        }
      }
      return false;
    case Op::F:
      for (std::size_t j = pos + 1; j <= w.size(); ++j)
        if (eval_tptl(w, j, nu, n.lhs)) return true;
      return false;
    case Op::P:
      for (std::size_t j = pos; j-- > 1;)
        if (eval_tptl(w, j, nu, n.lhs)) return true;
      return false;
    case Op::Freeze:
      return eval_tptl(w, pos, nu.set(n.var, w.time(pos)), n.lhs);
  }
  throw Error("unreachable freeze-logic operator");
}

namespace {

bool event_matches(const TimedWord& w, std::size_t pos, const Valuation& nu,
                   const ttl::GuardedEvent& e) {
  return w.letter(pos) == e.letter && eval_guard(nu, w.time(pos), e.guard);
}

}  // namespace

bool eval_ttl(const TimedWord& w, std::size_t pos, const Valuation& nu,
              const ttl::Ptr& f) {
  using ttl::Op;
  w.at(pos);
  const ttl::Node& n = *f;
  switch (n.op) {
    case Op::Top: return true;
    case Op::Event: return event_matches(w, pos, nu, n.event);
    case Op::Not: return !eval_ttl(w, pos, nu, n.lhs);
    case Op::And:
      return eval_ttl(w, pos, nu, n.lhs) && eval_ttl(w, pos, nu, n.rhs);
    case Op::Or:
      return eval_ttl(w, pos, nu, n.lhs) || eval_ttl(w, pos, nu, n.rhs);
    case Op::SP: return eval_ttl(w, 1, nu, n.lhs);
    case Op::EP: return eval_ttl(w, w.size(), nu, n.lhs);
    case Op::X:
      for (std::size_t j = pos + 1; j <= w.size(); ++j)
        if (event_matches(w, j, nu, n.event)) return eval_ttl(w, j, nu, n.lhs);
      return false;
    case Op::Y:
      for (std::size_t j = pos; j-- > 1;)
        if (event_matches(w, j, nu, n.event)) return eval_ttl(w, j, nu, n.lhs);
      return false;
    case Op::Freeze:
      return eval_ttl(w, pos, nu.set(n.var, w.time(pos)), n.lhs);
  }
  throw Error("unreachable event-logic operator");
}

bool lang_member(const TimedWord& w, const mtl::Ptr& f) {
  return eval_mtl(w, 1, f);
}

bool lang_member(const TimedWord& w, const tptl::Ptr& f) {
  if (!w.anchored_zero())
    throw DomainError(
        "freeze-logic membership needs a word starting at time 0");
  return eval_tptl(w, 1, Valuation{}, f);
}

bool lang_member(const TimedWord& w, const ttl::Ptr& f) {
  if (!w.anchored_zero())
    throw DomainError(
        "event-logic membership needs a word starting at time 0");
  return eval_ttl(w, 1, Valuation{}, f);
}

}  // namespace tlwb
