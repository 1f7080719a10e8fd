#include "tlwb/logic_ops.hpp"

#include <algorithm>

#include "tlwb/errors.hpp"

namespace tlwb {

namespace {

void classify_walk(const mtl::Node& n, FragmentInfo& info) {
  using mtl::Op;
  if (n.ivl) {
    if (n.op == Op::Until || n.op == Op::Since) info.unary = false;
    if (!n.ivl->is_bounded()) info.bounded = false;
    if (n.ivl->is_singular()) info.non_punctual = false;
    info.max_constant = std::max(info.max_constant, n.ivl->max_constant());
  }
  if (n.lhs) classify_walk(*n.lhs, info);
  if (n.rhs) classify_walk(*n.rhs, info);
}

}  // namespace

FragmentInfo classify_formula(const mtl::Ptr& f) {
  FragmentInfo info;
  classify_walk(*f, info);
  return info;
}

int modal_depth(const mtl::Ptr& f) {
  const mtl::Node& n = *f;
  int l = n.lhs ? modal_depth(n.lhs) : 0;
  int r = n.rhs ? modal_depth(n.rhs) : 0;
  return std::max(l, r) + (n.ivl ? 1 : 0);
}

int modal_depth(const tptl::Ptr& f) {
  using tptl::Op;
  const tptl::Node& n = *f;
  int l = n.lhs ? modal_depth(n.lhs) : 0;
  int r = n.rhs ? modal_depth(n.rhs) : 0;
  bool modal = n.op == Op::Until || n.op == Op::Since || n.op == Op::F ||
               n.op == Op::P;
  return std::max(l, r) + (modal ? 1 : 0);
}

int modal_depth(const ttl::Ptr& f) {
  using ttl::Op;
  const ttl::Node& n = *f;
  int l = n.lhs ? modal_depth(n.lhs) : 0;
  int r = n.rhs ? modal_depth(n.rhs) : 0;
  bool modal =
      n.op == Op::SP || n.op == Op::EP || n.op == Op::X || n.op == Op::Y;
  return std::max(l, r) + (modal ? 1 : 0);
}

int modal_count(const mtl::Ptr& f) {
  const mtl::Node& n = *f;
  int l = n.lhs ? modal_count(n.lhs) : 0;
  int r = n.rhs ? modal_count(n.rhs) : 0;
  return l + r + (n.ivl ? 1 : 0);
}

int modal_count(const tptl::Ptr& f) {
  using tptl::Op;
  const tptl::Node& n = *f;
  int l = n.lhs ? modal_count(n.lhs) : 0;
  int r = n.rhs ? modal_count(n.rhs) : 0;
  bool modal = n.op == Op::Until || n.op == Op::Since || n.op == Op::F ||
               n.op == Op::P;
  return l + r + (modal ? 1 : 0);
}

int modal_count(const ttl::Ptr& f) {
  using ttl::Op;
  const ttl::Node& n = *f;
  int l = n.lhs ? modal_count(n.lhs) : 0;
  int r = n.rhs ? modal_count(n.rhs) : 0;
  bool modal =
      n.op == Op::SP || n.op == Op::EP || n.op == Op::X || n.op == Op::Y;
  return l + r + (modal ? 1 : 0);
}

namespace {

// Truncated interval, or nullopt when it collapses to empty.
std::optional<Interval> truncate_interval(const Interval& ivl, long long n) {
  long long lo = std::min(ivl.lo, n);
  long long hi_v = ivl.hi ? std::min(*ivl.hi, n) : n;
  bool nonempty = lo < hi_v || (lo == hi_v && !ivl.lo_open && !ivl.hi_open);
  if (!nonempty) return std::nullopt;
  return Interval::make(lo, ivl.lo_open, hi_v, ivl.hi_open);
}

}  // namespace

mtl::Ptr truncate_constants(const mtl::Ptr& f, long long n) {
  using mtl::Op;
  if (n < 0) throw DomainError("truncation bound must be non-negative");
  const mtl::Node& node = *f;
  switch (node.op) {
    case Op::Top:
    case Op::Atom:
      return f;
    case Op::Not:
      return mtl::negate(truncate_constants(node.lhs, n));
    case Op::And:
      return mtl::conj(truncate_constants(node.lhs, n),
                       truncate_constants(node.rhs, n));
    case Op::Or:
      return mtl::disj(truncate_constants(node.lhs, n),
                       truncate_constants(node.rhs, n));
    case Op::Until:
    case Op::Since: {
      auto ivl = truncate_interval(*node.ivl, n);
      if (!ivl) return mtl::falsum();  // empty window never fires
      auto l = truncate_constants(node.lhs, n);
      auto r = truncate_constants(node.rhs, n);
      return node.op == Op::Until ? mtl::until(*ivl, l, r)
                                  : mtl::since(*ivl, l, r);
    }
    case Op::F:
    case Op::P: {
      auto ivl = truncate_interval(*node.ivl, n);
      if (!ivl) return mtl::falsum();
      auto body = truncate_constants(node.lhs, n);
      return node.op == Op::F ? mtl::eventually(*ivl, body)
                              : mtl::once(*ivl, body);
    }
  }
  throw Error("unreachable metric operator");
}

GuardAtom normalize_guard(const GuardAtom& a) {
  if (a.c >= 0) return a;
  GuardAtom out = a;
  out.orient = a.orient == GuardOrient::FrozenMinusT ? GuardOrient::TMinusFrozen
                                                     : GuardOrient::FrozenMinusT;
  out.c = -a.c;
  switch (a.op) {
    case CmpOp::LT: out.op = CmpOp::GT; break;
    case CmpOp::LE: out.op = CmpOp::GE; break;
    case CmpOp::GT: out.op = CmpOp::LT; break;
    case CmpOp::GE: out.op = CmpOp::LE; break;
    case CmpOp::EQ: out.op = CmpOp::EQ; break;
  }
  return out;
}

Guard normalize_guard(const Guard& g) {
  Guard out;
  out.atoms.reserve(g.atoms.size());
  for (const GuardAtom& a : g.atoms) out.atoms.push_back(normalize_guard(a));
  return out;
}

}  // namespace tlwb
