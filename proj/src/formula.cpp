#include "tlwb/formula.hpp"

#include <atomic>

#include "tlwb/errors.hpp"

namespace tlwb {

NodeId next_node_id() {
  static std::atomic<NodeId> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

namespace mtl {

namespace {
Ptr node(Op op, std::string atom, std::optional<Interval> ivl, Ptr l, Ptr r) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->id = next_node_id();
  n->atom = std::move(atom);
  n->ivl = std::move(ivl);
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}
}  // namespace

Ptr top() { return node(Op::Top, "", {}, nullptr, nullptr); }

Ptr atom(std::string letter) {
  require(!letter.empty(), "atom must name a letter");
  return node(Op::Atom, std::move(letter), {}, nullptr, nullptr);
}

Ptr negate(Ptr f) {
  require(f != nullptr, "negation of null formula");
  return node(Op::Not, "", {}, std::move(f), nullptr);
}

Ptr conj(Ptr l, Ptr r) {
  require(l && r, "conjunction of null formula");
  return node(Op::And, "", {}, std::move(l), std::move(r));
}

Ptr disj(Ptr l, Ptr r) {
  require(l && r, "disjunction of null formula");
  return node(Op::Or, "", {}, std::move(l), std::move(r));
}

Ptr until(Interval ivl, Ptr l, Ptr r) {
  require(l && r, "until of null formula");
  return node(Op::Until, "", std::move(ivl), std::move(l), std::move(r));
}

Ptr since(Interval ivl, Ptr l, Ptr r) {
  require(l && r, "since of null formula");
  return node(Op::Since, "", std::move(ivl), std::move(l), std::move(r));
}

Ptr eventually(Interval ivl, Ptr f) {
  require(f != nullptr, "eventually of null formula");
  return node(Op::F, "", std::move(ivl), std::move(f), nullptr);
}

Ptr once(Interval ivl, Ptr f) {
  require(f != nullptr, "once of null formula");
  return node(Op::P, "", std::move(ivl), std::move(f), nullptr);
}

Ptr falsum() { return negate(top()); }

}  // namespace mtl

namespace tptl {

namespace {
Ptr node(Op op, Ptr l, Ptr r) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->id = next_node_id();
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}
}  // namespace

Ptr top() { return node(Op::Top, nullptr, nullptr); }

Ptr atom(std::string letter) {
  require(!letter.empty(), "atom must name a letter");
  auto n = std::make_shared<Node>();
  n->op = Op::Atom;
  n->id = next_node_id();
  n->atom = std::move(letter);
  return n;
}

Ptr guard_atom(GuardAtom g) {
  require(!g.var.empty(), "guard atom must name a variable");
  auto n = std::make_shared<Node>();
  n->op = Op::GuardAtomOp;
  n->id = next_node_id();
  n->guard_atom = std::move(g);
  return n;
}

Ptr negate(Ptr f) {
  require(f != nullptr, "negation of null formula");
  return node(Op::Not, std::move(f), nullptr);
}

Ptr conj(Ptr l, Ptr r) {
  require(l && r, "conjunction of null formula");
  return node(Op::And, std::move(l), std::move(r));
}

Ptr disj(Ptr l, Ptr r) {
  require(l && r, "disjunction of null formula");
  return node(Op::Or, std::move(l), std::move(r));
}

Ptr until(Ptr l, Ptr r) {
  require(l && r, "until of null formula");
  return node(Op::Until, std::move(l), std::move(r));
}

Ptr since(Ptr l, Ptr r) {
  require(l && r, "since of null formula");
  return node(Op::Since, std::move(l), std::move(r));
}

Ptr eventually(Ptr f) {
  require(f != nullptr, "eventually of null formula");
  return node(Op::F, std::move(f), nullptr);
}

Ptr once(Ptr f) {
  require(f != nullptr, "once of null formula");
  return node(Op::P, std::move(f), nullptr);
}

Ptr freeze(std::string var, Ptr f) {
  require(f != nullptr, "freeze of null formula");
  require(!var.empty(), "freeze must name a variable");
  auto n = std::make_shared<Node>();
  n->op = Op::Freeze;
  n->id = next_node_id();
  n->var = std::move(var);
  n->lhs = std::move(f);
  return n;
}

}  // namespace tptl

namespace ttl {

namespace {
Ptr node(Op op, Ptr l, Ptr r) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->id = next_node_id();
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}
}  // namespace

Ptr top() { return node(Op::Top, nullptr, nullptr); }

Ptr event(GuardedEvent e) {
  require(!e.letter.empty(), "guarded event must name a letter");
  auto n = std::make_shared<Node>();
  n->op = Op::Event;
  n->id = next_node_id();
  n->event = std::move(e);
  return n;
}

Ptr negate(Ptr f) {
  require(f != nullptr, "negation of null formula");
  return node(Op::Not, std::move(f), nullptr);
}

Ptr conj(Ptr l, Ptr r) {
  require(l && r, "conjunction of null formula");
  return node(Op::And, std::move(l), std::move(r));
}

Ptr disj(Ptr l, Ptr r) {
  require(l && r, "disjunction of null formula");
  return node(Op::Or, std::move(l), std::move(r));
}

Ptr start_anchor(Ptr f) {
  require(f != nullptr, "start anchor of null formula");
  return node(Op::SP, std::move(f), nullptr);
}

Ptr end_anchor(Ptr f) {
  require(f != nullptr, "end anchor of null formula");
  return node(Op::EP, std::move(f), nullptr);
}

Ptr next_event(GuardedEvent e, Ptr f) {
  require(f != nullptr, "next-event jump needs a body");
  require(!e.letter.empty(), "guarded event must name a letter");
  auto n = std::make_shared<Node>();
  n->op = Op::X;
  n->id = next_node_id();
  n->event = std::move(e);
  n->lhs = std::move(f);
  return n;
}

Ptr prev_event(GuardedEvent e, Ptr f) {
  require(f != nullptr, "previous-event jump needs a body");
  require(!e.letter.empty(), "guarded event must name a letter");
  auto n = std::make_shared<Node>();
  n->op = Op::Y;
  n->id = next_node_id();
  n->event = std::move(e);
  n->lhs = std::move(f);
  return n;
}

Ptr freeze(std::string var, Ptr f) {
  require(f != nullptr, "freeze of null formula");
  require(!var.empty(), "freeze must name a variable");
  auto n = std::make_shared<Node>();
  n->op = Op::Freeze;
  n->id = next_node_id();
  n->var = std::move(var);
  n->lhs = std::move(f);
  return n;
}

}  // namespace ttl

}  // namespace tlwb
