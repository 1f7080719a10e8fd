#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tlwb/interval.hpp"
#include "tlwb/rational.hpp"

namespace tlwb {

using NodeId = std::uint64_t;

// Fresh id for a newly built node. Ids are unique per node object, hence
// unique within any single formula; printing never exposes them.
NodeId next_node_id();

// ---------------------------------------------------------------------------
// Freeze-variable guards, shared by the freeze logic and the event logic.
// A guard is a conjunction of comparisons between a frozen clock x and the
// current time T; the empty conjunction is true.
// ---------------------------------------------------------------------------

enum class CmpOp { LT, LE, GT, GE, EQ };

enum class GuardOrient {
  FrozenMinusT,  // x - T ~ c
  TMinusFrozen,  // T - x ~ c
};

struct GuardAtom {
  GuardOrient orient;
  std::string var;
  CmpOp op;
  long long c = 0;

  bool operator==(const GuardAtom&) const = default;
};

struct Guard {
  std::vector<GuardAtom> atoms;  // conjunction; empty means true

  bool operator==(const Guard&) const = default;
};

// Clock valuation: unset variables read as 0, which is exactly the initial
// valuation that language membership anchors on.
class Valuation {
 public:
  Rational get(const std::string& var) const {
    auto it = m_.find(var);
    return it == m_.end() ? Rational(0) : it->second;
  }
  Valuation set(const std::string& var, Rational value) const {
    Valuation out = *this;
    out.m_[var] = std::move(value);
    return out;
  }
  bool operator==(const Valuation& o) const { return m_ == o.m_; }

 private:
  std::map<std::string, Rational> m_;
};

// ---------------------------------------------------------------------------
// Metric temporal logic with strict interval-constrained until/since.
// F and P are first-class nodes; they mean exactly (top U_I f) / (top S_I f).
// ---------------------------------------------------------------------------

namespace mtl {

enum class Op { Top, Atom, Not, And, Or, Until, Since, F, P };

struct Node;
using Ptr = std::shared_ptr<const Node>;

struct Node {
  Op op;
  NodeId id;
  std::string atom;             // Op::Atom
  std::optional<Interval> ivl;  // timed operators
  Ptr lhs, rhs;                 // rhs only for binary operators
};

Ptr top();
Ptr atom(std::string letter);
Ptr negate(Ptr f);
Ptr conj(Ptr l, Ptr r);
Ptr disj(Ptr l, Ptr r);
Ptr until(Interval ivl, Ptr l, Ptr r);
Ptr since(Interval ivl, Ptr l, Ptr r);
Ptr eventually(Interval ivl, Ptr f);  // F_I
Ptr once(Interval ivl, Ptr f);        // P_I
Ptr falsum();                         // canonical (not (top))

}  // namespace mtl

// ---------------------------------------------------------------------------
// Freeze logic: untimed strict until/since plus freeze quantification and
// clock-constraint atoms.
// ---------------------------------------------------------------------------

namespace tptl {

enum class Op { Top, Atom, GuardAtomOp, Not, And, Or, Until, Since, F, P, Freeze };

struct Node;
using Ptr = std::shared_ptr<const Node>;

struct Node {
  Op op;
  NodeId id;
  std::string atom;      // Op::Atom
  GuardAtom guard_atom;  // Op::GuardAtomOp
  std::string var;       // Op::Freeze
  Ptr lhs, rhs;
};

Ptr top();
Ptr atom(std::string letter);
Ptr guard_atom(GuardAtom g);
Ptr negate(Ptr f);
Ptr conj(Ptr l, Ptr r);
Ptr disj(Ptr l, Ptr r);
Ptr until(Ptr l, Ptr r);
Ptr since(Ptr l, Ptr r);
Ptr eventually(Ptr f);
Ptr once(Ptr f);
Ptr freeze(std::string var, Ptr f);

}  // namespace tptl

// ---------------------------------------------------------------------------
// Event-clock-style freeze logic over guarded events: jump to the first
// later (X) or latest earlier (Y) position whose event matches, plus jumps
// to the start (SP) and end (EP) of the word.
// ---------------------------------------------------------------------------

namespace ttl {

struct GuardedEvent {
  std::string letter;
  Guard guard;

  bool operator==(const GuardedEvent&) const = default;
};

enum class Op { Top, Event, Not, And, Or, SP, EP, X, Y, Freeze };

struct Node;
using Ptr = std::shared_ptr<const Node>;

struct Node {
  Op op;
  NodeId id;
  GuardedEvent event;  // Op::Event and the jump label of Op::X / Op::Y
  std::string var;     // Op::Freeze
  Ptr lhs, rhs;
};

Ptr top();
Ptr event(GuardedEvent e);
Ptr negate(Ptr f);
Ptr conj(Ptr l, Ptr r);
Ptr disj(Ptr l, Ptr r);
Ptr start_anchor(Ptr f);                 // SP
Ptr end_anchor(Ptr f);                   // EP
Ptr next_event(GuardedEvent e, Ptr f);   // X_theta
Ptr prev_event(GuardedEvent e, Ptr f);   // Y_theta
Ptr freeze(std::string var, Ptr f);

}  // namespace ttl

}  // namespace tlwb
