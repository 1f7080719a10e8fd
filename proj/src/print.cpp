#include "tlwb/print.hpp"

#include "tlwb/errors.hpp"

namespace tlwb {

namespace {

const char* cmp_str(CmpOp op) {
  switch (op) {
    case CmpOp::LT: return "<";
    case CmpOp::LE: return "<=";
    case CmpOp::GT: return ">";
    case CmpOp::GE: return ">=";
    case CmpOp::EQ: return "=";
  }
  throw Error("unreachable comparison operator");
}

void print_guard_atom(std::string& out, const GuardAtom& a) {
  out += "(cmp ";
  if (a.orient == GuardOrient::FrozenMinusT) {
    out += a.var;
    out += "-T";
  } else {
    out += "T-";
    out += a.var;
  }
  out += ' ';
  out += cmp_str(a.op);
  out += ' ';
  out += std::to_string(a.c);
  out += ')';
}

void print_guard(std::string& out, const Guard& g) {
  if (g.atoms.empty()) {
    out += "(tt)";
  } else if (g.atoms.size() == 1) {
    print_guard_atom(out, g.atoms.front());
  } else {
    out += "(and";
    for (const GuardAtom& a : g.atoms) {
      out += ' ';
      print_guard_atom(out, a);
    }
    out += ')';
  }
}

void print_mtl(std::string& out, const mtl::Node& n) {
  using mtl::Op;
  switch (n.op) {
    case Op::Top: out += "(top)"; return;
    case Op::Atom: out += n.atom; return;
    case Op::Not:
      out += "(not ";
      print_mtl(out, *n.lhs);
      out += ')';
      return;
    case Op::And:
    case Op::Or:
      out += n.op == Op::And ? "(and " : "(or ";
      print_mtl(out, *n.lhs);
      out += ' ';
      print_mtl(out, *n.rhs);
      out += ')';
      return;
    case Op::Until:
    case Op::Since:
      out += n.op == Op::Until ? "(U " : "(S ";
      out += n.ivl->str();
      out += ' ';
      print_mtl(out, *n.lhs);
      out += ' ';
      print_mtl(out, *n.rhs);
      out += ')';
      return;
    case Op::F:
    case Op::P:
      out += n.op == Op::F ? "(F " : "(P ";
      out += n.ivl->str();
      out += ' ';
      print_mtl(out, *n.lhs);
      out += ')';
      return;
  }
  throw Error("unreachable metric operator");
}

void print_tptl(std::string& out, const tptl::Node& n) {
  using tptl::Op;
  switch (n.op) {
    case Op::Top: out += "(top)"; return;
    case Op::Atom: out += n.atom; return;
    case Op::GuardAtomOp: print_guard_atom(out, n.guard_atom); return;
    case Op::Not:
      out += "(not ";
      print_tptl(out, *n.lhs);
      out += ')';
      return;
    case Op::And:
    case Op::Or:
      out += n.op == Op::And ? "(and " : "(or ";
      print_tptl(out, *n.lhs);
      out += ' ';
      print_tptl(out, *n.rhs);
      out += ')';
      return;
    case Op::Until:
    case Op::Since:
      out += n.op == Op::Until ? "(U " : "(S ";
      print_tptl(out, *n.lhs);
      out += ' ';
      print_tptl(out, *n.rhs);
      out += ')';
      return;
    case Op::F:
    case Op::P:
      out += n.op == Op::F ? "(F " : "(P ";
      print_tptl(out, *n.lhs);
      out += ')';
      return;
    case Op::Freeze:
      out += "(freeze ";
      out += n.var;
      out += ' ';
      print_tptl(out, *n.lhs);
      out += ')';
      return;
  }
  throw Error("unreachable freeze-logic operator");
}

void print_event(std::string& out, const ttl::GuardedEvent& e) {
  out += "(ev ";
  out += e.letter;
  out += ' ';
  print_guard(out, e.guard);
  out += ')';
}

void print_ttl(std::string& out, const ttl::Node& n) {
  using ttl::Op;
  switch (n.op) {
    case Op::Top: out += "(top)"; return;
    case Op::Event: print_event(out, n.event); return;
    case Op::Not:
      out += "(not ";
      print_ttl(out, *n.lhs);
      out += ')';
      return;
    case Op::And:
    case Op::Or:
      out += n.op == Op::And ? "(and " : "(or ";
      print_ttl(out, *n.lhs);
      out += ' ';
      print_ttl(out, *n.rhs);
      out += ')';
      return;
    case Op::SP:
    case Op::EP:
      out += n.op == Op::SP ? "(sp " : "(ep ";
      print_ttl(out, *n.lhs);
      out += ')';
      return;
    case Op::X:
    case Op::Y:
      out += n.op == Op::X ? "(X " : "(Y ";
      print_event(out, n.event);
      out += ' ';
      print_ttl(out, *n.lhs);
      out += ')';
      return;
    case Op::Freeze:
      out += "(freeze ";
      out += n.var;
      out += ' ';
      print_ttl(out, *n.lhs);
      out += ')';
      return;
  }
  throw Error("unreachable event-logic operator");
}

}  // namespace

std::string print(const mtl::Ptr& f) {
  std::string out;
  print_mtl(out, *f);
  return out;
}

std::string print(const tptl::Ptr& f) {
  std::string out;
  print_tptl(out, *f);
  return out;
}

std::string print(const ttl::Ptr& f) {
  std::string out;
  print_ttl(out, *f);
  return out;
}

std::string print(const Guard& g) {
  std::string out;
  print_guard(out, g);
  return out;
}

std::string print(const GuardAtom& a) {
  std::string out;
  print_guard_atom(out, a);
  return out;
}

}  // namespace tlwb
