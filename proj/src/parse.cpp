#include "tlwb/parse.hpp"

#include <cctype>
#include <functional>

#include "tlwb/errors.hpp"
#include "tlwb/timed_word.hpp"

namespace tlwb {

namespace {

bool is_symbol_char(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '_' || c == '-';
}

class Parser {
 public:
  Parser(const std::string& text, Logic logic) : s_(text), logic_(logic) {}

  mtl::Ptr run_mtl() {
    auto f = parse_formula_mtl();
    finish();
    return f;
  }
  tptl::Ptr run_tptl() {
    auto f = parse_formula_tptl();
    finish();
    return f;
  }
  ttl::Ptr run_ttl() {
    auto f = parse_formula_ttl();
    finish();
    return f;
  }

 private:
  const std::string& s_;
  Logic logic_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, i_);
  }

  void skip_ws() {
    while (i_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
        ++i_;
      } else if (s_[i_] == '#') {
        while (i_ < s_.size() && s_[i_] != '\n') ++i_;
      } else {
        break;
      }
    }
  }

  char peek() {
    skip_ws();
    if (i_ >= s_.size()) fail("unexpected end of input");
    return s_[i_];
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }

  bool at_close() { return peek() == ')'; }

  void finish() {
    skip_ws();
    if (i_ < s_.size()) fail("trailing input after formula");
  }

  std::string symbol() {
    skip_ws();
    std::size_t start = i_;
    while (i_ < s_.size() && is_symbol_char(s_[i_])) ++i_;
    if (i_ == start) fail("expected a symbol");
    return s_.substr(start, i_ - start);
  }

  std::string atom_name() {
    std::string name = symbol();
    if (!valid_letter(name)) fail("bad atom '" + name + "'");
    return name;
  }

  // Intervals are requested by context (after a metric operator head), so
  // '(' never clashes with the list opener here.
  Interval interval() {
    skip_ws();
    std::size_t start = i_;
    char open = peek();
    if (open != '[' && open != '(') fail("expected an interval");
    ++i_;
    while (i_ < s_.size() && s_[i_] != ')' && s_[i_] != ']') {
      if (s_[i_] == '(' || s_[i_] == '[') fail("expected an interval");
      ++i_;
    }
    if (i_ >= s_.size()) fail("unterminated interval");
    ++i_;
    std::string text = s_.substr(start, i_ - start);
    // strip internal whitespace so "[0, 2)" works
    std::string tight;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) tight += c;
    try {
      return Interval::parse(tight);
    } catch (const ParseError& e) {
      i_ = start;
      fail(e.what());
    }
  }

  long long integer() {
    skip_ws();
    std::string tok = symbol();
    bool neg = false;
    std::size_t p = 0;
    if (p < tok.size() && tok[p] == '-') {
      neg = true;
      ++p;
    }
    if (p >= tok.size()) fail("expected an integer");
    long long v = 0;
    for (; p < tok.size(); ++p) {
      if (!std::isdigit(static_cast<unsigned char>(tok[p])))
        fail("bad integer '" + tok + "'");
      v = v * 10 + (tok[p] - '0');
      if (v > 1000000000) fail("integer constant too large");
    }
    return neg ? -v : v;
  }

  CmpOp cmp_op() {
    skip_ws();
    std::size_t start = i_;
    while (i_ < s_.size() && (s_[i_] == '<' || s_[i_] == '>' || s_[i_] == '='))
      ++i_;
    std::string tok = s_.substr(start, i_ - start);
    if (tok == "<") return CmpOp::LT;
    if (tok == "<=") return CmpOp::LE;
    if (tok == ">") return CmpOp::GT;
    if (tok == ">=") return CmpOp::GE;
    if (tok == "=") return CmpOp::EQ;
    i_ = start;
    fail("expected a comparison operator");
  }

  GuardAtom cmp_body() {
    std::string diff = symbol();
    GuardAtom g;
    if (diff.size() > 2 && diff.compare(0, 2, "T-") == 0) {
      g.orient = GuardOrient::TMinusFrozen;
      g.var = diff.substr(2);
    } else if (diff.size() > 2 && diff.compare(diff.size() - 2, 2, "-T") == 0) {
      g.orient = GuardOrient::FrozenMinusT;
      g.var = diff.substr(0, diff.size() - 2);
    } else {
      fail("expected 'x-T' or 'T-x' in cmp, got '" + diff + "'");
    }
    if (!valid_letter(g.var)) fail("bad clock variable '" + g.var + "'");
    g.op = cmp_op();
    g.c = integer();
    return g;
  }

  // guard ::= (tt) | (cmp ...) | (and guard guard ...), flattened
  Guard guard() {
    Guard out;
    std::function<void()> one = [&]() {
      expect('(');
      std::string head = symbol();
      if (head == "tt") {
        // empty conjunction
      } else if (head == "cmp") {
        out.atoms.push_back(cmp_body());
      } else if (head == "and") {
        int n = 0;
        while (!at_close()) {
          one();
          ++n;
        }
        if (n < 2) fail("guard 'and' needs at least two conjuncts");
      } else {
        fail("unknown guard head '" + head + "'");
      }
      expect(')');
    };
    one();
    return out;
  }

  ttl::GuardedEvent guarded_event() {
    expect('(');
    std::string head = symbol();
    if (head != "ev") fail("expected a guarded event '(ev a g)'");
    ttl::GuardedEvent e;
    e.letter = atom_name();
    e.guard = guard();
    expect(')');
    return e;
  }

  template <typename Ptr, typename ParseOne, typename Fold>
  Ptr nary(ParseOne parse_one, Fold fold) {
    std::vector<Ptr> parts;
    while (!at_close()) parts.push_back(parse_one());
    if (parts.size() < 2) fail("'and'/'or' need at least two operands");
    Ptr acc = parts.back();
    for (std::size_t k = parts.size() - 1; k-- > 0;)
      acc = fold(parts[k], acc);
    return acc;
  }

  [[noreturn]] void unknown_head(const std::string& head) {
    const char* logic_name = logic_ == Logic::Mtl    ? "metric"
                             : logic_ == Logic::Tptl ? "freeze"
                                                     : "event";
    fail("operator '" + head + "' is not part of the " + logic_name + " logic");
  }

  mtl::Ptr parse_formula_mtl() {
    if (peek() != '(') return mtl::atom(atom_name());
    expect('(');
    std::string head = symbol();
    mtl::Ptr out;
    if (head == "top") {
      out = mtl::top();
    } else if (head == "not") {
      out = mtl::negate(parse_formula_mtl());
    } else if (head == "and") {
      out = nary<mtl::Ptr>([&] { return parse_formula_mtl(); },
                           [](mtl::Ptr a, mtl::Ptr b) { return mtl::conj(a, b); });
    } else if (head == "or") {
      out = nary<mtl::Ptr>([&] { return parse_formula_mtl(); },
                           [](mtl::Ptr a, mtl::Ptr b) { return mtl::disj(a, b); });
    } else if (head == "U" || head == "S") {
      Interval ivl = interval();
      auto l = parse_formula_mtl();
      auto r = parse_formula_mtl();
      out = head == "U" ? mtl::until(ivl, l, r) : mtl::since(ivl, l, r);
    } else if (head == "F" || head == "P") {
      Interval ivl = interval();
      auto f = parse_formula_mtl();
      out = head == "F" ? mtl::eventually(ivl, f) : mtl::once(ivl, f);
    } else {
      unknown_head(head);
    }
    expect(')');
    return out;
  }

  tptl::Ptr parse_formula_tptl() {
    if (peek() != '(') return tptl::atom(atom_name());
    expect('(');
    std::string head = symbol();
    tptl::Ptr out;
    if (head == "top") {
      out = tptl::top();
    } else if (head == "not") {
      out = tptl::negate(parse_formula_tptl());
    } else if (head == "and") {
      out = nary<tptl::Ptr>(
          [&] { return parse_formula_tptl(); },
          [](tptl::Ptr a, tptl::Ptr b) { return tptl::conj(a, b); });
    } else if (head == "or") {
      out = nary<tptl::Ptr>(
          [&] { return parse_formula_tptl(); },
          [](tptl::Ptr a, tptl::Ptr b) { return tptl::disj(a, b); });
    } else if (head == "U" || head == "S") {
      auto l = parse_formula_tptl();
      auto r = parse_formula_tptl();
      out = head == "U" ? tptl::until(l, r) : tptl::since(l, r);
    } else if (head == "F" || head == "P") {
      auto f = parse_formula_tptl();
      out = head == "F" ? tptl::eventually(f) : tptl::once(f);
    } else if (head == "freeze") {
      std::string var = atom_name();
      out = tptl::freeze(var, parse_formula_tptl());
    } else if (head == "cmp") {
      out = tptl::guard_atom(cmp_body());
    } else {
      unknown_head(head);
    }
    expect(')');
    return out;
  }

  ttl::Ptr parse_formula_ttl() {
    if (peek() != '(') {
      // The event logic has no bare letter atoms; (ev a (tt)) plays that role.
      std::string name = symbol();
      fail("bare atom '" + name + "' is not an event-logic formula; write (ev " +
           name + " (tt))");
    }
    expect('(');
    std::string head = symbol();
    ttl::Ptr out;
    if (head == "top") {
      out = ttl::top();
    } else if (head == "not") {
      out = ttl::negate(parse_formula_ttl());
    } else if (head == "and") {
      out = nary<ttl::Ptr>([&] { return parse_formula_ttl(); },
                           [](ttl::Ptr a, ttl::Ptr b) { return ttl::conj(a, b); });
    } else if (head == "or") {
      out = nary<ttl::Ptr>([&] { return parse_formula_ttl(); },
                           [](ttl::Ptr a, ttl::Ptr b) { return ttl::disj(a, b); });
    } else if (head == "sp") {
      out = ttl::start_anchor(parse_formula_ttl());
    } else if (head == "ep") {
      out = ttl::end_anchor(parse_formula_ttl());
    } else if (head == "X" || head == "Y") {
      ttl::GuardedEvent e = guarded_event();
      auto f = parse_formula_ttl();
      out = head == "X" ? ttl::next_event(e, f) : ttl::prev_event(e, f);
    } else if (head == "ev") {
      ttl::GuardedEvent e;
      e.letter = atom_name();
      e.guard = guard();
      out = ttl::event(e);
    } else if (head == "freeze") {
      std::string var = atom_name();
      out = ttl::freeze(var, parse_formula_ttl());
    } else {
      unknown_head(head);
    }
    expect(')');
    return out;
  }
};

}  // namespace

mtl::Ptr parse_mtl(const std::string& text) {
  return Parser(text, Logic::Mtl).run_mtl();
}

tptl::Ptr parse_tptl(const std::string& text) {
  return Parser(text, Logic::Tptl).run_tptl();
}

ttl::Ptr parse_ttl(const std::string& text) {
  return Parser(text, Logic::Ttl).run_ttl();
}

}  // namespace tlwb
