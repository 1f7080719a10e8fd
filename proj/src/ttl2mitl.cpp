#include "tlwb/ttl2mitl.hpp"

#include <sstream>
#include <utility>

#include "tlwb/errors.hpp"
#include "tlwb/logic_ops.hpp"
#include "tlwb/print.hpp"
#include "tlwb/semantics.hpp"

namespace tlwb {

namespace {

using ttl::Op;

// The unsubscripted F/P of the target fragment. Patched mode reads them over
// [0,inf) so that a later position at the same timestamp still counts;
// Literal mode keeps the strict (0,inf) reading.
Interval free_ivl(GuardMode mode) {
  return mode == GuardMode::Literal ? Interval::unbounded(0, true)
                                    : Interval::unbounded(0, false);
}

// True exactly at position 1: no position lies strictly before.
mtl::Ptr first_position(GuardMode mode) {
  return mtl::negate(mtl::once(free_ivl(mode), mtl::top()));
}

// True exactly at the last position.
mtl::Ptr last_position(GuardMode mode) {
  return mtl::negate(mtl::eventually(free_ivl(mode), mtl::top()));
}

void walk_pos(const TimedWord& w, const ttl::Ptr& node,
              std::optional<std::size_t> pos, const Valuation& val,
              ParseInfo& out) {
  bool fresh =
      out.nodes.emplace(node->id, PosVal{pos, pos ? val : Valuation{}}).second;
  if (!fresh)
    throw DomainError(
        "event-logic formula shares subformula nodes; rebuild it as a tree");
  if (!pos) {
    // An undefined position makes the whole subtree inert.
    if (node->lhs) walk_pos(w, node->lhs, std::nullopt, Valuation{}, out);
    if (node->rhs) walk_pos(w, node->rhs, std::nullopt, Valuation{}, out);
    return;
  }
  switch (node->op) {
    case Op::Top:
    case Op::Event:
      return;
    case Op::Not:
      walk_pos(w, node->lhs, pos, val, out);
      return;
    case Op::And:
    case Op::Or:
      walk_pos(w, node->lhs, pos, val, out);
      walk_pos(w, node->rhs, pos, val, out);
      return;
    case Op::Freeze:
      walk_pos(w, node->lhs, pos, val.set(node->var, w.time(*pos)), out);
      return;
    case Op::SP:
      walk_pos(w, node->lhs, std::size_t{1}, val, out);
      return;
    case Op::EP:
      walk_pos(w, node->lhs, w.size(), val, out);
      return;
    case Op::X: {
      std::optional<std::size_t> hit;
      for (std::size_t j = *pos + 1; j <= w.size(); ++j) {
        if (w.letter(j) == node->event.letter &&
            eval_guard(val, w.time(j), node->event.guard)) {
          hit = j;
          break;
        }
      }
      walk_pos(w, node->lhs, hit, val, out);
      return;
    }
    case Op::Y: {
      std::optional<std::size_t> hit;
      for (std::size_t j = *pos; j-- > 1;) {
        if (w.letter(j) == node->event.letter &&
            eval_guard(val, w.time(j), node->event.guard)) {
          hit = j;
          break;
        }
      }
      walk_pos(w, node->lhs, hit, val, out);
      return;
    }
  }
}

void collect_nodes(const ttl::Ptr& f, std::vector<ttl::Ptr>& out) {
  if (!f) return;
  out.push_back(f);
  collect_nodes(f->lhs, out);
  collect_nodes(f->rhs, out);
}

void collect_vars(const ttl::Ptr& f, std::set<std::string>& out) {
  if (!f) return;
  if (f->op == Op::Freeze) out.insert(f->var);
  if (f->op == Op::Event || f->op == Op::X || f->op == Op::Y) {
    for (const auto& a : f->event.guard.atoms) out.insert(a.var);
  }
  collect_vars(f->lhs, out);
  collect_vars(f->rhs, out);
}

// One comparison against the frozen value of a clock, rendered as metric
// modalities around the characterizer A of the freezing position. Writing
// d for (frozen time - now), the x-T orientation constrains d directly and
// the T-x orientation constrains -d, so the two mirror under an F/P swap.
// The one-sided table row looks for the freezing position ahead of the
// current one; Patched mode adds the same-position and behind-position
// disjuncts that make the window direction-complete.
mtl::Ptr translate_atom(const GuardAtom& raw, const mtl::Ptr& A,
                        GuardMode mode, TranslateStats& st) {
  GuardAtom a = normalize_guard(raw);
  bool fut = a.orient == GuardOrient::FrozenMinusT;
  auto prim = [&](Interval ivl) {
    return fut ? mtl::eventually(ivl, A) : mtl::once(ivl, A);
  };
  auto opp = [&](Interval ivl) {
    return fut ? mtl::once(ivl, A) : mtl::eventually(ivl, A);
  };
  auto patched = [&](mtl::Ptr primary) {
    if (mode == GuardMode::Literal) return primary;
    ++st.here_patches;
    ++st.behind_patches;
    return mtl::disj(std::move(primary),
                     mtl::disj(A, opp(Interval::unbounded(0, false))));
  };
  switch (a.op) {
    case CmpOp::LT:
      if (a.c == 0) {
        // The table window [0,0) is empty; the true meaning is "the frozen
        // position lies strictly behind in time", a one-sided modality in
        // the other direction.
        if (mode == GuardMode::Literal) return mtl::falsum();
        ++st.zero_strict_rewrites;
        return opp(Interval::unbounded(0, true));
      }
      return patched(prim(Interval::closed_open(0, a.c)));
    case CmpOp::LE:
      if (a.c == 0) {
        if (mode == GuardMode::Strict)
          throw DomainError("guard " + print(raw) +
                            " forces a punctual window");
        ++st.punctual_leaks;
      }
      return patched(prim(Interval::closed(0, a.c)));
    case CmpOp::GT:
      // Negative d can never exceed a non-negative c, so the one-sided
      // window is already complete.
      return prim(Interval::unbounded(a.c, true));
    case CmpOp::GE:
      if (a.c > 0) return prim(Interval::unbounded(a.c, false));
      if (mode == GuardMode::Literal)
        return prim(Interval::unbounded(0, false));
      if (mode == GuardMode::Strict)
        throw DomainError("guard " + print(raw) + " forces a punctual window");
      // d >= 0 also holds when the freezing position sits behind at the
      // same timestamp, which only a punctual window can express.
      ++st.punctual_leaks;
      ++st.here_patches;
      ++st.behind_patches;
      return mtl::disj(prim(Interval::unbounded(0, false)),
                       mtl::disj(A, opp(Interval::singleton(0))));
    case CmpOp::EQ: {
      GuardAtom le = a;
      le.op = CmpOp::LE;
      GuardAtom ge = a;
      ge.op = CmpOp::GE;
      return mtl::conj(translate_atom(le, A, mode, st),
                       translate_atom(ge, A, mode, st));
    }
  }
  throw DomainError("unhandled comparison operator");
}

struct Compiler {
  GuardMode mode;
  TtlCompilation& out;
  std::vector<std::string> vars;
  NodeId root_id = 0;

  // env maps a clock to the freeze node currently binding it and to the
  // characterizer of that node's position.
  using Env = std::map<std::string, std::pair<NodeId, mtl::Ptr>>;

  // Characterizer of an anchor child's position. The bare first/last-position
  // formula holds on every word, but the child's position is defined only
  // when the anchor node itself is reached, so Patched mode conjoins "the
  // parent's position exists": from position 1 every position is here or
  // later, from the last position here or earlier.
  mtl::Ptr anchored(mtl::Ptr at_end, const mtl::Ptr& parent, bool from_start) {
    if (mode == GuardMode::Literal) return at_end;
    ++out.stats.anchor_patches;
    Interval span = free_ivl(mode);
    mtl::Ptr elsewhere = from_start ? mtl::eventually(span, parent)
                                    : mtl::once(span, parent);
    return mtl::conj(std::move(at_end),
                     mtl::disj(parent, std::move(elsewhere)));
  }

  mtl::Ptr make_cf(const ttl::GuardedEvent& ev, const Env& env,
                   const mtl::Ptr& root_alpha) {
    mtl::Ptr cf = mtl::atom(ev.letter);
    for (const auto& atom : ev.guard.atoms) {
      auto it = env.find(atom.var);
      const mtl::Ptr& A = it == env.end() ? root_alpha : it->second.second;
      cf = mtl::conj(cf, translate_atom(atom, A, mode, out.stats));
    }
    return cf;
  }

  void walk_alpha(const ttl::Ptr& node, mtl::Ptr alpha, Env env,
                  const mtl::Ptr& root_alpha) {
    if (!out.alpha.emplace(node->id, alpha).second)
      throw DomainError(
          "event-logic formula shares subformula nodes; rebuild it as a tree");
    auto& slot = out.anc[node->id];
    for (const auto& v : vars) {
      auto it = env.find(v);
      slot[v] = it == env.end() ? root_id : it->second.first;
    }
    switch (node->op) {
      case Op::Top:
        return;
      case Op::Event:
        out.cf[node->id] = make_cf(node->event, env, root_alpha);
        return;
      case Op::Not:
        walk_alpha(node->lhs, std::move(alpha), std::move(env), root_alpha);
        return;
      case Op::And:
      case Op::Or:
        walk_alpha(node->lhs, alpha, env, root_alpha);
        walk_alpha(node->rhs, std::move(alpha), std::move(env), root_alpha);
        return;
      case Op::Freeze:
        env[node->var] = {node->id, alpha};
        walk_alpha(node->lhs, std::move(alpha), std::move(env), root_alpha);
        return;
      case Op::SP:
        walk_alpha(node->lhs, anchored(first_position(mode), alpha, true),
                   std::move(env), root_alpha);
        return;
      case Op::EP:
        walk_alpha(node->lhs, anchored(last_position(mode), alpha, false),
                   std::move(env), root_alpha);
        return;
      case Op::X: {
        // The jump target is the first later match: a match with the source
        // somewhere behind it and no such match strictly before itself.
        mtl::Ptr cf = make_cf(node->event, env, root_alpha);
        out.cf[node->id] = cf;
        Interval back = free_ivl(mode);
        mtl::Ptr reach = mtl::conj(cf, mtl::once(back, alpha));
        mtl::Ptr child = mtl::conj(reach, mtl::negate(mtl::once(back, reach)));
        walk_alpha(node->lhs, std::move(child), std::move(env), root_alpha);
        return;
      }
      case Op::Y: {
        mtl::Ptr cf = make_cf(node->event, env, root_alpha);
        out.cf[node->id] = cf;
        Interval ahead = free_ivl(mode);
        mtl::Ptr reach = mtl::conj(cf, mtl::eventually(ahead, alpha));
        mtl::Ptr child =
            mtl::conj(reach, mtl::negate(mtl::eventually(ahead, reach)));
        walk_alpha(node->lhs, std::move(child), std::move(env), root_alpha);
        return;
      }
    }
  }

  const mtl::Ptr& build_beta(const ttl::Ptr& node) {
    const mtl::Ptr& a = out.alpha.at(node->id);
    Interval anydir = free_ivl(mode);
    mtl::Ptr b;
    switch (node->op) {
      case Op::Top:
        b = a;
        break;
      case Op::Event:
        b = mtl::conj(a, out.cf.at(node->id));
        break;
      case Op::Not:
        b = mtl::conj(a, mtl::negate(build_beta(node->lhs)));
        break;
      case Op::And:
        b = mtl::conj(a, mtl::conj(build_beta(node->lhs),
                                   build_beta(node->rhs)));
        break;
      case Op::Or:
        b = mtl::conj(a, mtl::disj(build_beta(node->lhs),
                                   build_beta(node->rhs)));
        break;
      case Op::Freeze:
        b = build_beta(node->lhs);
        break;
      case Op::X: {
        mtl::Ptr hit = mtl::conj(out.alpha.at(node->lhs->id),
                                 build_beta(node->lhs));
        b = mtl::conj(a, mtl::eventually(anydir, std::move(hit)));
        break;
      }
      case Op::Y: {
        mtl::Ptr hit = mtl::conj(out.alpha.at(node->lhs->id),
                                 build_beta(node->lhs));
        b = mtl::conj(a, mtl::once(anydir, std::move(hit)));
        break;
      }
      case Op::SP: {
        // Position 1 is the current position or lies behind it.
        mtl::Ptr hit = mtl::conj(out.alpha.at(node->lhs->id),
                                 build_beta(node->lhs));
        b = mtl::conj(a, mtl::disj(hit, mtl::once(anydir, hit)));
        break;
      }
      case Op::EP: {
        mtl::Ptr hit = mtl::conj(out.alpha.at(node->lhs->id),
                                 build_beta(node->lhs));
        b = mtl::conj(a, mtl::disj(hit, mtl::eventually(anydir, hit)));
        break;
      }
    }
    return out.beta[node->id] = std::move(b);
  }
};

}  // namespace

const PosVal& ParseInfo::at(NodeId id) const {
  auto it = nodes.find(id);
  if (it == nodes.end())
    throw DomainError("no parse information for this node id");
  return it->second;
}

ParseInfo compute_pos_val(const TimedWord& w, const ttl::Ptr& f) {
  if (!f) throw DomainError("null formula");
  ParseInfo info;
  walk_pos(w, f, std::size_t{1}, Valuation{}, info);
  return info;
}

std::set<std::size_t> reach_set(const TimedWord& w, const ttl::Ptr& f) {
  ParseInfo info = compute_pos_val(w, f);
  std::set<std::size_t> out;
  for (const auto& [id, pv] : info.nodes) {
    if (pv.pos) out.insert(*pv.pos);
  }
  return out;
}

std::vector<ttl::Ptr> subformulas(const ttl::Ptr& f) {
  std::vector<ttl::Ptr> out;
  collect_nodes(f, out);
  return out;
}

TtlCompilation compile_ttl(const ttl::Ptr& f, GuardMode mode) {
  if (!f) throw DomainError("null formula");
  TtlCompilation comp;
  comp.mode = mode;
  Compiler c{mode, comp, {}, f->id};
  std::set<std::string> vs;
  collect_vars(f, vs);
  c.vars.assign(vs.begin(), vs.end());
  mtl::Ptr root_alpha = first_position(mode);
  c.walk_alpha(f, root_alpha, {}, root_alpha);
  c.build_beta(f);
  comp.beta_root = comp.beta.at(f->id);
  return comp;
}

DifferentialOutcome differential_check(const ttl::Ptr& f,
                                       const std::vector<TimedWord>& words,
                                       GuardMode mode) {
  TtlCompilation comp = compile_ttl(f, mode);
  DifferentialOutcome out;
  for (const auto& w : words) {
    bool direct = eval_ttl(w, 1, Valuation{}, f);
    bool compiled = eval_mtl(w, 1, comp.beta_root);
    ++out.checked;
    if (direct != compiled) {
      std::ostringstream os;
      os << "direct=" << (direct ? "true" : "false")
         << " compiled=" << (compiled ? "true" : "false") << " on";
      for (std::size_t i = 1; i <= w.size(); ++i)
        os << ' ' << w.letter(i) << '@' << w.time(i).str();
      os << " for " << print(f);
      out.failures.push_back(os.str());
    }
  }
  return out;
}

}  // namespace tlwb
