#include <doctest.h>

#include "tlwb/logic_ops.hpp"
#include "tlwb/parse.hpp"
#include "tlwb/print.hpp"
#include "tlwb/semantics.hpp"
#include "testutil.hpp"

using namespace tlwb;

TEST_CASE("fragment classification reads the modalities and intervals") {
  FragmentInfo fp = classify_formula(parse_mtl("(F [0,2) (and a (P (1,3] b)))"));
  CHECK(fp.unary);
  CHECK(fp.bounded);
  CHECK(fp.non_punctual);
  CHECK(fp.max_constant == 3);

  FragmentInfo us = classify_formula(parse_mtl("(U [0,2) a b)"));
  CHECK(!us.unary);

  FragmentInfo unb = classify_formula(parse_mtl("(F [0,inf) a)"));
  CHECK(!unb.bounded);
  CHECK(unb.max_constant == 0);  // the infinite end contributes nothing

  FragmentInfo punct = classify_formula(parse_mtl("(F [3,3] a)"));
  CHECK(!punct.non_punctual);
  CHECK(punct.max_constant == 3);

  FragmentInfo plain = classify_formula(parse_mtl("(and a (not b))"));
  CHECK(plain.unary);
  CHECK(plain.bounded);
  CHECK(plain.max_constant == 0);
}

TEST_CASE("modal depth and count ignore booleans and freezes") {
  CHECK(modal_depth(parse_mtl("(and a (not b))")) == 0);
  CHECK(modal_depth(parse_mtl("(F [0,1) (F [0,1) a))")) == 2);
  CHECK(modal_depth(parse_mtl("(and (F [0,1) a) (P [0,1) b))")) == 1);
  CHECK(modal_count(parse_mtl("(and (F [0,1) a) (P [0,1) b))")) == 2);
  CHECK(modal_count(parse_mtl("(U [0,1) (F [0,1) a) b)")) == 2);

  CHECK(modal_depth(parse_tptl("(freeze x (F (and a (cmp T-x < 2))))")) == 1);
  CHECK(modal_count(parse_tptl("(freeze x (freeze y (cmp x-T <= 0)))")) == 0);

  ttl::Ptr jump = parse_ttl("(X (ev a (tt)) (Y (ev b (tt)) (top)))");
  CHECK(modal_depth(jump) == 2);
  CHECK(modal_count(jump) == 2);
  CHECK(modal_depth(parse_ttl("(sp (ep (top)))")) == 2);
  CHECK(modal_depth(parse_ttl("(freeze x (and (top) (ev a (tt))))")) == 0);
}

TEST_CASE("truncation clamps endpoints and keeps openness") {
  mtl::Ptr f = parse_mtl("(U [1,5) a (F (3,inf) b))");
  mtl::Ptr t = truncate_constants(f, 2);
  FragmentInfo fi = classify_formula(t);
  CHECK(fi.bounded);
  CHECK(fi.max_constant <= 2);
  CHECK(t->ivl->str() == "[1,2)");
  // The inner (3,inf) clamps to the empty (2,2) and becomes canonical false.
  CHECK(print(t) == "(U [1,2) a (not (top)))");
}

TEST_CASE("truncation collapses dead windows to falsum") {
  mtl::Ptr f = parse_mtl("(F (4,5) a)");
  mtl::Ptr t = truncate_constants(f, 2);
  CHECK(print(t) == "(not (top))");
  TimedWord w = parse_word("a 0\na 1\na 2\n");
  for (std::size_t i = 1; i <= w.size(); ++i) CHECK(!eval_mtl(w, i, t));
}

TEST_CASE("truncation above the last timestamp never changes truth") {
  testutil::Rng rng(21);
  testutil::WordOpts wo;
  wo.max_len = 6;
  testutil::MtlOpts fo;
  fo.max_const = 4;
  for (int trial = 0; trial < 300; ++trial) {
    TimedWord w = testutil::random_word(rng, wo);
    mtl::Ptr f = testutil::random_mtl(rng, fo);
    long long n = w.time(w.size()).floor_ll() + 1 + testutil::pick(rng, 0, 2);
    mtl::Ptr t = truncate_constants(f, n);
    CHECK(classify_formula(t).max_constant <= n);
    CHECK(modal_depth(t) <= modal_depth(f));
    for (std::size_t i = 1; i <= w.size(); ++i)
      CHECK(eval_mtl(w, i, t) == eval_mtl(w, i, f));
  }
}

TEST_CASE("truncation below a live endpoint can change truth") {
  // Sanity against a vacuous property: at n = 1 the window [0,2) shrinks to
  // [0,1) and stops seeing the b at distance 3/2.
  TimedWord w = parse_word("a 0\nb 3/2\n");
  mtl::Ptr f = parse_mtl("(F [0,2) b)");
  CHECK(eval_mtl(w, 1, f));
  CHECK(!eval_mtl(w, 1, truncate_constants(f, 1)));
}

TEST_CASE("guard normalization flips negative constants") {
  GuardAtom a{GuardOrient::FrozenMinusT, "x", CmpOp::LT, -2};
  GuardAtom n = normalize_guard(a);
  CHECK(n.orient == GuardOrient::TMinusFrozen);
  CHECK(n.op == CmpOp::GT);
  CHECK(n.c == 2);
  CHECK(normalize_guard(n) == n);  // idempotent

  GuardAtom eq{GuardOrient::TMinusFrozen, "x", CmpOp::EQ, -1};
  GuardAtom neq = normalize_guard(eq);
  CHECK(neq.op == CmpOp::EQ);
  CHECK(neq.orient == GuardOrient::FrozenMinusT);
  CHECK(neq.c == 1);

  GuardAtom pos{GuardOrient::TMinusFrozen, "y", CmpOp::GE, 3};
  CHECK(normalize_guard(pos) == pos);  // non-negative atoms are untouched
}

TEST_CASE("guard normalization preserves truth on random atoms") {
  testutil::Rng rng(22);
  for (int trial = 0; trial < 500; ++trial) {
    GuardAtom a = testutil::random_guard_atom(rng, 3, 2, true);
    Guard g{{a}};
    Guard ng = normalize_guard(g);
    Valuation nu;
    nu = nu.set(a.var, Rational(testutil::pick(rng, 0, 12), 2));
    Rational now(testutil::pick(rng, 0, 12), 2);
    CHECK(eval_guard(nu, now, g) == eval_guard(nu, now, ng));
    for (const GuardAtom& atom : ng.atoms) CHECK(atom.c >= 0);
  }
}
