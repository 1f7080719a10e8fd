#include "tlwb/ef_game.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_set>
#include <utility>

#include "tlwb/errors.hpp"

// Semantic signature oracle: enumerates, up to coordinate-class closure, the
// truth vectors achievable by formulas of bounded modal depth over the two
// words at once, and decides whether any such formula tells position 1 of
// one word from position 1 of the other. It shares no code with the game
// solver beyond the menu and outcome types, which is what makes the
// cross-check between the two meaningful.

namespace tlwb {

namespace {

using Mask = std::uint64_t;

// Bits of positions 1..p (position q maps to bit q-1).
inline Mask prefix(std::size_t p) {
  return p >= 64 ? ~Mask(0) : (Mask(1) << p) - 1;
}

// Truth vectors over the joint positions of both words: word 0 position p
// occupies bit p-1, word 1 position p occupies bit n0+p-1. A vector is the
// truth set of some formula across both words at once, so pointwise boolean
// operations and per-word modal operations act on whole formulas.
struct SigEngine {
  const TimedWord* w[2];
  const IntervalMenu& menu;
  GameVariant variant;
  SignatureCaps caps;
  std::size_t n[2], joint, off[2];
  std::size_t nmenu;
  Mask full;
  unsigned long long work = 0;

  // member[d][(i-1)*n[d] + (j-1)] for i<j: menu-index bits of intervals
  // containing tau_j - tau_i in word d.
  std::vector<Mask> member[2];

  struct Gen {
    Mask vec = 0;
    int kind = 0;  // 0 atom, 1 top, 2 modal
    std::string atom;
    bool until_move = true;
    std::size_t menu_idx = 0;
    Mask a = 0, b = 0;  // argument vectors, resolved in arg_layer's terms
    int arg_layer = 0;
  };
  std::vector<Gen> gens;
  std::unordered_set<Mask> seen;
  std::vector<std::size_t> gen_count_at;      // generators visible per layer
  std::vector<std::vector<Mask>> classes_at;  // coordinate classes per layer

  // Set when a disagreeing vector is found.
  bool split_found = false;
  Mask split_vec = 0;
  std::size_t split_gen = 0;          // generator index, when gen-level
  bool split_at_final = false;        // final-layer until application
  bool split_until = true;
  std::size_t split_menu = 0;
  Mask split_a = 0, split_b = 0;

  std::map<std::pair<int, Mask>, mtl::Ptr> formula_memo;
  std::map<std::pair<int, Mask>, mtl::Ptr> indicator_memo;
  std::vector<mtl::Ptr> gen_formula_memo;

  SigEngine(const TimedWord& r0, const TimedWord& r1,
            const IntervalMenu& mn, GameVariant var, const SignatureCaps& cp)
      : menu(mn), variant(var), caps(cp) {
    w[0] = &r0;
    w[1] = &r1;
    n[0] = r0.size();
    n[1] = r1.size();
    joint = n[0] + n[1];
    if (joint > 64)
      throw CapExceeded("signature oracle handles at most 64 joint positions");
    nmenu = menu.intervals.size();
    if (nmenu > 256)
      throw CapExceeded("signature oracle handles menus of at most 256 intervals");
    off[0] = 0;
    off[1] = n[0];
    full = prefix(joint);
    for (int d = 0; d < 2; ++d) {
      member[d].assign(n[d] * n[d], 0);
      for (std::size_t i = 1; i <= n[d]; ++i)
        for (std::size_t j = i + 1; j <= n[d]; ++j) {
          Rational diff = w[d]->time(j) - w[d]->time(i);
          Mask mm = 0;
          for (std::size_t m = 0; m < nmenu; ++m)
            if (menu.intervals[m].contains(diff)) mm |= Mask(1) << m;
          member[d][(i - 1) * n[d] + (j - 1)] = mm;
        }
    }
  }

  void charge(unsigned long long units) {
    work += units;
    if (work > caps.max_work)
      throw CapExceeded("signature oracle work cap exceeded");
  }

  Mask coord(int d, std::size_t p) const { return Mask(1) << (off[d] + p - 1); }

  // Equivalence requires truth at (word0, 1) and (word1, 1) to coincide.
  bool agrees(Mask v) const { return (v & 1) == (v >> off[1] & 1); }

  // False when the vector is already known; records and checks a new one.
  bool add_gen(Gen g) {
    if (!seen.insert(g.vec).second) return false;
    gens.push_back(std::move(g));
    if (!agrees(gens.back().vec) && !split_found) {
      split_found = true;
      split_vec = gens.back().vec;
      split_gen = gens.size() - 1;
      split_at_final = false;
    }
    return true;
  }

  void refine_classes(std::vector<Mask>& classes) {
    for (const Gen& g : gens) {
      std::vector<Mask> next;
      next.reserve(classes.size() + 1);
      for (Mask c : classes) {
        Mask in = c & g.vec, out = c & ~g.vec;
        if (in) next.push_back(in);
        if (out) next.push_back(out);
      }
      classes.swap(next);
      charge(classes.size());
    }
    if (classes.size() > caps.max_classes)
      throw CapExceeded("signature oracle class cap exceeded");
  }

  void snapshot_layer() {
    std::vector<Mask> classes{full};
    refine_classes(classes);
    classes_at.push_back(std::move(classes));
    gen_count_at.push_back(gens.size());
  }

  // All unions of the given classes, indexed by class subset.
  std::vector<Mask> materialize(const std::vector<Mask>& classes) {
    const std::size_t cnt = std::size_t(1) << classes.size();
    charge(cnt);
    std::vector<Mask> subs(cnt, 0);
    for (std::size_t s = 1; s < cnt; ++s) {
      std::size_t low = static_cast<std::size_t>(__builtin_ctzll(s));
      subs[s] = subs[s & (s - 1)] | classes[low];
    }
    return subs;
  }

  // Accumulated menu-membership mask of U_I(a,b) (or S_I) per position of
  // word d: bit m of acc[i-1] says position i satisfies the modality with
  // menu interval m.
  std::vector<Mask> modal_scan(int d, Mask a, Mask b, bool until_move) {
    const std::size_t nd = n[d];
    std::vector<Mask> acc(nd, 0);
    charge(nd * nd / 2 + 1);
    for (std::size_t i = 1; i <= nd; ++i) {
      Mask got = 0;
      if (until_move) {
        for (std::size_t j = i + 1; j <= nd; ++j) {
          if (b & coord(d, j)) got |= member[d][(i - 1) * nd + (j - 1)];
          if (!(a & coord(d, j))) break;  // gap fails at j, later j blocked
        }
      } else {
        for (std::size_t j = i; j-- > 1;) {
          if (b & coord(d, j)) got |= member[d][(j - 1) * nd + (i - 1)];
          if (!(a & coord(d, j))) break;
        }
      }
      acc[i - 1] = got;
    }
    return acc;
  }

  // Emit every menu interval's joint vector for one (a,b,move) application.
  void apply_modal(Mask a, Mask b, bool until_move, int arg_layer) {
    std::vector<Mask> acc0 = modal_scan(0, a, b, until_move);
    std::vector<Mask> acc1 = modal_scan(1, a, b, until_move);
    charge(nmenu * (n[0] + n[1]) / 8 + 1);
    for (std::size_t m = 0; m < nmenu; ++m) {
      Mask v = 0;
      for (std::size_t i = 1; i <= n[0]; ++i)
        if (acc0[i - 1] >> m & 1) v |= coord(0, i);
      for (std::size_t i = 1; i <= n[1]; ++i)
        if (acc1[i - 1] >> m & 1) v |= coord(1, i);
      Gen g;
      g.vec = v;
      g.kind = 2;
      g.until_move = until_move;
      g.menu_idx = m;
      g.a = a;
      g.b = b;
      g.arg_layer = arg_layer;
      add_gen(std::move(g));
      if (split_found) return;
    }
  }

  // Largest j reachable from position 1 of word d through gap vector a:
  // the scan from position 2 stops at the first position outside a, which
  // itself is still a legal target.
  std::size_t jmax(int d, Mask a) const {
    for (std::size_t p = 2; p <= n[d]; ++p)
      if (!(a & coord(d, p))) return p;
    return n[d];
  }

  // Final layer: only truth at position 1 of each word matters, and since
  // moves are vacuously false there in both words, so only until moves can
  // split. Group gap vectors by their reach from position 1 in each word.
  void final_layer(const std::vector<Mask>& subs, int arg_layer) {
    const std::vector<Mask>& classes = classes_at[arg_layer];
    const std::size_t nc = classes.size();
    std::map<std::pair<std::size_t, std::size_t>, Mask> groups;
    if (variant == GameVariant::FP) {
      groups[{jmax(0, full), jmax(1, full)}] = full;
    } else {
      charge(subs.size() * 2);
      for (Mask a : subs) groups.try_emplace({jmax(0, a), jmax(1, a)}, a);
    }
    std::vector<Mask> or0(subs.size()), or1(subs.size());
    std::vector<Mask> contrib0(nc), contrib1(nc);
    for (const auto& [key, arep] : groups) {
      const auto [t0, t1] = key;
      for (std::size_t c = 0; c < nc; ++c) {
        Mask m0 = 0, m1 = 0;
        for (std::size_t j = 2; j <= t0 && j <= n[0]; ++j)
          if (classes[c] & coord(0, j)) m0 |= member[0][j - 1];
        for (std::size_t j = 2; j <= t1 && j <= n[1]; ++j)
          if (classes[c] & coord(1, j)) m1 |= member[1][j - 1];
        contrib0[c] = m0;
        contrib1[c] = m1;
      }
      charge(subs.size() + nc * (n[0] + n[1]));
      or0[0] = or1[0] = 0;
      for (std::size_t s = 1; s < subs.size(); ++s) {
        std::size_t low = static_cast<std::size_t>(__builtin_ctzll(s));
        or0[s] = or0[s & (s - 1)] | contrib0[low];
        or1[s] = or1[s & (s - 1)] | contrib1[low];
        Mask diff = or0[s] ^ or1[s];
        if (diff) {
          split_found = true;
          split_at_final = true;
          split_until = true;
          split_menu = static_cast<std::size_t>(__builtin_ctzll(diff));
          split_a = arep;
          split_b = subs[s];
          return;
        }
      }
    }
  }

  // ---- witness reconstruction ----

  mtl::Ptr gen_formula(std::size_t idx) {
    if (gen_formula_memo[idx]) return gen_formula_memo[idx];
    const Gen& g = gens[idx];
    mtl::Ptr f;
    if (g.kind == 0) {
      f = mtl::atom(g.atom);
    } else if (g.kind == 1) {
      f = mtl::top();
    } else {
      mtl::Ptr fa = formula_for(g.arg_layer, g.a);
      mtl::Ptr fb = formula_for(g.arg_layer, g.b);
      f = g.until_move ? mtl::until(menu.intervals[g.menu_idx], fa, fb)
                       : mtl::since(menu.intervals[g.menu_idx], fa, fb);
    }
    gen_formula_memo[idx] = f;
    return f;
  }

  // Conjunction of (possibly negated) generators pinning down one class.
  mtl::Ptr indicator(int layer, Mask cls) {
    auto key = std::make_pair(layer, cls);
    auto it = indicator_memo.find(key);
    if (it != indicator_memo.end()) return it->second;
    Mask current = full;
    mtl::Ptr conj;
    for (std::size_t idx = 0; idx < gen_count_at[layer] && current != cls;
         ++idx) {
      Mask g = gens[idx].vec;
      const bool inside = (cls & g) == cls;
      Mask piece = inside ? g : (~g & full);
      if ((current & piece) == current) continue;
      current &= piece;
      mtl::Ptr term =
          inside ? gen_formula(idx) : mtl::negate(gen_formula(idx));
      conj = conj ? mtl::conj(conj, term) : term;
    }
    if (!conj) conj = mtl::top();  // single-class partition
    indicator_memo.emplace(key, conj);
    return conj;
  }

  mtl::Ptr formula_for(int layer, Mask vec) {
    if (vec == full) return mtl::top();
    if (vec == 0) return mtl::falsum();
    auto key = std::make_pair(layer, vec);
    auto it = formula_memo.find(key);
    if (it != formula_memo.end()) return it->second;
    mtl::Ptr f;
    for (std::size_t idx = 0; idx < gen_count_at[layer] && !f; ++idx)
      if (gens[idx].vec == vec) f = gen_formula(idx);
    if (!f) {
      for (Mask c : classes_at[layer]) {
        if ((vec & c) != c) continue;
        mtl::Ptr ind = indicator(layer, c);
        f = f ? mtl::disj(f, ind) : ind;
      }
    }
    formula_memo.emplace(key, f);
    return f;
  }

  SignatureResult run(int depth) {
    // Depth 0: atoms over the joint alphabet, plus top.
    std::vector<std::string> letters;
    for (int d = 0; d < 2; ++d)
      for (std::size_t p = 1; p <= n[d]; ++p) letters.push_back(w[d]->letter(p));
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    {
      Gen g;
      g.vec = full;
      g.kind = 1;
      add_gen(std::move(g));
    }
    for (const std::string& l : letters) {
      Gen g;
      g.kind = 0;
      g.atom = l;
      for (int d = 0; d < 2; ++d)
        for (std::size_t p = 1; p <= n[d]; ++p)
          if (w[d]->letter(p) == l) g.vec |= coord(d, p);
      add_gen(std::move(g));
      if (split_found) break;
    }
    snapshot_layer();
    for (int d = 1; d <= depth && !split_found; ++d) {
      const int arg_layer = d - 1;
      std::vector<Mask> subs = materialize(classes_at[arg_layer]);
      if (d == depth) {
        final_layer(subs, arg_layer);
        break;
      }
      if (variant == GameVariant::FP) {
        for (Mask b : subs) {
          apply_modal(full, b, true, arg_layer);
          if (split_found) break;
          apply_modal(full, b, false, arg_layer);
          if (split_found) break;
        }
      } else {
        for (Mask a : subs) {
          for (Mask b : subs) {
            apply_modal(a, b, true, arg_layer);
            if (split_found) break;
            apply_modal(a, b, false, arg_layer);
            if (split_found) break;
          }
          if (split_found) break;
        }
      }
      if (!split_found) snapshot_layer();
    }
    SignatureResult res;
    res.classes = classes_at.back().size();
    res.generators = gens.size();
    res.work = work;
    gen_formula_memo.assign(gens.size(), nullptr);
    if (split_found) {
      res.equivalent = false;
      if (split_at_final) {
        mtl::Ptr fa = formula_for(int(classes_at.size()) - 1, split_a);
        mtl::Ptr fb = formula_for(int(classes_at.size()) - 1, split_b);
        res.witness =
            split_until ? mtl::until(menu.intervals[split_menu], fa, fb)
                        : mtl::since(menu.intervals[split_menu], fa, fb);
      } else {
        res.witness = gen_formula(split_gen);
      }
    }
    return res;
  }
};

}  // namespace

SignatureResult signature_equivalence(const TimedWord& rho0,
                                      const TimedWord& rho1, int depth,
                                      const IntervalMenu& menu,
                                      GameVariant variant,
                                      const SignatureCaps& caps) {
  if (depth < 0) throw DomainError("signature depth must be non-negative");
  SigEngine eng(rho0, rho1, menu, variant, caps);
  return eng.run(depth);
}

CrosscheckReport ef_crosscheck(const TimedWord& rho0, const TimedWord& rho1,
                               int rounds, const IntervalMenu& menu,
                               GameVariant variant,
                               const SignatureCaps& caps) {
  CrosscheckReport rep;
  rep.game = duplicator_wins(rho0, rho1, 1, 1, rounds, menu, variant);
  try {
    rep.sig = signature_equivalence(rho0, rho1, rounds, menu, variant, caps);
    rep.in_cap = true;
    rep.agree =
        (rep.game.winner == Winner::Duplicator) == rep.sig.equivalent;
  } catch (const CapExceeded& e) {
    rep.in_cap = false;
    rep.cap_note = e.what();
  }
  return rep;
}


}  // namespace tlwb
