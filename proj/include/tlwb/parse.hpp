#pragma once

#include <string>

#include "tlwb/formula.hpp"

namespace tlwb {

enum class Logic { Mtl, Tptl, Ttl };

// Prefix s-expression grammar, shared across the three logics:
//
//   atoms         [a-z][a-z0-9_]*
//   booleans      (and f g ...) (or f g ...) (not f) (top)
//   metric        (U [0,2) f g) (S (1,inf) f g) (F [3,3] f) (P [0,1) f)
//   freeze logic  (U f g) (S f g) (F f) (P f) (freeze x f) (cmp x-T < 2)
//   event logic   (sp f) (ep f) (X (ev a g) f) (Y (ev a g) f) (ev a g)
//   guards        (tt) | (cmp x-T < 2) | (and (cmp ...) (cmp ...) ...)
//
// n-ary and/or fold to right-nested binary nodes. '#' starts a comment that
// runs to end of line. Errors are ParseError with a byte offset.
mtl::Ptr parse_mtl(const std::string& text);
tptl::Ptr parse_tptl(const std::string& text);
ttl::Ptr parse_ttl(const std::string& text);

}  // namespace tlwb
