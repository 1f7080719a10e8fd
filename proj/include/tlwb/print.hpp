#pragma once

#include <string>

#include "tlwb/formula.hpp"

namespace tlwb {

// Canonical prefix form; parse(print(f)) rebuilds f up to node ids. Shared
// subtrees of DAG-shaped formulas are printed once per occurrence.
std::string print(const mtl::Ptr& f);
std::string print(const tptl::Ptr& f);
std::string print(const ttl::Ptr& f);
std::string print(const Guard& g);
std::string print(const GuardAtom& a);

}  // namespace tlwb
