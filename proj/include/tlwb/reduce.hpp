#pragma once

#include "tlwb/formula.hpp"

namespace tlwb {

// Rewrites for two degenerate word classes, used to port untimed
// expressiveness arguments into the timed setting.
//
// Instantaneous words carry every event at time 0. There each window I
// behaves as [0,0] when it contains 0 and as an unsatisfiable window
// otherwise. The freeze-logic overload additionally decides clock
// constraints under the all-zero valuation and drops freezes. Unitary words
// place all events at distinct times inside (0,1); integer-endpoint windows
// then either cover (0,1) entirely or miss every difference.
//
// The rewritten formula agrees with the original at every position of every
// word in the class, keeps the original modal depth, and mentions only the
// interval [0,0] (respectively (0,1)). Dead windows are kept as modalities
// with an unsatisfiable target rather than collapsed to a bare false, which
// is what preserves depth.
mtl::Ptr reduce_instantaneous(const mtl::Ptr& f);
mtl::Ptr reduce_instantaneous(const tptl::Ptr& f);
mtl::Ptr reduce_unitary(const mtl::Ptr& f);

}  // namespace tlwb
