#pragma once

#include <cstddef>

#include "hoobs/automaton.hpp"

namespace hoobs {

/// k-bit counter over states 0..2^k-1, initial 0. Events: d (self-loop at 0),
/// f (flip the low bit), r (reset to 0), t (increment mod 2^k).
/// Throws ValidationError unless 1 <= k <= 16.
Automaton counter_automaton(std::size_t k);

}  // namespace hoobs
