#pragma once

// Symmetric beta expansions x = sum_{i>=1} d_i alpha^{-i} with digits in
// (-(alpha+1)/2, (alpha+1)/2) n Z: the orbit map T, exact digit coding with
// period detection, the lexicographic admissibility sandwich, and closed
// forms for the expansions of +-1/2.

#include "geospec/surd.hpp"
#include "geospec/words.hpp"

namespace geospec {

struct SymBetaExpansion {
    QuadUnit unit;
    Surd x;
    EPWord digits;  // canonical eventually periodic form
};

// One orbit step: alpha x minus the nearest integer to alpha x.
Surd sym_beta_step(const Surd& x, const QuadUnit& unit);

// Exact expansion of x, the period found by exact orbit-state repetition.
// Accepts the extended domain [-(c+1/2)/alpha, (c+1/2)/alpha) with
// c = floor((alpha+1)/2); such orbits re-enter [-1/2, 1/2) in one step.
SymBetaExpansion sym_beta_encode(const Surd& x, const QuadUnit& unit, size_t max_steps = 4096);

// Sum of d_i alpha^{-i} in closed form.
Surd sym_beta_reconstruct(const EPWord& digits, const QuadUnit& unit);

struct BoundaryExpansions {
    EPWord upper;  // digits of 1/2
    EPWord lower;  // digits of -1/2
};
// Closed forms by sign and parity of b:
//   plus, b even:  c 0 (-c 1)^inf        minus, b even:  c 1 (-c 0)^inf
//   plus, b odd:   c c 0 (-c -c 1)^inf   minus, b odd:   c -(c-1) 0 (-c c-1 1)^inf
// and the lower word is the periodic part alone.
BoundaryExpansions boundary_expansions(const QuadUnit& unit);

// Sandwich d(-1/2) <= shifted digits < d(1/2) in lexicographic order for
// every shift; shifts over the preperiod and one period settle all of them.
bool is_admissible(const EPWord& digits, const QuadUnit& unit);

}  // namespace geospec
