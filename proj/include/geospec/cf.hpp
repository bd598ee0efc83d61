#pragma once

#include <vector>

#include "geospec/rational.hpp"
#include "geospec/surd.hpp"

namespace geospec {

// Negative (minus-type) continued fractions of x in (0,1):
//   x = 1/(a_1 - 1/(a_2 - ...)),  all digits a_k >= 2.
// For rationals the expansion is finite; for quadratic irrationals it is
// eventually periodic.

struct SurdCF {
    std::vector<Int> preperiod;
    std::vector<Int> period;  // empty for rational input
};

std::vector<Int> negative_cf(const Rat& x, size_t max_terms = 100000);
SurdCF negative_cf(const Surd& x, size_t max_states = 100000);
std::vector<Int> negative_cf_prefix(const Surd& x, size_t count);

// Value of a finite expansion [0; a_1, ..., a_n].
Rat negative_cf_value(const std::vector<Int>& digits);

// Convergents p_k/q_k of [0; a_1, ..., a_n] via
//   p_k = a_k p_{k-1} - p_{k-2},  p_0 = 0, p_1 = 1,
//   q_k = a_k q_{k-1} - q_{k-2},  q_0 = 1, q_1 = a_1.
// Returns n entries, one per digit prefix.
std::vector<Rat> negative_cf_convergents(const std::vector<Int>& digits);

}  // namespace geospec
