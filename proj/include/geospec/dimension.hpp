#pragma once

#include "geospec/interval.hpp"
#include "geospec/rational.hpp"
#include "geospec/surd.hpp"

namespace geospec {

// Upper bounds on the Hausdorff dimension of the level set
// { xi : limsup dist(xi alpha^n, Z) <= t }, via counting the admissible
// digit blocks at each refinement level.

struct IntegerDimBound {
    long a = 2;
    Rat t;
    long level = 1;      // minimizing refinement level
    Int block_count;     // 2 ceil(a^level t), cylinders kept per level
    Interval bound;      // log(block_count) / log(a^level)
    bool below_one = false;  // exact test block_count < a^level
};

// Minimize log(2 ceil(a^l t)) / (l log a) over 1 <= l <= search_limit.
// Levels are compared exactly by cross-powered block counts; the interval
// enclosure is only computed for the winner. Requires a >= 2, 0 < t < 1/2.
IntegerDimBound dimension_bound_integer(long a, const Rat& t, long search_limit = 64,
                                        mpfr_prec_t precision = 128);

// Smallest level l with a^l (1 - 2t) > 2 (exact). Every level past this one
// keeps fewer than a^l of the a^l cylinders, so its bound is below one.
long dimension_level_threshold(long a, const Rat& t);

struct QuadDimBound {
    long b = 3;
    Sign sign = Sign::plus;
    Rat t;
    Int m;           // floor((b + 2) t)
    Interval bound;  // log(4m + 1) / log(alpha)
    bool below_one = false;  // exact test 4m + 1 < alpha
};

// One-level bound log(4m + 1) / log(alpha) with m = floor((b + 2) t).
// Requires 0 < t < 1/2; m = 0 collapses the bound to zero.
QuadDimBound dimension_bound_quadratic(long b, Sign sign, const Rat& t,
                                       mpfr_prec_t precision = 128);

// Threshold (alpha - 1) / (4 (b + 2)); below it the level set around the
// obvious witness degenerates. Always strictly below 1/4.
Surd quadratic_zero_threshold(long b, Sign sign);

}  // namespace geospec
