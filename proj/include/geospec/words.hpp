#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geospec/rational.hpp"

namespace geospec {

using Letter = int;
using FiniteWord = std::vector<Letter>;

std::string word_to_string(const FiniteWord& w);
FiniteWord parse_word(const std::string& text);

FiniteWord word_reverse(const FiniteWord& w);
FiniteWord word_negate(const FiniteWord& w);
FiniteWord word_concat(const FiniteWord& a, const FiniteWord& b);
FiniteWord word_repeat(const FiniteWord& w, size_t times);
bool is_factor_of(const FiniteWord& pattern, const FiniteWord& text);

// One-sided infinite word w_0 w_1 w_2 ... that is eventually periodic.
struct EPWord {
    FiniteWord preperiod;
    FiniteWord period;  // nonempty

    Letter at(size_t i) const;
    FiniteWord prefix(size_t len) const;
    EPWord shifted(size_t n) const;
    // Minimal form: primitive period, shortest preperiod.  Canonical forms
    // of equal words coincide.
    EPWord canonical() const;
    std::string to_string() const;
};

bool ep_equal(const EPWord& x, const EPWord& y);

// Bi-infinite word, periodic in both directions around a finite core.
// Position n for n < core_start repeats left_period (its last letter sits at
// core_start - 1); n >= core_start + |core| repeats right_period.
struct BiEPWord {
    FiniteWord left_period;
    FiniteWord core;
    FiniteWord right_period;
    long core_start = 0;

    Letter at(long n) const;
    BiEPWord shifted(long n) const;  // result position i holds old position i+n
    FiniteWord window(long from, long to) const;  // inclusive bounds
    std::string to_string() const;   // marks position 0
};

BiEPWord biep_periodic(const FiniteWord& period, long phase = 0);

// Balance over the alphabet {0,1}: any two factors of equal length have
// 1-counts differing by at most 1.
struct BalanceWitness {
    FiniteWord first;
    FiniteWord second;
};
bool is_balanced(const FiniteWord& w);
std::optional<BalanceWitness> balance_witness(const FiniteWord& w);

// Factors of shape 0v01(~v)1 or 1(~v)10v0, where ~v is v reversed.
struct MirrorHit {
    size_t start;
    size_t length;
    FiniteWord factor;
    FiniteWord v;        // the inner word of the matched shape
    bool one_zero = false;  // true for the 1(~v)10v0 shape
};
std::vector<MirrorHit> mirror_scan(const FiniteWord& w);
std::optional<MirrorHit> find_mirror_factor(const FiniteWord& w);

// Lower Christoffel word of slope p/q (gcd(p,q)=1): length q, p ones,
// letter i given by floor(p(i+1)/q) - floor(pi/q).
FiniteWord christoffel_lower(long p, long q);
// Upper Christoffel word: the reversal 1 v 0 of the lower word.
FiniteWord christoffel_upper(long p, long q);
// Interior of the Christoffel word: christoffel_lower = 0 v 1 with v a
// palindrome (q >= 2).
FiniteWord central_word(long p, long q);
// If the primitive root of `period` is a cyclic rotation of a Christoffel
// word, return its (ones, length) slope pair.
std::optional<std::pair<long, long>> christoffel_class(const FiniteWord& period);

// Letters floor(slope*(n+1)+intercept) - floor(slope*n+intercept) for
// n = from, ..., from+count-1; `upper` replaces floor by ceiling.
FiniteWord mechanical_word(const Rat& slope, const Rat& intercept, long from, long count,
                           bool upper = false);

// Symmetric extension at a descent/ascent gap c (positions c, c+1 carry
// distinct letters): largest s with w[c-1-j] == w[c+2+j] for all j < s.
// iota(x) is the supremum of s over all gaps.
struct IotaResult {
    bool finite = true;
    bool degenerate = false;        // no gap at all (constant word); value is 0
    long value = 0;                 // meaningful when finite
    std::vector<long> attaining;    // gap positions c reaching the value
};
// Exact value for the periodic word period^Z; gap positions are reported
// modulo the period length.
IotaResult iota_periodic(const FiniteWord& period);
// Largest extension visible inside a finite window (a lower bound for the
// infinite word the window was cut from).
long iota_window(const FiniteWord& w);

// Block recoding: write a {0,1} bi-infinite word as a product of blocks
// 1 0^a; when the exponents take the two values {a, a+1}, map 1 0^a -> 0 and
// 1 0^(a+1) -> 1.  Words whose 1s are the sparse letter are complemented
// first (recorded in `swapped`).  Input with a single occurrence of a letter
// has no block decomposition and is rejected; constant-exponent input
// produces an all-zero word.
struct PhiResult {
    FiniteWord period;      // one period of the recoded word
    long origin_block = 0;  // index shift: block containing position 0
    int base_exponent = 0;  // the value a
    bool swapped = false;
};
PhiResult phi_periodic(const FiniteWord& period);

// Standard words from a digit sequence: s_{-1} = 1, s_0 = 0,
// s_1 = 0^{a_1} 1, s_n = s_{n-1}^{a_n} s_{n-2}.
FiniteWord standard_word(const std::vector<long>& digits);

// Number of distinct factors of the given length.
size_t factor_count(const FiniteWord& w, size_t len);

}  // namespace geospec
