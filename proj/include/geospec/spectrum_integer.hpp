#pragma once

#include <vector>

#include "geospec/rational.hpp"
#include "geospec/words.hpp"

namespace geospec {

// Base-a expansion with signed digits bounded by floor((a+1)/2).
// digits.at(i) is the coefficient of a^{-(i+1)}.
struct SignedDigitWord {
    long base = 2;
    EPWord digits;

    long digit_bound() const;
    void validate() const;
};

// Exact value of sum_{i>=1} digits.at(shift+i-1) * a^{-i}.
Rat eval_signed_base(const SignedDigitWord& s, size_t shift = 0);

// Substitution 1 -> 2, 2 -> 211 iterated k times from the letter 1.
// The results are nested prefixes of a common fixed point.
FiniteWord a_k_word(int k);
FiniteWord fixed_point_prefix(size_t len);

// f(y; X) = sum_{i>=0} (-1)^i X^{y_1+...+y_i}, exact for EP words over {1,2}.
Rat f_eval(const EPWord& y, const Rat& X);

// E^(k)(X) = (1 + X^{2^k} - (1-X) prod_{m<k}(1 - X^{2^m})) / (2X(1 + X^{2^k})).
Rat e_value(int k, const Rat& X);

// The k-th discrete spectrum point (1/a) E^(k)(1/a).
Rat spectrum_point(long a, int k);

struct RatInterval {
    Rat lo;
    Rat hi;

    Rat width() const { return hi - lo; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
};

// Enclosure of the accumulation point (1/a) E(1/a), E(X) built from the
// infinite product prod_m (1 - X^{2^m}), with width at most tol.
RatInterval spectrum_limit(long a, const Rat& tol);

// Alternating lexicographic order: the first index h (1-based) where the
// words differ decides by the sign of (-1)^{h+1} (y_h - y2_h).
int alt_compare(const EPWord& y, const EPWord& y2);
// Same rule on finite windows; 0 when no difference is visible.
int alt_compare_window(const FiniteWord& u, const FiniteWord& v);

// Max of the shift orbit sigma^N(y), N -> infinity, in the alternating
// order: the maximal rotation of the periodic part.
EPWord alt_limsup_shift(const EPWord& y);

// Signed digit word with digit (-1)^i at position y_1+...+y_i+1; its value
// is (1/a) f(y; 1/a).
SignedDigitWord signed_witness(const EPWord& y, long a);

struct SpectrumRow {
    int k = 0;
    FiniteWord word;           // A_k
    Rat point;                 // (1/a) E^(k)(1/a)
    bool identity_ok = false;  // f(A_k^inf; 1/a) == E^(k)(1/a)
};

struct SpectrumTable {
    long base = 2;
    std::vector<SpectrumRow> rows;
    RatInterval limit;
    bool all_ok = false;
};

SpectrumTable enumerate_spectrum(long a, int k_max, const Rat& limit_tol);

}  // namespace geospec
