#pragma once

// Spectrum of limsup_n ||xi alpha^n|| for quadratic Pisot units alpha.  The
// discrete part below the accumulation point 1/(1+alpha) (plus units) or
// b/(1+alpha^2) (minus units) is a strictly increasing sequence of rationals
// p_n/q_n, each realised by an explicit xi built from a Christoffel word.

#include <string>
#include <vector>

#include "geospec/rational.hpp"
#include "geospec/surd.hpp"
#include "geospec/words.hpp"

namespace geospec {

// Bi-infinite signed-digit word read against a quadratic unit.  g_eval sees
// digit w_m as the coefficient of alpha^{-m} for m > 0 and of alpha2^{-m}
// for m <= 0, the whole sum divided by alpha - alpha2.
struct BiSignedWord {
    QuadUnit unit;
    BiEPWord word;

    long digit_bound() const { return (unit.b() + 2) / 2; }
    // Nonempty periods, digits within the bound.
    void validate() const;
};

// Exact value of the weighted digit sum read from position k, both
// geometric tails folded in closed form.
Surd g_eval(const BiSignedWord& w, long k = 0);

// 1/(1+alpha) for plus units, b/(1+alpha^2) for minus units: the smallest
// accumulation point of the spectrum.
Surd spectrum_threshold(const QuadUnit& u);

// Word with g-value exactly spectrum_threshold: digits 1 -1 (plus) or
// 1 0 -1 (minus) at positions 0.., zeros elsewhere.
BiSignedWord threshold_word(const QuadUnit& u);

// psi_0 = w_0 and psi_n = w_n + w_{-n} (plus) or w_n + (-1)^n w_{-n}
// (minus), so that (alpha - alpha2) g_eval(w) = sum_{n>=0} psi_n alpha^{-n}.
long psi_value(const BiSignedWord& w, long n);

// Folded comparison: true when the psi sequences of y and y2 agree strictly
// before some l, psi_l(y) > psi_l(y2), and |psi_n(y) - psi_n(y2)| <= 2 for
// n >= l.  Decided exactly: beyond both cores the psi difference is
// periodic, so a bounded scan (at least `window`) settles every n.  A true
// result implies g_eval(y) > g_eval(y2); that inequality is re-checked and
// a failure throws.  Requires digits in {-1,0,1} and alpha > 3.
bool dominates(const BiSignedWord& y, const BiSignedWord& y2, long window = 0);

struct ShiftSup {
    Surd value;                   // sup over all k of |g_eval(w, k)|
    std::vector<long> attaining;  // shifts where |g| equals the sup
    bool attained = true;         // false when only a tail limit reaches it
};
// Exact supremum over every integer shift.  Outside the core the values
// approach the periodic-tail values along geometric strands of one sign, so
// a finite scan together with the two tail limits is complete.
ShiftSup shift_sup_abs(const BiSignedWord& w);

struct LimsupAbs {
    Surd value;
    int attaining = 0;  // shifts per period attaining the value
};
// limsup of |g_eval(w, k)| as k -> +infinity: the max of |g| over one
// period of the right periodisation.
LimsupAbs limsup_abs(const BiSignedWord& w);

// xi whose orbit reproduces the word: for w supported on positions >= 0,
// eps(xi alpha^n) = g_eval(w, n) for every n, with eps the signed distance
// to the nearest integer.  Equals g_eval(w, 0).
Surd xi_from_word(const BiSignedWord& w);

// gamma: 1 -> 1 -1, 0 -> 0; tilde variant: 1 -> -1 1.
FiniteWord gamma_encode(const FiniteWord& x, bool tilde = false);
// Left inverse of gamma_encode; throws when w is not an image.
FiniteWord gamma_decode(const FiniteWord& w, bool tilde = false);

struct PqRow {
    int n = 0;
    Int p, q;           // recurrence values, value = p/q
    Rat value;
    bool z_ok = false;  // closed-form cross-check in the field (n >= 1)
    bool cf_ok = false; // negative-CF convergent cross-check (even n >= 2)
    BiSignedWord witness;  // word realising the value as its shift limsup
};
struct PqTable {
    QuadUnit unit;
    std::vector<PqRow> rows;  // n = 0 .. n_max
    Surd limit;               // spectrum_threshold(unit)
    bool all_ok = true;       // every cross-check passed
};
// Discrete spectrum z_0 < z_1 < ... < limit.  Even-index entries obey
// X_{2n+2} = t X_{2n} - X_{2n-2} with t = b (plus) or b^2+2 (minus); odd
// entries are the sums of their even neighbours.
PqTable pq_spectrum(int b, Sign sign, int n_max);

// Realising pair for spectrum level n: limsup_k |g_eval(word, k)| = value
// and xi reproduces the word's tail.
struct XnWitness {
    int n = 0;
    long ones = 0;    // Christoffel slope p (0 for n <= 1)
    long length = 0;  // Christoffel denominator q
    Surd xi;
    BiSignedWord word;
    Rat value;
};
// All witness families for level n: one per coprime (p, q) with p + q =
// n + 1 and p < q, a single family for n = 0 and n = 1.
std::vector<XnWitness> xn_witness(int b, Sign sign, int n);

// Signed digits s_n = u_{n+1} - b u_n + u_{n-1} (plus) or
// u_{n+1} - b u_n - u_{n-1} (minus), u_n the nearest integer to xi alpha^n.
struct SSequence {
    long from = 0;
    FiniteWord s;            // s_n for n in [from, to]
    std::vector<Int> u;      // nearest integers
    std::vector<Surd> eps;   // xi alpha^n - u_n, each in [-1/2, 1/2)
};
SSequence s_sequence(const QuadUnit& unit, const Surd& xi, long from, long to);

// One placement of a forbidden pattern inside a context word.
struct ForbiddenInstance {
    FiniteWord pattern;
    std::string context;    // "zero" or a seed tag for random contexts
    bool exceeded = false;  // some shift of the word passes the threshold
    long shift = 0;         // witnessing shift when exceeded
    bool dominance = false; // some pattern shift dominates threshold_word
};
struct ForbiddenReport {
    QuadUnit unit;
    Surd threshold;
    std::vector<ForbiddenInstance> instances;
    size_t inconclusive = 0;      // instances with no exceeding shift
    bool zero_context_ok = true;  // all zero-context placements exceeded
};
// Places every forbidden pattern family (family parameter up to k_max) in a
// zero context and in random eventually periodic contexts, and checks by
// exact evaluation that some shift exceeds the threshold.
ForbiddenReport forbidden_set_verify(int b, Sign sign, int k_max = 4,
                                     int random_contexts = 2, unsigned seed = 20240601);

}  // namespace geospec
