#pragma once

// Certified evaluation of ||xi alpha^n|| and desk-scale limsup probing.
// Inputs come in three forms (exact rational, exact quadratic surd, decimal
// text with declared precision) and alpha in three kinds (integer base,
// quadratic unit, general Pisot).  Exact routes produce radius-zero values;
// everything else runs through directed-rounding intervals whose working
// precision is raised automatically to keep the whole window certified.

#include "geospec/interval.hpp"
#include "geospec/pisot.hpp"
#include "geospec/rational.hpp"
#include "geospec/surd.hpp"
#include "geospec/words.hpp"

#include <optional>
#include <string>
#include <vector>

namespace geospec {

struct RealInput {
    enum class Kind { rational, surd, decimal };

    Kind kind = Kind::rational;
    Rat rational;
    Surd surd;
    std::string decimal;
    mpfr_prec_t decimal_bits = 128;

    static RealInput from_rat(Rat x);
    static RealInput from_surd(Surd x);
    static RealInput from_decimal(std::string text, mpfr_prec_t bits = 128);

    bool is_exact() const { return kind != Kind::decimal; }
    // The value as a surd (rationals embed); throws for decimal inputs.
    Surd exact_value() const;
    Interval enclosure(mpfr_prec_t prec) const;
    std::string describe() const;
};

// The multiplier alpha.  Integer bases and quadratic units keep exact
// arithmetic available; general Pisot numbers are carried numerically.
struct Alpha {
    enum class Kind { integer, quadratic, general };

    Kind kind = Kind::integer;
    long a = 2;
    std::optional<QuadUnit> quad;
    std::optional<GeneralPisot> pisot;

    static Alpha integer(long a);
    static Alpha quadratic(long b, Sign sign);
    static Alpha general(GeneralPisot p);

    double log2_value() const;
    Interval enclosure(mpfr_prec_t prec) const;
    std::string describe() const;
};

struct CertifiedValue {
    std::optional<Surd> exact;  // set on the exact routes
    Interval bounds;            // valid enclosure in every mode

    bool is_exact() const { return exact.has_value(); }
    double mid() const { return bounds.mid_double(); }
    double rad() const { return bounds.rad_double(); }
    std::string to_string() const;
};

// ||xi alpha^n|| for n = 0 .. count-1.  precision 0 picks
// max(count * log2(alpha) + 64, 96) in float mode; exact modes ignore it.
// Throws when certification fails even at the raised precision.
std::vector<CertifiedValue> norm_sequence(const RealInput& xi, const Alpha& alpha, long count,
                                          mpfr_prec_t precision = 0);

struct ProbeStep {
    long n = 0;
    double value = 0;  // certified lower endpoint at the improvement
};

// Running max over a finite window.  `best` is a certified lower bound for
// the limsup candidate observed so far; no upper-bound claim is ever made.
struct LimsupProbe {
    long steps = 0;              // values inspected: n = 0 .. steps-1
    CertifiedValue best;
    long argmax = -1;
    long last_improvement = -1;
    long attain_count = 0;       // exact modes: indices attaining the max value
    bool certified = true;       // false when precision ran out mid-window
    mpfr_prec_t precision_used = 0;
    std::vector<ProbeStep> trace;
};

LimsupProbe limsup_estimate(const RealInput& xi, const Alpha& alpha, long n_max = 10000,
                            mpfr_prec_t precision = 0);

// Signed digits s_n of a rational orbit against an integer base:
// s_n = u(xi a^{n+1}) - a u(xi a^n), so that
// eps(xi a^n) = sum_{i >= 0} s_{n+i} a^{-(i+1)}.  Returns s_0 .. s_{count-1}.
FiniteWord signed_digits_integer(const Rat& xi, long a, long count);

struct BlockCount {
    FiniteWord block;
    size_t count = 0;
    long first_index = 0;
};

// Heuristic limsup-word proxy: blocks of digits following near-maximal
// ||.||-indices, ranked by recurrence.  The ranking criterion is an
// engineering choice; limsup words are not unique.
struct LimsupWordReport {
    long window = 0;
    size_t candidates = 0;  // near-maximal indices inspected
    double max_value = 0;
    double cutoff = 0;
    std::vector<BlockCount> top;
};

LimsupWordReport limsup_word_extract(const FiniteWord& s, const Alpha& alpha, long window,
                                     int top_m);

// Exact partial-fraction weight for a quadratic unit: alpha^{-q} (q > 0) or
// alpha2^{-q} (q <= 0), both over alpha - alpha2.
Surd tau_weight_exact(const QuadUnit& u, long q);

// Digits s_m = u(xi alpha^{m+1}) + a_{d-1} u(xi alpha^m) + ... + a_0
// u(xi alpha^{m+1-d}) for a general Pisot alpha, certified via intervals.
struct PisotDigits {
    long from = 0;
    std::vector<long> s;        // s_m for m = from .. from + s.size() - 1
    long u_from = 0;
    std::vector<Int> u;         // u(xi alpha^n), n = u_from ..
    std::vector<Interval> eps;  // xi alpha^n - u_n, aligned with u
    mpfr_prec_t precision_used = 0;
};

PisotDigits pisot_digits(const GeneralPisot& P, const Rat& xi, long m_from, long m_to,
                         mpfr_prec_t precision = 0);

// eps(xi alpha^n) two ways: directly from the orbit, and as the weighted
// digit sum sum_q s_{n+q} tau_q truncated at q_max.  `consistent` certifies
// that the enclosures agree up to the dropped tail.
struct ReconstructionCheck {
    long n = 0;
    Interval direct;
    Interval via_digits;
    Interval tail_bound;
    bool consistent = false;
};

std::vector<ReconstructionCheck> reconstruction_check(const GeneralPisot& P, const Rat& xi,
                                                      long n_max, long q_max = 130,
                                                      mpfr_prec_t precision = 0);

// Exact counterpart for quadratic units: every quantity is a surd and the
// comparison |direct - truncated| <= tail_bound is decided exactly.
struct QuadReconstruction {
    long n = 0;
    Surd direct;
    Surd truncated;
    Surd tail_bound;
    bool ok = false;
};

std::vector<QuadReconstruction> reconstruction_check_quad(const QuadUnit& u, const Surd& xi,
                                                          long n_max, long q_max = 200);

// Rational truncation of the accumulation-point witness: the alternating
// digit word read off a prefix of the 1 -> 2, 2 -> 211 fixed point.  The
// true witness value differs from xi by at most tail_bound.
struct Eta0Probe {
    Rat xi;
    Rat tail_bound;
    size_t letters = 0;
    long depth = 0;  // highest digit position used (power of 1/a)
};

Eta0Probe eta0_witness_truncated(long a, size_t letters);

}  // namespace geospec
