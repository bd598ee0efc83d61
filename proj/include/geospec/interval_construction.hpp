#pragma once
// Digit-split construction showing [kappa, 1/2] lies inside the spectrum:
// split the expansion digits of eta*(alpha-alpha2)/alpha into a two-sided
// word whose value is eta and whose every shift stays at or below eta, then
// fold it to a one-sided word realising eta as its shift limsup.

#include "geospec/beta_symmetric.hpp"
#include "geospec/spectrum_quadratic.hpp"
#include "geospec/surd.hpp"
#include "geospec/words.hpp"

#include <vector>

namespace geospec {

// The five closed-form bounds that certify the split per case.  k1, k2 and
// k4 share one left side, k3 and k5 another; they differ in the right side.
enum class KeyId { k1, k2, k3, k4, k5 };

enum class SplitRule { plain, alternating };

struct KeySides {
    Surd lhs;
    Surd rhs;
    bool holds = false;  // exact comparison lhs <= rhs
};

// Exact sides of one bound at a given unit, for reporting and cross-checks.
KeySides key_sides(const QuadUnit& u, KeyId id);

struct KappaCase {
    QuadUnit unit;
    Int c;            // largest expansion digit
    Surd kappa;       // left end of the certified interval [kappa, 1/2]
    KeyId key = KeyId::k1;
    SplitRule split = SplitRule::plain;
    KeySides sides;   // designated bound, evaluated exactly
};

// kappa and the designated bound for (b, sign).  kappa < 1/2 is checked
// exactly.  For minus b in {3, 5} the crude bound fails exactly (its left
// side over the root gap already exceeds 1/2, so no right side could
// certify); those two cases carry sides.holds == false and rely on the
// exact all-shift supremum computed in build_biword.  Every other case
// throws if its bound does not come out true.
KappaCase kappa_and_keys(long b, Sign sign);

struct BuiltWord {
    BiSignedWord word;  // two-sided digit split with g == eta
    EPWord digits;      // one-sided expansion the split came from
    Surd eta;
    ShiftSup sup;       // exact supremum over every shift; equals eta
};

// Build the split word for eta in [kappa, 1/2].  Checks exactly that the
// word evaluates to eta, that the supremum over all shifts equals eta, and
// that every digit except the one at position 0 is at most ceil(c/2) in
// absolute value.  Throws logic_error if any check fails.
BuiltWord build_biword(const Surd& eta, const KappaCase& kase);

// Equally spaced eta values in [kappa, 1/2], endpoints included.  All lie
// in the field of alpha, so every downstream check is exact.
std::vector<Surd> eta_grid(const KappaCase& kase, int points = 11);

struct FoldReport {
    FiniteWord word;          // x_1 x_2 ... read left to right
    long shifts_checked = 0;  // k ranges over 0..shifts_checked
    Surd max_value;           // max |g| over those shifts of the folded word
    long argmax = 0;
    Surd eta;
    Surd deviation;           // |max_value - eta|
    Surd overshoot;           // max(0, max_value - eta)
};

// Concatenate the central blocks s_{-n}..s_n for n = ell..ell+blocks-1 into
// a one-sided word and measure how its shift values approach eta.  Shifts
// centred on a block's middle reproduce eta up to a geometric error in the
// block radius, so the deviation shrinks as ell grows; the block seams can
// push single values slightly above eta by the same vanishing amount.  The
// report is exact for the truncated word.
FoldReport fold_to_one_sided(const BuiltWord& built, long ell, long blocks);

}  // namespace geospec
