#pragma once

// Arbitrary-precision integers and rationals, plus the rounding helpers the
// rest of the library leans on.  Rationals are GMP's canonical form: reduced,
// positive denominator.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace geospec {

using Int = mpz_class;
using Rat = mpq_class;

// num/den constructor that canonicalizes (mpq_class's own two-argument
// constructor does not reduce).
inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

inline Int rat_floor(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

inline Int rat_ceil(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

// Nearest integer with ties at +1/2 rounding up: u = floor(x + 1/2).
// The remainder eps = x - u always lands in [-1/2, 1/2).
inline Int round_half_up(const Rat& x) {
    Rat shifted = x + make_rat(1, 2);
    return rat_floor(shifted);
}

struct NearestDecomposition {
    Int unit;  // u = floor(x + 1/2)
    Rat eps;   // x - u, in [-1/2, 1/2)
};

inline NearestDecomposition nearest_integer(const Rat& x) {
    Int u = round_half_up(x);
    return {u, x - Rat(u)};
}

// Distance to the nearest integer, in [0, 1/2].
inline Rat dist_to_int(const Rat& x) {
    Rat e = x - Rat(round_half_up(x));
    return e < 0 ? Rat(-e) : e;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// base^e for any integer exponent; negative exponents require base != 0.
inline Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    bool inv = e < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), k);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), k);
    r.canonicalize();
    if (inv) {
        if (r == 0) throw std::domain_error("pow_rat: 0 to a negative power");
        return Rat(1) / r;
    }
    return r;
}

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

// Parses "p/q", a plain integer, or a decimal string like "-0.375".
Rat parse_rat(const std::string& text);

// Canonical "p/q" (or "p" when the denominator is 1).
std::string rat_to_string(const Rat& x);

}  // namespace geospec
