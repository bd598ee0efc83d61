#include "geospec/dimension.hpp"

#include <stdexcept>

namespace geospec {

namespace {

void check_threshold(const Rat& t) {
    if (t <= 0 || t >= make_rat(1, 2))
        throw std::domain_error("dimension bound: t must lie in (0, 1/2)");
}

Int int_pow(const Int& base, long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

}  // namespace

IntegerDimBound dimension_bound_integer(long a, const Rat& t, long search_limit,
                                        mpfr_prec_t precision) {
    if (a < 2) throw std::invalid_argument("dimension_bound_integer: base must be >= 2");
    if (search_limit < 1)
        throw std::invalid_argument("dimension_bound_integer: search_limit must be >= 1");
    check_threshold(t);

    // bound(l) = log(2 ceil(a^l t)) / (l log a); bound(l) < bound(l') iff
    // count(l)^{l'} < count(l')^{l}, an exact integer comparison
    Int best_count;
    long best_level = 0;
    Rat scaled = t;
    for (long level = 1; level <= search_limit; ++level) {
        scaled *= a;
        Int count = 2 * rat_ceil(scaled);
        if (best_level == 0 || int_pow(count, best_level) < int_pow(best_count, level)) {
            best_count = count;
            best_level = level;
        }
    }

    IntegerDimBound out;
    out.a = a;
    out.t = t;
    out.level = best_level;
    out.block_count = best_count;
    Interval num = Interval::from_int(best_count, precision).log();
    Interval den = Interval::from_int(int_pow(Int(a), best_level), precision).log();
    out.bound = num / den;
    out.below_one = best_count < int_pow(Int(a), best_level);
    return out;
}

long dimension_level_threshold(long a, const Rat& t) {
    if (a < 2) throw std::invalid_argument("dimension_level_threshold: base must be >= 2");
    check_threshold(t);
    Rat margin = Rat(1) - 2 * t;  // positive, so a^l margin grows without bound
    Rat power(1);
    for (long level = 1;; ++level) {
        power *= a;
        if (power * margin > 2) return level;
    }
}

QuadDimBound dimension_bound_quadratic(long b, Sign sign, const Rat& t,
                                       mpfr_prec_t precision) {
    check_threshold(t);
    QuadUnit unit(b, sign);

    QuadDimBound out;
    out.b = b;
    out.sign = sign;
    out.t = t;
    out.m = rat_floor(Rat(b + 2) * t);
    Int count = 4 * out.m + 1;
    if (count == 1) {
        out.bound = Interval::from_long(0, precision);
        out.below_one = true;
        return out;
    }
    Interval num = Interval::from_int(count, precision).log();
    Interval den = Interval::from_surd(unit.alpha(), precision).log();
    out.bound = num / den;
    out.below_one = Surd(Rat(count)) < unit.alpha();
    return out;
}

Surd quadratic_zero_threshold(long b, Sign sign) {
    QuadUnit unit(b, sign);
    return (unit.alpha() - Surd(1)) / Surd(Rat(4 * (b + 2)));
}

}  // namespace geospec
