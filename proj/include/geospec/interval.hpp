#pragma once

// Certified real arithmetic: closed intervals [lo, hi] with endpoints kept in
// MPFR and every operation rounded outward.  A value computed through this
// type is a mathematical guarantee, not an estimate; comparisons either
// decide or report that the enclosure is too wide.

#include "geospec/rational.hpp"
#include "geospec/surd.hpp"

#include <mpfr.h>

#include <optional>
#include <string>

namespace geospec {

class Interval {
  public:
    explicit Interval(mpfr_prec_t prec = 64);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(const Interval& o);
    Interval& operator=(Interval&& o) noexcept;
    ~Interval();

    static Interval from_rat(const Rat& x, mpfr_prec_t prec);
    static Interval from_int(const Int& x, mpfr_prec_t prec);
    static Interval from_long(long x, mpfr_prec_t prec);
    static Interval from_surd(const Surd& x, mpfr_prec_t prec);
    // Interprets the text as an exact decimal; the enclosure is the rounding
    // error of the conversion only.
    static Interval from_decimal(const std::string& text, mpfr_prec_t prec);
    // [x - r, x + r] around a decimal midpoint.
    static Interval from_midpoint_radius(const std::string& mid, const std::string& rad,
                                         mpfr_prec_t prec);
    // Point interval from a raw MPFR value (outward-rounded if prec is lower).
    static Interval from_mpfr(mpfr_srcptr x, mpfr_prec_t prec);

    mpfr_prec_t precision() const { return prec_; }

    friend Interval operator+(const Interval& x, const Interval& y);
    friend Interval operator-(const Interval& x, const Interval& y);
    friend Interval operator*(const Interval& x, const Interval& y);
    friend Interval operator/(const Interval& x, const Interval& y);  // 0 not in y
    Interval operator-() const;

    Interval abs() const;
    Interval sqrt() const;  // requires lo >= 0
    Interval log() const;   // requires lo > 0
    Interval square() const;
    Interval pow(long e) const;
    // [min(x,y) bounds, max...]: the interval hull.
    static Interval hull(const Interval& x, const Interval& y);

    bool contains_zero() const;
    bool contains(const Rat& x) const;

    // Definite sign of every point, if the enclosure decides it.
    std::optional<int> sign() const;
    // True/false when certain, nullopt when the enclosures overlap.
    std::optional<bool> less_than(const Interval& y) const;
    std::optional<bool> less_than(const Rat& y) const;
    std::optional<bool> greater_than(const Rat& y) const;

    double lo_double() const;  // rounded down
    double hi_double() const;  // rounded up
    double mid_double() const;
    // Upper bound on the radius (hi - lo) / 2.
    double rad_double() const;
    bool rad_below(const Rat& bound) const;

    std::string to_string(size_t digits = 20) const;

    // Internal access for code that extends the arithmetic (norm reduction,
    // polynomial evaluation).  lo() <= every represented value <= hi().
    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }
    mpfr_ptr lo_mut() { return lo_; }
    mpfr_ptr hi_mut() { return hi_; }
    // Re-establishes lo <= hi sanity after direct mutation.
    void check_valid() const;

  private:
    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;
};

// Rectangular complex enclosure.
struct CInterval {
    Interval re, im;

    static CInterval from_real(const Interval& x);
    static CInterval from_parts(const Interval& re, const Interval& im);

    friend CInterval operator+(const CInterval& x, const CInterval& y);
    friend CInterval operator-(const CInterval& x, const CInterval& y);
    friend CInterval operator*(const CInterval& x, const CInterval& y);
    friend CInterval operator/(const CInterval& x, const CInterval& y);
    CInterval operator-() const;

    Interval abs_sq() const;        // re^2 + im^2
    Interval abs() const;           // sqrt of abs_sq
    CInterval pow(long e) const;    // e < 0 allowed when 0 is excluded
    CInterval conjugate() const;

    bool contains_zero() const;
    std::string to_string(size_t digits = 12) const;
};

}  // namespace geospec
