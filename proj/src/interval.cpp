#include "geospec/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace geospec {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
    lo_[0] = o.lo_[0];
    hi_[0] = o.hi_[0];
    mpfr_init2(o.lo_, MPFR_PREC_MIN);
    mpfr_init2(o.hi_, MPFR_PREC_MIN);
}

Interval& Interval::operator=(const Interval& o) {
    if (this == &o) return *this;
    if (prec_ != o.prec_) {
        mpfr_set_prec(lo_, o.prec_);
        mpfr_set_prec(hi_, o.prec_);
        prec_ = o.prec_;
    }
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
    std::swap(lo_[0], o.lo_[0]);
    std::swap(hi_[0], o.hi_[0]);
    std::swap(prec_, o.prec_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

void Interval::check_valid() const {
    if (mpfr_nan_p(lo_) || mpfr_nan_p(hi_) || mpfr_cmp(lo_, hi_) > 0)
        throw std::logic_error("Interval: invalid endpoints");
}

Interval Interval::from_rat(const Rat& x, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, x.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, x.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::from_int(const Int& x, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_z(r.lo_, x.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, x.get_mpz_t(), MPFR_RNDU);
    return r;
}

Interval Interval::from_long(long x, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_si(r.lo_, x, MPFR_RNDD);
    mpfr_set_si(r.hi_, x, MPFR_RNDU);
    return r;
}

Interval Interval::from_surd(const Surd& x, mpfr_prec_t prec) {
    Interval a = from_rat(x.rational_part(), prec);
    if (x.is_rational()) return a;
    Interval d = from_int(x.radicand(), prec);
    Interval root = d.sqrt();
    Interval b = from_rat(x.surd_coefficient(), prec);
    return a + b * root;
}

Interval Interval::from_decimal(const std::string& text, mpfr_prec_t prec) {
    Interval r(prec);
    int rc1 = mpfr_set_str(r.lo_, text.c_str(), 10, MPFR_RNDD);
    int rc2 = mpfr_set_str(r.hi_, text.c_str(), 10, MPFR_RNDU);
    if (rc1 != 0 || rc2 != 0)
        throw std::invalid_argument("Interval::from_decimal: cannot parse '" + text + "'");
    return r;
}

Interval Interval::from_midpoint_radius(const std::string& mid, const std::string& rad,
                                        mpfr_prec_t prec) {
    Interval m = from_decimal(mid, prec);
    Interval r = from_decimal(rad, prec);
    if (mpfr_sgn(r.lo_) < 0)
        throw std::invalid_argument("Interval::from_midpoint_radius: negative radius");
    Interval out(prec);
    mpfr_sub(out.lo_, m.lo_, r.hi_, MPFR_RNDD);
    mpfr_add(out.hi_, m.hi_, r.hi_, MPFR_RNDU);
    return out;
}

Interval Interval::from_mpfr(mpfr_srcptr x, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set(r.lo_, x, MPFR_RNDD);
    mpfr_set(r.hi_, x, MPFR_RNDU);
    return r;
}

Interval operator+(const Interval& x, const Interval& y) {
    Interval r(std::max(x.prec_, y.prec_));
    mpfr_add(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, x.hi_, y.hi_, MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& x, const Interval& y) {
    Interval r(std::max(x.prec_, y.prec_));
    mpfr_sub(r.lo_, x.lo_, y.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, x.hi_, y.lo_, MPFR_RNDU);
    return r;
}

Interval operator*(const Interval& x, const Interval& y) {
    mpfr_prec_t prec = std::max(x.prec_, y.prec_);
    Interval r(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    // lo: minimum of the four endpoint products rounded down.
    mpfr_mul(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
    mpfr_mul(t, x.lo_, y.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, x.hi_, y.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, x.hi_, y.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    // hi: maximum rounded up.
    mpfr_mul(r.hi_, x.lo_, y.lo_, MPFR_RNDU);
    mpfr_mul(t, x.lo_, y.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, x.hi_, y.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, x.hi_, y.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Interval operator/(const Interval& x, const Interval& y) {
    if (y.contains_zero()) throw std::domain_error("Interval division by enclosure of zero");
    mpfr_prec_t prec = std::max(x.prec_, y.prec_);
    Interval r(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    mpfr_div(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
    mpfr_div(t, x.lo_, y.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, x.hi_, y.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, x.hi_, y.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(r.hi_, x.lo_, y.lo_, MPFR_RNDU);
    mpfr_div(t, x.lo_, y.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, x.hi_, y.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, x.hi_, y.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Interval Interval::operator-() const {
    Interval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval Interval::abs() const {
    Interval r(prec_);
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    // straddles zero
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::sqrt() const {
    if (mpfr_sgn(lo_) < 0) throw std::domain_error("Interval::sqrt of negative enclosure");
    Interval r(prec_);
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::log() const {
    if (mpfr_sgn(lo_) <= 0) throw std::domain_error("Interval::log needs a positive enclosure");
    Interval r(prec_);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::square() const {
    Interval r(prec_);
    if (mpfr_sgn(lo_) >= 0) {
        mpfr_mul(r.lo_, lo_, lo_, MPFR_RNDD);
        mpfr_mul(r.hi_, hi_, hi_, MPFR_RNDU);
    } else if (mpfr_sgn(hi_) <= 0) {
        mpfr_mul(r.lo_, hi_, hi_, MPFR_RNDD);
        mpfr_mul(r.hi_, lo_, lo_, MPFR_RNDU);
    } else {
        mpfr_set_zero(r.lo_, 1);
        mpfr_t alt;
        mpfr_init2(alt, prec_);
        mpfr_mul(r.hi_, lo_, lo_, MPFR_RNDU);
        mpfr_mul(alt, hi_, hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, alt, MPFR_RNDU);
        mpfr_clear(alt);
    }
    return r;
}

Interval Interval::pow(long e) const {
    if (e == 0) return from_long(1, prec_);
    if (e < 0) return from_long(1, prec_) / pow(-e);
    // Square-and-multiply on intervals.
    Interval base = *this;
    Interval acc = from_long(1, prec_);
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Interval Interval::hull(const Interval& x, const Interval& y) {
    Interval r(std::max(x.prec_, y.prec_));
    mpfr_min(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, x.hi_, y.hi_, MPFR_RNDU);
    return r;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool Interval::contains(const Rat& x) const {
    return mpfr_cmp_q(lo_, x.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, x.get_mpq_t()) >= 0;
}

std::optional<int> Interval::sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) return 0;
    return std::nullopt;
}

std::optional<bool> Interval::less_than(const Interval& y) const {
    if (mpfr_cmp(hi_, y.lo_) < 0) return true;
    if (mpfr_cmp(lo_, y.hi_) >= 0) return false;
    return std::nullopt;
}

std::optional<bool> Interval::less_than(const Rat& y) const {
    if (mpfr_cmp_q(hi_, y.get_mpq_t()) < 0) return true;
    if (mpfr_cmp_q(lo_, y.get_mpq_t()) >= 0) return false;
    return std::nullopt;
}

std::optional<bool> Interval::greater_than(const Rat& y) const {
    if (mpfr_cmp_q(lo_, y.get_mpq_t()) > 0) return true;
    if (mpfr_cmp_q(hi_, y.get_mpq_t()) <= 0) return false;
    return std::nullopt;
}

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid_double() const {
    mpfr_t m;
    mpfr_init2(m, prec_);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    double r = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return r;
}

double Interval::rad_double() const {
    mpfr_t r;
    mpfr_init2(r, 64);
    mpfr_sub(r, hi_, lo_, MPFR_RNDU);
    mpfr_div_2ui(r, r, 1, MPFR_RNDU);
    double v = mpfr_get_d(r, MPFR_RNDU);
    mpfr_clear(r);
    return v;
}

bool Interval::rad_below(const Rat& bound) const {
    mpfr_t r;
    mpfr_init2(r, prec_);
    mpfr_sub(r, hi_, lo_, MPFR_RNDU);
    mpfr_div_2ui(r, r, 1, MPFR_RNDU);
    bool ok = mpfr_cmp_q(r, bound.get_mpq_t()) <= 0;
    mpfr_clear(r);
    return ok;
}

std::string Interval::to_string(size_t digits) const {
    char* ls = nullptr;
    char* hs = nullptr;
    mpfr_asprintf(&ls, "%.*Rg", static_cast<int>(digits), lo_);
    mpfr_asprintf(&hs, "%.*Rg", static_cast<int>(digits), hi_);
    std::string out = std::string("[") + ls + ", " + hs + "]";
    mpfr_free_str(ls);
    mpfr_free_str(hs);
    return out;
}

CInterval CInterval::from_real(const Interval& x) {
    return {x, Interval::from_long(0, x.precision())};
}

CInterval CInterval::from_parts(const Interval& re, const Interval& im) { return {re, im}; }

CInterval operator+(const CInterval& x, const CInterval& y) {
    return {x.re + y.re, x.im + y.im};
}

CInterval operator-(const CInterval& x, const CInterval& y) {
    return {x.re - y.re, x.im - y.im};
}

CInterval operator*(const CInterval& x, const CInterval& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

CInterval operator/(const CInterval& x, const CInterval& y) {
    Interval den = y.abs_sq();
    if (den.contains_zero())
        throw std::domain_error("CInterval division by enclosure of zero");
    CInterval num = x * y.conjugate();
    return {num.re / den, num.im / den};
}

CInterval CInterval::operator-() const { return {-re, -im}; }

Interval CInterval::abs_sq() const { return re.square() + im.square(); }

Interval CInterval::abs() const { return abs_sq().sqrt(); }

CInterval CInterval::conjugate() const { return {re, -im}; }

CInterval CInterval::pow(long e) const {
    mpfr_prec_t prec = std::max(re.precision(), im.precision());
    if (e == 0) return from_real(Interval::from_long(1, prec));
    if (e < 0) return from_real(Interval::from_long(1, prec)) / pow(-e);
    CInterval base = *this;
    CInterval acc = from_real(Interval::from_long(1, prec));
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool CInterval::contains_zero() const { return re.contains_zero() && im.contains_zero(); }

std::string CInterval::to_string(size_t digits) const {
    std::ostringstream os;
    os << re.to_string(digits) << " + " << im.to_string(digits) << " i";
    return os.str();
}

}  // namespace geospec
