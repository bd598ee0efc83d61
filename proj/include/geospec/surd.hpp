#pragma once

// Exact arithmetic in real quadratic fields: values a + b*sqrt(d) with
// rational a, b and a square-free radicand d.  Comparisons, floors and
// nearest-integer decompositions are all exact (no floating point on any
// decision path).

#include "geospec/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace geospec {

class Surd {
  public:
    Surd() : a_(0), b_(0), d_(1) {}
    Surd(const Rat& rational) : a_(rational), b_(0), d_(1) {}  // NOLINT: implicit by design
    Surd(long value) : a_(value), b_(0), d_(1) {}              // NOLINT
    Surd(const Int& value) : a_(Rat(value)), b_(0), d_(1) {}   // NOLINT

    // a + b*sqrt(d) for any d >= 0; the square part of d is pulled out, and a
    // vanishing irrational part collapses to the canonical rational form d=1.
    Surd(Rat a, Rat b, Int d);

    const Rat& rational_part() const { return a_; }
    const Rat& surd_coefficient() const { return b_; }
    const Int& radicand() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    // Throws unless the value is rational.
    const Rat& as_rational() const;

    bool is_zero() const { return b_ == 0 && a_ == 0; }

    // Galois conjugate a - b*sqrt(d).
    Surd conjugate() const { return Surd(a_, -b_, d_, private_tag{}); }
    // a^2 - b^2 d, the product with the conjugate (a rational).
    Rat field_norm() const { return a_ * a_ - b_ * b_ * Rat(d_); }

    Surd operator-() const { return Surd(-a_, -b_, d_, private_tag{}); }
    Surd inverse() const;

    friend Surd operator+(const Surd& x, const Surd& y);
    friend Surd operator-(const Surd& x, const Surd& y);
    friend Surd operator*(const Surd& x, const Surd& y);
    friend Surd operator/(const Surd& x, const Surd& y);

    Surd& operator+=(const Surd& y) { return *this = *this + y; }
    Surd& operator-=(const Surd& y) { return *this = *this - y; }
    Surd& operator*=(const Surd& y) { return *this = *this * y; }
    Surd& operator/=(const Surd& y) { return *this = *this / y; }

    // Exact sign: -1, 0, +1.
    int sign() const;
    // Exact three-way comparison.
    friend int compare(const Surd& x, const Surd& y);
    friend bool operator==(const Surd& x, const Surd& y);
    friend bool operator!=(const Surd& x, const Surd& y) { return !(x == y); }
    friend bool operator<(const Surd& x, const Surd& y) { return compare(x, y) < 0; }
    friend bool operator<=(const Surd& x, const Surd& y) { return compare(x, y) <= 0; }
    friend bool operator>(const Surd& x, const Surd& y) { return compare(x, y) > 0; }
    friend bool operator>=(const Surd& x, const Surd& y) { return compare(x, y) >= 0; }

    Surd abs() const { return sign() < 0 ? -*this : *this; }

    // Exact floor/ceil via integer square roots.
    Int floor() const;
    Int ceil() const;

    // x^e for any integer exponent (e < 0 requires x != 0).
    Surd pow(long e) const;

    double to_double() const;

    // Canonical "(p+q*sqrt(d))/r" with integer p, q, r; gcd(p,q,r)=1, r>0.
    std::string to_string() const;

  private:
    struct private_tag {};
    // Trusted constructor: inputs already canonical.
    Surd(Rat a, Rat b, Int d, private_tag) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

    static void require_same_field(const Surd& x, const Surd& y);

    Rat a_, b_;
    Int d_;
};

std::ostream& operator<<(std::ostream& os, const Surd& x);

struct NearestSurd {
    Int unit;  // floor(x + 1/2)
    Surd eps;  // x - unit, in [-1/2, 1/2)
};

NearestSurd nearest_integer(const Surd& x);
Surd dist_to_int(const Surd& x);

// D = f^2 * d with d square-free; returns {f, d}.
std::pair<Int, Int> extract_square_part(const Int& D);

enum class Sign { plus, minus };

inline const char* sign_name(Sign s) { return s == Sign::plus ? "plus" : "minus"; }

// Quadratic Pisot unit: the dominant root of x^2 - b x + 1 (plus, b >= 3) or
// x^2 - b x - 1 (minus, b >= 1).  The conjugate is the algebraic inverse up
// to sign, so alpha * alpha2 = +1 or -1 and alpha + alpha2 = b.
class QuadUnit {
  public:
    QuadUnit(long b, Sign sign);

    long b() const { return b_; }
    Sign kind() const { return sign_; }

    // b^2 -/+ 4 for plus/minus.
    Int discriminant() const;

    Surd alpha() const;   // (b + sqrt(disc)) / 2, the root > 1
    Surd alpha2() const;  // (b - sqrt(disc)) / 2, |alpha2| < 1

    // alpha * alpha2: +1 (plus) or -1 (minus).
    long unit_norm() const { return sign_ == Sign::plus ? 1 : -1; }

    // alpha - alpha2 = sqrt(discriminant).
    Surd root_gap() const;

    // Largest digit of the symmetric expansion: floor((alpha + 1) / 2).
    long max_digit() const;

    std::string describe() const;

  private:
    long b_;
    Sign sign_;
};

}  // namespace geospec
