#include "geospec/surd.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace geospec {

std::pair<Int, Int> extract_square_part(const Int& D) {
    if (D < 0) throw std::invalid_argument("extract_square_part: negative radicand");
    if (D == 0) return {Int(1), Int(0)};
    Int f = 1, rest = D;
    Int p = 2;
    while (p * p <= rest) {
        Int sq = p * p;
        while (mpz_divisible_p(rest.get_mpz_t(), sq.get_mpz_t())) {
            rest /= sq;
            f *= p;
        }
        if (p == 2)
            p = 3;
        else
            p += 2;
    }
    return {f, rest};
}

Surd::Surd(Rat a, Rat b, Int d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (d_ < 0) throw std::invalid_argument("Surd: negative radicand");
    if (b_ == 0 || d_ == 0) {
        b_ = 0;
        d_ = 1;
        return;
    }
    if (d_ == 1) {
        a_ += b_;
        b_ = 0;
        return;
    }
    auto [f, squarefree] = extract_square_part(d_);
    if (squarefree == 1) {
        a_ += b_ * Rat(f);
        b_ = 0;
        d_ = 1;
        return;
    }
    b_ *= Rat(f);
    d_ = squarefree;
}

const Rat& Surd::as_rational() const {
    if (!is_rational()) throw std::domain_error("Surd::as_rational: value is irrational");
    return a_;
}

void Surd::require_same_field(const Surd& x, const Surd& y) {
    if (!x.is_rational() && !y.is_rational() && x.d_ != y.d_) {
        throw std::invalid_argument("Surd: mixed radicands " + x.d_.get_str() + " and " +
                                    y.d_.get_str());
    }
}

Surd operator+(const Surd& x, const Surd& y) {
    Surd::require_same_field(x, y);
    Int d = x.is_rational() ? y.d_ : x.d_;
    Rat b = x.b_ + y.b_;
    if (b == 0) return Surd(x.a_ + y.a_);
    return Surd(x.a_ + y.a_, std::move(b), std::move(d), Surd::private_tag{});
}

Surd operator-(const Surd& x, const Surd& y) { return x + (-y); }

Surd operator*(const Surd& x, const Surd& y) {
    Surd::require_same_field(x, y);
    Int d = x.is_rational() ? y.d_ : x.d_;
    Rat a = x.a_ * y.a_ + x.b_ * y.b_ * Rat(d);
    Rat b = x.a_ * y.b_ + x.b_ * y.a_;
    if (b == 0) return Surd(std::move(a));
    return Surd(std::move(a), std::move(b), std::move(d), Surd::private_tag{});
}

Surd Surd::inverse() const {
    if (is_zero()) throw std::domain_error("Surd::inverse: division by zero");
    if (is_rational()) return Surd(Rat(1) / a_);
    Rat n = field_norm();  // nonzero: sqrt(d) is irrational
    return Surd(a_ / n, -b_ / n, d_, private_tag{});
}

Surd operator/(const Surd& x, const Surd& y) { return x * y.inverse(); }

int Surd::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with b^2 d.
    Rat lhs = a_ * a_;
    Rat rhs = b_ * b_ * Rat(d_);
    int c = cmp(lhs, rhs);
    if (c == 0) return 0;  // unreachable for square-free d > 1, kept for safety
    // |a| dominates iff a^2 > b^2 d.
    return c > 0 ? sa : sb;
}

int compare(const Surd& x, const Surd& y) { return (x - y).sign(); }

bool operator==(const Surd& x, const Surd& y) {
    if (x.b_ == 0 && y.b_ == 0) return x.a_ == y.a_;
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
}

namespace {

// Writes x as (P + Q sqrt(d)) / R with integer P, Q and R > 0.
struct IntegerForm {
    Int P, Q, R;
};

IntegerForm integer_form(const Rat& a, const Rat& b) {
    Int ad = a.get_den(), bd = b.get_den();
    Int R;
    mpz_lcm(R.get_mpz_t(), ad.get_mpz_t(), bd.get_mpz_t());
    Int P = a.get_num() * (R / ad);
    Int Q = b.get_num() * (R / bd);
    return {P, Q, R};
}

}  // namespace

Int Surd::floor() const {
    if (is_rational()) return rat_floor(a_);
    auto [P, Q, R] = integer_form(a_, b_);
    Int s;
    {
        Int QQd = Q * Q * d_;
        mpz_sqrt(s.get_mpz_t(), QQd.get_mpz_t());
    }
    Int num = P;
    if (Q > 0)
        num += s;
    else
        num -= s;
    Int k;
    mpz_fdiv_q(k.get_mpz_t(), num.get_mpz_t(), R.get_mpz_t());
    // Exact fix-up; the candidate is off by at most one.
    while (compare(*this, Surd(Rat(k))) < 0) k -= 1;
    while (compare(*this, Surd(Rat(k + 1))) >= 0) k += 1;
    return k;
}

Int Surd::ceil() const {
    Int f = floor();
    return (*this == Surd(Rat(f))) ? f : Int(f + 1);
}

Surd Surd::pow(long e) const {
    if (e == 0) return Surd(Rat(1));
    Surd base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Surd acc(Rat(1));
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

double Surd::to_double() const {
    if (b_ == 0) return a_.get_d();
    // Work at a precision that survives cancellation between the rational
    // and surd parts; the sum cannot be smaller than ~2^-(bits(a)+bits(b)).
    auto bits = [](const Rat& q) {
        return mpz_sizeinbase(q.get_num().get_mpz_t(), 2) +
               mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
    };
    mp_bitcnt_t prec = bits(a_) + bits(b_) + 128;
    mpf_class root(0, prec);
    mpf_class fd(d_, prec);
    mpf_sqrt(root.get_mpf_t(), fd.get_mpf_t());
    mpf_class r(a_, prec);
    r += mpf_class(b_, prec) * root;
    return r.get_d();
}

std::string Surd::to_string() const {
    if (is_rational()) return rat_to_string(a_);
    auto [P, Q, R] = integer_form(a_, b_);
    Int g;
    mpz_gcd(g.get_mpz_t(), P.get_mpz_t(), Q.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), R.get_mpz_t());
    if (g > 1) {
        P /= g;
        Q /= g;
        R /= g;
    }
    std::ostringstream os;
    os << "(" << P.get_str();
    os << (Q >= 0 ? "+" : "-");
    Int qa = ::abs(Q);
    if (qa != 1) os << qa.get_str() << "*";
    os << "sqrt(" << d_.get_str() << "))";
    if (R != 1) os << "/" << R.get_str();
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Surd& x) { return os << x.to_string(); }

NearestSurd nearest_integer(const Surd& x) {
    Int u = (x + Surd(make_rat(1, 2))).floor();
    return {u, x - Surd(Rat(u))};
}

Surd dist_to_int(const Surd& x) { return nearest_integer(x).eps.abs(); }

QuadUnit::QuadUnit(long b, Sign sign) : b_(b), sign_(sign) {
    if (sign == Sign::plus && b < 3)
        throw std::invalid_argument("QuadUnit: plus case needs b >= 3 for a dominant root > 1");
    if (sign == Sign::minus && b < 1)
        throw std::invalid_argument("QuadUnit: minus case needs b >= 1");
}

Int QuadUnit::discriminant() const {
    Int bb(b_);
    return sign_ == Sign::plus ? Int(bb * bb - 4) : Int(bb * bb + 4);
}

Surd QuadUnit::alpha() const { return Surd(make_rat(b_, 2), make_rat(1, 2), discriminant()); }

Surd QuadUnit::alpha2() const { return Surd(make_rat(b_, 2), make_rat(-1, 2), discriminant()); }

Surd QuadUnit::root_gap() const { return Surd(Rat(0), Rat(1), discriminant()); }

long QuadUnit::max_digit() const {
    Surd half = (alpha() + Surd(1)) / Surd(2);
    return half.floor().get_si();
}

std::string QuadUnit::describe() const {
    std::ostringstream os;
    os << "x^2 - " << b_ << "x " << (sign_ == Sign::plus ? "+ 1" : "- 1")
       << ", alpha = " << alpha().to_string();
    return os.str();
}

}  // namespace geospec
