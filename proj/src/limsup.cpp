#include "geospec/limsup.hpp"

#include "geospec/spectrum_integer.hpp"
#include "geospec/spectrum_quadratic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace geospec {

namespace {

enum class Mode { exact_int_rat, exact_surd, floating };

Mode pick_mode(const RealInput& xi, const Alpha& alpha) {
    if (!xi.is_exact()) return Mode::floating;
    switch (alpha.kind) {
        case Alpha::Kind::integer:
            return xi.kind == RealInput::Kind::rational ? Mode::exact_int_rat : Mode::exact_surd;
        case Alpha::Kind::quadratic: {
            if (xi.kind == RealInput::Kind::rational) return Mode::exact_surd;
            const Surd& s = xi.surd;
            if (s.is_rational() || s.radicand() == alpha.quad->alpha().radicand())
                return Mode::exact_surd;
            return Mode::floating;  // wrong field: no exact route
        }
        case Alpha::Kind::general:
            if (xi.kind == RealInput::Kind::surd && !xi.surd.is_rational())
                return Mode::floating;
            return Mode::floating;
    }
    throw std::logic_error("pick_mode: bad alpha kind");
}

mpfr_prec_t auto_prec(const Alpha& alpha, long count, mpfr_prec_t user) {
    double bits = static_cast<double>(count) * alpha.log2_value() + 64.0;
    long want = static_cast<long>(bits) + 32;
    long p = std::max<long>(want, 96);
    if (static_cast<long>(user) > p) p = static_cast<long>(user);
    return static_cast<mpfr_prec_t>(p);
}

// Radius below which a float-mode value counts as certified.
const Rat& cert_radius() {
    static const Rat r = make_rat(1, Int(1) << 32);
    return r;
}

Int nearest_to_midpoint(const Interval& x) {
    mpfr_t mid;
    mpfr_init2(mid, mpfr_get_prec(x.lo()));
    mpfr_add(mid, x.lo(), x.hi(), MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    Int u;
    mpfr_get_z(u.get_mpz_t(), mid, MPFR_RNDN);
    mpfr_clear(mid);
    return u;
}

// Enclosure of the distance to the nearest integer.  Valid for any input;
// degrades to [0, 1/2] when the interval is too wide to localize.
Interval norm_interval(const Interval& x) {
    mpfr_prec_t p = x.precision();
    Int u = nearest_to_midpoint(x);
    Interval A = (x - Interval::from_int(u, p)).abs();
    if (mpfr_cmp_ui(A.hi(), 1) <= 0) {
        // every point t of x - u has |t| <= 1, where ||t|| = min(|t|, 1 - |t|)
        if (mpfr_cmp_d(A.hi(), 0.5) <= 0) return A;
        Interval B = Interval::from_long(1, p) - A;
        if (mpfr_cmp_d(A.lo(), 0.5) >= 0) return B;
        Interval r(p);
        if (mpfr_cmp(A.lo(), B.lo()) <= 0)
            mpfr_set(r.lo_mut(), A.lo(), MPFR_RNDD);
        else
            mpfr_set(r.lo_mut(), B.lo(), MPFR_RNDD);
        mpfr_set_d(r.hi_mut(), 0.5, MPFR_RNDU);
        r.check_valid();
        return r;
    }
    Interval r(p);
    mpfr_set_zero(r.lo_mut(), 1);
    mpfr_set_d(r.hi_mut(), 0.5, MPFR_RNDU);
    r.check_valid();
    return r;
}

CertifiedValue make_exact(Surd v) {
    CertifiedValue cv;
    cv.bounds = Interval::from_surd(v, 96);
    cv.exact = std::move(v);
    return cv;
}

// Streams ||xi alpha^n|| for n = 0 .. count-1 into fn; stops early when fn
// returns false.
void scan_norms(const RealInput& xi, const Alpha& alpha, long count, mpfr_prec_t precision,
                const std::function<bool(long, CertifiedValue&&)>& fn) {
    Mode mode = pick_mode(xi, alpha);
    switch (mode) {
        case Mode::exact_int_rat: {
            const Rat& x = xi.rational;
            Int q = x.get_den();
            Int r;
            mpz_fdiv_r(r.get_mpz_t(), x.get_num_mpz_t(), q.get_mpz_t());
            Int a(alpha.a);
            for (long n = 0; n < count; ++n) {
                Int other = q - r;
                const Int& m = r <= other ? r : other;
                if (!fn(n, make_exact(Surd(make_rat(m, q))))) return;
                r = (r * a) % q;
            }
            return;
        }
        case Mode::exact_surd: {
            Surd x = xi.exact_value();
            Surd mult =
                alpha.kind == Alpha::Kind::integer ? Surd(alpha.a) : alpha.quad->alpha();
            for (long n = 0; n < count; ++n) {
                if (!fn(n, make_exact(nearest_integer(x).eps.abs()))) return;
                x = x * mult;
            }
            return;
        }
        case Mode::floating: {
            mpfr_prec_t prec = auto_prec(alpha, count, precision);
            Interval a = alpha.enclosure(prec);
            Interval x = xi.enclosure(prec);
            for (long n = 0; n < count; ++n) {
                CertifiedValue cv;
                cv.bounds = norm_interval(x);
                if (!fn(n, std::move(cv))) return;
                x = x * a;
            }
            return;
        }
    }
}

}  // namespace

RealInput RealInput::from_rat(Rat x) {
    RealInput r;
    r.kind = Kind::rational;
    r.rational = std::move(x);
    return r;
}

RealInput RealInput::from_surd(Surd x) {
    RealInput r;
    r.kind = Kind::surd;
    r.surd = std::move(x);
    return r;
}

RealInput RealInput::from_decimal(std::string text, mpfr_prec_t bits) {
    if (text.empty()) throw std::invalid_argument("RealInput: empty decimal");
    if (bits < 8) throw std::invalid_argument("RealInput: decimal precision below 8 bits");
    RealInput r;
    r.kind = Kind::decimal;
    r.decimal = std::move(text);
    r.decimal_bits = bits;
    return r;
}

Surd RealInput::exact_value() const {
    switch (kind) {
        case Kind::rational: return Surd(rational);
        case Kind::surd: return surd;
        case Kind::decimal: break;
    }
    throw std::logic_error("RealInput: decimal input has no exact value");
}

Interval RealInput::enclosure(mpfr_prec_t prec) const {
    switch (kind) {
        case Kind::rational: return Interval::from_rat(rational, prec);
        case Kind::surd: return Interval::from_surd(surd, prec);
        case Kind::decimal:
            return Interval::from_decimal(decimal, std::min(decimal_bits, prec));
    }
    throw std::logic_error("RealInput: bad kind");
}

std::string RealInput::describe() const {
    switch (kind) {
        case Kind::rational: return rat_to_string(rational);
        case Kind::surd: return surd.to_string();
        case Kind::decimal: {
            std::ostringstream os;
            os << decimal << " (" << decimal_bits << " bits)";
            return os.str();
        }
    }
    return "?";
}

Alpha Alpha::integer(long a) {
    if (a < 2) throw std::invalid_argument("Alpha: integer base must be >= 2");
    Alpha r;
    r.kind = Kind::integer;
    r.a = a;
    return r;
}

Alpha Alpha::quadratic(long b, Sign sign) {
    Alpha r;
    r.kind = Kind::quadratic;
    r.quad.emplace(b, sign);
    return r;
}

Alpha Alpha::general(GeneralPisot p) {
    Alpha r;
    r.kind = Kind::general;
    r.pisot.emplace(std::move(p));
    return r;
}

double Alpha::log2_value() const {
    switch (kind) {
        case Kind::integer: return std::log2(static_cast<double>(a));
        case Kind::quadratic: return std::log2(quad->alpha().to_double());
        case Kind::general: return std::log2(pisot->alpha().mid_double());
    }
    throw std::logic_error("Alpha: bad kind");
}

Interval Alpha::enclosure(mpfr_prec_t prec) const {
    switch (kind) {
        case Kind::integer: return Interval::from_long(a, prec);
        case Kind::quadratic: return Interval::from_surd(quad->alpha(), prec);
        case Kind::general: {
            if (pisot->precision() >= prec) return pisot->alpha();
            GeneralPisot refined = *pisot;
            refined.refine(prec);
            return refined.alpha();
        }
    }
    throw std::logic_error("Alpha: bad kind");
}

std::string Alpha::describe() const {
    switch (kind) {
        case Kind::integer: {
            std::ostringstream os;
            os << "integer base " << a;
            return os.str();
        }
        case Kind::quadratic: return quad->describe();
        case Kind::general: return pisot->describe();
    }
    return "?";
}

std::string CertifiedValue::to_string() const {
    if (exact) return exact->to_string();
    return bounds.to_string(18);
}

std::vector<CertifiedValue> norm_sequence(const RealInput& xi, const Alpha& alpha, long count,
                                          mpfr_prec_t precision) {
    if (count < 1) throw std::invalid_argument("norm_sequence: count must be positive");
    std::vector<CertifiedValue> out;
    out.reserve(static_cast<size_t>(count));
    bool floating = pick_mode(xi, alpha) == Mode::floating;
    scan_norms(xi, alpha, count, precision, [&](long n, CertifiedValue&& v) {
        if (floating && !v.bounds.rad_below(cert_radius()))
            throw std::runtime_error(
                "norm_sequence: precision exhausted at n=" + std::to_string(n) +
                "; raise the precision or shorten the window");
        out.push_back(std::move(v));
        return true;
    });
    return out;
}

LimsupProbe limsup_estimate(const RealInput& xi, const Alpha& alpha, long n_max,
                            mpfr_prec_t precision) {
    if (n_max < 1) throw std::invalid_argument("limsup_estimate: window must be positive");
    LimsupProbe probe;
    bool floating = pick_mode(xi, alpha) == Mode::floating;
    probe.precision_used = floating ? auto_prec(alpha, n_max, precision) : 0;

    bool have = false;
    Surd best_exact;
    scan_norms(xi, alpha, n_max, precision, [&](long n, CertifiedValue&& v) {
        if (floating && !v.bounds.rad_below(cert_radius())) {
            probe.certified = false;
            return false;
        }
        ++probe.steps;
        bool improved;
        bool attained = false;
        if (v.exact) {
            improved = !have || *v.exact > best_exact;
            attained = have && !improved && *v.exact == best_exact;
            if (improved) best_exact = *v.exact;
        } else {
            improved = !have || mpfr_cmp(v.bounds.lo(), probe.best.bounds.lo()) > 0;
        }
        if (improved) {
            probe.argmax = n;
            probe.last_improvement = n;
            probe.attain_count = 1;
            probe.trace.push_back({n, v.bounds.lo_double()});
            probe.best = std::move(v);
            have = true;
        } else if (attained) {
            ++probe.attain_count;
        }
        return true;
    });
    return probe;
}

FiniteWord signed_digits_integer(const Rat& xi, long a, long count) {
    if (a < 2) throw std::invalid_argument("signed_digits_integer: base must be >= 2");
    if (count < 0) throw std::invalid_argument("signed_digits_integer: negative count");
    FiniteWord s;
    s.reserve(static_cast<size_t>(count));
    Rat eps = nearest_integer(xi).eps;
    for (long n = 0; n < count; ++n) {
        Rat t = eps * Rat(a);
        NearestDecomposition nd = nearest_integer(t);
        if (!nd.unit.fits_slong_p())
            throw std::logic_error("signed_digits_integer: digit out of range");
        s.push_back(static_cast<Letter>(nd.unit.get_si()));
        eps = nd.eps;
    }
    return s;
}

LimsupWordReport limsup_word_extract(const FiniteWord& s, const Alpha& alpha, long window,
                                     int top_m) {
    if (window < 1) throw std::invalid_argument("limsup_word_extract: window must be >= 1");
    if (top_m < 1) throw std::invalid_argument("limsup_word_extract: top_m must be >= 1");
    long len = static_cast<long>(s.size());
    if (window + 1 > len)
        throw std::invalid_argument("limsup_word_extract: window exceeds sequence length");

    // |eps|-proxy at each index, double precision: this is a ranking
    // heuristic, not a certified value.
    std::vector<double> value(static_cast<size_t>(len), 0.0);
    switch (alpha.kind) {
        case Alpha::Kind::integer: {
            double inva = 1.0 / static_cast<double>(alpha.a);
            double tail = 0.0;
            for (long n = len - 1; n >= 0; --n) {
                tail = (s[static_cast<size_t>(n)] + tail) * inva;
                value[static_cast<size_t>(n)] = std::fabs(tail);
            }
            break;
        }
        case Alpha::Kind::quadratic: {
            double al = alpha.quad->alpha().to_double();
            double al2 = alpha.quad->alpha2().to_double();
            double gap = alpha.quad->root_gap().to_double();
            std::vector<double> fwd(static_cast<size_t>(len) + 1, 0.0);
            for (long n = len - 1; n >= 0; --n)
                fwd[static_cast<size_t>(n)] =
                    (s[static_cast<size_t>(n)] + fwd[static_cast<size_t>(n) + 1]) / al;
            double back = 0.0;
            for (long n = 0; n < len; ++n) {
                back = s[static_cast<size_t>(n)] + al2 * back;
                value[static_cast<size_t>(n)] =
                    std::fabs(fwd[static_cast<size_t>(n) + 1] + back) / gap;
            }
            break;
        }
        case Alpha::Kind::general: {
            long back = 150, fwd = 150;
            std::vector<double> tau(static_cast<size_t>(back + fwd + 1));
            for (long q = -back; q <= fwd; ++q)
                tau[static_cast<size_t>(q + back)] = alpha.pisot->tau_weight(q).mid_double();
            for (long n = 0; n < len; ++n) {
                double sum = 0.0;
                for (long q = -back; q <= fwd; ++q) {
                    long idx = n + q;
                    if (idx < 0 || idx >= len) continue;
                    sum += s[static_cast<size_t>(idx)] * tau[static_cast<size_t>(q + back)];
                }
                value[static_cast<size_t>(n)] = std::fabs(sum);
            }
            break;
        }
    }

    LimsupWordReport report;
    report.window = window;

    // Guard both ends: near the right edge the proxy's tail is truncated
    // (an alternating tail overshoots its limit), and small n can carry a
    // transient above the limsup. 52 bits of decay keeps truncation error
    // below the cutoff band; the len/8 burn-in skips transients.
    long guard = static_cast<long>(std::ceil(52.0 / alpha.log2_value()));
    long n_lo = len / 8;
    if (alpha.kind != Alpha::Kind::integer) n_lo = std::max(n_lo, guard);
    long n_hi = len - 1 - window - guard;  // block s[n+1 .. n+window] must exist
    if (n_lo > n_hi)
        throw std::invalid_argument(
            "limsup_word_extract: sequence too short for a guarded window scan");

    double vmax = 0.0;
    for (long n = n_lo; n <= n_hi; ++n) vmax = std::max(vmax, value[static_cast<size_t>(n)]);
    report.max_value = vmax;
    report.cutoff = vmax * (1.0 - 1.0 / 1024.0) - 1e-15;

    std::map<FiniteWord, std::pair<size_t, long>> counts;
    for (long n = n_lo; n <= n_hi; ++n) {
        if (value[static_cast<size_t>(n)] < report.cutoff) continue;
        ++report.candidates;
        FiniteWord block(s.begin() + n + 1, s.begin() + n + 1 + window);
        auto it = counts.find(block);
        if (it == counts.end())
            counts.emplace(std::move(block), std::make_pair(size_t{1}, n));
        else
            ++it->second.first;
    }

    std::vector<BlockCount> ranked;
    ranked.reserve(counts.size());
    for (const auto& [block, info] : counts)
        ranked.push_back({block, info.first, info.second});
    std::sort(ranked.begin(), ranked.end(), [](const BlockCount& x, const BlockCount& y) {
        if (x.count != y.count) return x.count > y.count;
        return x.block < y.block;
    });
    if (ranked.size() > static_cast<size_t>(top_m)) ranked.resize(static_cast<size_t>(top_m));
    report.top = std::move(ranked);
    return report;
}

Surd tau_weight_exact(const QuadUnit& u, long q) {
    Surd gap = u.root_gap();
    if (q > 0) return u.alpha().pow(-q) / gap;
    return u.alpha2().pow(-q) / gap;
}

PisotDigits pisot_digits(const GeneralPisot& P, const Rat& xi, long m_from, long m_to,
                         mpfr_prec_t precision) {
    if (m_to < m_from) throw std::invalid_argument("pisot_digits: empty range");
    const int d = P.degree();
    const std::vector<Int>& coeff = P.coefficients();
    long n_lo = m_from + 1 - d;
    long n_hi = m_to + 1;

    Rat bound_rat(1);
    for (int i = 0; i < d; ++i) bound_rat += rat_abs(Rat(coeff[static_cast<size_t>(i)]));
    bound_rat /= 2;

    double la = P.alpha().mid_double();
    long span = std::max(std::labs(n_lo), std::labs(n_hi));
    long base_bits =
        static_cast<long>(static_cast<double>(span) * std::log2(la)) + 192;
    if (static_cast<long>(precision) > base_bits) base_bits = static_cast<long>(precision);

    for (int attempt = 0; attempt < 4; ++attempt, base_bits *= 2) {
        mpfr_prec_t prec = static_cast<mpfr_prec_t>(base_bits);
        GeneralPisot Q = P;
        if (Q.precision() < prec) Q.refine(prec);
        Interval a = Q.alpha();

        std::vector<Interval> x(static_cast<size_t>(n_hi - n_lo + 1), Interval(prec));
        x[static_cast<size_t>(-n_lo)] = Interval::from_rat(xi, prec);
        for (long n = 1; n <= n_hi; ++n)
            x[static_cast<size_t>(n - n_lo)] = x[static_cast<size_t>(n - 1 - n_lo)] * a;
        for (long n = -1; n >= n_lo; --n)
            x[static_cast<size_t>(n - n_lo)] = x[static_cast<size_t>(n + 1 - n_lo)] / a;

        PisotDigits out;
        out.from = m_from;
        out.u_from = n_lo;
        out.precision_used = prec;
        out.u.resize(static_cast<size_t>(n_hi - n_lo + 1));
        out.eps.reserve(static_cast<size_t>(n_hi - n_lo + 1));
        bool ambiguous = false;
        for (long n = n_lo; n <= n_hi && !ambiguous; ++n) {
            const Interval& v = x[static_cast<size_t>(n - n_lo)];
            Interval shifted = v + Interval::from_rat(make_rat(1, 2), prec);
            Int flo, fhi;
            mpfr_get_z(flo.get_mpz_t(), shifted.lo(), MPFR_RNDD);
            mpfr_get_z(fhi.get_mpz_t(), shifted.hi(), MPFR_RNDD);
            if (flo != fhi) {
                ambiguous = true;
                break;
            }
            out.u[static_cast<size_t>(n - n_lo)] = flo;
            out.eps.push_back(v - Interval::from_int(flo, prec));
        }
        if (ambiguous) continue;

        out.s.reserve(static_cast<size_t>(m_to - m_from + 1));
        for (long m = m_from; m <= m_to; ++m) {
            Int acc = out.u[static_cast<size_t>(m + 1 - n_lo)];  // monic top term
            for (int k = 0; k < d; ++k)
                acc += coeff[static_cast<size_t>(k)] *
                       out.u[static_cast<size_t>(m + 1 - d + k - n_lo)];
            if (rat_abs(Rat(acc)) > bound_rat)
                throw std::logic_error("pisot_digits: digit exceeds the companion bound");
            out.s.push_back(acc.get_si());
        }
        return out;
    }
    throw std::runtime_error("pisot_digits: precision exhausted certifying nearest integers");
}

std::vector<ReconstructionCheck> reconstruction_check(const GeneralPisot& P, const Rat& xi,
                                                      long n_max, long q_max,
                                                      mpfr_prec_t precision) {
    if (n_max < 0) throw std::invalid_argument("reconstruction_check: negative n_max");
    const int d = P.degree();
    double la = std::log2(P.alpha().mid_double());
    double lx = xi == 0 ? 0.0 : std::log2(std::fabs(xi.get_d()));

    // digits vanish once every u in their span is zero; pad the left end
    // until that is visible
    long m_lo = -static_cast<long>((lx + 2.0) / la) - d - 6;
    PisotDigits dig;
    for (int tries = 0;; ++tries) {
        dig = pisot_digits(P, xi, m_lo, n_max + q_max, precision);
        bool clean = true;
        for (int i = 0; i <= d && clean; ++i)
            clean = dig.s[static_cast<size_t>(i)] == 0;
        if (clean) break;
        if (tries >= 3)
            throw std::logic_error("reconstruction_check: left margin did not stabilize");
        m_lo -= 16;
    }

    mpfr_prec_t prec = dig.precision_used;
    GeneralPisot Q = P;
    if (Q.precision() < prec) Q.refine(prec);

    std::vector<Interval> tau;
    long t_lo = m_lo - n_max;
    tau.reserve(static_cast<size_t>(q_max - t_lo + 1));
    for (long q = t_lo; q <= q_max; ++q) tau.push_back(Q.tau_weight(q));

    // |tau_q| <= C alpha^{-q} for q > 0; the dropped tail past q_max is
    // bounded by B * C * alpha^{-q_max} / (alpha - 1)
    Interval alpha_enc = Q.alpha();
    Interval C = d == 1 ? Interval::from_long(1, prec) / alpha_enc
                        : Interval::from_long(0, prec);
    const std::vector<CInterval>& roots = Q.roots();
    for (int j = 1; j < d; ++j) {
        CInterval w = CInterval::from_real(Interval::from_long(1, prec));
        for (int k = 1; k < d; ++k) {
            if (k == j) continue;
            w = w * (roots[static_cast<size_t>(j)] /
                     (roots[static_cast<size_t>(j)] - roots[static_cast<size_t>(k)]));
        }
        C = C + (w / (CInterval::from_real(alpha_enc) - roots[static_cast<size_t>(j)])).abs();
    }
    Rat digit_bound(1);
    for (int i = 0; i < d; ++i)
        digit_bound += rat_abs(Rat(Q.coefficients()[static_cast<size_t>(i)]));
    digit_bound /= 2;
    Interval tail = Interval::from_rat(digit_bound, prec) * C * alpha_enc.pow(-q_max) /
                    (alpha_enc - Interval::from_long(1, prec));
    {
        Interval widened(prec);
        mpfr_set_zero(widened.lo_mut(), 1);
        mpfr_set(widened.hi_mut(), tail.abs().hi(), MPFR_RNDU);
        widened.check_valid();
        tail = widened;
    }

    std::vector<ReconstructionCheck> checks;
    checks.reserve(static_cast<size_t>(n_max + 1));
    for (long n = 0; n <= n_max; ++n) {
        ReconstructionCheck c;
        c.n = n;
        c.direct = dig.eps[static_cast<size_t>(n - dig.u_from)];
        Interval sum = Interval::from_long(0, prec);
        for (long q = m_lo - n; q <= q_max; ++q) {
            long idx = n + q;
            long sv = dig.s[static_cast<size_t>(idx - dig.from)];
            if (sv == 0) continue;
            sum = sum + Interval::from_long(sv, prec) * tau[static_cast<size_t>(q - t_lo)];
        }
        c.via_digits = sum;
        c.tail_bound = tail;
        Interval diff = (c.direct - c.via_digits).abs();
        c.consistent = mpfr_cmp(diff.lo(), tail.hi()) <= 0;
        checks.push_back(std::move(c));
    }
    return checks;
}

std::vector<QuadReconstruction> reconstruction_check_quad(const QuadUnit& u, const Surd& xi,
                                                          long n_max, long q_max) {
    if (n_max < 0) throw std::invalid_argument("reconstruction_check_quad: negative n_max");
    long m_lo = 0;
    {
        Surd v = xi.abs();
        Surd quarter(make_rat(1, 4));
        while (!(v < quarter)) {
            v = v / u.alpha();
            --m_lo;
            if (m_lo < -1000000)
                throw std::logic_error("reconstruction_check_quad: xi too large");
        }
        m_lo -= 4;
    }
    SSequence seq = s_sequence(u, xi, m_lo, n_max + q_max);
    for (int i = 0; i < 2; ++i)
        if (seq.s[static_cast<size_t>(i)] != 0)
            throw std::logic_error("reconstruction_check_quad: left margin not clean");

    std::vector<Surd> tau;
    long t_lo = m_lo - n_max;
    tau.reserve(static_cast<size_t>(q_max - t_lo + 1));
    for (long q = t_lo; q <= q_max; ++q) tau.push_back(tau_weight_exact(u, q));

    Surd tail = Surd(make_rat(u.b() + 2, 2)) * u.alpha().pow(-q_max) /
                (u.root_gap() * (u.alpha() - Surd(1)));

    std::vector<QuadReconstruction> checks;
    checks.reserve(static_cast<size_t>(n_max + 1));
    for (long n = 0; n <= n_max; ++n) {
        QuadReconstruction c;
        c.n = n;
        c.direct = seq.eps[static_cast<size_t>(n - m_lo)];
        Surd sum;
        for (long q = m_lo - n; q <= q_max; ++q) {
            int sv = seq.s[static_cast<size_t>(n + q - m_lo)];
            if (sv == 0) continue;
            sum += Surd(static_cast<long>(sv)) * tau[static_cast<size_t>(q - t_lo)];
        }
        c.truncated = sum;
        c.tail_bound = tail;
        c.ok = (c.direct - c.truncated).abs() <= tail;
        checks.push_back(std::move(c));
    }
    return checks;
}

Eta0Probe eta0_witness_truncated(long a, size_t letters) {
    if (a < 2) throw std::invalid_argument("eta0_witness_truncated: base must be >= 2");
    if (letters < 1) throw std::invalid_argument("eta0_witness_truncated: need letters");
    FiniteWord y = fixed_point_prefix(letters);
    long S = 0;
    for (Letter l : y) S += l;

    Int base(a);
    Int num = pow_int(base, static_cast<unsigned long>(S));  // i = 0 term
    long p = 0;
    int sign = 1;
    for (size_t i = 0; i < y.size(); ++i) {
        p += y[i];
        sign = -sign;
        Int term = pow_int(base, static_cast<unsigned long>(S - p));
        num += sign > 0 ? term : -term;
    }
    Int den = pow_int(base, static_cast<unsigned long>(S + 1));

    Eta0Probe probe;
    probe.xi = make_rat(num, den);
    probe.tail_bound = make_rat(1, den * Int(a - 1));
    probe.letters = letters;
    probe.depth = S + 1;
    return probe;
}

}  // namespace geospec
