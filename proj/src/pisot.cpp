#include "geospec/pisot.hpp"

#include <algorithm>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace geospec {

namespace {

// Point interval at the midpoint of x, used to recenter Newton iterates.
Interval midpoint_of(const Interval& x, mpfr_prec_t prec) {
    mpfr_t m;
    mpfr_init2(m, prec);
    mpfr_add(m, x.lo(), x.hi(), MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    Interval r = Interval::from_mpfr(m, prec);
    mpfr_clear(m);
    return r;
}

CInterval recenter(const CInterval& z, mpfr_prec_t prec) {
    return {midpoint_of(z.re, prec), midpoint_of(z.im, prec)};
}

// [-r, r] from the upper endpoint of a nonnegative interval.
Interval symmetric_about_zero(const Interval& r) {
    Interval hi = Interval::from_mpfr(r.hi(), r.precision());
    return Interval::hull(-hi, hi);
}

CInterval eval_poly(const std::vector<Int>& coeffs, const CInterval& z, mpfr_prec_t prec) {
    CInterval acc = CInterval::from_real(Interval::from_int(coeffs.back(), prec));
    for (size_t i = coeffs.size() - 1; i-- > 0;) {
        acc = acc * z + CInterval::from_real(Interval::from_int(coeffs[i], prec));
    }
    return acc;
}

std::vector<Int> derivative(const std::vector<Int>& coeffs) {
    std::vector<Int> d;
    for (size_t i = 1; i < coeffs.size(); ++i) d.push_back(coeffs[i] * Int(static_cast<long>(i)));
    return d;
}

std::vector<std::complex<double>> durand_kerner(const std::vector<Int>& coeffs) {
    const int d = static_cast<int>(coeffs.size()) - 1;
    std::vector<double> c(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i].get_d();
    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc = c[d];
        for (int i = d - 1; i >= 0; --i) acc = acc * z + c[i];
        return acc;
    };
    std::vector<std::complex<double>> z(d);
    const std::complex<double> seed(0.4, 0.9);
    std::complex<double> p = seed;
    for (int i = 0; i < d; ++i, p *= seed) z[i] = p;
    for (int iter = 0; iter < 1000; ++iter) {
        double worst = 0;
        for (int i = 0; i < d; ++i) {
            std::complex<double> den(1, 0);
            for (int j = 0; j < d; ++j)
                if (j != i) den *= z[i] - z[j];
            std::complex<double> step = eval(z[i]) / den;
            z[i] -= step;
            worst = std::max(worst, std::abs(step));
        }
        if (worst < 1e-14) break;
    }
    return z;
}

}  // namespace

Rat poly_eval_rat(const std::vector<Int>& coeffs, const Rat& x) {
    Rat acc(coeffs.back());
    for (size_t i = coeffs.size() - 1; i-- > 0;) acc = acc * x + Rat(coeffs[i]);
    return acc;
}

GeneralPisot GeneralPisot::from_coeffs(std::vector<Int> coeffs, mpfr_prec_t prec) {
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.size() < 2) throw std::invalid_argument("GeneralPisot: degree must be >= 1");
    if (coeffs.back() != 1) throw std::invalid_argument("GeneralPisot: polynomial must be monic");
    GeneralPisot gp;
    gp.coeffs_ = std::move(coeffs);
    gp.certify(prec);
    return gp;
}

void GeneralPisot::refine(mpfr_prec_t prec) {
    if (prec <= prec_) return;
    certify(prec);
}

void GeneralPisot::certify(mpfr_prec_t target_prec) {
    const int d = degree();
    const std::vector<Int> dcoeffs = derivative(coeffs_);

    if (d == 1) {
        // x + c0: root is -c0; Pisot needs -c0 > 1.
        Int root = -coeffs_[0];
        if (root <= 1) throw std::domain_error("GeneralPisot: dominant root must exceed 1");
        prec_ = target_prec;
        alpha_ = Interval::from_int(root, target_prec);
        roots_ = {CInterval::from_real(alpha_)};
        return;
    }

    auto approx = durand_kerner(coeffs_);

    const mpfr_prec_t cap = 1 << 15;
    for (mpfr_prec_t prec = target_prec; prec <= cap; prec *= 2) {
        mpfr_prec_t work = prec + 64;

        // Newton-polish each approximate root at working precision.  The
        // iterates are recentered points; rigor comes from the disc bound
        // below, not from the iteration.
        std::vector<CInterval> centers;
        centers.reserve(d);
        for (auto& z0 : approx) {
            CInterval z = CInterval::from_parts(
                Interval::from_decimal(std::to_string(z0.real()), work),
                Interval::from_decimal(std::to_string(z0.imag()), work));
            for (int step = 0; step < 64; ++step) {
                CInterval pz = eval_poly(coeffs_, z, work);
                CInterval dz = eval_poly(dcoeffs, z, work);
                if (dz.abs_sq().contains_zero()) break;
                z = recenter(z - pz / dz, work);
            }
            centers.push_back(z);
        }

        // A disc of radius d*|p(z)| / |p'(z)| around z contains at least one
        // root of p.  Build those discs rigorously.
        std::vector<CInterval> boxes;
        std::vector<Interval> radii;
        bool ok = true;
        for (auto& z : centers) {
            CInterval pz = eval_poly(coeffs_, z, work);
            CInterval dz = eval_poly(dcoeffs, z, work);
            Interval dabs = dz.abs();
            if (dabs.contains_zero()) {
                ok = false;
                break;
            }
            Interval rad = Interval::from_long(d, work) * pz.abs() / dabs;
            Interval pm = symmetric_about_zero(rad);
            boxes.push_back(CInterval::from_parts(z.re + pm, z.im + pm));
            radii.push_back(rad);
        }
        if (!ok) continue;

        // Pairwise disjoint discs: d discs, d roots, at least one root each,
        // hence exactly one root each.
        for (int i = 0; i < d && ok; ++i) {
            for (int j = i + 1; j < d && ok; ++j) {
                Interval dist = (centers[i] - centers[j]).abs();
                Interval rsum = radii[i] + radii[j];
                auto apart = rsum.less_than(dist);
                if (!apart.has_value() || !*apart) ok = false;
            }
        }
        if (!ok) continue;

        // Dominant root: the one whose enclosure can exceed 1 in modulus.
        int dominant = -1;
        for (int i = 0; i < d; ++i) {
            auto above = boxes[i].abs().greater_than(Rat(1));
            auto below = boxes[i].abs().less_than(Rat(1));
            if (above.has_value() && *above) {
                if (dominant != -1) {
                    ok = false;  // two roots outside the unit circle: not Pisot
                    break;
                }
                dominant = i;
            } else if (!(below.has_value() && *below)) {
                ok = false;  // modulus vs 1 undecided at this precision
                break;
            }
        }
        if (!ok) continue;
        if (dominant == -1) throw std::domain_error("GeneralPisot: no root outside the unit circle");

        // The dominant root must be real: verify an exact sign change of p on
        // the rational endpoints of its real enclosure.
        if (!boxes[dominant].im.contains_zero()) {
            throw std::domain_error("GeneralPisot: dominant root is not real");
        }
        Rat lo_q, hi_q;
        mpfr_get_q(lo_q.get_mpq_t(), boxes[dominant].re.lo());
        mpfr_get_q(hi_q.get_mpq_t(), boxes[dominant].re.hi());
        Rat pl = poly_eval_rat(coeffs_, lo_q);
        Rat ph = poly_eval_rat(coeffs_, hi_q);
        if (sgn(pl) * sgn(ph) > 0) continue;  // not tight enough to bracket; retry finer
        if (lo_q <= 1) continue;              // enclosure must stay right of 1

        prec_ = prec;
        alpha_ = boxes[dominant].re;
        roots_.clear();
        roots_.push_back(CInterval::from_parts(alpha_, Interval::from_long(0, work)));
        for (int i = 0; i < d; ++i)
            if (i != dominant) roots_.push_back(boxes[i]);
        return;
    }
    throw std::domain_error("GeneralPisot: cannot certify polynomial as Pisot");
}

CInterval GeneralPisot::tau_weight_complex(long q) const {
    const int d = degree();
    mpfr_prec_t work = prec_ + 64;
    if (d == 1) {
        Int a;  // degree-1 alpha is an exact integer endpoint
        mpfr_get_z(a.get_mpz_t(), alpha_.lo(), MPFR_RNDN);
        Rat val = q >= 0 ? pow_rat(Rat(a), -q - 1) : Rat(0);
        return CInterval::from_real(Interval::from_rat(val, work));
    }
    CInterval alpha_c = roots_[0];
    CInterval sum = CInterval::from_real(Interval::from_long(0, work));
    for (int j = 1; j < d; ++j) {
        CInterval w = CInterval::from_real(Interval::from_long(1, work));
        for (int k = 1; k < d; ++k) {
            if (k == j) continue;
            w = w * (roots_[j] / (roots_[j] - roots_[k]));
        }
        CInterval den = alpha_c - roots_[j];
        if (q <= 0) {
            sum = sum + w * roots_[j].pow(-q) / den;
        } else {
            sum = sum + w / den;
        }
    }
    if (q > 0) sum = sum * alpha_c.pow(-q);
    return sum;
}

Interval GeneralPisot::tau_weight(long q) const { return tau_weight_complex(q).re; }

Interval GeneralPisot::r_value(long q) const {
    return complete_homogeneous(-q - 1, roots_).re;
}

std::string GeneralPisot::describe() const {
    std::ostringstream os;
    os << "degree-" << degree() << " Pisot, alpha in " << alpha_.to_string(12);
    return os.str();
}

CInterval complete_homogeneous(long m, const std::vector<CInterval>& xs) {
    if (xs.empty()) throw std::invalid_argument("complete_homogeneous: no points");
    mpfr_prec_t prec = xs[0].re.precision();
    const CInterval one = CInterval::from_real(Interval::from_long(1, prec));
    const CInterval zero = CInterval::from_real(Interval::from_long(0, prec));

    if (m >= 0) {
        // h_j over a growing set of variables: h_j += x * h_{j-1}.
        std::vector<CInterval> h(static_cast<size_t>(m) + 1, zero);
        h[0] = one;
        for (const auto& x : xs) {
            for (long j = 1; j <= m; ++j) h[j] = h[j] + x * h[j - 1];
        }
        return h[m];
    }

    // Negative index: partial-fraction extension.  Requires pairwise
    // distinguishable points.
    CInterval sum = zero;
    for (size_t j = 0; j < xs.size(); ++j) {
        CInterval w = one;
        for (size_t k = 0; k < xs.size(); ++k) {
            if (k == j) continue;
            CInterval diff = xs[j] - xs[k];
            if (diff.contains_zero())
                throw std::domain_error(
                    "complete_homogeneous: points not distinguishable at this precision");
            w = w * (xs[j] / diff);
        }
        sum = sum + w * xs[j].pow(m);
    }
    return sum;
}

CInterval complete_homogeneous_by_sum(long m, const std::vector<CInterval>& xs) {
    if (m < 0) throw std::invalid_argument("complete_homogeneous_by_sum: m must be >= 0");
    mpfr_prec_t prec = xs[0].re.precision();
    const CInterval one = CInterval::from_real(Interval::from_long(1, prec));
    CInterval total = CInterval::from_real(Interval::from_long(0, prec));
    // All monomials x_{i1} ... x_{im} with i1 <= ... <= im.
    std::vector<size_t> idx;
    auto rec = [&](auto&& self, size_t from, long left, CInterval acc) -> void {
        if (left == 0) {
            total = total + acc;
            return;
        }
        for (size_t i = from; i < xs.size(); ++i) self(self, i, left - 1, acc * xs[i]);
    };
    rec(rec, 0, m, one);
    return total;
}

}  // namespace geospec
