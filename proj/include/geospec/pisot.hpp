#pragma once

// Pisot numbers of arbitrary degree, carried numerically but with certified
// root enclosures: each root lives in a rigorously verified disc, the discs
// are pairwise disjoint, and the dominant root is proven real and > 1 while
// every conjugate is proven strictly inside the unit circle.

#include "geospec/interval.hpp"
#include "geospec/rational.hpp"

#include <vector>

namespace geospec {

class GeneralPisot {
  public:
    // coeffs = c_0, c_1, ..., c_d with c_d = 1 (monic).  Throws if the
    // polynomial cannot be certified Pisot at any precision up to the cap.
    static GeneralPisot from_coeffs(std::vector<Int> coeffs, mpfr_prec_t prec = 128);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Int>& coefficients() const { return coeffs_; }
    mpfr_prec_t precision() const { return prec_; }

    // Enclosure of the dominant real root.
    const Interval& alpha() const { return alpha_; }
    // All roots; index 0 is the dominant one.
    const std::vector<CInterval>& roots() const { return roots_; }

    // Recomputes the enclosures at the given (higher) precision.
    void refine(mpfr_prec_t prec);

    // Partial-fraction weight of the digit at offset q in the expansion of
    // the fractional error: 0-offset and past digits weigh in through the
    // conjugates, future digits through powers of 1/alpha.  Degree-1 inputs
    // degenerate to 0 (q < 0) and a^{-q-1} (q >= 0), matching the orbit
    // identity eps(xi a^n) = sum_{q>=0} s_{n+q} a^{-q-1}.
    Interval tau_weight(long q) const;
    CInterval tau_weight_complex(long q) const;

    // Complete homogeneous symmetric value h_{-q-1} over all d roots.
    // Vanishes for q = 0..d-2 and is a rational integer for q <= 0.
    Interval r_value(long q) const;

    std::string describe() const;

  private:
    GeneralPisot() = default;
    void certify(mpfr_prec_t prec);

    std::vector<Int> coeffs_;
    mpfr_prec_t prec_ = 0;
    Interval alpha_;
    std::vector<CInterval> roots_;
};

// Complete homogeneous symmetric polynomial h_m evaluated at xs, extended to
// negative m by partial fractions: h_m = sum_j (prod_{k != j} x_j/(x_j-x_k)) x_j^m.
// Negative m (and the partial-fraction route generally) requires the points
// to be pairwise distinguishable by their enclosures.
CInterval complete_homogeneous(long m, const std::vector<CInterval>& xs);

// Same value through the defining monomial sum; m >= 0 only.  Used as the
// independent route for cross-checks.
CInterval complete_homogeneous_by_sum(long m, const std::vector<CInterval>& xs);

// Exact rational Horner evaluation of an integer-coefficient polynomial.
Rat poly_eval_rat(const std::vector<Int>& coeffs, const Rat& x);

}  // namespace geospec
