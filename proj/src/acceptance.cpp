#include "geospec/acceptance.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "geospec/beta_symmetric.hpp"
#include "geospec/dimension.hpp"
#include "geospec/interval_construction.hpp"
#include "geospec/limsup.hpp"
#include "geospec/pisot.hpp"
#include "geospec/spectrum_integer.hpp"
#include "geospec/spectrum_quadratic.hpp"
#include "geospec/surd.hpp"
#include "geospec/words.hpp"

namespace geospec {

namespace {

struct Gate {
    bool ok = true;
    std::string detail;

    void check(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
    void summary(const std::string& text) {
        if (ok) detail = text;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- integer spectrum ------------------------------------------------

Gate suite_integer_spectrum() {
    Gate g;
    auto t0 = std::chrono::steady_clock::now();
    for (long a = 2; a <= 10; ++a) {
        Rat x = make_rat(1, a);
        for (int k = 0; k <= 12; ++k) {
            EPWord word{{}, a_k_word(k)};
            if (f_eval(word, x) != e_value(k, x)) {
                g.check(false, "substitution identity failed at a=" + std::to_string(a) +
                                   " k=" + std::to_string(k));
                break;
            }
        }
    }
    double dt = seconds_since(t0);
    g.check(dt < 1.0, "identity sweep took " + std::to_string(dt) + "s, budget 1s");
    g.summary("f(A_k^inf; 1/a) = E^(k)(1/a) exactly, a=2..10, k<=12");
    return g;
}

Gate suite_integer_spectrum_limit() {
    Gate g;
    Rat pts[3] = {spectrum_point(2, 0), spectrum_point(2, 1), spectrum_point(2, 2)};
    g.check(pts[0] == make_rat(1, 3), "first point is not 1/3");
    g.check(pts[1] == make_rat(2, 5), "second point is not 2/5");
    g.check(pts[2] == make_rat(7, 17), "third point is not 7/17");

    // pad the exact enclosure out to radius exactly 1e-6
    const Rat radius = make_rat(1, 1000000);
    RatInterval tight = spectrum_limit(2, make_rat(1, 1000000000));
    Rat mid = (tight.lo + tight.hi) / 2;
    RatInterval padded{mid - radius, mid + radius};
    g.check(padded.contains(tight.lo) && padded.contains(tight.hi),
            "padding lost the exact enclosure");
    g.check(padded.contains(make_rat(4124540, 10000000)),
            "limit enclosure misses 0.4124540");
    g.check(padded.width() <= 2 * radius, "limit radius above 1e-6");
    g.summary("points 1/3, 2/5, 7/17; limit in " + rat_to_string(padded.lo) + " .. " +
              rat_to_string(padded.hi));
    return g;
}

Gate suite_integer_orbits() {
    Gate g;
    auto third = norm_sequence(RealInput::from_rat(make_rat(1, 3)), Alpha::integer(2), 1001);
    bool constant = true;
    for (const auto& v : third)
        constant = constant && v.is_exact() && *v.exact == Surd(make_rat(1, 3));
    g.check(constant, "||2^n/3|| is not constantly 1/3");
    g.check(spectrum_point(2, 0) == make_rat(1, 3), "orbit value differs from spectrum point 0");

    auto cyc = norm_sequence(RealInput::from_rat(make_rat(2, 5)), Alpha::integer(2), 100);
    bool cycle = true;
    for (size_t n = 0; n < cyc.size(); ++n)
        cycle = cycle && *cyc[n].exact == Surd(n % 2 == 0 ? make_rat(2, 5) : make_rat(1, 5));
    g.check(cycle, "||2^n 2/5|| does not cycle 2/5, 1/5");
    auto probe = limsup_estimate(RealInput::from_rat(make_rat(2, 5)), Alpha::integer(2), 1000);
    g.check(probe.best.is_exact() && *probe.best.exact == Surd(make_rat(2, 5)),
            "running max of the 2/5 orbit is not 2/5");
    g.check(spectrum_point(2, 1) == make_rat(2, 5), "orbit limsup differs from spectrum point 1");
    g.summary("xi=1/3 constant at 1/3 for n<=1000; xi=2/5 limsup exactly 2/5");
    return g;
}

// ---- quadratic spectrum ----------------------------------------------

Gate suite_quadratic_tables() {
    Gate g;
    {
        PqTable t = pq_spectrum(4, Sign::plus, 40);
        const Rat want[5] = {Rat(0), make_rat(1, 6), make_rat(1, 5), make_rat(5, 24),
                             make_rat(4, 19)};
        for (int n = 0; n <= 4; ++n)
            g.check(t.rows[static_cast<size_t>(n)].value == want[n],
                    "plus b=4 row " + std::to_string(n) + " mismatch");
        g.check(t.all_ok, "plus b=4 closed-form or convergent cross-check failed");
        QuadUnit u(4, Sign::plus);
        Surd gap_to_limit =
            (Surd(t.rows[40].value) - spectrum_threshold(u)).abs();
        g.check(gap_to_limit < Surd(make_rat(1, 1000000000000L)),
                "plus b=4 row 40 misses 1/(1+alpha) by more than 1e-12");
        g.check(t.limit == Surd(1) / (Surd(1) + u.alpha()), "plus b=4 limit is not 1/(1+alpha)");
    }
    {
        PqTable t = pq_spectrum(3, Sign::minus, 40);
        const Rat want[5] = {Rat(0), make_rat(3, 13), make_rat(1, 4), make_rat(36, 143),
                             make_rat(33, 131)};
        for (int n = 0; n <= 4; ++n)
            g.check(t.rows[static_cast<size_t>(n)].value == want[n],
                    "minus b=3 row " + std::to_string(n) + " mismatch");
        g.check(t.all_ok, "minus b=3 closed-form or convergent cross-check failed");
        QuadUnit u(3, Sign::minus);
        g.check(t.limit == Surd(3) / (Surd(1) + u.alpha() * u.alpha()),
                "minus b=3 limit is not b/(1+alpha^2)");
    }
    g.summary("plus b=4 and minus b=3 tables exact to n=40, limits in closed form");
    return g;
}

Gate suite_quadratic_witnesses() {
    Gate g;
    size_t families = 0;
    for (Sign sign : {Sign::plus, Sign::minus}) {
        for (long b = sign == Sign::plus ? 4 : 3; b <= 8; ++b) {
            PqTable t = pq_spectrum(static_cast<int>(b), sign, 8);
            for (int n = 0; n <= 8; ++n) {
                auto wits = xn_witness(static_cast<int>(b), sign, n);
                g.check(!wits.empty(), "no witness family at b=" + std::to_string(b) + " " +
                                           sign_name(sign) + " n=" + std::to_string(n));
                for (const auto& w : wits) {
                    ++families;
                    bool ok = w.value == t.rows[static_cast<size_t>(n)].value &&
                              limsup_abs(w.word).value == Surd(w.value);
                    g.check(ok, "witness shift limsup mismatch at b=" + std::to_string(b) + " " +
                                    sign_name(sign) + " n=" + std::to_string(n));
                }
            }
        }
    }
    {
        QuadUnit u(4, Sign::plus);
        auto w = xn_witness(4, Sign::plus, 1);
        g.check(w.at(0).xi == (u.alpha() - Surd(1)) / Surd(12) && w.at(0).value == make_rat(1, 6),
                "plus b=4 anchor (alpha-1)/12 -> 1/6 failed");
    }
    {
        QuadUnit u(3, Sign::minus);
        auto w = xn_witness(3, Sign::minus, 1);
        g.check(w.at(0).xi == u.alpha() / Surd(13) && w.at(0).value == make_rat(3, 13),
                "minus b=3 anchor alpha/13 -> 3/13 failed");
    }
    g.summary(std::to_string(families) + " witness families, shift limsup = p_n/q_n exactly");
    return g;
}

// ---- words -----------------------------------------------------------

bool has_palindrome_witness(const FiniteWord& w) {
    long len = static_cast<long>(w.size());
    for (long vl = 0; vl + 2 <= len; ++vl) {
        for (long i = 0; i + vl <= len; ++i) {
            bool pal = true;
            for (long j = 0; pal && j < vl / 2; ++j)
                pal = w[static_cast<size_t>(i + j)] == w[static_cast<size_t>(i + vl - 1 - j)];
            if (!pal) continue;
            FiniteWord v(w.begin() + i, w.begin() + i + vl);
            FiniteWord zero = word_concat(word_concat({0}, v), {0});
            FiniteWord one = word_concat(word_concat({1}, v), {1});
            if (is_factor_of(zero, w) && is_factor_of(one, w)) return true;
        }
    }
    return false;
}

Gate suite_word_balance() {
    Gate g;
    auto t0 = std::chrono::steady_clock::now();
    long unbalanced = 0;
    for (unsigned mask = 0; mask < (1u << 14); ++mask) {
        FiniteWord w(14);
        for (int i = 0; i < 14; ++i) w[static_cast<size_t>(i)] = (mask >> i) & 1u;
        if (is_balanced(w)) continue;
        ++unbalanced;
        if (!has_palindrome_witness(w)) {
            g.check(false, "unbalanced word " + word_to_string(w) + " has no 0v0/1v1 witness");
            break;
        }
    }

    for (int vl = 0; vl <= 8; ++vl) {
        for (unsigned mask = 0; mask < (1u << vl); ++mask) {
            FiniteWord v(static_cast<size_t>(vl));
            for (int i = 0; i < vl; ++i) v[static_cast<size_t>(i)] = (mask >> i) & 1u;
            FiniteWord member = word_concat(word_concat(word_concat({0}, v), {0, 1}),
                                            word_concat(word_reverse(v), {1}));
            if (is_balanced(member)) {
                g.check(false, "forbidden-shape word " + word_to_string(member) + " is balanced");
                break;
            }
        }
    }

    FiniteWord probe = parse_word("1010010001");
    g.check(!is_balanced(probe), "1010010001 should be unbalanced");
    g.check(mirror_scan(probe).empty(), "1010010001 should have no forbidden factor");

    double dt = seconds_since(t0);
    g.check(dt < 10.0, "word sweep took " + std::to_string(dt) + "s, budget 10s");
    g.summary(std::to_string(unbalanced) +
              " unbalanced words of length 14, all with palindrome witnesses");
    return g;
}

Gate suite_christoffel_iota() {
    Gate g;
    long pairs = 0;
    for (long q = 2; q <= 50; ++q) {
        for (long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            ++pairs;
            FiniteWord v = central_word(p, q);
            g.check(v == word_reverse(v), "central word not a palindrome at " +
                                              std::to_string(p) + "/" + std::to_string(q));
            FiniteWord lower = word_concat(word_concat({0}, v), {1});
            FiniteWord upper = word_concat(word_concat({1}, v), {0});
            g.check(lower == christoffel_lower(p, q) && upper == christoffel_upper(p, q),
                    "0v1/1v0 factorization failed at " + std::to_string(p) + "/" +
                        std::to_string(q));
            if (q <= 30) {
                IotaResult r = iota_periodic(christoffel_lower(p, q));
                bool ok = r.finite && !r.degenerate && r.value == q - 2 &&
                          r.attaining.size() == 2;
                g.check(ok, "iota(q-2, two shifts) failed at " + std::to_string(p) + "/" +
                                std::to_string(q));
            }
        }
    }
    FiniteWord tm(64);
    for (int i = 0; i < 64; ++i)
        tm[static_cast<size_t>(i)] = std::popcount(static_cast<unsigned>(i)) & 1;
    g.check(iota_window(tm) == 6, "Thue-Morse window-64 iota is not 6");
    g.summary(std::to_string(pairs) + " Christoffel slopes checked; Thue-Morse iota = 6");
    return g;
}

// ---- symmetric beta expansions ----------------------------------------

Gate suite_beta_boundary() {
    Gate g;
    std::vector<QuadUnit> units;
    for (Sign sign : {Sign::plus, Sign::minus})
        for (long b = sign == Sign::plus ? 3 : 1; b <= 12; ++b) units.emplace_back(b, sign);

    for (const QuadUnit& u : units) {
        BoundaryExpansions be = boundary_expansions(u);
        auto upper = sym_beta_encode(Surd(make_rat(1, 2)), u);
        auto lower = sym_beta_encode(Surd(make_rat(-1, 2)), u);
        g.check(be.upper.prefix(50) == upper.digits.prefix(50),
                "closed-form digits of 1/2 diverge at " + u.describe());
        g.check(be.lower.prefix(50) == lower.digits.prefix(50),
                "closed-form digits of -1/2 diverge at " + u.describe());
        g.check(sym_beta_reconstruct(upper.digits, u) == Surd(make_rat(1, 2)),
                "digits of 1/2 do not reconstruct at " + u.describe());
    }

    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long> num(-99, 99), den(2, 30), coef(-9, 9);
    Surd half(make_rat(1, 2));
    for (int i = 0; i < 100; ++i) {
        const QuadUnit& u = units[static_cast<size_t>(i) % units.size()];
        Surd x(0);
        do {
            x = Surd(make_rat(num(rng), den(rng)), make_rat(coef(rng), 30), u.discriminant());
        } while (!(x.abs() < half));
        auto enc = sym_beta_encode(x, u, 20000);
        g.check(is_admissible(enc.digits, u),
                "orbit digits inadmissible at " + u.describe() + " x=" + x.to_string());
        g.check(sym_beta_reconstruct(enc.digits, u) == x,
                "reconstruction mismatch at " + u.describe() + " x=" + x.to_string());
    }
    g.summary("boundary closed forms match 50 orbit digits for 22 units; 100 sandwiches hold");
    return g;
}

// ---- interval construction --------------------------------------------

Gate suite_interval_window() {
    Gate g;
    int cases = 0;
    for (Sign sign : {Sign::plus, Sign::minus}) {
        for (long b = sign == Sign::plus ? 4 : 3; b <= 12; ++b) {
            ++cases;
            KappaCase kc = kappa_and_keys(b, sign);
            std::string tag = kc.unit.describe();
            g.check(kc.kappa < Surd(make_rat(1, 2)), "kappa not below 1/2 at " + tag);
            bool crude_fails = sign == Sign::minus && (b == 3 || b == 5);
            g.check(kc.sides.holds == !crude_fails,
                    "designated bound truth value unexpected at " + tag);
            std::vector<Surd> grid = eta_grid(kc, 11);
            g.check(grid.size() == 11, "grid size off at " + tag);
            for (const Surd& eta : grid) {
                BuiltWord built = build_biword(eta, kc);  // throws if g != eta or sup != eta
                g.check(built.sup.value == eta, "shift supremum differs from eta at " + tag);
            }
            // explicit finite window at the left endpoint, over and above the
            // all-shift supremum already checked for every grid point
            BuiltWord left = build_biword(grid.front(), kc);
            bool window_ok = true;
            for (long k = -200; k <= 200 && window_ok; ++k)
                window_ok = !(grid.front() < g_eval(left.word, k).abs());
            g.check(window_ok, "a shift within |k|<=200 exceeds eta at " + tag);
        }
    }
    g.summary(std::to_string(cases) + " cases, 11 grid points each: g = eta and all shifts <= eta");
    return g;
}

// ---- general Pisot ------------------------------------------------------

Gate suite_pisot_reconstruction() {
    Gate g;
    GeneralPisot plastic = GeneralPisot::from_coeffs({Int(-1), Int(-1), Int(0), Int(1)});
    for (long m = -2; m <= -1; ++m) {
        Interval h = complete_homogeneous(m, plastic.roots()).abs_sq();
        g.check(h.hi_double() < 1e-18, "h_" + std::to_string(m) + " not below 1e-9");
    }
    for (long q = -10; q <= 0; ++q) {
        Interval r = plastic.r_value(q);
        double mid = r.mid_double();
        g.check(std::fabs(mid - std::round(mid)) + r.rad_double() < 1e-9,
                "R_" + std::to_string(q) + " not within 1e-9 of an integer");
    }
    g.check(plastic.r_value(-1).contains(Rat(1)), "R_{-1} is not 1");

    std::mt19937 rng(424242);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 64);
    int orbits = 0;
    for (int trial = 0; trial < 20; ++trial) {
        Rat xi = make_rat(num(rng), den(rng));
        auto checks = reconstruction_check(plastic, xi, 12);
        ++orbits;
        for (const auto& c : checks)
            g.check(c.consistent, "tau reconstruction outside certified radius at xi=" +
                                      rat_to_string(xi) + " n=" + std::to_string(c.n));
    }
    g.summary("plastic number: Euler identity, integer R_q, " + std::to_string(orbits) +
              " certified digit reconstructions");
    return g;
}

// ---- dimension bounds ---------------------------------------------------

Gate suite_dimension_bounds() {
    Gate g;
    for (long a = 2; a <= 10; ++a) {
        for (int k = 2; k <= 9; ++k) {
            Rat t = make_rat(k, 20);  // 0.10 .. 0.45
            long level = dimension_level_threshold(a, t);
            Rat scaled = t;
            Int power(1);
            for (long i = 0; i < level; ++i) {
                scaled *= a;
                power *= a;
            }
            g.check(2 * rat_ceil(scaled) < power,
                    "threshold level bound not below one at a=" + std::to_string(a) +
                        " t=" + rat_to_string(t));
        }
    }
    Surd quarter(make_rat(1, 4));
    for (Sign sign : {Sign::plus, Sign::minus})
        for (long b = sign == Sign::plus ? 3 : 1; b <= 12; ++b)
            g.check(quadratic_zero_threshold(b, sign) < quarter,
                    std::string("t0 not below 1/4 at b=") + std::to_string(b) + " " +
                        sign_name(sign));
    g.summary("integer bound < 1 on the 9x8 grid at threshold levels; all t0 < 1/4");
    return g;
}

struct SuiteEntry {
    const char* name;
    Gate (*run)();
};

// alphabetical; this is the fixed execution and output order
const SuiteEntry kSuites[] = {
    {"beta-boundary", suite_beta_boundary},
    {"christoffel-iota", suite_christoffel_iota},
    {"dimension-bounds", suite_dimension_bounds},
    {"integer-orbits", suite_integer_orbits},
    {"integer-spectrum", suite_integer_spectrum},
    {"integer-spectrum-limit", suite_integer_spectrum_limit},
    {"interval-window", suite_interval_window},
    {"pisot-reconstruction", suite_pisot_reconstruction},
    {"quadratic-tables", suite_quadratic_tables},
    {"quadratic-witnesses", suite_quadratic_witnesses},
    {"word-balance", suite_word_balance},
};

}  // namespace

std::vector<std::string> acceptance_names() {
    std::vector<std::string> names;
    for (const auto& s : kSuites) names.emplace_back(s.name);
    return names;
}

CriterionResult run_acceptance(const std::string& name) {
    for (const auto& s : kSuites) {
        if (name != s.name) continue;
        CriterionResult r;
        r.name = name;
        auto t0 = std::chrono::steady_clock::now();
        try {
            Gate g = s.run();
            r.passed = g.ok;
            r.detail = g.detail;
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = seconds_since(t0);
        return r;
    }
    throw std::invalid_argument("unknown acceptance suite '" + name + "'");
}

std::vector<CriterionResult> run_all_acceptance() {
    std::vector<CriterionResult> out;
    for (const auto& s : kSuites) out.push_back(run_acceptance(s.name));
    return out;
}

}  // namespace geospec
