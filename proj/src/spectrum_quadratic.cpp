#include "geospec/spectrum_quadratic.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

#include "geospec/cf.hpp"

namespace geospec {

namespace {

long lword(const FiniteWord& w) { return static_cast<long>(w.size()); }

bool unit_digits(const BiEPWord& w) {
    auto ok = [](const FiniteWord& part) {
        return std::all_of(part.begin(), part.end(), [](Letter d) { return -1 <= d && d <= 1; });
    };
    return ok(w.left_period) && ok(w.core) && ok(w.right_period);
}

void require_theorem_range(const char* who, int b, Sign sign) {
    if (sign == Sign::plus && b < 4)
        throw std::invalid_argument(std::string(who) + ": plus case needs b >= 4");
    if (sign == Sign::minus && b < 3)
        throw std::invalid_argument(std::string(who) + ": minus case needs b >= 3");
}

// Max of |g| over one period of shifts of the two-sided periodisation.
Surd periodic_abs_max(const QuadUnit& unit, const FiniteWord& period, int* count = nullptr) {
    const BiSignedWord t{unit, biep_periodic(period)};
    Surd best(0);
    int hits = 0;
    for (long k = 0; k < lword(period); ++k) {
        const Surd val = g_eval(t, k).abs();
        const int c = compare(val, best);
        if (k == 0 || c > 0) {
            best = val;
            hits = 1;
        } else if (c == 0) {
            ++hits;
        }
    }
    if (count != nullptr) *count = hits;
    return best;
}

// Class step on the right tail: alpha2^step must be positive so that the
// values along one residue class move monotonically toward the tail value.
long right_step(const QuadUnit& unit, long period_len) {
    const bool negative_ratio = unit.kind() == Sign::minus && period_len % 2 != 0;
    return negative_ratio ? 2 * period_len : period_len;
}

FiniteWord interleave_zeros(const FiniteWord& w) {
    FiniteWord out;
    out.reserve(w.size() * 2);
    for (Letter c : w) {
        out.push_back(c);
        out.push_back(0);
    }
    return out;
}

// Witness word for spectrum level n: digits 1 -1 followed by the periodic
// tail (gamma(v) 0 1 -1)^inf, v the central word of slope p/q.  Minus-case
// words put zeros at every odd position.
BiEPWord witness_shape(Sign sign, int n, long p, long q) {
    FiniteWord core;
    FiniteWord right{0};
    if (n == 0) {
        core = {1};
    } else if (n == 1) {
        right = {1, -1};
    } else {
        core = {1, -1};
        right = gamma_encode(central_word(p, q));
        right.push_back(0);
        right.push_back(1);
        right.push_back(-1);
    }
    if (sign == Sign::minus) {
        core = interleave_zeros(core);
        right = interleave_zeros(right);
    }
    return BiEPWord{{0}, core, right, 0};
}

}  // namespace

void BiSignedWord::validate() const {
    if (word.left_period.empty() || word.right_period.empty())
        throw std::invalid_argument("BiSignedWord: tail periods must be nonempty");
    const long bound = digit_bound();
    auto ok = [bound](const FiniteWord& part) {
        return std::all_of(part.begin(), part.end(),
                           [bound](Letter d) { return -bound <= d && d <= bound; });
    };
    if (!ok(word.left_period) || !ok(word.core) || !ok(word.right_period))
        throw std::invalid_argument("BiSignedWord: digit out of range");
}

Surd g_eval(const BiSignedWord& w, long k) {
    w.validate();
    const BiEPWord v = w.word.shifted(k);
    const Surd alpha2 = w.unit.alpha2();
    const Surd ainv = w.unit.alpha().inverse();
    const long lo = std::min(v.core_start, 0L);
    const long hi = std::max(v.core_start + lword(v.core) - 1, 0L);

    Surd acc(0);
    for (long m = lo; m <= 0; ++m)
        if (v.at(m) != 0) acc += Surd(static_cast<long>(v.at(m))) * alpha2.pow(-m);
    for (long m = 1; m <= hi; ++m)
        if (v.at(m) != 0) acc += Surd(static_cast<long>(v.at(m))) * ainv.pow(m);

    const long left_len = lword(v.left_period);
    Surd lsum(0);
    for (long i = 1; i <= left_len; ++i)
        if (v.at(lo - i) != 0) lsum += Surd(static_cast<long>(v.at(lo - i))) * alpha2.pow(i);
    if (!lsum.is_zero()) acc += alpha2.pow(-lo) * lsum / (Surd(1) - alpha2.pow(left_len));

    const long right_len = lword(v.right_period);
    Surd rsum(0);
    for (long i = 1; i <= right_len; ++i)
        if (v.at(hi + i) != 0) rsum += Surd(static_cast<long>(v.at(hi + i))) * ainv.pow(i);
    if (!rsum.is_zero()) acc += ainv.pow(hi) * rsum / (Surd(1) - ainv.pow(right_len));

    return acc / w.unit.root_gap();
}

Surd spectrum_threshold(const QuadUnit& u) {
    const Surd alpha = u.alpha();
    if (u.kind() == Sign::plus) return (Surd(1) + alpha).inverse();
    return Surd(u.b()) / (Surd(1) + alpha * alpha);
}

BiSignedWord threshold_word(const QuadUnit& u) {
    FiniteWord core;
    if (u.kind() == Sign::plus)
        core = {1, -1};
    else
        core = {1, 0, -1};
    return BiSignedWord{u, BiEPWord{{0}, core, {0}, 0}};
}

long psi_value(const BiSignedWord& w, long n) {
    if (n < 0) throw std::invalid_argument("psi_value: index must be >= 0");
    if (n == 0) return w.word.at(0);
    long back = w.word.at(-n);
    if (w.unit.kind() == Sign::minus && n % 2 != 0) back = -back;
    return w.word.at(n) + back;
}

bool dominates(const BiSignedWord& y, const BiSignedWord& y2, long window) {
    if (y.unit.b() != y2.unit.b() || y.unit.kind() != y2.unit.kind())
        throw std::invalid_argument("dominates: words use different units");
    require_theorem_range("dominates", static_cast<int>(y.unit.b()), y.unit.kind());
    if (!unit_digits(y.word) || !unit_digits(y2.word))
        throw std::invalid_argument("dominates: digits must lie in {-1,0,1}");
    y.validate();
    y2.validate();

    // Beyond both cores the psi difference is periodic, so scanning one full
    // period past the stabilisation point decides every index.
    auto reach = [](const BiEPWord& w) {
        return std::max(-std::min(w.core_start, 0L), std::max(w.core_start + lword(w.core), 0L));
    };
    long per = std::lcm(std::lcm(lword(y.word.left_period), lword(y.word.right_period)),
                        std::lcm(lword(y2.word.left_period), lword(y2.word.right_period)));
    if (y.unit.kind() == Sign::minus) per = std::lcm(per, 2L);
    const long scan = std::max(window, reach(y.word) + reach(y2.word) + 2 * per + 4);

    long l = -1;
    for (long m = 0; m <= scan; ++m) {
        const long d = psi_value(y, m) - psi_value(y2, m);
        if (d != 0) {
            if (d < 0) return false;
            l = m;
            break;
        }
    }
    if (l < 0) return false;
    for (long m = l; m <= scan; ++m) {
        const long d = psi_value(y, m) - psi_value(y2, m);
        if (d < -2 || d > 2) return false;
    }
    if (!(g_eval(y) > g_eval(y2)))
        throw std::logic_error("dominates: comparator not reflected by the exact values");
    return true;
}

ShiftSup shift_sup_abs(const BiSignedWord& w) {
    w.validate();
    const BiEPWord& v = w.word;
    const long left_len = lword(v.left_period);
    const long right_len = lword(v.right_period);
    const long k_right = std::max(v.core_start + lword(v.core) - 1, 0L);
    const long k_left = std::min(v.core_start - 1, 0L);
    const long step = right_step(w.unit, right_len);

    // Core zone plus the first shift of every residue class on both sides;
    // past those anchors each class runs monotonically to its tail value.
    ShiftSup sup{Surd(0), {}, true};
    bool first = true;
    for (long k = k_left - left_len; k <= k_right + step; ++k) {
        const Surd val = g_eval(w, k).abs();
        const int c = first ? 1 : compare(val, sup.value);
        first = false;
        if (c > 0) {
            sup.value = val;
            sup.attaining.assign(1, k);
        } else if (c == 0) {
            sup.attaining.push_back(k);
        }
    }
    const Surd tail = std::max(periodic_abs_max(w.unit, v.right_period),
                               periodic_abs_max(w.unit, v.left_period));
    if (tail > sup.value) {
        sup.value = tail;
        sup.attaining.clear();
        sup.attained = false;
    }
    return sup;
}

LimsupAbs limsup_abs(const BiSignedWord& w) {
    w.validate();
    LimsupAbs out;
    out.value = periodic_abs_max(w.unit, w.word.right_period, &out.attaining);
    return out;
}

Surd xi_from_word(const BiSignedWord& w) {
    w.validate();
    for (Letter d : w.word.left_period)
        if (d != 0) throw std::invalid_argument("xi_from_word: left tail must vanish");
    for (long m = w.word.core_start; m < 0; ++m)
        if (w.word.at(m) != 0) throw std::invalid_argument("xi_from_word: support must start at 0");
    return g_eval(w, 0);
}

FiniteWord gamma_encode(const FiniteWord& x, bool tilde) {
    FiniteWord out;
    out.reserve(x.size() * 2);
    for (Letter c : x) {
        if (c == 0) {
            out.push_back(0);
        } else if (c == 1) {
            out.push_back(tilde ? -1 : 1);
            out.push_back(tilde ? 1 : -1);
        } else {
            throw std::invalid_argument("gamma_encode: input must be over {0,1}");
        }
    }
    return out;
}

FiniteWord gamma_decode(const FiniteWord& w, bool tilde) {
    FiniteWord out;
    const Letter lead = tilde ? -1 : 1;
    for (size_t i = 0; i < w.size();) {
        if (w[i] == 0) {
            out.push_back(0);
            ++i;
        } else if (w[i] == lead && i + 1 < w.size() && w[i + 1] == -lead) {
            out.push_back(1);
            i += 2;
        } else {
            throw std::invalid_argument("gamma_decode: word is not an image");
        }
    }
    return out;
}

PqTable pq_spectrum(int b, Sign sign, int n_max) {
    require_theorem_range("pq_spectrum", b, sign);
    if (n_max < 0) throw std::invalid_argument("pq_spectrum: n_max must be >= 0");

    const QuadUnit unit(b, sign);
    PqTable table{unit, {}, spectrum_threshold(unit), true};

    // Even-index entries by the three-term recurrence; odd entries are sums
    // of their even neighbours.
    const Int t = sign == Sign::plus ? Int(b) : Int(b) * b + 2;
    std::vector<std::pair<Int, Int>> even{{Int(0), Int(1)}};
    if (sign == Sign::plus)
        even.emplace_back(Int(1), Int(b + 1));
    else
        even.emplace_back(Int(b), Int(b) * b + 3);
    const size_t half = static_cast<size_t>(n_max) / 2 + 2;
    while (even.size() <= half)
        even.emplace_back(t * even[even.size() - 1].first - even[even.size() - 2].first,
                          t * even[even.size() - 1].second - even[even.size() - 2].second);

    // The even entries are the negative-CF convergents of the limit; the
    // minus case reads them through the plus unit of b^2 + 2.
    const QuadUnit hat =
        sign == Sign::plus ? unit : QuadUnit(static_cast<long>(b) * b + 2, Sign::plus);
    const Surd hat_alpha = hat.alpha();
    const std::vector<Int> digits =
        negative_cf_prefix((Surd(1) + hat_alpha).inverse(), half);
    const std::vector<Rat> conv = negative_cf_convergents(digits);

    Rat prev(0);
    for (int n = 0; n <= n_max; ++n) {
        const size_t m = static_cast<size_t>(n) / 2;
        Int p = even[m].first;
        Int q = even[m].second;
        if (n % 2 != 0) {
            p += even[m + 1].first;
            q += even[m + 1].second;
        }
        PqRow row{n, p, q, make_rat(p, q), false, false,
                  BiSignedWord{unit, witness_shape(sign, n, 1, n)}};
        if (n == 0) {
            row.z_ok = row.value == 0;
            row.cf_ok = true;
        } else {
            // 1/z - 1 = (alpha^{n+2} - 1) / (alpha^{n+1} - alpha) is fixed by
            // the Galois involution, hence rational.
            const Surd ratio =
                (hat_alpha.pow(n + 2) - Surd(1)) / (hat_alpha.pow(n + 1) - hat_alpha);
            if (ratio.is_rational()) {
                Rat z = Rat(1) / (Rat(1) + ratio.as_rational());
                if (sign == Sign::minus) z *= b;
                row.z_ok = z == row.value;
            }
            if (n % 2 == 0) {
                const Rat& c = conv[m - 1];
                if (sign == Sign::plus)
                    row.cf_ok = c == row.value;
                else
                    row.cf_ok = Int(b) * c.get_num() == p && c.get_den() == q;
            } else {
                row.cf_ok = true;  // no convergent attached to odd indices
            }
        }
        table.all_ok = table.all_ok && row.z_ok && row.cf_ok &&
                       (n == 0 ? row.value == 0 : row.value > prev) &&
                       Surd(row.value) < table.limit;
        prev = row.value;
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::vector<XnWitness> xn_witness(int b, Sign sign, int n) {
    if (n < 0) throw std::invalid_argument("xn_witness: n must be >= 0");
    const PqTable table = pq_spectrum(b, sign, n);
    const Rat value = table.rows.back().value;

    std::vector<XnWitness> out;
    auto push = [&](long p, long q) {
        BiSignedWord w{table.unit, witness_shape(sign, n, p, q)};
        Surd xi = xi_from_word(w);
        out.push_back(XnWitness{n, p, q, std::move(xi), std::move(w), value});
    };
    if (n <= 1) {
        push(0, 0);
    } else {
        for (long p = 1; 2 * p < n + 1; ++p)
            if (std::gcd(p, n + 1 - p) == 1) push(p, n + 1 - p);
    }
    return out;
}

SSequence s_sequence(const QuadUnit& unit, const Surd& xi, long from, long to) {
    if (from > to) throw std::invalid_argument("s_sequence: empty range");
    const Surd alpha = unit.alpha();
    if (!xi.is_rational() && xi.radicand() != alpha.radicand())
        throw std::invalid_argument("s_sequence: xi lies outside the field of alpha");

    std::vector<Int> u;
    std::vector<Surd> eps;
    Surd power = xi * alpha.pow(from - 1);
    for (long m = from - 1; m <= to + 1; ++m) {
        NearestSurd near = nearest_integer(power);
        u.push_back(std::move(near.unit));
        eps.push_back(std::move(near.eps));
        power *= alpha;
    }

    SSequence out;
    out.from = from;
    const long bound = (unit.b() + 2) / 2;
    for (size_t i = 1; i + 1 < u.size(); ++i) {
        Int s = u[i + 1] - Int(unit.b()) * u[i];
        if (unit.unit_norm() > 0)
            s += u[i - 1];
        else
            s -= u[i - 1];
        if (s > bound || s < -bound) throw std::logic_error("s_sequence: digit escaped its bound");
        out.s.push_back(static_cast<Letter>(s.get_si()));
        out.u.push_back(u[i]);
        out.eps.push_back(eps[i]);
    }
    return out;
}

namespace {

std::vector<FiniteWord> forbidden_patterns(Sign sign, int k_max) {
    std::vector<FiniteWord> pats;
    std::set<FiniteWord> seen;
    auto add = [&](const FiniteWord& v) {
        if (seen.insert(v).second) pats.push_back(v);
        const FiniteWord neg = word_negate(v);
        if (seen.insert(neg).second) pats.push_back(neg);
    };
    if (sign == Sign::plus) {
        add({0, 1, 0});
        add({1, 1});
        for (int k = 0; k <= k_max; ++k) {
            FiniteWord gap{1};
            gap.insert(gap.end(), static_cast<size_t>(k), 0);
            gap.push_back(1);
            add(gap);  // 1 0^k 1
            FiniteWord run{0};
            for (int i = 0; i < k; ++i) {
                run.push_back(1);
                run.push_back(-1);
            }
            run.push_back(1);
            run.push_back(0);
            add(run);  // 0 (1 -1)^k 1 0
        }
    } else {
        add({-1, 1, 1});
        add({0, 1, 1});
        add({-1, 1, 0});
        add({1, 1});
        add({1, -1});
        add({1, 0, 1});
        add({0, 0, 1, 0, 0});
        add({1, 0, 0, 1});
        add({1, 0, 0, -1});
        for (int k = 0; k <= k_max; ++k) {
            FiniteWord gap{1};
            gap.insert(gap.end(), static_cast<size_t>(k), 0);
            gap.push_back(1);
            add(gap);  // 1 0^k 1
            if (k % 2 == 0) {
                FiniteWord mixed{-1};
                mixed.insert(mixed.end(), static_cast<size_t>(k), 0);
                mixed.push_back(1);
                add(mixed);  // -1 0^{2l} 1
            }
        }
        for (int k = 0; 2 * k <= k_max; ++k) {
            FiniteWord w{0};
            for (int i = 0; i < k; ++i) {
                w.push_back(0);
                w.push_back(1);
                w.push_back(0);
                w.push_back(-1);
            }
            w.insert(w.end(), {0, 1, 0, 0});
            add(w);  // 0 (0 1 0 -1)^k 0 1 0 0
        }
    }
    return pats;
}

// A shift whose |g| strictly exceeds the threshold; only called when the
// supremum is known to exceed it, so the walk toward the responsible tail
// terminates.
long witness_shift(const BiSignedWord& w, const Surd& thr) {
    const BiEPWord& v = w.word;
    const long left_len = lword(v.left_period);
    const long right_len = lword(v.right_period);
    const long k_right = std::max(v.core_start + lword(v.core) - 1, 0L);
    const long k_left = std::min(v.core_start - 1, 0L);
    const long step = right_step(w.unit, right_len);
    for (long k = k_left - left_len; k <= k_right + step; ++k)
        if (g_eval(w, k).abs() > thr) return k;
    if (periodic_abs_max(w.unit, v.right_period) > thr)
        for (long k = k_right + step + 1; k <= k_right + 400 * right_len; ++k)
            if (g_eval(w, k).abs() > thr) return k;
    if (periodic_abs_max(w.unit, v.left_period) > thr)
        for (long k = k_left - left_len - 1; k >= k_left - 400 * left_len; --k)
            if (g_eval(w, k).abs() > thr) return k;
    throw std::logic_error("witness_shift: no shift found below the walk bound");
}

}  // namespace

ForbiddenReport forbidden_set_verify(int b, Sign sign, int k_max, int random_contexts,
                                     unsigned seed) {
    require_theorem_range("forbidden_set_verify", b, sign);
    const QuadUnit unit(b, sign);
    ForbiddenReport report{unit, spectrum_threshold(unit), {}, 0, true};
    const BiSignedWord ref = threshold_word(unit);
    std::mt19937 gen(seed);
    auto rnd_digit = [&gen]() { return static_cast<Letter>(gen() % 3) - 1; };

    for (const FiniteWord& pat : forbidden_patterns(sign, k_max)) {
        for (int ctx = 0; ctx <= random_contexts; ++ctx) {
            // The pattern always occupies positions 0 .. |pat|-1.
            BiEPWord word{{0}, pat, {0}, 0};
            std::string label = "zero";
            if (ctx > 0) {
                FiniteWord lp(1 + gen() % 3);
                FiniteWord rp(1 + gen() % 3);
                for (Letter& d : lp) d = rnd_digit();
                for (Letter& d : rp) d = rnd_digit();
                const long pre = static_cast<long>(gen() % 3);
                const long post = static_cast<long>(gen() % 3);
                FiniteWord core;
                for (long i = 0; i < pre; ++i) core.push_back(rnd_digit());
                core.insert(core.end(), pat.begin(), pat.end());
                for (long i = 0; i < post; ++i) core.push_back(rnd_digit());
                word = BiEPWord{std::move(lp), std::move(core), std::move(rp), -pre};
                label = "random#" + std::to_string(ctx);
            }
            const BiSignedWord w{unit, word};
            ForbiddenInstance inst{pat, label, false, 0, false};
            if (shift_sup_abs(w).value > report.threshold) {
                inst.exceeded = true;
                inst.shift = witness_shift(w, report.threshold);
            } else {
                ++report.inconclusive;
                if (ctx == 0) report.zero_context_ok = false;
            }
            for (long k = 0; k < lword(pat) && !inst.dominance; ++k)
                inst.dominance = dominates(BiSignedWord{unit, word.shifted(k)}, ref);
            report.instances.push_back(std::move(inst));
        }
    }
    return report;
}

}  // namespace geospec
