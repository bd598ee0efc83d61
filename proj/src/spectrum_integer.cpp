#include "geospec/spectrum_integer.hpp"

#include <numeric>
#include <stdexcept>

namespace geospec {

long SignedDigitWord::digit_bound() const { return (base + 1) / 2; }

void SignedDigitWord::validate() const {
    if (base < 2) throw std::invalid_argument("SignedDigitWord: base must be >= 2");
    if (digits.period.empty()) throw std::invalid_argument("SignedDigitWord: empty period");
    long bound = digit_bound();
    auto check = [&](const FiniteWord& part) {
        for (Letter d : part)
            if (d > bound || d < -bound)
                throw std::invalid_argument("SignedDigitWord: digit exceeds bound");
    };
    check(digits.preperiod);
    check(digits.period);
}

Rat eval_signed_base(const SignedDigitWord& s, size_t shift) {
    s.validate();
    EPWord w = shift ? s.digits.shifted(shift) : s.digits;
    Rat inv = make_rat(1, s.base);
    // Head covers the preperiod, then one period closes under the geometric
    // factor a^{-L}.
    Rat head = 0, x = inv;
    for (Letter d : w.preperiod) {
        head += Rat(d) * x;
        x *= inv;
    }
    Rat tail = 0;
    Rat y = x;
    for (Letter d : w.period) {
        tail += Rat(d) * y;
        y *= inv;
    }
    Rat ratio = pow_rat(inv, static_cast<long>(w.period.size()));
    return head + tail / (Rat(1) - ratio);
}

FiniteWord a_k_word(int k) {
    if (k < 0) throw std::invalid_argument("a_k_word: k must be >= 0");
    FiniteWord w = {1};
    for (int step = 0; step < k; ++step) {
        FiniteWord next;
        next.reserve(2 * w.size());
        for (Letter c : w) {
            if (c == 1) {
                next.push_back(2);
            } else {
                next.push_back(2);
                next.push_back(1);
                next.push_back(1);
            }
        }
        w = std::move(next);
    }
    if (w.size() % 2 == 0) throw std::logic_error("a_k_word: even length");
    long sum = std::accumulate(w.begin(), w.end(), 0L);
    if (sum != (1L << k)) throw std::logic_error("a_k_word: digit sum mismatch");
    return w;
}

FiniteWord fixed_point_prefix(size_t len) {
    int k = 0;
    FiniteWord w = a_k_word(0);
    while (w.size() < len) w = a_k_word(++k);
    w.resize(len);
    return w;
}

namespace {

void check_two_letter(const EPWord& y) {
    auto check = [](const FiniteWord& part) {
        for (Letter c : part)
            if (c != 1 && c != 2) throw std::invalid_argument("word must be over {1,2}");
    };
    check(y.preperiod);
    check(y.period);
    if (y.period.empty()) throw std::invalid_argument("word must have a nonempty period");
}

}  // namespace

Rat f_eval(const EPWord& y, const Rat& X) {
    check_two_letter(y);
    if (rat_abs(X) >= 1) throw std::invalid_argument("f_eval: need |X| < 1");
    size_t p = y.preperiod.size();
    size_t L = y.period.size();
    // Terms t_i = (-1)^i X^{S_i}; beyond the preperiod, t_{i+L} = eps X^D t_i.
    Rat head = 0;
    Rat term = 1;  // i = 0, empty sum
    int sign = 1;
    for (size_t i = 0; i < p; ++i) {
        head += Rat(sign) * term;
        term *= pow_rat(X, y.at(i));
        sign = -sign;
    }
    Rat block = 0;
    for (size_t i = p; i < p + L; ++i) {
        block += Rat(sign) * term;
        term *= pow_rat(X, y.at(i));
        sign = -sign;
    }
    Rat eps = (L % 2 == 0) ? 1 : -1;
    long d = 0;
    for (Letter c : y.period) d += c;
    return head + block / (Rat(1) - eps * pow_rat(X, d));
}

Rat e_value(int k, const Rat& X) {
    if (k < 0) throw std::invalid_argument("e_value: k must be >= 0");
    Rat xpow = pow_rat(X, 1L << k);
    Rat prod = 1;
    for (int m = 0; m < k; ++m) prod *= Rat(1) - pow_rat(X, 1L << m);
    Rat num = Rat(1) + xpow - (Rat(1) - X) * prod;
    return num / (Rat(2) * X * (Rat(1) + xpow));
}

Rat spectrum_point(long a, int k) {
    if (a < 2) throw std::invalid_argument("spectrum_point: base must be >= 2");
    Rat X = make_rat(1, a);
    return X * e_value(k, X);
}

RatInterval spectrum_limit(long a, const Rat& tol) {
    if (a < 2) throw std::invalid_argument("spectrum_limit: base must be >= 2");
    if (tol <= 0) throw std::invalid_argument("spectrum_limit: tol must be positive");
    Rat X = make_rat(1, a);
    // Partial product through m = N; the omitted factors lie in
    // (1 - 2 X^{2^{N+1}}, 1) since X <= 1/2.
    Rat prod = Rat(1) - X;  // m = 0
    long exp_next = 2;
    while (true) {
        Rat slack = Rat(2) * pow_rat(X, exp_next);
        Rat lo_prod = prod * (Rat(1) - slack);
        // limit point = (1 - (1-X) P_inf) / 2, decreasing in P_inf
        RatInterval enc;
        enc.lo = (Rat(1) - (Rat(1) - X) * prod) / 2;
        enc.hi = (Rat(1) - (Rat(1) - X) * lo_prod) / 2;
        if (enc.width() <= tol) return enc;
        prod *= Rat(1) - pow_rat(X, exp_next);
        exp_next *= 2;
    }
}

int alt_compare(const EPWord& y, const EPWord& y2) {
    if (y.period.empty() || y2.period.empty())
        throw std::invalid_argument("alt_compare: empty period");
    size_t la = y.period.size(), lb = y2.period.size();
    size_t bound = y.preperiod.size() + y2.preperiod.size() + std::lcm(la, lb);
    for (size_t h = 1; h <= bound; ++h) {
        Letter a = y.at(h - 1), b = y2.at(h - 1);
        if (a == b) continue;
        int diff = (a > b) ? 1 : -1;
        return (h % 2 == 1) ? diff : -diff;
    }
    return 0;
}

int alt_compare_window(const FiniteWord& u, const FiniteWord& v) {
    size_t n = std::min(u.size(), v.size());
    for (size_t h = 1; h <= n; ++h) {
        if (u[h - 1] == v[h - 1]) continue;
        int diff = (u[h - 1] > v[h - 1]) ? 1 : -1;
        return (h % 2 == 1) ? diff : -diff;
    }
    return 0;
}

EPWord alt_limsup_shift(const EPWord& y) {
    EPWord c = y.canonical();
    if (c.period.empty()) throw std::invalid_argument("alt_limsup_shift: empty period");
    size_t L = c.period.size();
    EPWord best{{}, c.period};
    for (size_t r = 1; r < L; ++r) {
        FiniteWord rot(c.period.begin() + r, c.period.end());
        rot.insert(rot.end(), c.period.begin(), c.period.begin() + r);
        EPWord cand{{}, rot};
        if (alt_compare(cand, best) > 0) best = cand;
    }
    return best;
}

SignedDigitWord signed_witness(const EPWord& y, long a) {
    check_two_letter(y);
    EPWord w = y.canonical();
    size_t p = w.preperiod.size();
    size_t L = w.period.size();
    long d = 0;
    for (Letter c : w.period) d += c;

    // Nonzero digit (-1)^i at position S_i + 1 (1-based), S_i = y_1+...+y_i.
    long pos = 1;  // S_0 + 1
    int sign = 1;
    FiniteWord pre;
    for (size_t i = 0; i < p; ++i) {
        while (static_cast<long>(pre.size()) < pos - 1) pre.push_back(0);
        pre.push_back(sign);
        pos += w.at(i);
        sign = -sign;
    }
    // One period of positions spans d slots starting at pos.
    FiniteWord block(static_cast<size_t>(d), 0);
    long base_pos = pos;
    for (size_t i = p; i < p + L; ++i) {
        block[static_cast<size_t>(pos - base_pos)] = sign;
        pos += w.at(i);
        sign = -sign;
    }
    while (static_cast<long>(pre.size()) < base_pos - 1) pre.push_back(0);
    FiniteWord period = block;
    if (L % 2 == 1) {
        // Odd period flips the sign each pass; store two passes.
        for (Letter c : block) period.push_back(-c);
    }
    SignedDigitWord out;
    out.base = a;
    out.digits = EPWord{pre, period};
    out.validate();
    return out;
}

SpectrumTable enumerate_spectrum(long a, int k_max, const Rat& limit_tol) {
    SpectrumTable table;
    table.base = a;
    Rat X = make_rat(1, a);
    bool ok = true;
    Rat prev = -1;
    for (int k = 0; k <= k_max; ++k) {
        SpectrumRow row;
        row.k = k;
        row.word = a_k_word(k);
        row.point = spectrum_point(a, k);
        row.identity_ok = f_eval(EPWord{{}, row.word}, X) == e_value(k, X);
        ok = ok && row.identity_ok && prev < row.point;
        prev = row.point;
        table.rows.push_back(std::move(row));
    }
    table.limit = spectrum_limit(a, limit_tol);
    ok = ok && prev < table.limit.hi;
    table.all_ok = ok;
    return table;
}

}  // namespace geospec
