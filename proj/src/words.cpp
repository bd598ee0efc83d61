#include "geospec/words.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace geospec {

std::string word_to_string(const FiniteWord& w) {
    bool compact = std::all_of(w.begin(), w.end(), [](Letter c) { return c >= 0 && c <= 9; });
    std::ostringstream os;
    if (compact) {
        for (Letter c : w) os << c;
    } else {
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) os << ",";
            os << w[i];
        }
    }
    return os.str();
}

FiniteWord parse_word(const std::string& text) {
    FiniteWord w;
    if (text.find(',') != std::string::npos || text.find('-') != std::string::npos) {
        std::istringstream is(text);
        std::string item;
        while (std::getline(is, item, ',')) {
            if (item.empty()) continue;
            w.push_back(std::stoi(item));
        }
    } else {
        for (char c : text) {
            if (c == ' ') continue;
            if (c < '0' || c > '9') throw std::invalid_argument("parse_word: bad letter");
            w.push_back(c - '0');
        }
    }
    return w;
}

FiniteWord word_reverse(const FiniteWord& w) { return {w.rbegin(), w.rend()}; }

FiniteWord word_negate(const FiniteWord& w) {
    FiniteWord r(w.size());
    std::transform(w.begin(), w.end(), r.begin(), [](Letter c) { return -c; });
    return r;
}

FiniteWord word_concat(const FiniteWord& a, const FiniteWord& b) {
    FiniteWord r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

FiniteWord word_repeat(const FiniteWord& w, size_t times) {
    FiniteWord r;
    r.reserve(w.size() * times);
    for (size_t i = 0; i < times; ++i) r.insert(r.end(), w.begin(), w.end());
    return r;
}

bool is_factor_of(const FiniteWord& pattern, const FiniteWord& text) {
    return std::search(text.begin(), text.end(), pattern.begin(), pattern.end()) != text.end();
}

Letter EPWord::at(size_t i) const {
    if (i < preperiod.size()) return preperiod[i];
    return period[(i - preperiod.size()) % period.size()];
}

FiniteWord EPWord::prefix(size_t len) const {
    FiniteWord r(len);
    for (size_t i = 0; i < len; ++i) r[i] = at(i);
    return r;
}

EPWord EPWord::shifted(size_t n) const {
    if (n <= preperiod.size()) {
        return {FiniteWord(preperiod.begin() + n, preperiod.end()), period};
    }
    size_t k = (n - preperiod.size()) % period.size();
    FiniteWord rot(period.begin() + k, period.end());
    rot.insert(rot.end(), period.begin(), period.begin() + k);
    return {{}, rot};
}

EPWord EPWord::canonical() const {
    EPWord r = *this;
    // Primitive period first.
    for (size_t p = 1; p <= r.period.size() / 2; ++p) {
        if (r.period.size() % p) continue;
        bool rep = true;
        for (size_t i = p; i < r.period.size() && rep; ++i) rep = r.period[i] == r.period[i - p];
        if (rep) {
            r.period.resize(p);
            break;
        }
    }
    // Absorb preperiod letters that already follow the periodic pattern.
    while (!r.preperiod.empty() && r.preperiod.back() == r.period.back()) {
        r.period.insert(r.period.begin(), r.period.back());
        r.period.pop_back();
        r.preperiod.pop_back();
    }
    return r;
}

std::string EPWord::to_string() const {
    return word_to_string(preperiod) + "(" + word_to_string(period) + ")*";
}

bool ep_equal(const EPWord& x, const EPWord& y) {
    EPWord a = x.canonical(), b = y.canonical();
    return a.preperiod == b.preperiod && a.period == b.period;
}

Letter BiEPWord::at(long n) const {
    long rel = n - core_start;
    if (rel < 0) {
        long L = static_cast<long>(left_period.size());
        return left_period[((rel % L) + L) % L];
    }
    if (rel < static_cast<long>(core.size())) return core[rel];
    long R = static_cast<long>(right_period.size());
    return right_period[(rel - static_cast<long>(core.size())) % R];
}

BiEPWord BiEPWord::shifted(long n) const {
    BiEPWord r = *this;
    r.core_start -= n;
    return r;
}

FiniteWord BiEPWord::window(long from, long to) const {
    FiniteWord r;
    for (long i = from; i <= to; ++i) r.push_back(at(i));
    return r;
}

std::string BiEPWord::to_string() const {
    std::ostringstream os;
    os << "(" << word_to_string(left_period) << ")* " << word_to_string(core) << " ("
       << word_to_string(right_period) << ")* @" << core_start;
    return os.str();
}

BiEPWord biep_periodic(const FiniteWord& period, long phase) {
    if (period.empty()) throw std::invalid_argument("biep_periodic: empty period");
    return {period, {}, period, phase};
}

namespace {

// Count of ones in w[i..i+len).
std::vector<long> prefix_ones(const FiniteWord& w) {
    std::vector<long> p(w.size() + 1, 0);
    for (size_t i = 0; i < w.size(); ++i) p[i + 1] = p[i] + (w[i] == 1 ? 1 : 0);
    return p;
}

}  // namespace

bool is_balanced(const FiniteWord& w) { return !balance_witness(w).has_value(); }

std::optional<BalanceWitness> balance_witness(const FiniteWord& w) {
    auto p = prefix_ones(w);
    size_t n = w.size();
    for (size_t len = 1; len <= n; ++len) {
        size_t lo_at = 0, hi_at = 0;
        long lo = n + 1, hi = -1;
        for (size_t i = 0; i + len <= n; ++i) {
            long ones = p[i + len] - p[i];
            if (ones < lo) {
                lo = ones;
                lo_at = i;
            }
            if (ones > hi) {
                hi = ones;
                hi_at = i;
            }
        }
        if (hi - lo >= 2) {
            BalanceWitness bw;
            bw.first = FiniteWord(w.begin() + hi_at, w.begin() + hi_at + len);
            bw.second = FiniteWord(w.begin() + lo_at, w.begin() + lo_at + len);
            return bw;
        }
    }
    return std::nullopt;
}

std::vector<MirrorHit> mirror_scan(const FiniteWord& w) {
    std::vector<MirrorHit> hits;
    long n = static_cast<long>(w.size());
    for (long c = 0; c + 1 < n; ++c) {
        if (w[c] == w[c + 1]) continue;
        long m = 0;
        while (c - 1 - m >= 0 && c + 2 + m < n && w[c - 1 - m] == w[c + 2 + m]) ++m;
        long a = c - 1 - m, b = c + 2 + m;
        if (a < 0 || b >= n) continue;
        bool zero_one = w[c] == 0 && w[c + 1] == 1 && w[a] == 0 && w[b] == 1;
        bool one_zero = w[c] == 1 && w[c + 1] == 0 && w[a] == 1 && w[b] == 0;
        if (!zero_one && !one_zero) continue;
        MirrorHit h;
        h.start = static_cast<size_t>(a);
        h.length = static_cast<size_t>(2 * m + 4);
        h.factor = FiniteWord(w.begin() + a, w.begin() + a + h.length);
        h.one_zero = one_zero;
        // 0v01(~v)1 carries v right after the leading 0; 1(~v)10v0 right
        // after the central 0.
        long v_from = one_zero ? c + 2 : a + 1;
        h.v = FiniteWord(w.begin() + v_from, w.begin() + v_from + m);
        hits.push_back(std::move(h));
    }
    return hits;
}

std::optional<MirrorHit> find_mirror_factor(const FiniteWord& w) {
    auto hits = mirror_scan(w);
    if (hits.empty()) return std::nullopt;
    return hits.front();
}

FiniteWord christoffel_lower(long p, long q) {
    if (q <= 0 || p < 0 || p > q) throw std::invalid_argument("christoffel_lower: need 0 <= p <= q, q > 0");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("christoffel_lower: p/q must be reduced");
    FiniteWord w(q);
    for (long i = 0; i < q; ++i) w[i] = static_cast<Letter>((p * (i + 1)) / q - (p * i) / q);
    return w;
}

FiniteWord christoffel_upper(long p, long q) { return word_reverse(christoffel_lower(p, q)); }

FiniteWord central_word(long p, long q) {
    FiniteWord w = christoffel_lower(p, q);
    if (w.size() < 2) throw std::invalid_argument("central_word: need q >= 2");
    return FiniteWord(w.begin() + 1, w.end() - 1);
}

std::optional<std::pair<long, long>> christoffel_class(const FiniteWord& period) {
    if (period.empty()) return std::nullopt;
    FiniteWord root = period;
    for (size_t p = 1; p <= root.size() / 2; ++p) {
        if (root.size() % p) continue;
        bool rep = true;
        for (size_t i = p; i < root.size() && rep; ++i) rep = root[i] == root[i - p];
        if (rep) {
            root.resize(p);
            break;
        }
    }
    long q = static_cast<long>(root.size());
    long p = 0;
    for (Letter c : root) {
        if (c != 0 && c != 1) return std::nullopt;
        if (c == 1) ++p;
    }
    if (std::gcd(p, q) != 1) return std::nullopt;
    FiniteWord ch = christoffel_lower(p, q);
    FiniteWord doubled = word_concat(root, root);
    if (!is_factor_of(ch, doubled)) return std::nullopt;
    return std::make_pair(p, q);
}

FiniteWord mechanical_word(const Rat& slope, const Rat& intercept, long from, long count,
                           bool upper) {
    FiniteWord w;
    w.reserve(static_cast<size_t>(count));
    auto val = [&](long n) {
        Rat x = slope * Rat(n) + intercept;
        return upper ? rat_ceil(x) : rat_floor(x);
    };
    Int prev = val(from);
    for (long n = from; n < from + count; ++n) {
        Int next = val(n + 1);
        Int diff = next - prev;
        w.push_back(static_cast<Letter>(diff.get_si()));
        prev = next;
    }
    return w;
}

IotaResult iota_periodic(const FiniteWord& period) {
    long L = static_cast<long>(period.size());
    auto at = [&](long i) { return period[((i % L) + L) % L]; };
    IotaResult res;
    res.value = -1;
    bool any_infinite = false;
    std::vector<long> infinite_at;
    bool any_gap = false;
    for (long c = 0; c < L; ++c) {
        if (at(c) == at(c + 1)) continue;
        any_gap = true;
        long s = 0;
        while (s < L && at(c - 1 - s) == at(c + 2 + s)) ++s;
        if (s >= L) {
            // The index pairs repeat with period L, so a full-period match
            // extends forever.
            any_infinite = true;
            infinite_at.push_back(c);
            continue;
        }
        if (s > res.value) {
            res.value = s;
            res.attaining.clear();
        }
        if (s == res.value) res.attaining.push_back(c);
    }
    if (any_infinite) {
        res.finite = false;
        res.attaining = infinite_at;
    } else if (!any_gap) {
        res.degenerate = true;
        res.value = 0;
    }
    return res;
}

long iota_window(const FiniteWord& w) {
    long n = static_cast<long>(w.size());
    long best = -1;
    for (long c = 0; c + 1 < n; ++c) {
        if (w[c] == w[c + 1]) continue;
        long s = 0;
        while (c - 1 - s >= 0 && c + 2 + s < n && w[c - 1 - s] == w[c + 2 + s]) ++s;
        best = std::max(best, s);
    }
    return best;
}

namespace {

struct BlockParse {
    std::vector<int> exponents;  // exponent of each block 1 0^a, in order
    std::vector<long> starts;    // start position of each block within the period
    bool ok = false;
    int base = 0;                // min exponent when ok
};

BlockParse parse_blocks(const FiniteWord& per) {
    BlockParse bp;
    long L = static_cast<long>(per.size());
    std::vector<long> ones;
    for (long i = 0; i < L; ++i) {
        if (per[i] == 1)
            ones.push_back(i);
        else if (per[i] != 0)
            throw std::invalid_argument("phi: alphabet must be {0,1}");
    }
    if (ones.empty()) return bp;
    for (size_t k = 0; k < ones.size(); ++k) {
        long from = ones[k];
        long to = (k + 1 < ones.size()) ? ones[k + 1] : ones[0] + L;
        bp.exponents.push_back(static_cast<int>(to - from - 1));
        bp.starts.push_back(from);
    }
    auto [mn, mx] = std::minmax_element(bp.exponents.begin(), bp.exponents.end());
    // Blocks must look like 1 0^a with a >= 1; adjacent ones force the
    // complemented reading instead.
    if (*mn < 1 || *mx - *mn > 1) return bp;
    bp.ok = true;
    bp.base = *mn;
    return bp;
}

}  // namespace

PhiResult phi_periodic(const FiniteWord& period) {
    if (period.empty()) throw std::invalid_argument("phi: empty period");
    bool has0 = false, has1 = false;
    for (Letter c : period) {
        has0 |= c == 0;
        has1 |= c == 1;
    }
    if (!has0 || !has1)
        throw std::domain_error("phi: needs both letters infinitely often");

    BlockParse bp = parse_blocks(period);
    bool swapped = false;
    if (!bp.ok) {
        FiniteWord flipped(period.size());
        std::transform(period.begin(), period.end(), flipped.begin(),
                       [](Letter c) { return 1 - c; });
        bp = parse_blocks(flipped);
        swapped = true;
    }
    if (!bp.ok) throw std::domain_error("phi: block exponents spread over more than two values");

    PhiResult out;
    out.swapped = swapped;
    out.base_exponent = bp.base;
    for (int e : bp.exponents) out.period.push_back(e - bp.base);
    // Block containing input position 0: the wrap-around block unless a
    // block starts exactly at 0.
    out.origin_block = (bp.starts.front() == 0) ? 0 : static_cast<long>(bp.starts.size()) - 1;
    return out;
}

FiniteWord standard_word(const std::vector<long>& digits) {
    FiniteWord prev = {1};  // s_{-1}
    FiniteWord cur = {0};   // s_0
    for (long a : digits) {
        if (a < 1) throw std::invalid_argument("standard_word: digits must be >= 1");
        FiniteWord next;
        for (long i = 0; i < a; ++i) next.insert(next.end(), cur.begin(), cur.end());
        next.insert(next.end(), prev.begin(), prev.end());
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

size_t factor_count(const FiniteWord& w, size_t len) {
    if (len > w.size()) return 0;
    std::set<FiniteWord> seen;
    for (size_t i = 0; i + len <= w.size(); ++i)
        seen.insert(FiniteWord(w.begin() + i, w.begin() + i + len));
    return seen.size();
}

}  // namespace geospec
