#include "geospec/interval_construction.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace geospec {

namespace {

int floor_div2(int y) { return (y >= 0) ? y / 2 : (y - 1) / 2; }
int ceil_div2(int y) { return (y >= 0) ? (y + 1) / 2 : y / 2; }

// Digit at position n of the split word.  Positions n and -n share the
// one-sided digit y_n: the positive side takes one half, the negative side
// the other, so that the pair sums back to y_n in the evaluation.  Under
// the minus conjugate the negative side enters with alternating signs, so
// odd positions there need a flip to keep the pair sum intact.  The
// alternating rule swaps which side gets the larger half on even n, which
// keeps same-sign halves from sitting next to each other when c = 2.
int split_letter(const EPWord& y, long n, SplitRule rule, bool minus_unit) {
    if (n == 0) return y.at(0);
    long m = (n > 0) ? n : -n;
    int d = y.at(static_cast<size_t>(m));
    bool odd = (m % 2) != 0;
    int pos = ceil_div2(d);
    int neg = floor_div2(d);
    if (rule == SplitRule::alternating && !odd) std::swap(pos, neg);
    if (n > 0) return pos;
    if (minus_unit && odd) neg = -neg;
    return neg;
}

void require_range(long b, Sign sign) {
    if ((sign == Sign::plus && b < 4) || (sign == Sign::minus && b < 3))
        throw std::invalid_argument("interval construction needs alpha >= 3");
}

}  // namespace

KeySides key_sides(const QuadUnit& u, KeyId id) {
    Surd a = u.alpha();
    Rat c(u.max_digit());
    Rat ch((u.max_digit() + 1) / 2);  // ceil(c/2)
    Surd one{Rat(1)};
    Surd lhs = (id == KeyId::k3 || id == KeyId::k5)
                   ? Surd(ch) * (one + Rat(2) / (a * a - Rat(1)) + Rat(2) / a)
                   : Surd(ch) * (one + Rat(2) / (a - Rat(1)) + Rat(1) / a);
    Surd rhs{Rat(0)};
    switch (id) {
        case KeyId::k1: rhs = Surd(c) - c / a; break;
        case KeyId::k2: rhs = Surd(c); break;
        case KeyId::k3: rhs = Surd(c) - make_rat(10, 9) / a; break;
        case KeyId::k4: rhs = Surd(c) + make_rat(2, 3) / a; break;
        case KeyId::k5: rhs = Surd(c) - Rat(c - 1) / a; break;
    }
    return KeySides{lhs, rhs, lhs <= rhs};
}

KappaCase kappa_and_keys(long b, Sign sign) {
    require_range(b, sign);
    QuadUnit u(b, sign);
    KeyId id;
    SplitRule rule = SplitRule::plain;
    if (sign == Sign::plus) {
        if (b >= 8) id = KeyId::k1;
        else if (b == 6) id = KeyId::k3;
        else if (b == 4) { id = KeyId::k3; rule = SplitRule::alternating; }
        else id = KeyId::k2;  // b = 5, 7
    } else {
        if (b >= 7) id = KeyId::k1;
        else if (b == 5) id = KeyId::k5;
        else if (b == 3) { id = KeyId::k5; rule = SplitRule::alternating; }
        else id = KeyId::k4;  // b = 4, 6
    }
    KeySides sides = key_sides(u, id);
    bool bound_known_crude = (sign == Sign::minus && (b == 3 || b == 5));
    if (!sides.holds && !bound_known_crude)
        throw std::logic_error("designated bound failed for b=" + std::to_string(b));
    KappaCase kase{u, u.max_digit(), sides.rhs / u.root_gap(), id, rule, sides};
    if (!(kase.kappa < Surd(make_rat(1, 2))))
        throw std::logic_error("kappa not below 1/2 for b=" + std::to_string(b));
    return kase;
}

BuiltWord build_biword(const Surd& eta, const KappaCase& kase) {
    const QuadUnit& u = kase.unit;
    if (eta < kase.kappa || Surd(make_rat(1, 2)) < eta)
        throw std::invalid_argument("eta outside [kappa, 1/2]");
    Surd x = eta * u.root_gap() / u.alpha();
    SymBetaExpansion enc = sym_beta_encode(x, u);
    EPWord y = enc.digits.canonical();
    bool minus_unit = (u.kind() == Sign::minus);

    long p0 = static_cast<long>(y.preperiod.size());
    long l0 = static_cast<long>(y.period.size());
    long lp = (l0 % 2 == 0) ? l0 : 2 * l0;  // split depends on index parity
    long n0 = p0 + lp;
    BiEPWord w;
    w.core_start = -n0;
    for (long n = -n0; n <= n0; ++n)
        w.core.push_back(split_letter(y, n, kase.split, minus_unit));
    for (long j = 0; j < lp; ++j) {
        w.left_period.push_back(split_letter(y, -n0 - lp + j, kase.split, minus_unit));
        w.right_period.push_back(split_letter(y, n0 + 1 + j, kase.split, minus_unit));
    }

    Int half = (kase.c + 1) / 2;
    auto check_small = [&](Letter s) {
        if (::abs(Int(s)) > half)
            throw std::logic_error("split digit above ceil(c/2)");
    };
    for (long n = -n0; n <= n0; ++n)
        if (n != 0) check_small(w.at(n));
    for (Letter s : w.left_period) check_small(s);
    for (Letter s : w.right_period) check_small(s);

    BuiltWord out{BiSignedWord{u, w}, y, eta, {}};
    if (!(g_eval(out.word, 0) == eta))
        throw std::logic_error("split word does not evaluate to eta");
    out.sup = shift_sup_abs(out.word);
    if (!(out.sup.value == eta))
        throw std::logic_error("shifted value above eta");
    return out;
}

std::vector<Surd> eta_grid(const KappaCase& kase, int points) {
    if (points < 2) throw std::invalid_argument("grid needs at least 2 points");
    std::vector<Surd> grid;
    Surd width = Surd(make_rat(1, 2)) - kase.kappa;
    for (int j = 0; j < points; ++j)
        grid.push_back(kase.kappa + width * make_rat(j, points - 1));
    return grid;
}

FoldReport fold_to_one_sided(const BuiltWord& built, long ell, long blocks) {
    if (ell < 1 || blocks < 1) throw std::invalid_argument("need ell, blocks >= 1");
    FoldReport rep;
    rep.eta = built.eta;
    for (long n = ell; n < ell + blocks; ++n) {
        FiniteWord block = built.word.word.window(-n, n);
        rep.word.insert(rep.word.end(), block.begin(), block.end());
    }
    BiEPWord one_sided;
    one_sided.left_period = {0};
    one_sided.right_period = {0};
    one_sided.core = rep.word;
    one_sided.core_start = 1;
    BiSignedWord fw{built.word.unit, one_sided};

    rep.shifts_checked = static_cast<long>(rep.word.size());
    rep.max_value = Surd(Rat(0));
    for (long k = 0; k <= rep.shifts_checked; ++k) {
        Surd v = g_eval(fw, k).abs();
        if (rep.max_value < v) {
            rep.max_value = v;
            rep.argmax = k;
        }
    }
    Surd diff = rep.max_value - rep.eta;
    rep.deviation = diff.abs();
    rep.overshoot = (diff > Surd(Rat(0))) ? diff : Surd(Rat(0));
    return rep;
}

}  // namespace geospec
