#include "geospec/beta_symmetric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace geospec {

namespace {

struct SurdKeyLess {
    bool operator()(const Surd& x, const Surd& y) const {
        if (x.radicand() != y.radicand()) return x.radicand() < y.radicand();
        if (x.rational_part() != y.rational_part()) return x.rational_part() < y.rational_part();
        return x.surd_coefficient() < y.surd_coefficient();
    }
};

// Lexicographic three-way comparison of EP words; any difference shows up
// within preperiods plus one common period.
int ep_lex_compare(const EPWord& a, const EPWord& b) {
    const long bound = static_cast<long>(a.preperiod.size()) +
                       static_cast<long>(b.preperiod.size()) +
                       std::lcm(static_cast<long>(a.period.size()),
                                static_cast<long>(b.period.size())) +
                       1;
    for (long i = 0; i < bound; ++i) {
        const Letter x = a.at(static_cast<size_t>(i));
        const Letter y = b.at(static_cast<size_t>(i));
        if (x != y) return x < y ? -1 : 1;
    }
    return 0;
}

}  // namespace

Surd sym_beta_step(const Surd& x, const QuadUnit& unit) {
    return nearest_integer(unit.alpha() * x).eps;
}

SymBetaExpansion sym_beta_encode(const Surd& x, const QuadUnit& unit, size_t max_steps) {
    const Surd alpha = unit.alpha();
    const long c = unit.max_digit();
    const Surd edge = Surd(make_rat(2 * c + 1, 2)) / alpha;
    if (x < -edge || x >= edge)
        throw std::invalid_argument("sym_beta_encode: x outside the extended domain");

    std::map<Surd, size_t, SurdKeyLess> seen;
    FiniteWord digits;
    Surd state = x;
    for (size_t step = 0; step <= max_steps; ++step) {
        const auto [it, fresh] = seen.emplace(state, step);
        if (!fresh) {
            const auto start = static_cast<long>(it->second);
            EPWord word{FiniteWord(digits.begin(), digits.begin() + start),
                        FiniteWord(digits.begin() + start, digits.end())};
            return SymBetaExpansion{unit, x, word.canonical()};
        }
        NearestSurd near = nearest_integer(alpha * state);
        if (near.unit > c || near.unit < -c)
            throw std::logic_error("sym_beta_encode: digit escaped its alphabet");
        digits.push_back(static_cast<Letter>(near.unit.get_si()));
        state = std::move(near.eps);
    }
    throw std::logic_error("sym_beta_encode: no period within the step budget");
}

Surd sym_beta_reconstruct(const EPWord& digits, const QuadUnit& unit) {
    if (digits.period.empty())
        throw std::invalid_argument("sym_beta_reconstruct: empty period");
    const Surd ainv = unit.alpha().inverse();
    Surd weight = ainv;
    Surd acc(0);
    for (Letter d : digits.preperiod) {
        if (d != 0) acc += Surd(static_cast<long>(d)) * weight;
        weight *= ainv;
    }
    Surd tail(0);
    for (Letter d : digits.period) {
        if (d != 0) tail += Surd(static_cast<long>(d)) * weight;
        weight *= ainv;
    }
    acc += tail / (Surd(1) - ainv.pow(static_cast<long>(digits.period.size())));
    return acc;
}

BoundaryExpansions boundary_expansions(const QuadUnit& unit) {
    const Letter c = static_cast<Letter>(unit.max_digit());
    FiniteWord head;
    FiniteWord block;
    if (unit.kind() == Sign::plus) {
        if (unit.b() % 2 == 0) {
            head = {c, 0};
            block = {-c, 1};
        } else {
            head = {c, c, 0};
            block = {-c, -c, 1};
        }
    } else {
        if (unit.b() % 2 == 0) {
            head = {c, 1};
            block = {-c, 0};
        } else {
            head = {c, -(c - 1), 0};
            block = {-c, c - 1, 1};
        }
    }
    return {EPWord{head, block}, EPWord{{}, block}};
}

bool is_admissible(const EPWord& digits, const QuadUnit& unit) {
    if (digits.period.empty()) throw std::invalid_argument("is_admissible: empty period");
    const long c = unit.max_digit();
    auto in_alphabet = [c](const FiniteWord& w) {
        return std::all_of(w.begin(), w.end(), [c](Letter d) { return -c <= d && d <= c; });
    };
    if (!in_alphabet(digits.preperiod) || !in_alphabet(digits.period))
        throw std::invalid_argument("is_admissible: digit outside the alphabet");

    const BoundaryExpansions bounds = boundary_expansions(unit);
    const EPWord canon = digits.canonical();
    const size_t shifts = canon.preperiod.size() + canon.period.size();
    for (size_t k = 0; k < shifts; ++k) {
        const EPWord tail = canon.shifted(k);
        if (ep_lex_compare(bounds.lower, tail) > 0) return false;
        if (ep_lex_compare(tail, bounds.upper) >= 0) return false;
    }
    return true;
}

}  // namespace geospec
