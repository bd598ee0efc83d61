#include "geospec/cf.hpp"

#include <map>
#include <stdexcept>

namespace geospec {

namespace {

struct SurdLess {
    bool operator()(const Surd& x, const Surd& y) const { return compare(x, y) < 0; }
};

void check_open_unit(int lo_sign, int hi_sign) {
    if (lo_sign <= 0 || hi_sign >= 0)
        throw std::invalid_argument("negative_cf: argument must lie in (0,1)");
}

}  // namespace

std::vector<Int> negative_cf(const Rat& x, size_t max_terms) {
    check_open_unit(sgn(x), sgn(x - 1));
    std::vector<Int> digits;
    Rat cur = x;
    while (cur != 0) {
        if (digits.size() >= max_terms) throw std::runtime_error("negative_cf: term budget exceeded");
        Rat inv = 1 / cur;
        Int a = rat_ceil(inv);
        digits.push_back(a);
        cur = Rat(a) - inv;
    }
    return digits;
}

SurdCF negative_cf(const Surd& x, size_t max_states) {
    if (x.is_rational()) return {negative_cf(x.as_rational(), max_states), {}};
    check_open_unit(x.sign(), (x - Surd(Rat(1))).sign());
    std::vector<Int> digits;
    std::map<Surd, size_t, SurdLess> seen;
    Surd cur = x;
    while (true) {
        auto it = seen.find(cur);
        if (it != seen.end()) {
            size_t start = it->second;
            SurdCF out;
            out.preperiod.assign(digits.begin(), digits.begin() + start);
            out.period.assign(digits.begin() + start, digits.end());
            return out;
        }
        if (digits.size() >= max_states) throw std::runtime_error("negative_cf: state budget exceeded");
        seen.emplace(cur, digits.size());
        Surd inv = cur.inverse();
        Int a = inv.ceil();
        digits.push_back(a);
        cur = Surd(Rat(a)) - inv;
    }
}

std::vector<Int> negative_cf_prefix(const Surd& x, size_t count) {
    if (x.is_rational()) {
        auto all = negative_cf(x.as_rational());
        if (all.size() > count) all.resize(count);
        return all;
    }
    SurdCF cf = negative_cf(x);
    std::vector<Int> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        if (i < cf.preperiod.size()) {
            out.push_back(cf.preperiod[i]);
        } else {
            size_t j = (i - cf.preperiod.size()) % cf.period.size();
            out.push_back(cf.period[j]);
        }
    }
    return out;
}

Rat negative_cf_value(const std::vector<Int>& digits) {
    Rat acc(0);
    for (size_t i = digits.size(); i-- > 0;) {
        acc = 1 / (Rat(digits[i]) - acc);
    }
    return acc;
}

std::vector<Rat> negative_cf_convergents(const std::vector<Int>& digits) {
    std::vector<Rat> out;
    Int p_prev = 0, p_cur = 1;  // p_0, p_1
    Int q_prev = 1, q_cur = 0;  // q_0 and a placeholder replaced below
    for (size_t k = 0; k < digits.size(); ++k) {
        if (k == 0) {
            q_cur = digits[0];
        } else {
            Int p_next = digits[k] * p_cur - p_prev;
            Int q_next = digits[k] * q_cur - q_prev;
            p_prev = p_cur;
            p_cur = p_next;
            q_prev = q_cur;
            q_cur = q_next;
        }
        out.push_back(make_rat(p_cur, q_cur));
    }
    return out;
}

}  // namespace geospec
