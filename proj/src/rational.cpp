#include "geospec/rational.hpp"

#include <cctype>

namespace geospec {

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rat: empty string");

    auto bad = [&] { return std::invalid_argument("parse_rat: cannot parse '" + text + "'"); };

    std::string s = text;
    // Decimal point: scale into an exact fraction.
    if (auto dot = s.find('.'); dot != std::string::npos) {
        if (s.find('/') != std::string::npos) throw bad();
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        if (frac_len == 0 || digits.empty()) throw bad();
        Int num;
        if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0) throw bad();
        Int den = pow_int(Int(10), frac_len);
        return make_rat(num, den);
    }

    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0) throw bad();
    if (r.get_den() == 0) throw std::invalid_argument("parse_rat: zero denominator");
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& x) {
    return x.get_str();
}

}  // namespace geospec
