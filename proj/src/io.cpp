#include "geospec/io.hpp"

#include <regex>
#include <stdexcept>

#include "geospec/pisot.hpp"

namespace geospec {

Surd parse_surd(const std::string& text) {
    if (text.find("sqrt") == std::string::npos) return Surd(parse_rat(text));
    // (P+Q*sqrt(D))/R with the Q*=1 and /R=1 parts optional, Q signed
    static const std::regex form(
        R"(^\((-?[0-9]+)([+-])(?:([0-9]+)\*)?sqrt\(([0-9]+)\)\)(?:/([0-9]+))?$)");
    std::smatch m;
    if (!std::regex_match(text, m, form))
        throw std::invalid_argument("parse_surd: cannot parse '" + text + "'");
    Int p(m[1].str(), 10);
    Int q = m[3].matched ? Int(m[3].str(), 10) : Int(1);
    if (m[2].str() == "-") q = -q;
    Int d(m[4].str(), 10);
    Int r = m[5].matched ? Int(m[5].str(), 10) : Int(1);
    if (r == 0) throw std::invalid_argument("parse_surd: zero denominator");
    return Surd(Rat(p) / Rat(r), Rat(q) / Rat(r), d);
}

RealInput parse_real_input(const std::string& text, mpfr_prec_t decimal_bits) {
    if (text.empty()) throw std::invalid_argument("parse_real_input: empty value");
    if (text.find("sqrt") != std::string::npos) return RealInput::from_surd(parse_surd(text));
    if (text.find_first_of(".eE") != std::string::npos)
        return RealInput::from_decimal(text, decimal_bits);
    return RealInput::from_rat(parse_rat(text));
}

Alpha parse_alpha_spec(const std::string& text) {
    auto bad = [&] { return std::invalid_argument("alpha spec: cannot parse '" + text + "'"); };
    size_t colon = text.find(':');
    if (colon == std::string::npos) throw bad();
    std::string head = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    try {
        if (head == "int") return Alpha::integer(std::stol(rest));
        if (head == "quad") {
            size_t second = rest.find(':');
            if (second == std::string::npos) throw bad();
            long b = std::stol(rest.substr(0, second));
            std::string sign = rest.substr(second + 1);
            if (sign != "plus" && sign != "minus") throw bad();
            return Alpha::quadratic(b, sign == "plus" ? Sign::plus : Sign::minus);
        }
        if (head == "poly") {
            std::vector<Int> coeffs;
            for (long c : parse_digit_list(rest)) coeffs.push_back(Int(c));
            if (coeffs.empty() || coeffs.back() != 1)
                throw std::invalid_argument("alpha spec: poly coefficients must end in 1 (monic)");
            return Alpha::general(GeneralPisot::from_coeffs(coeffs));
        }
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw bad();
    }
    throw bad();
}

std::vector<long> parse_digit_list(const std::string& text) {
    std::vector<long> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string item =
            comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
        size_t used = 0;
        long v = std::stol(item, &used);
        if (used != item.size() || item.empty())
            throw std::invalid_argument("digit list: cannot parse '" + item + "'");
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace geospec
